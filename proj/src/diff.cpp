#include "lectern/diff.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <span>
#include <unordered_map>

namespace lectern::analyze {

namespace {

// Space separators plus the ASCII controls \t \n \v \f \r and NEL.
bool is_unicode_space(char32_t cp) {
    switch (cp) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D:
    case 0x20: case 0x85: case 0xA0: case 0x1680:
    case 0x2028: case 0x2029: case 0x202F: case 0x205F: case 0x3000:
        return true;
    default:
        return cp >= 0x2000 && cp <= 0x200A;
    }
}

// Decodes one UTF-8 codepoint; malformed bytes pass through as themselves
// so arbitrary input never throws.
char32_t next_codepoint(std::string_view text, std::size_t pos, std::size_t& length) {
    const auto byte = static_cast<unsigned char>(text[pos]);
    length = 1;
    if (byte < 0x80) {
        return byte;
    }
    std::size_t extra = 0;
    char32_t cp = 0;
    if ((byte & 0xE0) == 0xC0) {
        extra = 1;
        cp = byte & 0x1F;
    } else if ((byte & 0xF0) == 0xE0) {
        extra = 2;
        cp = byte & 0x0F;
    } else if ((byte & 0xF8) == 0xF0) {
        extra = 3;
        cp = byte & 0x07;
    } else {
        return byte;
    }
    for (std::size_t i = 1; i <= extra; ++i) {
        if (pos + i >= text.size() ||
            (static_cast<unsigned char>(text[pos + i]) & 0xC0) != 0x80) {
            return byte;
        }
        cp = (cp << 6) | (static_cast<unsigned char>(text[pos + i]) & 0x3F);
    }
    length = extra + 1;
    return cp;
}

using Ids = std::span<const std::int32_t>;

// Final row of the LCS length table for a against b.
std::vector<std::int32_t> lcs_forward_row(Ids a, Ids b) {
    std::vector<std::int32_t> prev(b.size() + 1, 0);
    std::vector<std::int32_t> cur(b.size() + 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            cur[j + 1] = a[i] == b[j] ? prev[j] + 1 : std::max(prev[j + 1], cur[j]);
        }
        std::swap(prev, cur);
    }
    return prev;
}

// row[j] = LCS length of a against b[j..).
std::vector<std::int32_t> lcs_backward_row(Ids a, Ids b) {
    std::vector<std::int32_t> prev(b.size() + 1, 0);
    std::vector<std::int32_t> cur(b.size() + 1, 0);
    for (std::size_t ii = a.size(); ii > 0; --ii) {
        const std::size_t i = ii - 1;
        for (std::size_t jj = b.size(); jj > 0; --jj) {
            const std::size_t j = jj - 1;
            cur[j] = a[i] == b[j] ? prev[j + 1] + 1 : std::max(prev[j], cur[j + 1]);
        }
        std::swap(prev, cur);
    }
    return prev;
}

// Hirschberg divide and conquer; emits matched index pairs in order.
void lcs_pairs(Ids a, std::size_t a_off, Ids b, std::size_t b_off,
               std::vector<std::pair<std::size_t, std::size_t>>& out) {
    if (a.empty() || b.empty()) {
        return;
    }
    if (a.size() == 1) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == a[0]) {
                out.emplace_back(a_off, b_off + j);
                return;
            }
        }
        return;
    }
    const std::size_t mid = a.size() / 2;
    const auto left = lcs_forward_row(a.subspan(0, mid), b);
    const auto right = lcs_backward_row(a.subspan(mid), b);

    std::size_t split = 0;
    std::int32_t best = -1;
    for (std::size_t j = 0; j <= b.size(); ++j) {
        const std::int32_t value = left[j] + right[j];
        if (value > best) {
            best = value;
            split = j;
        }
    }
    lcs_pairs(a.subspan(0, mid), a_off, b.subspan(0, split), b_off, out);
    lcs_pairs(a.subspan(mid), a_off + mid, b.subspan(split), b_off + split, out);
}

std::vector<std::int32_t> intern(const std::vector<WordToken>& tokens,
                                 std::unordered_map<std::string, std::int32_t>& ids) {
    std::vector<std::int32_t> out;
    out.reserve(tokens.size());
    for (const auto& token : tokens) {
        const auto [it, inserted] =
            ids.emplace(token.text, static_cast<std::int32_t>(ids.size()));
        out.push_back(it->second);
    }
    return out;
}

bool punctuation_only(const Hunk& hunk) {
    if (hunk.deleted.size() != hunk.inserted.size()) {
        return false;
    }
    std::vector<std::string> del_norms;
    std::vector<std::string> ins_norms;
    del_norms.reserve(hunk.deleted.size());
    ins_norms.reserve(hunk.inserted.size());
    for (const auto& token : hunk.deleted) {
        del_norms.push_back(normalize_token(token));
    }
    for (const auto& token : hunk.inserted) {
        ins_norms.push_back(normalize_token(token));
    }
    std::sort(del_norms.begin(), del_norms.end());
    std::sort(ins_norms.begin(), ins_norms.end());
    return del_norms == ins_norms;
}

}  // namespace

std::string normalize_token(std::string_view token) {
    std::string out;
    out.reserve(token.size());
    for (char c : token) {
        const auto byte = static_cast<unsigned char>(c);
        if (std::isalnum(byte) != 0 || byte >= 0x80) {
            out.push_back(c);
        }
    }
    return out;
}

std::vector<WordToken> tokenize(std::string_view text) {
    std::vector<WordToken> tokens;
    std::size_t pos = 0;
    std::string current;
    auto flush = [&] {
        if (!current.empty()) {
            WordToken token;
            token.normalized = normalize_token(current);
            token.text = std::move(current);
            tokens.push_back(std::move(token));
            current.clear();
        }
    };
    while (pos < text.size()) {
        std::size_t length = 1;
        const char32_t cp = next_codepoint(text, pos, length);
        if (is_unicode_space(cp)) {
            flush();
        } else {
            current.append(text.substr(pos, length));
        }
        pos += length;
    }
    flush();
    return tokens;
}

DiffReport word_diff(const std::vector<WordToken>& automatic,
                     const std::vector<WordToken>& corrected) {
    DiffReport report;
    report.total_words = automatic.size();

    std::unordered_map<std::string, std::int32_t> ids;
    const auto a = intern(automatic, ids);
    const auto b = intern(corrected, ids);

    // Common prefix/suffix shrink the quadratic core.
    std::size_t prefix = 0;
    while (prefix < a.size() && prefix < b.size() && a[prefix] == b[prefix]) {
        ++prefix;
    }
    std::size_t suffix = 0;
    while (suffix < a.size() - prefix && suffix < b.size() - prefix &&
           a[a.size() - 1 - suffix] == b[b.size() - 1 - suffix]) {
        ++suffix;
    }

    std::vector<std::pair<std::size_t, std::size_t>> matches;
    for (std::size_t i = 0; i < prefix; ++i) {
        matches.emplace_back(i, i);
    }
    lcs_pairs(std::span(a).subspan(prefix, a.size() - prefix - suffix), prefix,
              std::span(b).subspan(prefix, b.size() - prefix - suffix), prefix, matches);
    for (std::size_t i = suffix; i > 0; --i) {
        matches.emplace_back(a.size() - i, b.size() - i);
    }

    report.unchanged_words = matches.size();
    report.unchanged_ratio =
        report.total_words == 0
            ? 1.0
            : static_cast<double>(report.unchanged_words) / static_cast<double>(report.total_words);

    std::size_t ia = 0;
    std::size_t ib = 0;
    auto emit_hunk = [&](std::size_t until_a, std::size_t until_b) {
        if (ia == until_a && ib == until_b) {
            return;
        }
        Hunk hunk;
        for (; ia < until_a; ++ia) {
            hunk.deleted.push_back(automatic[ia].text);
        }
        for (; ib < until_b; ++ib) {
            hunk.inserted.push_back(corrected[ib].text);
        }
        if (punctuation_only(hunk)) {
            ++report.punctuation_only_changes;
        }
        report.changes.push_back(std::move(hunk));
    };
    for (const auto& [ma, mb] : matches) {
        emit_hunk(ma, mb);
        ia = ma + 1;
        ib = mb + 1;
    }
    emit_hunk(automatic.size(), corrected.size());

    return report;
}

std::vector<std::pair<std::string, std::size_t>> top_changes(const std::vector<Hunk>& hunks,
                                                             std::size_t k) {
    std::map<std::string, std::size_t> counts;
    for (const auto& hunk : hunks) {
        for (const auto& token : hunk.inserted) {
            ++counts[token];
        }
    }
    std::vector<std::pair<std::string, std::size_t>> ranked(counts.begin(), counts.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& lhs, const auto& rhs) {
        if (lhs.second != rhs.second) {
            return lhs.second > rhs.second;
        }
        return lhs.first < rhs.first;
    });
    if (ranked.size() > k) {
        ranked.resize(k);
    }
    return ranked;
}

}  // namespace lectern::analyze
