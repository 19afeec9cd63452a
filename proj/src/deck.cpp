#include "lectern/deck.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "lectern/error.hpp"
#include "lectern/wav.hpp"
#include "lectern/zip_reader.hpp"

namespace lectern::deck {

namespace {

constexpr const char* kNsPresentation = "http://schemas.openxmlformats.org/presentationml/2006/main";
constexpr const char* kNsDrawing = "http://schemas.openxmlformats.org/drawingml/2006/main";
constexpr const char* kNsDocRel = "http://schemas.openxmlformats.org/officeDocument/2006/relationships";
constexpr const char* kNsPkgRel = "http://schemas.openxmlformats.org/package/2006/relationships";
constexpr const char* kNsContentTypes = "http://schemas.openxmlformats.org/package/2006/content-types";
constexpr const char* kNsCoreProps = "http://schemas.openxmlformats.org/package/2006/metadata/core-properties";
constexpr const char* kNsDublinCore = "http://purl.org/dc/elements/1.1/";

constexpr const char* kContentTypesPart = "[Content_Types].xml";
constexpr const char* kPresentationType =
    "application/vnd.openxmlformats-officedocument.presentationml.presentation.main+xml";
constexpr const char* kCorePropsType = "application/vnd.openxmlformats-package.core-properties+xml";

std::string to_lower(std::string value) {
    std::transform(value.begin(), value.end(), value.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return value;
}

std::string collapse_whitespace(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    bool pending_space = false;
    for (unsigned char c : text) {
        if (std::isspace(c)) {
            pending_space = !out.empty();
        } else {
            if (pending_space) {
                out.push_back(' ');
                pending_space = false;
            }
            out.push_back(static_cast<char>(c));
        }
    }
    return out;
}

// Resolves a relationship target against the directory of its source part.
// Targets may be relative ("../media/media1.wav") or package-absolute
// ("/ppt/media/media1.wav"); the result never has a leading slash.
std::string resolve_part_path(const std::string& base_dir, const std::string& target) {
    std::vector<std::string> segments;
    std::string combined;
    if (!target.empty() && target.front() == '/') {
        combined = target.substr(1);
    } else if (base_dir.empty()) {
        combined = target;
    } else {
        combined = base_dir + "/" + target;
    }

    std::size_t start = 0;
    while (start <= combined.size()) {
        const std::size_t end = std::min(combined.find('/', start), combined.size());
        const std::string segment = combined.substr(start, end - start);
        if (segment == "..") {
            if (!segments.empty()) {
                segments.pop_back();
            }
        } else if (!segment.empty() && segment != ".") {
            segments.push_back(segment);
        }
        start = end + 1;
    }

    std::string out;
    for (const auto& segment : segments) {
        if (!out.empty()) {
            out.push_back('/');
        }
        out += segment;
    }
    return out;
}

std::string rels_part_for(const std::string& part) {
    const auto slash = part.rfind('/');
    if (slash == std::string::npos) {
        return "_rels/" + part + ".rels";
    }
    return part.substr(0, slash) + "/_rels/" + part.substr(slash + 1) + ".rels";
}

std::string part_dir(const std::string& part) {
    const auto slash = part.rfind('/');
    return slash == std::string::npos ? std::string() : part.substr(0, slash);
}

struct ContentTypes {
    std::map<std::string, std::string> defaults;   // lowercase extension -> type
    std::map<std::string, std::string> overrides;  // part name -> type

    std::string lookup(const std::string& part) const {
        if (const auto it = overrides.find(part); it != overrides.end()) {
            return it->second;
        }
        const auto dot = part.rfind('.');
        if (dot != std::string::npos) {
            if (const auto it = defaults.find(to_lower(part.substr(dot + 1)));
                it != defaults.end()) {
                return it->second;
            }
        }
        return {};
    }
};

ContentTypes parse_content_types(const xml::Node& root) {
    ContentTypes types;
    for (const auto& child : root.children) {
        if (child.is(kNsContentTypes, "Default")) {
            const auto* ext = child.attr("Extension");
            const auto* type = child.attr("ContentType");
            if (ext != nullptr && type != nullptr) {
                types.defaults[to_lower(*ext)] = *type;
            }
        } else if (child.is(kNsContentTypes, "Override")) {
            const auto* part = child.attr("PartName");
            const auto* type = child.attr("ContentType");
            if (part != nullptr && type != nullptr && !part->empty()) {
                std::string name = *part;
                if (name.front() == '/') {
                    name.erase(0, 1);
                }
                types.overrides[name] = *type;
            }
        }
    }
    return types;
}

// rid -> target, resolved against the source part's directory.
std::map<std::string, std::string> parse_relationships(const xml::Node& root,
                                                       const std::string& base_dir) {
    std::map<std::string, std::string> rels;
    for (const auto& child : root.children) {
        if (!child.is(kNsPkgRel, "Relationship")) {
            continue;
        }
        const auto* id = child.attr("Id");
        const auto* target = child.attr("Target");
        if (id == nullptr || target == nullptr) {
            continue;
        }
        const auto* mode = child.attr("TargetMode");
        if (mode != nullptr && *mode == "External") {
            continue;
        }
        rels[*id] = resolve_part_path(base_dir, *target);
    }
    return rels;
}

// Text of one paragraph: runs concatenate raw (a run boundary is not a word
// boundary); explicit breaks and tabs become spaces.
void append_paragraph_text(const xml::Node& node, std::string& out) {
    if (node.is(kNsDrawing, "t")) {
        out += node.text;
        return;
    }
    if (node.is(kNsDrawing, "br") || node.is(kNsDrawing, "tab")) {
        out.push_back(' ');
    }
    for (const auto& child : node.children) {
        append_paragraph_text(child, out);
    }
}

std::string text_body_text(const xml::Node& tx_body) {
    std::string out;
    bool first = true;
    for (const auto& child : tx_body.children) {
        if (!child.is(kNsDrawing, "p")) {
            continue;
        }
        if (!first) {
            out.push_back(' ');
        }
        append_paragraph_text(child, out);
        first = false;
    }
    return out;
}

bool is_title_placeholder(const xml::Node& shape) {
    const auto* nv = shape.child(kNsPresentation, "nvSpPr");
    if (nv == nullptr) {
        return false;
    }
    const auto* nv_pr = nv->child(kNsPresentation, "nvPr");
    if (nv_pr == nullptr) {
        return false;
    }
    const auto* placeholder = nv_pr->child(kNsPresentation, "ph");
    if (placeholder == nullptr) {
        return false;
    }
    const auto* type = placeholder->attr("type");
    return type != nullptr && (*type == "title" || *type == "ctrTitle");
}

// Audio relationship ids referenced by the slide, in document order,
// deduplicated. The first is the narration.
std::vector<std::string> audio_relationship_ids(const xml::Node& slide_root) {
    std::vector<std::string> ids;
    xml::walk(slide_root, [&](const xml::Node& node) {
        if (node.ns == kNsDrawing && (node.local == "audioFile" || node.local == "wavAudioFile")) {
            const std::string* rid = node.attr(kNsDocRel, "link");
            if (rid == nullptr) {
                rid = node.attr(kNsDocRel, "embed");
            }
            if (rid != nullptr && std::find(ids.begin(), ids.end(), *rid) == ids.end()) {
                ids.push_back(*rid);
            }
        }
        return true;
    });
    return ids;
}

std::optional<std::int64_t> advance_time_ms(const xml::Node& slide_root,
                                            const std::string& part_name) {
    std::optional<std::int64_t> result;
    xml::walk(slide_root, [&](const xml::Node& node) {
        if (result.has_value()) {
            return false;
        }
        if (node.is(kNsPresentation, "transition")) {
            if (const auto* adv = node.attr("advTm"); adv != nullptr) {
                try {
                    const long long value = std::stoll(*adv);
                    if (value < 0 || std::to_string(value) != *adv) {
                        throw std::invalid_argument(*adv);
                    }
                    result = value;
                } catch (const std::exception&) {
                    throw Error(Errc::MalformedPart,
                                part_name + " (advance time '" + *adv +
                                    "' is not a millisecond count)");
                }
                return false;
            }
        }
        return true;
    });
    return result;
}

std::string deck_title(const zip::Archive& archive, const ContentTypes& types,
                       const std::filesystem::path& path) {
    std::string core_part;
    for (const auto& [part, type] : types.overrides) {
        if (type == kCorePropsType) {
            core_part = part;
            break;
        }
    }
    if (core_part.empty() && archive.contains("docProps/core.xml")) {
        core_part = "docProps/core.xml";
    }
    if (!core_part.empty() && archive.contains(core_part)) {
        const auto root = xml::parse(archive.read(core_part), core_part);
        if (root.is(kNsCoreProps, "coreProperties")) {
            if (const auto* title = root.child(kNsDublinCore, "title"); title != nullptr) {
                const std::string trimmed = collapse_whitespace(title->text);
                if (!trimmed.empty()) {
                    return trimmed;
                }
            }
        }
    }
    return path.stem().string();
}

}  // namespace

const char* duration_source_name(DurationSource source) {
    switch (source) {
    case DurationSource::AdvanceTime: return "advance-time";
    case DurationSource::AudioLength: return "audio-length";
    case DurationSource::None: return "none";
    }
    return "none";
}

DurationProbe wav_duration_probe() {
    return [](const AudioRef& audio) -> std::optional<std::int64_t> {
        try {
            return audio::parse_wav(audio.raw_bytes).duration_ms;
        } catch (const Error&) {
            return std::nullopt;
        }
    };
}

SlideText extract_slide_text(const xml::Node& slide_root) {
    SlideText result;
    std::vector<std::string> body_parts;
    bool title_taken = false;

    std::function<void(const xml::Node&)> visit = [&](const xml::Node& node) {
        if (node.is(kNsPresentation, "sp")) {
            std::string text;
            if (const auto* tx = node.child(kNsPresentation, "txBody"); tx != nullptr) {
                text = text_body_text(*tx);
            }
            if (!title_taken && is_title_placeholder(node)) {
                result.title = text;
                title_taken = true;
            } else if (!text.empty()) {
                body_parts.push_back(text);
            }
            return;
        }
        // Tables and other graphic content carry drawingml text bodies.
        if (node.is(kNsDrawing, "txBody")) {
            body_parts.push_back(text_body_text(node));
            return;
        }
        for (const auto& child : node.children) {
            visit(child);
        }
    };
    visit(slide_root);

    result.title = collapse_whitespace(result.title);
    std::string body;
    for (const auto& part : body_parts) {
        if (!body.empty()) {
            body.push_back(' ');
        }
        body += part;
    }
    result.body_text = collapse_whitespace(body);
    return result;
}

DurationResult resolve_duration(const xml::Node& slide_root,
                                const std::optional<AudioRef>& narration,
                                const DurationProbe& probe) {
    DurationResult result;
    if (const auto advance = advance_time_ms(slide_root, "slide"); advance.has_value()) {
        result.duration_ms = advance;
        result.source = DurationSource::AdvanceTime;
        return result;
    }
    if (narration.has_value() && probe) {
        if (const auto decoded = probe(*narration); decoded.has_value()) {
            result.duration_ms = decoded;
            result.source = DurationSource::AudioLength;
            return result;
        }
        result.warning = "narration " + narration->media_path +
                         " could not be decoded and the slide has no advance time";
    }
    return result;
}

Deck open_deck(const std::filesystem::path& path, const DurationProbe& probe) {
    const zip::Archive archive = zip::Archive::from_file(path);

    if (!archive.contains(kContentTypesPart)) {
        throw Error(Errc::NotAPresentation, "archive has no content-types manifest");
    }
    const ContentTypes types =
        parse_content_types(xml::parse(archive.read(kContentTypesPart), kContentTypesPart));

    std::string presentation_part;
    for (const auto& [part, type] : types.overrides) {
        if (type == kPresentationType) {
            presentation_part = part;
            break;
        }
    }
    if (presentation_part.empty() && archive.contains("ppt/presentation.xml")) {
        presentation_part = "ppt/presentation.xml";
    }
    if (presentation_part.empty() || !archive.contains(presentation_part)) {
        throw Error(Errc::NotAPresentation, "archive has no presentation manifest part");
    }

    const auto presentation = xml::parse(archive.read(presentation_part), presentation_part);

    const std::string presentation_rels = rels_part_for(presentation_part);
    if (!archive.contains(presentation_rels)) {
        throw Error(Errc::MalformedPart, presentation_rels + " (required part is missing)");
    }
    const auto rels = parse_relationships(xml::parse(archive.read(presentation_rels),
                                                     presentation_rels),
                                          part_dir(presentation_part));

    const auto* slide_list = presentation.child(kNsPresentation, "sldIdLst");
    if (slide_list == nullptr) {
        throw Error(Errc::MalformedPart, presentation_part + " (no slide id list)");
    }

    Deck deck;
    deck.source_path = path;
    deck.title = deck_title(archive, types, path);

    int source_number = 0;
    for (const auto& slide_id : slide_list->children) {
        if (!slide_id.is(kNsPresentation, "sldId")) {
            continue;
        }
        ++source_number;
        const auto* rid = slide_id.attr(kNsDocRel, "id");
        if (rid == nullptr) {
            throw Error(Errc::MalformedPart,
                        presentation_part + " (slide id entry without relationship id)");
        }
        const auto target = rels.find(*rid);
        if (target == rels.end()) {
            throw Error(Errc::MalformedPart,
                        presentation_rels + " (relationship " + *rid + " does not resolve)");
        }
        const std::string slide_part = target->second;
        if (!archive.contains(slide_part)) {
            throw Error(Errc::MalformedPart, slide_part + " (required part is missing)");
        }
        const auto slide_root = xml::parse(archive.read(slide_part), slide_part);

        if (const auto* show = slide_root.attr("show"); show != nullptr && *show == "0") {
            continue;
        }

        Slide slide;
        slide.source_number = source_number;
        slide.export_index = static_cast<int>(deck.slides.size()) + 1;

        const SlideText text = extract_slide_text(slide_root);
        slide.title = text.title;
        slide.body_text = text.body_text;

        const auto audio_ids = audio_relationship_ids(slide_root);
        if (!audio_ids.empty()) {
            const std::string slide_rels_part = rels_part_for(slide_part);
            if (!archive.contains(slide_rels_part)) {
                throw Error(Errc::MalformedPart,
                            slide_rels_part + " (required part is missing)");
            }
            const auto slide_rels = parse_relationships(
                xml::parse(archive.read(slide_rels_part), slide_rels_part),
                part_dir(slide_part));

            const auto media = slide_rels.find(audio_ids.front());
            if (media == slide_rels.end()) {
                throw Error(Errc::MalformedPart,
                            slide_rels_part + " (relationship " + audio_ids.front() +
                                " does not resolve)");
            }
            if (!archive.contains(media->second)) {
                throw Error(Errc::MalformedPart, media->second + " (required part is missing)");
            }
            AudioRef audio;
            audio.media_path = media->second;
            audio.content_type = types.lookup(media->second);
            audio.raw_bytes = archive.read(media->second);
            slide.narration = std::move(audio);

            if (audio_ids.size() > 1) {
                deck.warnings.push_back("slide " + std::to_string(source_number) +
                                        " has multiple audio references; using " +
                                        audio_ids.front());
            }
        }

        try {
            auto duration = resolve_duration(slide_root, slide.narration, probe);
            slide.duration_ms = duration.duration_ms;
            slide.duration_source = duration.source;
            if (duration.warning.has_value()) {
                deck.warnings.push_back("slide " + std::to_string(source_number) + ": " +
                                        *duration.warning);
            }
        } catch (const Error& e) {
            if (e.code() == Errc::MalformedPart) {
                throw Error(Errc::MalformedPart, slide_part + " (" + e.what() + ")");
            }
            throw;
        }

        deck.slides.push_back(std::move(slide));
    }

    return deck;
}

}  // namespace lectern::deck
