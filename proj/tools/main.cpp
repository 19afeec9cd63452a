#include <CLI11.hpp>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>

#include "lectern/deck.hpp"
#include "lectern/emit.hpp"
#include "lectern/error.hpp"
#include "lectern/mock_backend.hpp"
#include "lectern/report.hpp"
#include "lectern/rest_backend.hpp"
#include "lectern/transcribe.hpp"

namespace fs = std::filesystem;
using namespace lectern;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;     // systemic failure
constexpr int kExitWarnings = 2;  // completed, but some items need attention

struct Options {
    fs::path input;
    fs::path output_dir = ".";
    std::string language = "en-US";
    std::string backend = "rest";
    std::string endpoint;
    fs::path mock_fixtures;
    std::string transcoder;
    int jobs = 2;
    int rate_limit = 20;
    int max_retries = 2;
    std::size_t hint_cap = speech::kDefaultHintCap;
    double fallback_duration_s = 0.0;
    bool have_fallback = false;
    fs::path cache_dir;
    bool no_cues = false;
    std::string key_env = "SPEECH_API_KEY";

    // analyze
    fs::path corrected;
    std::size_t top_k = 5;
    bool body_only = false;
    std::string report_format = "markdown";
    fs::path report_out;
};

std::string read_text_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

// Never leaves a truncated file at the final path: write a sibling temp
// file, then rename over the target.
void write_file_atomic(const fs::path& path, const std::string& content) {
    if (!path.parent_path().empty()) {
        fs::create_directories(path.parent_path());
    }
    const fs::path temp =
        path.parent_path() / (path.filename().string() + ".tmp-" + std::to_string(::getpid()));
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) {
            throw std::runtime_error("cannot write " + temp.string());
        }
    }
    fs::rename(temp, path);
}

fs::path lecture_output_dir(const Options& options) {
    return options.output_dir / options.input.stem();
}

std::string duration_cell(const deck::Slide& slide) {
    if (!slide.duration_ms.has_value()) {
        return "—";
    }
    return emit::format_timestamp(*slide.duration_ms) + " (" +
           deck::duration_source_name(slide.duration_source) + ")";
}

int cmd_inspect(const Options& options) {
    const deck::Deck deck = deck::open_deck(options.input);
    std::cout << "deck: " << deck.title << " (" << deck.slides.size() << " slides)\n";
    std::printf("%5s  %-9s  %-20s  %s\n", "slide", "narration", "duration", "title");
    bool missing_duration = false;
    for (const auto& slide : deck.slides) {
        std::printf("%5d  %-9s  %-20s  %s\n", slide.export_index,
                    slide.narration.has_value() ? "yes" : "no", duration_cell(slide).c_str(),
                    slide.title.c_str());
        missing_duration |= !slide.duration_ms.has_value();
    }
    for (const auto& warning : deck.warnings) {
        std::cerr << "warning: " << warning << "\n";
    }
    if (missing_duration) {
        std::cerr << "warning: some slides have no duration; chapters need "
                     "--fallback-duration\n";
        return kExitWarnings;
    }
    return kExitOk;
}

speech::BackendConfig backend_config(const Options& options) {
    speech::BackendConfig config;
    config.endpoint = options.endpoint;
    config.language = options.language;
    config.max_retries = options.max_retries;
    config.requests_per_minute = options.rate_limit;
    return config;
}

std::unique_ptr<speech::SpeechBackend> make_backend(const Options& options,
                                                    speech::BackendConfig& config) {
    if (options.backend == "mock") {
        if (options.mock_fixtures.empty()) {
            throw std::runtime_error("--backend mock requires --mock-fixtures");
        }
        return std::make_unique<speech::MockBackend>(options.mock_fixtures);
    }
    if (options.backend == "rest") {
        if (options.endpoint.empty()) {
            throw std::runtime_error("--backend rest requires --endpoint");
        }
        const char* key = std::getenv(options.key_env.c_str());
        if (key == nullptr || *key == '\0') {
            throw Error(Errc::AuthFailed,
                        "environment variable " + options.key_env + " is not set");
        }
        config.api_key = key;
        return std::make_unique<speech::RestBackend>();
    }
    throw std::runtime_error("unknown backend '" + options.backend + "' (use rest or mock)");
}

int cmd_pipeline(const Options& options) {
    const deck::Deck deck = deck::open_deck(options.input);
    for (const auto& warning : deck.warnings) {
        std::cerr << "warning: " << warning << "\n";
    }

    speech::BackendConfig config = backend_config(options);
    const auto backend = make_backend(options, config);

    speech::TranscribeOptions transcribe_options;
    transcribe_options.jobs = options.jobs;
    transcribe_options.hint_cap = options.hint_cap;
    if (!options.transcoder.empty()) {
        transcribe_options.transcoder = audio::TranscoderSpec::parse(options.transcoder);
    }
    transcribe_options.workdir = fs::temp_directory_path() /
                                 ("lectern-" + options.input.stem().string() + "-" +
                                  std::to_string(::getpid()));

    const fs::path cache_dir =
        options.cache_dir.empty() ? options.output_dir / ".cache" : options.cache_dir;
    speech::SegmentCache cache(cache_dir / (options.input.stem().string() + ".jsonl"));

    auto result = speech::transcribe_deck(deck, config, *backend, &cache, transcribe_options);
    std::error_code cleanup;
    fs::remove_all(transcribe_options.workdir, cleanup);

    const fs::path out_dir = lecture_output_dir(options);
    const std::string markdown = emit::render_markdown(result.doc);
    write_file_atomic(out_dir / "transcript.md", markdown);
    std::vector<std::string> wrote{"transcript.md"};

    std::optional<std::int64_t> fallback_ms;
    if (options.have_fallback) {
        fallback_ms = static_cast<std::int64_t>(options.fallback_duration_s * 1000.0);
    }
    bool chapters_skipped = false;
    std::optional<std::int64_t> total_ms;
    try {
        const emit::ChapterList chapters = emit::chapter_marks(result.doc, fallback_ms);
        for (const auto& warning : chapters.warnings) {
            std::cerr << "warning: " << warning << "\n";
        }
        total_ms = chapters.total_ms;
        write_file_atomic(out_dir / "chapters.txt", emit::render_chapters(chapters));
        wrote.push_back("chapters.txt");
        if (!options.no_cues) {
            TranscriptDoc cue_doc = result.doc;
            if (fallback_ms.has_value()) {
                for (auto& segment : cue_doc.segments) {
                    if (!segment.duration_ms.has_value()) {
                        segment.duration_ms = fallback_ms;
                    }
                }
            }
            write_file_atomic(out_dir / "cues.vtt", emit::render_cues(cue_doc));
            wrote.push_back("cues.vtt");
        }
    } catch (const Error& e) {
        if (e.code() != Errc::MissingDuration) {
            throw;
        }
        chapters_skipped = true;
        std::cerr << "warning: chapters and cues skipped (" << e.what()
                  << "); pass --fallback-duration to emit them\n";
    }

    write_file_atomic(out_dir / "captions.txt", emit::markdown_to_caption_text(markdown));
    wrote.push_back("captions.txt");

    std::cout << "deck: " << deck.title << " (" << deck.slides.size() << " slides)\n";
    std::cout << "transcribed: " << result.stats.recognized << " recognized, "
              << result.stats.empty << " empty, " << result.stats.failed << " failed\n";
    std::cout << "backend calls: " << result.stats.backend_calls
              << " (cache hits: " << result.stats.cache_hits << ")\n";
    if (total_ms.has_value()) {
        std::cout << "total duration: " << emit::format_timestamp(*total_ms) << "\n";
    }
    for (const auto& name : wrote) {
        std::cout << "wrote: " << (out_dir / name).string() << "\n";
    }

    if (result.stats.failed > 0 || chapters_skipped) {
        return kExitWarnings;
    }
    return kExitOk;
}

std::vector<analyze::LecturePair> collect_pairs(const fs::path& auto_path,
                                                const fs::path& corrected_path) {
    std::vector<analyze::LecturePair> pairs;
    if (fs::is_directory(auto_path) && fs::is_directory(corrected_path)) {
        std::map<std::string, fs::path>left;
        std::map<std::string, fs::path> right;
        for (const auto& entry : fs::directory_iterator(auto_path)) {
            if (entry.is_regular_file()) {
                left[entry.path().filename().string()] = entry.path();
            }
        }
        for (const auto& entry : fs::directory_iterator(corrected_path)) {
            if (entry.is_regular_file()) {
                right[entry.path().filename().string()] = entry.path();
            }
        }
        std::vector<std::string> orphans;
        for (const auto& [name, path] : left) {
            if (right.count(name) == 0) {
                orphans.push_back(path.string());
            }
        }
        for (const auto& [name, path] : right) {
            if (left.count(name) == 0) {
                orphans.push_back(path.string());
            }
        }
        if (!orphans.empty()) {
            std::string message = "unpaired transcript files:";
            for (const auto& orphan : orphans) {
                message += "\n  " + orphan;
            }
            throw std::runtime_error(message);
        }
        for (const auto& [name, path] : left) {
            pairs.push_back({fs::path(name).stem().string(), read_text_file(path),
                             read_text_file(right.at(name))});
        }
        return pairs;
    }
    if (fs::is_regular_file(auto_path) && fs::is_regular_file(corrected_path)) {
        pairs.push_back({auto_path.stem().string(), read_text_file(auto_path),
                         read_text_file(corrected_path)});
        return pairs;
    }
    throw std::runtime_error("analyze needs two files or two directories");
}

int cmd_analyze(const Options& options) {
    const auto pairs = collect_pairs(options.input, options.corrected);

    analyze::CorpusOptions corpus;
    corpus.include_headings = !options.body_only;
    corpus.top_k = options.top_k;
    corpus.format = options.report_format == "json" ? analyze::ReportFormat::Json
                                                    : analyze::ReportFormat::Markdown;
    const std::string report = analyze::corpus_report(pairs, corpus);
    if (options.report_out.empty()) {
        std::cout << report;
    } else {
        write_file_atomic(options.report_out, report);
        std::cout << "wrote: " << options.report_out.string() << "\n";
    }
    return kExitOk;
}

int cmd_captions(const Options& options) {
    const std::string text = emit::markdown_to_caption_text(read_text_file(options.input));
    const fs::path out = lecture_output_dir(options) / "captions.txt";
    write_file_atomic(out, text);
    std::cout << "wrote: " << out.string() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lectern: turn narrated slide decks into transcripts, chapter "
                 "timestamps, and captions"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "key=value config file; flags win over file values");

    Options options;
    app.add_option("--output-dir", options.output_dir,
                   "Root for per-lecture output directories")
        ->capture_default_str();
    app.add_option("--language", options.language, "BCP-47 recognition language")
        ->capture_default_str();
    app.add_option("--backend", options.backend, "Speech backend: rest or mock")
        ->capture_default_str();
    app.add_option("--endpoint", options.endpoint, "Recognition endpoint URL (rest backend)");
    app.add_option("--mock-fixtures", options.mock_fixtures,
                   "JSON table of clip-hash to text (mock backend)");
    app.add_option("--transcoder", options.transcoder,
                   "Command template with {input} and {output} for non-WAV narration");
    app.add_option("--jobs", options.jobs, "Concurrent recognition calls")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--rate-limit", options.rate_limit, "Max backend requests per minute")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--max-retries", options.max_retries,
                   "Retries after a transient recognition failure")
        ->capture_default_str();
    app.add_option("--hint-cap", options.hint_cap, "Max phrase hints per request")
        ->capture_default_str();
    auto* fallback = app.add_option("--fallback-duration", options.fallback_duration_s,
                                    "Seconds to assume for slides without a duration");
    app.add_option("--cache-dir", options.cache_dir,
                   "Recognition cache directory (default: <output-dir>/.cache)");
    app.add_flag("--no-cues", options.no_cues, "Skip the WebVTT cue file");
    app.add_option("--key-env", options.key_env, "Environment variable holding the API key")
        ->capture_default_str();

    auto* inspect = app.add_subcommand("inspect", "Summarize a deck without transcribing");
    inspect->add_option("input", options.input, "Presentation file")->required();

    auto* pipeline =
        app.add_subcommand("pipeline", "Transcribe a deck and write all lecture materials");
    pipeline->add_option("input", options.input, "Presentation file")->required();

    auto* analyze_cmd =
        app.add_subcommand("analyze", "Word-diff automatic against corrected transcripts");
    analyze_cmd->add_option("automatic", options.input, "Automatic transcript file or directory")
        ->required();
    analyze_cmd->add_option("corrected", options.corrected,
                            "Corrected transcript file or directory")
        ->required();
    analyze_cmd->add_option("--top-k", options.top_k, "Most-common-changes list length")
        ->capture_default_str();
    analyze_cmd->add_flag("--body-only", options.body_only,
                          "Strip headings and duration lines before diffing");
    analyze_cmd->add_option("--format", options.report_format, "markdown or json")
        ->check(CLI::IsMember({"markdown", "json"}))
        ->capture_default_str();
    analyze_cmd->add_option("-o,--out", options.report_out, "Write the report here instead of stdout");

    auto* captions =
        app.add_subcommand("captions", "Recover plain caption text from a corrected transcript");
    captions->add_option("input", options.input, "Corrected transcript (Markdown)")->required();

    CLI11_PARSE(app, argc, argv);
    options.have_fallback = fallback->count() > 0;

    try {
        if (inspect->parsed()) {
            return cmd_inspect(options);
        }
        if (pipeline->parsed()) {
            return cmd_pipeline(options);
        }
        if (analyze_cmd->parsed()) {
            return cmd_analyze(options);
        }
        if (captions->parsed()) {
            return cmd_captions(options);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitOk;
}
