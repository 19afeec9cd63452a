#include "lectern/transcoder.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <sys/wait.h>

#include "lectern/error.hpp"

namespace lectern::audio {

namespace {

std::size_t count_occurrences(const std::string& haystack, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = haystack.find(needle); pos != std::string::npos;
         pos = haystack.find(needle, pos + needle.size())) {
        ++count;
    }
    return count;
}

std::string shell_quote(const std::string& value) {
    std::string out = "'";
    for (char c : value) {
        if (c == '\'') {
            out += "'\\''";
        } else {
            out.push_back(c);
        }
    }
    out.push_back('\'');
    return out;
}

std::string expand_template(const std::string& tmpl, const std::string& input,
                            const std::string& output) {
    std::string out = tmpl;
    out.replace(out.find("{input}"), 7, shell_quote(input));
    out.replace(out.find("{output}"), 8, shell_quote(output));
    return out;
}

struct CommandResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr, merged
};

CommandResult run_command(const std::string& command) {
    CommandResult result;
    // Subshell so the merge catches stderr from every stage of the command.
    FILE* pipe = ::popen(("( " + command + " ) 2>&1").c_str(), "r");
    if (pipe == nullptr) {
        throw Error(Errc::TranscoderFailed, "could not spawn: " + command);
    }
    char buffer[4096];
    std::size_t n;
    while ((n = std::fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
        result.output.append(buffer, n);
    }
    const int status = ::pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string media_extension(const std::string& media_path) {
    const auto dot = media_path.rfind('.');
    const auto slash = media_path.rfind('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
        return "bin";
    }
    return media_path.substr(dot + 1);
}

void write_file(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw Error(Errc::TranscoderFailed, "could not write temp file " + path.string());
    }
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(Errc::TranscoderFailed, "transcoder produced no output file at " +
                                                path.string());
    }
    return std::vector<std::uint8_t>((std::istreambuf_iterator<char>(in)),
                                     std::istreambuf_iterator<char>());
}

}  // namespace

TranscoderSpec TranscoderSpec::parse(const std::string& command_template) {
    if (count_occurrences(command_template, "{input}") != 1 ||
        count_occurrences(command_template, "{output}") != 1) {
        throw std::invalid_argument(
            "transcoder command must contain {input} and {output} exactly once");
    }
    return TranscoderSpec{command_template};
}

PcmClip ensure_recognizer_format(const deck::AudioRef& audio,
                                 const std::optional<TranscoderSpec>& transcoder,
                                 const std::filesystem::path& workdir, int tag) {
    // Native WAV at the target profile needs no conversion.
    bool is_wav = false;
    try {
        PcmClip clip = parse_wav(audio.raw_bytes);
        is_wav = true;
        if (is_recognizer_profile(clip)) {
            return clip;
        }
    } catch (const Error&) {
    }

    if (!transcoder.has_value()) {
        const std::string kind = is_wav ? "WAV at a non-recognizer profile"
                                        : "compressed audio (" +
                                              (audio.content_type.empty() ? "unknown type"
                                                                          : audio.content_type) +
                                              ")";
        throw Error(Errc::TranscoderRequired,
                    audio.media_path + " is " + kind + " and no transcoder is configured");
    }

    std::filesystem::create_directories(workdir);
    const std::string stem = "narration-" + std::to_string(tag);
    const auto input_path = workdir / (stem + "." + media_extension(audio.media_path));
    const auto output_path = workdir / (stem + ".out.wav");
    write_file(input_path, audio.raw_bytes);
    std::filesystem::remove(output_path);

    const std::string command =
        expand_template(transcoder->command_template, input_path.string(), output_path.string());
    const CommandResult result = run_command(command);
    if (result.exit_code != 0) {
        throw Error(Errc::TranscoderFailed,
                    "exit " + std::to_string(result.exit_code) + " from `" + command +
                        "`: " + result.output);
    }

    PcmClip clip;
    try {
        clip = parse_wav(read_file(output_path));
    } catch (const Error& e) {
        throw Error(Errc::TranscoderFailed,
                    "output of `" + command + "` is not readable WAV (" + e.what() + ")");
    }
    std::filesystem::remove(input_path);
    std::filesystem::remove(output_path);

    if (!is_recognizer_profile(clip)) {
        throw Error(Errc::TranscoderFailed,
                    "output of `" + command + "` is not at the recognizer profile (" +
                        std::to_string(clip.sample_rate) + " Hz, " +
                        std::to_string(clip.channels) + " ch, " +
                        std::to_string(clip.bits_per_sample) + " bit)");
    }
    return clip;
}

}  // namespace lectern::audio
