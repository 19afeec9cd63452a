#pragma once

#include <stdexcept>
#include <string>

namespace lectern {

enum class Errc {
    NotAnArchive,
    NotAPresentation,
    MalformedPart,
    NotRiff,
    UnsupportedEncoding,
    TruncatedChunk,
    TranscoderRequired,
    TranscoderFailed,
    AuthFailed,
    RecognitionFailed,
    MissingDuration,
    NotTranscriptLayout,
};

const char* errc_name(Errc code);

// Carries a stable code so callers can branch (and map to exit codes)
// without matching message text.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace lectern
