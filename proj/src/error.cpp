#include "lectern/error.hpp"

namespace lectern {

const char* errc_name(Errc code) {
    switch (code) {
    case Errc::NotAnArchive: return "NotAnArchive";
    case Errc::NotAPresentation: return "NotAPresentation";
    case Errc::MalformedPart: return "MalformedPart";
    case Errc::NotRiff: return "NotRiff";
    case Errc::UnsupportedEncoding: return "UnsupportedEncoding";
    case Errc::TruncatedChunk: return "TruncatedChunk";
    case Errc::TranscoderRequired: return "TranscoderRequired";
    case Errc::TranscoderFailed: return "TranscoderFailed";
    case Errc::AuthFailed: return "AuthFailed";
    case Errc::RecognitionFailed: return "RecognitionFailed";
    case Errc::MissingDuration: return "MissingDuration";
    case Errc::NotTranscriptLayout: return "NotTranscriptLayout";
    }
    return "UnknownError";
}

}  // namespace lectern
