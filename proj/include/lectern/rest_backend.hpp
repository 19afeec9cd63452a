#pragma once

#include <string>

#include "lectern/speech.hpp"

namespace lectern::speech {

// Generic short-audio recognition client. One POST per clip:
//
//   POST <endpoint>
//   Authorization: Bearer <api key>
//   Content-Type: application/json
//   {"language": "...", "hints": ["...", ...], "audio": "<base64 WAV>"}
//
// A 200 response carries {"text": "..."}. 401/403 map to an auth failure,
// 408/429/5xx and transport errors are transient, anything else is
// permanent for that clip.
class RestBackend final : public SpeechBackend {
public:
    Recognition recognize_once(const audio::PcmClip& clip, const PhraseHints& hints,
                               const BackendConfig& config) override;
};

}  // namespace lectern::speech
