#include "lectern/rest_backend.hpp"

#include <httplib.h>

#include <nlohmann/json.hpp>

#include "lectern/base64.hpp"
#include "lectern/wav.hpp"

namespace lectern::speech {

namespace {

struct SplitEndpoint {
    std::string base;  // scheme://host[:port]
    std::string path;  // leading slash
};

SplitEndpoint split_endpoint(const std::string& endpoint) {
    const auto scheme_end = endpoint.find("://");
    const std::size_t host_start = scheme_end == std::string::npos ? 0 : scheme_end + 3;
    const auto path_start = endpoint.find('/', host_start);
    if (path_start == std::string::npos) {
        return {endpoint, "/"};
    }
    return {endpoint.substr(0, path_start), endpoint.substr(path_start)};
}

}  // namespace

Recognition RestBackend::recognize_once(const audio::PcmClip& clip, const PhraseHints& hints,
                                        const BackendConfig& config) {
    if (config.endpoint.empty()) {
        return Recognition::permanent("no recognition endpoint configured");
    }

    const SplitEndpoint endpoint = split_endpoint(config.endpoint);
    httplib::Client client(endpoint.base);
    client.set_connection_timeout(10, 0);
    client.set_read_timeout(60, 0);
    client.set_write_timeout(60, 0);

    nlohmann::ordered_json body;
    body["language"] = config.language;
    body["hints"] = hints.words;
    body["audio"] = base64_encode(audio::wav_bytes(clip));

    httplib::Headers headers{{"Authorization", "Bearer " + config.api_key}};
    const httplib::Result response =
        client.Post(endpoint.path, headers, body.dump(), "application/json");

    if (!response) {
        return Recognition::transient("transport error: " + httplib::to_string(response.error()));
    }
    if (response->status == 401 || response->status == 403) {
        return Recognition::auth("endpoint rejected the credential (HTTP " +
                                 std::to_string(response->status) + ")");
    }
    if (response->status == 408 || response->status == 429 || response->status >= 500) {
        return Recognition::transient("HTTP " + std::to_string(response->status) + ": " +
                                      response->body);
    }
    if (response->status != 200) {
        return Recognition::permanent("HTTP " + std::to_string(response->status) + ": " +
                                      response->body);
    }

    try {
        const auto parsed = nlohmann::json::parse(response->body);
        return Recognition::ok(parsed.at("text").get<std::string>());
    } catch (const nlohmann::json::exception& e) {
        return Recognition::permanent(std::string("unparsable response body: ") + e.what());
    }
}

}  // namespace lectern::speech
