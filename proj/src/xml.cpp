#include "lectern/xml.hpp"

#include <expat.h>

#include <memory>
#include <utility>

#include "lectern/error.hpp"

namespace lectern::xml {

namespace {

// Expat reports namespace-expanded names as "uri<SEP>local"; unprefixed
// element names and attributes come through without a separator.
constexpr char kNsSeparator = '\x01';

struct ParseState {
    std::vector<Node> stack;
    Node root;
    bool have_root = false;
    bool saw_doctype = false;
    XML_Parser parser = nullptr;
};

std::pair<std::string, std::string> split_name(const char* expanded) {
    std::string_view name(expanded);
    const auto sep = name.find(kNsSeparator);
    if (sep == std::string_view::npos) {
        return {std::string(), std::string(name)};
    }
    return {std::string(name.substr(0, sep)), std::string(name.substr(sep + 1))};
}

void XMLCALL on_start(void* user, const char* name, const char** attrs) {
    auto* state = static_cast<ParseState*>(user);
    Node node;
    std::tie(node.ns, node.local) = split_name(name);
    for (const char** a = attrs; a != nullptr && *a != nullptr; a += 2) {
        Attribute attribute;
        std::tie(attribute.ns, attribute.local) = split_name(a[0]);
        attribute.value = a[1];
        node.attributes.push_back(std::move(attribute));
    }
    state->stack.push_back(std::move(node));
}

void XMLCALL on_end(void* user, const char* /*name*/) {
    auto* state = static_cast<ParseState*>(user);
    Node finished = std::move(state->stack.back());
    state->stack.pop_back();
    if (state->stack.empty()) {
        state->root = std::move(finished);
        state->have_root = true;
    } else {
        state->stack.back().children.push_back(std::move(finished));
    }
}

void XMLCALL on_text(void* user, const char* data, int len) {
    auto* state = static_cast<ParseState*>(user);
    if (!state->stack.empty()) {
        state->stack.back().text.append(data, static_cast<std::size_t>(len));
    }
}

void XMLCALL on_doctype(void* user, const char*, const char*, const char*, int) {
    auto* state = static_cast<ParseState*>(user);
    state->saw_doctype = true;
    XML_StopParser(state->parser, XML_FALSE);
}

}  // namespace

const std::string* Node::attr(std::string_view local_name) const {
    for (const auto& attribute : attributes) {
        if (attribute.local == local_name) {
            return &attribute.value;
        }
    }
    return nullptr;
}

const std::string* Node::attr(std::string_view ns_uri, std::string_view local_name) const {
    for (const auto& attribute : attributes) {
        if (attribute.ns == ns_uri && attribute.local == local_name) {
            return &attribute.value;
        }
    }
    return nullptr;
}

const Node* Node::child(std::string_view ns_uri, std::string_view local_name) const {
    for (const auto& node : children) {
        if (node.is(ns_uri, local_name)) {
            return &node;
        }
    }
    return nullptr;
}

Node parse(std::string_view text, const std::string& part_name) {
    std::unique_ptr<std::remove_pointer_t<XML_Parser>, decltype(&XML_ParserFree)> parser(
        XML_ParserCreateNS(nullptr, kNsSeparator), &XML_ParserFree);
    if (!parser) {
        throw Error(Errc::MalformedPart, part_name + " (parser allocation failed)");
    }

    ParseState state;
    state.parser = parser.get();
    XML_SetUserData(parser.get(), &state);
    XML_SetElementHandler(parser.get(), on_start, on_end);
    XML_SetCharacterDataHandler(parser.get(), on_text);
    XML_SetStartDoctypeDeclHandler(parser.get(), on_doctype);

    const auto status = XML_Parse(parser.get(), text.data(), static_cast<int>(text.size()),
                                  XML_TRUE);
    if (state.saw_doctype) {
        throw Error(Errc::MalformedPart, part_name + " (document type declarations are not allowed)");
    }
    if (status != XML_STATUS_OK || !state.have_root) {
        const auto line = XML_GetCurrentLineNumber(parser.get());
        throw Error(Errc::MalformedPart,
                    part_name + " (" + XML_ErrorString(XML_GetErrorCode(parser.get())) +
                        " at line " + std::to_string(line) + ")");
    }
    return std::move(state.root);
}

Node parse(const std::vector<std::uint8_t>& bytes, const std::string& part_name) {
    return parse(std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()),
                 part_name);
}

}  // namespace lectern::xml
