#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lectern::xml {

struct Attribute {
    std::string ns;  // namespace URI; empty for unprefixed attributes
    std::string local;
    std::string value;
};

// One element of a parsed document. Names are (namespace URI, local name)
// pairs; prefixes are resolved away during parsing and never visible here.
struct Node {
    std::string ns;
    std::string local;
    std::vector<Attribute> attributes;
    std::vector<Node> children;
    std::string text;  // character data directly inside this element

    bool is(std::string_view ns_uri, std::string_view local_name) const {
        return ns == ns_uri && local == local_name;
    }

    // Attribute value by local name; pass an empty ns to match unprefixed
    // attributes only, or omit it to match any namespace.
    const std::string* attr(std::string_view local_name) const;
    const std::string* attr(std::string_view ns_uri, std::string_view local_name) const;

    const Node* child(std::string_view ns_uri, std::string_view local_name) const;
};

// Pre-order traversal. Visitor returns false to skip the node's subtree.
template <typename Visitor>
void walk(const Node& node, Visitor&& visit) {
    if (!visit(node)) {
        return;
    }
    for (const Node& child : node.children) {
        walk(child, visit);
    }
}

// Parses a standalone XML document. `part_name` labels errors; parse
// failures surface as Error(MalformedPart) naming the part. Documents with
// a DTD are rejected.
Node parse(std::string_view text, const std::string& part_name);
Node parse(const std::vector<std::uint8_t>& bytes, const std::string& part_name);

}  // namespace lectern::xml
