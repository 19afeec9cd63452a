#include <doctest.h>

#include "lectern/error.hpp"
#include "lectern/xml.hpp"

using namespace lectern;

namespace {
constexpr const char* kNsA = "urn:example:a";
constexpr const char* kNsB = "urn:example:b";
}  // namespace

TEST_CASE("elements and attributes resolve to namespace URI plus local name") {
    const auto doc = xml::parse(
        R"(<x:root xmlns:x="urn:example:a" xmlns:y="urn:example:b" plain="1" y:marked="2">)"
        R"(<y:child>text</y:child></x:root>)",
        "test-part");

    CHECK(doc.is(kNsA, "root"));
    REQUIRE(doc.attr("plain") != nullptr);
    CHECK(*doc.attr("plain") == "1");
    REQUIRE(doc.attr(kNsB, "marked") != nullptr);
    CHECK(*doc.attr(kNsB, "marked") == "2");
    CHECK(doc.attr(kNsA, "plain") == nullptr);  // unprefixed attrs carry no namespace

    REQUIRE(doc.child(kNsB, "child") != nullptr);
    CHECK(doc.child(kNsB, "child")->text == "text");
}

TEST_CASE("prefix spelling is irrelevant") {
    const auto first = xml::parse(
        R"(<p:s xmlns:p="urn:example:a"><p:t v="7"/></p:s>)", "one");
    const auto second = xml::parse(
        R"(<weird:s xmlns:weird="urn:example:a"><weird:t v="7"/></weird:s>)", "two");

    CHECK(first.is(kNsA, "s"));
    CHECK(second.is(kNsA, "s"));
    REQUIRE(first.child(kNsA, "t") != nullptr);
    REQUIRE(second.child(kNsA, "t") != nullptr);
    CHECK(*first.child(kNsA, "t")->attr("v") == *second.child(kNsA, "t")->attr("v"));
}

TEST_CASE("default namespace applies to elements") {
    const auto doc = xml::parse(R"(<Relationships xmlns="urn:example:b"/>)", "rels");
    CHECK(doc.is(kNsB, "Relationships"));
}

TEST_CASE("parse failures name the part") {
    try {
        xml::parse("<open>", "ppt/slides/slide3.xml");
        FAIL("expected MalformedPart");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::MalformedPart);
        CHECK(std::string(e.what()).find("ppt/slides/slide3.xml") != std::string::npos);
    }
}

TEST_CASE("doctype declarations are rejected") {
    CHECK_THROWS_AS(xml::parse("<!DOCTYPE r [<!ENTITY a \"b\">]><r>&a;</r>", "part"), Error);
}

TEST_CASE("character data accumulates across child boundaries") {
    const auto doc = xml::parse("<r>one<c/>two</r>", "p");
    CHECK(doc.text == "onetwo");
}
