#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coringlab/document.hpp"

using namespace coringlab;
using namespace coringlab::doc;

namespace {
Field Q = Field::rationals();
}

TEST_CASE("minimal valid document parses") {
    std::string text = R"({
  "version": 1,
  "field": {"kind": "rational"},
  "spaces": {"k": {"dim": 1, "labels": ["1"]}},
  "maps": {
    "mul": {"src": ["k", "k"], "dst": ["k"], "matrix": [["1"]]},
    "unit": {"src": [], "dst": ["k"], "matrix": [["1"]]}
  },
  "objects": {"A": {"kind": "algebra", "space": "k", "mul": "mul", "unit": "unit"}}
})";
    ParseResult r = parse_document(text);
    REQUIRE(r.diagnostics.empty());
    REQUIRE(r.document.has_value());
    Workbench w(*r.document);
    CHECK(w.check_object("A").ok());
}

TEST_CASE("wrong matrix shape gives a positioned diagnostic naming the map") {
    std::string text = R"({
  "version": 1,
  "field": {"kind": "rational"},
  "spaces": {"k": {"dim": 2, "labels": ["a", "b"]}},
  "maps": {
    "f": {"src": ["k"], "dst": ["k"], "matrix": [["1", "0"]]}
  },
  "objects": {}
})";
    ParseResult r = parse_document(text);
    REQUIRE_FALSE(r.diagnostics.empty());
    CHECK(r.diagnostics[0].message.find("'f'") != std::string::npos);
    CHECK(r.diagnostics[0].message.find("2x2") != std::string::npos);
    CHECK(r.diagnostics[0].line > 0);
}

TEST_CASE("parse failures are positioned diagnostics") {
    SUBCASE("unknown kind") {
        std::string text = R"({"version": 1, "field": {"kind": "rational"}, "objects": {"X": {"kind": "widget"}}})";
        ParseResult r = parse_document(text);
        REQUIRE_FALSE(r.diagnostics.empty());
        CHECK(r.diagnostics[0].message.find("unknown object kind") != std::string::npos);
    }
    SUBCASE("dangling reference") {
        std::string text = R"({"version": 1, "field": {"kind": "rational"},
 "spaces": {"k": {"dim": 1, "labels": ["1"]}},
 "maps": {"u": {"src": [], "dst": ["k"], "matrix": [["1"]]}},
 "objects": {"A": {"kind": "algebra", "space": "k", "mul": "missing", "unit": "u"}}})";
        ParseResult r = parse_document(text);
        REQUIRE_FALSE(r.diagnostics.empty());
        CHECK(r.diagnostics[0].message.find("unknown map 'missing'") != std::string::npos);
    }
    SUBCASE("malformed scalar") {
        std::string text = R"({"version": 1, "field": {"kind": "rational"},
 "spaces": {"k": {"dim": 1, "labels": ["1"]}},
 "maps": {"u": {"src": [], "dst": ["k"], "matrix": [["1.5"]]}},
 "objects": {}})";
        ParseResult r = parse_document(text);
        REQUIRE_FALSE(r.diagnostics.empty());
        CHECK(r.diagnostics[0].message.find("malformed scalar") != std::string::npos);
        CHECK(r.diagnostics[0].line == 3);
    }
    SUBCASE("unknown keys are rejected") {
        std::string text = R"({"version": 1, "field": {"kind": "rational"}, "extra": 3})";
        ParseResult r = parse_document(text);
        REQUIRE_FALSE(r.diagnostics.empty());
        CHECK(r.diagnostics[0].message.find("unknown key") != std::string::npos);
    }
    SUBCASE("missing version") {
        ParseResult r = parse_document(R"({"field": {"kind": "rational"}})");
        REQUIRE_FALSE(r.diagnostics.empty());
    }
    SUBCASE("json syntax error") {
        ParseResult r = parse_document("{\"version\": 1,\n  \"field\": oops}");
        REQUIRE_FALSE(r.diagnostics.empty());
        CHECK(r.diagnostics[0].line == 2);
    }
}

TEST_CASE("emit . parse is the identity on every example document") {
    for (const auto& name : example_names()) {
        SpecDocument d = example_document(name, Q);
        std::string text = emit_document(d);
        ParseResult r = parse_document(text);
        std::string diag_msg = name + (r.diagnostics.empty() ? "" : ": " + r.diagnostics[0].message);
        REQUIRE_MESSAGE(r.diagnostics.empty(), diag_msg);
        REQUIRE(r.document.has_value());
        std::string rt_msg = "round trip failed for " + name;
        CHECK_MESSAGE(same_document(d, *r.document), rt_msg);
        // and the re-emitted text is bit-identical
        CHECK(emit_document(*r.document) == text);
    }
}

TEST_CASE("every object of every example document passes its checker") {
    for (const auto& name : example_names()) {
        SpecDocument d = example_document(name, Q);
        Workbench w(d);
        for (const auto& obj : w.object_names()) {
            Report rep = w.check_object(obj);
            std::string msg = name + "/" + obj + ":\n" + rep.text();
            CHECK_MESSAGE(rep.ok(), msg);
        }
    }
}

TEST_CASE("re-parsed H4 document builds the same Hopf algebra") {
    SpecDocument d = example_document("h4", Q);
    ParseResult r = parse_document(emit_document(d));
    REQUIRE(r.document.has_value());
    Workbench w(*r.document);
    HopfAlgebra h1 = w.hopf("H4");
    HopfAlgebra h2 = catalog::hopf_sweedler_h4(Q);
    CHECK(mat_equal(h1.b.alg.mul.m, h2.b.alg.mul.m));
    CHECK(mat_equal(h1.b.coalg.comul.m, h2.b.coalg.comul.m));
    CHECK(mat_equal(h1.antipode.m, h2.antipode.m));
}

TEST_CASE("prime-field example emission works") {
    Field F7 = Field::prime(7);
    SpecDocument d = example_document("kc2", F7);
    ParseResult r = parse_document(emit_document(d));
    REQUIRE(r.document.has_value());
    Workbench w(*r.document);
    CHECK(w.check_object("KC2").ok());
}

TEST_CASE("dga documents round-trip and check") {
    SpecDocument d = example_document("dual_numbers", Q);
    Workbench w(d);
    TruncatedDGA env = universal_envelope(w.algebra("A"), 3);
    emit_dga(d, "omega", "A", env);
    std::string text = emit_document(d);
    ParseResult r = parse_document(text);
    std::string diag_msg = r.diagnostics.empty() ? std::string() : r.diagnostics[0].message;
    REQUIRE_MESSAGE(r.diagnostics.empty(), diag_msg);
    Workbench w2(*r.document);
    Report rep = w2.check_object("omega");
    std::string rep_msg = rep.text();
    CHECK_MESSAGE(rep.ok(), rep_msg);
}
