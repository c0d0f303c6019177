#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "../src/core/documents.hpp"
#include "../src/core/fixtures.hpp"

using namespace lvmb;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(static_cast<bool>(in));
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string temp_path(const std::string& stem) {
    return "doc_test_" + stem + ".json";
}

// Minimal valid document text, editable per test via string surgery.
std::string hopf_text() {
    return document_to_json(fixture_document(fixture("hopf-m1")));
}

void check_error(const std::string& text, const std::string& expected) {
    CHECK_THROWS_WITH_AS(document_from_json(text), expected.c_str(), DocumentError);
}

}  // namespace

TEST_CASE("documents round-trip through strings and files") {
    for (const auto& f : fixtures()) {
        CAPTURE(f.name);
        SystemDocument doc = fixture_document(f);
        CHECK(document_from_json(document_to_json(doc)) == doc);

        std::string path = temp_path(f.name);
        save_document(doc, path);
        CHECK(load_document(path) == doc);
        std::remove(path.c_str());
    }

    SystemDocument doc = fixture_document(fixture("hopf-m1"));
    doc.seed = 20250817u;
    SystemDocument back = document_from_json(document_to_json(doc));
    CHECK(back == doc);
    CHECK(back.seed == 20250817u);
}

TEST_CASE("document serialization is deterministic and minimal") {
    SystemDocument doc = fixture_document(fixture("m2n7"));
    std::string a = document_to_json(doc);
    std::string b = document_to_json(doc);
    CHECK(a == b);
    CHECK(a.back() == '\n');

    SystemDocument bare;
    bare.eps = doc.eps;
    bare.lam = doc.lam;
    std::string text = document_to_json(bare);
    auto j = nlohmann::ordered_json::parse(text);
    CHECK(!j.contains("basis"));
    CHECK(!j.contains("metadata"));
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"m", "n", "epsilon", "lambda"});
}

TEST_CASE("fixture files reproduce the embedded fixtures") {
    for (const auto& f : fixtures()) {
        CAPTURE(f.name);
        std::string path = std::string(LVMB_FIXTURE_DIR) + "/" + f.name + ".json";
        SystemDocument expected = fixture_document(f);
        CHECK(load_document(path) == expected);
        CHECK(slurp(path) == document_to_json(expected));
    }
}

TEST_CASE("malformed document text is rejected with field context") {
    check_error("{", "not valid JSON: [json.exception.parse_error.101] parse error "
                     "at line 1, column 2: syntax error while parsing object key - "
                     "unexpected end of input; expected string literal");
    check_error("[]", "document root must be an object");
    check_error(R"({"m": 1})", "missing field: n");
    check_error(R"({"m": 1, "n": 4, "lambda": []})", "missing field: epsilon");
    check_error(R"({"m": 1.5, "n": 4, "epsilon": [], "lambda": []})",
                "m: expected an integer, got 1.5");
    check_error(R"({"m": 0, "n": 4, "epsilon": [], "lambda": []})",
                "m: must be at least 1");
    check_error(R"({"m": 1, "n": 4, "epsilon": 3, "lambda": []})",
                "epsilon: expected an array");
    check_error(R"({"m": 1, "n": 4, "epsilon": [3], "lambda": []})",
                "epsilon[0]: expected an array");
    check_error(R"({"m": 1, "n": 4, "epsilon": [[1, 2, 3.5]], "lambda": []})",
                "epsilon[0][2]: expected an integer, got 3.5");
}

TEST_CASE("malformed lambda entries are rejected with field context") {
    std::string base = hopf_text();

    check_error(R"({"m": 1, "n": 4, "epsilon": [[1,2,3]], "lambda": [[["0","0"]]]})",
                "lambda: expected 4 vectors, got 1");
    check_error(R"({"m": 1, "n": 4, "epsilon": [[1,2,3]],
                    "lambda": [[], [["1","0"]], [["0","1"]], [["1","1"]]]})",
                "lambda[0]: expected 1 complex entries");
    check_error(R"({"m": 1, "n": 4, "epsilon": [[1,2,3]],
                    "lambda": [[["0"]], [["1","0"]], [["0","1"]], [["1","1"]]]})",
                "lambda[0][0]: expected a [re, im] pair");
    check_error(R"({"m": 1, "n": 4, "epsilon": [[1,2,3]],
                    "lambda": [[[0.5,"0"]], [["1","0"]], [["0","1"]], [["1","1"]]]})",
                "lambda[0][0].re: rationals must be strings like \"3/4\", got 0.5");
    check_error(R"({"m": 1, "n": 4, "epsilon": [[1,2,3]],
                    "lambda": [[["0.5","0"]], [["1","0"]], [["0","1"]], [["1","1"]]]})",
                "lambda[0][0].re: bad rational literal: 0.5");
    check_error(R"({"m": 1, "n": 4, "epsilon": [[1,2,3]],
                    "lambda": [[["0","1/0"]], [["1","0"]], [["0","1"]], [["1","1"]]]})",
                "lambda[0][0].im: zero denominator: 1/0");

    CHECK(document_from_json(base).lam.n == 4);
}

TEST_CASE("system shape violations surface as document errors") {
    check_error(R"({"m": 1, "n": 4, "epsilon": [[1,2]],
                    "lambda": [[["0","0"]], [["1","0"]], [["0","1"]], [["1","1"]]]})",
                "part of cardinality != 2m+1");
    check_error(R"({"m": 1, "n": 4, "epsilon": [[1,2,5]],
                    "lambda": [[["0","0"]], [["1","0"]], [["0","1"]], [["1","1"]]]})",
                "part index out of range");
    check_error(R"({"m": 1, "n": 4, "epsilon": [[1,2,2]],
                    "lambda": [[["0","0"]], [["1","0"]], [["0","1"]], [["1","1"]]]})",
                "part has a duplicate index");
    check_error(R"({"m": 2, "n": 2, "epsilon": [[1,2]],
                    "lambda": [[["0","0"],["0","0"]], [["1","0"],["1","0"]]]})",
                "fundamental set needs n >= 2m+1");
}

TEST_CASE("malformed basis and metadata are rejected") {
    std::string good = R"("lambda": [[["0","0"]], [["1","0"]], [["0","1"]], [["1","1"]]])";
    auto with = [&](const std::string& extra) {
        return R"({"m": 1, "n": 4, "epsilon": [[1,2,3]], )" + good + ", " + extra + "}";
    };

    check_error(with(R"("basis": [[1],[2]])"), "basis: expected 1 vectors");
    check_error(with(R"("basis": [[1, 2]])"), "basis[0]: expected 1 integers");
    check_error(with(R"("basis": [["x"]])"),
                "basis[0][0]: expected an integer, got \"x\"");
    check_error(with(R"("metadata": 7)"), "metadata: expected an object");
    check_error(with(R"("metadata": {"name": 7})"), "metadata.name: expected a string");
    check_error(with(R"("metadata": {"seed": "7"})"), "metadata.seed: expected an integer");

    SystemDocument doc = document_from_json(with(R"("basis": null, "metadata": null)"));
    CHECK(!doc.basis);
    CHECK(!doc.name);
}

TEST_CASE("missing files raise document errors") {
    CHECK_THROWS_WITH_AS(load_document("no_such_dir/x.json"),
                         "cannot open no_such_dir/x.json", DocumentError);
    CHECK_THROWS_WITH_AS(save_document(fixture_document(fixture("hopf-m1")),
                                       "no_such_dir/x.json"),
                         "cannot write no_such_dir/x.json", DocumentError);
    CHECK_THROWS_WITH_AS(fixture("nope"), "unknown fixture: nope",
                         std::invalid_argument);
}
