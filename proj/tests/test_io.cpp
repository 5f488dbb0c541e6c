#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "lgenus/io.hpp"
#include "test_support.hpp"

using namespace lgenus;

TEST_CASE("report JSON has a fixed field order", "[io]") {
    Report rep;
    rep.command = "demo";
    rep.inputs["n"] = 2;
    Json row;
    row["j"] = 0;
    row["coefficient"] = "1";
    rep.results.push_back(row);

    std::string text = rep.to_json_string();
    std::string again = rep.to_json_string();
    CHECK(text == again);
    CHECK(text.find("\"schema_version\": \"1\"") < text.find("\"command\""));
    CHECK(text.find("\"command\"") < text.find("\"inputs\""));
    CHECK(text.find("\"inputs\"") < text.find("\"results\""));
    CHECK(text.find("\"results\"") < text.find("\"status\""));
    CHECK(text.find("\"status\"") < text.find("\"failures\""));
}

TEST_CASE("CSV rendering", "[io]") {
    Report rep;
    rep.command = "demo";
    for (int k = 0; k < 2; ++k) {
        Json row;
        row["k"] = k;
        row["coefficient"] = (k == 0) ? "1" : "-1/3";
        rep.results.push_back(row);
    }
    CHECK(rep.to_csv() == "k,coefficient\n0,1\n1,-1/3\n");

    Report quoting;
    Json row;
    row["list"] = "4,5";
    row["quote"] = "say \"hi\"";
    quoting.results.push_back(row);
    CHECK(quoting.to_csv() == "list,quote\n\"4,5\",\"say \"\"hi\"\"\"\n");
}

TEST_CASE("spectral pair files round-trip", "[io]") {
    SpectralPairSet sp = bp_spectral_pairs({{3, 3, 3}});
    std::string text = to_json(sp).dump(2);
    std::istringstream in(text);
    SpectralPairSet back = read_spectral_pairs(in);
    CHECK(back.n() == sp.n());
    REQUIRE(back.entries().size() == sp.entries().size());
    for (std::size_t i = 0; i < sp.entries().size(); ++i) {
        CHECK(back.entries()[i].alpha == sp.entries()[i].alpha);
        CHECK(back.entries()[i].weight == sp.entries()[i].weight);
        CHECK(back.entries()[i].mult == sp.entries()[i].mult);
    }
}

TEST_CASE("spectral pair files round-trip on random germs", "[io]") {
    testsupport::Rng rng(211);
    for (int i = 0; i < 20; ++i) {
        unsigned n = static_cast<unsigned>(rng.range(1, 4));
        std::vector<long> exps;
        for (unsigned j = 0; j <= n; ++j) exps.push_back(rng.range(2, 6));
        SpectralPairSet sp = bp_spectral_pairs({exps});
        std::istringstream in(to_json(sp).dump());
        SpectralPairSet back = read_spectral_pairs(in);
        CHECK(to_json(back) == to_json(sp));
    }
}

TEST_CASE("spectral pair output is ordered by alpha then weight", "[io]") {
    Json j = to_json(bp_spectral_pairs({{3, 3, 3}}));
    CHECK(j["n"] == 2);
    REQUIRE(j["pairs"].size() == 4);
    CHECK(j["pairs"][0]["alpha"] == "1");
    CHECK(j["pairs"][1]["alpha"] == "4/3");
    CHECK(j["pairs"][2]["alpha"] == "5/3");
    CHECK(j["pairs"][3]["alpha"] == "2");
    CHECK(j["pairs"][1]["mult"] == 3);
    CHECK(j["pairs"][0]["weight"] == 3);
}

TEST_CASE("malformed spectral pair files are rejected", "[io]") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_spectral_pairs(in);
    };
    CHECK_THROWS_AS(parse("not json"), invalid_input);
    CHECK_THROWS_AS(parse("{}"), invalid_input);
    CHECK_THROWS_AS(parse("{\"n\": 2}"), invalid_input);
    CHECK_THROWS_AS(parse("{\"n\": 2, \"pairs\": [{\"alpha\": \"3/2\"}]}"), invalid_input);
    CHECK_THROWS_AS(
        parse("{\"n\": 2, \"pairs\": [{\"alpha\": \"x\", \"weight\": 2, \"mult\": 1}]}"),
        invalid_input);
    CHECK_THROWS_AS(
        parse("{\"n\": 2, \"pairs\": [{\"alpha\": \"3/2\", \"weight\": 2, \"mult\": 0}]}"),
        invalid_input);
    // alpha out of range for the stated n
    CHECK_THROWS_AS(
        parse("{\"n\": 1, \"pairs\": [{\"alpha\": \"5/2\", \"weight\": 1, \"mult\": 1}]}"),
        invalid_input);
}

TEST_CASE("degree polynomial serialization is canonical", "[io]") {
    DegreePoly p = signature_poly(1, 1);
    Json j = to_json(p);
    CHECK(j["arity"] == 1);
    CHECK(j["text"] == "4/3*d - 1/3*d^3");
    REQUIRE(j["terms"].size() == 2);
    CHECK(j["terms"][0]["exponents"] == Json::array({1}));
    CHECK(j["terms"][0]["coefficient"] == "4/3");
    CHECK(j["terms"][1]["exponents"] == Json::array({3}));
    CHECK(j["terms"][1]["coefficient"] == "-1/3");
}
