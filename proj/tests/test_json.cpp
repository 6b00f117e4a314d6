#include "novikov/fixtures.hpp"
#include "novikov/json_io.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace nov;
using P = LaurentPoly;

namespace {

std::string error_of(const std::string& text) {
    try {
        complex_from_text(text);
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("polynomials round trip") {
    testing::Rng rng(51);
    for (int t = 0; t < 50; ++t) {
        P p = testing::random_poly(rng, 6, -4, 4, 100);
        CHECK(poly_from_json(poly_to_json(p)) == p);
    }
    P big = P::term(BigInt(1) << 100, 1, -1);
    CHECK(poly_from_json(poly_to_json(big)) == big);
    CHECK(poly_from_json(Json::parse(R"([{"c": 3, "x": 1, "y": 0}])")) == P::term(3, 1, 0));
}

TEST_CASE("complexes round trip") {
    FreeComplex c = example_complex();
    FreeComplex back = complex_from_text(complex_to_json(c).dump());
    CHECK(back.ranks == c.ranks);
    CHECK(back.diff == c.diff);
    CHECK(back.flavor == c.flavor);
    FreeComplex z = two_term(P(5), RingFlavor::integers());
    CHECK(complex_from_json(complex_to_json(z)).flavor == RingFlavor::integers());
}

TEST_CASE("input errors name their location") {
    CHECK(error_of("{\"ranks\": {").find("byte") != std::string::npos);
    CHECK(error_of("[]").find("object") != std::string::npos);
    CHECK(error_of(R"({"ranks": {"0": -1}})").find("/ranks/0") != std::string::npos);
    CHECK(error_of(R"({"ranks": {"a": 1}})").find("not an integer") != std::string::npos);
    std::string bad_c = R"({"ranks": {"0": 1, "1": 1}, "diff": {"0": [[[{"c": "1x", "x": 0, "y": 0}]]]}})";
    CHECK(error_of(bad_c).find("/diff/0/0/0/0/c") != std::string::npos);
    std::string shape = R"({"ranks": {"0": 1, "1": 1}, "diff": {"0": [[[], []]]}})";
    CHECK(error_of(shape).find("/diff/0/0") != std::string::npos);
    std::string nonzero = R"({"ranks": {"0": 1, "1": 1, "2": 1}, "diff": {"0": [[[{"c": "1", "x": 0, "y": 0}]]], "1": [[[{"c": "1", "x": 0, "y": 0}]]]}})";
    CHECK_FALSE(error_of(nonzero).empty());
    CHECK(error_of(R"j({"flavor": "Nov(z)", "ranks": {}})j").find("/flavor") != std::string::npos);
}

TEST_CASE("reports serialise") {
    DominationReport r = check_finite_domination(example_complex());
    Json j = report_to_json(r);
    CHECK(j["overall"] == "FinitelyDominated");
    CHECK(j["flavors"].size() == 8);
    CHECK(j["flavors"][0]["pivots"][0].contains("leading"));
    Json w = witness_to_json(witness(two_term(P::x())));
    CHECK(w["passed"] == true);
}
