#include "support.hpp"

#include <doctest.h>

using namespace nov;
using P = LaurentPoly;

TEST_CASE("products") {
    CHECK((P(1) + P::x()) * (P(1) - P::x()) == P(1) - P::x(2));
    CHECK(P(1) + P::x() * (P::y(2) + P::x() * (P(1) + P::y())) ==
          P(1) + P::mono(1, 2) + P::x(2) + P::mono(2, 1));
    CHECK(P::mono(-1, 1) * P::mono(1, -1) == P(1));
    CHECK((P::x() - P::x()).is_zero());
    CHECK(multiply(P::x(), P::y()) == P::mono(1, 1));
}

TEST_CASE("support box") {
    auto b = support_box(P(1) + P::mono(1, 2) + P::x(2) + P::mono(2, 1));
    REQUIRE(b);
    CHECK(*b == SupportBox{0, 2, 0, 2});
    CHECK(!support_box(P()));
    CHECK(*support_box(P::mono(-3, 5)) == SupportBox{-3, -3, 5, 5});
}

TEST_CASE("substitution") {
    P p = P::x() + P::y(2);
    CHECK(substitute(p, -1, 1, false) == P::x(-1) + P::y(2));
    CHECK(substitute(p, 1, 1, true) == P::y() + P::x(2));
    CHECK(substitute(P::mono(1, -1), -1, -1, false) == P::mono(-1, 1));
}

TEST_CASE("big coefficients do not overflow") {
    P p = P(BigInt(1) << 80);
    CHECK((p * p).coeff({0, 0}) == BigInt(1) << 160);
}

TEST_CASE("ring laws on random polynomials") {
    testing::Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        P a = testing::random_poly(rng, 5, -3, 3), b = testing::random_poly(rng, 5, -3, 3),
          c = testing::random_poly(rng, 5, -3, 3);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        P ab = a * b;
        for (const auto& [m, k] : ab.terms()) {
            bool found = false;
            for (const auto& [u, cu] : a.terms())
                for (const auto& [v, cv] : b.terms())
                    if (u + v == m) found = true;
            CHECK(found);
        }
        for (int sx : {1, -1})
            for (int sy : {1, -1})
                for (bool sw : {false, true}) {
                    CHECK(substitute(a * b, sx, sy, sw) == substitute(a, sx, sy, sw) * substitute(b, sx, sy, sw));
                    if (!sw) CHECK(substitute(substitute(a, sx, sy, sw), sx, sy, sw) == a);
                }
    }
}

TEST_CASE("coefficients are never stored as zero") {
    P p = P::x() + P::y();
    p.add_term({1, 0}, -1);
    CHECK(p.size() == 1);
    CHECK(p.coeff({1, 0}) == 0);
}
