#include "support.hpp"

#include <doctest.h>

using namespace nov;

namespace {

bool diagonal_chain(const SNFResult& s) {
    const IntMat& d = s.D;
    for (int i = 0; i < d.rows(); ++i)
        for (int j = 0; j < d.cols(); ++j)
            if (i != j && d(i, j) != 0) return false;
    for (std::size_t i = 0; i + 1 < s.invariants.size(); ++i)
        if (s.invariants[i + 1] % s.invariants[i] != 0) return false;
    return true;
}

FreeComplex int_complex(std::map<int, int> ranks, std::map<int, IntMat> d) {
    FreeComplex c;
    c.flavor = RingFlavor::integers();
    c.ranks = ranks;
    for (auto& [n, m] : d) c.diff[n] = to_poly(m);
    return c;
}

}  // namespace

TEST_CASE("smith normal form examples") {
    auto s = smith_normal_form(IntMat::identity(3));
    CHECK(s.D == IntMat::identity(3));
    s = smith_normal_form(IntMat{{2, 0}, {0, 3}});
    CHECK(s.D == IntMat{{1, 0}, {0, 6}});
    s = smith_normal_form(IntMat{{2, 4}, {6, 8}});
    CHECK(s.D == IntMat{{2, 0}, {0, 4}});
    CHECK(s.U * IntMat{{2, 4}, {6, 8}} * s.V == s.D);
    CHECK(smith_normal_form(IntMat(0, 3)).rank == 0);
}

TEST_CASE("smith normal form on random matrices") {
    testing::Rng rng(1);
    for (int t = 0; t < 60; ++t) {
        int r = testing::uniform(rng, 1, 7), c = testing::uniform(rng, 1, 7);
        IntMat m = testing::random_int(rng, r, c, -20, 20);
        auto s = smith_normal_form(m);
        CHECK(s.U * m * s.V == s.D);
        CHECK(diagonal_chain(s));
        CHECK(abs(testing::det(s.U)) == 1);
        CHECK(abs(testing::det(s.V)) == 1);
        CHECK(integer_rank(m) == s.rank);
    }
}

TEST_CASE("integer homology") {
    auto c = int_complex({{0, 1}, {1, 1}}, {{0, IntMat{{2}}}});
    CHECK(homology_z(c, 0).is_zero());
    CHECK(homology_z(c, 1) == HomologyGroup{0, {2}});
    auto z = int_complex({{0, 1}, {1, 1}}, {{0, IntMat{{0}}}});
    CHECK(homology_z(z, 0) == HomologyGroup{1, {}});
    CHECK(homology_z(z, 1) == HomologyGroup{1, {}});
    auto aug = int_complex({{-1, 1}, {0, 4}, {1, 4}, {2, 1}},
                           {{-1, IntMat{{1}, {1}, {1}, {1}}},
                            {0, IntMat{{-1, 1, 0, 0}, {1, 0, -1, 0}, {0, -1, 0, 1}, {0, 0, 1, -1}}},
                            {1, IntMat{{1, 1, 1, 1}}}});
    CHECK(validate(aug).ok);
    CHECK(is_acyclic_z(aug));
    CHECK_THROWS_AS(to_int(PolyMat{{LaurentPoly::x()}}), NotAnElement);
}

TEST_CASE("cones of identities are acyclic and contractible") {
    testing::Rng rng(4);
    for (int t = 0; t < 30; ++t) {
        FreeComplex c = testing::random_complex(rng, 6);
        FreeComplex k = cone(identity_map(c));
        k.flavor = RingFlavor::integers();
        for (auto [n, h] : homology_all(k)) CHECK(h.is_zero());
        auto s = contraction(k);
        for (int n : k.degrees()) {
            IntMat lhs = differential_z(k, n - 1) * (s.count(n) ? s.at(n) : IntMat(k.rank(n - 1), k.rank(n)));
            IntMat rhs = (s.count(n + 1) ? s.at(n + 1) : IntMat(k.rank(n), k.rank(n + 1))) * differential_z(k, n);
            if (lhs.rows() == 0) lhs = IntMat(k.rank(n), k.rank(n));
            if (rhs.rows() == 0 || rhs.cols() == 0) rhs = IntMat(k.rank(n), k.rank(n));
            CHECK(lhs + rhs == IntMat::identity(k.rank(n)));
        }
    }
}

TEST_CASE("solve") {
    IntMat a{{2, 0}, {0, 3}};
    auto x = solve(a, {4, 9});
    REQUIRE(x);
    CHECK(mat_vec(a, *x) == std::vector<BigInt>{4, 9});
    CHECK_FALSE(solve(a, {1, 0}));
    CHECK(solve(IntMat(0, 2), {}));
}

TEST_CASE("window scans") {
    auto piece = [](Monomial m) {
        FreeComplex c;
        c.flavor = RingFlavor::integers();
        c.ranks = {{0, 1}, {1, 1}};
        c.diff[0] = PolyMat{{LaurentPoly(m == Monomial{1, 1} ? 2 : 1)}};
        return c;
    };
    auto v = window_exact(-2, 2, piece);
    CHECK(v.checked == 25);
    REQUIRE(v.failures.size() == 1);
    CHECK(v.failures.front().first == Monomial{1, 1});
    CHECK(window_exact(1, 0, piece).exact());
    auto expect_h0 = [](Monomial) { return std::map<int, int>{{0, 1}}; };
    auto one = [](Monomial) {
        FreeComplex c;
        c.flavor = RingFlavor::integers();
        c.ranks = {{0, 1}};
        return c;
    };
    CHECK(window_exact(-1, 1, one, expect_h0).exact());
    CHECK_FALSE(window_exact(-1, 1, one).exact());
}
