#include "support.hpp"
#include "novikov/tori.hpp"

#include <doctest.h>

using namespace nov;
using P = LaurentPoly;

namespace {

FreeComplex z_in_degree_zero() {
    FreeComplex c;
    c.flavor = RingFlavor::integers();
    c.ranks[0] = 1;
    return c;
}

int total_betti(const FreeComplex& c) {
    int b = 0;
    for (const auto& [n, h] : homology_all(c)) b += h.betti;
    return b;
}

// f, g commuting polynomials in a random chain map phi; H = phi t - t phi
// is then a homotopy fg ~ gf for the perturbed g = g + dt + td
struct TorusData {
    ChainMap f, g;
    Homotopy H;
};

TorusData torus_data(testing::Rng& rng, const FreeComplex& c) {
    ChainMap phi = scaled(identity_map(c), P(testing::uniform(rng, -2, 2))) + testing::null_homotopic(rng, c);
    ChainMap psi = scaled(identity_map(c), P(testing::uniform(rng, -2, 2))) + scaled(phi, P(testing::uniform(rng, -1, 1))) +
                   scaled(compose(phi, phi), P(testing::uniform(rng, -1, 1)));
    Homotopy t = testing::random_homotopy(rng, c);
    ChainMap g = psi + testing::homotopy_boundary(t);
    Homotopy H = compose(phi, t);
    Homotopy tp = compose(t, phi);
    for (auto& [n, m] : H.mats) m = m - tp.at(n);
    return {phi, g, H};
}

}  // namespace

TEST_CASE("mapping 1-torus of the identity") {
    FreeComplex z = z_in_degree_zero();
    MappingTorus1 t = mapping_torus_1(identity_map(z));
    CHECK(t.torus.d(-1) == PolyMat{{P(1) - P::x()}});
    CHECK(validate(t.torus).ok);
    MappingTorus1 wide = mapping_torus_1(identity_map(z), -1, 2);
    CHECK(check_double(wide.bicomplex).ok);
}

TEST_CASE("1-torus isomorphism from a homotopy") {
    testing::Rng rng(21);
    for (int t = 0; t < 15; ++t) {
        FreeComplex c = testing::random_complex(rng, 5);
        ChainMap f = scaled(identity_map(c), P(testing::uniform(rng, -2, 2)));
        Homotopy h = testing::random_homotopy(rng, c);
        ChainMap g = f - testing::homotopy_boundary(h);
        auto [fwd, back] = torus1_isomorphism(f, g, h);
        CHECK(is_chain_map(fwd));
        CHECK(is_chain_map(back));
        CHECK(compose(back, fwd).mats == identity_map(fwd.source).mats);
        CHECK(compose(fwd, back).mats == identity_map(fwd.target).mats);
    }
}

TEST_CASE("analogue of the 2-torus on small cases") {
    FreeComplex z = z_in_degree_zero();
    Homotopy zero{z, z, {}};
    CHECK(is_acyclic_z(analogue_A(identity_map(z), identity_map(z), zero)));
    FreeComplex a0 = analogue_A(zero_map(z, z), zero_map(z, z), zero);
    CHECK(a0.total_rank() == 4);
    CHECK(total_betti(a0) == 4);
    FreeComplex t = mapping_torus_2(identity_map(z), identity_map(z), zero);
    CHECK(validate(t).ok);
    CHECK(t.ranks == std::map<int, int>{{-2, 1}, {-1, 2}, {0, 1}});
}

TEST_CASE("2-tori of random commuting data") {
    testing::Rng rng(22);
    for (int t = 0; t < 20; ++t) {
        FreeComplex c = testing::random_complex(rng, 5);
        TorusData d = torus_data(rng, c);
        CHECK(validate(mapping_torus_2(d.f, d.g, d.H)).ok);
        CHECK(validate(analogue_A(d.f, d.g, d.H)).ok);
        TripleComplex tc = torus_triple(d.f, d.g, d.H, 0, 2);
        CHECK(check_triple(tc).ok);
    }
}

TEST_CASE("invalid torus data is rejected") {
    testing::Rng rng(23);
    FreeComplex c;
    while (c.rank(0) == 0 || c.rank(1) == 0) c = testing::random_complex(rng, 5, 0, 1);
    ChainMap f = scaled(identity_map(c), P(2));
    Homotopy bogus = testing::random_homotopy(rng, c);
    ChainMap b = testing::homotopy_boundary(bogus);
    bool nonzero = false;
    for (const auto& [n, m] : b.mats) nonzero = nonzero || !m.is_zero();
    if (nonzero) CHECK_THROWS_AS(mapping_torus_2(f, f, bogus), HomotopyInvalid);
}

TEST_CASE("iterated cone matches the analogue") {
    testing::Rng rng(24);
    for (int t = 0; t < 10; ++t) {
        FreeComplex c = testing::random_complex(rng, 4);
        ChainMap f = scaled(identity_map(c), P(testing::uniform(rng, -2, 2))) + testing::null_homotopic(rng, c);
        ChainMap g = scaled(f, P(testing::uniform(rng, -2, 2))) + scaled(identity_map(c), P(1));
        IteratedCone ic = iterated_cone_square(f, g);
        CHECK(is_chain_map(ic.to_A));
        CHECK(is_chain_map(ic.from_A));
        CHECK(compose(ic.from_A, ic.to_A).mats == identity_map(ic.complex).mats);
        CHECK(compose(ic.to_A, ic.from_A).mats == identity_map(ic.to_A.target).mats);
    }
}

TEST_CASE("comparison maps are chain maps") {
    testing::Rng rng(25);
    for (int t = 0; t < 10; ++t) {
        FreeComplex c = testing::random_complex(rng, 4);
        ChainMap f = scaled(identity_map(c), P(testing::uniform(rng, -2, 2))) + testing::null_homotopic(rng, c);
        ChainMap g = scaled(compose(f, f), P(testing::uniform(rng, -1, 1))) + scaled(identity_map(c), P(2));
        Homotopy A = testing::random_homotopy(rng, c);
        ChainMap h = identity_map(c) + testing::homotopy_boundary(A);
        for (bool vars : {true, false}) {
            CHECK(is_chain_map(comparison_phi(f, g, h, A, vars)));
            ChainMap alpha = identity_map(c);
            ChainMap beta = h;
            CHECK(is_chain_map(comparison_alpha_star(f, g, alpha, beta, A, vars)));
        }
    }
}

TEST_CASE("gamma is a chain map onto C") {
    testing::Rng rng(26);
    for (int t = 0; t < 20; ++t) {
        FreeComplex c = testing::random_complex(rng, 5, 0, 2);
        for (int n = -2; n <= 2; ++n) {
            auto rand_bi = [&](int r) {
                BiVec v(r);
                for (auto& p : v)
                    for (int i = 0; i < 3; ++i) {
                        P coef = P(testing::uniform(rng, -2, 2)).shifted({testing::uniform(rng, -1, 1), testing::uniform(rng, -1, 1)});
                        if (!coef.is_zero()) p[{testing::uniform(rng, -1, 1), testing::uniform(rng, -1, 1)}] += coef;
                    }
                for (auto& p : v)
                    for (auto it = p.begin(); it != p.end();) it = it->second.is_zero() ? p.erase(it) : std::next(it);
                return v;
            };
            TorusElement e{rand_bi(c.rank(n + 2)), rand_bi(c.rank(n + 1)), rand_bi(c.rank(n + 1)), rand_bi(c.rank(n))};
            TorusElement de = torus_yx_differential(c, n, e);
            CHECK(bi_is_zero(torus_yx_differential(c, n + 1, de).r));
            CHECK(bi_is_zero(torus_yx_differential(c, n + 1, de).u));
            CHECK(gamma_apply(de) == mat_apply(c.d(n), gamma_apply(e)));
            Vec v = testing::random_vec(rng, c.rank(n));
            CHECK(gamma_apply(bi_from(v)) == v);
        }
    }
}

TEST_CASE("amplitude reduction") {
    testing::Rng rng(27);
    for (int t = 0; t < 40; ++t) {
        int r = testing::uniform(rng, 1, 3);
        BiVec u(r);
        for (auto& p : u)
            for (int i = 0; i < 4; ++i) {
                P c = testing::random_poly(rng, 2, -2, 2);
                p[{testing::uniform(rng, -3, 3), testing::uniform(rng, -3, 3)}] += c;
            }
        for (auto& p : u)
            for (auto it = p.begin(); it != p.end();) it = it->second.is_zero() ? p.erase(it) : std::next(it);
        auto [z1, z2] = row_alpha(u);
        CHECK(bi_is_zero(row_beta(z1, z2)));
        AmplitudeCertificate cert = amplitude_reduce(z1, z2);
        auto [c1, c2] = row_alpha(cert.preimage);
        CHECK(c1 == z1);
        CHECK(c2 == z2);
    }
    BiVec one(1);
    one[0][{0, 0}] = P(1);
    CHECK_THROWS_AS(amplitude_reduce(one, bi_zero(1)), NotInKernel);
    CHECK(amplitude_reduce(bi_zero(2), bi_zero(2)).rounds == 0);
}
