#include "novikov/fixtures.hpp"
#include "novikov/square.hpp"
#include "support.hpp"

#include <doctest.h>

#include <climits>

using namespace nov;
using P = LaurentPoly;

namespace {

// k_{t+1} = k_t + max(-k_t, largest sup-norm of an exponent in d^t)
std::map<int, int> twist_oracle(const FreeComplex& c) {
    std::map<int, int> k;
    auto deg = c.degrees();
    if (deg.empty()) return k;
    k[deg.front()] = 0;
    for (int t = deg.front(); t < deg.back(); ++t) {
        int need = INT_MIN;
        PolyMat d = c.d(t);
        for (int i = 0; i < d.rows(); ++i)
            for (int j = 0; j < d.cols(); ++j)
                for (const auto& [u, a] : d(i, j).terms()) need = std::max({need, std::abs(u.ex), std::abs(u.ey)});
        k[t + 1] = k[t] + std::max(-k[t], need);
    }
    return k;
}

int euler(const FreeComplex& c) { return c.euler_characteristic(); }

}  // namespace

TEST_CASE("face lattice data") {
    CHECK(incidence(Face::v_bl, Face::e_b) == -1);
    CHECK(monomial_m(Face::v_tl, Face::S) == Monomial{1, -1});
    CHECK(monomial_m(Face::Empty, Face::e_l) == Monomial{-1, 0});
    CHECK(star(Face::v_bl).size() == 4);
    CHECK(star(Face::S).size() == 1);
    CHECK_NOTHROW(check_incidence(face_poset()));
    IncidencePoset broken = face_poset();
    broken.inc.begin()->second *= -1;
    CHECK_THROWS_AS(check_incidence(broken), IncidenceViolation);
}

TEST_CASE("D(k) diagrams") {
    for (int k = 0; k <= 4; ++k) {
        SquareDiagram d = diagram_Dk(k);
        CHECK(check_diagram(d).ok);
        CHECK(d.s(Face::v_bl, Face::S).at(0) == PolyMat{{P::mono(-k, -k)}});
        CHECK(d.s(Face::e_l, Face::S).at(0) == PolyMat{{P::mono(-k, 0)}});
        CHECK(d.s(Face::v_tr, Face::e_t).at(0) == PolyMat{{P::mono(k, 0)}});
    }
    SquareDiagram bad = diagram_Dk(2);
    bad.maps.at({Face::v_bl, Face::e_b}).mats[0] = PolyMat{{P::mono(1, 1)}};
    CHECK_FALSE(check_diagram(bad).ok);
}

TEST_CASE("minimal twists of extensions") {
    CHECK(extend(two_term(P::mono(3, -1))).k == std::map<int, int>{{0, 0}, {1, 3}});
    CHECK(extend(example_complex()).k == std::map<int, int>{{0, 0}, {1, 2}, {2, 4}});
    CHECK(extend(two_term(P::x())).k == std::map<int, int>{{0, 0}, {1, 1}});
    testing::Rng rng(31);
    for (int t = 0; t < 30; ++t) {
        FreeComplex c;
        int lo = testing::uniform(rng, -1, 1), len = testing::uniform(rng, 1, 3);
        for (int n = lo; n <= lo + len; ++n) c.ranks[n] = 1;
        for (int n = lo; n < lo + len; ++n) c.diff[n] = PolyMat{{n % 2 == 0 ? testing::random_poly(rng, 2, -3, 3) : P()}};
        Extension e = extend(c);
        CHECK(e.k == twist_oracle(c));
        CHECK(check_diagram(e.Y).ok);
        CHECK(check_double(cech_double(e.Y)).ok);
    }
}

TEST_CASE("graded pieces of the Cech row") {
    for (int k = 0; k <= 3; ++k) {
        GradedModel row = cech_row(k);
        for (int a = -k - 2; a <= k + 2; ++a)
            for (int b = -k - 2; b <= k + 2; ++b) {
                FreeComplex g = graded_piece(row, {a, b}).complex;
                bool inside = std::abs(a) <= k && std::abs(b) <= k;
                CHECK(euler(g) == (inside ? 1 : 0));
            }
        CHECK(graded_scan(augmented_row(k), k + 3).exact());
    }
    GradedPiece far = graded_piece(cech_row(2), {5, 5});
    CHECK(far.complex.ranks == std::map<int, int>{{0, 1}, {1, 2}, {2, 1}});
    GradedPiece centre = graded_piece(cech_row(0), {0, 0});
    CHECK(centre.complex.ranks == std::map<int, int>{{0, 4}, {1, 4}, {2, 1}});
    CHECK(lattice_points(1).front() == Monomial{-1, -1});
    CHECK(lattice_points(1)[1] == Monomial{0, -1});
}

TEST_CASE("a corrupted sign breaks row exactness") {
    GradedModel row = augmented_row(1);
    PolyMat d0 = row.complex.d(0);
    d0(0, 0) = -d0(0, 0);
    row.complex.diff[0] = d0;
    CHECK_FALSE(validate(row.complex).ok);
}

TEST_CASE("row preimages and lattice kernels") {
    testing::Rng rng(32);
    for (int k = 0; k <= 3; ++k) {
        RowMatrices rm = augmented_row_matrices(k);
        for (int t = 0; t < 20; ++t) {
            Vec e0(4);
            for (int v = 0; v < 4; ++v) {
                Monomial dir = barycentre(kVertices[v]);
                for (int i = 0; i < 3; ++i) {
                    int a = testing::uniform(rng, 0, 3), b = testing::uniform(rng, 0, 3);
                    e0[v] += P::term(testing::uniform(rng, -2, 2), -dir.ex * a, -dir.ey * b);
                }
            }
            Vec e1 = mat_apply(rm.d0, e0);
            Vec pre = row_preimage(e1, k);
            CHECK(mat_apply(rm.d0, pre) == e1);
            P lat;
            for (Monomial m : lattice_points(k)) lat += P::term(testing::uniform(rng, -2, 2), m.ex, m.ey);
            CHECK(row_kernel_to_lattice(row_augment(lat, k), k) == lat);
        }
    }
    Vec e1 = mat_apply(augmented_row_matrices(1).d0, Vec{P(), P(), P(), P::mono(-1, -2)});
    Vec pre = row_preimage(e1, 1);
    CHECK(mat_apply(augmented_row_matrices(1).d0, pre) == e1);
    CHECK_THROWS_AS(row_preimage(Vec{P(1), P(), P(), P()}, 1), NotInKernel);
    CHECK_THROWS_AS(row_kernel_to_lattice(Vec{P(1), P(), P(), P()}, 1), NotInKernel);
}

TEST_CASE("nerves of stars") {
    CHECK(nerve_flags(Face::S).size() == 1);
    CHECK(nerve_flags(Face::v_bl).size() == 11);
    CHECK(nerve_flags(Face::e_r).size() == 3);
    NerveDiagram er = nerve_diagram(Face::e_r);
    PolyMat d = er.cech.complex.d(0);
    REQUIRE(d.rows() == 1);
    REQUIRE(d.cols() == 2);
    CHECK(d(0, 0).terms().begin()->second == -1);
    CHECK(d(0, 1).terms().begin()->second == 1);
    for (Face f : kFaces) {
        CHECK_NOTHROW(check_incidence(nerve_poset(f)));
        NerveDiagram nd = nerve_diagram(f);
        CHECK(validate(nd.cech.complex).ok);
        for (Face g : star(f)) CHECK(to_poly(nerve_lambda(f, g).at(0)) * nd.sigma == nerve_diagram(g).sigma);
    }
}

TEST_CASE("finite replacement of the example") {
    BPrime b = build_Bprime(example_complex());
    CHECK(b.ext.k == std::map<int, int>{{0, 0}, {1, 2}, {2, 4}});
    CHECK(b.complex.ranks == std::map<int, int>{{0, 1}, {1, 50}, {2, 81}});
    CHECK(validate(b.complex).ok);
    CHECK(is_chain_map(b.chi));
    auto h = homology_all(b.complex);
    CHECK(h[0].betti == 0);
    CHECK(h[1].betti == 8);
    CHECK(h[2].betti == 40);
}

TEST_CASE("dual cellular complex") {
    testing::Rng rng(33);
    for (int t = 0; t < 5; ++t) {
        FreeComplex c = testing::random_complex(rng, 4, 0, 2, false);
        DualCellular w = dual_cellular_W(c);
        CHECK(is_acyclic_z(w.augmented));
        CHECK(w.augmented.ranks == std::map<int, int>{{-1, 1}, {0, 4}, {1, 4}, {2, 1}});
        CHECK(check_double(w.W).ok);
        CHECK(is_chain_map(w.map));
        FreeComplex tot = tot_sum(w.W);
        CHECK(euler(tot) == euler(c));
    }
}
