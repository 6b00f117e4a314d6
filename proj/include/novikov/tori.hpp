#pragma once
// Mapping 1- and 2-tori, the 2-torus analogue, comparison maps and the
// amplitude reduction for the gamma row.

#include "novikov/complexes.hpp"
#include "novikov/multicomplex.hpp"

#include <map>
#include <utility>
#include <vector>

namespace nov {

// Self maps are ChainMaps C -> C, homotopies satisfy d H + H d = lhs - rhs.
// The torus variable z of a 1-torus is written as x; the two variables of
// a 2-torus are x and y. Base complexes carry constant (integer) entries.

struct MappingTorus1 {
    FreeComplex torus;
    // D^{p,q} = C^{p+q+1} + C^{p+q} for p in [plo, phi]
    DoubleComplex bicomplex;
};

MappingTorus1 mapping_torus_1(const ChainMap& h, int plo = 0, int phi = 0);

// T(f) -> T(g) built from H with d H + H d = f - g, and its inverse
std::pair<ChainMap, ChainMap> torus1_isomorphism(const ChainMap& f, const ChainMap& g, const Homotopy& H);

// H : fg ~ gf; throws HomotopyInvalid otherwise
FreeComplex mapping_torus_2(const ChainMap& f, const ChainMap& g, const Homotopy& H);
FreeComplex analogue_A(const ChainMap& f, const ChainMap& g, const Homotopy& H);

struct IteratedCone {
    FreeComplex complex;  // Cone(diag(g,g) on Cone(f))
    ChainMap to_A;        // isomorphism onto A(f,g;0)
    ChainMap from_A;
};

IteratedCone iterated_cone_square(const ChainMap& f, const ChainMap& g);

// fAg - gAf as a homotopy (degree -1 maps)
Homotopy commutator_homotopy(const ChainMap& f, const ChainMap& g, const Homotopy& A);
Homotopy compose(const ChainMap& a, const Homotopy& h);
Homotopy compose(const Homotopy& h, const ChainMap& a);

// Phi : T(f,g;0) -> T(hf, hg; h(fAg - gAf)), with d A + A d = h - id.
// With variables = false the same matrix on the analogue A(...).
ChainMap comparison_phi(const ChainMap& f, const ChainMap& g, const ChainMap& h, const Homotopy& A,
                        bool variables = true);

// alpha_* : T(bfa, bga; b(fAg-gAf)a) -> T(abf, abg; ab(fAg-gAf)),
// with alpha : B -> C, beta : C -> B and d A + A d = alpha beta - id
ChainMap comparison_alpha_star(const ChainMap& f, const ChainMap& g, const ChainMap& alpha, const ChainMap& beta,
                               const Homotopy& A, bool variables = true);

// T^{x,y,z} = A(f,g;H)^{x+y+z} for x, y in [lo, hi]
TripleComplex torus_triple(const ChainMap& f, const ChainMap& g, const Homotopy& H, int lo, int hi);

// Elements of C (x) L for an L-complex C: one map per basis vector of C^n
// from the exponent of the L factor to the coefficient in C.
using BiPoly = std::map<Monomial, LaurentPoly>;
using BiVec = std::vector<BiPoly>;

BiVec bi_zero(int rank);
BiVec bi_add(const BiVec& a, const BiVec& b);
BiVec bi_sub(const BiVec& a, const BiVec& b);
bool bi_is_zero(const BiVec& a);
BiVec bi_from(const Vec& v);  // v (x) 1

// element of T(y,x;0)^n = (C^{n+2} + C^{n+1} + C^{n+1} + C^n) (x) L
struct TorusElement {
    BiVec r, s, t, u;
};

TorusElement torus_yx_differential(const FreeComplex& c, int n, const TorusElement& e);
// z (x) p -> z p on the last block
Vec gamma_apply(const TorusElement& e);
Vec gamma_apply(const BiVec& z);

// the row C(x)L -a-> (C(x)L)^2 -b-> C(x)L -g-> C at a fixed degree
std::pair<BiVec, BiVec> row_alpha(const BiVec& u);
BiVec row_beta(const BiVec& z1, const BiVec& z2);

struct AmplitudeCertificate {
    BiVec preimage;
    int rounds = 0;
};

// preimage of (z1, z2) under row_alpha; throws NotInKernel if
// row_beta(z1, z2) != 0
AmplitudeCertificate amplitude_reduce(const BiVec& z1, const BiVec& z2);

}  // namespace nov
