#pragma once
// Double and triple complexes, their totalisations, lower triangular
// complexes, and the windowed contraction chases.

#include "novikov/complexes.hpp"

#include <array>
#include <map>
#include <utility>
#include <vector>

namespace nov {

using Key2 = std::pair<int, int>;
using Key3 = std::array<int, 3>;
using Vec = std::vector<LaurentPoly>;

struct DoubleComplex {
    RingFlavor flavor = RingFlavor::laurent();
    std::map<Key2, int> ranks;
    std::map<Key2, PolyMat> dh;  // (p,q) -> (p+1,q)
    std::map<Key2, PolyMat> dv;  // (p,q) -> (p,q+1)

    int rank(int p, int q) const;
    PolyMat h(int p, int q) const;
    PolyMat v(int p, int q) const;
    // occupied (p,q), ascending by p then q
    std::vector<Key2> support() const;
    FreeComplex column(int p) const;
    FreeComplex row(int q) const;
};

struct TripleComplex {
    RingFlavor flavor = RingFlavor::laurent();
    std::map<Key3, int> ranks;
    std::map<Key3, PolyMat> dx, dy, dz;

    int rank(const Key3& k) const;
    PolyMat d(int axis, const Key3& k) const;
    std::vector<Key3> support() const;
    // the complex T^{x,y,*} with differential d_z
    FreeComplex zcolumn(int x, int y) const;
};

ValidationReport check_double(const DoubleComplex& dc);
ValidationReport check_triple(const TripleComplex& tc);

// degree n is ordered by p ascending
FreeComplex tot_sum(const DoubleComplex& dc);
// degree n is ordered by (x+y, x) ascending, matching tot_sum(partial_tot_xy)
FreeComplex tot_sum(const TripleComplex& tc);
DoubleComplex partial_tot_xy(const TripleComplex& tc);
// offset of the (p, n-p) block inside degree n of tot_sum
int tot_offset(const DoubleComplex& dc, int p, int n);

enum class Side { lt, rt };

// columns plo..phi of the truncated totalisation, modelled as the
// sub-quotient {p >= plo} / {p > phi} (lt) or {p <= phi} / {p < plo} (rt)
FreeComplex truncated_tot(const DoubleComplex& dc, Side side, int plo, int phi);
// window [k,K]^2, ordered lexicographically in (p,q)
FreeComplex truncated_tot_blt(const TripleComplex& tc, int k, int K);

using LtCochain = std::map<int, Vec>;    // p -> element of D^{p, n-p}
using BltCochain = std::map<Key2, Vec>;  // (p,q) -> element of D^{p,q,n-p-q}
// per column p: s[p][q] : D^{p,q} -> D^{p,q-1} with d_v s + s d_v = id
using ColumnContractions = std::map<int, std::map<int, PolyMat>>;
using ZContractions = std::map<Key2, std::map<int, PolyMat>>;

Vec mat_apply(const PolyMat& m, const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
bool vec_is_zero(const Vec& v);

// d applied in the window model: degree n -> degree n+1
LtCochain lt_differential(const DoubleComplex& dc, int n, const LtCochain& a, int plo, int phi);
BltCochain blt_differential(const TripleComplex& tc, int n, const BltCochain& a, int k, int K);

// b in degree n-1 with d b = m on the window [plo, phi]
LtCochain contract_lt(const DoubleComplex& dc, const ColumnContractions& s, int n, const LtCochain& m, int plo,
                      int phi);
BltCochain contract_blt(const TripleComplex& tc, const ZContractions& s, int n, const BltCochain& m, int k, int K);

struct TriangularStructure {
    FreeComplex complex;
    // sizes[q][p-1] = rank of C^{p,q}, p = 1..n
    std::map<int, std::vector<int>> sizes;
    int n = 1;

    // block of d^q from C^{k,q} to C^{l,q+1}
    PolyMat block(int q, int l, int k) const;
    bool is_lower_triangular() const;
};

struct FiltrationStep {
    FreeComplex sub;       // C(k)
    FreeComplex quotient;  // C^{k,*}
    ChainMap inclusion;    // C(k) -> C
    ChainMap projection;   // C(k) -> C^{k,*}
};

std::vector<FiltrationStep> triangular_filtration(const TriangularStructure& ts);

// chain map C -> tot_sum(E) induced by h[q] : C^q -> E^{0,q}, with the
// signs needed to make it a chain map
ChainMap augment(const FreeComplex& c, const DoubleComplex& e, const std::map<int, PolyMat>& h);

}  // namespace nov
