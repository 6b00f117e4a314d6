#pragma once
// Diagrams over the face lattice of the square, their Cech complexes,
// the augmented row complex, the finite replacement B', nerve diagrams
// and the dual cellular complex W.

#include "novikov/complexes.hpp"
#include "novikov/homology.hpp"
#include "novikov/multicomplex.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace nov {

struct SquareDiagram {
    std::map<Face, FreeComplex> values;  // value at F is a complex over A_F
    std::map<std::pair<Face, Face>, ChainMap> maps;  // s_FG for F < G
    std::map<int, int> twist;  // k_j: s_FG multiplies by m_FG^{-k_j} in degree j

    ChainMap s(Face f, Face g) const;  // identity when f == g
    int k(int j) const;
};

// functoriality, chain maps, d^2 = 0 and membership of every entry
ValidationReport check_diagram(const SquareDiagram& d);

SquareDiagram diagram_Dk(int k);

struct Extension {
    std::map<int, int> k;
    SquareDiagram Y;
};

// Y with Y_S = c and Y^j = sum over B_j of D(k_j), k_j minimal
Extension extend(const FreeComplex& c);

// poset with degree and incidence functions
struct IncidencePoset {
    std::vector<std::string> names;
    std::vector<int> degree;
    std::vector<std::vector<bool>> less;  // less[a][b] : a < b
    std::map<std::pair<int, int>, int> inc;

    int size() const { return int(names.size()); }
    int incidence(int a, int b) const;
};

IncidencePoset face_poset();             // non-empty faces in kFaces order
IncidencePoset nerve_poset(Face f);      // flags of st(F), see nerve_flags
void check_incidence(const IncidencePoset& p);  // throws IncidenceViolation

// D^{i,j} = sum_{dim F = i} X_F^j, d_h = [F:G] s_FG, d_v = (-1)^i d_F
DoubleComplex cech_double(const SquareDiagram& d);
FreeComplex cech(const SquareDiagram& d);

// A complex with monomial entries whose basis elements each generate a
// copy of a ring placed at a shift; the entry between two basis elements
// must be c * x^(shift_source - shift_target).
struct GradedBasis {
    RingFlavor ring;
    Monomial shift;
    std::string label;
};

struct GradedModel {
    FreeComplex complex;
    std::map<int, std::vector<GradedBasis>> basis;
};

struct GradedPiece {
    FreeComplex complex;  // over Z
    std::map<int, std::vector<int>> on;  // indices of the basis elements present
};

GradedPiece graded_piece(const GradedModel& m, Monomial deg);
// window_exact over graded pieces; expected gives betti numbers per degree
WindowVerdict graded_scan(const GradedModel& m, int radius,
                          const std::function<std::map<int, int>(Monomial)>& expected = {});

struct RowMatrices {
    PolyMat dm1;  // 4 x 1
    PolyMat d0;   // edges x vertices
    PolyMat d1;   // 1 x edges
};

RowMatrices augmented_row_matrices(int k);
// lattice points of kS ordered by (y, x)
std::vector<Monomial> lattice_points(int k);
// Cech complex of D(k) in degrees 0..2
GradedModel cech_row(int k);
// the same with Z[kS] in degree -1
GradedModel augmented_row(int k);

// elements of Cech(D(k))^0 and ^1 as 4-vectors in vertex / edge order
Vec row_preimage(const Vec& e1, int k);
LaurentPoly row_kernel_to_lattice(const Vec& e0, int k);
Vec row_augment(const LaurentPoly& e, int k);  // d^{-1}

struct BPrime {
    Extension ext;
    FreeComplex complex;   // over Z
    DoubleComplex cech;    // double complex of Y
    ChainMap chi;          // complex -> tot_sum(cech)
};

BPrime build_Bprime(const FreeComplex& c);

struct NerveDiagram {
    Face face;
    std::vector<std::vector<Face>> flags;  // by dimension, then lexicographic
    IncidencePoset poset;
    GradedModel cech;
    PolyMat sigma;  // A_F -> Cech^0
};

std::vector<std::vector<Face>> nerve_flags(Face f);
NerveDiagram nerve_diagram(Face f);
// lambda_FG : Cech(bsd_F) -> Cech(bsd_G), F <= G, per degree
std::map<int, IntMat> nerve_lambda(Face f, Face g);

struct DualCellular {
    FreeComplex augmented;  // Z -> Z^4 -> Z^4 -> Z in degrees -1..2
    DoubleComplex W;
    ChainMap map;           // C -> tot_sum(W)
};

DualCellular dual_cellular_W(const FreeComplex& c);

}  // namespace nov
