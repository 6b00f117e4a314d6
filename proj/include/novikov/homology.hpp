#pragma once
// Integer linear algebra: Smith normal form, homology over Z, windowed
// exactness scans.

#include "novikov/complexes.hpp"
#include "novikov/matrix.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nov {

struct SNFResult {
    IntMat U, D, V;  // U * M * V == D
    int rank = 0;
    std::vector<BigInt> invariants;  // nonzero diagonal entries, d_i | d_{i+1}
};

SNFResult smith_normal_form(const IntMat& m, bool track = true);
int integer_rank(const IntMat& m);

IntMat to_int(const PolyMat& m);  // throws NotAnElement on a nonconstant entry
IntMat differential_z(const FreeComplex& c, int n);

struct HomologyGroup {
    int betti = 0;
    std::vector<BigInt> torsion;
    bool is_zero() const { return betti == 0 && torsion.empty(); }
    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

HomologyGroup homology_z(const FreeComplex& c, int n);
std::map<int, HomologyGroup> homology_all(const FreeComplex& c);
bool is_acyclic_z(const FreeComplex& c);

// some x with A x = b, if one exists
std::optional<std::vector<BigInt>> solve(const IntMat& a, const std::vector<BigInt>& b);
std::vector<BigInt> mat_vec(const IntMat& a, const std::vector<BigInt>& x);

// s^n : C^n -> C^{n-1} with d s + s d = id for an acyclic complex over Z;
// throws NotInKernel if the complex is not contractible
std::map<int, IntMat> contraction(const FreeComplex& c);

struct WindowVerdict {
    std::size_t checked = 0;
    std::vector<std::pair<Monomial, std::string>> failures;
    bool exact() const { return failures.empty(); }
};

// scans every degree (d1,d2) in [lo,hi]^2; expected(deg) gives the betti
// numbers that should appear (all others must vanish, no torsion anywhere)
WindowVerdict window_exact(int lo, int hi, const std::function<FreeComplex(Monomial)>& piece,
                           const std::function<std::map<int, int>(Monomial)>& expected = {});

}  // namespace nov
