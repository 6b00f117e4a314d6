#pragma once
// Bounded cochain complexes of finitely generated free modules.

#include "novikov/flavors.hpp"
#include "novikov/matrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace nov {

struct FreeComplex {
    RingFlavor flavor = RingFlavor::laurent();
    std::map<int, int> ranks;
    // diff[n] : degree n -> degree n+1, shape rank(n+1) x rank(n)
    std::map<int, PolyMat> diff;

    int rank(int n) const;
    PolyMat d(int n) const;
    void set_d(int n, PolyMat m);
    // degrees with nonzero rank, ascending
    std::vector<int> degrees() const;
    int total_rank() const;
    int euler_characteristic() const;
    bool is_zero() const { return total_rank() == 0; }
    // drop zero ranks and empty differentials
    void normalize();
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> problems;
};

ValidationReport validate(const FreeComplex& c);

struct ChainMap {
    FreeComplex source, target;
    std::map<int, PolyMat> mats;  // mats[n] : rank_target(n) x rank_source(n)

    PolyMat at(int n) const;
};

struct Homotopy {
    FreeComplex source, target;
    std::map<int, PolyMat> mats;  // mats[n] : rank_target(n-1) x rank_source(n)

    PolyMat at(int n) const;
};

bool is_chain_map(const ChainMap& f);
// d H + H d = f - g
bool check_homotopy(const Homotopy& h, const ChainMap& f, const ChainMap& g);

ChainMap identity_map(const FreeComplex& c);
ChainMap zero_map(const FreeComplex& s, const FreeComplex& t);
ChainMap compose(const ChainMap& g, const ChainMap& f);  // g after f
ChainMap operator+(const ChainMap& a, const ChainMap& b);
ChainMap operator-(const ChainMap& a, const ChainMap& b);
ChainMap scaled(const ChainMap& f, const LaurentPoly& s);

FreeComplex cone(const ChainMap& f);
// (C[s])^n = C^{n+s}, differential multiplied by (-1)^s
FreeComplex shift(const FreeComplex& c, int s);
FreeComplex direct_sum(const FreeComplex& a, const FreeComplex& b);
FreeComplex base_change(const FreeComplex& c, const RingFlavor& g);
ChainMap base_change(const ChainMap& f, const RingFlavor& g);

// 0 -> L --p--> L -> 0 in degrees 0,1
FreeComplex two_term(const LaurentPoly& p, const RingFlavor& fl = RingFlavor::laurent());
FreeComplex substitute(const FreeComplex& c, int sx, int sy, bool swap);

PolyMat zero_mat(int r, int c);

}  // namespace nov
