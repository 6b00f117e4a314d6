#pragma once
// Random instances and small oracles shared by the unit and acceptance suites.

#include "novikov/complexes.hpp"
#include "novikov/homology.hpp"
#include "novikov/multicomplex.hpp"

#include <random>

namespace nov::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline LaurentPoly random_poly(Rng& rng, int max_terms, int lo, int hi, int cmax = 3) {
    LaurentPoly p;
    int n = uniform(rng, 1, max_terms);
    for (int i = 0; i < n; ++i) {
        int c = 0;
        while (c == 0) c = uniform(rng, -cmax, cmax);
        p.add_term({uniform(rng, lo, hi), uniform(rng, lo, hi)}, c);
    }
    return p;
}

inline IntMat random_int(Rng& rng, int r, int c, int lo, int hi) {
    IntMat m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = uniform(rng, lo, hi);
    return m;
}

// product of random elementary matrices, with its inverse
inline std::pair<PolyMat, PolyMat> random_unimodular(Rng& rng, int n, bool laurent = false) {
    PolyMat u = PolyMat::identity(n), v = PolyMat::identity(n);
    if (n < 2) return {u, v};
    for (int s = 0; s < 2 * n; ++s) {
        int i = uniform(rng, 0, n - 1), j = uniform(rng, 0, n - 2);
        if (j >= i) ++j;
        LaurentPoly a = uniform(rng, -2, 2);
        if (laurent && uniform(rng, 0, 1)) a = LaurentPoly::term(uniform(rng, -1, 1) == 0 ? 1 : -1, uniform(rng, -1, 1), uniform(rng, -1, 1));
        PolyMat e = PolyMat::identity(n), f = PolyMat::identity(n);
        e(i, j) = a;
        f(i, j) = -a;
        u = e * u;
        v = v * f;
    }
    return {u, v};
}

// direct sum of elementary complexes Z -c-> Z conjugated by unimodular
// changes of basis; total rank at most max_rank
inline FreeComplex random_complex(Rng& rng, int max_rank, int lo = 0, int hi = 2, bool integers = true) {
    FreeComplex c;
    c.flavor = integers ? RingFlavor::integers() : RingFlavor::laurent();
    int total = 0;
    std::vector<std::tuple<int, int, int>> parts;  // degree, width (1 or 2), coefficient
    while (total < max_rank) {
        int w = lo < hi ? uniform(rng, 1, 2) : 1;
        if (total + w > max_rank) w = 1;
        int n = uniform(rng, lo, w == 2 ? hi - 1 : hi);
        if (w == 2 && n + 1 > hi) n = hi - 1;
        parts.emplace_back(n, w, uniform(rng, -2, 2));
        total += w;
        if (uniform(rng, 0, 3) == 0) break;
    }
    std::map<int, int> pos;
    for (auto [n, w, k] : parts) {
        ++c.ranks[n];
        if (w == 2) ++c.ranks[n + 1];
    }
    std::map<int, PolyMat> d;
    for (auto& [n, r] : c.ranks)
        if (c.ranks.count(n + 1)) d[n] = PolyMat(c.ranks[n + 1], r);
    for (auto [n, w, k] : parts) {
        int i = pos[n]++;
        if (w == 2) {
            int j = pos[n + 1]++;
            d[n](j, i) = k;
        }
    }
    std::map<int, std::pair<PolyMat, PolyMat>> basis;
    for (auto& [n, r] : c.ranks) basis[n] = random_unimodular(rng, r);
    for (auto& [n, m] : d) c.diff[n] = basis[n + 1].first * m * basis[n].second;
    c.normalize();
    return c;
}

inline Homotopy random_homotopy(Rng& rng, const FreeComplex& c, int coef = 2) {
    Homotopy t{c, c, {}};
    for (int n : c.degrees())
        if (c.rank(n - 1) > 0) t.mats[n] = to_poly(random_int(rng, c.rank(n - 1), c.rank(n), -coef, coef));
    return t;
}

inline ChainMap homotopy_boundary(const Homotopy& t) {
    const FreeComplex& c = t.source;
    ChainMap f{c, c, {}};
    for (int n : c.degrees()) f.mats[n] = c.d(n - 1) * t.at(n) + t.at(n + 1) * c.d(n);
    return f;
}

// d t + t d for a degree -1 map t: always a chain map
inline ChainMap null_homotopic(Rng& rng, const FreeComplex& c, int coef = 2) {
    return homotopy_boundary(random_homotopy(rng, c, coef));
}

// integer determinant by fraction-free elimination
inline BigInt det(IntMat m) {
    int n = m.rows();
    if (n == 0) return 1;
    BigInt sign = 1, prev = 1;
    for (int k = 0; k < n; ++k) {
        int p = k;
        while (p < n && m(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

// an acyclic complex over Z with a chain self map, and its contraction
struct ExactColumn {
    FreeComplex e;
    ChainMap h;
    std::map<int, IntMat> s;
};

inline ExactColumn exact_column(Rng& rng, int max_rank) {
    ExactColumn c;
    FreeComplex base = random_complex(rng, max_rank);
    c.e = cone(identity_map(base));
    c.e.flavor = RingFlavor::integers();
    c.h = null_homotopic(rng, c.e);
    c.s = contraction(c.e);
    return c;
}

inline PolyMat signed_poly(const std::map<int, IntMat>& s, int q, int sign, int rows, int cols) {
    auto it = s.find(q);
    if (it == s.end()) return PolyMat(rows, cols);
    return to_poly(it->second).scaled(LaurentPoly(sign));
}

// columns p in [plo, phi], each a copy of E with d_v = (-1)^p d_E and
// d_h = h out of even columns
inline DoubleComplex lt_columns(const ExactColumn& c, int plo, int phi, ColumnContractions* s = nullptr) {
    DoubleComplex dc;
    dc.flavor = RingFlavor::integers();
    for (int p = plo; p <= phi; ++p) {
        int sg = p % 2 == 0 ? 1 : -1;
        for (int q : c.e.degrees()) {
            dc.ranks[{p, q}] = c.e.rank(q);
            if (c.e.rank(q + 1) > 0) dc.dv[{p, q}] = c.e.d(q).scaled(LaurentPoly(sg));
            if (p < phi) dc.dh[{p, q}] = sg == 1 ? c.h.at(q) : PolyMat(c.e.rank(q), c.e.rank(q));
            if (s && c.e.rank(q - 1) > 0) (*s)[p][q] = signed_poly(c.s, q, sg, c.e.rank(q - 1), c.e.rank(q));
        }
    }
    return dc;
}

// grid [k,K]^2 of copies of E: d_z = (-1)^{x+y} d_E, d_x = [x even] h1,
// d_y = [y even] (-1)^x h2
inline TripleComplex blt_grid(const ExactColumn& c, const ChainMap& h2, int k, int K, ZContractions* s = nullptr) {
    TripleComplex tc;
    tc.flavor = RingFlavor::integers();
    for (int x = k; x <= K; ++x)
        for (int y = k; y <= K; ++y) {
            int sx = x % 2 == 0 ? 1 : -1, sxy = (x + y) % 2 == 0 ? 1 : -1;
            for (int z : c.e.degrees()) {
                Key3 key{x, y, z};
                int r = c.e.rank(z);
                tc.ranks[key] = r;
                if (c.e.rank(z + 1) > 0) tc.dz[key] = c.e.d(z).scaled(LaurentPoly(sxy));
                if (x < K) tc.dx[key] = sx == 1 ? c.h.at(z) : PolyMat(r, r);
                if (y < K) tc.dy[key] = y % 2 == 0 ? h2.at(z).scaled(LaurentPoly(sx)) : PolyMat(r, r);
                if (s && c.e.rank(z - 1) > 0) (*s)[{x, y}][z] = signed_poly(c.s, z, sxy, c.e.rank(z - 1), r);
            }
        }
    return tc;
}

inline Vec random_vec(Rng& rng, int n, int coef = 3) {
    Vec v(n);
    for (auto& e : v) e = LaurentPoly(uniform(rng, -coef, coef));
    return v;
}

}  // namespace nov::testing
