#include "novikov/homology.hpp"

#include <set>
#include <sstream>

namespace nov {

namespace {

struct SNFWork {
    IntMat A, U, V;
    bool track;

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < A.cols(); ++c) std::swap(A(i, c), A(j, c));
        if (track)
            for (int c = 0; c < U.cols(); ++c) std::swap(U(i, c), U(j, c));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < A.rows(); ++r) std::swap(A(r, i), A(r, j));
        if (track)
            for (int r = 0; r < V.rows(); ++r) std::swap(V(r, i), V(r, j));
    }
    // row dst += q * row src
    void add_row(int dst, int src, const BigInt& q) {
        for (int c = 0; c < A.cols(); ++c)
            if (A(src, c) != 0) A(dst, c) += q * A(src, c);
        if (track)
            for (int c = 0; c < U.cols(); ++c)
                if (U(src, c) != 0) U(dst, c) += q * U(src, c);
    }
    void add_col(int dst, int src, const BigInt& q) {
        for (int r = 0; r < A.rows(); ++r)
            if (A(r, src) != 0) A(r, dst) += q * A(r, src);
        if (track)
            for (int r = 0; r < V.rows(); ++r)
                if (V(r, src) != 0) V(r, dst) += q * V(r, src);
    }
    void negate_row(int i) {
        for (int c = 0; c < A.cols(); ++c) A(i, c) = -A(i, c);
        if (track)
            for (int c = 0; c < U.cols(); ++c) U(i, c) = -U(i, c);
    }
};

}  // namespace

SNFResult smith_normal_form(const IntMat& M, bool track) {
    const int m = M.rows(), n = M.cols();
    SNFWork w{M, track ? IntMat::identity(m) : IntMat(), track ? IntMat::identity(n) : IntMat(), track};
    IntMat& A = w.A;
    int t = 0;
    for (; t < std::min(m, n); ++t) {
        int pi = -1, pj = -1;
        BigInt best;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j)
                if (A(i, j) != 0 && (pi < 0 || abs(A(i, j)) < best)) {
                    best = abs(A(i, j));
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        for (;;) {
            bool clean = true;
            for (int i = t + 1; i < m; ++i)
                if (A(i, t) != 0) {
                    w.add_row(i, t, -(A(i, t) / A(t, t)));
                    if (A(i, t) != 0) clean = false;
                }
            for (int j = t + 1; j < n; ++j)
                if (A(t, j) != 0) {
                    w.add_col(j, t, -(A(t, j) / A(t, t)));
                    if (A(t, j) != 0) clean = false;
                }
            if (!clean) {
                // bring the smallest remainder to the pivot
                int bi = t, bj = t;
                BigInt b = abs(A(t, t));
                for (int i = t + 1; i < m; ++i)
                    if (A(i, t) != 0 && abs(A(i, t)) < b) { b = abs(A(i, t)); bi = i; bj = t; }
                for (int j = t + 1; j < n; ++j)
                    if (A(t, j) != 0 && abs(A(t, j)) < b) { b = abs(A(t, j)); bi = t; bj = j; }
                w.swap_rows(t, bi);
                w.swap_cols(t, bj);
                continue;
            }
            bool divides = true;
            for (int i = t + 1; i < m && divides; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (A(i, j) % A(t, t) != 0) {
                        w.add_row(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (A(t, t) < 0) w.negate_row(t);
    }
    SNFResult r;
    r.rank = t;
    for (int i = 0; i < t; ++i) r.invariants.push_back(A(i, i));
    r.D = std::move(w.A);
    r.U = std::move(w.U);
    r.V = std::move(w.V);
    return r;
}

int integer_rank(const IntMat& m) { return smith_normal_form(m, false).rank; }

IntMat to_int(const PolyMat& m) {
    IntMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_constant()) throw NotAnElement(m(i, j).str() + " is not an integer");
            r(i, j) = m(i, j).coeff({0, 0});
        }
    return r;
}

IntMat differential_z(const FreeComplex& c, int n) { return to_int(c.d(n)); }

HomologyGroup homology_z(const FreeComplex& c, int n) {
    HomologyGroup h;
    int out = integer_rank(differential_z(c, n));
    SNFResult in = smith_normal_form(differential_z(c, n - 1), false);
    h.betti = c.rank(n) - out - in.rank;
    for (const auto& v : in.invariants)
        if (v > 1) h.torsion.push_back(v);
    return h;
}

std::map<int, HomologyGroup> homology_all(const FreeComplex& c) {
    std::map<int, HomologyGroup> r;
    for (int n : c.degrees()) r[n] = homology_z(c, n);
    return r;
}

bool is_acyclic_z(const FreeComplex& c) {
    for (const auto& [n, h] : homology_all(c))
        if (!h.is_zero()) return false;
    return true;
}

std::vector<BigInt> mat_vec(const IntMat& a, const std::vector<BigInt>& x) {
    std::vector<BigInt> y(a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a(i, j) != 0 && x[j] != 0) y[i] += a(i, j) * x[j];
    return y;
}

std::optional<std::vector<BigInt>> solve(const IntMat& a, const std::vector<BigInt>& b) {
    SNFResult s = smith_normal_form(a);
    std::vector<BigInt> ub = mat_vec(s.U, b);
    std::vector<BigInt> y(a.cols());
    for (int i = 0; i < a.rows(); ++i) {
        if (i < s.rank) {
            if (ub[i] % s.invariants[i] != 0) return std::nullopt;
            y[i] = ub[i] / s.invariants[i];
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return mat_vec(s.V, y);
}

std::map<int, IntMat> contraction(const FreeComplex& c) {
    std::map<int, IntMat> s;
    std::vector<int> deg = c.degrees();
    if (deg.empty()) return s;
    int lo = deg.front(), hi = deg.back();
    auto S = [&](int n) {
        auto it = s.find(n);
        return it == s.end() ? IntMat(c.rank(n - 1), c.rank(n)) : it->second;
    };
    for (int n = hi; n >= lo; --n) {
        IntMat dprev = differential_z(c, n - 1);  // rank(n) x rank(n-1)
        SNFResult r = smith_normal_form(dprev);
        for (const auto& v : r.invariants)
            if (v != 1) throw NotInKernel("complex is not contractible over Z");
        IntMat Dp(dprev.cols(), dprev.rows());
        for (int i = 0; i < r.rank; ++i) Dp(i, i) = 1;
        IntMat G = r.V * Dp * r.U;
        IntMat rest = IntMat::identity(c.rank(n)) - S(n + 1) * differential_z(c, n);
        s[n] = G * rest;
    }
    for (int n = lo; n <= hi; ++n) {
        IntMat lhs = differential_z(c, n - 1) * S(n) + S(n + 1) * differential_z(c, n);
        if (!(lhs == IntMat::identity(c.rank(n)))) throw NotInKernel("complex is not contractible over Z");
    }
    return s;
}

WindowVerdict window_exact(int lo, int hi, const std::function<FreeComplex(Monomial)>& piece,
                           const std::function<std::map<int, int>(Monomial)>& expected) {
    WindowVerdict v;
    for (int d2 = lo; d2 <= hi; ++d2)
        for (int d1 = lo; d1 <= hi; ++d1) {
            Monomial deg{d1, d2};
            FreeComplex c = piece(deg);
            std::map<int, int> want = expected ? expected(deg) : std::map<int, int>{};
            std::set<int> ns;
            for (int n : c.degrees()) ns.insert(n);
            for (auto [n, b] : want) ns.insert(n);
            ++v.checked;
            for (int n : ns) {
                HomologyGroup h = homology_z(c, n);
                int w = want.count(n) ? want[n] : 0;
                if (h.betti != w || !h.torsion.empty()) {
                    std::ostringstream os;
                    os << "H^" << n << " has rank " << h.betti << " (expected " << w << ")";
                    if (!h.torsion.empty()) os << " and torsion";
                    v.failures.emplace_back(deg, os.str());
                }
            }
        }
    return v;
}

}  // namespace nov
