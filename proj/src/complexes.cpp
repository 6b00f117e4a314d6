#include "novikov/complexes.hpp"

#include <set>

namespace nov {

PolyMat zero_mat(int r, int c) { return PolyMat(r, c); }

int FreeComplex::rank(int n) const {
    auto it = ranks.find(n);
    return it == ranks.end() ? 0 : it->second;
}

PolyMat FreeComplex::d(int n) const {
    auto it = diff.find(n);
    if (it == diff.end()) return PolyMat(rank(n + 1), rank(n));
    return it->second;
}

void FreeComplex::set_d(int n, PolyMat m) {
    if (m.rows() != rank(n + 1) || m.cols() != rank(n))
        throw ShapeMismatch("differential in degree " + std::to_string(n));
    diff[n] = std::move(m);
}

std::vector<int> FreeComplex::degrees() const {
    std::vector<int> r;
    for (auto [n, k] : ranks)
        if (k > 0) r.push_back(n);
    return r;
}

int FreeComplex::total_rank() const {
    int t = 0;
    for (auto [n, k] : ranks) t += k;
    return t;
}

int FreeComplex::euler_characteristic() const {
    int e = 0;
    for (auto [n, k] : ranks) e += (n % 2 == 0) ? k : -k;
    return e;
}

void FreeComplex::normalize() {
    for (auto it = ranks.begin(); it != ranks.end();)
        it = it->second == 0 ? ranks.erase(it) : std::next(it);
    for (auto it = diff.begin(); it != diff.end();) {
        bool drop = it->second.empty() && rank(it->first) * rank(it->first + 1) == 0;
        it = drop ? diff.erase(it) : std::next(it);
    }
}

ValidationReport validate(const FreeComplex& c) {
    ValidationReport rep;
    for (const auto& [n, m] : c.diff) {
        if (m.rows() != c.rank(n + 1) || m.cols() != c.rank(n)) {
            rep.ok = false;
            rep.problems.push_back("shape of d^" + std::to_string(n));
            continue;
        }
        if (c.flavor.is_region_restricted())
            for (int i = 0; i < m.rows(); ++i)
                for (int j = 0; j < m.cols(); ++j)
                    if (!contains(c.flavor, m(i, j))) {
                        rep.ok = false;
                        rep.problems.push_back("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                               ") of d^" + std::to_string(n) + " not in " + c.flavor.name());
                    }
    }
    for (const auto& [n, m] : c.diff) {
        auto it = c.diff.find(n + 1);
        if (it == c.diff.end() || m.rows() != it->second.cols()) continue;
        PolyMat sq = it->second * m;
        for (int i = 0; i < sq.rows(); ++i)
            for (int j = 0; j < sq.cols(); ++j)
                if (!sq(i, j).is_zero()) {
                    rep.ok = false;
                    rep.problems.push_back("d^" + std::to_string(n + 1) + " d^" + std::to_string(n) + " nonzero at (" +
                                           std::to_string(i) + "," + std::to_string(j) + ")");
                }
    }
    return rep;
}

PolyMat ChainMap::at(int n) const {
    auto it = mats.find(n);
    if (it == mats.end()) return PolyMat(target.rank(n), source.rank(n));
    return it->second;
}

PolyMat Homotopy::at(int n) const {
    auto it = mats.find(n);
    if (it == mats.end()) return PolyMat(target.rank(n - 1), source.rank(n));
    return it->second;
}

static std::set<int> all_degrees(const FreeComplex& a, const FreeComplex& b) {
    std::set<int> s;
    for (int n : a.degrees()) s.insert(n);
    for (int n : b.degrees()) s.insert(n);
    return s;
}

bool is_chain_map(const ChainMap& f) {
    std::set<int> deg = all_degrees(f.source, f.target);
    std::set<int> ext = deg;
    for (int n : deg) ext.insert(n - 1);
    for (int n : ext) {
        PolyMat lhs = f.target.d(n) * f.at(n);
        PolyMat rhs = f.at(n + 1) * f.source.d(n);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

bool check_homotopy(const Homotopy& h, const ChainMap& f, const ChainMap& g) {
    for (int n : all_degrees(h.source, h.target)) {
        PolyMat lhs = h.target.d(n - 1) * h.at(n) + h.at(n + 1) * h.source.d(n);
        if (!(lhs == f.at(n) - g.at(n))) return false;
    }
    return true;
}

ChainMap identity_map(const FreeComplex& c) {
    ChainMap f{c, c, {}};
    for (int n : c.degrees()) f.mats[n] = PolyMat::identity(c.rank(n));
    return f;
}

ChainMap zero_map(const FreeComplex& s, const FreeComplex& t) { return ChainMap{s, t, {}}; }

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    ChainMap h{f.source, g.target, {}};
    for (int n : all_degrees(f.source, g.target)) h.mats[n] = g.at(n) * f.at(n);
    return h;
}

ChainMap operator+(const ChainMap& a, const ChainMap& b) {
    ChainMap h{a.source, a.target, {}};
    for (int n : all_degrees(a.source, a.target)) h.mats[n] = a.at(n) + b.at(n);
    return h;
}

ChainMap operator-(const ChainMap& a, const ChainMap& b) {
    ChainMap h{a.source, a.target, {}};
    for (int n : all_degrees(a.source, a.target)) h.mats[n] = a.at(n) - b.at(n);
    return h;
}

ChainMap scaled(const ChainMap& f, const LaurentPoly& s) {
    ChainMap h = f;
    for (auto& [n, m] : h.mats) m = m.scaled(s);
    return h;
}

FreeComplex cone(const ChainMap& f) {
    const FreeComplex& X = f.source;
    const FreeComplex& Y = f.target;
    FreeComplex c;
    c.flavor = Y.flavor;
    std::set<int> deg;
    for (int n : X.degrees()) deg.insert(n - 1);
    for (int n : Y.degrees()) deg.insert(n);
    for (int n : deg) c.ranks[n] = X.rank(n + 1) + Y.rank(n);
    for (int n : deg) {
        if (c.rank(n + 1) == 0) continue;
        c.diff[n] = block_matrix<LaurentPoly>({X.rank(n + 2), Y.rank(n + 1)}, {X.rank(n + 1), Y.rank(n)},
                                              {{-X.d(n + 1), {}}, {f.at(n + 1), Y.d(n)}});
    }
    c.normalize();
    return c;
}

FreeComplex shift(const FreeComplex& c, int s) {
    FreeComplex r;
    r.flavor = c.flavor;
    for (auto [n, k] : c.ranks) r.ranks[n - s] = k;
    for (const auto& [n, m] : c.diff) r.diff[n - s] = (s % 2 == 0) ? m : -m;
    return r;
}

FreeComplex direct_sum(const FreeComplex& a, const FreeComplex& b) {
    if (!(a.flavor == b.flavor)) throw FlavorMismatch(a.flavor.name() + " vs " + b.flavor.name());
    FreeComplex r;
    r.flavor = a.flavor;
    for (int n : all_degrees(a, b)) r.ranks[n] = a.rank(n) + b.rank(n);
    for (int n : all_degrees(a, b))
        if (r.rank(n + 1) > 0) r.diff[n] = direct_sum(a.d(n), b.d(n));
    return r;
}

FreeComplex base_change(const FreeComplex& c, const RingFlavor& g) {
    for (const auto& [n, m] : c.diff)
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                if (!contains(g, m(i, j)))
                    throw NotAnElement(m(i, j).str() + " is not an element of " + g.name());
    FreeComplex r = c;
    r.flavor = g;
    return r;
}

ChainMap base_change(const ChainMap& f, const RingFlavor& g) {
    ChainMap r{base_change(f.source, g), base_change(f.target, g), f.mats};
    for (const auto& [n, m] : f.mats)
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                if (!contains(g, m(i, j)))
                    throw NotAnElement(m(i, j).str() + " is not an element of " + g.name());
    return r;
}

FreeComplex two_term(const LaurentPoly& p, const RingFlavor& fl) {
    FreeComplex c;
    c.flavor = fl;
    c.ranks = {{0, 1}, {1, 1}};
    c.diff[0] = PolyMat{{p}};
    return c;
}

FreeComplex substitute(const FreeComplex& c, int sx, int sy, bool swap) {
    FreeComplex r = c;
    r.flavor = transform_flavor(c.flavor, sx, sy, swap);
    for (auto& [n, m] : r.diff) m = m.map([&](const LaurentPoly& p) { return substitute(p, sx, sy, swap); });
    return r;
}

}  // namespace nov
