#include "novikov/multicomplex.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace nov {

int DoubleComplex::rank(int p, int q) const {
    auto it = ranks.find({p, q});
    return it == ranks.end() ? 0 : it->second;
}

PolyMat DoubleComplex::h(int p, int q) const {
    auto it = dh.find({p, q});
    return it == dh.end() ? PolyMat(rank(p + 1, q), rank(p, q)) : it->second;
}

PolyMat DoubleComplex::v(int p, int q) const {
    auto it = dv.find({p, q});
    return it == dv.end() ? PolyMat(rank(p, q + 1), rank(p, q)) : it->second;
}

std::vector<Key2> DoubleComplex::support() const {
    std::vector<Key2> r;
    for (auto [k, n] : ranks)
        if (n > 0) r.push_back(k);
    return r;
}

FreeComplex DoubleComplex::column(int p) const {
    FreeComplex c;
    c.flavor = flavor;
    for (auto [k, n] : ranks)
        if (k.first == p && n > 0) c.ranks[k.second] = n;
    for (auto [q, n] : c.ranks)
        if (rank(p, q + 1) > 0) c.diff[q] = v(p, q);
    return c;
}

FreeComplex DoubleComplex::row(int q) const {
    FreeComplex c;
    c.flavor = flavor;
    for (auto [k, n] : ranks)
        if (k.second == q && n > 0) c.ranks[k.first] = n;
    for (auto [p, n] : c.ranks)
        if (rank(p + 1, q) > 0) c.diff[p] = h(p, q);
    return c;
}

int TripleComplex::rank(const Key3& k) const {
    auto it = ranks.find(k);
    return it == ranks.end() ? 0 : it->second;
}

static Key3 step(const Key3& k, int axis) {
    Key3 r = k;
    ++r[axis];
    return r;
}

PolyMat TripleComplex::d(int axis, const Key3& k) const {
    const auto& m = axis == 0 ? dx : axis == 1 ? dy : dz;
    auto it = m.find(k);
    return it == m.end() ? PolyMat(rank(step(k, axis)), rank(k)) : it->second;
}

std::vector<Key3> TripleComplex::support() const {
    std::vector<Key3> r;
    for (const auto& [k, n] : ranks)
        if (n > 0) r.push_back(k);
    return r;
}

FreeComplex TripleComplex::zcolumn(int x, int y) const {
    FreeComplex c;
    c.flavor = flavor;
    for (const auto& [k, n] : ranks)
        if (k[0] == x && k[1] == y && n > 0) c.ranks[k[2]] = n;
    for (auto [z, n] : c.ranks)
        if (rank({x, y, z + 1}) > 0) c.diff[z] = d(2, {x, y, z});
    return c;
}

static void expect_zero(ValidationReport& rep, const PolyMat& m, const std::string& what) {
    if (!m.is_zero()) {
        rep.ok = false;
        rep.problems.push_back(what);
    }
}

ValidationReport check_double(const DoubleComplex& dc) {
    ValidationReport rep;
    for (auto [k, n] : dc.ranks) {
        auto [p, q] = k;
        std::string at = " at (" + std::to_string(p) + "," + std::to_string(q) + ")";
        expect_zero(rep, dc.h(p + 1, q) * dc.h(p, q), "d_h d_h" + at);
        expect_zero(rep, dc.v(p, q + 1) * dc.v(p, q), "d_v d_v" + at);
        expect_zero(rep, dc.h(p, q + 1) * dc.v(p, q) + dc.v(p + 1, q) * dc.h(p, q), "d_h d_v + d_v d_h" + at);
    }
    return rep;
}

ValidationReport check_triple(const TripleComplex& tc) {
    ValidationReport rep;
    for (const auto& [k, n] : tc.ranks) {
        std::string at = " at (" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "," + std::to_string(k[2]) + ")";
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) {
                PolyMat a = tc.d(j, step(k, i)) * tc.d(i, k);
                if (i != j) a += tc.d(i, step(k, j)) * tc.d(j, k);
                expect_zero(rep, a, "d_" + std::to_string(i) + " d_" + std::to_string(j) + at);
            }
    }
    return rep;
}

namespace {

// generic totalisation: cells of total degree n in the given order, with
// outgoing components listed by comps(cell)
template <class K>
FreeComplex assemble(const RingFlavor& flavor, const std::map<int, std::vector<K>>& layout,
                     const std::function<int(const K&)>& rank,
                     const std::function<std::vector<std::pair<K, PolyMat>>(const K&)>& comps) {
    FreeComplex c;
    c.flavor = flavor;
    std::map<int, std::map<K, int>> offset;
    for (const auto& [n, cells] : layout) {
        int off = 0;
        for (const K& k : cells) {
            offset[n][k] = off;
            off += rank(k);
        }
        if (off > 0) c.ranks[n] = off;
    }
    for (const auto& [n, cells] : layout) {
        if (c.rank(n) == 0 || c.rank(n + 1) == 0) continue;
        PolyMat d(c.rank(n + 1), c.rank(n));
        for (const K& k : cells)
            for (const auto& [t, m] : comps(k)) {
                auto it = offset[n + 1].find(t);
                if (it == offset[n + 1].end()) continue;
                d.put(it->second, offset[n][k], m);
            }
        c.diff[n] = std::move(d);
    }
    return c;
}

}  // namespace

static std::map<int, std::vector<Key2>> layout2(const DoubleComplex& dc) {
    std::map<int, std::vector<Key2>> lay;
    for (const Key2& k : dc.support()) lay[k.first + k.second].push_back(k);
    return lay;
}

FreeComplex tot_sum(const DoubleComplex& dc) {
    return assemble<Key2>(
        dc.flavor, layout2(dc), [&](const Key2& k) { return dc.rank(k.first, k.second); },
        [&](const Key2& k) {
            auto [p, q] = k;
            return std::vector<std::pair<Key2, PolyMat>>{{{p + 1, q}, dc.h(p, q)}, {{p, q + 1}, dc.v(p, q)}};
        });
}

int tot_offset(const DoubleComplex& dc, int p, int n) {
    int off = 0;
    auto lay = layout2(dc);
    for (const Key2& k : lay[n]) {
        if (k.first == p) return off;
        off += dc.rank(k.first, k.second);
    }
    return off;
}

static FreeComplex tot3(const TripleComplex& tc, const std::function<bool(const Key3&, const Key3&)>& less) {
    std::map<int, std::vector<Key3>> lay;
    for (const Key3& k : tc.support()) lay[k[0] + k[1] + k[2]].push_back(k);
    for (auto& [n, v] : lay) std::sort(v.begin(), v.end(), less);
    return assemble<Key3>(
        tc.flavor, lay, [&](const Key3& k) { return tc.rank(k); },
        [&](const Key3& k) {
            std::vector<std::pair<Key3, PolyMat>> r;
            for (int a = 0; a < 3; ++a) r.emplace_back(step(k, a), tc.d(a, k));
            return r;
        });
}

FreeComplex tot_sum(const TripleComplex& tc) {
    return tot3(tc, [](const Key3& a, const Key3& b) {
        return std::make_pair(a[0] + a[1], a[0]) < std::make_pair(b[0] + b[1], b[0]);
    });
}

DoubleComplex partial_tot_xy(const TripleComplex& tc) {
    DoubleComplex dc;
    dc.flavor = tc.flavor;
    // cells of (p,q) ordered by x ascending
    std::map<Key2, std::vector<Key3>> cells;
    for (const Key3& k : tc.support()) cells[{k[0] + k[1], k[2]}].push_back(k);
    for (auto& [pq, v] : cells) {
        std::sort(v.begin(), v.end());
        int r = 0;
        for (const Key3& k : v) r += tc.rank(k);
        dc.ranks[pq] = r;
    }
    auto offset_in = [&](const Key2& pq, const Key3& k) {
        int off = 0;
        for (const Key3& c : cells[pq]) {
            if (c == k) return off;
            off += tc.rank(c);
        }
        return -1;
    };
    for (const auto& [pq, v] : cells) {
        auto [p, q] = pq;
        PolyMat h(dc.rank(p + 1, q), dc.rank(p, q));
        PolyMat vv(dc.rank(p, q + 1), dc.rank(p, q));
        for (const Key3& k : v) {
            int src = offset_in(pq, k);
            for (int a = 0; a < 2; ++a) {
                Key3 t = step(k, a);
                if (tc.rank(t) == 0) continue;
                h.put(offset_in({p + 1, q}, t), src, tc.d(a, k));
            }
            Key3 t = step(k, 2);
            if (tc.rank(t) > 0) vv.put(offset_in({p, q + 1}, t), src, tc.d(2, k));
        }
        if (h.rows() > 0) dc.dh[pq] = h;
        if (vv.rows() > 0) dc.dv[pq] = vv;
    }
    return dc;
}

FreeComplex truncated_tot(const DoubleComplex& dc, Side, int plo, int phi) {
    if (plo > phi) throw WindowTooSmall("empty column window");
    DoubleComplex w;
    w.flavor = dc.flavor;
    for (auto [k, n] : dc.ranks)
        if (k.first >= plo && k.first <= phi) w.ranks[k] = n;
    for (auto [k, n] : w.ranks) {
        w.dv[k] = dc.v(k.first, k.second);
        if (k.first < phi) w.dh[k] = dc.h(k.first, k.second);
    }
    return tot_sum(w);
}

FreeComplex truncated_tot_blt(const TripleComplex& tc, int k, int K) {
    if (k > K) throw WindowTooSmall("empty blt window");
    TripleComplex w;
    w.flavor = tc.flavor;
    for (const auto& [key, n] : tc.ranks)
        if (key[0] >= k && key[0] <= K && key[1] >= k && key[1] <= K) w.ranks[key] = n;
    for (const auto& [key, n] : w.ranks) {
        w.dz[key] = tc.d(2, key);
        if (key[0] < K) w.dx[key] = tc.d(0, key);
        if (key[1] < K) w.dy[key] = tc.d(1, key);
    }
    return tot3(w, [](const Key3& a, const Key3& b) { return a < b; });
}

Vec mat_apply(const PolyMat& m, const Vec& v) {
    if (m.cols() != int(v.size())) throw ShapeMismatch("matrix-vector product");
    Vec r(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero() && !v[j].is_zero()) r[i] += m(i, j) * v[j];
    return r;
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw ShapeMismatch("vector sum");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw ShapeMismatch("vector difference");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

bool vec_is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const LaurentPoly& p) { return p.is_zero(); });
}

template <class Map, class Key>
static Vec get_or_zero(const Map& m, const Key& k, int size) {
    auto it = m.find(k);
    if (it == m.end()) return Vec(size);
    if (int(it->second.size()) != size) throw ShapeMismatch("cochain component size");
    return it->second;
}

LtCochain lt_differential(const DoubleComplex& dc, int n, const LtCochain& a, int plo, int phi) {
    LtCochain r;
    for (int p = plo; p <= phi; ++p) {
        int q = n + 1 - p;
        if (dc.rank(p, q) == 0) continue;
        Vec out = mat_apply(dc.v(p, q - 1), get_or_zero(a, p, dc.rank(p, q - 1)));
        if (p > plo) out = vec_add(out, mat_apply(dc.h(p - 1, q), get_or_zero(a, p - 1, dc.rank(p - 1, q))));
        r[p] = out;
    }
    return r;
}

BltCochain blt_differential(const TripleComplex& tc, int n, const BltCochain& a, int k, int K) {
    BltCochain r;
    for (int p = k; p <= K; ++p)
        for (int q = k; q <= K; ++q) {
            int z = n + 1 - p - q;
            if (tc.rank({p, q, z}) == 0) continue;
            Vec out = mat_apply(tc.d(2, {p, q, z - 1}), get_or_zero(a, Key2{p, q}, tc.rank({p, q, z - 1})));
            if (p > k)
                out = vec_add(out, mat_apply(tc.d(0, {p - 1, q, z}), get_or_zero(a, Key2{p - 1, q}, tc.rank({p - 1, q, z}))));
            if (q > k)
                out = vec_add(out, mat_apply(tc.d(1, {p, q - 1, z}), get_or_zero(a, Key2{p, q - 1}, tc.rank({p, q - 1, z}))));
            r[{p, q}] = out;
        }
    return r;
}

template <class C>
static bool cochain_equal(const C& a, const C& b) {
    std::set<typename C::key_type> keys;
    for (const auto& [k, v] : a) keys.insert(k);
    for (const auto& [k, v] : b) keys.insert(k);
    for (const auto& k : keys) {
        auto ia = a.find(k), ib = b.find(k);
        bool za = ia == a.end() || vec_is_zero(ia->second);
        bool zb = ib == b.end() || vec_is_zero(ib->second);
        if (za && zb) continue;
        if (za != zb || ia->second != ib->second) return false;
    }
    return true;
}

static PolyMat contraction_at(const std::map<int, PolyMat>& s, int q, int rows, int cols) {
    auto it = s.find(q);
    if (it == s.end()) {
        if (rows > 0 && cols > 0) throw ShapeMismatch("missing contraction in degree " + std::to_string(q));
        return PolyMat(rows, cols);
    }
    return it->second;
}

LtCochain contract_lt(const DoubleComplex& dc, const ColumnContractions& s, int n, const LtCochain& m, int plo,
                      int phi) {
    for (const auto& [p, v] : m)
        if ((p < plo || p > phi) && !vec_is_zero(v)) throw MarginExceeded("cocycle component outside the window");
    for (const auto& [p, v] : lt_differential(dc, n, m, plo, phi))
        if (!vec_is_zero(v)) throw NotInKernel("not a cocycle");
    LtCochain b;
    static const std::map<int, PolyMat> none;
    for (int p = plo; p <= phi; ++p) {
        int q = n - p;
        if (dc.rank(p, q - 1) == 0) continue;
        Vec r = get_or_zero(m, p, dc.rank(p, q));
        if (p > plo) r = vec_sub(r, mat_apply(dc.h(p - 1, q), get_or_zero(b, p - 1, dc.rank(p - 1, q))));
        auto sp = s.find(p);
        PolyMat sq = contraction_at(sp == s.end() ? none : sp->second, q, dc.rank(p, q - 1), dc.rank(p, q));
        b[p] = mat_apply(sq, r);
    }
    if (!cochain_equal(lt_differential(dc, n - 1, b, plo, phi), m))
        throw NotInKernel("column data is not a contraction");
    return b;
}

BltCochain contract_blt(const TripleComplex& tc, const ZContractions& s, int n, const BltCochain& m, int k, int K) {
    for (const auto& [pq, v] : m)
        if ((pq.first < k || pq.first > K || pq.second < k || pq.second > K) && !vec_is_zero(v))
            throw MarginExceeded("cocycle component outside the window");
    for (const auto& [pq, v] : blt_differential(tc, n, m, k, K))
        if (!vec_is_zero(v)) throw NotInKernel("not a cocycle");
    BltCochain b;
    static const std::map<int, PolyMat> none;
    auto solve_at = [&](int p, int q) {
        int z = n - p - q;
        if (tc.rank({p, q, z - 1}) == 0) return;
        Vec r = get_or_zero(m, Key2{p, q}, tc.rank({p, q, z}));
        if (p > k)
            r = vec_sub(r, mat_apply(tc.d(0, {p - 1, q, z}), get_or_zero(b, Key2{p - 1, q}, tc.rank({p - 1, q, z}))));
        if (q > k)
            r = vec_sub(r, mat_apply(tc.d(1, {p, q - 1, z}), get_or_zero(b, Key2{p, q - 1}, tc.rank({p, q - 1, z}))));
        auto it = s.find({p, q});
        PolyMat sz = contraction_at(it == s.end() ? none : it->second, z, tc.rank({p, q, z - 1}), tc.rank({p, q, z}));
        b[{p, q}] = mat_apply(sz, r);
    };
    // corner first, then the two boundary rays, then diagonal sweeps
    solve_at(k, k);
    for (int l = 1; k + l <= K; ++l) {
        solve_at(k + l, k);
        solve_at(k, k + l);
    }
    for (int j = k + 1; j <= K; ++j) {
        solve_at(j, j);
        for (int l = 1; j + l <= K; ++l) {
            solve_at(j + l, j);
            solve_at(j, j + l);
        }
    }
    if (!cochain_equal(blt_differential(tc, n - 1, b, k, K), m))
        throw NotInKernel("z-direction data is not a contraction");
    return b;
}

PolyMat TriangularStructure::block(int q, int l, int k) const {
    auto offs = [&](int deg, int p) {
        int o = 0;
        auto it = sizes.find(deg);
        for (int i = 1; i < p; ++i) o += it == sizes.end() ? 0 : it->second[i - 1];
        return o;
    };
    auto sz = [&](int deg, int p) {
        auto it = sizes.find(deg);
        return it == sizes.end() ? 0 : it->second[p - 1];
    };
    return complex.d(q).block(offs(q + 1, l), offs(q, k), sz(q + 1, l), sz(q, k));
}

bool TriangularStructure::is_lower_triangular() const {
    for (int q : complex.degrees()) {
        int total = 0;
        auto it = sizes.find(q);
        if (it == sizes.end() || int(it->second.size()) != n) return false;
        for (int s : it->second) total += s;
        if (total != complex.rank(q)) return false;
    }
    for (int q : complex.degrees())
        for (int k = 1; k <= n; ++k)
            for (int l = 1; l < k; ++l)
                if (!block(q, l, k).is_zero()) return false;
    return true;
}

std::vector<FiltrationStep> triangular_filtration(const TriangularStructure& ts) {
    if (!ts.is_lower_triangular()) throw ShapeMismatch("not a lower triangular structure");
    const FreeComplex& C = ts.complex;
    auto sz = [&](int q, int p) {
        auto it = ts.sizes.find(q);
        return it == ts.sizes.end() ? 0 : it->second[p - 1];
    };
    auto offs = [&](int q, int p) {
        int o = 0;
        for (int i = 1; i < p; ++i) o += sz(q, i);
        return o;
    };
    std::vector<FiltrationStep> out;
    for (int k = 1; k <= ts.n; ++k) {
        FiltrationStep st;
        st.sub.flavor = st.quotient.flavor = C.flavor;
        for (int q : C.degrees()) {
            int r = C.rank(q) - offs(q, k);
            if (r > 0) st.sub.ranks[q] = r;
            if (sz(q, k) > 0) st.quotient.ranks[q] = sz(q, k);
        }
        for (int q : C.degrees()) {
            if (st.sub.rank(q + 1) > 0 && st.sub.rank(q) > 0)
                st.sub.diff[q] = C.d(q).block(offs(q + 1, k), offs(q, k), st.sub.rank(q + 1), st.sub.rank(q));
            if (st.quotient.rank(q + 1) > 0 && st.quotient.rank(q) > 0) st.quotient.diff[q] = ts.block(q, k, k);
        }
        st.inclusion = ChainMap{st.sub, C, {}};
        st.projection = ChainMap{st.sub, st.quotient, {}};
        for (int q : C.degrees()) {
            PolyMat inc(C.rank(q), st.sub.rank(q));
            for (int i = 0; i < st.sub.rank(q); ++i) inc(offs(q, k) + i, i) = 1;
            st.inclusion.mats[q] = inc;
            PolyMat pr(st.quotient.rank(q), st.sub.rank(q));
            for (int i = 0; i < st.quotient.rank(q); ++i) pr(i, i) = 1;
            st.projection.mats[q] = pr;
        }
        out.push_back(std::move(st));
    }
    return out;
}

ChainMap augment(const FreeComplex& c, const DoubleComplex& e, const std::map<int, PolyMat>& h) {
    for (const Key2& k : e.support())
        if (k.first < 0 || k.second < 0) throw ShapeMismatch("double complex is not first quadrant");
    FreeComplex tot = tot_sum(e);
    ChainMap f{c, tot, {}};
    auto H = [&](int q) {
        auto it = h.find(q);
        return it == h.end() ? PolyMat(e.rank(0, q), c.rank(q)) : it->second;
    };
    std::vector<int> deg = c.degrees();
    int sign = 1;
    for (int q : deg) {
        if (q < 0) throw ShapeMismatch("complex has negative degrees");
        PolyMat hq = H(q);
        if (hq.rows() != e.rank(0, q) || hq.cols() != c.rank(q)) throw ShapeMismatch("h in degree " + std::to_string(q));
        if (!(e.h(0, q) * hq).is_zero()) throw ShapeMismatch("h followed by d_h is nonzero in degree " + std::to_string(q));
        PolyMat m(tot.rank(q), c.rank(q));
        m.put(tot_offset(e, 0, q), 0, hq.scaled(LaurentPoly(sign)));
        f.mats[q] = m;
        // sign relating the two composites C^q -> E^{0,q+1}
        PolyMat a = e.v(0, q) * hq;
        PolyMat b = H(q + 1) * c.d(q);
        if (!(a == b)) {
            if (!(a == -b)) throw ShapeMismatch("composites do not agree up to sign in degree " + std::to_string(q));
            sign = -sign;
        }
    }
    return f;
}

}  // namespace nov
