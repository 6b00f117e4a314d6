#include "novikov/square.hpp"

#include <algorithm>
#include <set>

namespace nov {

namespace {

RingFlavor face_ring(Face f) { return f == Face::S ? RingFlavor::laurent() : RingFlavor::face_algebra(f); }

LaurentPoly mono(Monomial m) { return LaurentPoly::mono(m.ex, m.ey); }

Monomial times(int k, Monomial m) { return {k * m.ex, k * m.ey}; }

PolyMat scalar(int r, const LaurentPoly& p) { return PolyMat::identity(r).scaled(p); }

int vertex_index(Face v) {
    for (int i = 0; i < 4; ++i)
        if (kVertices[i] == v) return i;
    return -1;
}

std::set<int> all_degrees(const SquareDiagram& d) {
    std::set<int> s;
    for (const auto& [f, c] : d.values)
        for (int n : c.degrees()) s.insert(n);
    return s;
}

}  // namespace

ChainMap SquareDiagram::s(Face f, Face g) const {
    if (f == g) return identity_map(values.at(f));
    auto it = maps.find({f, g});
    if (it == maps.end()) throw NotIncident(face_name(f) + " is not contained in " + face_name(g));
    return it->second;
}

int SquareDiagram::k(int j) const {
    auto it = twist.find(j);
    return it == twist.end() ? 0 : it->second;
}

ValidationReport check_diagram(const SquareDiagram& d) {
    ValidationReport rep;
    auto fail = [&](const std::string& s) {
        rep.ok = false;
        rep.problems.push_back(s);
    };
    for (const auto& [f, c] : d.values) {
        ValidationReport r = validate(c);
        for (const auto& p : r.problems) fail(face_name(f) + ": " + p);
    }
    for (const auto& [fg, m] : d.maps) {
        std::string name = "s(" + face_name(fg.first) + "," + face_name(fg.second) + ")";
        if (!is_chain_map(m)) fail(name + " is not a chain map");
        RingFlavor ring = face_ring(fg.first);
        for (const auto& [n, a] : m.mats)
            for (int i = 0; i < a.rows(); ++i)
                for (int j = 0; j < a.cols(); ++j)
                    if (!contains(d.values.at(fg.second).flavor, a(i, j)))
                        fail(name + " has an entry outside " + d.values.at(fg.second).flavor.name());
        (void)ring;
    }
    for (Face f : kFaces)
        for (Face g : kFaces)
            for (Face h : kFaces) {
                if (f == g || g == h || !face_leq(f, g) || !face_leq(g, h)) continue;
                ChainMap lhs = compose(d.s(g, h), d.s(f, g));
                ChainMap rhs = d.s(f, h);
                for (int n : all_degrees(d))
                    if (!(lhs.at(n) == rhs.at(n)))
                        fail("functoriality fails for " + face_name(f) + " < " + face_name(g) + " < " + face_name(h));
            }
    return rep;
}

SquareDiagram diagram_Dk(int k) {
    SquareDiagram d;
    d.twist[0] = k;
    for (Face f : kFaces) {
        FreeComplex c;
        c.flavor = face_ring(f);
        c.ranks[0] = 1;
        d.values[f] = c;
    }
    for (Face f : kFaces)
        for (Face g : kFaces)
            if (f != g && face_leq(f, g))
                d.maps[{f, g}] = ChainMap{d.values[f], d.values[g], {{0, PolyMat{{mono(times(-k, monomial_m(f, g)))}}}}};
    return d;
}

Extension extend(const FreeComplex& c) {
    Extension e;
    SquareDiagram& Y = e.Y;
    std::vector<int> deg = c.degrees();
    for (Face f : kFaces) {
        FreeComplex v;
        v.flavor = face_ring(f);
        Y.values[f] = v;
    }
    if (deg.empty()) return e;
    int lo = deg.front(), hi = deg.back();
    e.k[lo] = 0;
    for (int t = lo; t < hi; ++t) {
        PolyMat d = c.d(t);
        auto fits = [&](int s) {
            for (Face f : kFaces) {
                if (f == Face::S) continue;
                Monomial m = times(s, monomial_m(f, Face::S));
                for (int i = 0; i < d.rows(); ++i)
                    for (int j = 0; j < d.cols(); ++j)
                        for (const auto& [u, a] : d(i, j).terms())
                            if (!contains_monomial(face_ring(f), u + m)) return false;
            }
            return true;
        };
        int s = -e.k[t];
        while (!fits(s)) ++s;
        e.k[t + 1] = e.k[t] + s;
    }
    Y.twist = e.k;
    for (Face f : kFaces) {
        FreeComplex& v = Y.values[f];
        v.ranks = c.ranks;
        v.normalize();
        for (int t = lo; t < hi; ++t) {
            if (c.rank(t) == 0 || c.rank(t + 1) == 0) continue;
            LaurentPoly m = mono(times(e.k[t + 1] - e.k[t], monomial_m(f, Face::S)));
            v.diff[t] = c.d(t).scaled(m);
        }
    }
    for (Face f : kFaces)
        for (Face g : kFaces) {
            if (f == g || !face_leq(f, g)) continue;
            ChainMap s{Y.values[f], Y.values[g], {}};
            for (int t : deg) s.mats[t] = scalar(c.rank(t), mono(times(-e.k[t], monomial_m(f, g))));
            Y.maps[{f, g}] = s;
        }
    return e;
}

int IncidencePoset::incidence(int a, int b) const {
    auto it = inc.find({a, b});
    return it == inc.end() ? 0 : it->second;
}

IncidencePoset face_poset() {
    IncidencePoset p;
    int n = int(kFaces.size());
    p.less.assign(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a) {
        p.names.push_back(face_name(kFaces[a]));
        p.degree.push_back(face_dim(kFaces[a]));
        for (int b = 0; b < n; ++b) {
            if (a == b || !face_leq(kFaces[a], kFaces[b])) continue;
            p.less[a][b] = true;
            if (face_dim(kFaces[b]) == face_dim(kFaces[a]) + 1) p.inc[{a, b}] = incidence(kFaces[a], kFaces[b]);
        }
    }
    return p;
}

std::vector<std::vector<Face>> nerve_flags(Face f) {
    std::vector<Face> st = star(f);
    std::vector<std::vector<Face>> out;
    int n = int(st.size());
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<Face> flag;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) flag.push_back(st[i]);
        std::sort(flag.begin(), flag.end(), [](Face a, Face b) { return face_dim(a) < face_dim(b); });
        bool chain = true;
        for (std::size_t i = 0; i + 1 < flag.size(); ++i)
            if (face_dim(flag[i]) == face_dim(flag[i + 1]) || !face_leq(flag[i], flag[i + 1])) chain = false;
        if (chain) out.push_back(flag);
    }
    auto index = [](Face a) { return int(std::find(kFaces.begin(), kFaces.end(), a) - kFaces.begin()); };
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return index(a[i]) < index(b[i]);
        return false;
    });
    return out;
}

IncidencePoset nerve_poset(Face f) {
    auto flags = nerve_flags(f);
    IncidencePoset p;
    int n = int(flags.size());
    p.less.assign(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a) {
        p.names.push_back(nerve_label(flags[a]));
        p.degree.push_back(int(flags[a].size()) - 1);
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const auto& x = flags[a];
            const auto& y = flags[b];
            if (x.size() >= y.size()) continue;
            bool sub = std::includes(y.begin(), y.end(), x.begin(), x.end(),
                                     [](Face u, Face v) { return face_dim(u) < face_dim(v); });
            if (!sub) continue;
            p.less[a][b] = true;
            if (y.size() == x.size() + 1)
                for (std::size_t i = 0; i < y.size(); ++i) {
                    std::vector<Face> di = y;
                    di.erase(di.begin() + long(i));
                    if (di == x) p.inc[{a, b}] = (i % 2 == 0) ? 1 : -1;
                }
        }
    return p;
}

void check_incidence(const IncidencePoset& p) {
    int n = p.size();
    for (const auto& [ab, v] : p.inc)
        if (v != 0 && (!p.less[ab.first][ab.second] || p.degree[ab.second] != p.degree[ab.first] + 1))
            throw IncidenceViolation("DI1 fails at " + p.names[ab.first] + " : " + p.names[ab.second]);
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) {
            if (!p.less[a][c] || p.degree[c] != p.degree[a] + 2) continue;
            int sum = 0;
            for (int b = 0; b < n; ++b)
                if (p.less[a][b] && p.less[b][c]) sum += p.incidence(a, b) * p.incidence(b, c);
            if (sum != 0) throw IncidenceViolation("DI2 fails at " + p.names[a] + " < " + p.names[c]);
        }
    int base = n ? *std::min_element(p.degree.begin(), p.degree.end()) : 0;
    for (int c = 0; c < n; ++c) {
        if (p.degree[c] != base + 1) continue;
        int sum = 0;
        for (int b = 0; b < n; ++b)
            if (p.less[b][c]) sum += p.incidence(b, c);
        if (sum != 0) throw IncidenceViolation("DI3 fails at " + p.names[c]);
    }
}

DoubleComplex cech_double(const SquareDiagram& d) {
    DoubleComplex D;
    D.flavor = RingFlavor::laurent();
    std::set<int> deg = all_degrees(d);
    auto val = [&](Face f) -> const FreeComplex& { return d.values.at(f); };
    for (int i = 0; i <= 2; ++i)
        for (int j : deg) {
            int r = 0;
            for (Face f : faces_of_dim(i)) r += val(f).rank(j);
            if (r > 0) D.ranks[{i, j}] = r;
        }
    for (int i = 0; i <= 2; ++i)
        for (int j : deg) {
            if (D.rank(i, j) == 0) continue;
            auto src = faces_of_dim(i);
            if (i < 2 && D.rank(i + 1, j) > 0) {
                auto dst = faces_of_dim(i + 1);
                PolyMat h(D.rank(i + 1, j), D.rank(i, j));
                int r0 = 0;
                for (Face g : dst) {
                    int c0 = 0;
                    for (Face f : src) {
                        if (face_leq(f, g)) h.put(r0, c0, d.s(f, g).at(j).scaled(LaurentPoly(incidence(f, g))));
                        c0 += val(f).rank(j);
                    }
                    r0 += val(g).rank(j);
                }
                D.dh[{i, j}] = h;
            }
            if (D.rank(i, j + 1) > 0) {
                PolyMat v(D.rank(i, j + 1), D.rank(i, j));
                int r0 = 0, c0 = 0;
                for (Face f : src) {
                    PolyMat df = val(f).d(j);
                    v.put(r0, c0, i % 2 == 0 ? df : -df);
                    r0 += val(f).rank(j + 1);
                    c0 += val(f).rank(j);
                }
                D.dv[{i, j}] = v;
            }
        }
    return D;
}

FreeComplex cech(const SquareDiagram& d) { return tot_sum(cech_double(d)); }

GradedPiece graded_piece(const GradedModel& m, Monomial deg) {
    GradedPiece g;
    g.complex.flavor = RingFlavor::integers();
    for (const auto& [n, basis] : m.basis) {
        std::vector<int>& on = g.on[n];
        for (int i = 0; i < int(basis.size()); ++i)
            if (contains_monomial(basis[i].ring, deg - basis[i].shift)) on.push_back(i);
        if (!on.empty()) g.complex.ranks[n] = int(on.size());
    }
    for (const auto& [n, basis] : m.basis) {
        auto nx = m.basis.find(n + 1);
        if (nx == m.basis.end()) continue;
        PolyMat d = m.complex.d(n);
        const auto& on_s = g.on[n];
        const auto& on_t = g.on[n + 1];
        PolyMat piece(int(on_t.size()), int(on_s.size()));
        std::set<int> on_target(on_t.begin(), on_t.end());
        for (int b = 0; b < int(on_s.size()); ++b) {
            int col = on_s[b];
            for (int a = 0; a < d.rows(); ++a) {
                const LaurentPoly& e = d(a, col);
                if (e.is_zero()) continue;
                Monomial want = basis[col].shift - nx->second[a].shift;
                if (!e.is_monomial() || e.terms().begin()->first != want)
                    throw ShapeMismatch("entry " + e.str() + " is not homogeneous in degree " + std::to_string(n));
                if (!on_target.count(a))
                    throw NotAnElement("map leaves the ring of " + nx->second[a].label);
                int row = int(std::lower_bound(on_t.begin(), on_t.end(), a) - on_t.begin());
                piece(row, b) = e.terms().begin()->second;
            }
        }
        if (!piece.empty()) g.complex.diff[n] = piece;
    }
    return g;
}

WindowVerdict graded_scan(const GradedModel& m, int radius,
                          const std::function<std::map<int, int>(Monomial)>& expected) {
    return window_exact(
        -radius, radius, [&](Monomial deg) { return graded_piece(m, deg).complex; }, expected);
}

RowMatrices augmented_row_matrices(int k) {
    RowMatrices r{PolyMat(4, 1), PolyMat(4, 4), PolyMat(1, 4)};
    for (int i = 0; i < 4; ++i) r.dm1(i, 0) = mono(times(-k, monomial_m(Face::Empty, kVertices[i])));
    for (int e = 0; e < 4; ++e) {
        for (int v = 0; v < 4; ++v)
            if (face_leq(kVertices[v], kEdges[e]))
                r.d0(e, v) = mono(times(-k, monomial_m(kVertices[v], kEdges[e])))
                                 .scaled(incidence(kVertices[v], kEdges[e]));
        r.d1(0, e) = mono(times(-k, monomial_m(kEdges[e], Face::S)));
    }
    return r;
}

std::vector<Monomial> lattice_points(int k) {
    std::vector<Monomial> r;
    for (int j = -k; j <= k; ++j)
        for (int i = -k; i <= k; ++i) r.push_back({i, j});
    return r;
}

GradedModel cech_row(int k) {
    RowMatrices rm = augmented_row_matrices(k);
    GradedModel m;
    m.complex.ranks = {{0, 4}, {1, 4}, {2, 1}};
    m.complex.diff[0] = rm.d0;
    m.complex.diff[1] = rm.d1;
    for (Face v : kVertices) m.basis[0].push_back({face_ring(v), times(k, barycentre(v)), face_name(v)});
    for (Face e : kEdges) m.basis[1].push_back({face_ring(e), times(k, barycentre(e)), face_name(e)});
    m.basis[2].push_back({face_ring(Face::S), {}, face_name(Face::S)});
    return m;
}

GradedModel augmented_row(int k) {
    GradedModel m = cech_row(k);
    auto pts = lattice_points(k);
    m.complex.ranks[-1] = int(pts.size());
    PolyMat d(4, int(pts.size()));
    for (int v = 0; v < 4; ++v)
        for (int p = 0; p < int(pts.size()); ++p) d(v, p) = mono(pts[p] + times(-k, barycentre(kVertices[v])));
    m.complex.diff[-1] = d;
    for (Monomial p : pts)
        m.basis[-1].push_back({RingFlavor::integers(), p, "(" + std::to_string(p.ex) + "," + std::to_string(p.ey) + ")"});
    return m;
}

static Vec apply_row(const PolyMat& m, const Vec& v) { return mat_apply(m, v); }

Vec row_augment(const LaurentPoly& e, int k) {
    return apply_row(augmented_row_matrices(k).dm1, Vec{e});
}

Vec row_preimage(const Vec& e1, int k) {
    if (e1.size() != 4) throw ShapeMismatch("row_preimage expects four edge components");
    RowMatrices rm = augmented_row_matrices(k);
    for (int i = 0; i < 4; ++i)
        if (!contains(face_ring(kEdges[i]), e1[i]))
            throw NotInKernel(e1[i].str() + " is not in " + face_ring(kEdges[i]).name());
    if (!vec_is_zero(apply_row(rm.d1, e1))) throw NotInKernel("d1(e1) != 0");
    GradedModel row = cech_row(k);
    std::set<Monomial> degrees;
    for (int i = 0; i < 4; ++i)
        for (const auto& [u, c] : e1[i].terms()) degrees.insert(u + times(k, barycentre(kEdges[i])));
    Vec e0(4);
    for (Monomial deg : degrees) {
        GradedPiece g = graded_piece(row, deg);
        const auto& on0 = g.on[0];
        const auto& on1 = g.on[1];
        std::vector<BigInt> b;
        for (int i : on1) b.push_back(e1[i].coeff(deg - times(k, barycentre(kEdges[i]))));
        auto y = solve(to_int(g.complex.d(0)), b);
        if (!y) throw NotInKernel("no preimage in degree (" + std::to_string(deg.ex) + "," + std::to_string(deg.ey) + ")");
        for (std::size_t a = 0; a < on0.size(); ++a)
            if ((*y)[a] != 0)
                e0[on0[a]] += LaurentPoly::term((*y)[a], deg - times(k, barycentre(kVertices[on0[a]])));
    }
    if (!(apply_row(rm.d0, e0) == e1)) throw NotInKernel("graded preimage does not reproduce e1");
    return e0;
}

LaurentPoly row_kernel_to_lattice(const Vec& e0, int k) {
    if (e0.size() != 4) throw ShapeMismatch("row_kernel_to_lattice expects four vertex components");
    for (int i = 0; i < 4; ++i)
        if (!contains(face_ring(kVertices[i]), e0[i]))
            throw NotInKernel(e0[i].str() + " is not in " + face_ring(kVertices[i]).name());
    if (!vec_is_zero(apply_row(augmented_row_matrices(k).d0, e0))) throw NotInKernel("d0(e0) != 0");
    LaurentPoly e;
    for (const auto& [u, c] : e0[vertex_index(Face::v_bl)].terms()) {
        Monomial p{u.ex - k, u.ey - k};
        if (std::abs(p.ex) <= k && std::abs(p.ey) <= k) e.add_term(p, c);
    }
    if (!(row_augment(e, k) == e0)) throw NotInKernel("kernel element does not come from the lattice");
    return e;
}

BPrime build_Bprime(const FreeComplex& c) {
    BPrime b;
    b.ext = extend(c);
    const SquareDiagram& Y = b.ext.Y;
    auto K = [&](int t) { return Y.k(t); };
    auto L = [&](int t) { return (2 * K(t) + 1) * (2 * K(t) + 1); };
    FreeComplex& B = b.complex;
    B.flavor = RingFlavor::integers();
    for (int t : c.degrees()) B.ranks[t] = c.rank(t) * L(t);
    for (int t : c.degrees()) {
        if (c.rank(t + 1) == 0) continue;
        auto src = lattice_points(K(t));
        auto dst = lattice_points(K(t + 1));
        PolyMat d(B.rank(t + 1), B.rank(t));
        std::vector<PolyMat> dv;
        for (Face v : kVertices) dv.push_back(Y.values.at(v).d(t));
        for (int beta = 0; beta < c.rank(t); ++beta)
            for (int p = 0; p < int(src.size()); ++p) {
                int col = beta * L(t) + p;
                for (int beta2 = 0; beta2 < c.rank(t + 1); ++beta2) {
                    Vec e0(4);
                    for (int v = 0; v < 4; ++v)
                        e0[v] = dv[v](beta2, beta).shifted(src[p] + times(-K(t), barycentre(kVertices[v])));
                    LaurentPoly lat = row_kernel_to_lattice(e0, K(t + 1));
                    for (const auto& [q, a] : lat.terms()) {
                        int qi = int(std::find(dst.begin(), dst.end(), q) - dst.begin());
                        d(beta2 * L(t + 1) + qi, col) = LaurentPoly(a);
                    }
                }
            }
        B.diff[t] = d;
    }
    b.cech = cech_double(Y);
    FreeComplex tot = tot_sum(b.cech);
    b.chi = ChainMap{B, tot, {}};
    for (int t : c.degrees()) {
        PolyMat m(tot.rank(t), B.rank(t));
        int off = tot_offset(b.cech, 0, t);
        auto pts = lattice_points(K(t));
        for (int v = 0; v < 4; ++v)
            for (int beta = 0; beta < c.rank(t); ++beta)
                for (int p = 0; p < int(pts.size()); ++p)
                    m(off + v * c.rank(t) + beta, beta * L(t) + p) =
                        mono(pts[p] + times(-K(t), barycentre(kVertices[v])));
        b.chi.mats[t] = m;
    }
    return b;
}

NerveDiagram nerve_diagram(Face f) {
    NerveDiagram n;
    n.face = f;
    n.flags = nerve_flags(f);
    n.poset = nerve_poset(f);
    GradedModel& m = n.cech;
    std::map<int, std::vector<int>> by_dim;
    for (int i = 0; i < int(n.flags.size()); ++i) {
        int t = int(n.flags[i].size()) - 1;
        by_dim[t].push_back(i);
        m.basis[t].push_back({nerve_ring(n.flags[i]), {}, nerve_label(n.flags[i])});
    }
    for (const auto& [t, idx] : by_dim) m.complex.ranks[t] = int(idx.size());
    for (const auto& [t, idx] : by_dim) {
        auto nx = by_dim.find(t + 1);
        if (nx == by_dim.end()) continue;
        PolyMat d(int(nx->second.size()), int(idx.size()));
        for (int a = 0; a < int(nx->second.size()); ++a)
            for (int b = 0; b < int(idx.size()); ++b) d(a, b) = LaurentPoly(n.poset.incidence(idx[b], nx->second[a]));
        m.complex.diff[t] = d;
    }
    n.sigma = PolyMat(m.complex.rank(0), 1);
    for (int i = 0; i < n.sigma.rows(); ++i) n.sigma(i, 0) = 1;
    return n;
}

std::map<int, IntMat> nerve_lambda(Face f, Face g) {
    if (!face_leq(f, g)) throw NotIncident(face_name(f) + " is not contained in " + face_name(g));
    auto ff = nerve_flags(f), fg = nerve_flags(g);
    std::map<int, std::vector<int>> df, dg;
    for (int i = 0; i < int(ff.size()); ++i) df[int(ff[i].size()) - 1].push_back(i);
    for (int i = 0; i < int(fg.size()); ++i) dg[int(fg[i].size()) - 1].push_back(i);
    std::map<int, IntMat> r;
    for (const auto& [t, idx] : df) {
        const auto& tgt = dg[t];
        IntMat m(int(tgt.size()), int(idx.size()));
        for (int a = 0; a < int(tgt.size()); ++a)
            for (int b = 0; b < int(idx.size()); ++b)
                if (fg[tgt[a]] == ff[idx[b]]) m(a, b) = 1;
        r[t] = m;
    }
    return r;
}

DualCellular dual_cellular_W(const FreeComplex& c) {
    DualCellular out;
    FreeComplex& a = out.augmented;
    a.flavor = RingFlavor::integers();
    a.ranks = {{-1, 1}, {0, 4}, {1, 4}, {2, 1}};
    std::vector<Face> dims[3] = {faces_of_dim(0), faces_of_dim(1), faces_of_dim(2)};
    auto inc = [&](int p) {
        PolyMat m(int(dims[p + 1].size()), int(dims[p].size()));
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                if (face_leq(dims[p][j], dims[p + 1][i])) m(i, j) = incidence(dims[p][j], dims[p + 1][i]);
        return m;
    };
    PolyMat ones(4, 1);
    for (int i = 0; i < 4; ++i) ones(i, 0) = 1;
    a.diff[-1] = ones;
    a.diff[0] = inc(0);
    a.diff[1] = inc(1);

    DoubleComplex& W = out.W;
    W.flavor = c.flavor;
    for (int p = 0; p <= 2; ++p)
        for (int q : c.degrees()) W.ranks[{p, q}] = int(dims[p].size()) * c.rank(q);
    auto kron = [](const PolyMat& a, const PolyMat& b) {
        PolyMat m(a.rows() * b.rows(), a.cols() * b.cols());
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j)
                if (!a(i, j).is_zero()) m.put(i * b.rows(), j * b.cols(), b.scaled(a(i, j)));
        return m;
    };
    for (int p = 0; p <= 2; ++p)
        for (int q : c.degrees()) {
            int nf = int(dims[p].size());
            if (p < 2) W.dh[{p, q}] = kron(inc(p), PolyMat::identity(c.rank(q)));
            if (c.rank(q + 1) > 0)
                W.dv[{p, q}] = kron(PolyMat::identity(nf).scaled(LaurentPoly(p % 2 == 0 ? 1 : -1)), c.d(q));
        }
    std::map<int, PolyMat> h;
    for (int q : c.degrees()) h[q] = kron(ones, PolyMat::identity(c.rank(q))).scaled(LaurentPoly(q % 2 == 0 ? 1 : -1));
    out.map = augment(c, W, h);
    return out;
}

}  // namespace nov
