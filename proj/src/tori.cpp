#include "novikov/tori.hpp"

#include <array>
#include <functional>
#include <set>

namespace nov {

namespace {

using Grid = std::array<std::array<PolyMat, 4>, 4>;

PolyMat scalar(int r, const LaurentPoly& p) { return PolyMat::identity(r).scaled(p); }

std::vector<int> sizes4(const FreeComplex& c, int n) {
    return {c.rank(n + 2), c.rank(n + 1), c.rank(n + 1), c.rank(n)};
}

PolyMat assemble(const std::vector<int>& rows, const std::vector<int>& cols, const Grid& g) {
    std::vector<std::vector<PolyMat>> b(4, std::vector<PolyMat>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) b[i][j] = g[i][j];
    return block_matrix<LaurentPoly>(rows, cols, b);
}

std::set<int> span4(const FreeComplex& c) {
    std::set<int> s;
    for (int n : c.degrees())
        for (int k = 0; k <= 2; ++k) s.insert(n - k);
    return s;
}

// complex with modules C^{n+2} + C^{n+1} + C^{n+1} + C^n
FreeComplex four_block(const FreeComplex& c, const RingFlavor& fl, const std::function<Grid(int)>& grid) {
    FreeComplex t;
    t.flavor = fl;
    std::set<int> deg = span4(c);
    for (int n : deg) t.ranks[n] = c.rank(n + 2) + 2 * c.rank(n + 1) + c.rank(n);
    for (int n : deg)
        if (t.rank(n + 1) > 0) t.diff[n] = assemble(sizes4(c, n + 1), sizes4(c, n), grid(n));
    t.normalize();
    return t;
}

ChainMap four_block_map(const FreeComplex& cs, const FreeComplex& ct, const FreeComplex& s, const FreeComplex& t,
                        const std::function<Grid(int)>& grid) {
    ChainMap m{s, t, {}};
    std::set<int> deg = span4(cs);
    for (int n : span4(ct)) deg.insert(n);
    for (int n : deg) m.mats[n] = assemble(sizes4(ct, n), sizes4(cs, n), grid(n));
    return m;
}

void require_chain_map(const ChainMap& f, const char* name) {
    if (!is_chain_map(f)) throw HomotopyInvalid(std::string(name) + " is not a chain map");
}

void require_torus_data(const ChainMap& f, const ChainMap& g, const Homotopy& H) {
    require_chain_map(f, "f");
    require_chain_map(g, "g");
    if (!check_homotopy(H, compose(f, g), compose(g, f))) throw HomotopyInvalid("d H + H d != fg - gf");
}

Grid torus_grid(const FreeComplex& c, const ChainMap& f, const ChainMap& g, const Homotopy& H, int n, bool vars) {
    LaurentPoly X = vars ? LaurentPoly::x() : LaurentPoly();
    LaurentPoly Y = vars ? LaurentPoly::y() : LaurentPoly();
    Grid b;
    b[0][0] = c.d(n + 2);
    b[1][0] = -(g.at(n + 2) - scalar(c.rank(n + 2), X));
    b[1][1] = -c.d(n + 1);
    b[2][0] = f.at(n + 2) - scalar(c.rank(n + 2), Y);
    b[2][2] = -c.d(n + 1);
    b[3][0] = H.at(n + 2);
    b[3][1] = f.at(n + 1) - scalar(c.rank(n + 1), Y);
    b[3][2] = g.at(n + 1) - scalar(c.rank(n + 1), X);
    b[3][3] = c.d(n);
    return b;
}

FreeComplex torus_or_analogue(const ChainMap& f, const ChainMap& g, const Homotopy& H, bool vars) {
    require_torus_data(f, g, H);
    const FreeComplex& c = f.source;
    return four_block(c, vars ? RingFlavor::laurent() : c.flavor,
                      [&](int n) { return torus_grid(c, f, g, H, n, vars); });
}

Homotopy hom_sub(const Homotopy& a, const Homotopy& b) {
    Homotopy r{a.source, a.target, {}};
    std::set<int> deg;
    for (int n : a.source.degrees()) deg.insert(n);
    for (int n : b.source.degrees()) deg.insert(n);
    for (int n : deg) r.mats[n] = a.at(n) - b.at(n);
    return r;
}

}  // namespace

MappingTorus1 mapping_torus_1(const ChainMap& h, int plo, int phi) {
    require_chain_map(h, "h");
    const FreeComplex& c = h.source;
    FreeComplex cl = c;
    cl.flavor = RingFlavor::laurent();
    ChainMap m{cl, cl, {}};
    for (int n : c.degrees()) m.mats[n] = h.at(n) - scalar(c.rank(n), LaurentPoly::x());
    MappingTorus1 r;
    r.torus = cone(m);

    DoubleComplex& D = r.bicomplex;
    D.flavor = c.flavor;
    std::vector<int> deg = c.degrees();
    if (deg.empty() || plo > phi) return r;
    for (int p = plo; p <= phi; ++p)
        for (int n = deg.front() - 1; n <= deg.back(); ++n) D.ranks[{p, n - p}] = c.rank(n + 1) + c.rank(n);
    for (int p = plo; p <= phi; ++p)
        for (int n = deg.front() - 1; n <= deg.back(); ++n) {
            int q = n - p;
            std::vector<int> src{c.rank(n + 1), c.rank(n)}, dst{c.rank(n + 2), c.rank(n + 1)};
            if (p < phi)
                D.dh[{p, q}] = block_matrix<LaurentPoly>(dst, src, {{{}, {}}, {-PolyMat::identity(c.rank(n + 1)), {}}});
            if (D.rank(p, q + 1) > 0)
                D.dv[{p, q}] = block_matrix<LaurentPoly>(dst, src, {{-c.d(n + 1), {}}, {h.at(n + 1), c.d(n)}});
        }
    return r;
}

std::pair<ChainMap, ChainMap> torus1_isomorphism(const ChainMap& f, const ChainMap& g, const Homotopy& H) {
    if (!check_homotopy(H, f, g)) throw HomotopyInvalid("d H + H d != f - g");
    FreeComplex tf = mapping_torus_1(f).torus, tg = mapping_torus_1(g).torus;
    const FreeComplex& c = f.source;
    ChainMap fwd{tf, tg, {}}, back{tg, tf, {}};
    std::set<int> deg;
    for (int n : c.degrees()) {
        deg.insert(n);
        deg.insert(n - 1);
    }
    for (int n : deg) {
        std::vector<int> sz{c.rank(n + 1), c.rank(n)};
        PolyMat I1 = PolyMat::identity(c.rank(n + 1)), I0 = PolyMat::identity(c.rank(n));
        fwd.mats[n] = block_matrix<LaurentPoly>(sz, sz, {{I1, {}}, {H.at(n + 1), I0}});
        back.mats[n] = block_matrix<LaurentPoly>(sz, sz, {{I1, {}}, {-H.at(n + 1), I0}});
    }
    return {fwd, back};
}

FreeComplex mapping_torus_2(const ChainMap& f, const ChainMap& g, const Homotopy& H) {
    return torus_or_analogue(f, g, H, true);
}

FreeComplex analogue_A(const ChainMap& f, const ChainMap& g, const Homotopy& H) {
    return torus_or_analogue(f, g, H, false);
}

IteratedCone iterated_cone_square(const ChainMap& f, const ChainMap& g) {
    const FreeComplex& c = f.source;
    FreeComplex cf = cone(f);
    ChainMap G{cf, cf, {}};
    for (int n : cf.degrees()) G.mats[n] = direct_sum(g.at(n + 1), g.at(n));
    if (!is_chain_map(G)) throw HomotopyInvalid("f and g do not commute");
    IteratedCone r;
    r.complex = cone(G);
    FreeComplex A = analogue_A(f, g, Homotopy{c, c, {}});
    auto grid = [&](int n) {
        Grid b;
        b[0][0] = PolyMat::identity(c.rank(n + 2));
        b[1][2] = -PolyMat::identity(c.rank(n + 1));
        b[2][1] = -PolyMat::identity(c.rank(n + 1));
        b[3][3] = -PolyMat::identity(c.rank(n));
        return b;
    };
    r.to_A = four_block_map(c, c, r.complex, A, grid);
    r.from_A = four_block_map(c, c, A, r.complex, [&](int n) {
        Grid b = grid(n);
        Grid t;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) t[i][j] = b[j][i].transpose();
        return t;
    });
    return r;
}

Homotopy compose(const ChainMap& a, const Homotopy& h) {
    Homotopy r{h.source, a.target, {}};
    for (int n : h.source.degrees()) r.mats[n] = a.at(n - 1) * h.at(n);
    return r;
}

Homotopy compose(const Homotopy& h, const ChainMap& a) {
    Homotopy r{a.source, h.target, {}};
    for (int n : a.source.degrees()) r.mats[n] = h.at(n) * a.at(n);
    return r;
}

Homotopy commutator_homotopy(const ChainMap& f, const ChainMap& g, const Homotopy& A) {
    return hom_sub(compose(f, compose(A, g)), compose(g, compose(A, f)));
}

ChainMap comparison_phi(const ChainMap& f, const ChainMap& g, const ChainMap& h, const Homotopy& A, bool variables) {
    const FreeComplex& c = f.source;
    if (!(compose(f, g).mats == compose(g, f).mats)) throw HomotopyInvalid("f and g do not commute");
    if (!check_homotopy(A, h, identity_map(c))) throw HomotopyInvalid("d A + A d != h - id");
    Homotopy zero{c, c, {}};
    ChainMap hf = compose(h, f), hg = compose(h, g);
    Homotopy K = commutator_homotopy(f, g, A);
    Homotopy hK = compose(h, K);
    FreeComplex src = torus_or_analogue(f, g, zero, variables);
    FreeComplex dst = torus_or_analogue(hf, hg, hK, variables);
    Homotopy hgA = compose(hg, A), hfA = compose(hf, A);
    return four_block_map(c, c, src, dst, [&](int n) {
        Grid b;
        b[0][0] = h.at(n + 2);
        b[1][0] = -hgA.at(n + 2);
        b[1][1] = h.at(n + 1);
        b[2][0] = hfA.at(n + 2);
        b[2][2] = h.at(n + 1);
        b[3][0] = h.at(n) * K.at(n + 1) * A.at(n + 2);
        b[3][1] = -hfA.at(n + 1);
        b[3][2] = -hgA.at(n + 1);
        b[3][3] = h.at(n);
        return b;
    });
}

ChainMap comparison_alpha_star(const ChainMap& f, const ChainMap& g, const ChainMap& alpha, const ChainMap& beta,
                               const Homotopy& A, bool variables) {
    const FreeComplex& B = alpha.source;
    const FreeComplex& C = alpha.target;
    require_chain_map(alpha, "alpha");
    require_chain_map(beta, "beta");
    if (!(compose(f, g).mats == compose(g, f).mats)) throw HomotopyInvalid("f and g do not commute");
    ChainMap ab = compose(alpha, beta);
    if (!check_homotopy(A, ab, identity_map(C))) throw HomotopyInvalid("d A + A d != alpha beta - id");
    Homotopy K = commutator_homotopy(f, g, A);
    ChainMap bfa = compose(beta, compose(f, alpha)), bga = compose(beta, compose(g, alpha));
    Homotopy bKa = compose(compose(beta, K), alpha);
    FreeComplex src = torus_or_analogue(bfa, bga, bKa, variables);
    FreeComplex dst = torus_or_analogue(compose(ab, f), compose(ab, g), compose(ab, K), variables);
    return four_block_map(B, C, src, dst, [&](int n) {
        Grid b;
        b[0][0] = alpha.at(n + 2);
        b[1][1] = alpha.at(n + 1);
        b[2][2] = alpha.at(n + 1);
        b[3][3] = alpha.at(n);
        return b;
    });
}

TripleComplex torus_triple(const ChainMap& f, const ChainMap& g, const Homotopy& H, int lo, int hi) {
    const FreeComplex& c = f.source;
    FreeComplex A = analogue_A(f, g, H);
    TripleComplex tc;
    tc.flavor = A.flavor;
    for (int x = lo; x <= hi; ++x)
        for (int y = lo; y <= hi; ++y)
            for (int n : A.degrees()) tc.ranks[{x, y, n - x - y}] = A.rank(n);
    for (int x = lo; x <= hi; ++x)
        for (int y = lo; y <= hi; ++y)
            for (int n : A.degrees()) {
                Key3 k{x, y, n - x - y};
                std::vector<int> src = sizes4(c, n), dst = sizes4(c, n + 1);
                if (A.rank(n + 1) > 0) tc.dz[k] = A.d(n);
                if (A.rank(n + 1) == 0) continue;
                Grid bx, by;
                bx[1][0] = PolyMat::identity(c.rank(n + 2));
                bx[3][2] = -PolyMat::identity(c.rank(n + 1));
                by[2][0] = -PolyMat::identity(c.rank(n + 2));
                by[3][1] = -PolyMat::identity(c.rank(n + 1));
                if (x < hi) tc.dx[k] = assemble(dst, src, bx);
                if (y < hi) tc.dy[k] = assemble(dst, src, by);
            }
    return tc;
}

BiVec bi_zero(int rank) { return BiVec(rank); }

static void bi_accumulate(BiPoly& into, Monomial m, const LaurentPoly& c) {
    LaurentPoly& slot = into[m];
    slot += c;
    if (slot.is_zero()) into.erase(m);
}

BiVec bi_add(const BiVec& a, const BiVec& b) {
    if (a.size() != b.size()) throw ShapeMismatch("bi_add");
    BiVec r = a;
    for (std::size_t i = 0; i < b.size(); ++i)
        for (const auto& [m, c] : b[i]) bi_accumulate(r[i], m, c);
    return r;
}

BiVec bi_sub(const BiVec& a, const BiVec& b) {
    if (a.size() != b.size()) throw ShapeMismatch("bi_sub");
    BiVec r = a;
    for (std::size_t i = 0; i < b.size(); ++i)
        for (const auto& [m, c] : b[i]) bi_accumulate(r[i], m, -c);
    return r;
}

bool bi_is_zero(const BiVec& a) {
    for (const auto& p : a)
        if (!p.empty()) return false;
    return true;
}

BiVec bi_from(const Vec& v) {
    BiVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) r[i][{0, 0}] = v[i];
    return r;
}

static BiVec bi_apply(const PolyMat& m, const BiVec& v) {
    if (m.cols() != int(v.size())) throw ShapeMismatch("bi_apply");
    BiVec r(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero())
                for (const auto& [k, c] : v[j]) bi_accumulate(r[i], k, m(i, j) * c);
    return r;
}

// (v_C - v_L) z for the variable v = x or y
static BiVec var_difference(const BiVec& z, Monomial v) {
    BiVec r(z.size());
    for (std::size_t i = 0; i < z.size(); ++i)
        for (const auto& [k, c] : z[i]) {
            bi_accumulate(r[i], k, c.shifted(v));
            bi_accumulate(r[i], k + v, -c);
        }
    return r;
}

static const Monomial kX{1, 0}, kY{0, 1};

TorusElement torus_yx_differential(const FreeComplex& c, int n, const TorusElement& e) {
    TorusElement o;
    o.r = bi_apply(c.d(n + 2), e.r);
    o.s = bi_sub(bi_zero(c.rank(n + 2)), bi_add(var_difference(e.r, kX), bi_apply(c.d(n + 1), e.s)));
    o.t = bi_sub(var_difference(e.r, kY), bi_apply(c.d(n + 1), e.t));
    o.u = bi_add(bi_add(var_difference(e.s, kY), var_difference(e.t, kX)), bi_apply(c.d(n), e.u));
    return o;
}

Vec gamma_apply(const BiVec& z) {
    Vec v(z.size());
    for (std::size_t i = 0; i < z.size(); ++i)
        for (const auto& [k, c] : z[i]) v[i] += c.shifted(k);
    return v;
}

Vec gamma_apply(const TorusElement& e) { return gamma_apply(e.u); }

std::pair<BiVec, BiVec> row_alpha(const BiVec& u) {
    return {bi_sub(bi_zero(int(u.size())), var_difference(u, kX)), var_difference(u, kY)};
}

BiVec row_beta(const BiVec& z1, const BiVec& z2) { return bi_add(var_difference(z1, kY), var_difference(z2, kX)); }

static std::optional<std::pair<int, int>> x_amplitude(const BiVec& z) {
    std::optional<std::pair<int, int>> r;
    for (const auto& p : z)
        for (const auto& [k, c] : p) {
            if (!r) r = std::pair{k.ex, k.ex};
            r->first = std::min(r->first, k.ex);
            r->second = std::max(r->second, k.ex);
        }
    return r;
}

AmplitudeCertificate amplitude_reduce(const BiVec& z1, const BiVec& z2) {
    if (z1.size() != z2.size()) throw ShapeMismatch("amplitude_reduce");
    if (!bi_is_zero(row_beta(z1, z2))) throw NotInKernel("pair is not in the kernel of beta");
    AmplitudeCertificate cert;
    cert.preimage = bi_zero(int(z1.size()));
    auto a1 = x_amplitude(z1), a2 = x_amplitude(z2);
    if (!a1 && !a2) return cert;
    int a = std::min(a1 ? a1->first : a2->first, a2 ? a2->first : a1->first);
    BiVec w1 = z1, w2 = z2;
    for (;;) {
        auto amp = x_amplitude(w1);
        if (!amp || amp->second <= a) break;
        int b = amp->second;
        BiVec u(w1.size());
        for (std::size_t i = 0; i < w1.size(); ++i)
            for (const auto& [k, c] : w1[i])
                if (k.ex == b) u[i][{b - 1, k.ey}] = c;
        auto [a_1, a_2] = row_alpha(u);
        w1 = bi_sub(w1, a_1);
        w2 = bi_sub(w2, a_2);
        cert.preimage = bi_add(cert.preimage, u);
        ++cert.rounds;
    }
    if (!bi_is_zero(w1) || !bi_is_zero(w2)) throw NotInKernel("amplitude reduction left a nonzero residual");
    auto [c1, c2] = row_alpha(cert.preimage);
    if (!(c1 == z1) || !(c2 == z2)) throw NotInKernel("preimage does not reproduce the input");
    return cert;
}

}  // namespace nov
