#include "novikov/flavors.hpp"

#include <algorithm>
#include <climits>

namespace nov {

using Kind = RingFlavor::Kind;

namespace {

int axis_exp(Axis a, Monomial m) { return a == Axis::X ? m.ex : m.ey; }
Axis other(Axis a) { return a == Axis::X ? Axis::Y : Axis::X; }

std::string var(Axis a, int s) {
    std::string v = a == Axis::X ? "x" : "y";
    return s < 0 ? v + "^-1" : v;
}

// (outer, inner) oriented exponents of the edge and nested kinds
std::pair<int, int> oriented(const RingFlavor& f, Monomial m) {
    return {f.s1 * axis_exp(f.axis, m), f.s2 * axis_exp(other(f.axis), m)};
}

std::int64_t sat_add(std::int64_t a, std::int64_t b) {
    if (a == TruncatedSeries::kExact || b == TruncatedSeries::kExact) return TruncatedSeries::kExact;
    return a + b;
}

}  // namespace

bool RingFlavor::is_region_restricted() const {
    switch (kind) {
        case Kind::Integers:
        case Kind::CornerPowerSeries:
        case Kind::EdgePowerSeries:
        case Kind::NestedNovikovPower: return true;
        case Kind::FaceAlgebra: return face != Face::S;
        default: return false;
    }
}

std::string RingFlavor::name() const {
    switch (kind) {
        case Kind::Integers: return "Z";
        case Kind::FullLaurent: return "Lxy";
        case Kind::FaceAlgebra: return "A(" + face_name(face) + ")";
        case Kind::CornerNovikov: return "Nov(" + var(Axis::X, s1) + "," + var(Axis::Y, s2) + ")";
        case Kind::CornerPowerSeries: return "Pow(" + var(Axis::X, s1) + "," + var(Axis::Y, s2) + ")";
        case Kind::EdgeNovikov:
            return std::string(axis == Axis::Y ? "Lx" : "Ly") + ".Nov(" + var(axis, s1) + ")";
        case Kind::EdgePowerSeries:
            return std::string(axis == Axis::Y ? "Lx" : "Ly") + ".Pow(" + var(axis, s1) + ")";
        case Kind::NestedNovikovPower:
            return "Nov(" + var(other(axis), s2) + ").Pow(" + var(axis, s1) + ")";
        case Kind::NestedNovikovNovikov:
            return "Nov(" + var(other(axis), s2) + ").Nov(" + var(axis, s1) + ")";
    }
    return "?";
}

static std::vector<RingFlavor> all_named_flavors() {
    std::vector<RingFlavor> r{RingFlavor::integers(), RingFlavor::laurent()};
    for (Face f : kFaces) r.push_back(RingFlavor::face_algebra(f));
    for (int sy : {1, -1})
        for (int sx : {1, -1}) {
            r.push_back(RingFlavor::corner(sx, sy));
            r.push_back(RingFlavor::corner_power(sx, sy));
        }
    for (Axis a : {Axis::X, Axis::Y})
        for (int s : {1, -1}) {
            r.push_back(RingFlavor::edge(a, s));
            r.push_back(RingFlavor::edge_power(a, s));
            for (int t : {1, -1}) {
                r.push_back(RingFlavor::nested_power(a, s, t));
                r.push_back(RingFlavor::nested_novikov(a, s, t));
            }
        }
    return r;
}

RingFlavor flavor_from_name(const std::string& name) {
    for (const auto& f : all_named_flavors())
        if (f.name() == name) return f;
    if (name.size() > 3 && name.rfind("A<", 0) == 0 && name.back() == '>') {
        std::vector<Face> flag;
        std::string body = name.substr(2, name.size() - 3);
        std::size_t pos = 0;
        while (pos <= body.size()) {
            auto comma = body.find(',', pos);
            if (comma == std::string::npos) comma = body.size();
            flag.push_back(face_from_name(body.substr(pos, comma - pos)));
            pos = comma + 1;
        }
        return nerve_ring(flag);
    }
    throw std::invalid_argument("unknown flavor " + name);
}

bool contains_monomial(const RingFlavor& f, Monomial m) {
    switch (f.kind) {
        case Kind::Integers: return m == Monomial{};
        case Kind::FaceAlgebra: {
            Monomial v = barycentre(f.face);
            return -v.ex * m.ex >= 0 && -v.ey * m.ey >= 0;
        }
        case Kind::FullLaurent:
        case Kind::CornerNovikov:
        case Kind::EdgeNovikov:
        case Kind::NestedNovikovNovikov: return true;
        case Kind::CornerPowerSeries: return f.s1 * m.ex >= 0 && f.s2 * m.ey >= 0;
        case Kind::EdgePowerSeries:
        case Kind::NestedNovikovPower: return f.s1 * axis_exp(f.axis, m) >= 0;
    }
    return false;
}

bool contains(const RingFlavor& f, const LaurentPoly& p) {
    for (const auto& [m, c] : p.terms())
        if (!contains_monomial(f, m)) return false;
    return true;
}

std::vector<RingFlavor> detection_flavors() {
    return {RingFlavor::corner(1, 1),       RingFlavor::corner(-1, 1),
            RingFlavor::corner(1, -1),      RingFlavor::corner(-1, -1),
            RingFlavor::edge(Axis::Y, 1),   RingFlavor::edge(Axis::Y, -1),
            RingFlavor::edge(Axis::X, 1),   RingFlavor::edge(Axis::X, -1)};
}

RingFlavor transform_flavor(const RingFlavor& f, int sx, int sy, bool swap) {
    RingFlavor g = f;
    switch (f.kind) {
        case Kind::Integers:
        case Kind::FullLaurent: return g;
        case Kind::FaceAlgebra: {
            Monomial v = substitute(barycentre(f.face), sx, sy, swap);
            for (Face h : kFaces)
                if (barycentre(h) == v) g.face = h;
            return g;
        }
        case Kind::CornerNovikov:
        case Kind::CornerPowerSeries:
            g.s1 = f.s1 * sx;
            g.s2 = f.s2 * sy;
            if (swap) std::swap(g.s1, g.s2);
            return g;
        default: {
            int so = f.axis == Axis::X ? sx : sy;
            int si = f.axis == Axis::X ? sy : sx;
            g.s1 = f.s1 * so;
            if (f.kind != Kind::EdgeNovikov && f.kind != Kind::EdgePowerSeries) g.s2 = f.s2 * si;
            if (swap) g.axis = other(f.axis);
            return g;
        }
    }
}

RingFlavor nerve_ring(const std::vector<Face>& flag) {
    const Face* vtx = nullptr;
    const Face* edge = nullptr;
    bool has_s = false;
    for (const Face& f : flag) {
        switch (face_dim(f)) {
            case 0: vtx = &f; break;
            case 1: edge = &f; break;
            case 2: has_s = true; break;
            default: throw std::invalid_argument("flag contains the empty face");
        }
    }
    if (flag.empty() || (vtx && edge && !face_leq(*vtx, *edge)))
        throw std::invalid_argument("not a flag");
    if (!vtx && !edge) return RingFlavor::laurent();
    if (vtx && !edge) {
        Monomial v = barycentre(*vtx);
        return has_s ? RingFlavor::corner(-v.ex, -v.ey) : RingFlavor::corner_power(-v.ex, -v.ey);
    }
    Monomial e = barycentre(*edge);
    Axis a = e.ex != 0 ? Axis::X : Axis::Y;
    int s = -axis_exp(a, e);
    if (!vtx) return has_s ? RingFlavor::edge(a, s) : RingFlavor::edge_power(a, s);
    int t = -axis_exp(other(a), barycentre(*vtx));
    return has_s ? RingFlavor::nested_novikov(a, s, t) : RingFlavor::nested_power(a, s, t);
}

std::string nerve_label(const std::vector<Face>& flag) {
    std::string s = "A<";
    for (std::size_t i = 0; i < flag.size(); ++i) s += (i ? "," : "") + face_name(flag[i]);
    return s + ">";
}

UnitAnswer is_unit(const RingFlavor& f, const LaurentPoly& p) {
    UnitAnswer ans;
    if (p.is_zero()) {
        ans.reason = "zero";
        return ans;
    }
    if (f.is_region_restricted() && !contains(f, p))
        throw NotAnElement(p.str() + " is not an element of " + f.name());

    auto leading_coeff_ok = [&](Monomial m) {
        BigInt c = p.coeff(m);
        ans.leading = m;
        if (c == 1 || c == -1) {
            ans.unit = true;
        } else {
            ans.reason = "leading coefficient " + c.str() + " is not +-1";
        }
    };

    switch (f.kind) {
        case Kind::Integers:
        case Kind::FaceAlgebra:
        case Kind::FullLaurent: {
            Monomial m = p.terms().begin()->first;
            if (!p.is_unit_monomial()) {
                ans.reason = "not a monomial with coefficient +-1";
            } else if (!contains_monomial(f, -m)) {
                ans.reason = "inverse monomial not in ring";
            } else {
                ans.unit = true;
                ans.leading = m;
            }
            return ans;
        }
        case Kind::CornerNovikov:
        case Kind::CornerPowerSeries: {
            int a = INT_MAX, b = INT_MAX;
            for (const auto& [m, c] : p.terms()) {
                a = std::min(a, f.s1 * m.ex);
                b = std::min(b, f.s2 * m.ey);
            }
            Monomial lead{f.s1 * a, f.s2 * b};
            if (p.coeff(lead) == 0) {
                ans.reason = "no componentwise minimum in the support";
                return ans;
            }
            if (f.kind == Kind::CornerPowerSeries && !(lead == Monomial{})) {
                ans.reason = "zero constant term";
                return ans;
            }
            leading_coeff_ok(lead);
            return ans;
        }
        case Kind::EdgeNovikov:
        case Kind::EdgePowerSeries: {
            int u = INT_MAX;
            for (const auto& [m, c] : p.terms()) u = std::min(u, oriented(f, m).first);
            std::vector<Monomial> slice;
            for (const auto& [m, c] : p.terms())
                if (oriented(f, m).first == u) slice.push_back(m);
            if (f.kind == Kind::EdgePowerSeries && u != 0) {
                ans.reason = "zero constant slice";
                return ans;
            }
            if (slice.size() != 1) {
                ans.reason = "extremal slice has " + std::to_string(slice.size()) + " terms";
                return ans;
            }
            leading_coeff_ok(slice.front());
            return ans;
        }
        case Kind::NestedNovikovPower:
        case Kind::NestedNovikovNovikov: {
            std::pair<int, int> best{INT_MAX, INT_MAX};
            Monomial lead;
            for (const auto& [m, c] : p.terms()) {
                auto o = oriented(f, m);
                if (o < best) {
                    best = o;
                    lead = m;
                }
            }
            if (f.kind == Kind::NestedNovikovPower && best.first != 0) {
                ans.reason = "zero constant slice";
                return ans;
            }
            leading_coeff_ok(lead);
            return ans;
        }
    }
    return ans;
}

Monomial series_weights(const RingFlavor& f, int inner_weight) {
    switch (f.kind) {
        case Kind::CornerNovikov:
        case Kind::CornerPowerSeries: return {f.s1, f.s2};
        case Kind::EdgeNovikov:
        case Kind::EdgePowerSeries:
            return f.axis == Axis::X ? Monomial{f.s1, 0} : Monomial{0, f.s1};
        case Kind::NestedNovikovPower:
        case Kind::NestedNovikovNovikov: {
            int W = inner_weight;
            return f.axis == Axis::X ? Monomial{W * f.s1, f.s2} : Monomial{f.s2, W * f.s1};
        }
        default: return {0, 0};
    }
}

TruncatedSeries::TruncatedSeries(RingFlavor f, int window, const LaurentPoly& p)
    : flavor_(f), window_(window), w_(series_weights(f)), prec_(kExact), terms_(p) {
    if (f.is_region_restricted() && !contains(f, p))
        throw NotAnElement(p.str() + " is not an element of " + f.name());
}

void TruncatedSeries::clip() {
    if (prec_ == kExact) return;
    LaurentPoly kept;
    for (const auto& [m, c] : terms_.terms())
        if (valuation(m) <= prec_) kept.add_term(m, c);
    terms_ = std::move(kept);
}

int TruncatedSeries::guaranteed_radius() const {
    if (prec_ == kExact) return window_;
    std::int64_t s = std::abs(w_.ex) + std::abs(w_.ey);
    if (prec_ < 0) return -1;
    if (s == 0) return window_;
    return int(std::min<std::int64_t>(window_, prec_ / s));
}

LaurentPoly TruncatedSeries::in_box(int radius) const {
    LaurentPoly r;
    for (const auto& [m, c] : terms_.terms())
        if (std::abs(m.ex) <= radius && std::abs(m.ey) <= radius) r.add_term(m, c);
    return r;
}

TruncatedSeries TruncatedSeries::truncated(std::int64_t p, Monomial weights) const {
    TruncatedSeries r = *this;
    if (prec_ != kExact && !(weights == w_)) throw FlavorMismatch("incompatible precision weights in " + flavor_.name());
    r.w_ = weights;
    r.prec_ = std::min(prec_, p);
    r.clip();
    return r;
}

static Monomial check_compatible(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (!(a.flavor() == b.flavor()) || a.window() != b.window())
        throw FlavorMismatch(a.flavor().name() + " vs " + b.flavor().name());
    // an exact operand carries no error and adopts the other's weights
    if (a.precision() == TruncatedSeries::kExact) return b.weights();
    if (b.precision() == TruncatedSeries::kExact || a.weights() == b.weights()) return a.weights();
    throw FlavorMismatch("incompatible precision weights in " + a.flavor().name());
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    Monomial w = check_compatible(a, b);
    TruncatedSeries r = a;
    r.w_ = w;
    r.prec_ = std::min(a.prec_, b.prec_);
    r.terms_ = a.terms_ + b.terms_;
    r.clip();
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    Monomial w = check_compatible(a, b);
    TruncatedSeries r = a;
    r.w_ = w;
    auto val = [&](Monomial m) { return std::int64_t(w.ex) * m.ex + std::int64_t(w.ey) * m.ey; };
    // lower bounds for the valuations of each operand's known part
    auto lower = [&](const TruncatedSeries& s) {
        if (s.terms_.is_zero()) return s.prec_ == TruncatedSeries::kExact ? TruncatedSeries::kExact : s.prec_ + 1;
        std::int64_t v = INT64_MAX;
        for (const auto& [m, c] : s.terms_.terms()) v = std::min(v, val(m));
        return v;
    };
    std::int64_t la = lower(a), lb = lower(b);
    std::int64_t p = TruncatedSeries::kExact;
    if (b.prec_ != TruncatedSeries::kExact) p = std::min(p, sat_add(la, b.prec_));
    if (a.prec_ != TruncatedSeries::kExact) p = std::min(p, sat_add(a.prec_, lb));
    if (a.prec_ != TruncatedSeries::kExact && b.prec_ != TruncatedSeries::kExact)
        p = std::min(p, a.prec_ + b.prec_ + 1);
    r.prec_ = p;
    r.terms_ = a.terms_ * b.terms_;
    r.clip();
    return r;
}

TruncatedSeries series_arith(const TruncatedSeries& a, const TruncatedSeries& b, SeriesOp op) {
    return op == SeriesOp::Add ? a + b : a * b;
}

TruncatedSeries invert(const RingFlavor& f, const LaurentPoly& p, int window) {
    UnitAnswer u = is_unit(f, p);
    if (!u.unit) throw NotUnit(p.str() + " is not a unit in " + f.name() + ": " + u.reason);
    Monomial m = u.leading;
    BigInt eps = p.coeff(m);
    TruncatedSeries q;
    q.flavor_ = f;
    q.window_ = window;
    if (f.is_polynomial()) {
        q.w_ = {0, 0};
        q.prec_ = TruncatedSeries::kExact;
        q.terms_ = LaurentPoly::term(eps, -m);
        return q;
    }
    LaurentPoly r = p.shifted(-m).scaled(eps) - LaurentPoly(1);
    int W = 1;
    if (f.kind == Kind::NestedNovikovPower || f.kind == Kind::NestedNovikovNovikov) {
        for (const auto& [t, c] : r.terms()) {
            auto o = oriented(f, t);
            if (o.first >= 1) W = std::max(W, 1 - o.second);
        }
    }
    q.w_ = series_weights(f, W);
    auto val = [&](Monomial t) { return std::int64_t(q.w_.ex) * t.ex + std::int64_t(q.w_.ey) * t.ey; };
    std::int64_t P = std::int64_t(std::abs(q.w_.ex) + std::abs(q.w_.ey)) * window;
    std::int64_t T = P + val(m);
    q.prec_ = P;

    LaurentPoly acc, power = 1, neg_r = -r;
    for (std::int64_t t = 0; t <= T && !power.is_zero(); ++t) {
        acc += power;
        LaurentPoly next;
        for (const auto& [a, ca] : power.terms())
            for (const auto& [b, cb] : neg_r.terms()) {
                Monomial s = a + b;
                if (val(s) <= T) next.add_term(s, ca * cb);
            }
        power = std::move(next);
    }
    q.terms_ = acc.shifted(-m).scaled(eps);
    q.clip();
    return q;
}

}  // namespace nov
