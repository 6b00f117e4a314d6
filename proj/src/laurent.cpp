#include "novikov/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace nov {

LaurentPoly::LaurentPoly(long long c) {
    if (c != 0) terms_.emplace(Monomial{}, BigInt(c));
}

LaurentPoly::LaurentPoly(const BigInt& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

LaurentPoly LaurentPoly::term(const BigInt& c, int ex, int ey) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace(Monomial{ex, ey}, c);
    return p;
}

BigInt LaurentPoly::coeff(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

bool LaurentPoly::is_unit_monomial() const {
    if (terms_.size() != 1) return false;
    const BigInt& c = terms_.begin()->second;
    return c == 1 || c == -1;
}

void LaurentPoly::add_term(Monomial m, const BigInt& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma + mb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::shifted(Monomial s) const {
    LaurentPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m + s, c);
    return r;
}

LaurentPoly LaurentPoly::scaled(const BigInt& k) const {
    if (k == 0) return {};
    LaurentPoly r = *this;
    for (auto& [m, c] : r.terms_) c *= k;
    return r;
}

static void put_power(std::ostringstream& os, const char* var, int e) {
    os << var;
    if (e != 1) os << '^' << e;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        BigInt a = c;
        if (first) {
            if (a < 0) { os << '-'; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_var = m.ex != 0 || m.ey != 0;
        if (a != 1 || !has_var) {
            os << a;
            if (has_var) os << '*';
        }
        if (m.ex != 0) put_power(os, "x", m.ex);
        if (m.ex != 0 && m.ey != 0) os << '*';
        if (m.ey != 0) put_power(os, "y", m.ey);
    }
    return os.str();
}

LaurentPoly multiply(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

std::optional<SupportBox> support_box(const LaurentPoly& p) {
    if (p.is_zero()) return std::nullopt;
    SupportBox b{INT32_MAX, INT32_MIN, INT32_MAX, INT32_MIN};
    for (const auto& [m, c] : p.terms()) {
        b.min_ex = std::min(b.min_ex, m.ex);
        b.max_ex = std::max(b.max_ex, m.ex);
        b.min_ey = std::min(b.min_ey, m.ey);
        b.max_ey = std::max(b.max_ey, m.ey);
    }
    return b;
}

Monomial substitute(Monomial m, int sx, int sy, bool swap) {
    Monomial r{m.ex * sx, m.ey * sy};
    if (swap) std::swap(r.ex, r.ey);
    return r;
}

LaurentPoly substitute(const LaurentPoly& p, int sx, int sy, bool swap) {
    LaurentPoly r;
    for (const auto& [m, c] : p.terms()) r.add_term(substitute(m, sx, sy, swap), c);
    return r;
}

int linf_radius(const LaurentPoly& p) {
    int r = 0;
    for (const auto& [m, c] : p.terms()) r = std::max({r, std::abs(m.ex), std::abs(m.ey)});
    return r;
}

int spread(const LaurentPoly& p) {
    auto b = support_box(p);
    if (!b) return 0;
    return std::max(b->max_ex - b->min_ex, b->max_ey - b->min_ey);
}

}  // namespace nov
