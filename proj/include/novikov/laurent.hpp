#pragma once
// Sparse Laurent polynomials in x, y with arbitrary-precision integer
// coefficients.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <optional>
#include <string>

namespace nov {

using BigInt = boost::multiprecision::cpp_int;

struct Monomial {
    int ex = 0;
    int ey = 0;

    // canonical order is lexicographic in (ey, ex)
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.ey <=> b.ey; c != 0) return c;
        return a.ex <=> b.ex;
    }
    Monomial operator+(const Monomial& o) const { return {ex + o.ex, ey + o.ey}; }
    Monomial operator-(const Monomial& o) const { return {ex - o.ex, ey - o.ey}; }
    Monomial operator-() const { return {-ex, -ey}; }
};

struct SupportBox {
    int min_ex, max_ex, min_ey, max_ey;
    friend bool operator==(const SupportBox&, const SupportBox&) = default;
};

class LaurentPoly {
public:
    using TermMap = std::map<Monomial, BigInt>;

    LaurentPoly() = default;
    LaurentPoly(long long c);  // NOLINT: constants convert implicitly
    LaurentPoly(const BigInt& c);  // NOLINT

    static LaurentPoly term(const BigInt& c, int ex, int ey);
    static LaurentPoly term(const BigInt& c, Monomial m) { return term(c, m.ex, m.ey); }
    static LaurentPoly mono(int ex, int ey) { return term(1, ex, ey); }
    static LaurentPoly x(int e = 1) { return mono(e, 0); }
    static LaurentPoly y(int e = 1) { return mono(0, e); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    BigInt coeff(Monomial m) const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const;
    // single term with coefficient +1 or -1
    bool is_unit_monomial() const;

    void add_term(Monomial m, const BigInt& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    LaurentPoly shifted(Monomial m) const;
    LaurentPoly scaled(const BigInt& c) const;

    std::string str() const;

private:
    TermMap terms_;
};

LaurentPoly multiply(const LaurentPoly& p, const LaurentPoly& q);
std::optional<SupportBox> support_box(const LaurentPoly& p);
// x -> x^sx, y -> y^sy, then optionally swap the exponents of x and y
LaurentPoly substitute(const LaurentPoly& p, int sx, int sy, bool swap);
Monomial substitute(Monomial m, int sx, int sy, bool swap);

// max(|ex|,|ey|) over the support; 0 for the zero polynomial
int linf_radius(const LaurentPoly& p);
// max of the two side lengths of the support box
int spread(const LaurentPoly& p);

}  // namespace nov
