#pragma once
// The rings a complex can be tensored with: face algebras, the eight
// detection rings, nerve rings, plus Z and the Laurent ring itself.

#include "novikov/errors.hpp"
#include "novikov/face.hpp"
#include "novikov/laurent.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nov {

enum class Axis { X, Y };

struct RingFlavor {
    enum class Kind {
        Integers,
        FaceAlgebra,
        FullLaurent,
        CornerNovikov,
        EdgeNovikov,
        CornerPowerSeries,
        EdgePowerSeries,
        NestedNovikovPower,
        NestedNovikovNovikov,
    };
    Kind kind = Kind::FullLaurent;
    Face face = Face::S;
    // edge kinds: the series variable; nested kinds: the outer variable
    Axis axis = Axis::X;
    // corner kinds: (sx, sy); edge kinds: s1 = sign of the series variable;
    // nested kinds: s1 = outer sign, s2 = inner sign
    int s1 = 1;
    int s2 = 1;

    friend bool operator==(const RingFlavor&, const RingFlavor&) = default;

    static RingFlavor integers() { return {Kind::Integers}; }
    static RingFlavor laurent() { return {Kind::FullLaurent}; }
    static RingFlavor face_algebra(Face f) { return {Kind::FaceAlgebra, f}; }
    static RingFlavor corner(int sx, int sy) { return {Kind::CornerNovikov, Face::S, Axis::X, sx, sy}; }
    static RingFlavor edge(Axis a, int s) { return {Kind::EdgeNovikov, Face::S, a, s, 1}; }
    static RingFlavor corner_power(int sx, int sy) {
        return {Kind::CornerPowerSeries, Face::S, Axis::X, sx, sy};
    }
    static RingFlavor edge_power(Axis a, int s) { return {Kind::EdgePowerSeries, Face::S, a, s, 1}; }
    static RingFlavor nested_power(Axis outer, int s_out, int s_in) {
        return {Kind::NestedNovikovPower, Face::S, outer, s_out, s_in};
    }
    static RingFlavor nested_novikov(Axis outer, int s_out, int s_in) {
        return {Kind::NestedNovikovNovikov, Face::S, outer, s_out, s_in};
    }

    bool is_polynomial() const {
        return kind == Kind::Integers || kind == Kind::FaceAlgebra || kind == Kind::FullLaurent;
    }
    // membership restricts some monomials
    bool is_region_restricted() const;
    std::string name() const;
};

RingFlavor flavor_from_name(const std::string& name);

// ring attached to a flag of faces of the square (a chain under inclusion)
RingFlavor nerve_ring(const std::vector<Face>& flag);
std::string nerve_label(const std::vector<Face>& flag);

bool contains_monomial(const RingFlavor& f, Monomial m);
bool contains(const RingFlavor& f, const LaurentPoly& p);

// corners bl, br, tl, tr then edges b, t, l, r
std::vector<RingFlavor> detection_flavors();

// the detection flavor obtained by applying the coordinate change
// (x -> x^sx, y -> y^sy, then optional swap) to the ring
RingFlavor transform_flavor(const RingFlavor& f, int sx, int sy, bool swap);

struct UnitAnswer {
    bool unit = false;
    Monomial leading;
    std::string reason;
};

UnitAnswer is_unit(const RingFlavor& f, const LaurentPoly& p);

class TruncatedSeries {
public:
    static constexpr std::int64_t kExact = INT64_MAX;

    TruncatedSeries() = default;
    TruncatedSeries(RingFlavor f, int window, const LaurentPoly& p);

    const RingFlavor& flavor() const { return flavor_; }
    int window() const { return window_; }
    // every term of valuation <= precision() is present and correct
    std::int64_t precision() const { return prec_; }
    Monomial weights() const { return w_; }
    const LaurentPoly& terms() const { return terms_; }
    std::int64_t valuation(Monomial m) const { return std::int64_t(w_.ex) * m.ex + std::int64_t(w_.ey) * m.ey; }

    // largest R <= window such that every coefficient in [-R,R]^2 is exact;
    // -1 if none
    int guaranteed_radius() const;
    LaurentPoly in_box(int radius) const;
    LaurentPoly exact_part() const { return in_box(guaranteed_radius()); }
    // the same series known only up to valuation p
    TruncatedSeries truncated(std::int64_t p, Monomial weights) const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

private:
    friend TruncatedSeries invert(const RingFlavor&, const LaurentPoly&, int);
    void clip();

    RingFlavor flavor_;
    int window_ = 0;
    Monomial w_;
    std::int64_t prec_ = kExact;
    LaurentPoly terms_;
};

// valuation weights used for a flavor; the nested kinds depend on the
// element being inverted through the inner spread
Monomial series_weights(const RingFlavor& f, int inner_weight = 1);

TruncatedSeries invert(const RingFlavor& f, const LaurentPoly& p, int window);

enum class SeriesOp { Add, Mul };
TruncatedSeries series_arith(const TruncatedSeries& a, const TruncatedSeries& b, SeriesOp op);

}  // namespace nov
