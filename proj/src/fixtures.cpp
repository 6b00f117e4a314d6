#include "novikov/fixtures.hpp"

namespace nov {

LaurentPoly example_mu() {
    using P = LaurentPoly;
    return P(1) + P::x() * (P::y(2) + P::x() * (P(1) + P::y()));
}

LaurentPoly example_nu() {
    using P = LaurentPoly;
    return P::x() + P::y() + P::y(2) + P::mono(2, 2);
}

FreeComplex example_complex() {
    FreeComplex c;
    c.ranks = {{0, 1}, {1, 2}, {2, 1}};
    c.diff[0] = PolyMat{{example_mu()}, {example_nu()}};
    c.diff[1] = PolyMat{{-example_nu(), example_mu()}};
    return c;
}

}  // namespace nov
