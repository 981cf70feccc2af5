#pragma once

#include "hzt/rat_matrix.hpp"
#include "hzt/rat_poly.hpp"

namespace hzt {

/// Characteristic polynomial det(xI - a), monic of degree n.
RatPoly char_poly(const RatMatrix& a);

/// Minimal polynomial of a, monic.
RatPoly min_poly(const RatMatrix& a);

}  // namespace hzt
