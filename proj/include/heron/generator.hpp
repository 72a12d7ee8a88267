#pragma once

#include "heron/arith.hpp"
#include "heron/errors.hpp"
#include "heron/quad.hpp"
#include "heron/triangle.hpp"

namespace heron {

/// A rational-area triangle built from a solution of x^2+y^2+z^2=t^2:
///   a = D(y^2+z^2)/2,  b = D(x^2+z^2)/2,  c = D(x^2+y^2)/2,
/// with area D^2 xyzt/4, since s-a = Dx^2/2, s-b = Dy^2/2, s-c = Dz^2/2.
struct GeneratedTriangle {
  Triangle triangle;
  Int area;
  QuadSolution source;
  Int scale;
};

inline GeneratedTriangle triangle_from_solution(const QuadSolution& s, const Int& scale) {
  if (scale < 1) throw RangeError("scale must be positive");
  const bool some_odd = (s.x() & 1) != 0 || (s.y() & 1) != 0 || (s.z() & 1) != 0;
  if (some_odd && (scale & 1) != 0) {
    throw ScaleParityError("scale " + scale.str() + " must be even for " + s.str() +
                           ", which has an odd component");
  }
  const Int xx = s.x() * s.x();
  const Int yy = s.y() * s.y();
  const Int zz = s.z() * s.z();
  Triangle tri(scale * (yy + zz) / 2, scale * (xx + zz) / 2, scale * (xx + yy) / 2);
  Int area = scale * scale * s.x() * s.y() * s.z() * s.t() / 4;
  return {std::move(tri), std::move(area), s, scale};
}

/// x y z t d^2 / 4 for a primitive solution and an even multiplier d.
inline Int solid_area(const QuadSolution& s, const Int& d_even) {
  if (!is_primitive_solution(s)) {
    throw NonPrimitiveError(s.str() + " has gcd(x,y,z) > 1");
  }
  if (d_even < 2 || (d_even & 1) != 0) {
    throw ParityError("multiplier " + d_even.str() + " must be a positive even integer");
  }
  return s.x() * s.y() * s.z() * s.t() * d_even * d_even / 4;
}

}  // namespace heron
