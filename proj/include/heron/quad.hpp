#pragma once

// Positive solutions of x^2 + y^2 + z^2 = t^2 and the (l, m, n)
// parametrization
//   x = (l^2 + m^2 - n^2)/n,  y = 2l,  z = 2m,  t = (l^2 + m^2 + n^2)/n,
// with n a divisor of l^2 + m^2 and n^2 < l^2 + m^2.

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "heron/arith.hpp"
#include "heron/errors.hpp"

namespace heron {

class QuadSolution {
 public:
  QuadSolution(Int x, Int y, Int z, Int t)
      : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)), t_(std::move(t)) {
    if (x_ < 1 || y_ < 1 || z_ < 1 || t_ < 1) {
      throw InvariantError("solution components must be positive: " + str());
    }
    if (x_ * x_ + y_ * y_ + z_ * z_ != t_ * t_) {
      throw InvariantError("not a solution of x^2+y^2+z^2=t^2: " + str());
    }
  }

  const Int& x() const noexcept { return x_; }
  const Int& y() const noexcept { return y_; }
  const Int& z() const noexcept { return z_; }
  const Int& t() const noexcept { return t_; }
  std::array<Int, 4> components() const { return {x_, y_, z_, t_}; }

  QuadSolution scaled(const Int& k) const { return {x_ * k, y_ * k, z_ * k, t_ * k}; }

  /// x, y, z sorted ascending; identifies solutions up to permuting unknowns.
  std::array<Int, 4> canonical_key() const {
    std::array<Int, 4> k = components();
    std::sort(k.begin(), k.begin() + 3);
    return k;
  }

  std::string str() const {
    return "(" + x_.str() + "," + y_.str() + "," + z_.str() + "," + t_.str() + ")";
  }

  friend bool operator==(const QuadSolution&, const QuadSolution&) = default;
  friend bool operator<(const QuadSolution& p, const QuadSolution& q) {
    return p.components() < q.components();
  }

 private:
  Int x_, y_, z_, t_;
};

struct ParamTriple {
  Int l, m, n;

  friend bool operator==(const ParamTriple&, const ParamTriple&) = default;
  friend bool operator<(const ParamTriple& p, const ParamTriple& q) {
    return std::array<Int, 3>{p.l, p.m, p.n} < std::array<Int, 3>{q.l, q.m, q.n};
  }
};

inline QuadSolution solution_from_param(const ParamTriple& p) {
  if (p.l < 1 || p.m < 1 || p.n < 1) throw RangeError("l, m, n must be positive");
  const Int sum = p.l * p.l + p.m * p.m;
  if (sum % p.n != 0) {
    throw DivisibilityError(p.n.str() + " does not divide l^2+m^2 = " + sum.str());
  }
  const Int nn = p.n * p.n;
  if (nn >= sum) {
    throw RangeError("n^2 = " + nn.str() + " is not below l^2+m^2 = " + sum.str());
  }
  return QuadSolution((sum - nn) / p.n, 2 * p.l, 2 * p.m, (sum + nn) / p.n);
}

inline ParamTriple param_from_solution(const QuadSolution& s) {
  if ((s.y() & 1) != 0 || (s.z() & 1) != 0) {
    throw ParityError("y and z must both be even in " + s.str());
  }
  return {s.y() / 2, s.z() / 2, (s.t() - s.x()) / 2};
}

inline bool is_primitive_solution(const QuadSolution& s) {
  return gcd_many({s.x(), s.y(), s.z()}) == 1;
}

struct EnumerateOptions {
  Int l_max = 1;
  Int l_min = 1;                // lower end of the l-range, for sharding
  std::optional<Int> m_max;     // defaults to l_max
  bool normalized = false;      // m <= l and x odd
  unsigned scale_pow2 = 0;      // also emit 2^j multiples, j = 1..scale_pow2
};

struct Emission {
  ParamTriple param;
  QuadSolution solution;
  unsigned pow2 = 0;  // exponent of the power-of-two multiple applied
};

/// Calls visit(const Emission&) for every parametrized solution, ordered
/// lexicographically by (l, m, n) and then by pow2.
template <typename Visitor>
void for_each_solution(const EnumerateOptions& opt, Visitor&& visit) {
  if (opt.l_max < 1) throw RangeError("l_max must be positive");
  const Int m_cap = opt.m_max.value_or(opt.l_max);
  for (Int l = std::max<Int>(opt.l_min, 1); l <= opt.l_max; ++l) {
    const Int m_end = opt.normalized ? std::min(l, m_cap) : m_cap;
    for (Int m = 1; m <= m_end; ++m) {
      const Int sum = l * l + m * m;
      for (const Int& n : divisors_of(sum)) {
        if (n * n >= sum) break;
        ParamTriple p{l, m, n};
        QuadSolution s = solution_from_param(p);
        if (opt.normalized && (s.x() & 1) == 0) continue;
        visit(Emission{p, s, 0});
        Int k = 1;
        for (unsigned j = 1; j <= opt.scale_pow2; ++j) {
          k *= 2;
          visit(Emission{ParamTriple{l * k, m * k, n * k}, s.scaled(k), j});
        }
      }
    }
  }
}

inline std::vector<Emission> enumerate_solutions(const EnumerateOptions& opt) {
  std::vector<Emission> out;
  for_each_solution(opt, [&](const Emission& e) { out.push_back(e); });
  return out;
}

/// Collects solutions up to permutation of x, y, z.
class SolutionSet {
 public:
  bool insert(const QuadSolution& s) { return keys_.insert(s.canonical_key()).second; }
  std::size_t size() const noexcept { return keys_.size(); }
  const std::set<std::array<Int, 4>>& keys() const noexcept { return keys_; }

 private:
  std::set<std::array<Int, 4>> keys_;
};

}  // namespace heron
