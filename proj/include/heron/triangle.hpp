#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

#include "heron/arith.hpp"
#include "heron/errors.hpp"

namespace heron {

/// Three positive integer side lengths obeying the strict triangle
/// inequality. Side order is preserved exactly as given.
class Triangle {
 public:
  Triangle(Int a, Int b, Int c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (a_ < 1 || b_ < 1 || c_ < 1) {
      throw TriangleInequalityError("sides must be positive: " + str());
    }
    if (a_ + b_ <= c_ || a_ + c_ <= b_ || b_ + c_ <= a_) {
      throw TriangleInequalityError("sides violate the strict triangle inequality: " + str());
    }
  }

  const Int& a() const noexcept { return a_; }
  const Int& b() const noexcept { return b_; }
  const Int& c() const noexcept { return c_; }
  std::array<Int, 3> sides() const { return {a_, b_, c_}; }
  Int perimeter() const { return a_ + b_ + c_; }

  /// Same triangle with sides sorted descending.
  Triangle canonical() const {
    std::array<Int, 3> s = sides();
    std::sort(s.begin(), s.end(), [](const Int& x, const Int& y) { return x > y; });
    return Triangle(s[0], s[1], s[2]);
  }

  bool is_right() const {
    Triangle t = canonical();
    return t.a_ * t.a_ == t.b_ * t.b_ + t.c_ * t.c_;
  }

  std::string str() const {
    return "(" + a_.str() + "," + b_.str() + "," + c_.str() + ")";
  }

  friend bool operator==(const Triangle&, const Triangle&) = default;
  friend bool operator<(const Triangle& x, const Triangle& y) { return x.sides() < y.sides(); }
  friend std::ostream& operator<<(std::ostream& os, const Triangle& t) { return os << t.str(); }

 private:
  Int a_, b_, c_;
};

/// Excess values n1 = -a+b+c, n2 = a-b+c, n3 = a+b-c together with the
/// perimeter and both gcds.
struct ExcessTriple {
  Int n1, n2, n3;
  Int n;      // perimeter, n1 + n2 + n3
  Int delta;  // gcd(a, b, c)
  Int d;      // gcd(n1, n2, n3)

  std::array<Int, 3> values() const { return {n1, n2, n3}; }
  friend bool operator==(const ExcessTriple&, const ExcessTriple&) = default;
};

inline ExcessTriple excess_triple(const Triangle& t) {
  ExcessTriple e;
  e.n1 = -t.a() + t.b() + t.c();
  e.n2 = t.a() - t.b() + t.c();
  e.n3 = t.a() + t.b() - t.c();
  e.n = t.perimeter();
  e.delta = gcd_many({t.a(), t.b(), t.c()});
  e.d = gcd_many({e.n1, e.n2, e.n3});
  return e;
}

/// Inverse of excess_triple: a = (n2+n3)/2, b = (n1+n3)/2, c = (n1+n2)/2.
inline Triangle triangle_from_excess(const Int& n1, const Int& n2, const Int& n3) {
  if (n1 < 1 || n2 < 1 || n3 < 1) {
    throw RangeError("excess values must be positive");
  }
  const bool odd1 = (n1 & 1) != 0;
  if (((n2 & 1) != 0) != odd1 || ((n3 & 1) != 0) != odd1) {
    throw ParityError("excess values " + n1.str() + "," + n2.str() + "," + n3.str() +
                      " have mixed parity");
  }
  return Triangle((n2 + n3) / 2, (n1 + n3) / 2, (n1 + n2) / 2);
}

/// 16A^2 = N * N1 * N2 * N3.
inline Int sixteen_area_squared(const Triangle& t) {
  const ExcessTriple e = excess_triple(t);
  return e.n * e.n1 * e.n2 * e.n3;
}

/// The area when it is rational (it is then always an integer).
inline std::optional<Int> integer_area(const Triangle& t) {
  const std::optional<Int> root = is_perfect_square(sixteen_area_squared(t));
  if (!root) return std::nullopt;
  if ((*root & 3) != 0) {
    throw InvariantError("4A = " + root->str() + " is not a multiple of 4 for " + t.str());
  }
  return *root / 4;
}

enum class CaseLabel { Case1 = 1, Case2, Case3, Case4, Case5, Case6, Case7 };

inline std::string_view to_string(CaseLabel label) {
  constexpr std::array<std::string_view, 7> names = {"Case1", "Case2", "Case3", "Case4",
                                                     "Case5", "Case6", "Case7"};
  return names[static_cast<int>(label) - 1];
}

/// True for the cases where gcd(N1,N2,N3) = 2 gcd(a,b,c).
constexpr bool doubles_gcd(CaseLabel label) {
  return label == CaseLabel::Case2 || label == CaseLabel::Case5 || label == CaseLabel::Case6;
}

struct ParityCase {
  CaseLabel label;
  // 2-adic valuations of (N1, N2, N3); only set when all sides are 0 mod 4.
  std::optional<std::array<unsigned, 3>> alphas;
};

inline ParityCase classify_parity_case(const Triangle& t) {
  const std::array<Int, 3> s = t.sides();
  int even = 0;
  int two_mod_four = 0;
  for (const Int& side : s) {
    if ((side & 1) == 0) ++even;
    if ((side & 3) == 2) ++two_mod_four;
  }
  switch (even) {
    case 0: return {CaseLabel::Case1, std::nullopt};
    case 1: return {CaseLabel::Case2, std::nullopt};
    case 2: return {CaseLabel::Case3, std::nullopt};
    default: break;
  }
  if (two_mod_four == 2) return {CaseLabel::Case5, std::nullopt};
  if (two_mod_four != 0) return {CaseLabel::Case4, std::nullopt};

  const ExcessTriple e = excess_triple(t);
  std::array<unsigned, 3> alphas = {two_adic_valuation(e.n1), two_adic_valuation(e.n2),
                                    two_adic_valuation(e.n3)};
  const bool equal = alphas[0] == alphas[1] && alphas[1] == alphas[2];
  return {equal ? CaseLabel::Case7 : CaseLabel::Case6, alphas};
}

using Rational = boost::rational<Int>;

/// Cosines (always rational) and sines (rational exactly when the area is)
/// of the angles opposite a, b and c.
struct TrigProfile {
  std::array<Rational, 3> cosines;
  std::optional<std::array<Rational, 3>> sines;
};

inline TrigProfile trig_profile(const Triangle& t) {
  const Int& a = t.a();
  const Int& b = t.b();
  const Int& c = t.c();
  TrigProfile p;
  p.cosines = {Rational(b * b + c * c - a * a, 2 * b * c),
               Rational(a * a + c * c - b * b, 2 * a * c),
               Rational(a * a + b * b - c * c, 2 * a * b)};
  if (const std::optional<Int> area = integer_area(t)) {
    const Int twice = 2 * *area;
    p.sines = std::array<Rational, 3>{Rational(twice, b * c), Rational(twice, a * c),
                                      Rational(twice, a * b)};
  }
  return p;
}

/// gcd((N1/d)(N2/d)(N3/d), N/d) == 1.
inline bool satisfies_condition6(const Triangle& t) {
  const ExcessTriple e = excess_triple(t);
  return gcd_pair((e.n1 / e.d) * (e.n2 / e.d) * (e.n3 / e.d), e.n / e.d) == 1;
}

}  // namespace heron
