#pragma once

// Coprime factorization of an integer-area triangle. With n_i = N_i/d and
// n = N/d:
//   n1 = D1 d12 d13 k1^2,  n2 = D2 d12 d23 k2^2,  n3 = D3 d13 d23 k3^2,
//   n  = D1 D2 D3 k^2,
// where D_i = gcd(n_i, n) and d_ij = gcd(n_i, n_j). Summing gives
//   D1 d12 d13 k1^2 + D2 d12 d23 k2^2 + D3 d13 d23 k3^2 = D1 D2 D3 k^2.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "heron/arith.hpp"
#include "heron/errors.hpp"
#include "heron/generator.hpp"
#include "heron/quad.hpp"
#include "heron/triangle.hpp"

namespace heron {

struct CoprimeFactorization {
  Int d;
  Int D1, D2, D3;
  Int d12, d13, d23;
  Int k1, k2, k3, k;

  Int M1() const { return k1 * k1; }
  Int M2() const { return k2 * k2; }
  Int M3() const { return k3 * k3; }
  Int M() const { return k * k; }

  /// The nine integers D1..D3, d12..d23, k1..k3 with their names.
  std::array<std::pair<std::string_view, Int>, 9> nine() const {
    return {{{"D1", D1}, {"D2", D2}, {"D3", D3}, {"d12", d12}, {"d13", d13}, {"d23", d23},
             {"k1", k1}, {"k2", k2}, {"k3", k3}}};
  }

  /// n1, n2, n3 and n as given by the factorization.
  std::array<Int, 4> reduced_excess() const {
    return {D1 * d12 * d13 * M1(), D2 * d12 * d23 * M2(), D3 * d13 * d23 * M3(),
            D1 * D2 * D3 * M()};
  }

  bool sum_identity_holds() const {
    const auto r = reduced_excess();
    return r[0] + r[1] + r[2] == r[3];
  }

  friend bool operator==(const CoprimeFactorization&, const CoprimeFactorization&) = default;
};

inline CoprimeFactorization decompose(const Triangle& t) {
  if (!integer_area(t)) {
    throw IrrationalAreaError(t.str() + " does not have rational area");
  }
  const ExcessTriple e = excess_triple(t);
  const Int n1 = e.n1 / e.d, n2 = e.n2 / e.d, n3 = e.n3 / e.d, n = e.n / e.d;

  CoprimeFactorization f;
  f.d = e.d;
  f.D1 = gcd_pair(n1, n);
  f.D2 = gcd_pair(n2, n);
  f.D3 = gcd_pair(n3, n);
  f.d12 = gcd_pair(n1, n2);
  f.d13 = gcd_pair(n1, n3);
  f.d23 = gcd_pair(n2, n3);

  const auto root_of = [&](const Int& num, const Int& den, std::string_view name) {
    if (num % den != 0) {
      throw InvariantError(std::string(name) + " cofactor is not integral for " + t.str());
    }
    const std::optional<Int> r = is_perfect_square(num / den);
    if (!r) {
      throw InvariantError(std::string(name) + " = " + (num / den).str() +
                           " is not a perfect square for " + t.str());
    }
    return *r;
  };
  f.k1 = root_of(n1, f.D1 * f.d12 * f.d13, "M1");
  f.k2 = root_of(n2, f.D2 * f.d12 * f.d23, "M2");
  f.k3 = root_of(n3, f.D3 * f.d13 * f.d23, "M3");
  f.k = root_of(n, f.D1 * f.D2 * f.D3, "M");
  return f;
}

/// Names of the coprimeness or parity conditions the factorization breaks.
/// Empty for every factorization produced by decompose.
inline std::vector<std::string> factorization_violations(const CoprimeFactorization& f) {
  std::vector<std::string> bad;
  const auto coprime = [](const Int& x, const Int& y) { return gcd_pair(x, y) == 1; };
  const auto need = [&](bool ok, const char* what) {
    if (!ok) bad.emplace_back(what);
  };
  for (const auto& [name, v] : f.nine()) {
    if (v < 1) bad.push_back(std::string(name) + " not positive");
  }
  if (f.k < 1 || f.d < 1) bad.emplace_back("k or d not positive");
  if (!bad.empty()) return bad;

  const Int M1 = f.M1(), M2 = f.M2(), M3 = f.M3(), M = f.M();
  need(coprime(f.D1, f.D2 * f.d23 * M2) && coprime(f.D1, f.D3 * f.d23 * M3), "(i)");
  need(coprime(f.D2, f.D1 * f.d13 * M1) && coprime(f.D2, f.D3 * f.d13 * M3), "(ii)");
  need(coprime(f.D3, f.D1 * f.d12 * M1) && coprime(f.D3, f.D2 * f.d12 * M2), "(iii)");
  need(coprime(f.d12, f.d13) && coprime(f.d12, f.d23) && coprime(f.d13, f.d23), "(iv)");
  need(coprime(M, f.d12 * f.d13 * f.d23 * M1 * M2 * M3), "(v)");
  need(coprime(f.D1 * f.D2 * f.D3, f.d12 * f.d13 * f.d23), "(vi)");
  need(coprime(M1, M2) && coprime(M1, M3) && coprime(M2, M3), "(vii)");
  need(coprime(f.k1, f.k2) && coprime(f.k1, f.k3) && coprime(f.k2, f.k3) &&
           coprime(f.k, f.k1 * f.k2 * f.k3),
       "k coprimality");
  need(f.sum_identity_holds(), "sum identity");
  need((f.d & 1) == 0, "d even");
  return bad;
}

struct Reconstruction {
  Triangle triangle;
  Int area;
};

inline Reconstruction reconstruct_from_factorization(const CoprimeFactorization& f) {
  if (!f.sum_identity_holds()) {
    throw InvariantError("factorization fails D1 d12 d13 k1^2 + D2 d12 d23 k2^2 + "
                         "D3 d13 d23 k3^2 = D1 D2 D3 k^2");
  }
  const Int k1s = f.M1(), k2s = f.M2(), k3s = f.M3();
  const Int two_a = f.d * f.d23 * (f.D2 * f.d12 * k2s + f.D3 * f.d13 * k3s);
  const Int two_b = f.d * f.d13 * (f.D1 * f.d12 * k1s + f.D3 * f.d23 * k3s);
  const Int two_c = f.d * f.d12 * (f.D1 * f.d13 * k1s + f.D2 * f.d23 * k2s);
  const Int four_area =
      f.D1 * f.D2 * f.D3 * f.d12 * f.d13 * f.d23 * f.k1 * f.k2 * f.k3 * f.k * f.d * f.d;
  if ((two_a & 1) != 0 || (two_b & 1) != 0 || (two_c & 1) != 0 || (four_area & 3) != 0) {
    throw InvariantError("factorization does not yield integer sides and area");
  }
  return {Triangle(two_a / 2, two_b / 2, two_c / 2), four_area / 4};
}

/// A primitive solution hidden in the factorization when D1..D3 and
/// d12, d13, d23 are all perfect squares:
///   x = L1 e12 e13 k1,  y = L2 e12 e23 k2,  z = L3 e13 e23 k3,  t = L1 L2 L3 k,
/// with D_i = L_i^2 and d_ij = e_ij^2.
struct SolidWitness {
  QuadSolution solution;
  Int d;
  Int L1, L2, L3;
  Int e12, e13, e23;
};

inline std::optional<SolidWitness> extract_quad_solution(const CoprimeFactorization& f) {
  std::array<Int, 6> roots;
  const std::array<const Int*, 6> squares = {&f.D1, &f.D2, &f.D3, &f.d12, &f.d13, &f.d23};
  for (std::size_t i = 0; i < squares.size(); ++i) {
    std::optional<Int> r = is_perfect_square(*squares[i]);
    if (!r) return std::nullopt;
    roots[i] = std::move(*r);
  }
  const auto& [L1, L2, L3, e12, e13, e23] = roots;
  QuadSolution s(L1 * e12 * e13 * f.k1, L2 * e12 * e23 * f.k2, L3 * e13 * e23 * f.k3,
                 L1 * L2 * L3 * f.k);
  if (!is_primitive_solution(s) || gcd_pair(s.x(), s.y()) != e12 || gcd_pair(s.x(), s.z()) != e13 ||
      gcd_pair(s.y(), s.z()) != e23) {
    throw InvariantError("extracted solution " + s.str() + " breaks the gcd identities");
  }
  return SolidWitness{s, f.d, L1, L2, L3, e12, e13, e23};
}

inline std::optional<SolidWitness> classify_solid_rectangular(const Triangle& t) {
  return extract_quad_solution(decompose(t));
}

/// Triangle d(y^2+z^2)/2, d(x^2+z^2)/2, d(x^2+y^2)/2 of a witness.
inline Triangle witness_triangle(const SolidWitness& w) {
  return triangle_from_solution(w.solution, w.d).triangle;
}

// Congruence machinery.

/// (AB + BC + AC) mod 4; equals 3 whenever A, B, C are odd.
template <Integer T>
T pairwise_product_sum_mod4(const T& a, const T& b, const T& c) {
  T r = (a * b + b * c + a * c) % 4;
  return r < 0 ? r + 4 : r;
}

/// Names of the even members among the nine integers.
inline std::vector<std::string_view> even_members(const CoprimeFactorization& f) {
  std::vector<std::string_view> out;
  for (const auto& [name, v] : f.nine()) {
    if ((v & 1) == 0) out.push_back(name);
  }
  return out;
}

/// At most two of the nine are even, and a pair is always (d_ij, k_i),
/// (d_ij, k_j) or (D_i, k_i).
inline bool even_pattern_allowed(const CoprimeFactorization& f) {
  const std::vector<std::string_view> ev = even_members(f);
  if (ev.size() <= 1) return true;
  if (ev.size() > 2) return false;
  const std::string_view p = ev[0], q = ev[1];  // nine() order puts D/d before k
  if (p.front() == 'k' || q.front() != 'k') return false;
  const char ki = q[1];
  if (p.front() == 'D') return p[1] == ki;
  return p[1] == ki || p[2] == ki;
}

/// Pattern forced when the area is 2 mod 4: d = 2 mod 4, exactly one of the
/// six D's and d's is 2 mod 4 with the rest odd, and every k is odd.
inline bool two_mod_four_pattern(const CoprimeFactorization& f) {
  if ((f.d & 3) != 2) return false;
  const std::array<const Int*, 6> six = {&f.D1, &f.D2, &f.D3, &f.d12, &f.d13, &f.d23};
  int twos = 0;
  for (const Int* v : six) {
    if ((*v & 3) == 2) {
      ++twos;
    } else if ((*v & 1) == 0) {
      return false;
    }
  }
  const bool ks_odd = ((f.k1 & 1) != 0) && ((f.k2 & 1) != 0) && ((f.k3 & 1) != 0) &&
                      ((f.k & 1) != 0);
  return twos == 1 && ks_odd;
}

/// Quantities of the unit-D special case, where N/d = t^2 and
/// (N1/d)(N2/d)(N3/d) = k^2.
struct UnitDView {
  Int t;  // equals the factorization's k
  Int k;  // d12 d13 d23 k1 k2 k3
  bool identity_holds;  // d12 d13 k1^2 + d12 d23 k2^2 + d13 d23 k3^2 = t^2
};

inline std::optional<UnitDView> unit_d_view(const CoprimeFactorization& f) {
  if (f.D1 != 1 || f.D2 != 1 || f.D3 != 1) return std::nullopt;
  UnitDView v;
  v.t = f.k;
  v.k = f.d12 * f.d13 * f.d23 * f.k1 * f.k2 * f.k3;
  v.identity_holds =
      f.d12 * f.d13 * f.M1() + f.d12 * f.d23 * f.M2() + f.d13 * f.d23 * f.M3() == v.t * v.t;
  return v;
}

/// True when the triangle matches an excluded shape: n_i even, n_j and n_k
/// odd, with d_ij and d_ik both 1 mod 4 or both 3 mod 4.
inline bool matches_excluded_mod4_shape(const Triangle& t) {
  const ExcessTriple e = excess_triple(t);
  const std::array<Int, 3> n = {e.n1 / e.d, e.n2 / e.d, e.n3 / e.d};
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    if ((n[i] & 1) != 0 || (n[j] & 1) == 0 || (n[k] & 1) == 0) continue;
    const Int dij = gcd_pair(n[i], n[j]) & 3;
    const Int dik = gcd_pair(n[i], n[k]) & 3;
    if (dij == dik && (dij == 1 || dij == 3)) return true;
  }
  return false;
}

}  // namespace heron
