#pragma once

// Exact integer kernels shared by every other header. All functions are
// templates over the integer type so the same code runs on the library's
// arbitrary-precision `Int` and on builtin integers inside test oracles.

#include <algorithm>
#include <bit>
#include <concepts>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "heron/errors.hpp"

namespace heron {

// Expression templates off so `auto` and generic code always see plain values.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;

namespace detail {

template <typename T>
inline constexpr bool is_multiprecision_v =
    boost::multiprecision::is_number<T>::value;

}  // namespace detail

template <typename T>
concept Integer = std::integral<T> || detail::is_multiprecision_v<T>;

/// Number of bits needed to represent n (0 for n == 0).
template <Integer T>
unsigned bit_length(const T& n) {
  if (n <= 0) return 0;
  if constexpr (std::integral<T>) {
    return static_cast<unsigned>(
        std::bit_width(static_cast<std::make_unsigned_t<T>>(n)));
  } else {
    return static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
  }
}

/// floor(sqrt(n)) by Newton iteration from an over-estimate.
template <Integer T>
T isqrt(const T& n) {
  if (n < 0) throw RangeError("isqrt: negative argument");
  if (n < 2) return n;
  // 2^ceil(bits/2) > sqrt(n), so the iteration descends monotonically.
  T x = T(1) << ((bit_length(n) + 1) / 2);
  while (true) {
    T y = (x + n / x) >> 1;
    if (y >= x) return x;
    x = std::move(y);
  }
}

/// The square root of n when n is a perfect square.
template <Integer T>
std::optional<T> is_perfect_square(const T& n) {
  if (n < 0) return std::nullopt;
  // Squares are 0, 1, 4 or 9 mod 16.
  const unsigned low = static_cast<unsigned>(n & 15);
  if (low != 0 && low != 1 && low != 4 && low != 9) return std::nullopt;
  T r = isqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

template <Integer T>
T gcd_pair(T a, T b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

template <Integer T>
T gcd_many(std::span<const T> values) {
  if (values.empty()) throw RangeError("gcd_many: empty list");
  T g = 0;
  for (const T& v : values) {
    if (v < 1) throw RangeError("gcd_many: values must be positive");
    g = gcd_pair(g, v);
    if (g == 1) break;
  }
  return g;
}

template <Integer T>
T gcd_many(std::initializer_list<T> values) {
  return gcd_many(std::span<const T>(values.begin(), values.size()));
}

/// Exponent of the largest power of two dividing n.
template <Integer T>
unsigned two_adic_valuation(const T& n) {
  if (n < 1) throw RangeError("two_adic_valuation: argument must be positive");
  if constexpr (std::integral<T>) {
    return static_cast<unsigned>(
        std::countr_zero(static_cast<std::make_unsigned_t<T>>(n)));
  } else {
    return static_cast<unsigned>(boost::multiprecision::lsb(n));
  }
}

/// Positive divisors of n in ascending order, by trial division up to sqrt(n).
template <Integer T>
std::vector<T> divisors_of(const T& n) {
  if (n < 1) throw RangeError("divisors_of: argument must be positive");
  std::vector<T> low;
  std::vector<T> high;
  const T root = isqrt(n);
  for (T i = 1; i <= root; ++i) {
    if (n % i == 0) {
      low.push_back(i);
      T q = n / i;
      if (q != i) high.push_back(std::move(q));
    }
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

template <Integer T>
struct PrimePower {
  T prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization by trial division, primes ascending.
template <Integer T>
std::vector<PrimePower<T>> factorize(T n) {
  if (n < 1) throw RangeError("factorize: argument must be positive");
  std::vector<PrimePower<T>> out;
  for (T p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

template <Integer T>
std::string to_string(const T& n) {
  if constexpr (std::integral<T>) {
    return std::to_string(n);
  } else {
    return n.str();
  }
}

/// Narrow to int64 for serialization; throws RangeError on overflow.
inline std::int64_t to_int64(const Int& n) {
  if (n > std::numeric_limits<std::int64_t>::max() ||
      n < std::numeric_limits<std::int64_t>::min()) {
    throw RangeError("value " + n.str() + " does not fit in 64 bits");
  }
  return n.convert_to<std::int64_t>();
}

}  // namespace heron
