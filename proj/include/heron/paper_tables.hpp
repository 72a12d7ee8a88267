#pragma once

// Values exactly as printed in the source tables and lists, typos included.
// Corrections never live here; they are derived and reported as errata.

#include <array>
#include <cstdint>
#include <string_view>

namespace heron::paper {

struct SampleRow {
  std::int64_t l, m, sum, n, x, y, z, t;
};

/// Fifteen solutions with m <= l and x odd.
inline constexpr std::array<SampleRow, 15> sample_solutions = {{
    {1, 1, 2, 1, 1, 2, 2, 3},
    {3, 3, 18, 3, 3, 6, 6, 9},
    {5, 1, 26, 1, 25, 10, 2, 27},
    {5, 3, 34, 1, 33, 10, 6, 35},
    {5, 5, 50, 1, 49, 10, 10, 51},
    {6, 4, 52, 1, 51, 12, 8, 53},
    {7, 3, 58, 1, 57, 14, 6, 59},
    {7, 7, 98, 1, 97, 14, 14, 99},
    {8, 2, 68, 1, 67, 16, 4, 69},
    {9, 3, 90, 5, 13, 18, 6, 23},
    {9, 3, 90, 6, 9, 18, 6, 21},
    {9, 5, 106, 2, 51, 18, 10, 55},
    {9, 7, 130, 10, 3, 18, 14, 23},
    {9, 9, 162, 1, 161, 18, 18, 163},
    {9, 9, 162, 9, 9, 18, 18, 27},
}};

struct GeneratedRow {
  std::int64_t x, y, z, t, a, b, c, area;
  std::string_view factorization;  // printed, '^' for exponents, '*' for dots
};

/// Triangles generated from the sample solutions with scale 2.
inline constexpr std::int64_t generated_scale = 2;
inline constexpr std::array<GeneratedRow, 15> generated_triangles = {{
    {1, 2, 2, 3, 8, 5, 5, 12, "2^2*3"},
    {3, 6, 6, 9, 72, 45, 45, 972, "2^2*3^5"},
    {25, 10, 2, 27, 104, 627, 725, 13500, "2^2*3^3*5^3"},
    {33, 10, 6, 35, 136, 1125, 1189, 69300, "2^2*3^2*5*7*11"},
    {49, 10, 10, 51, 200, 2501, 2501, 249900, "2^2*d*5^2*7^2*17"},
    {51, 12, 8, 53, 208, 2665, 2745, 259488, "2^5*3^2*17*53"},
    {57, 14, 6, 59, 232, 3285, 3445, 282492, "2^2*3^2*7*19*59"},
    {97, 14, 14, 99, 392, 9605, 9605, 1882188, "2^3*3^4*7^2*11^2"},
    {67, 16, 4, 69, 272, 4505, 4745, 295872, "2^6*3*23*67"},
    {13, 18, 6, 23, 360, 204, 493, 32292, "2^2*3^3*13*23"},
    {9, 18, 6, 21, 360, 81, 405, 20412, "2^2*3^6*7"},
    {51, 18, 10, 55, 424, 2701, 2925, 504900, "2^2*3^3*5^2*11*17"},
    {3, 18, 14, 23, 520, 205, 333, 17388, "2^2*3^3*7*23"},
    {161, 18, 18, 163, 648, 26245, 26245, 8502732, "2^2*3^4*7*23*163"},
    {9, 18, 18, 27, 648, 415, 415, 78732, "2^2*3^9"},
}};

struct FactorizationRow {
  std::int64_t D1, D2, D3, d12, d13, d23, k1, k2, k3, k, d, a, b, c, area;
};

/// Factorizations for the first seven areas that are 2 mod 4.
inline constexpr std::array<FactorizationRow, 7> factorization_table = {{
    {1, 2, 3, 1, 1, 1, 1, 1, 1, 1, 2, 5, 4, 3, 6},
    {1, 3, 7, 1, 1, 2, 1, 1, 1, 1, 2, 20, 15, 7, 42},
    {2, 1, 11, 1, 1, 1, 1, 3, 1, 1, 2, 20, 13, 11, 66},
    {1, 1, 3, 2, 1, 5, 1, 1, 1, 3, 2, 25, 17, 12, 90},
    {1, 1, 19, 1, 1, 1, 1, 3, 1, 1, 2, 37, 20, 19, 114},
    {2, 3, 1, 1, 1, 1, 1, 1, 7, 3, 2, 52, 51, 3, 126},
    {1, 11, 6, 1, 1, 1, 1, 1, 3, 1, 2, 65, 55, 12, 198},
}};

/// Printed list of triangle area numbers up to 999, in printed order.
inline constexpr std::array<std::int64_t, 96> area_numbers = {
    6,   12,  24,  30,  36,  42,  48,  54,  60,  66,  72,  84,  90,  96,  108, 114,
    120, 126, 132, 144, 150, 156, 168, 180, 192, 198, 204, 210, 216, 234, 240, 252,
    264, 270, 288, 294, 300, 306, 324, 330, 336, 360, 378, 384, 390, 296, 408, 420,
    432, 456, 462, 468, 480, 486, 504, 510, 522, 528, 540, 546, 570, 576, 588, 594,
    600, 624, 630, 648, 660, 672, 684, 690, 714, 720, 726, 744, 750, 756, 768, 780,
    792, 798, 810, 816, 840, 864, 876, 900, 924, 930, 936, 960, 966, 972, 984, 990};

inline constexpr std::array<std::int64_t, 31> pythagorean_numbers = {
    6,   24,  30,  54,  60,  84,  96,  120, 150, 180, 210, 216, 270, 294, 330, 384,
    420, 480, 486, 504, 540, 546, 600, 630, 726, 750, 840, 864, 924, 960, 990};

inline constexpr std::array<std::int64_t, 2> solid_rectangular_numbers = {12, 972};

inline constexpr std::array<std::int64_t, 21> two_mod_four_numbers = {
    6, 42, 66, 90, 114, 126, 198, 234, 306, 390, 462,
    510, 522, 570, 594, 690, 714, 798, 810, 966, 990};

/// Counts claimed in the prose for limit 999.
inline constexpr std::int64_t list_limit = 999;
inline constexpr std::int64_t claimed_area_count = 96;
inline constexpr std::int64_t claimed_pythagorean_count = 31;
inline constexpr std::int64_t claimed_solid_only_count = 2;
inline constexpr std::int64_t claimed_neither_count = 63;
inline constexpr std::int64_t claimed_two_mod_four_count = 21;

/// The two right triangles printed for area 210, sides as printed.
inline constexpr std::array<std::array<std::int64_t, 3>, 2> pythagorean_210 = {{
    {37, 35, 12},
    {20, 21, 20},
}};

struct CaseExample {
  int label;  // case number the example is printed under
  std::int64_t a, b, c, n1, n2, n3, delta, d;
  // Printed 2-adic valuations; all zero when not printed. `alphas_equal`
  // records a printed claim that they coincide without values.
  std::array<unsigned, 3> alphas;
  bool alphas_equal;
};

/// Numerical examples for Cases 2 to 7.
inline constexpr std::array<CaseExample, 6> case_examples = {{
    {2, 6, 5, 9, 8, 10, 2, 1, 2, {0, 0, 0}, false},
    {3, 6, 12, 9, 15, 3, 9, 3, 3, {0, 0, 0}, false},
    {4, 6, 14, 18, 26, 10, 2, 2, 2, {0, 0, 0}, false},
    {5, 34, 38, 44, 48, 40, 28, 4, 8, {0, 0, 0}, false},
    {6, 34, 38, 44, 48, 40, 28, 4, 8, {3, 5, 4}, false},
    {7, 24, 28, 36, 40, 32, 16, 8, 8, {0, 0, 0}, true},
}};

struct SolidExample {
  std::int64_t x, y, z, t, d, listed_area;
};

/// The two listed solid rectangular numbers with the solution and d that
/// produce the generated triangles (8,5,5) and (72,45,45).
inline constexpr std::array<SolidExample, 2> solid_examples = {{
    {1, 2, 2, 3, 2, 12},
    {1, 2, 2, 3, 18, 972},
}};

}  // namespace heron::paper
