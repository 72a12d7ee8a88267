#pragma once

// Exhaustive enumeration of triangle area numbers, Pythagorean numbers and
// solid rectangular numbers up to a limit.
//
// Integer area forces N1, N2, N3 even. Writing N_i = 2u_i gives
// A^2 = (u1+u2+u3) u1 u2 u3 and sides (u2+u3, u1+u3, u1+u2). Each u_i >= 1,
// so N1 N2 N3 >= 4(N-4) and A <= limit bounds the perimeter by
// N <= 2 + 2 isqrt(limit^2 + 1).

#include <algorithm>
#include <cstddef>
#include <future>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "heron/arith.hpp"
#include "heron/decomposition.hpp"
#include "heron/errors.hpp"
#include "heron/generator.hpp"
#include "heron/paper_tables.hpp"
#include "heron/quad.hpp"
#include "heron/triangle.hpp"

namespace heron {

struct Witness {
  Triangle triangle;  // sides descending
  Int area;
  std::optional<SolidWitness> solid;
};

struct NumberRecord {
  Int value;
  bool is_triangle_area = false;
  bool is_pythagorean = false;
  bool is_solid_rectangular = false;
  std::vector<Witness> witnesses;
};

enum class SolidMode { definition2, paper_list };

struct CatalogOptions {
  unsigned jobs = 1;
  std::size_t max_witnesses = 32;  // per value; smallest canonical triangles kept
};

inline Int perimeter_bound(const Int& limit) { return 2 + 2 * isqrt(Int(limit * limit + 1)); }

namespace detail {

using Hits = std::vector<std::pair<Int, Witness>>;

inline Witness make_witness(const Triangle& t, const Int& area) {
  return Witness{t.canonical(), area, classify_solid_rectangular(t.canonical())};
}

/// Runs shard(i) for i in [0, jobs) and concatenates the results in shard order.
template <typename Shard>
Hits run_sharded(unsigned jobs, Shard&& shard) {
  jobs = std::max(1u, jobs);
  Hits all;
  if (jobs == 1) return shard(0u, 1u);
  std::vector<std::future<Hits>> futures;
  for (unsigned i = 0; i < jobs; ++i) {
    futures.push_back(std::async(std::launch::async, shard, i, jobs));
  }
  for (auto& f : futures) {
    Hits part = f.get();
    all.insert(all.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return all;
}

/// Groups hits by value, sorts each witness list and truncates it.
inline std::vector<NumberRecord> group(Hits hits, std::size_t max_witnesses) {
  std::map<Int, std::vector<Witness>> by_value;
  for (auto& [v, w] : hits) by_value[v].push_back(std::move(w));
  std::vector<NumberRecord> out;
  out.reserve(by_value.size());
  for (auto& [v, ws] : by_value) {
    std::sort(ws.begin(), ws.end(),
              [](const Witness& x, const Witness& y) { return x.triangle < y.triangle; });
    ws.erase(std::unique(ws.begin(), ws.end(),
                         [](const Witness& x, const Witness& y) {
                           return x.triangle == y.triangle;
                         }),
             ws.end());
    NumberRecord r;
    r.value = v;
    r.is_solid_rectangular = std::any_of(ws.begin(), ws.end(),
                                         [](const Witness& w) { return w.solid.has_value(); });
    if (ws.size() > max_witnesses) ws.erase(ws.begin() + static_cast<std::ptrdiff_t>(max_witnesses), ws.end());
    r.witnesses = std::move(ws);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace detail

/// Every A <= limit that is the area of an integer-sided triangle. The
/// solid-rectangular flag is set from per-triangle classification of all
/// witnesses found, before truncation.
inline std::vector<NumberRecord> triangle_area_numbers(const Int& limit,
                                                       const CatalogOptions& opt = {}) {
  if (limit < 1) throw RangeError("limit must be positive");
  const Int limit_sq = limit * limit;
  const Int max_half_perimeter = perimeter_bound(limit) / 2;

  auto shard = [&](unsigned index, unsigned count) {
    detail::Hits hits;
    // u >= v >= w >= 1, u + v + w <= max_half_perimeter
    for (Int u = 1 + index; u + 2 <= max_half_perimeter; u += count) {
      if (u * (u + 2) > limit_sq) break;
      for (Int v = 1; v <= u; ++v) {
        if (u * v * (u + v + 1) > limit_sq) break;
        for (Int w = 1; w <= v; ++w) {
          const Int s = u + v + w;
          if (s > max_half_perimeter) break;
          const Int product = s * u * v * w;
          if (product > limit_sq) break;
          if (const std::optional<Int> area = is_perfect_square(product)) {
            const Triangle t(u + v, u + w, v + w);
            const std::optional<Int> heron = integer_area(t);
            if (!heron || *heron != *area) {
              throw InvariantError("area mismatch for " + t.str());
            }
            hits.emplace_back(*area, detail::make_witness(t, *area));
          }
        }
      }
    }
    return hits;
  };

  std::vector<NumberRecord> records =
      detail::group(detail::run_sharded(opt.jobs, shard), opt.max_witnesses);
  for (NumberRecord& r : records) r.is_triangle_area = true;
  return records;
}

/// Areas pq/2 <= limit of right triangles with legs p <= q.
inline std::vector<NumberRecord> pythagorean_numbers(const Int& limit,
                                                     const CatalogOptions& opt = {}) {
  if (limit < 1) throw RangeError("limit must be positive");
  const Int twice = 2 * limit;

  auto shard = [&](unsigned index, unsigned count) {
    detail::Hits hits;
    for (Int p = 1 + index; p * p <= twice; p += count) {
      for (Int q = p; p * q <= twice; ++q) {
        if (const std::optional<Int> hyp = is_perfect_square(Int(p * p + q * q))) {
          const Triangle t(*hyp, q, p);
          const Int area = p * q / 2;
          hits.emplace_back(area, detail::make_witness(t, area));
        }
      }
    }
    return hits;
  };

  std::vector<NumberRecord> records =
      detail::group(detail::run_sharded(opt.jobs, shard), opt.max_witnesses);
  for (NumberRecord& r : records) {
    r.is_triangle_area = true;
    r.is_pythagorean = true;
  }
  return records;
}

/// Solid rectangular numbers x y z t d^2 / 4 <= limit over primitive
/// solutions and even d. Each witness triangle is re-classified through the
/// factorization route, and both routes must agree.
inline std::vector<NumberRecord> solid_rectangular_numbers(const Int& limit, SolidMode mode,
                                                           const CatalogOptions& opt = {}) {
  if (limit < 1) throw RangeError("limit must be positive");
  if (mode == SolidMode::paper_list) {
    const std::vector<NumberRecord> full =
        solid_rectangular_numbers(limit, SolidMode::definition2, opt);
    std::vector<NumberRecord> out;
    for (std::int64_t v : paper::solid_rectangular_numbers) {
      if (v > limit) continue;
      auto it = std::find_if(full.begin(), full.end(),
                             [&](const NumberRecord& r) { return r.value == v; });
      if (it != full.end()) {
        out.push_back(*it);
      } else {
        NumberRecord r;
        r.value = v;
        out.push_back(std::move(r));
      }
    }
    return out;
  }

  // x y z t >= 1 * 2l * 2 * (2l + 1) > 8 l^2, so l^2 < limit / 8.
  EnumerateOptions eo;
  eo.l_max = std::max<Int>(1, isqrt(Int(limit / 8)) + 1);
  eo.normalized = true;

  auto shard = [&](unsigned index, unsigned count) {
    detail::Hits hits;
    EnumerateOptions mine = eo;
    for (Int l = 1 + index; l <= eo.l_max; l += count) {
      mine.l_min = l;
      mine.l_max = l;
      for_each_solution(mine, [&](const Emission& e) {
        const QuadSolution& s = e.solution;
        if (!is_primitive_solution(s)) return;
        const Int product = s.x() * s.y() * s.z() * s.t();
        if (product > limit) return;
        for (Int d = 2;; d += 2) {
          const Int area = solid_area(s, d);
          if (area > limit) break;
          const GeneratedTriangle g = triangle_from_solution(s, d);
          Witness w = detail::make_witness(g.triangle, area);
          if (!w.solid || integer_area(w.triangle) != area) {
            throw InvariantError("factorization route rejects solid triangle " +
                                 g.triangle.str());
          }
          hits.emplace_back(area, std::move(w));
        }
      });
    }
    return hits;
  };

  std::vector<NumberRecord> records =
      detail::group(detail::run_sharded(opt.jobs, shard), opt.max_witnesses);
  for (NumberRecord& r : records) {
    r.is_triangle_area = true;
    r.is_solid_rectangular = true;
  }
  return records;
}

/// The three lists at one limit with cross-class flags filled in.
struct Catalog {
  Int limit;
  std::vector<NumberRecord> area;
  std::vector<NumberRecord> pythagorean;
  std::vector<NumberRecord> solid;  // definition2 mode
};

inline Catalog build_catalog(const Int& limit, const CatalogOptions& opt = {}) {
  Catalog c{limit, triangle_area_numbers(limit, opt), pythagorean_numbers(limit, opt),
            solid_rectangular_numbers(limit, SolidMode::definition2, opt)};

  std::set<Int> area_values, py_values, solid_values, solid_by_triangle;
  for (const auto& r : c.area) {
    area_values.insert(r.value);
    if (r.is_solid_rectangular) solid_by_triangle.insert(r.value);
  }
  for (const auto& r : c.pythagorean) py_values.insert(r.value);
  for (const auto& r : c.solid) solid_values.insert(r.value);

  if (solid_values != solid_by_triangle) {
    throw InvariantError("solid rectangular routes disagree at limit " + limit.str());
  }
  for (const Int& v : py_values) {
    if (!area_values.count(v)) {
      throw InvariantError("Pythagorean number " + v.str() + " missing from area list");
    }
  }

  const auto flag = [&](NumberRecord& r) {
    r.is_triangle_area = area_values.count(r.value) > 0;
    r.is_pythagorean = py_values.count(r.value) > 0;
    r.is_solid_rectangular = solid_values.count(r.value) > 0;
  };
  for (auto* list : {&c.area, &c.pythagorean, &c.solid}) {
    for (NumberRecord& r : *list) flag(r);
  }
  return c;
}

/// Membership flags and area witnesses for a single value.
inline NumberRecord classify_number(const Int& value, const Catalog& catalog) {
  if (value < 1 || value > catalog.limit) {
    throw RangeError("value " + value.str() + " outside catalog limit " + catalog.limit.str());
  }
  for (const NumberRecord& r : catalog.area) {
    if (r.value == value) return r;
  }
  NumberRecord r;
  r.value = value;
  return r;
}

inline NumberRecord classify_number(const Int& value, const Int& limit_context,
                                    const CatalogOptions& opt = {}) {
  return classify_number(value, build_catalog(limit_context, opt));
}

struct ConjectureReport {
  Int limit;
  std::vector<NumberRecord> intersection;  // Pythagorean and solid rectangular
  bool holds() const { return intersection.empty(); }
};

inline ConjectureReport check_conjecture(const Catalog& catalog) {
  ConjectureReport rep{catalog.limit, {}};
  for (const NumberRecord& r : catalog.pythagorean) {
    if (r.is_solid_rectangular) rep.intersection.push_back(r);
  }
  return rep;
}

inline ConjectureReport check_conjecture(const Int& limit, const CatalogOptions& opt = {}) {
  return check_conjecture(build_catalog(limit, opt));
}

}  // namespace heron
