// Acceptance checks, one PASS/FAIL line per criterion.
//   acceptance              run all
//   acceptance --criterion N

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "heron/heron.hpp"
#include "properties.hpp"

namespace {

using heron::Int;
using Clock = std::chrono::steady_clock;

// Pinned limits.
constexpr double table_seconds = 1.0;
constexpr double list_seconds = 60.0;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::set<std::pair<std::string, std::string>> erratum_cells(const heron::VerificationReport& r) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& e : r.errata) out.emplace(e.row, e.field);
  return out;
}

bool has_erratum(const heron::VerificationReport& r, const std::string& row,
                 const std::string& field, const std::string& paper,
                 const std::string& computed) {
  return std::any_of(r.errata.begin(), r.errata.end(), [&](const heron::Erratum& e) {
    return e.row == row && e.field == field && e.paper_value == paper &&
           e.computed_value == computed;
  });
}

Outcome criterion1() {
  const auto start = Clock::now();
  const heron::VerificationReport r = heron::verify_sample_table();
  const double t = seconds_since(start);
  std::ostringstream os;
  os << r.rows_matching << "/15 rows exact, " << r.errata.size() << " errata, " << t << " s";
  return {r.rows_checked == 15 && r.rows_matching == 15 && r.errata.empty() && r.ok() &&
              t < table_seconds,
          os.str()};
}

Outcome criterion2() {
  const auto start = Clock::now();
  const heron::VerificationReport r = heron::verify_generated_table();
  const double t = seconds_since(start);

  int areas = 0;
  for (const auto& row : heron::paper::generated_triangles) {
    const heron::QuadSolution s(row.x, row.y, row.z, row.t);
    const auto g = heron::triangle_from_solution(s, heron::paper::generated_scale);
    areas += g.area == Int(2) * 2 * row.x * row.y * row.z * row.t / 4 && g.area == row.area &&
             heron::integer_area(g.triangle) == g.area;
  }
  // Every side mismatch must be a Heron-confirmed erratum. The two named
  // corrections are required; the other side errata found by the same test
  // are pinned so that any change shows up here.
  std::set<std::pair<std::string, std::string>> sides;
  for (const auto& e : r.errata) {
    if (e.field != "factorization") sides.emplace(e.row, e.field);
  }
  const std::set<std::pair<std::string, std::string>> pinned = {
      {"row 3", "b"}, {"row 10", "b"}, {"row 11", "b"}, {"row 15", "b"}, {"row 15", "c"}};
  const bool named = has_erratum(r, "row 3", "b", "627", "629") &&
                     has_erratum(r, "row 15", "b", "415", "405") &&
                     has_erratum(r, "row 15", "c", "415", "405");
  std::ostringstream os;
  os << areas << "/15 areas exact, " << r.rows_reproduced << "/15 rows reproduced, "
     << sides.size() << " side errata (627->629 and 415->405 named; 204->205 and 81->117 "
     << "also forced by the Heron test), " << r.unexplained.size() << " unexplained, " << t
     << " s";
  return {areas == 15 && r.rows_reproduced == 15 && r.ok() && named && sides == pinned &&
              t < table_seconds,
          os.str()};
}

Outcome criterion3() {
  const auto start = Clock::now();
  const heron::VerificationReport r = heron::verify_factorization_table();
  // Independent per-row check of the sum identity on the decomposition of
  // each row's triangle, taken up to permutation.
  int identities = 0;
  for (const auto& row : heron::paper::factorization_table) {
    std::array<Int, 3> s = {row.a, row.b, row.c};
    if (!heron::detail::printed_area(row.a, row.b, row.c)) {
      const heron::CoprimeFactorization pf = heron::detail::factorization_of(row);
      if (pf.sum_identity_holds()) s = heron::reconstruct_from_factorization(pf).triangle.sides();
    }
    try {
      const auto f = heron::decompose(heron::Triangle(s[0], s[1], s[2]));
      identities += f.sum_identity_holds() &&
                    heron::reconstruct_from_factorization(f).area == row.area;
    } catch (const heron::Error&) {
    }
  }
  const double t = seconds_since(start);
  const std::set<std::pair<std::string, std::string>> pinned = {{"row 5", "D2"}, {"row 6", "c"}};
  const bool named = has_erratum(r, "row 5", "D2", "1", "2") &&
                     has_erratum(r, "row 6", "c", "3", "5");
  std::ostringstream os;
  os << r.rows_reproduced << "/7 rows reproduced (" << r.rows_matching << " verbatim), "
     << identities << "/7 sum identities, errata: row 5 D2 1->2, row 6 c 3->5, "
     << r.unexplained.size() << " unexplained, " << t << " s";
  return {r.rows_reproduced == 7 && identities == 7 && r.ok() && named &&
              erratum_cells(r) == pinned && t < table_seconds,
          os.str()};
}

Outcome criterion4() {
  const auto start = Clock::now();
  const heron::Catalog c = heron::build_catalog(Int(999));
  const auto lists = heron::verify_lists(c);
  const double t = seconds_since(start);

  std::vector<std::int64_t> area, expected_area(heron::paper::area_numbers.begin(),
                                                heron::paper::area_numbers.end());
  for (const auto& r : c.area) area.push_back(heron::to_int64(r.value));
  std::replace(expected_area.begin(), expected_area.end(), std::int64_t{296}, std::int64_t{396});
  std::sort(expected_area.begin(), expected_area.end());
  const bool area_ok = area.size() == 96 && area == expected_area;

  std::vector<std::int64_t> py;
  for (const auto& r : c.pythagorean) py.push_back(heron::to_int64(r.value));
  const std::vector<std::int64_t> paper_py(heron::paper::pythagorean_numbers.begin(),
                                           heron::paper::pythagorean_numbers.end());
  const bool py_ok = py == paper_py;

  const auto witnessed = [&](std::int64_t value, std::array<std::int64_t, 3> sides) {
    for (const auto& r : c.solid) {
      if (r.value != value) continue;
      return std::any_of(r.witnesses.begin(), r.witnesses.end(), [&](const heron::Witness& w) {
        return w.solid && w.triangle == heron::Triangle(sides[0], sides[1], sides[2]);
      });
    }
    return false;
  };
  const bool solid_ok = witnessed(12, {8, 5, 5}) && witnessed(972, {72, 45, 45});
  const bool has48 = witnessed(48, {16, 10, 10});

  bool erratum = false;
  for (const auto& r : lists) {
    if (r.table_id == "lists/counts") {
      for (const auto& e : r.errata) {
        erratum = erratum || (e.field == "solid rectangular, not Pythagorean" &&
                              e.paper_value == "2" && e.computed_value == "11");
      }
    }
  }
  std::ostringstream os;
  os << "area " << area.size() << " values " << (area_ok ? "match" : "differ")
     << " with 296->396; Pythagorean " << py.size() << " computed vs 31 printed ("
     << (py_ok ? "match" : "differ: 420 is not Pythagorean; 240, 336, 720, 756 are") << "); "
     << "12/972 witnesses " << (solid_ok ? "ok" : "missing") << "; 48 via (16,10,10) "
     << (has48 ? "ok" : "missing") << "; solid-count erratum " << (erratum ? "emitted" : "absent")
     << "; " << t << " s";
  return {area_ok && py_ok && solid_ok && has48 && erratum && t < list_seconds, os.str()};
}

Outcome criterion5() {
  const auto start = Clock::now();
  const heron::ConjectureReport r = heron::check_conjecture(Int(999));
  const double t = seconds_since(start);
  std::ostringstream os;
  os << r.intersection.size() << " values both Pythagorean and solid rectangular at 999, " << t
     << " s";
  return {r.holds() && t < list_seconds, os.str()};
}

Outcome criterion6() {
  std::ostringstream os;
  bool pass = true;
  const auto suite = [&](const char* name, const props::Failures& f) {
    if (os.tellp() > 0) os << "; ";
    os << name << ' ' << f.size() << " failures";
    pass = pass && f.empty();
  };
  suite("lemma1-mod8", props::lemma1_mod8());
  suite("observation1-l30", props::observation1(30));
  suite("quad-oracle-t30", props::quad_oracle_equivalence(30));
  suite("perimeter-500", props::triangle_invariants(500));
  suite("area-identity-t30-scale6", props::generated_area_identity(30, 6));
  return {pass, os.str()};
}

Outcome criterion7() {
  const heron::Catalog c = heron::build_catalog(Int(999));
  std::vector<std::int64_t> twos;
  for (const auto& r : c.area) {
    if ((r.value & 3) == 2) twos.push_back(heron::to_int64(r.value));
  }
  const std::vector<std::int64_t> printed(heron::paper::two_mod_four_numbers.begin(),
                                          heron::paper::two_mod_four_numbers.end());
  std::ostringstream os;
  os << twos.size() << " of " << c.area.size() << " values are 2 mod 4, printed sub-list has "
     << printed.size();
  return {twos.size() == 21 && twos == printed, os.str()};
}

const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
    {"sample table reproduction", criterion1},
    {"generated table reproduction", criterion2},
    {"factorization table reproduction", criterion3},
    {"number lists at 999", criterion4},
    {"conjecture check at 999", criterion5},
    {"property suites", criterion6},
    {"mod-4 split", criterion7},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::size_t> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      const long n = std::strtol(argv[++i], nullptr, 10);
      if (n < 1 || n > static_cast<long>(criteria.size())) {
        std::cerr << "unknown criterion " << argv[i] << '\n';
        return 2;
      }
      selected.push_back(static_cast<std::size_t>(n));
    } else {
      std::cerr << "usage: acceptance [--criterion N]...\n";
      return 2;
    }
  }
  if (selected.empty()) {
    for (std::size_t n = 1; n <= criteria.size(); ++n) selected.push_back(n);
  }
  int failed = 0;
  for (std::size_t n : selected) {
    const auto& [name, check] = criteria[n - 1];
    Outcome o{false, ""};
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << " (" << name
              << "): " << o.detail << std::endl;
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
