#pragma once

// Command-line front end. Exit status: 0 success, 1 verification failure,
// 2 usage or domain error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "heron/catalog.hpp"
#include "heron/decomposition.hpp"
#include "heron/generator.hpp"
#include "heron/quad.hpp"
#include "heron/report.hpp"
#include "heron/verify.hpp"

namespace heron::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failure = 1;
inline constexpr int exit_usage = 2;

namespace detail {

inline const CLI::Validator decimal_integer(
    [](std::string& s) -> std::string {
      const std::size_t start = !s.empty() && (s[0] == '-' || s[0] == '+') ? 1 : 0;
      if (s.size() == start ||
          !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; })) {
        return "not a decimal integer: " + s;
      }
      return {};
    },
    "INTEGER", "decimal integer");

inline std::vector<Int> to_ints(const std::vector<std::string>& v) {
  std::vector<Int> out;
  for (const std::string& s : v) out.emplace_back(s);
  return out;
}

struct Args {
  // solve
  std::int64_t lmax = 0;
  std::optional<std::int64_t> mmax;
  bool normalized = false;
  unsigned scale_pow2 = 0;
  // generate
  std::vector<std::string> param, solution;
  std::string scale;
  // catalog, classify, conjecture
  std::string limit;
  std::string klass = "area";
  std::string solid_mode = "definition2";
  std::string format = "text";
  std::string out_file;
  unsigned jobs = 1;
  std::size_t max_witnesses = 32;
  std::string value;
  std::string classify_format = "json";
  // decompose
  std::vector<std::string> sides;
  // verify-paper
  std::string table = "all";
};

inline int solve(const Args& a, std::ostream& out) {
  EnumerateOptions opt;
  opt.l_max = a.lmax;
  if (a.mmax) opt.m_max = Int(*a.mmax);
  opt.normalized = a.normalized;
  opt.scale_pow2 = a.scale_pow2;
  report::write_solutions(out, enumerate_solutions(opt));
  return exit_ok;
}

inline int generate(const Args& a, std::ostream& out, std::ostream& err) {
  if (a.param.empty() == a.solution.empty()) {
    err << "error: exactly one of --param or --solution is required\n";
    return exit_usage;
  }
  std::optional<QuadSolution> s;
  if (!a.param.empty()) {
    const std::vector<Int> p = to_ints(a.param);
    s = solution_from_param({p[0], p[1], p[2]});
  } else {
    const std::vector<Int> v = to_ints(a.solution);
    s.emplace(v[0], v[1], v[2], v[3]);
  }
  out << report::generated_json(triangle_from_solution(*s, Int(a.scale))).dump(2) << '\n';
  return exit_ok;
}

inline CatalogOptions catalog_options(const Args& a) {
  CatalogOptions opt;
  opt.jobs = a.jobs;
  opt.max_witnesses = a.max_witnesses;
  return opt;
}

inline void emit_records(const std::vector<NumberRecord>& records, const std::string& format,
                         std::ostream& os) {
  if (format == "json") {
    os << report::records_json(records).dump(2) << '\n';
  } else if (format == "csv") {
    report::write_csv(os, records);
  } else {
    report::write_text(os, records);
  }
}

inline int catalog(const Args& a, std::ostream& out, std::ostream& err) {
  const Int limit(a.limit);
  const Catalog c = build_catalog(limit, catalog_options(a));
  std::vector<NumberRecord> records;
  if (a.klass == "area") {
    records = c.area;
  } else if (a.klass == "pythagorean") {
    records = c.pythagorean;
  } else if (a.solid_mode == "definition2") {
    records = c.solid;
  } else {
    // Printed values, flagged and witnessed from the computed catalog.
    for (const NumberRecord& r :
         solid_rectangular_numbers(limit, SolidMode::paper_list, catalog_options(a))) {
      NumberRecord full = r;
      for (const NumberRecord& known : c.area) {
        if (known.value == r.value) full = known;
      }
      records.push_back(std::move(full));
    }
  }
  if (a.out_file.empty()) {
    emit_records(records, a.format, out);
    return exit_ok;
  }
  std::ofstream file(a.out_file, std::ios::binary);
  if (!file) {
    err << "error: cannot open " << a.out_file << " for writing\n";
    return exit_usage;
  }
  emit_records(records, a.format, file);
  out << "wrote " << records.size() << " records to " << a.out_file << '\n';
  return exit_ok;
}

inline int classify(const Args& a, std::ostream& out) {
  const Int value(a.value);
  const Int limit = a.limit.empty() ? value : Int(a.limit);
  const NumberRecord r = classify_number(value, limit, catalog_options(a));
  if (a.classify_format == "text") {
    report::write_text(out, {r});
  } else {
    out << report::record_json(r).dump(2) << '\n';
  }
  return exit_ok;
}

inline int decompose_cmd(const Args& a, std::ostream& out) {
  const std::vector<Int> s = to_ints(a.sides);
  const Triangle t(s[0], s[1], s[2]);
  const CoprimeFactorization f = decompose(t);
  const Reconstruction r = reconstruct_from_factorization(f);
  out << report::factorization_json(t, r.area, f, extract_quad_solution(f)).dump(2) << '\n';
  return exit_ok;
}

inline int conjecture(const Args& a, std::ostream& out) {
  const ConjectureReport r = check_conjecture(Int(a.limit), catalog_options(a));
  if (a.format == "json") {
    out << report::conjecture_json(r).dump(2) << '\n';
  } else {
    out << "limit " << r.limit << ": " << r.intersection.size()
        << " values both Pythagorean and solid rectangular\n";
    for (const NumberRecord& rec : r.intersection) {
      out << "  " << rec.value << '\n';
    }
    out << (r.holds() ? "no counterexample" : "counterexample found") << '\n';
  }
  return r.holds() ? exit_ok : exit_verification_failure;
}

inline int verify_paper(const Args& a, std::ostream& out) {
  std::vector<VerificationReport> reports;
  const bool all = a.table == "all";
  if (all || a.table == "sample") reports.push_back(verify_sample_table());
  if (all || a.table == "generated") reports.push_back(verify_generated_table());
  if (all || a.table == "final") reports.push_back(verify_factorization_table());
  if (all || a.table == "prose") reports.push_back(verify_prose());
  if (all || a.table == "lists") {
    for (VerificationReport& r : verify_lists()) reports.push_back(std::move(r));
  }
  bool ok = true;
  report::Json doc = report::Json::array();
  for (const VerificationReport& r : reports) {
    ok = ok && r.ok();
    if (a.format == "json") {
      doc.push_back(report::verification_json(r));
    } else {
      report::write_verification(out, r);
    }
  }
  if (a.format == "json") {
    out << doc.dump(2) << '\n';
  } else {
    out << (ok ? "all mismatches explained" : "unexplained mismatches found") << '\n';
  }
  return ok ? exit_ok : exit_verification_failure;
}

}  // namespace detail

/// Runs one command line, `args` excluding the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using detail::decimal_integer;
  detail::Args a;
  CLI::App app{"Integer-sided triangles with integer area", "heron"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "parametrized solutions of x^2+y^2+z^2=t^2");
  solve->add_option("--lmax", a.lmax, "largest l")->required()->check(CLI::PositiveNumber);
  solve->add_option("--mmax", a.mmax, "largest m (default lmax)")->check(CLI::PositiveNumber);
  solve->add_flag("--normalized", a.normalized, "only m <= l and x odd");
  solve->add_option("--scale-pow2", a.scale_pow2, "also emit 2^j multiples, j <= K");

  auto* generate = app.add_subcommand("generate", "triangle from a solution and a scale");
  auto* param = generate->add_option("--param", a.param, "l m n")->expected(3)->check(
      decimal_integer);
  auto* solution = generate->add_option("--solution", a.solution, "x y z t")
                       ->expected(4)
                       ->check(decimal_integer);
  param->excludes(solution);
  generate->add_option("--scale", a.scale, "scale D")->required()->check(decimal_integer);

  const std::vector<std::string> formats = {"text", "json", "csv"};
  auto* catalog = app.add_subcommand("catalog", "list area numbers up to a limit");
  catalog->add_option("--limit", a.limit, "largest value")->required()->check(decimal_integer);
  catalog->add_option("--class", a.klass, "area, pythagorean or solid")
      ->check(CLI::IsMember({"area", "pythagorean", "solid"}));
  catalog->add_option("--solid-mode", a.solid_mode, "definition2 or paper")
      ->check(CLI::IsMember({"definition2", "paper"}));
  catalog->add_option("--format", a.format, "text, json or csv")->check(CLI::IsMember(formats));
  catalog->add_option("--out", a.out_file, "write to FILE");

  auto* classify = app.add_subcommand("classify", "classes and witnesses of one value");
  classify->add_option("A", a.value, "value")->required()->check(decimal_integer);
  classify->add_option("--limit", a.limit, "catalog limit (default A)")->check(decimal_integer);
  classify->add_option("--format", a.classify_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  auto* decompose = app.add_subcommand("decompose", "coprime factorization of a triangle");
  decompose->add_option("sides", a.sides, "A B C")->required()->expected(3)->check(
      decimal_integer);

  auto* conjecture = app.add_subcommand("conjecture", "Pythagorean vs solid rectangular check");
  conjecture->add_option("--limit", a.limit, "largest value")->required()->check(
      decimal_integer);
  conjecture->add_option("--format", a.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify-paper", "recompute the published tables");
  verify->add_option("--table", a.table, "sample, generated, final, prose, lists or all")
      ->check(CLI::IsMember({"sample", "generated", "final", "prose", "lists", "all"}));
  verify->add_option("--format", a.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  for (auto* sub : {catalog, classify, conjecture}) {
    sub->add_option("--jobs", a.jobs, "enumeration shards")->check(CLI::Range(1u, 256u));
    sub->add_option("--max-witnesses", a.max_witnesses, "witnesses kept per value")
        ->check(CLI::PositiveNumber);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    if (solve->parsed()) return detail::solve(a, out);
    if (generate->parsed()) return detail::generate(a, out, err);
    if (catalog->parsed()) return detail::catalog(a, out, err);
    if (classify->parsed()) return detail::classify(a, out);
    if (decompose->parsed()) return detail::decompose_cmd(a, out);
    if (conjecture->parsed()) return detail::conjecture(a, out);
    if (verify->parsed()) return detail::verify_paper(a, out);
  } catch (const Error& e) {
    err << e.name() << ": " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace heron::cli
