#pragma once

// Text, JSON and CSV rendering of library results. JSON objects keep
// insertion order so output is stable and follows the documented schema.

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "heron/catalog.hpp"
#include "heron/decomposition.hpp"
#include "heron/generator.hpp"
#include "heron/quad.hpp"
#include "heron/verify.hpp"

namespace heron::report {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
inline Json number(const Int& v) {
  if (v <= std::numeric_limits<std::int64_t>::max() &&
      v >= std::numeric_limits<std::int64_t>::min()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

inline Json solution_json(const QuadSolution& s) {
  return Json::array({number(s.x()), number(s.y()), number(s.z()), number(s.t())});
}

inline Json sides_json(const Triangle& t) {
  return Json::array({number(t.a()), number(t.b()), number(t.c())});
}

inline Json solid_json(const std::optional<SolidWitness>& w) {
  if (!w) return nullptr;
  return Json{{"xyzt", solution_json(w->solution)}, {"d", number(w->d)}};
}

inline std::vector<std::string> classes_of(const NumberRecord& r) {
  std::vector<std::string> out;
  if (r.is_triangle_area) out.emplace_back("area");
  if (r.is_pythagorean) out.emplace_back("pythagorean");
  if (r.is_solid_rectangular) out.emplace_back("solid");
  return out;
}

inline Json record_json(const NumberRecord& r) {
  Json ws = Json::array();
  for (const Witness& w : r.witnesses) {
    ws.push_back(Json{{"sides", sides_json(w.triangle)},
                      {"area", number(w.area)},
                      {"solid_witness", solid_json(w.solid)}});
  }
  return Json{{"value", number(r.value)}, {"classes", classes_of(r)}, {"witnesses", ws}};
}

inline Json records_json(const std::vector<NumberRecord>& records) {
  Json out = Json::array();
  for (const NumberRecord& r : records) out.push_back(record_json(r));
  return out;
}

inline void write_csv(std::ostream& os, const std::vector<NumberRecord>& records) {
  os << "value,is_area,is_pythagorean,is_solid,witness_a,witness_b,witness_c\n";
  for (const NumberRecord& r : records) {
    os << r.value << ',' << r.is_triangle_area << ',' << r.is_pythagorean << ','
       << r.is_solid_rectangular;
    if (r.witnesses.empty()) {
      os << ",,,\n";
    } else {
      const Triangle& t = r.witnesses.front().triangle;
      os << ',' << t.a() << ',' << t.b() << ',' << t.c() << '\n';
    }
  }
}

inline void write_text(std::ostream& os, const std::vector<NumberRecord>& records) {
  for (const NumberRecord& r : records) {
    os << r.value;
    for (const std::string& c : classes_of(r)) os << ' ' << c;
    if (!r.witnesses.empty()) os << "  " << r.witnesses.front().triangle;
    os << '\n';
  }
  os << records.size() << " values\n";
}

inline Json factorization_json(const Triangle& t, const Int& area,
                               const CoprimeFactorization& f,
                               const std::optional<SolidWitness>& w) {
  return Json{{"sides", sides_json(t)},
              {"area", number(area)},
              {"d", number(f.d)},
              {"D1", number(f.D1)},
              {"D2", number(f.D2)},
              {"D3", number(f.D3)},
              {"d12", number(f.d12)},
              {"d13", number(f.d13)},
              {"d23", number(f.d23)},
              {"k1", number(f.k1)},
              {"k2", number(f.k2)},
              {"k3", number(f.k3)},
              {"k", number(f.k)},
              {"sum_identity", f.sum_identity_holds()},
              {"solid_witness", solid_json(w)}};
}

inline Json generated_json(const GeneratedTriangle& g) {
  return Json{{"solution", solution_json(g.source)},
              {"scale", number(g.scale)},
              {"sides", sides_json(g.triangle)},
              {"area", number(g.area)}};
}

inline void write_solutions(std::ostream& os, const std::vector<Emission>& rows) {
  os << "l m l^2+m^2 n x y z t\n";
  for (const Emission& e : rows) {
    const ParamTriple& p = e.param;
    const QuadSolution& s = e.solution;
    os << p.l << ' ' << p.m << ' ' << p.l * p.l + p.m * p.m << ' ' << p.n << ' ' << s.x() << ' '
       << s.y() << ' ' << s.z() << ' ' << s.t() << '\n';
  }
  os << rows.size() << " solutions\n";
}

inline Json conjecture_json(const ConjectureReport& r) {
  return Json{{"limit", number(r.limit)},
              {"holds", r.holds()},
              {"intersection", records_json(r.intersection)}};
}

inline Json verification_json(const VerificationReport& r) {
  Json errata = Json::array();
  for (const Erratum& e : r.errata) {
    errata.push_back(Json{{"row", e.row},
                          {"field", e.field},
                          {"paper_value", e.paper_value},
                          {"computed_value", e.computed_value},
                          {"justification", e.justification}});
  }
  return Json{{"table_id", r.table_id},
              {"rows_checked", r.rows_checked},
              {"rows_matching", r.rows_matching},
              {"rows_reproduced", r.rows_reproduced},
              {"errata", errata},
              {"unexplained", r.unexplained}};
}

inline void write_verification(std::ostream& os, const VerificationReport& r) {
  os << "[" << r.table_id << "] checked " << r.rows_checked << ", exact " << r.rows_matching
     << ", reproduced " << r.rows_reproduced << ", errata " << r.errata.size()
     << ", unexplained " << r.unexplained.size() << '\n';
  for (const Erratum& e : r.errata) {
    os << "  erratum " << e.row << " " << e.field << ": " << e.paper_value << " -> "
       << e.computed_value << " (" << e.justification << ")\n";
  }
  for (const std::string& u : r.unexplained) os << "  UNEXPLAINED " << u << '\n';
}

}  // namespace heron::report
