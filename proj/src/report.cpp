#include "linset/report.hpp"

#include <sstream>

namespace linset {

Json field_json(const FieldSpec& spec) {
  return Json{{"p", spec.p}, {"e", spec.e}, {"n", spec.n}, {"modulus", spec.modulus}};
}

Json header_json(const FieldCtx& F, const std::string& command, std::uint64_t seed) {
  return Json{{"field", field_json(F.spec())}, {"version", kVersion}, {"command", command}, {"seed", seed}};
}

Json profile_json(const LinearSetProfile& prof) {
  Json spectrum = Json::object();
  for (const auto& [w, count] : prof.weight_spectrum) spectrum[std::to_string(w)] = count;
  return Json{{"size", prof.size},
              {"rank", prof.rank},
              {"maxfield_d", prof.maxfield_d},
              {"scattered", prof.scattered},
              {"weight_spectrum", spectrum}};
}

Json map_json(const SemilinearMap& m) {
  return Json{{"A", m.A.v}, {"B", m.B.v}, {"C", m.C.v}, {"D", m.D.v}, {"k", m.k}};
}

Json class_json(const ClassReport& rep) {
  Json reps = Json::array();
  for (const auto& r : rep.zgl.representatives) reps.push_back(format_qpoly(r));
  Json blocks = Json::array();
  for (const auto& b : rep.blocks) blocks.push_back(b);
  Json wit = Json::array();
  for (const auto& w : rep.witnesses) {
    Json j = map_json(w.map);
    j["from"] = w.from;
    j["to"] = w.to;
    wit.push_back(j);
  }
  return Json{{"zgl_class", rep.zgl.zgl_class()},
              {"gl_class", rep.gl_class()},
              {"simple", rep.simple()},
              {"equal_polys", rep.zgl.equal_polys.size()},
              {"representatives", reps},
              {"blocks", blocks},
              {"witnesses", wit}};
}

Json rank_distribution_json(const FieldCtx& F, const std::vector<std::uint64_t>& dist, bool mrd) {
  return Json{{"n", F.n()}, {"q", F.q()}, {"A", dist}, {"mrd", mrd}};
}

Json blocking_json(const BlockingReport& rep) {
  return Json{{"plane", "PG(2,q^n)"},
              {"size", rep.size},
              {"is_blocking", rep.is_blocking},
              {"N", rep.N},
              {"redei_lines", rep.redei_lines}};
}

std::string rank_distribution_csv(const std::vector<std::uint64_t>& dist) {
  std::ostringstream out;
  out << "r,count\n";
  for (std::size_t r = 0; r < dist.size(); ++r) out << r << ',' << dist[r] << '\n';
  return out.str();
}

std::string emit(const Report& report, const std::string& format) {
  if (format == "json") {
    Json j{{"header", report.header}, {"body", report.body}, {"falsified", report.falsified}};
    return j.dump(2) + "\n";
  }
  if (format == "csv") {
    if (report.csv.empty()) throw Error(ErrorKind::BadParams, "this command has no CSV form");
    return report.csv;
  }
  throw Error(ErrorKind::BadParams, "unknown format '" + format + "'");
}

}  // namespace linset
