#include "rwrs/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace rwrs {

namespace {

std::string rational_text(const Rational& q) {
  namespace mp = boost::multiprecision;
  if (mp::denominator(q) == 1) return mp::numerator(q).str();
  return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

}  // namespace

Json walk_to_json(const Walk& w) { return Json{{"schema_version", schema_version}, {"steps", w.to_text()}}; }

Walk walk_from_json(const Json& j) { return Walk::from_text(j.at("steps").get<std::string>()); }

Json record_to_json(const Record& r) {
  return Json{{"schema_version", schema_version}, {"steps", r.walk().to_text()}, {"colors", r.colors}};
}

Record record_from_json(const Json& j) {
  Record r;
  r.steps = Walk::from_text(j.at("steps").get<std::string>()).steps();
  r.colors = j.at("colors").get<std::vector<uint32_t>>();
  if (r.colors.size() != r.steps.size()) throw std::invalid_argument("record steps and colors differ in length");
  return r;
}

Json scenery_to_json(const Scenery& s) {
  return Json{{"schema_version", schema_version}, {"alphabet", s.alphabet_size()}, {"lo", s.lo()}, {"colors", s.colors()}};
}

Scenery scenery_from_json(const Json& j) {
  return Scenery(j.at("alphabet").get<int>(), j.at("lo").get<int64_t>(), j.at("colors").get<std::vector<uint32_t>>());
}

Json errors_to_json(const ErrorSet& e) {
  return Json{{"schema_version", schema_version}, {"E", e.E}, {"E_plus", e.E_plus}, {"E_minus", e.E_minus}};
}

ErrorSet errors_from_json(const Json& j) {
  ErrorSet e;
  e.E = j.at("E").get<std::vector<int64_t>>();
  e.E_plus = j.value("E_plus", std::vector<int64_t>{});
  e.E_minus = j.value("E_minus", std::vector<int64_t>{});
  return e;
}

Json test_to_json(const Test& t) {
  Json a = Json::array();
  for (const auto& p : t.pairs) a.push_back(Json{{"t", p.t}, {"delta", p.delta}});
  return a;
}

Test test_from_json(const Json& j) {
  const Json& a = j.is_object() ? j.at("test") : j;
  Test t;
  for (const auto& p : a) t.pairs.push_back({p.at("t").get<int64_t>(), p.at("delta").get<int64_t>()});
  return t;
}

Json partial_scenery_to_json(const PartialScenery& p) {
  Json a = Json::array(), c = Json::array();
  for (const auto& [site, color] : p.assignments) {
    const auto& w = p.provenance.at(site);
    a.push_back(Json{{"site", site}, {"color", color}, {"pair", w.pair}, {"time", w.time}});
  }
  for (const auto& x : p.conflicts)
    c.push_back(Json{{"site", x.site}, {"existing", x.existing}, {"proposed", x.proposed}, {"pair", x.by.pair}, {"time", x.by.time}});
  return Json{{"schema_version", schema_version}, {"assignments", a}, {"conflicts", c}};
}

Json property_report_to_json(const PropertyReport& r) {
  Json c = Json::array();
  for (const auto& x : r.clauses) c.push_back(Json{{"clause", x.name}, {"pass", x.pass}, {"detail", x.detail}});
  return Json{{"all_pass", r.all_pass()}, {"error_free", r.error_free}, {"error_free_forced", r.error_free_forced}, {"clauses", c}};
}

Json params_to_json(const ScaleParams& p) {
  Json levels = Json::array();
  for (int m = 1; m <= p.k; ++m) {
    const LevelParams& lv = p.at(m);
    Json l{{"m", m},
           {"L", lv.L.str()},
           {"M_upper", lv.M_upper.str()},
           {"M_lower", lv.M_lower.str()},
           {"R_upper", lv.R_upper.str()},
           {"R_lower", lv.R_lower.str()},
           {"beta", decimal(lv.beta, 17)}};
    if (m >= 2) l["B"] = p.branching[m].str();
    l["N"] = p.N[m].str();
    levels.push_back(l);
  }
  Json rounding = Json::array();
  for (const auto& r : p.rounding)
    rounding.push_back(Json{{"name", r.name}, {"m", r.m}, {"raw", decimal(r.raw, 17)}, {"within", r.within}});
  Json j{{"schema_version", schema_version},
         {"mode", p.mode == Mode::paper ? "paper" : "desk"},
         {"k", p.k},
         {"alpha", rational_text(p.alpha)},
         {"N0", p.N.empty() ? std::string("") : p.N[0].str()},
         {"levels", levels}};
  if (p.mode == Mode::paper) {
    j["A"] = p.A.str();
    j["B"] = p.B.str();
    j["rounding"] = rounding;
  }
  j["warnings"] = p.warnings;
  return j;
}

Json sinuosity_to_json(const SinuosityReport& s) {
  return Json{{"sinuous", s.sinuous},
              {"union_size", s.union_size},
              {"len", s.len},
              {"threshold", decimal(s.threshold, 12)},
              {"lifted_per_level", s.lifted_per_level}};
}

Json trial_to_json(const TrialOutcome& o) {
  Json finder{{"ok", o.finder_ok}, {"reason", failure_name(o.finder.reason)}, {"detail", o.finder.detail}};
  if (o.finder_ok) finder["test"] = test_to_json(o.finder.test);
  Json j{{"schema_version", schema_version},
         {"trial", o.trial},
         {"attempts", o.attempts},
         {"unstopped", o.unstopped},
         {"N", o.N},
         {"method", "exact"},
         {"sinuosity", sinuosity_to_json(o.sinuosity)},
         {"errors", Json{{"E", o.errors.E.size()}, {"E_plus", o.errors.E_plus.size()}, {"E_minus", o.errors.E_minus.size()}}},
         {"finder", finder}};
  if (o.properties) j["properties"] = property_report_to_json(*o.properties);
  if (o.finder_ok) {
    j["passes"] = o.passes;
    j["domain_size"] = o.domain_size;
    j["reconstructed_size"] = o.reconstructed;
    j["size_target"] = o.size_target;
    j["conflicts"] = o.conflicts;
    j["scenery_mismatches"] = o.scenery_mismatches;
  }
  return j;
}

void write_badset_csv(std::ostream& os, const BadSetReport& report, bool header, int64_t trial, int64_t attempt) {
  if (header) os << "schema_version,trial,attempt,m,classifier,count,lifted_size,len_m\n";
  for (int m = 1; m <= report.k(); ++m) {
    const LevelBadSets& lv = report.level(m);
    for (Classifier c : all_classifiers)
      os << schema_version << ',' << trial << ',' << attempt << ',' << m << ',' << classifier_name(c) << ',' << lv[c].size() << ','
         << lv.lifted_size[static_cast<int>(c)] << ',' << lv.len << '\n';
  }
}

void write_bound_csv(std::ostream& os, const std::vector<BoundCheck>& rows) {
  os << "schema_version,bound,point,premise_ok,bound_value,oracle_value,method,lo,hi,verdict\n";
  os << std::setprecision(10);
  for (const auto& r : rows)
    os << schema_version << ',' << r.lemma << ',' << r.point << ',' << (r.premise_ok ? 1 : 0) << ',' << r.bound << ','
       << r.oracle << ',' << method_name(r.method) << ',' << r.lo << ',' << r.hi << ',' << (r.pass ? "pass" : "fail")
       << '\n';
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Json read_json_file(const std::string& path) { return Json::parse(read_file(path)); }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

}  // namespace rwrs
