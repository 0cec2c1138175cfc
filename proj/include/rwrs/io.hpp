#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "rwrs/bad_sets.hpp"
#include "rwrs/params.hpp"
#include "rwrs/pipeline.hpp"
#include "rwrs/prob.hpp"
#include "rwrs/scenery.hpp"
#include "rwrs/test_engine.hpp"
#include "rwrs/walk.hpp"

namespace rwrs {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

Json walk_to_json(const Walk& w);
Walk walk_from_json(const Json& j);
Json record_to_json(const Record& r);
Record record_from_json(const Json& j);
Json scenery_to_json(const Scenery& s);
Scenery scenery_from_json(const Json& j);
Json errors_to_json(const ErrorSet& e);
ErrorSet errors_from_json(const Json& j);
Json test_to_json(const Test& t);
Test test_from_json(const Json& j);
Json partial_scenery_to_json(const PartialScenery& p);
Json property_report_to_json(const PropertyReport& r);
Json params_to_json(const ScaleParams& p);
Json sinuosity_to_json(const SinuosityReport& s);
Json trial_to_json(const TrialOutcome& o);

// One CSV row per (level, classifier): trial, attempt, m, classifier, count, lifted_size, len_m.
void write_badset_csv(std::ostream& os, const BadSetReport& report, bool header, int64_t trial = 0,
                      int64_t attempt = 0);
void write_bound_csv(std::ostream& os, const std::vector<BoundCheck>& rows);

std::string read_file(const std::string& path);
Json read_json_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace rwrs
