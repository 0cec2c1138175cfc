// Command-line front end: params, simulate, corrupt, find-test, reconstruct,
// verify-bounds, enumerate, feasibility.
//
// Exit codes: 0 success, 1 invalid configuration, 2 verification failure,
// 3 rejection budget exhausted, 130 interrupted (partial output flushed).

#include <atomic>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <condition_variable>
#include <csignal>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "rwrs/bad_sets.hpp"
#include "rwrs/io.hpp"
#include "rwrs/params.hpp"
#include "rwrs/pipeline.hpp"
#include "rwrs/prob.hpp"
#include "rwrs/test_engine.hpp"

namespace pt = boost::property_tree;
using namespace rwrs;

namespace {

enum Exit { ok = 0, invalid_config = 1, verification_failed = 2, budget_exhausted = 3, interrupted = 130 };

std::atomic<bool> g_stop{false};
extern "C" void on_signal(int) { g_stop = true; }

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shared options: config file, key overrides and the experiment block.
struct Common {
  std::string config_path;
  std::vector<std::string> overrides;  // section.key=value, section defaults to params
  std::optional<uint64_t> seed;
  std::optional<int64_t> trials, alphabet, max_steps, max_attempts;
  std::optional<double> delta;
  std::optional<std::string> adversary;
  std::string out;

  void add_to(CLI::App* app, bool experiment) {
    app->add_option("-c,--config", config_path, "config file (INI, [params] and [experiment] sections)");
    app->add_option("--set", overrides, "override a config key, e.g. params.k=2 or experiment.delta=0.01");
    app->add_option("-o,--out", out, "output path (default stdout)");
    if (!experiment) return;
    app->add_option("--seed", seed, "root seed (mandatory here or in the config)");
    app->add_option("--trials", trials, "number of trials");
    app->add_option("--delta", delta, "corruption fraction delta");
    app->add_option("--adversary", adversary, "none, random or least-visited");
    app->add_option("--alphabet", alphabet, "scenery alphabet size");
    app->add_option("--max-steps", max_steps, "cap on walk length (default 100 (L_1...L_k)^2)");
    app->add_option("--max-attempts", max_attempts, "walk samples per trial before giving up");
  }
};

pt::ptree load_tree(const Common& c) {
  pt::ptree tree;
  if (!c.config_path.empty()) {
    std::ifstream f(c.config_path);
    if (!f) throw ConfigError("cannot open config " + c.config_path);
    std::stringstream cleaned;
    std::string line;
    while (std::getline(f, line)) {
      if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
      cleaned << line << "\n";
    }
    try {
      pt::ini_parser::read_ini(cleaned, tree);
    } catch (const std::exception& e) {
      throw ConfigError(std::string("config parse error: ") + e.what());
    }
  }
  for (const std::string& o : c.overrides) {
    auto eq = o.find('=');
    if (eq == std::string::npos) throw ConfigError("override '" + o + "' needs key=value");
    std::string key = o.substr(0, eq);
    if (key.find('.') == std::string::npos) key = "params." + key;
    tree.put(key, o.substr(eq + 1));
  }
  return tree;
}

ScaleParams params_of(const pt::ptree& tree) {
  if (!tree.get_child_optional("params") && tree.empty()) throw ConfigError("no parameters given (--config or --set)");
  std::ostringstream os;
  pt::ini_parser::write_ini(os, tree);
  return params_from_config_text(os.str());
}

ExperimentConfig experiment_of(const pt::ptree& tree, const Common& c) {
  ExperimentConfig cfg;
  cfg.params = params_of(tree);
  auto e = tree.get_child_optional("experiment");
  pt::ptree empty;
  const pt::ptree& x = e ? *e : empty;
  try {
    std::optional<uint64_t> seed = c.seed;
    if (!seed)
      if (auto v = x.get_optional<uint64_t>("seed")) seed = *v;
    if (!seed) throw ConfigError("a seed is mandatory (--seed or experiment.seed)");
    cfg.seed = *seed;
    cfg.trials = c.trials.value_or(x.get<int64_t>("trials", 1));
    cfg.delta = c.delta.value_or(x.get<double>("delta", 0.0));
    cfg.adversary = parse_adversary(c.adversary.value_or(x.get<std::string>("adversary", "least-visited")));
    cfg.alphabet = static_cast<int>(c.alphabet.value_or(x.get<int64_t>("alphabet", 2)));
    cfg.max_steps = c.max_steps.value_or(x.get<int64_t>("max_steps", 0));
    cfg.max_attempts = c.max_attempts.value_or(x.get<int64_t>("max_attempts", 1000));
  } catch (const pt::ptree_error& err) {
    throw ConfigError(std::string("experiment block: ") + err.what());
  }
  if (cfg.trials < 0) throw ConfigError("trials must be >= 0");
  if (cfg.delta < 0 || cfg.delta >= 1) throw ConfigError("delta must lie in [0, 1)");
  if (cfg.alphabet < 2) throw ConfigError("alphabet must have at least 2 colors");
  if (cfg.max_attempts < 1) throw ConfigError("max_attempts must be >= 1");
  if (cfg.params.mode != Mode::desk) throw ConfigError("walk-level commands need desk parameters");
  return cfg;
}

Json experiment_json(const ExperimentConfig& cfg, int workers) {
  return Json{{"params", params_to_json(cfg.params)},
              {"experiment",
               Json{{"seed", cfg.seed},
                    {"trials", cfg.trials},
                    {"delta", cfg.delta},
                    {"adversary", adversary_name(cfg.adversary)},
                    {"alphabet", cfg.alphabet},
                    {"max_steps", cfg.max_steps},
                    {"max_attempts", cfg.max_attempts},
                    {"workers", workers}}}};
}

int workers_from_env() {
  const char* w = std::getenv("RWRS_WORKERS");
  if (!w) return 1;
  try {
    int n = std::stoi(w);
    if (n < 1) throw std::invalid_argument("");
    return n;
  } catch (const std::exception&) {
    throw ConfigError(std::string("RWRS_WORKERS must be a positive integer, got '") + w + "'");
  }
}

// Writes to the requested file or stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ConfigError("cannot write " + path);
    }
  }
  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void emit(const std::string& path, const Json& j) {
  Output out(path);
  out.os() << j.dump(2) << "\n";
}

// --- params -----------------------------------------------------------------

int cmd_params(const Common& c, bool check) {
  const ScaleParams p = params_of(load_tree(c));
  Json j = params_to_json(p);
  Json conds = Json::array();
  bool all = true;
  for (const auto& x : check_conditions(p)) {
    conds.push_back(Json{{"name", x.name}, {"m", x.m}, {"holds", x.holds}, {"detail", x.detail}});
    all = all && x.holds;
  }
  for (const auto& x : check_branching_bounds(p)) {
    conds.push_back(Json{{"name", x.name}, {"m", x.m}, {"holds", x.holds}, {"detail", x.detail}});
    all = all && x.holds;
  }
  j["conditions"] = conds;
  Json tails = Json::array();
  for (const auto& t : corollary_instances(p)) {
    tails.push_back(Json{{"name", t.name}, {"m", t.m}, {"premise_ok", t.premise_ok}, {"holds", t.holds},
                         {"exponent", decimal(Real(t.exponent), 17)}, {"method", "exact"}});
    if (p.mode == Mode::paper) all = all && t.holds;
  }
  j["tail_instances"] = tails;
  if (p.k >= 2) {
    LambdaBound b = lambda_count_bound(p, p.k);
    j["ln_lambda_bound"] = Json{{"recursive", decimal(b.recursive, 17)}};
    if (b.closed_form) j["ln_lambda_bound"]["closed_form"] = decimal(*b.closed_form, 17);
  }
  emit(c.out, j);
  return check && !all ? verification_failed : ok;
}

// --- simulate ---------------------------------------------------------------

int cmd_simulate(const Common& c, const std::string& badset_csv, const std::string& dump_dir) {
  const pt::ptree tree = load_tree(c);
  const ExperimentConfig cfg = experiment_of(tree, c);
  const DeskView view = desk_view(cfg.params);
  const int workers = workers_from_env();
  Output out(c.out);
  std::ofstream csv;
  if (!badset_csv.empty()) {
    csv.open(badset_csv);
    if (!csv) throw ConfigError("cannot write " + badset_csv);
    csv << "schema_version,trial,attempt,m,classifier,count,lifted_size,len_m\n";
  }
  if (!dump_dir.empty()) std::filesystem::create_directories(dump_dir);
  const Json effective = experiment_json(cfg, workers);
  out.os() << Json{{"schema_version", schema_version}, {"effective_config", effective}}.dump() << "\n";

  // trials run on a pool; lines are written in trial order
  std::mutex mu;
  std::condition_variable cv;
  std::map<int64_t, std::pair<std::string, std::string>> ready;  // trial -> (json line, csv rows)
  std::atomic<int64_t> next_trial{0};
  std::optional<std::string> exhausted;
  int64_t written = 0, accepted = 0, attempts = 0, unstopped = 0, finder_ok = 0, props_ok = 0, passes = 0, exact = 0;

  auto work = [&] {
    while (!g_stop) {
      const int64_t t = next_trial++;
      if (t >= cfg.trials) return;
      std::ostringstream rows;
      TrialArtifacts art;
      std::string line;
      try {
        TrialOutcome o = run_trial(
            cfg, view, t,
            [&](const BadSetReport& r, int64_t a) {
              if (csv.is_open()) write_badset_csv(rows, r, false, t, a);
            },
            dump_dir.empty() ? nullptr : &art);
        line = trial_to_json(o).dump();
        if (!dump_dir.empty()) {
          Json b{{"schema_version", schema_version}, {"config", effective},        {"trial", t},
                 {"walk", walk_to_json(*art.walk)},  {"scenery", scenery_to_json(art.scenery)},
                 {"record", record_to_json(art.record)}, {"record_prime", record_to_json(art.record_prime)},
                 {"errors", errors_to_json(o.errors)}};
          if (o.finder_ok) b["test"] = test_to_json(o.finder.test);
          write_file((std::filesystem::path(dump_dir) / ("trial_" + std::to_string(t) + ".json")).string(), b.dump());
        }
        std::lock_guard<std::mutex> lk(mu);
        ++accepted;
        attempts += o.attempts;
        unstopped += o.unstopped;
        finder_ok += o.finder_ok;
        props_ok += o.properties && o.properties->all_pass();
        passes += o.passes;
        exact += o.finder_ok && o.scenery_mismatches == 0 && o.conflicts == 0;
      } catch (const RejectionBudgetExhausted& e) {
        std::lock_guard<std::mutex> lk(mu);
        if (!exhausted) exhausted = e.what();
        g_stop = true;
        attempts += cfg.max_attempts;
        line = Json{{"schema_version", schema_version}, {"trial", t}, {"error", e.what()}}.dump();
      }
      std::lock_guard<std::mutex> lk(mu);
      ready[t] = {line, rows.str()};
      while (!ready.empty() && ready.begin()->first == written) {
        out.os() << ready.begin()->second.first << "\n";
        if (csv.is_open()) csv << ready.begin()->second.second;
        ready.erase(ready.begin());
        ++written;
      }
      out.os().flush();
    }
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < workers; ++i) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  for (auto& [t, lines] : ready) out.os() << lines.first << "\n";  // trials finished past an interrupted gap

  Json summary{{"trials_requested", cfg.trials},
               {"trials_completed", accepted},
               {"walks_sampled", attempts},
               {"unstopped", unstopped},
               {"sinuous_fraction", attempts ? static_cast<double>(accepted) / attempts : 0.0},
               {"finder_success", finder_ok},
               {"properties_pass", props_ok},
               {"passes_test", passes},
               {"scenery_exact", exact},
               {"method", "exact"},
               {"interrupted", g_stop && !exhausted}};
  out.os() << Json{{"schema_version", schema_version}, {"summary", summary}}.dump() << "\n";
  out.os().flush();
  if (exhausted) {
    std::cerr << "rejection budget exhausted: " << *exhausted << "\n";
    return budget_exhausted;
  }
  if (g_stop) return interrupted;
  return ok;
}

// --- corrupt ----------------------------------------------------------------

int cmd_corrupt(const Common& c, const std::string& input) {
  const pt::ptree tree = load_tree(c);
  const Json in = read_json_file(input);
  const Record record = record_from_json(in.at("record"));
  const auto e = tree.get_child_optional("experiment");
  const double delta = c.delta.value_or(e ? e->get<double>("delta", 0.0) : 0.0);
  const Adversary adv = parse_adversary(c.adversary.value_or(e ? e->get<std::string>("adversary", "least-visited") : "least-visited"));
  const int alphabet = static_cast<int>(in.contains("scenery") ? in.at("scenery").at("alphabet").get<int>()
                                                               : c.alphabet.value_or(2));
  if (delta < 0 || delta >= 1) throw ConfigError("delta must lie in [0, 1)");
  std::optional<uint64_t> seed = c.seed;
  if (!seed && e)
    if (auto v = e->get_optional<uint64_t>("seed")) seed = *v;
  if (adv == Adversary::random && !seed) throw ConfigError("a seed is mandatory for the random adversary");
  Corruption out{record, {}};
  if (adv == Adversary::random) {
    Rng rng = make_rng(*seed, 0);
    out = corrupt_random(rng, record, delta, alphabet);
  }
  if (adv == Adversary::least_visited) out = corrupt_least_visited(record, record.walk(), delta, alphabet);
  Json j = in;
  j["record_prime"] = record_to_json(out.record);
  j["errors"] = errors_to_json(out.errors);
  j["corruption"] = Json{{"delta", delta}, {"adversary", adversary_name(adv)}, {"budget", error_budget(delta, record.size())}};
  if (seed) j["corruption"]["seed"] = *seed;
  emit(c.out, j);
  return ok;
}

// --- find-test --------------------------------------------------------------

int cmd_find_test(const Common& c, const std::string& input, std::optional<std::string> alpha_text) {
  const pt::ptree tree = load_tree(c);
  const ScaleParams p = params_of(tree);
  if (p.mode != Mode::desk) throw ConfigError("find-test needs desk parameters");
  const DeskView view = desk_view(p);
  const Json in = read_json_file(input);
  const Walk walk = in.contains("walk") ? walk_from_json(in.at("walk")) : record_from_json(in.at("record")).walk();
  ErrorSet errors;
  if (in.contains("errors"))
    errors = errors_from_json(in.at("errors"));
  else if (in.contains("record") && in.contains("record_prime"))
    errors = diff_records(record_from_json(in.at("record")), record_from_json(in.at("record_prime")));
  const auto e = tree.get_child_optional("experiment");
  const double delta = c.delta.value_or(e ? e->get<double>("delta", 0.0) : 0.0);
  const Rational alpha = alpha_text ? parse_rational(*alpha_text) : effective_alpha(view.alpha, Rational(delta));

  if (!in_stopped_class(walk, view.L_total())) throw ConfigError("walk is not stopped at the first hit of +-L_1...L_k");
  auto shared = std::make_shared<const Walk>(walk);
  Hierarchy h(shared, view.L());
  BadSetReport report(h, view);
  FinderContext ctx(h, view, report, errors);
  FinderResult r = find_satisfied_test(ctx, view.k, 0, alpha);
  Json j{{"schema_version", schema_version},
         {"config", params_to_json(p)},
         {"alpha", decimal(Real(alpha), 17)},
         {"sinuosity", sinuosity_to_json(is_sinuous(report, view))},
         {"ok", r.ok},
         {"reason", failure_name(r.reason)},
         {"detail", r.detail}};
  int code = ok;
  if (r.ok) {
    j["test"] = test_to_json(r.test);
    j["in_lambda"] = in_lambda(r.tree, view);
    PropertyReport props = verify_test_properties(ctx, r.test, alpha, view.k, 0);
    j["properties"] = property_report_to_json(props);
    if (!props.all_pass() || !in_lambda(r.tree, view)) code = verification_failed;
  } else {
    code = verification_failed;
  }
  emit(c.out, j);
  return code;
}

// --- reconstruct ------------------------------------------------------------

int cmd_reconstruct(const Common& c, const std::string& input, const std::string& test_path) {
  const Json in = read_json_file(input);
  const Record rp = record_from_json(in.contains("record_prime") ? in.at("record_prime") : in.at("record"));
  const Test test = test_path.empty() ? test_from_json(in.at("test")) : test_from_json(read_json_file(test_path));
  int64_t L1 = 1;
  if (!c.config_path.empty() || !c.overrides.empty()) {
    const ScaleParams p = params_of(load_tree(c));
    L1 = p.at(1).L.convert_to<int64_t>();
  } else if (in.contains("config")) {
    L1 = std::stoll(in.at("config").at("params").at("levels").at(0).at("L").get<std::string>());
  }
  const PartialScenery part = apply_test(rp, test, L1);
  Json j = partial_scenery_to_json(part);
  j["reconstructed_size"] = reconstructed_size(test, rp.walk(), L1);
  int code = part.conflicts.empty() ? ok : verification_failed;
  if (in.contains("scenery")) {
    const Scenery s = scenery_from_json(in.at("scenery"));
    int64_t mismatches = 0;
    for (const auto& [site, color] : part.assignments)
      if (!s.covers(site) || s.color(site) != color) ++mismatches;
    bool pass = false;
    try {
      pass = passes_test(rp, s, test, L1);
    } catch (const std::out_of_range&) {
      pass = false;
    }
    j["passes_test"] = pass;
    j["scenery_mismatches"] = mismatches;
    if (!pass) code = verification_failed;
  }
  emit(c.out, j);
  return code;
}

// --- verify-bounds ----------------------------------------------------------

int cmd_verify_bounds(const std::string& out, uint64_t seed, bool empty_grid, double scale, int64_t mc_trials) {
  SuiteConfig cfg;
  cfg.seed = seed;
  cfg.chernoff_exponent_scale = scale;
  if (mc_trials > 0) cfg.mc_trials = cfg.prefix_trials = mc_trials;
  if (empty_grid) {
    cfg.chernoff_n.clear();
    cfg.dp_L.clear();
    cfg.local_L.clear();
    cfg.local_thresholds.clear();
    cfg.prefix_trials = 0;
  }
  const auto rows = run_bound_suite(cfg);
  Output o(out);
  write_bound_csv(o.os(), rows);
  int64_t fails = 0;
  for (const auto& r : rows) fails += !r.pass;
  std::cerr << rows.size() << " checks, " << fails << " failed\n";
  return fails ? verification_failed : ok;
}

// --- enumerate --------------------------------------------------------------

int cmd_enumerate(const Common& c, int m, const std::string& cap_text) {
  const ScaleParams p = params_of(load_tree(c));
  if (m == 0) m = p.k;
  const BigInt cap(cap_text);
  const auto tests = enumerate_tests(p, m, cap);
  // P(M, B) (2M + 1)^B |Lambda_{m-1}|^B; flattening can merge trees only from m = 3 on
  const BigInt formula = *lambda_raw_bound(p, m, cap);
  const BigInt count(tests.size());
  const bool formula_ok = m <= 2 ? count == formula : count <= formula;
  Json j{{"schema_version", schema_version}, {"m", m},
         {"count", tests.size()}, {"formula", formula.str()}, {"test_size", lambda_size(p, m).str()}};
  bool good = formula_ok;
  if (m >= 2) {
    LambdaBound b = lambda_count_bound(p, m);
    PrecisionScope prec(60);
    const Real ln_count = boost::multiprecision::log(Real(static_cast<double>(tests.size())));
    j["ln_count"] = decimal(ln_count, 17);
    j["ln_bound"] = decimal(b.recursive, 17);
    j["within_bound"] = ln_count <= b.recursive;
    good = good && ln_count <= b.recursive;
  }
  j["formula_match"] = formula_ok;
  emit(c.out, j);
  return good ? ok : verification_failed;
}

// --- feasibility ------------------------------------------------------------

int cmd_feasibility(const std::string& out, const std::string& p, const std::string& theta, const std::string& eps) {
  const Feasibility f = feasibility(parse_rational(p), parse_rational(theta), parse_rational(eps));
  Json req = Json::array();
  for (const auto& r : f.requirements) req.push_back(Json{{"name", r.name}, {"holds", r.holds}, {"detail", r.detail}});
  namespace mp = boost::multiprecision;
  Json j{{"schema_version", schema_version},
         {"p", p},
         {"theta", theta},
         {"epsilon", eps},
         {"A", f.A.str()},
         {"log2_A", mp::msb(f.A)},
         {"B", f.B.str()},
         {"k_min", f.k_min.str()},
         {"delta_max", "1/" + mp::denominator(f.delta_max).str()},
         {"ln_N0", decimal(f.ln_N0, 17)},
         {"requirements", req}};
  emit(out, j);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random walk on random scenery: reconstruction tests, bad sets and bounds"};
  app.require_subcommand(1);

  Common common;
  auto* params = app.add_subcommand("params", "derive and check the parameter schedule");
  bool check = false;
  common.add_to(params, false);
  params->add_flag("--check", check, "exit 2 if any condition fails");

  auto* simulate = app.add_subcommand("simulate", "sample sinuous walks, corrupt and run the finder");
  Common sim;
  sim.add_to(simulate, true);
  std::string badset_csv, dump_dir;
  simulate->add_option("--report-badsets", badset_csv, "CSV of bad-set statistics for every sampled walk");
  simulate->add_option("--dump-dir", dump_dir, "write one JSON bundle per trial");

  auto* corrupt = app.add_subcommand("corrupt", "corrupt the record in a bundle");
  Common cor;
  cor.add_to(corrupt, true);
  std::string cor_input;
  corrupt->add_option("-i,--input", cor_input, "bundle with a record")->required();

  auto* find = app.add_subcommand("find-test", "run the finder on a bundle and verify its output");
  Common fnd;
  fnd.add_to(find, true);
  std::string fnd_input;
  std::optional<std::string> fnd_alpha;
  find->add_option("-i,--input", fnd_input, "bundle with a walk and errors")->required();
  find->add_option("--alpha", fnd_alpha, "density threshold (default 10 alpha + delta)");

  auto* recon = app.add_subcommand("reconstruct", "apply a test to a corrupted record");
  Common rec;
  rec.add_to(recon, false);
  std::string rec_input, rec_test;
  recon->add_option("-i,--input", rec_input, "bundle with record_prime")->required();
  recon->add_option("--test", rec_test, "test JSON (default: the bundle's test)");

  auto* bounds = app.add_subcommand("verify-bounds", "check the probability bounds against exact and Monte-Carlo oracles");
  std::string bounds_out;
  uint64_t bounds_seed = 1;
  bool empty_grid = false;
  double scale = 1;
  int64_t mc_trials = 0;
  bounds->add_option("-o,--out", bounds_out, "CSV path (default stdout)");
  bounds->add_option("--seed", bounds_seed, "seed for the Monte-Carlo rows");
  bounds->add_flag("--empty-grid", empty_grid, "run no checks");
  bounds->add_option("--chernoff-scale", scale, "multiply the Chernoff exponent (negative control)");
  bounds->add_option("--mc-trials", mc_trials, "Monte-Carlo trials per row");

  auto* enumerate = app.add_subcommand("enumerate", "enumerate Lambda_m exhaustively");
  Common en;
  en.add_to(enumerate, false);
  int en_m = 0;
  std::string cap = "10000000";
  enumerate->add_option("-m,--level", en_m, "level m (default k)");
  enumerate->add_option("--cap", cap, "refuse above this many raw tests");

  auto* feas = app.add_subcommand("feasibility", "smallest (A, B) meeting the parameter requirements");
  std::string f_out, f_p = "1/100", f_theta = "1/4", f_eps = "1/10";
  feas->add_option("-o,--out", f_out, "output path");
  feas->add_option("--p", f_p, "failure probability p");
  feas->add_option("--theta", f_theta, "exponent theta < 1/2");
  feas->add_option("--epsilon", f_eps, "epsilon");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : invalid_config;
  }

  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  try {
    if (*params) return cmd_params(common, check);
    if (*simulate) return cmd_simulate(sim, badset_csv, dump_dir);
    if (*corrupt) return cmd_corrupt(cor, cor_input);
    if (*find) return cmd_find_test(fnd, fnd_input, fnd_alpha);
    if (*recon) return cmd_reconstruct(rec, rec_input, rec_test);
    if (*bounds) return cmd_verify_bounds(bounds_out, bounds_seed, empty_grid, scale, mc_trials);
    if (*enumerate) return cmd_enumerate(en, en_m, cap);
    if (*feas) return cmd_feasibility(f_out, f_p, f_theta, f_eps);
  } catch (const ConfigError& e) {
    std::cerr << "invalid config: " << e.what() << "\n";
    return invalid_config;
  } catch (const InvalidParams& e) {
    std::cerr << "invalid config: " << e.what() << "\n";
    return invalid_config;
  } catch (const EnumerationRefused& e) {
    std::cerr << e.what() << "\n";
    return invalid_config;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return invalid_config;
  }
  return ok;
}
