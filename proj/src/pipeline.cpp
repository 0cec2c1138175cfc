#include "rwrs/pipeline.hpp"

#include <memory>

#include "rwrs/rng.hpp"

namespace rwrs {

const char* adversary_name(Adversary a) {
  switch (a) {
    case Adversary::none: return "none";
    case Adversary::random: return "random";
    case Adversary::least_visited: return "least-visited";
  }
  return "?";
}

Adversary parse_adversary(const std::string& s) {
  if (s == "none") return Adversary::none;
  if (s == "random") return Adversary::random;
  if (s == "least-visited" || s == "least_visited") return Adversary::least_visited;
  throw InvalidParams("unknown adversary '" + s + "' (none, random, least-visited)");
}

Rational effective_alpha(const Rational& alpha, const Rational& delta) { return Rational(10) * alpha + delta; }

Rational density_delta_threshold(const DeskView& view) {
  return Rational(1) / relaxation_product(view.k) - Rational(10) * view.alpha;
}

Rational error_free_delta_threshold(const DeskView& view) {
  return Rational(1) / (relaxation_product(view.k) * Rational(view.at(1).M_upper)) - Rational(10) * view.alpha;
}

TrialOutcome run_trial(const ExperimentConfig& cfg, const DeskView& view, int64_t trial, const BadSetHook& hook,
                       TrialArtifacts* artifacts) {
  TrialOutcome out;
  out.trial = trial;
  const int64_t L_total = view.L_total();
  const int64_t max_steps = cfg.max_steps > 0 ? cfg.max_steps : default_max_steps(L_total);
  Rng rng = make_rng(cfg.seed, static_cast<uint64_t>(trial));

  std::shared_ptr<const Walk> walk;
  std::unique_ptr<Hierarchy> h;
  std::unique_ptr<BadSetReport> report;
  while (true) {
    if (out.attempts >= cfg.max_attempts)
      throw RejectionBudgetExhausted("trial " + std::to_string(trial) + ": no sinuous walk in " +
                                     std::to_string(cfg.max_attempts) + " samples");
    ++out.attempts;
    std::optional<Walk> w = sample_stopped_walk(rng, L_total, max_steps);
    if (!w) {
      ++out.unstopped;
      continue;
    }
    walk = std::make_shared<const Walk>(std::move(*w));
    h = std::make_unique<Hierarchy>(walk, view.L());
    report = std::make_unique<BadSetReport>(*h, view);
    out.sinuosity = is_sinuous(*report, view);
    if (hook) hook(*report, out.attempts);
    if (out.sinuosity.sinuous) break;
  }
  out.N = walk->size();

  const int64_t err_budget = error_budget(cfg.delta, out.N);
  const Scenery scenery = sample_scenery_for(rng, cfg.alphabet, *walk, 2 * err_budget + 1);
  const Record record = make_record(*walk, scenery);
  Corruption c{record, {}};
  if (cfg.adversary == Adversary::random) c = corrupt_random(rng, record, cfg.delta, cfg.alphabet);
  if (cfg.adversary == Adversary::least_visited) c = corrupt_least_visited(record, *walk, cfg.delta, cfg.alphabet);
  out.errors = c.errors;
  if (artifacts) *artifacts = {walk, scenery, record, c.record};

  const Rational alpha_e = effective_alpha(view.alpha, Rational(cfg.delta));
  FinderContext ctx(*h, view, *report, c.errors);
  out.finder = find_satisfied_test(ctx, view.k, 0, alpha_e);
  out.finder_ok = out.finder.ok;
  out.size_target = view.at(1).L;
  for (int r = 2; r <= view.k; ++r) out.size_target *= view.at(r).branching;
  if (!out.finder_ok) return out;

  out.properties = verify_test_properties(ctx, out.finder.test, alpha_e, view.k, 0);
  out.passes = passes_test(c.record, scenery, out.finder.test, view.at(1).L);
  const Walk w_prime = c.record.walk();
  out.reconstructed = reconstructed_size(out.finder.test, w_prime, view.at(1).L);
  const PartialScenery part = apply_test(c.record, out.finder.test, view.at(1).L);
  out.domain_size = static_cast<int64_t>(part.assignments.size());
  out.conflicts = static_cast<int64_t>(part.conflicts.size());
  for (const auto& [site, color] : part.assignments)
    if (!scenery.covers(site) || scenery.color(site) != color) ++out.scenery_mismatches;
  return out;
}

}  // namespace rwrs
