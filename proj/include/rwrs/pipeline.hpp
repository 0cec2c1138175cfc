#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include "rwrs/bad_sets.hpp"
#include "rwrs/params.hpp"
#include "rwrs/scenery.hpp"
#include "rwrs/test_engine.hpp"
#include "rwrs/walk.hpp"

namespace rwrs {

enum class Adversary { none, random, least_visited };
const char* adversary_name(Adversary a);
Adversary parse_adversary(const std::string& s);

struct ExperimentConfig {
  ScaleParams params;
  int alphabet = 2;
  double delta = 0;
  Adversary adversary = Adversary::least_visited;
  int64_t trials = 1;
  uint64_t seed = 0;
  int64_t max_steps = 0;     // 0: 100 (L_1...L_k)^2
  int64_t max_attempts = 1000;  // walk samples per trial before giving up
};

struct RejectionBudgetExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finder density threshold for a sinuous walk with |E| <= delta N: 10 alpha + delta.
Rational effective_alpha(const Rational& alpha, const Rational& delta);
// Largest delta (exclusive) with 10 alpha + delta < 1 / prod_{r=2}^k (1 + 1/r^2).
Rational density_delta_threshold(const DeskView& view);
// Largest delta (exclusive) with prod (10 alpha + delta) < 1 / M_upper_1, which forces error-free tested ranges.
Rational error_free_delta_threshold(const DeskView& view);

struct TrialOutcome {
  int64_t trial = 0;
  int64_t attempts = 0;  // walk samples drawn, including the accepted one
  int64_t unstopped = 0; // samples that hit max_steps first
  int64_t N = 0;
  SinuosityReport sinuosity;
  ErrorSet errors;
  bool finder_ok = false;
  FinderResult finder;
  std::optional<PropertyReport> properties;
  bool passes = false;
  int64_t domain_size = 0;        // sites assigned by apply_test
  int64_t reconstructed = 0;      // |lambda(w')| over closed ranges
  int64_t conflicts = 0;
  int64_t scenery_mismatches = 0; // assigned sites whose color differs from the true scenery
  int64_t size_target = 0;        // L_1 prod B_r
};

// Called on every stopped walk sampled, sinuous or not, with its 1-based attempt number.
using BadSetHook = std::function<void(const BadSetReport&, int64_t attempt)>;

// Artifacts of the accepted walk, kept only when asked for.
struct TrialArtifacts {
  std::shared_ptr<const Walk> walk;
  Scenery scenery;
  Record record;
  Record record_prime;
};

// One trial: sample until a sinuous stopped walk appears, corrupt its record and run the finder at (k, 0).
TrialOutcome run_trial(const ExperimentConfig& cfg, const DeskView& view, int64_t trial,
                       const BadSetHook& hook = {}, TrialArtifacts* artifacts = nullptr);

}  // namespace rwrs
