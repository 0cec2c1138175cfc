#pragma once

#include <cstdint>
#include <vector>

#include "rwrs/rng.hpp"
#include "rwrs/walk.hpp"

namespace rwrs {

// Coloring of the integer window [lo, hi], stored densely with an offset.
class Scenery {
 public:
  Scenery() = default;
  Scenery(int alphabet_size, int64_t lo, std::vector<uint32_t> colors);

  int alphabet_size() const { return alphabet_; }
  int64_t lo() const { return lo_; }
  int64_t hi() const { return lo_ + static_cast<int64_t>(colors_.size()) - 1; }
  bool covers(int64_t x) const { return x >= lo_ && x <= hi(); }
  uint32_t color(int64_t x) const;
  const std::vector<uint32_t>& colors() const { return colors_; }

 private:
  int alphabet_ = 2;
  int64_t lo_ = 0;
  std::vector<uint32_t> colors_;
};

Scenery sample_scenery(Rng& rng, int alphabet_size, int64_t lo, int64_t hi);
// Window [min X_t - pad, max X_t + pad] over the whole walk.
Scenery sample_scenery_for(Rng& rng, int alphabet_size, const Walk& walk, int64_t pad = 1);

// x(t) = (step, observed color) for t = 0..N-1.
struct Record {
  std::vector<int8_t> steps;
  std::vector<uint32_t> colors;
  int64_t size() const { return static_cast<int64_t>(steps.size()); }
  Walk walk() const { return Walk(steps); }
  bool operator==(const Record&) const = default;
};

Record make_record(const Walk& walk, const Scenery& scenery);

struct ErrorSet {
  std::vector<int64_t> E;        // sorted
  std::vector<int64_t> E_plus;   // (w(t), w'(t)) = (+1, -1)
  std::vector<int64_t> E_minus;  // (w(t), w'(t)) = (-1, +1)
  bool operator==(const ErrorSet&) const = default;
};

struct Corruption {
  Record record;
  ErrorSet errors;
};

int64_t error_budget(double delta, int64_t N);

std::pair<std::vector<int64_t>, std::vector<int64_t>> classify_errors(const std::vector<int8_t>& original,
                                                                      const std::vector<int8_t>& corrupted);
// Positionwise diff of two records with the step classification attached.
ErrorSet diff_records(const Record& x, const Record& x_prime);

Corruption corrupt_random(Rng& rng, const Record& record, double delta, int alphabet_size);
Corruption corrupt_least_visited(const Record& record, const Walk& walk, double delta, int alphabet_size);

// Local time of every visited site over t = 0..N-1, keyed by site - min site.
struct LocalTimes {
  int64_t lo = 0;
  std::vector<int64_t> counts;
};
LocalTimes local_times(const Walk& walk);

}  // namespace rwrs
