#include "rwrs/scenery.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rwrs {

Scenery::Scenery(int alphabet_size, int64_t lo, std::vector<uint32_t> colors)
    : alphabet_(alphabet_size), lo_(lo), colors_(std::move(colors)) {
  if (alphabet_ < 2) throw std::invalid_argument("alphabet needs at least two colors");
  if (colors_.empty()) throw std::invalid_argument("empty scenery window");
  for (uint32_t c : colors_)
    if (c >= static_cast<uint32_t>(alphabet_)) throw std::invalid_argument("color outside alphabet");
}

uint32_t Scenery::color(int64_t x) const {
  if (!covers(x)) throw std::out_of_range("site outside scenery window");
  return colors_[x - lo_];
}

Scenery sample_scenery(Rng& rng, int alphabet_size, int64_t lo, int64_t hi) {
  if (alphabet_size < 2) throw std::invalid_argument("alphabet needs at least two colors");
  if (hi < lo) throw std::invalid_argument("empty scenery window");
  std::uniform_int_distribution<uint32_t> pick(0, alphabet_size - 1);
  std::vector<uint32_t> colors(hi - lo + 1);
  for (auto& c : colors) c = pick(rng);
  return Scenery(alphabet_size, lo, std::move(colors));
}

Scenery sample_scenery_for(Rng& rng, int alphabet_size, const Walk& walk, int64_t pad) {
  auto [mn, mx] = std::minmax_element(walk.trace().begin(), walk.trace().end());
  return sample_scenery(rng, alphabet_size, *mn - pad, *mx + pad);
}

Record make_record(const Walk& walk, const Scenery& scenery) {
  const auto& x = walk.trace();
  Record r;
  r.steps = walk.steps();
  r.colors.resize(walk.size());
  for (int64_t t = 0; t < walk.size(); ++t) {
    if (!scenery.covers(x[t])) throw std::out_of_range("scenery window does not cover the walk");
    r.colors[t] = scenery.color(x[t]);
  }
  return r;
}

int64_t error_budget(double delta, int64_t N) {
  if (delta < 0 || delta >= 1) throw std::invalid_argument("delta must lie in [0,1)");
  return static_cast<int64_t>(std::floor(static_cast<long double>(delta) * N));
}

std::pair<std::vector<int64_t>, std::vector<int64_t>> classify_errors(const std::vector<int8_t>& original,
                                                                      const std::vector<int8_t>& corrupted) {
  if (original.size() != corrupted.size()) throw std::invalid_argument("step sequences differ in length");
  std::vector<int64_t> plus, minus;
  for (size_t t = 0; t < original.size(); ++t) {
    if (original[t] == 1 && corrupted[t] == -1) plus.push_back(static_cast<int64_t>(t));
    if (original[t] == -1 && corrupted[t] == 1) minus.push_back(static_cast<int64_t>(t));
  }
  return {plus, minus};
}

ErrorSet diff_records(const Record& x, const Record& x_prime) {
  if (x.size() != x_prime.size()) throw std::invalid_argument("records differ in length");
  ErrorSet e;
  for (int64_t t = 0; t < x.size(); ++t)
    if (x.steps[t] != x_prime.steps[t] || x.colors[t] != x_prime.colors[t]) e.E.push_back(t);
  std::tie(e.E_plus, e.E_minus) = classify_errors(x.steps, x_prime.steps);
  return e;
}

Corruption corrupt_random(Rng& rng, const Record& record, double delta, int alphabet_size) {
  const int64_t N = record.size();
  const int64_t budget = std::min(error_budget(delta, N), N);
  Corruption out{record, {}};
  if (budget == 0) return out;
  std::vector<int64_t> all(N);
  std::iota(all.begin(), all.end(), 0);
  std::vector<int64_t> chosen;
  chosen.reserve(budget);
  std::sample(all.begin(), all.end(), std::back_inserter(chosen), budget, rng);
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<uint32_t> shift(1, alphabet_size - 1);
  for (int64_t t : chosen) {
    int k = kind(rng);
    if (k == 0 || k == 2) out.record.steps[t] = static_cast<int8_t>(-out.record.steps[t]);
    if (k == 1 || k == 2) out.record.colors[t] = (out.record.colors[t] + shift(rng)) % alphabet_size;
  }
  out.errors.E = chosen;
  std::sort(out.errors.E.begin(), out.errors.E.end());
  std::tie(out.errors.E_plus, out.errors.E_minus) = classify_errors(record.steps, out.record.steps);
  return out;
}

LocalTimes local_times(const Walk& walk) {
  const auto& x = walk.trace();
  const int64_t N = walk.size();
  LocalTimes lt;
  if (N == 0) return lt;
  auto [mn, mx] = std::minmax_element(x.begin(), x.begin() + N);
  lt.lo = *mn;
  lt.counts.assign(*mx - *mn + 1, 0);
  for (int64_t t = 0; t < N; ++t) ++lt.counts[x[t] - lt.lo];
  return lt;
}

Corruption corrupt_least_visited(const Record& record, const Walk& walk, double delta, int alphabet_size) {
  const int64_t N = record.size();
  if (walk.size() != N) throw std::invalid_argument("walk and record differ in length");
  int64_t budget = std::min(error_budget(delta, N), N);
  Corruption out{record, {}};
  if (budget == 0) return out;
  LocalTimes lt = local_times(walk);
  const int64_t sites = static_cast<int64_t>(lt.counts.size());
  // bucket visit times by site
  std::vector<int64_t> start(sites + 1, 0);
  for (int64_t s = 0; s < sites; ++s) start[s + 1] = start[s] + lt.counts[s];
  std::vector<int64_t> times(N), fill(start.begin(), start.end() - 1);
  const auto& x = walk.trace();
  for (int64_t t = 0; t < N; ++t) times[fill[x[t] - lt.lo]++] = t;
  std::vector<int64_t> order;
  for (int64_t s = 0; s < sites; ++s)
    if (lt.counts[s] > 0) order.push_back(s);
  std::stable_sort(order.begin(), order.end(),
                   [&](int64_t a, int64_t b) { return lt.counts[a] < lt.counts[b]; });
  for (int64_t s : order) {
    for (int64_t i = start[s]; i < start[s + 1] && budget > 0; ++i, --budget) {
      int64_t t = times[i];
      out.record.colors[t] = (out.record.colors[t] + 1) % alphabet_size;
      out.errors.E.push_back(t);
    }
    if (budget == 0) break;
  }
  std::sort(out.errors.E.begin(), out.errors.E.end());
  return out;
}

}  // namespace rwrs
