#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rwrs/rng.hpp"

namespace rwrs {

struct NotReducible : std::domain_error {
  using std::domain_error::domain_error;
};

// Finite +-1 walk. The position trace X_0..X_n is built once at construction.
class Walk {
 public:
  Walk() : trace_{0} {}
  explicit Walk(std::vector<int8_t> steps);

  static Walk from_text(std::string_view text);
  std::string to_text() const;

  int64_t size() const { return static_cast<int64_t>(steps_.size()); }
  int step(int64_t t) const { return steps_[t]; }
  const std::vector<int8_t>& steps() const { return steps_; }
  const std::vector<int64_t>& trace() const { return trace_; }

  int64_t position(int64_t t) const;
  int64_t end_position() const { return trace_.back(); }

  // First j > i with |X_j - X_i| = L, or n if there is none.
  int64_t next_crossing(int64_t L, int64_t i) const;

  bool operator==(const Walk& o) const { return steps_ == o.steps_; }

 private:
  std::vector<int8_t> steps_;
  std::vector<int64_t> trace_;
};

struct ReducedEmbedding {
  int64_t L = 1;
  std::vector<int64_t> indices;  // i(0) = 0 < ... < i(len) = n
};

ReducedEmbedding reduced_embedding(const Walk& walk, int64_t L);
Walk reduce_walk(const Walk& walk, int64_t L);
Walk reduce_walk(const Walk& walk, const ReducedEmbedding& emb);

inline int64_t default_max_steps(int64_t L_total) { return 100 * L_total * L_total; }

// Walk stopped at the first time |X| = L_total; nullopt if max_steps pass first.
std::optional<Walk> sample_stopped_walk(Rng& rng, int64_t L_total, int64_t max_steps);

// Half-open index range [begin, end).
struct Interval {
  int64_t begin = 0;
  int64_t end = 0;
  int64_t size() const { return end - begin; }
  bool operator==(const Interval&) const = default;
};

// Reduced walks red(w, L_1...L_m) for m = 0..k and the embeddings between
// consecutive levels. Levels with L_m = 1 share storage with the level below.
class Hierarchy {
 public:
  Hierarchy(std::shared_ptr<const Walk> ground, std::vector<int64_t> L);

  int k() const { return static_cast<int>(L_.size()); }
  int64_t L(int m) const { return L_[m - 1]; }
  int64_t scale(int m) const { return scale_[m]; }
  const Walk& ground() const { return *levels_[0]; }
  const Walk& level(int m) const { return *levels_[m]; }
  int64_t level_length(int m) const { return levels_[m]->size(); }

  // Index at level m-1 of level-m index j (0 <= j <= len_m).
  int64_t up(int m, int64_t j) const { return up_[m].empty() ? j : up_[m][j]; }
  // Index at level m' of level-m index j.
  int64_t embed(int m, int m_prime, int64_t j) const;

  // I_{m,j}^{m'}; for m' = m the singleton {j}.
  Interval interval(int m, int64_t j, int m_prime) const;
  Interval interval(int m, int64_t j) const { return interval(m, j, m - 1); }

 private:
  std::vector<int64_t> L_;
  std::vector<int64_t> scale_;
  std::vector<std::shared_ptr<const Walk>> levels_;
  std::vector<std::vector<int64_t>> up_;
};

}  // namespace rwrs
