#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rwrs/params.hpp"
#include "rwrs/walk.hpp"

namespace rwrs {

enum class Classifier : int { upper, redUpper, lower, redLower, length, redLength, local, all };
inline constexpr int classifier_count = 8;
inline constexpr std::array<Classifier, classifier_count> all_classifiers = {
    Classifier::upper,  Classifier::redUpper,  Classifier::lower, Classifier::redLower,
    Classifier::length, Classifier::redLength, Classifier::local, Classifier::all};
const char* classifier_name(Classifier c);

struct NotStopped : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Bad index sets badb_m^* at one level, each sorted.
struct LevelBadSets {
  int m = 0;
  int64_t len = 0;
  std::array<std::vector<int64_t>, classifier_count> bad;
  std::array<int64_t, classifier_count> lifted_size{};  // |badb_{m,0}^*|
  std::vector<int64_t> mlt;                              // MLT_{m,j} for every j

  const std::vector<int64_t>& operator[](Classifier c) const { return bad[static_cast<int>(c)]; }
};

LevelBadSets classify_level(const Hierarchy& h, const DeskView& params, int m);

// Max visit count of red(w, L_1...L_{m-1}) over the times in I_{m,j}.
int64_t mlt(const Hierarchy& h, int m, int64_t j);

// badb_{m,m'} as merged half-open blocks of level-m' indices.
std::vector<Interval> lift(const Hierarchy& h, int m, int m_prime, const std::vector<int64_t>& index_set);
std::vector<int64_t> expand(const std::vector<Interval>& blocks);
int64_t blocks_size(const std::vector<Interval>& blocks);
std::vector<Interval> merge_blocks(std::vector<Interval> blocks);
std::vector<int64_t> complement(const std::vector<int64_t>& sorted_set, int64_t len);

// Every level classified once; immutable afterwards.
class BadSetReport {
 public:
  BadSetReport(const Hierarchy& h, const DeskView& params);

  int k() const { return static_cast<int>(levels_.size()); }
  int64_t ground_len() const { return ground_len_; }
  const LevelBadSets& level(int m) const { return levels_.at(m - 1); }
  const std::vector<int64_t>& bad(int m, Classifier c) const { return level(m)[c]; }
  bool is_bad(int m, int64_t j, Classifier c = Classifier::all) const;
  // Lifted badb_{m,0} blocks for the "all" classifier.
  const std::vector<Interval>& lifted_all(int m) const { return lifted_all_.at(m - 1); }
  // union over m of badb_{m,0}
  const std::vector<Interval>& union_blocks() const { return union_; }
  int64_t union_size() const { return union_size_; }

 private:
  int64_t ground_len_ = 0;
  std::vector<LevelBadSets> levels_;
  std::vector<std::vector<Interval>> lifted_all_;
  std::vector<Interval> union_;
  int64_t union_size_ = 0;
};

struct SinuosityReport {
  bool sinuous = false;
  int64_t union_size = 0;
  int64_t len = 0;
  Rational threshold;                       // 10 alpha len
  std::vector<int64_t> lifted_per_level;    // |badb_{m,0}| for m = 1..k
};

// True iff |X_n| = L_total and |X_t| < L_total for t < n.
bool in_stopped_class(const Walk& w, int64_t L_total);

SinuosityReport is_sinuous(const BadSetReport& report, const DeskView& params);
SinuosityReport is_sinuous(const Hierarchy& h, const DeskView& params);

}  // namespace rwrs
