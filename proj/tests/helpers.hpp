#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rwrs/params.hpp"
#include "rwrs/rng.hpp"
#include "rwrs/walk.hpp"

namespace testing_util {

inline rwrs::Walk walk_of(const std::string& text) { return rwrs::Walk::from_text(text); }

inline std::shared_ptr<const rwrs::Walk> shared_walk(rwrs::Walk w) {
  return std::make_shared<const rwrs::Walk>(std::move(w));
}

// Stopped walk at +-L_total; loops until one fits under the default cap.
inline rwrs::Walk stopped_walk(rwrs::Rng& rng, int64_t L_total) {
  for (;;)
    if (auto w = rwrs::sample_stopped_walk(rng, L_total, rwrs::default_max_steps(L_total))) return *w;
}

// Machine-word parameters built by hand, skipping desk validation; for exercising the algorithms.
inline rwrs::DeskView loose_view(const std::vector<int64_t>& L, const std::vector<int64_t>& branching,
                                 rwrs::Rational alpha = rwrs::Rational(1, 100)) {
  rwrs::DeskView v;
  v.k = static_cast<int>(L.size());
  v.alpha = alpha;
  for (size_t i = 0; i < L.size(); ++i) {
    rwrs::LevelBounds b;
    b.L = L[i];
    b.M_upper = b.R_upper = int64_t{1} << 40;
    b.M_lower = b.R_lower = 1;
    b.beta_num = 4;  // MLT <= 2 |I| always
    b.beta_den = 1;
    b.branching = i == 0 ? 0 : branching.at(i - 1);
    v.level.push_back(b);
  }
  return v;
}

inline std::vector<int> steps_of(const rwrs::Walk& w) { return {w.steps().begin(), w.steps().end()}; }

}  // namespace testing_util
