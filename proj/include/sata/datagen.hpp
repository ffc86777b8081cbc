#pragma once

#include <cstdint>

#include "sata/model.hpp"

namespace sata {

struct IntRange {
  int lo = 1;
  int hi = 5;
};

// Synthetic instance parameters. Locations are uniform over
// [0, area_side]^2; per-skill fees ~ Normal(mean_price, price_sd^2) and
// budgets ~ Normal(mean_budget, budget_sd^2), both resampled until > 0.01.
// Negative sd means "derive as mean/5".
struct GenParams {
  int n_tasks = 500;
  int n_workers = 5000;
  double gamma = 0.5;
  Money mean_budget = 100.0;
  Money mean_price = 20.0;
  int n_skills = 30;
  IntRange skills_per_worker{1, 5};
  IntRange skills_per_task{1, 5};
  double area_side = 100.0;
  Money budget_sd = -1.0;
  Money price_sd = -1.0;
  std::uint64_t seed = 0;

  Money effective_budget_sd() const { return budget_sd < 0 ? mean_budget / 5.0 : budget_sd; }
  Money effective_price_sd() const { return price_sd < 0 ? mean_price / 5.0 : price_sd; }
};

// Throws UsageError describing every invalid field.
void check_params(const GenParams& params);

// Deterministic given params.seed; draws workers first, then tasks.
Instance generate_instance(const GenParams& params);

}  // namespace sata
