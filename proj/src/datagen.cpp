#include "sata/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "sata/errors.hpp"
#include "sata/rng.hpp"

namespace sata {

namespace {

constexpr double kTruncationFloor = 0.01;
constexpr int kMaxResamples = 100000;

// Normal(mean, sd^2) resampled until > 0.01 (truncated, no boundary mass).
Money truncated_normal(std::mt19937_64& gen, Money mean, Money sd) {
  if (sd == 0.0) return mean;
  for (int i = 0; i < kMaxResamples; ++i) {
    const Money v = mean + sd * rng::standard_normal(gen);
    if (v > kTruncationFloor) return v;
  }
  throw UsageError("truncated normal draw failed: mean " + std::to_string(mean) + ", sd " +
                   std::to_string(sd) + " puts almost no mass above 0.01");
}

// k distinct skill ids, uniform without replacement, returned sorted.
std::vector<SkillId> draw_skills(std::mt19937_64& gen, int k, std::vector<SkillId>& universe) {
  for (int i = 0; i < k; ++i) {
    const std::size_t j = i + rng::below(gen, universe.size() - i);
    std::swap(universe[i], universe[j]);
  }
  std::vector<SkillId> out(universe.begin(), universe.begin() + k);
  std::sort(out.begin(), out.end());
  return out;
}

int draw_count(std::mt19937_64& gen, const IntRange& r) {
  return r.lo + static_cast<int>(rng::below(gen, static_cast<std::uint64_t>(r.hi - r.lo + 1)));
}

}  // namespace

void check_params(const GenParams& p) {
  std::ostringstream os;
  auto bad = [&os](const std::string& m) { os << "\n  - " << m; };

  if (p.n_tasks < 1) bad("n_tasks must be >= 1");
  if (p.n_workers < 1) bad("n_workers must be >= 1");
  if (p.n_skills < 1) bad("n_skills must be >= 1");
  if (!(p.gamma >= 0.0) || !std::isfinite(p.gamma)) bad("gamma must be finite and >= 0");
  if (!(p.area_side >= 0.0) || !std::isfinite(p.area_side)) bad("area_side must be finite and >= 0");
  if (!std::isfinite(p.mean_budget) || p.mean_budget < 0) bad("mean_budget must be finite and >= 0");
  if (!std::isfinite(p.mean_price) || p.mean_price < 0) bad("mean_price must be finite and >= 0");
  for (const auto& [name, r] : {std::pair<const char*, IntRange>{"skills_per_worker", p.skills_per_worker},
                                {"skills_per_task", p.skills_per_task}}) {
    if (r.lo < 1 || r.hi < r.lo) bad(std::string(name) + " range is empty or below 1");
    if (r.hi > p.n_skills) bad(std::string(name) + " upper bound exceeds n_skills");
  }
  if (p.effective_budget_sd() < 0 || !std::isfinite(p.effective_budget_sd())) bad("budget_sd must be >= 0");
  if (p.effective_price_sd() < 0 || !std::isfinite(p.effective_price_sd())) bad("price_sd must be >= 0");
  if (p.effective_price_sd() == 0.0 && p.mean_price <= kTruncationFloor) {
    bad("price_sd = 0 requires mean_price > 0.01");
  }
  if (p.effective_budget_sd() == 0.0 && p.mean_budget <= kTruncationFloor) {
    bad("budget_sd = 0 requires mean_budget > 0.01");
  }

  const std::string msg = os.str();
  if (!msg.empty()) throw UsageError("invalid generator parameters:" + msg);
}

Instance generate_instance(const GenParams& p) {
  check_params(p);
  std::mt19937_64 gen(p.seed);

  Instance inst;
  inst.n_skills = p.n_skills;
  inst.gamma = p.gamma;

  const Money price_sd = p.effective_price_sd();
  const Money budget_sd = p.effective_budget_sd();

  std::vector<SkillId> universe(p.n_skills);
  std::iota(universe.begin(), universe.end(), 0);

  inst.workers.reserve(p.n_workers);
  for (int i = 0; i < p.n_workers; ++i) {
    Worker w;
    w.id = i;
    w.location.x = p.area_side * rng::uniform01(gen);
    w.location.y = p.area_side * rng::uniform01(gen);
    const int k = draw_count(gen, p.skills_per_worker);
    for (SkillId s : draw_skills(gen, k, universe)) {
      w.skills.push_back({s, truncated_normal(gen, p.mean_price, price_sd)});
    }
    inst.workers.push_back(std::move(w));
  }

  inst.tasks.reserve(p.n_tasks);
  for (int i = 0; i < p.n_tasks; ++i) {
    Task t;
    t.id = i;
    t.location.x = p.area_side * rng::uniform01(gen);
    t.location.y = p.area_side * rng::uniform01(gen);
    const int k = draw_count(gen, p.skills_per_task);
    t.required = draw_skills(gen, k, universe);
    t.budget = truncated_normal(gen, p.mean_budget, budget_sd);
    inst.tasks.push_back(std::move(t));
  }
  return inst;
}

}  // namespace sata
