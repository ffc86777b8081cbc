#pragma once

// Test-only machinery: random small instances and independent brute-force
// oracles kept deliberately separate from the implementation paths they
// check.

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <vector>

#include "sata/model.hpp"
#include "sata/rng.hpp"

namespace testhelp {

struct SmallLimits {
  int max_workers = 7;
  int max_tasks = 3;
  int max_skills = 5;
  bool integer_fees = false;
};

// A random instance within the oracle-friendly limits. Mixes integer and
// continuous fees, occasional gamma = 0, tight budgets and distance
// overrides to hit the edge paths.
inline sata::Instance random_small_instance(std::mt19937_64& g, const SmallLimits& lim = {}) {
  using namespace sata;
  Instance inst;
  inst.n_skills = 1 + static_cast<int>(rng::below(g, lim.max_skills));
  const int n_workers = 1 + static_cast<int>(rng::below(g, lim.max_workers));
  const int n_tasks = 1 + static_cast<int>(rng::below(g, lim.max_tasks));
  switch (rng::below(g, 4)) {
    case 0: inst.gamma = 0.0; break;
    case 1: inst.gamma = 1.0; break;
    default: inst.gamma = 2.0 * rng::uniform01(g);
  }

  auto fee = [&g, &lim]() -> Money {
    if (lim.integer_fees) return static_cast<Money>(rng::below(g, 10));
    return 10.0 * rng::uniform01(g);
  };

  for (int i = 0; i < n_workers; ++i) {
    Worker w;
    w.id = i;
    w.location = {10.0 * rng::uniform01(g), 10.0 * rng::uniform01(g)};
    const int k = 1 + static_cast<int>(rng::below(g, inst.n_skills));
    std::vector<SkillId> ids(inst.n_skills);
    for (int s = 0; s < inst.n_skills; ++s) ids[s] = s;
    rng::shuffle(ids, g);
    ids.resize(k);
    std::sort(ids.begin(), ids.end());
    for (SkillId s : ids) w.skills.push_back({s, fee()});
    inst.workers.push_back(std::move(w));
  }

  for (int i = 0; i < n_tasks; ++i) {
    Task t;
    t.id = i;
    t.location = {10.0 * rng::uniform01(g), 10.0 * rng::uniform01(g)};
    const int k = 1 + static_cast<int>(rng::below(g, inst.n_skills));
    std::vector<SkillId> ids(inst.n_skills);
    for (int s = 0; s < inst.n_skills; ++s) ids[s] = s;
    rng::shuffle(ids, g);
    ids.resize(k);
    std::sort(ids.begin(), ids.end());
    t.required = ids;
    // from clearly generous down to zero
    switch (rng::below(g, 4)) {
      case 0: t.budget = 0.0; break;
      case 1: t.budget = 10.0 * rng::uniform01(g); break;
      default: t.budget = 20.0 + 40.0 * rng::uniform01(g);
    }
    inst.tasks.push_back(std::move(t));
  }

  if (rng::below(g, 5) == 0) {
    inst.distance_override.resize(static_cast<std::size_t>(n_workers) * n_tasks);
    for (double& d : inst.distance_override) d = 5.0 * rng::uniform01(g);
  }
  return inst;
}

struct SubsetChoice {
  std::vector<sata::SkillId> subset;
  double ratio = 0.0;
};

// Argmin of reward/|subset| over ALL non-empty subsets of the worker's
// skills inside `remaining`, by bitmask enumeration. Ties: lexicographically
// smaller sorted id sequence.
inline std::optional<SubsetChoice> exhaustive_best_subset(const sata::Instance& inst,
                                                          sata::WorkerId w, sata::TaskId t,
                                                          const std::vector<sata::SkillId>& remaining) {
  using namespace sata;
  std::vector<SkillFee> relevant;
  for (const SkillFee& sf : inst.workers[w].skills) {
    if (std::binary_search(remaining.begin(), remaining.end(), sf.skill)) relevant.push_back(sf);
  }
  if (relevant.empty()) return std::nullopt;

  const double tau = inst.gamma * distance(inst, w, t);
  std::optional<SubsetChoice> best;
  const unsigned n = static_cast<unsigned>(relevant.size());
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Money labor = 0.0;
    std::vector<SkillId> ids;
    for (unsigned b = 0; b < n; ++b) {
      if (mask & (1u << b)) {
        labor += relevant[b].fee;
        ids.push_back(relevant[b].skill);
      }
    }
    const double ratio = (tau + labor) / static_cast<double>(ids.size());
    if (!best || ratio < best->ratio ||
        (ratio == best->ratio &&
         std::lexicographical_compare(ids.begin(), ids.end(), best->subset.begin(),
                                      best->subset.end()))) {
      best = SubsetChoice{std::move(ids), ratio};
    }
  }
  return best;
}

// Minimum cost of completing task t with exactly `members`, enumerating every
// skill -> provider allocation (transport paid once per member regardless).
// Returns nothing when coverage is impossible.
inline std::optional<sata::Money> exhaustive_allocation_cost(const sata::Instance& inst,
                                                             sata::TaskId t,
                                                             const std::vector<sata::WorkerId>& members) {
  using namespace sata;
  const Task& task = inst.tasks[t];
  std::vector<std::vector<WorkerId>> providers(task.required.size());
  for (std::size_t i = 0; i < task.required.size(); ++i) {
    for (WorkerId w : members) {
      if (inst.workers[w].owns(task.required[i])) providers[i].push_back(w);
    }
    if (providers[i].empty()) return std::nullopt;
  }

  Money transport = 0.0;
  for (WorkerId w : members) transport += inst.gamma * distance(inst, w, t);

  std::vector<std::size_t> pick(task.required.size(), 0);
  std::optional<Money> best;
  while (true) {
    Money labor = 0.0;
    for (std::size_t i = 0; i < task.required.size(); ++i) {
      labor += inst.workers[providers[i][pick[i]]].fee_for(task.required[i]);
    }
    if (!best || transport + labor < *best) best = transport + labor;
    std::size_t pos = 0;
    while (pos < pick.size() && ++pick[pos] == providers[pos].size()) {
      pick[pos] = 0;
      ++pos;
    }
    if (pos == pick.size()) break;
  }
  return best;
}

}  // namespace testhelp
