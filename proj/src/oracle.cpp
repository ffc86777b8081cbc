#include "sata/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "sata/errors.hpp"
#include "sata/rng.hpp"

namespace sata {

namespace {

constexpr double kEnumerationBudget = 1e8;

double mapping_space(int n_tasks, int n_workers) {
  return std::pow(static_cast<double>(n_tasks) + 1.0, static_cast<double>(n_workers));
}

// Cost-minimal realization of one task for a fixed set of mapped workers:
// every required skill goes to the cheapest provider (ties: lower worker id);
// transport is paid once per mapped worker, even one providing nothing.
// Returns false when some skill has no provider.
struct TaskEval {
  Money cost = 0.0;
  bool covered = false;
};

TaskEval eval_task(const Instance& inst, TaskId t, const std::vector<WorkerId>& members,
                   std::vector<Money>& min_fee) {
  TaskEval ev;
  const Task& task = inst.tasks[t];
  for (SkillId s : task.required) min_fee[s] = std::numeric_limits<Money>::infinity();
  ev.cost = 0.0;
  for (WorkerId w : members) {
    ev.cost += inst.gamma * distance(inst, w, t);
    for (const SkillFee& sf : inst.workers[w].skills) {
      if (std::binary_search(task.required.begin(), task.required.end(), sf.skill) &&
          sf.fee < min_fee[sf.skill]) {
        min_fee[sf.skill] = sf.fee;
      }
    }
  }
  for (SkillId s : task.required) {
    if (!std::isfinite(min_fee[s])) return ev;  // covered stays false
    ev.cost += min_fee[s];
  }
  ev.covered = true;
  return ev;
}

Money mapping_utility(const Instance& inst, const std::vector<int>& digits,
                      std::vector<std::vector<WorkerId>>& members_buf,
                      std::vector<Money>& min_fee) {
  for (auto& m : members_buf) m.clear();
  for (int w = 0; w < inst.n_workers(); ++w) {
    if (digits[w] > 0) members_buf[digits[w] - 1].push_back(w);
  }
  Money total = 0.0;
  for (int t = 0; t < inst.n_tasks(); ++t) {
    if (members_buf[t].empty()) continue;
    const TaskEval ev = eval_task(inst, t, members_buf[t], min_fee);
    if (ev.covered && ev.cost <= inst.tasks[t].budget + kBudgetEps) {
      total += inst.tasks[t].budget - ev.cost;
    }
  }
  return total;
}

}  // namespace

Assignment exact_optimal(const Instance& inst, const MappingBound& bound) {
  if (mapping_space(bound.max_tasks, bound.max_workers) > kEnumerationBudget) {
    throw UsageError("exact_optimal: bound of " + std::to_string(bound.max_workers) +
                     " workers x " + std::to_string(bound.max_tasks) +
                     " tasks exceeds the enumeration budget of 1e8 mappings");
  }
  if (inst.n_workers() > bound.max_workers || inst.n_tasks() > bound.max_tasks) {
    throw UsageError("exact_optimal: instance has " + std::to_string(inst.n_workers()) +
                     " workers and " + std::to_string(inst.n_tasks()) +
                     " tasks; refusing beyond the bound of " + std::to_string(bound.max_workers) +
                     " workers and " + std::to_string(bound.max_tasks) + " tasks");
  }

  const int W = inst.n_workers();
  const int T = inst.n_tasks();

  // Odometer over worker -> {0 = unassigned, k = task k-1}, worker 0 most
  // significant, so mappings are visited in lexicographic order and the
  // first maximum is the lexicographically smallest one.
  std::vector<int> digits(W, 0), best_digits(W, 0);
  std::vector<std::vector<WorkerId>> members_buf(T);
  std::vector<Money> min_fee(inst.n_skills, 0.0);

  Money best = mapping_utility(inst, digits, members_buf, min_fee);  // all unassigned -> 0
  bool done = W == 0;
  while (!done) {
    int pos = W - 1;
    while (pos >= 0 && digits[pos] == T) {
      digits[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++digits[pos];
    const Money v = mapping_utility(inst, digits, members_buf, min_fee);
    if (v > best) {
      best = v;
      best_digits = digits;
    }
  }

  // Materialize the winning mapping as contracts.
  Assignment asg;
  for (auto& m : members_buf) m.clear();
  for (int w = 0; w < W; ++w) {
    if (best_digits[w] > 0) members_buf[best_digits[w] - 1].push_back(w);
  }
  for (int t = 0; t < T; ++t) {
    if (members_buf[t].empty()) continue;
    const TaskEval ev = eval_task(inst, t, members_buf[t], min_fee);
    if (!ev.covered || ev.cost > inst.tasks[t].budget + kBudgetEps) continue;

    // per-skill cheapest provider, ties to the lower worker id
    std::vector<std::vector<SkillId>> provides(members_buf[t].size());
    for (SkillId s : inst.tasks[t].required) {
      int best_idx = -1;
      Money best_fee = std::numeric_limits<Money>::infinity();
      for (std::size_t i = 0; i < members_buf[t].size(); ++i) {
        const Worker& w = inst.workers[members_buf[t][i]];
        if (w.owns(s) && w.fee_for(s) < best_fee) {
          best_fee = w.fee_for(s);
          best_idx = static_cast<int>(i);
        }
      }
      provides[best_idx].push_back(s);
    }
    asg.completed.push_back(t);
    for (std::size_t i = 0; i < members_buf[t].size(); ++i) {
      if (provides[i].empty()) continue;  // cannot happen in an optimal mapping
      Contract c;
      c.worker = members_buf[t][i];
      c.task = t;
      c.used_skills = provides[i];
      c.transport_fee = inst.gamma * distance(inst, c.worker, t);
      c.labor_fee = 0.0;
      for (SkillId s : c.used_skills) c.labor_fee += inst.workers[c.worker].fee_for(s);
      asg.contracts.push_back(std::move(c));
    }
  }
  return asg;
}

Assignment solve_random(const Instance& inst, std::uint64_t seed, SolveStats* stats) {
  std::mt19937_64 gen(seed);

  std::vector<TaskId> order(inst.tasks.size());
  for (int i = 0; i < inst.n_tasks(); ++i) order[i] = i;
  rng::shuffle(order, gen);

  std::vector<WorkerId> pool(inst.workers.size());
  for (int i = 0; i < inst.n_workers(); ++i) pool[i] = i;

  Assignment asg;
  std::vector<char> remaining(inst.n_skills, 0);
  std::size_t peak = 0;

  for (TaskId t : order) {
    const Task& task = inst.tasks[t];
    std::fill(remaining.begin(), remaining.end(), 0);
    for (SkillId s : task.required) remaining[s] = 1;
    std::size_t uncovered = task.required.size();

    const std::vector<WorkerId> pool_backup = pool;
    std::vector<Contract> contracts;
    std::vector<SkillId> remaining_ids;
    Money cum = 0.0;
    bool dead_end = false;

    while (uncovered > 0 && !dead_end) {
      remaining_ids.clear();
      for (SkillId s = 0; s < inst.n_skills; ++s) {
        if (remaining[s]) remaining_ids.push_back(s);
      }
      // workers that can still contribute, in id order for determinism
      std::vector<WorkerId> eligible;
      for (WorkerId w : pool) {
        for (const SkillFee& sf : inst.workers[w].skills) {
          if (remaining[sf.skill]) {
            eligible.push_back(w);
            break;
          }
        }
      }
      std::sort(eligible.begin(), eligible.end());

      // draw without replacement until a budget-feasible pick appears
      bool contracted = false;
      while (!eligible.empty()) {
        const std::size_t idx = static_cast<std::size_t>(rng::below(gen, eligible.size()));
        const WorkerId w = eligible[idx];
        auto cand = best_subset_for_worker(inst, w, t, remaining_ids);
        if (cand && cum + cand->cost <= task.budget + kBudgetEps) {
          cum += cand->cost;
          for (SkillId s : cand->subset) {
            if (remaining[s]) {
              remaining[s] = 0;
              --uncovered;
            }
          }
          Contract c;
          c.worker = w;
          c.task = t;
          c.transport_fee = inst.gamma * distance(inst, w, t);
          c.labor_fee = 0.0;
          for (SkillId s : cand->subset) c.labor_fee += inst.workers[w].fee_for(s);
          c.used_skills = std::move(cand->subset);
          contracts.push_back(std::move(c));
          pool.erase(std::find(pool.begin(), pool.end(), w));
          contracted = true;
          break;
        }
        eligible.erase(eligible.begin() + static_cast<std::ptrdiff_t>(idx));
      }
      if (!contracted) dead_end = true;
    }

    if (uncovered == 0) {
      asg.completed.push_back(t);
      for (Contract& c : contracts) asg.contracts.push_back(std::move(c));
    } else {
      pool = pool_backup;
    }
    std::size_t live = pool.capacity() * sizeof(WorkerId) + remaining.size() +
                       contracts.capacity() * sizeof(Contract);
    for (const Contract& c : asg.contracts) live += c.used_skills.capacity() * sizeof(SkillId);
    live += asg.contracts.capacity() * sizeof(Contract);
    peak = std::max(peak, live);
  }
  std::sort(asg.completed.begin(), asg.completed.end());
  if (stats) stats->peak_bytes = peak;
  return asg;
}

}  // namespace sata
