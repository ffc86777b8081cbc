#include "sata/solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace sata {

namespace {

// Working mask over the skill universe; true = still uncovered.
struct RemainingMask {
  std::vector<char> mask;
  int count = 0;

  explicit RemainingMask(int n_skills) : mask(static_cast<std::size_t>(n_skills), 0) {}

  void set(const std::vector<SkillId>& skills) {
    for (SkillId s : skills) {
      if (!mask[s]) {
        mask[s] = 1;
        ++count;
      }
    }
  }
  void clear(const std::vector<SkillId>& skills) {
    for (SkillId s : skills) {
      if (mask[s]) {
        mask[s] = 0;
        --count;
      }
    }
  }
  bool test(SkillId s) const { return mask[s] != 0; }
};

// The worker's offer for the greedy step: everything they can still
// contribute, priced by reward per newly covered skill.
std::optional<Candidate> full_intersection_candidate(const Instance& inst, WorkerId w,
                                                     TaskId t, const RemainingMask& remaining) {
  Candidate cand;
  Money labor = 0.0;
  for (const SkillFee& sf : inst.workers[w].skills) {
    if (remaining.test(sf.skill)) {
      cand.subset.push_back(sf.skill);
      labor += sf.fee;
    }
  }
  if (cand.subset.empty()) return std::nullopt;
  cand.worker = w;
  cand.cost = inst.gamma * distance(inst, w, t) + labor;
  cand.ratio = cand.cost / static_cast<double>(cand.subset.size());
  return cand;
}

size_t container_bytes(const std::vector<Contract>& contracts) {
  std::size_t b = contracts.capacity() * sizeof(Contract);
  for (const Contract& c : contracts) b += c.used_skills.capacity() * sizeof(SkillId);
  return b;
}

Assignment solve_ordered(const Instance& inst, std::vector<TaskId> order, SolveStats* stats) {
  Assignment asg;
  std::vector<WorkerId> pool(inst.workers.size());
  for (int i = 0; i < inst.n_workers(); ++i) pool[i] = i;

  std::size_t peak = pool.capacity() * sizeof(WorkerId) +
                     static_cast<std::size_t>(inst.n_skills) +
                     order.capacity() * sizeof(TaskId);
  for (TaskId t : order) {
    if (auto contracts = greedy_cover_task(inst, t, pool)) {
      asg.completed.push_back(t);
      for (Contract& c : *contracts) asg.contracts.push_back(std::move(c));
    }
    const std::size_t live = pool.capacity() * sizeof(WorkerId) +
                             static_cast<std::size_t>(inst.n_skills) +
                             order.capacity() * sizeof(TaskId) +
                             container_bytes(asg.contracts) +
                             asg.completed.capacity() * sizeof(TaskId);
    peak = std::max(peak, live);
  }
  std::sort(asg.completed.begin(), asg.completed.end());
  if (stats) stats->peak_bytes = peak;
  return asg;
}

}  // namespace

std::optional<Candidate> best_subset_for_worker(const Instance& inst, WorkerId w, TaskId t,
                                                std::span<const SkillId> remaining) {
  if (w < 0 || w >= inst.n_workers()) {
    throw std::invalid_argument("best_subset_for_worker: worker id out of range");
  }
  if (t < 0 || t >= inst.n_tasks()) {
    throw std::invalid_argument("best_subset_for_worker: task id out of range");
  }

  // relevant skills, cheapest first (ties by id so prefixes are canonical)
  std::vector<SkillFee> relevant;
  for (const SkillFee& sf : inst.workers[w].skills) {
    if (std::binary_search(remaining.begin(), remaining.end(), sf.skill)) {
      relevant.push_back(sf);
    }
  }
  if (relevant.empty()) return std::nullopt;
  std::sort(relevant.begin(), relevant.end(), [](const SkillFee& a, const SkillFee& b) {
    return a.fee != b.fee ? a.fee < b.fee : a.skill < b.skill;
  });

  const double tau = inst.gamma * distance(inst, w, t);

  // For fixed k the k cheapest relevant fees minimize (tau + sum)/k, so the
  // argmin over all subsets is the best prefix. Equal ratios break toward
  // the lexicographically smaller sorted id sequence.
  std::optional<Candidate> best;
  Money acc = 0.0;
  std::vector<SkillId> prefix_ids;
  for (std::size_t k = 0; k < relevant.size(); ++k) {
    acc += relevant[k].fee;
    prefix_ids.push_back(relevant[k].skill);
    const double ratio = (tau + acc) / static_cast<double>(k + 1);
    if (!best || ratio < best->ratio) {
      std::vector<SkillId> ids = prefix_ids;
      std::sort(ids.begin(), ids.end());
      best = Candidate{w, std::move(ids), tau + acc, ratio};
    } else if (ratio == best->ratio) {
      std::vector<SkillId> ids = prefix_ids;
      std::sort(ids.begin(), ids.end());
      if (std::lexicographical_compare(ids.begin(), ids.end(), best->subset.begin(),
                                       best->subset.end())) {
        best = Candidate{w, std::move(ids), tau + acc, ratio};
      }
    }
  }
  return best;
}

std::optional<std::vector<Contract>> greedy_cover_task(const Instance& inst, TaskId t,
                                                       std::vector<WorkerId>& pool) {
  const Task& task = inst.tasks[t];
  RemainingMask remaining(inst.n_skills);
  remaining.set(task.required);

  const std::vector<WorkerId> pool_backup = pool;
  std::vector<Contract> contracts;
  Money cum = 0.0;

  while (remaining.count > 0) {
    std::optional<Candidate> best;
    for (WorkerId w : pool) {
      auto cand = full_intersection_candidate(inst, w, t, remaining);
      if (!cand) continue;
      if (cum + cand->cost > task.budget + kBudgetEps) continue;  // skip, don't abort
      if (!best || cand->ratio < best->ratio ||
          (cand->ratio == best->ratio && cand->worker < best->worker)) {
        best = std::move(cand);
      }
    }
    if (!best) {
      pool = pool_backup;  // dead end: roll the whole task back
      return std::nullopt;
    }
    cum += best->cost;
    remaining.clear(best->subset);
    pool.erase(std::find(pool.begin(), pool.end(), best->worker));
    Contract c;
    c.worker = best->worker;
    c.task = t;
    c.transport_fee = inst.gamma * distance(inst, best->worker, t);
    c.labor_fee = 0.0;
    for (SkillId s : best->subset) c.labor_fee += inst.workers[best->worker].fee_for(s);
    c.used_skills = std::move(best->subset);
    contracts.push_back(std::move(c));
  }
  return contracts;
}

Assignment solve_tba(const Instance& inst, SolveStats* stats) {
  std::vector<TaskId> order(inst.tasks.size());
  for (int i = 0; i < inst.n_tasks(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&inst](TaskId a, TaskId b) {
    const Money ba = inst.tasks[a].budget, bb = inst.tasks[b].budget;
    return ba != bb ? ba > bb : a < b;
  });
  return solve_ordered(inst, std::move(order), stats);
}

Assignment solve_aba(const Instance& inst, SolveStats* stats) {
  std::vector<TaskId> order(inst.tasks.size());
  for (int i = 0; i < inst.n_tasks(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&inst](TaskId a, TaskId b) {
    const double ka = inst.tasks[a].budget / static_cast<double>(inst.tasks[a].required.size());
    const double kb = inst.tasks[b].budget / static_cast<double>(inst.tasks[b].required.size());
    return ka != kb ? ka > kb : a < b;
  });
  return solve_ordered(inst, std::move(order), stats);
}

}  // namespace sata
