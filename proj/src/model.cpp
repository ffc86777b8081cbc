#include "sata/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "sata/errors.hpp"

namespace sata {

namespace {

void require_worker(const Instance& inst, WorkerId w) {
  if (w < 0 || w >= inst.n_workers()) {
    throw std::invalid_argument("worker id " + std::to_string(w) + " out of range");
  }
}

void require_task(const Instance& inst, TaskId t) {
  if (t < 0 || t >= inst.n_tasks()) {
    throw std::invalid_argument("task id " + std::to_string(t) + " out of range");
  }
}

bool sorted_unique(const std::vector<SkillId>& v) {
  return std::is_sorted(v.begin(), v.end()) &&
         std::adjacent_find(v.begin(), v.end()) == v.end();
}

}  // namespace

bool Worker::owns(SkillId s) const {
  auto it = std::lower_bound(skills.begin(), skills.end(), s,
                             [](const SkillFee& sf, SkillId v) { return sf.skill < v; });
  return it != skills.end() && it->skill == s;
}

Money Worker::fee_for(SkillId s) const {
  auto it = std::lower_bound(skills.begin(), skills.end(), s,
                             [](const SkillFee& sf, SkillId v) { return sf.skill < v; });
  if (it == skills.end() || it->skill != s) {
    throw std::invalid_argument("worker " + std::to_string(id) +
                                " does not own skill " + std::to_string(s));
  }
  return it->fee;
}

bool Assignment::is_completed(TaskId t) const {
  return std::binary_search(completed.begin(), completed.end(), t);
}

std::vector<std::string> instance_problems(const Instance& inst) {
  std::vector<std::string> out;
  auto add = [&out](const std::string& m) { out.push_back(m); };

  if (inst.n_skills < 1) add("skill universe must have at least one skill");
  if (!(inst.gamma >= 0.0) || !std::isfinite(inst.gamma)) add("gamma must be finite and >= 0");

  for (int i = 0; i < inst.n_workers(); ++i) {
    const Worker& w = inst.workers[i];
    const std::string who = "worker " + std::to_string(i);
    if (w.id != i) add(who + ": id must equal its index (" + std::to_string(w.id) + ")");
    if (!std::isfinite(w.location.x) || !std::isfinite(w.location.y)) {
      add(who + ": non-finite location");
    }
    for (const SkillFee& sf : w.skills) {
      if (sf.skill < 0 || sf.skill >= inst.n_skills) {
        add(who + ": skill id " + std::to_string(sf.skill) + " outside universe");
      }
      if (!(sf.fee >= 0.0) || !std::isfinite(sf.fee)) {
        add(who + ": fee for skill " + std::to_string(sf.skill) + " must be finite and >= 0");
      }
    }
    for (std::size_t k = 1; k < w.skills.size(); ++k) {
      if (w.skills[k - 1].skill >= w.skills[k].skill) {
        add(who + ": skill ids must be distinct (and sorted)");
        break;
      }
    }
  }

  for (int i = 0; i < inst.n_tasks(); ++i) {
    const Task& t = inst.tasks[i];
    const std::string who = "task " + std::to_string(i);
    if (t.id != i) add(who + ": id must equal its index (" + std::to_string(t.id) + ")");
    if (!std::isfinite(t.location.x) || !std::isfinite(t.location.y)) {
      add(who + ": non-finite location");
    }
    if (t.required.empty()) add(who + ": required skill set is empty");
    if (!sorted_unique(t.required)) add(who + ": required skills must be distinct (and sorted)");
    for (SkillId s : t.required) {
      if (s < 0 || s >= inst.n_skills) {
        add(who + ": required skill " + std::to_string(s) + " outside universe");
      }
    }
    if (!(t.budget >= 0.0) || !std::isfinite(t.budget)) {
      add(who + ": budget must be finite and >= 0");
    }
  }

  if (inst.has_override()) {
    const std::size_t want =
        static_cast<std::size_t>(inst.n_workers()) * static_cast<std::size_t>(inst.n_tasks());
    if (inst.distance_override.size() != want) {
      add("distance override must be |W| x |T| = " + std::to_string(want) + " entries, got " +
          std::to_string(inst.distance_override.size()));
    } else {
      for (double d : inst.distance_override) {
        if (!(d >= 0.0) || !std::isfinite(d)) {
          add("distance override entries must be finite and >= 0");
          break;
        }
      }
    }
  }
  return out;
}

void check_instance(const Instance& inst) {
  const auto problems = instance_problems(inst);
  if (problems.empty()) return;
  std::ostringstream os;
  os << "invalid instance:";
  for (const auto& p : problems) os << "\n  - " << p;
  throw DataError(os.str());
}

double distance(const Instance& inst, WorkerId w, TaskId t) {
  require_worker(inst, w);
  require_task(inst, t);
  if (inst.has_override()) {
    return inst.distance_override[static_cast<std::size_t>(w) * inst.n_tasks() + t];
  }
  const double dx = inst.workers[w].location.x - inst.tasks[t].location.x;
  const double dy = inst.workers[w].location.y - inst.tasks[t].location.y;
  return std::sqrt(dx * dx + dy * dy);
}

Money worker_reward(const Instance& inst, WorkerId w, TaskId t,
                    std::span<const SkillId> used) {
  require_worker(inst, w);
  require_task(inst, t);
  if (used.empty()) {
    throw std::invalid_argument("worker_reward: used skill set is empty");
  }
  Money labor = 0.0;
  for (SkillId s : used) labor += inst.workers[w].fee_for(s);
  return inst.gamma * distance(inst, w, t) + labor;
}

Money task_utility(const Instance& inst, const Assignment& asg, TaskId t) {
  require_task(inst, t);
  if (!asg.is_completed(t)) return 0.0;
  Money paid = 0.0;
  for (const Contract& c : asg.contracts) {
    if (c.task == t) paid += c.reward();
  }
  return inst.tasks[t].budget - paid;
}

Money total_utility(const Instance& inst, const Assignment& asg) {
  Money total = 0.0;
  for (int t = 0; t < inst.n_tasks(); ++t) total += task_utility(inst, asg, t);
  return total;
}

std::string ValidationReport::to_string() const {
  if (violations.empty()) return "valid";
  std::ostringstream os;
  for (const Violation& v : violations) os << v.detail << "\n";
  return os.str();
}

ValidationReport validate(const Instance& inst, const Assignment& asg) {
  ValidationReport report;
  auto add = [&report](ViolationKind kind, TaskId t, WorkerId w, SkillId s,
                       const std::string& detail) {
    report.violations.push_back({kind, t, w, s, detail});
  };

  // completed list must name real tasks, without duplicates
  std::set<TaskId> completed;
  for (TaskId t : asg.completed) {
    if (t < 0 || t >= inst.n_tasks()) {
      add(ViolationKind::InvalidReference, t, -1, -1,
          "completed references unknown task " + std::to_string(t));
      continue;
    }
    if (!completed.insert(t).second) {
      add(ViolationKind::InvalidReference, t, -1, -1,
          "task " + std::to_string(t) + " listed as completed twice");
    }
  }

  std::unordered_map<WorkerId, int> seen_worker;
  std::unordered_map<TaskId, Money> task_cost;
  std::unordered_map<TaskId, std::set<SkillId>> task_cover;

  for (const Contract& c : asg.contracts) {
    const std::string tag =
        "contract (worker " + std::to_string(c.worker) + ", task " + std::to_string(c.task) + ")";
    if (c.worker < 0 || c.worker >= inst.n_workers() || c.task < 0 || c.task >= inst.n_tasks()) {
      add(ViolationKind::InvalidReference, c.task, c.worker, -1, tag + ": unknown worker or task id");
      continue;
    }
    if (++seen_worker[c.worker] == 2) {
      add(ViolationKind::DuplicateWorker, c.task, c.worker, -1,
          "worker " + std::to_string(c.worker) + " appears in more than one contract");
    }
    if (!completed.count(c.task)) {
      add(ViolationKind::ContractOutsideCompleted, c.task, c.worker, -1,
          tag + ": task is not in the completed set");
    }
    if (c.used_skills.empty()) {
      add(ViolationKind::EmptyUsedSkills, c.task, c.worker, -1, tag + ": no skills used");
      continue;
    }

    const Worker& w = inst.workers[c.worker];
    const Task& t = inst.tasks[c.task];
    Money labor = 0.0;
    bool labor_ok = true;
    std::set<SkillId> used_set;
    for (SkillId s : c.used_skills) {
      if (!used_set.insert(s).second) {
        add(ViolationKind::InvalidReference, c.task, c.worker, s,
            tag + ": skill " + std::to_string(s) + " repeated");
      }
      if (!w.owns(s)) {
        add(ViolationKind::SkillNotOwned, c.task, c.worker, s,
            tag + ": worker does not own skill " + std::to_string(s));
        labor_ok = false;
        continue;
      }
      labor += w.fee_for(s);
      if (!std::binary_search(t.required.begin(), t.required.end(), s)) {
        add(ViolationKind::SkillNotRequired, c.task, c.worker, s,
            tag + ": skill " + std::to_string(s) + " is not required by the task");
      } else {
        task_cover[c.task].insert(s);
      }
    }
    const Money transport = inst.gamma * distance(inst, c.worker, c.task);
    if (std::abs(transport - c.transport_fee) > kBudgetEps) {
      add(ViolationKind::FeeMismatch, c.task, c.worker, -1,
          tag + ": stored transport fee " + std::to_string(c.transport_fee) +
              " differs from recomputed " + std::to_string(transport));
    }
    if (labor_ok && std::abs(labor - c.labor_fee) > kBudgetEps) {
      add(ViolationKind::FeeMismatch, c.task, c.worker, -1,
          tag + ": stored labor fee " + std::to_string(c.labor_fee) +
              " differs from recomputed " + std::to_string(labor));
    }
    task_cost[c.task] += transport + labor;
  }

  for (TaskId t : completed) {
    const Task& task = inst.tasks[t];
    const auto& cover = task_cover[t];
    for (SkillId s : task.required) {
      if (!cover.count(s)) {
        add(ViolationKind::UncoveredSkill, t, -1, s,
            "completed task " + std::to_string(t) + " is missing required skill " +
                std::to_string(s));
      }
    }
    const Money cost = task_cost.count(t) ? task_cost[t] : 0.0;
    if (cost > task.budget + kBudgetEps) {
      add(ViolationKind::BudgetOverrun, t, -1, -1,
          "completed task " + std::to_string(t) + " costs " + std::to_string(cost) +
              " exceeding budget " + std::to_string(task.budget));
    }
  }
  return report;
}

std::size_t instance_bytes(const Instance& inst) {
  std::size_t bytes = sizeof(Instance);
  bytes += inst.workers.capacity() * sizeof(Worker);
  for (const Worker& w : inst.workers) bytes += w.skills.capacity() * sizeof(SkillFee);
  bytes += inst.tasks.capacity() * sizeof(Task);
  for (const Task& t : inst.tasks) bytes += t.required.capacity() * sizeof(SkillId);
  bytes += inst.distance_override.capacity() * sizeof(double);
  return bytes;
}

}  // namespace sata
