#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sata {

using SkillId = int;
using WorkerId = int;
using TaskId = int;
using Money = double;

// Absolute tolerance for budget feasibility: a cost c fits budget B iff
// c <= B + kBudgetEps. Money mixes irrational transport terms (gamma * sqrt)
// with decimal fees, so exact comparison is wrong.
inline constexpr double kBudgetEps = 1e-9;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct SkillFee {
  SkillId skill = 0;
  Money fee = 0.0;
};

// A worker: location plus the distinct skills they offer, each with its fee.
// `skills` is kept sorted by skill id.
struct Worker {
  WorkerId id = 0;
  Point location;
  std::vector<SkillFee> skills;

  bool owns(SkillId s) const;
  // Fee for one owned skill; throws std::invalid_argument if not owned.
  Money fee_for(SkillId s) const;
};

// A task: location, the set of skills it needs (sorted, duplicate-free,
// non-empty) and its total budget.
struct Task {
  TaskId id = 0;
  Point location;
  std::vector<SkillId> required;
  Money budget = 0.0;
};

// A problem instance. Worker and task ids are contiguous and equal to their
// index. `distance_override`, when non-empty, is a row-major |W| x |T| matrix
// that replaces Euclidean distances (lets fixtures pin exact distances).
struct Instance {
  int n_skills = 0;
  double gamma = 0.0;  // money per unit distance
  std::vector<Worker> workers;
  std::vector<Task> tasks;
  std::vector<double> distance_override;

  bool has_override() const { return !distance_override.empty(); }
  int n_workers() const { return static_cast<int>(workers.size()); }
  int n_tasks() const { return static_cast<int>(tasks.size()); }
};

// One worker's engagement on one task: the skills they actually perform,
// plus the fee breakdown. Both fees are recomputable from the instance.
struct Contract {
  WorkerId worker = 0;
  TaskId task = 0;
  std::vector<SkillId> used_skills;  // sorted, non-empty
  Money transport_fee = 0.0;         // gamma * distance(worker, task)
  Money labor_fee = 0.0;             // sum of fees for used_skills

  Money reward() const { return transport_fee + labor_fee; }
};

// A full assignment. Only completed tasks carry contracts; a task that could
// not be covered within budget is rolled back entirely.
struct Assignment {
  std::vector<Contract> contracts;   // in the order they were made
  std::vector<TaskId> completed;     // sorted

  bool is_completed(TaskId t) const;
};

// Checks every Instance invariant; returns one message per problem found
// (empty means the instance is well-formed).
std::vector<std::string> instance_problems(const Instance& inst);

// Throws DataError listing all problems, if any.
void check_instance(const Instance& inst);

// Distance between a worker and a task: override entry when present, else
// Euclidean. Throws std::invalid_argument on out-of-range ids.
double distance(const Instance& inst, WorkerId w, TaskId t);

// Reward a worker collects for performing `used` at a task:
// gamma * distance + sum of the worker's fees for `used`.
// `used` must be non-empty and owned by the worker.
Money worker_reward(const Instance& inst, WorkerId w, TaskId t,
                    std::span<const SkillId> used);

// Budget minus summed contract rewards when the task is completed, 0 otherwise.
Money task_utility(const Instance& inst, const Assignment& asg, TaskId t);

// Sum of task_utility over all tasks.
Money total_utility(const Instance& inst, const Assignment& asg);

// --- validation ---------------------------------------------------------

enum class ViolationKind {
  InvalidReference,       // contract or completed entry names an unknown id
  DuplicateWorker,        // worker appears in more than one contract
  EmptyUsedSkills,
  SkillNotOwned,          // contract uses a skill the worker does not offer
  SkillNotRequired,       // contract uses a skill the task does not need
  UncoveredSkill,         // completed task missing a required skill
  BudgetOverrun,          // completed task's total rewards exceed its budget
  ContractOutsideCompleted,
  FeeMismatch,            // stored fee differs from the recomputed value
};

struct Violation {
  ViolationKind kind;
  TaskId task = -1;
  WorkerId worker = -1;
  SkillId skill = -1;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

// Checks every Assignment invariant. Violations are data, not faults: the
// report is empty iff the assignment is valid for the instance.
ValidationReport validate(const Instance& inst, const Assignment& asg);

// Rough byte footprint of an instance's live structures (used by the bench
// memory estimate).
std::size_t instance_bytes(const Instance& inst);

}  // namespace sata
