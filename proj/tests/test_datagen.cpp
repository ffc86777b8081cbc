#include <doctest.h>

#include <cmath>
#include <set>

#include "fixture.hpp"
#include "sata/datagen.hpp"
#include "sata/errors.hpp"
#include "sata/io.hpp"
#include "sata/solver.hpp"

using namespace sata;

TEST_CASE("generated instances respect the parameter ranges") {
  GenParams p;
  p.n_tasks = 50;
  p.n_workers = 200;
  p.n_skills = 30;
  p.seed = 7;
  const Instance inst = generate_instance(p);

  CHECK(instance_problems(inst).empty());
  CHECK(inst.n_workers() == 200);
  CHECK(inst.n_tasks() == 50);
  for (const Worker& w : inst.workers) {
    CHECK(w.skills.size() >= 1);
    CHECK(w.skills.size() <= 5);
    std::set<SkillId> distinct;
    for (const SkillFee& sf : w.skills) {
      CHECK(sf.skill >= 0);
      CHECK(sf.skill < 30);
      CHECK(sf.fee > 0.01);
      distinct.insert(sf.skill);
    }
    CHECK(distinct.size() == w.skills.size());
    CHECK(w.location.x >= 0.0);
    CHECK(w.location.x <= p.area_side);
  }
  for (const Task& t : inst.tasks) {
    CHECK(t.required.size() >= 1);
    CHECK(t.required.size() <= 5);
    CHECK(t.budget > 0.01);
  }
}

TEST_CASE("zero standard deviation degenerates to the mean") {
  GenParams p;
  p.n_tasks = 5;
  p.n_workers = 20;
  p.price_sd = 0.0;
  p.budget_sd = 0.0;
  const Instance inst = generate_instance(p);
  for (const Worker& w : inst.workers) {
    for (const SkillFee& sf : w.skills) CHECK(sf.fee == p.mean_price);
  }
  for (const Task& t : inst.tasks) CHECK(t.budget == p.mean_budget);
}

TEST_CASE("generation is a pure function of the seed") {
  GenParams p;
  p.n_tasks = 20;
  p.n_workers = 50;
  p.seed = 99;
  const std::string a = instance_to_json(generate_instance(p));
  const std::string b = instance_to_json(generate_instance(p));
  CHECK(a == b);

  p.seed = 100;
  CHECK(instance_to_json(generate_instance(p)) != a);
}

TEST_CASE("sample moments land near the configured means") {
  GenParams p;
  p.n_tasks = 5000;
  p.n_workers = 5000;
  p.seed = 1;
  const Instance inst = generate_instance(p);

  double fee_sum = 0.0;
  std::size_t fee_count = 0;
  for (const Worker& w : inst.workers) {
    for (const SkillFee& sf : w.skills) {
      fee_sum += sf.fee;
      ++fee_count;
    }
  }
  const double fee_mean = fee_sum / static_cast<double>(fee_count);
  CHECK(std::abs(fee_mean - p.mean_price) <=
        3.0 * p.effective_price_sd() / std::sqrt(static_cast<double>(fee_count)));

  double budget_sum = 0.0;
  for (const Task& t : inst.tasks) budget_sum += t.budget;
  const double budget_mean = budget_sum / static_cast<double>(inst.n_tasks());
  CHECK(std::abs(budget_mean - p.mean_budget) <=
        3.0 * p.effective_budget_sd() / std::sqrt(static_cast<double>(inst.n_tasks())));
}

TEST_CASE("invalid parameters are refused") {
  GenParams p;
  SUBCASE("zero tasks") { p.n_tasks = 0; }
  SUBCASE("range above the universe") { p.skills_per_worker = {1, 50}; p.n_skills = 10; }
  SUBCASE("empty range") { p.skills_per_task = {3, 2}; }
  SUBCASE("negative gamma") { p.gamma = -0.5; }
  CHECK_THROWS_AS(generate_instance(p), UsageError);
}

TEST_CASE("every solver accepts generated instances") {
  GenParams p;
  p.n_tasks = 30;
  p.n_workers = 120;
  p.seed = 5;
  const Instance inst = generate_instance(p);
  CHECK(validate(inst, solve_tba(inst)).ok());
  CHECK(validate(inst, solve_aba(inst)).ok());
}
