#include "sata/io.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "sata/errors.hpp"

namespace sata {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw DataError(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path);
  out << body;
  if (!out) throw DataError("write failed for " + path);
}

// .at() with a DataError instead of a bare json exception.
template <typename T>
T get(const json& j, const char* key, const std::string& where) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw DataError(where + ": field '" + key + "': " + e.what());
  }
}

}  // namespace

Instance load_instance(const std::string& path) {
  const json j = parse_file(path);
  Instance inst;
  inst.gamma = get<double>(j, "gamma", path);
  inst.n_skills = get<int>(j, "skills", path);

  const auto workers = get<json>(j, "workers", path);
  int idx = 0;
  for (const auto& wj : workers) {
    const std::string where = path + ": workers[" + std::to_string(idx) + "]";
    Worker w;
    w.id = get<int>(wj, "id", where);
    if (w.id != idx) {
      throw DataError(where + ": worker ids must be contiguous from 0 (got " +
                      std::to_string(w.id) + ", expected " + std::to_string(idx) + ")");
    }
    w.location.x = get<double>(wj, "x", where);
    w.location.y = get<double>(wj, "y", where);
    for (const auto& sj : get<json>(wj, "skills", where)) {
      w.skills.push_back({get<int>(sj, "skill", where), get<double>(sj, "fee", where)});
    }
    std::sort(w.skills.begin(), w.skills.end(),
              [](const SkillFee& a, const SkillFee& b) { return a.skill < b.skill; });
    inst.workers.push_back(std::move(w));
    ++idx;
  }

  const auto tasks = get<json>(j, "tasks", path);
  idx = 0;
  for (const auto& tj : tasks) {
    const std::string where = path + ": tasks[" + std::to_string(idx) + "]";
    Task t;
    t.id = get<int>(tj, "id", where);
    if (t.id != idx) {
      throw DataError(where + ": task ids must be contiguous from 0 (got " +
                      std::to_string(t.id) + ", expected " + std::to_string(idx) + ")");
    }
    t.location.x = get<double>(tj, "x", where);
    t.location.y = get<double>(tj, "y", where);
    t.required = get<std::vector<SkillId>>(tj, "required", where);
    std::sort(t.required.begin(), t.required.end());
    t.budget = get<double>(tj, "budget", where);
    inst.tasks.push_back(std::move(t));
    ++idx;
  }

  if (j.contains("distances")) {
    try {
      inst.distance_override = j.at("distances").get<std::vector<double>>();
    } catch (const json::exception& e) {
      throw DataError(path + ": field 'distances': " + e.what());
    }
  }

  try {
    check_instance(inst);
  } catch (const DataError& e) {
    throw DataError(path + ": " + e.what());
  }
  return inst;
}

std::string instance_to_json(const Instance& inst) {
  ordered_json j;
  j["gamma"] = inst.gamma;
  j["skills"] = inst.n_skills;
  j["workers"] = ordered_json::array();
  for (const Worker& w : inst.workers) {
    ordered_json wj;
    wj["id"] = w.id;
    wj["x"] = w.location.x;
    wj["y"] = w.location.y;
    wj["skills"] = ordered_json::array();
    for (const SkillFee& sf : w.skills) {
      wj["skills"].push_back({{"skill", sf.skill}, {"fee", sf.fee}});
    }
    j["workers"].push_back(std::move(wj));
  }
  j["tasks"] = ordered_json::array();
  for (const Task& t : inst.tasks) {
    ordered_json tj;
    tj["id"] = t.id;
    tj["x"] = t.location.x;
    tj["y"] = t.location.y;
    tj["required"] = t.required;
    tj["budget"] = t.budget;
    j["tasks"].push_back(std::move(tj));
  }
  if (inst.has_override()) j["distances"] = inst.distance_override;
  return j.dump(2) + "\n";
}

void save_instance(const Instance& inst, const std::string& path) {
  write_file(path, instance_to_json(inst));
}

Assignment load_assignment(const std::string& path) {
  const json j = parse_file(path);
  Assignment asg;
  for (const auto& cj : get<json>(j, "contracts", path)) {
    Contract c;
    c.worker = get<int>(cj, "worker", path);
    c.task = get<int>(cj, "task", path);
    c.used_skills = get<std::vector<SkillId>>(cj, "used_skills", path);
    std::sort(c.used_skills.begin(), c.used_skills.end());
    c.transport_fee = get<double>(cj, "transport_fee", path);
    c.labor_fee = get<double>(cj, "labor_fee", path);
    asg.contracts.push_back(std::move(c));
  }
  asg.completed = get<std::vector<TaskId>>(j, "completed", path);
  std::sort(asg.completed.begin(), asg.completed.end());
  return asg;
}

std::string assignment_to_json(const Assignment& asg) {
  ordered_json j;
  j["contracts"] = ordered_json::array();
  for (const Contract& c : asg.contracts) {
    ordered_json cj;
    cj["worker"] = c.worker;
    cj["task"] = c.task;
    cj["used_skills"] = c.used_skills;
    cj["transport_fee"] = c.transport_fee;
    cj["labor_fee"] = c.labor_fee;
    j["contracts"].push_back(std::move(cj));
  }
  j["completed"] = asg.completed;
  return j.dump(2) + "\n";
}

void save_assignment(const Assignment& asg, const std::string& path) {
  write_file(path, assignment_to_json(asg));
}

namespace {

GenParams gen_params_from_json(const json& j, const std::string& where) {
  GenParams p;
  try {
    p.n_tasks = j.value("n_tasks", p.n_tasks);
    p.n_workers = j.value("n_workers", p.n_workers);
    p.gamma = j.value("gamma", p.gamma);
    p.mean_budget = j.value("mean_budget", p.mean_budget);
    p.mean_price = j.value("mean_price", p.mean_price);
    p.n_skills = j.value("n_skills", p.n_skills);
    if (j.contains("skills_per_worker")) {
      const auto r = j.at("skills_per_worker").get<std::vector<int>>();
      if (r.size() != 2) throw DataError(where + ": skills_per_worker must be [lo, hi]");
      p.skills_per_worker = {r[0], r[1]};
    }
    if (j.contains("skills_per_task")) {
      const auto r = j.at("skills_per_task").get<std::vector<int>>();
      if (r.size() != 2) throw DataError(where + ": skills_per_task must be [lo, hi]");
      p.skills_per_task = {r[0], r[1]};
    }
    p.area_side = j.value("area_side", p.area_side);
    p.budget_sd = j.value("budget_sd", p.budget_sd);
    p.price_sd = j.value("price_sd", p.price_sd);
    p.seed = j.value("seed", p.seed);
  } catch (const json::exception& e) {
    throw DataError(where + ": " + e.what());
  }
  check_params(p);
  return p;
}

}  // namespace

GenParams load_gen_params(const std::string& path) {
  return gen_params_from_json(parse_file(path), path);
}

ExperimentGrid load_grid(const std::string& path) {
  const json j = parse_file(path);
  ExperimentGrid grid;
  if (j.contains("base")) grid.base = gen_params_from_json(j.at("base"), path + ": base");

  const std::string factor = get<std::string>(j, "sweep_factor", path);
  if (factor == "n_tasks") grid.factor = SweepFactor::NTasks;
  else if (factor == "n_workers") grid.factor = SweepFactor::NWorkers;
  else if (factor == "gamma") grid.factor = SweepFactor::Gamma;
  else if (factor == "mean_budget") grid.factor = SweepFactor::MeanBudget;
  else if (factor == "mean_price") grid.factor = SweepFactor::MeanPrice;
  else if (factor == "n_skills") grid.factor = SweepFactor::NSkills;
  else {
    throw UsageError(path + ": unknown sweep_factor '" + factor +
                     "' (expected n_tasks, n_workers, gamma, mean_budget, mean_price or n_skills)");
  }

  grid.values = get<std::vector<double>>(j, "sweep_values", path);
  if (grid.values.empty()) throw UsageError(path + ": sweep_values must be non-empty");

  if (j.contains("algorithms")) {
    grid.algorithms.clear();
    for (const auto& aj : j.at("algorithms")) {
      const std::string name = aj.get<std::string>();
      if (name == "tba") grid.algorithms.push_back(Algo::Tba);
      else if (name == "aba") grid.algorithms.push_back(Algo::Aba);
      else if (name == "random") grid.algorithms.push_back(Algo::Random);
      else throw UsageError(path + ": unknown algorithm '" + name + "'");
    }
    if (grid.algorithms.empty()) throw UsageError(path + ": algorithms must be non-empty");
  }

  grid.repetitions = j.value("repetitions", grid.repetitions);
  if (grid.repetitions < 1) throw UsageError(path + ": repetitions must be >= 1");
  grid.seed = j.value("seed", grid.seed);
  grid.timing = j.value("timing", grid.timing);
  return grid;
}

}  // namespace sata
