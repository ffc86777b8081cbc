// Command-line front end: solve / generate / bench / validate.
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sata/bench.hpp"
#include "sata/datagen.hpp"
#include "sata/errors.hpp"
#include "sata/io.hpp"
#include "sata/model.hpp"
#include "sata/oracle.hpp"
#include "sata/solver.hpp"

namespace {

int run_solve(const std::string& instance_path, const std::string& algorithm,
              std::uint64_t seed, const std::string& out_path, int max_workers,
              int max_tasks) {
  const sata::Instance inst = sata::load_instance(instance_path);

  sata::Assignment asg;
  if (algorithm == "tba") {
    asg = sata::solve_tba(inst);
  } else if (algorithm == "aba") {
    asg = sata::solve_aba(inst);
  } else if (algorithm == "random") {
    asg = sata::solve_random(inst, seed);
  } else if (algorithm == "exact") {
    asg = sata::exact_optimal(inst, sata::MappingBound{max_workers, max_tasks});
  } else {
    throw sata::UsageError("unknown algorithm '" + algorithm +
                           "' (expected tba, aba, random or exact)");
  }

  char utility[64];
  std::snprintf(utility, sizeof(utility), "%.17g", sata::total_utility(inst, asg));
  std::cout << "total utility: " << utility << "\n"
            << asg.completed.size() << " tasks completed\n";
  if (!out_path.empty()) sata::save_assignment(asg, out_path);
  return 0;
}

int run_generate(const sata::GenParams& params, const std::string& out_path) {
  const sata::Instance inst = sata::generate_instance(params);
  sata::save_instance(inst, out_path);
  std::cout << "wrote " << inst.n_workers() << " workers, " << inst.n_tasks() << " tasks to "
            << out_path << "\n";
  return 0;
}

int run_bench(const std::string& grid_path, const std::string& out_path, bool timing) {
  sata::ExperimentGrid grid = sata::load_grid(grid_path);
  if (timing) grid.timing = true;
  const auto records = sata::run_experiment(grid);
  sata::write_metrics_csv(records, out_path);
  std::cout << "wrote " << records.size() << " records to " << out_path << "\n";
  return 0;
}

int run_validate(const std::string& instance_path, const std::string& assignment_path) {
  const sata::Instance inst = sata::load_instance(instance_path);
  const sata::Assignment asg = sata::load_assignment(assignment_path);
  const sata::ValidationReport report = sata::validate(inst, asg);
  if (report.ok()) {
    std::cout << "assignment valid\n";
    return 0;
  }
  std::cout << report.violations.size() << " violation(s):\n" << report.to_string();
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Specialty-aware task assignment: heuristics, exact oracle and benchmarks"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "Solve an instance file and print utility");
  std::string instance_path, algorithm = "tba", out_path;
  std::uint64_t seed = 0;
  int max_workers = 8, max_tasks = 3;
  solve->add_option("--instance", instance_path, "Instance JSON file")->required();
  solve->add_option("--algorithm", algorithm, "tba|aba|random|exact (default tba)");
  solve->add_option("--seed", seed, "Seed for the random baseline");
  solve->add_option("--out", out_path, "Write the assignment JSON here");
  solve->add_option("--max-workers", max_workers, "Exact oracle worker bound (default 8)");
  solve->add_option("--max-tasks", max_tasks, "Exact oracle task bound (default 3)");

  // generate
  auto* gen = app.add_subcommand("generate", "Generate a synthetic instance");
  std::string params_path, gen_out;
  sata::GenParams flag_params;
  std::pair<int, int> spw{1, 5}, spt{1, 5};
  gen->add_option("--params", params_path, "GenParams JSON file (flags override it)");
  gen->add_option("--n-tasks", flag_params.n_tasks, "Number of tasks");
  gen->add_option("--n-workers", flag_params.n_workers, "Number of workers");
  gen->add_option("--gamma", flag_params.gamma, "Unit transport fee");
  gen->add_option("--mean-budget", flag_params.mean_budget, "Mean task budget");
  gen->add_option("--mean-price", flag_params.mean_price, "Mean per-skill price");
  gen->add_option("--n-skills", flag_params.n_skills, "Skill universe size");
  gen->add_option("--skills-per-worker", spw, "Range lo hi");
  gen->add_option("--skills-per-task", spt, "Range lo hi");
  gen->add_option("--area-side", flag_params.area_side, "Square area side length");
  gen->add_option("--budget-sd", flag_params.budget_sd, "Budget std dev (default mean/5)");
  gen->add_option("--price-sd", flag_params.price_sd, "Price std dev (default mean/5)");
  gen->add_option("--seed", flag_params.seed, "Generator seed");
  gen->add_option("--out", gen_out, "Output instance JSON path")->required();

  // bench
  auto* bench = app.add_subcommand("bench", "Run an experiment grid, write metrics CSV");
  std::string grid_path, csv_path;
  bool timing = false;
  bench->add_option("--grid", grid_path, "ExperimentGrid JSON file")->required();
  bench->add_option("--out", csv_path, "Output CSV path")->required();
  bench->add_flag("--timing", timing,
                  "Record wall-clock runtimes (makes the CSV non-reproducible)");

  // validate
  auto* val = app.add_subcommand("validate", "Check an assignment against an instance");
  std::string val_instance, val_assignment;
  val->add_option("--instance", val_instance, "Instance JSON file")->required();
  val->add_option("--assignment", val_assignment, "Assignment JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  try {
    if (solve->parsed()) {
      return run_solve(instance_path, algorithm, seed, out_path, max_workers, max_tasks);
    }
    if (gen->parsed()) {
      sata::GenParams params = params_path.empty() ? sata::GenParams{} : sata::load_gen_params(params_path);
      // flags given on the command line override the file
      if (gen->count("--n-tasks")) params.n_tasks = flag_params.n_tasks;
      if (gen->count("--n-workers")) params.n_workers = flag_params.n_workers;
      if (gen->count("--gamma")) params.gamma = flag_params.gamma;
      if (gen->count("--mean-budget")) params.mean_budget = flag_params.mean_budget;
      if (gen->count("--mean-price")) params.mean_price = flag_params.mean_price;
      if (gen->count("--n-skills")) params.n_skills = flag_params.n_skills;
      if (gen->count("--skills-per-worker")) params.skills_per_worker = {spw.first, spw.second};
      if (gen->count("--skills-per-task")) params.skills_per_task = {spt.first, spt.second};
      if (gen->count("--area-side")) params.area_side = flag_params.area_side;
      if (gen->count("--budget-sd")) params.budget_sd = flag_params.budget_sd;
      if (gen->count("--price-sd")) params.price_sd = flag_params.price_sd;
      if (gen->count("--seed")) params.seed = flag_params.seed;
      sata::check_params(params);
      return run_generate(params, gen_out);
    }
    if (bench->parsed()) return run_bench(grid_path, csv_path, timing);
    if (val->parsed()) return run_validate(val_instance, val_assignment);
  } catch (const sata::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const sata::DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
