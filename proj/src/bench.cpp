#include "sata/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "sata/errors.hpp"
#include "sata/oracle.hpp"
#include "sata/rng.hpp"
#include "sata/solver.hpp"

namespace sata {

const char* algo_name(Algo a) {
  switch (a) {
    case Algo::Tba: return "tba";
    case Algo::Aba: return "aba";
    case Algo::Random: return "random";
  }
  return "?";
}

const char* factor_name(SweepFactor f) {
  switch (f) {
    case SweepFactor::NTasks: return "n_tasks";
    case SweepFactor::NWorkers: return "n_workers";
    case SweepFactor::Gamma: return "gamma";
    case SweepFactor::MeanBudget: return "mean_budget";
    case SweepFactor::MeanPrice: return "mean_price";
    case SweepFactor::NSkills: return "n_skills";
  }
  return "?";
}

std::uint64_t derive_cell_seed(std::uint64_t grid_seed, std::size_t value_index,
                               int repetition) {
  std::uint64_t s = rng::splitmix64(grid_seed);
  s = rng::splitmix64(s ^ (0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(value_index) + 1)));
  s = rng::splitmix64(s ^ (0xC2B2AE3D27D4EB4FULL * (static_cast<std::uint64_t>(repetition) + 1)));
  return s;
}

namespace {

GenParams apply_factor(GenParams base, SweepFactor factor, double value) {
  switch (factor) {
    case SweepFactor::NTasks: base.n_tasks = static_cast<int>(std::llround(value)); break;
    case SweepFactor::NWorkers: base.n_workers = static_cast<int>(std::llround(value)); break;
    case SweepFactor::Gamma: base.gamma = value; break;
    case SweepFactor::MeanBudget: base.mean_budget = value; break;
    case SweepFactor::MeanPrice: base.mean_price = value; break;
    case SweepFactor::NSkills: base.n_skills = static_cast<int>(std::llround(value)); break;
  }
  return base;
}

int thread_override() {
  const char* env = std::getenv("SATA_THREADS");
  if (!env) return 1;
  const int n = std::atoi(env);
  return n >= 1 ? n : 1;
}

std::vector<MetricsRecord> run_cell(const ExperimentGrid& grid, std::size_t value_index,
                                    int repetition) {
  const double value = grid.values[value_index];
  const std::uint64_t cell_seed = derive_cell_seed(grid.seed, value_index, repetition);

  GenParams params = apply_factor(grid.base, grid.factor, value);
  params.seed = cell_seed;
  const Instance inst = generate_instance(params);
  const std::size_t inst_bytes = instance_bytes(inst);

  std::vector<MetricsRecord> records;
  for (Algo algo : grid.algorithms) {
    SolveStats stats;
    Assignment asg;
    const auto start = std::chrono::steady_clock::now();
    switch (algo) {
      case Algo::Tba: asg = solve_tba(inst, &stats); break;
      case Algo::Aba: asg = solve_aba(inst, &stats); break;
      case Algo::Random: asg = solve_random(inst, cell_seed, &stats); break;
    }
    const auto stop = std::chrono::steady_clock::now();

    const ValidationReport report = validate(inst, asg);
    if (!report.ok()) {
      throw std::logic_error(std::string("run_experiment: ") + algo_name(algo) +
                             " produced an invalid assignment (solver bug):\n" +
                             report.to_string());
    }

    MetricsRecord rec;
    rec.algorithm = algo_name(algo);
    rec.factor = factor_name(grid.factor);
    rec.value = value;
    rec.repetition = repetition;
    rec.utility = total_utility(inst, asg);
    rec.runtime_seconds =
        grid.timing ? std::chrono::duration<double>(stop - start).count() : 0.0;
    rec.memory_estimate_bytes = stats.peak_bytes + inst_bytes;
    rec.completed_tasks = static_cast<int>(asg.completed.size());
    rec.seed_used = cell_seed;
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace

std::vector<MetricsRecord> run_experiment(const ExperimentGrid& grid) {
  if (grid.values.empty()) throw UsageError("experiment grid: sweep_values must be non-empty");
  if (grid.repetitions < 1) throw UsageError("experiment grid: repetitions must be >= 1");
  if (grid.algorithms.empty()) throw UsageError("experiment grid: algorithms must be non-empty");
  check_params(grid.base);

  const std::size_t n_cells = grid.values.size() * static_cast<std::size_t>(grid.repetitions);
  std::vector<std::vector<MetricsRecord>> slots(n_cells);

  const int n_threads = std::min<int>(thread_override(), static_cast<int>(n_cells));
  if (n_threads <= 1) {
    for (std::size_t cell = 0; cell < n_cells; ++cell) {
      slots[cell] = run_cell(grid, cell / grid.repetitions,
                             static_cast<int>(cell % grid.repetitions));
    }
  } else {
    // static partition; slots keep the output order deterministic
    std::vector<std::thread> threads;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (int ti = 0; ti < n_threads; ++ti) {
      threads.emplace_back([&, ti] {
        try {
          for (std::size_t cell = ti; cell < n_cells; cell += n_threads) {
            slots[cell] = run_cell(grid, cell / grid.repetitions,
                                   static_cast<int>(cell % grid.repetitions));
          }
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (auto& th : threads) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  std::vector<MetricsRecord> records;
  for (auto& slot : slots) {
    for (auto& rec : slot) records.push_back(std::move(rec));
  }
  return records;
}

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17e", v);
  return buf;
}

}  // namespace

void write_metrics_csv(const std::vector<MetricsRecord>& records, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path);
  out << "algorithm,factor,value,repetition,utility,runtime_seconds,"
         "memory_estimate_bytes,completed_tasks,seed_used\n";
  for (const MetricsRecord& r : records) {
    out << r.algorithm << ',' << r.factor << ',' << fmt_double(r.value) << ',' << r.repetition
        << ',' << fmt_double(r.utility) << ',' << fmt_double(r.runtime_seconds) << ','
        << r.memory_estimate_bytes << ',' << r.completed_tasks << ',' << r.seed_used << '\n';
  }
  if (!out) throw DataError("write failed for " + path);
}

std::vector<MetricsRecord> read_metrics_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw DataError(path + ": empty file");

  std::vector<MetricsRecord> records;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 9) {
      throw DataError(path + ":" + std::to_string(lineno) + ": expected 9 fields, got " +
                      std::to_string(fields.size()));
    }
    try {
      MetricsRecord r;
      r.algorithm = fields[0];
      r.factor = fields[1];
      r.value = std::stod(fields[2]);
      r.repetition = std::stoi(fields[3]);
      r.utility = std::stod(fields[4]);
      r.runtime_seconds = std::stod(fields[5]);
      r.memory_estimate_bytes = std::stoull(fields[6]);
      r.completed_tasks = std::stoi(fields[7]);
      r.seed_used = std::stoull(fields[8]);
      records.push_back(std::move(r));
    } catch (const std::exception& e) {
      throw DataError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return records;
}

}  // namespace sata
