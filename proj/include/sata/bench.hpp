#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sata/datagen.hpp"
#include "sata/model.hpp"

namespace sata {

enum class Algo { Tba, Aba, Random };

const char* algo_name(Algo a);

enum class SweepFactor { NTasks, NWorkers, Gamma, MeanBudget, MeanPrice, NSkills };

const char* factor_name(SweepFactor f);

// One-factor-at-a-time sweep: for every sweep value x repetition, generate
// one instance (seed derived from `seed`, the value index and the repetition
// index) and run every requested algorithm on that same instance, so
// utility comparisons are paired.
struct ExperimentGrid {
  GenParams base;
  SweepFactor factor = SweepFactor::NTasks;
  std::vector<double> values;
  std::vector<Algo> algorithms{Algo::Tba, Algo::Aba, Algo::Random};
  int repetitions = 20;
  std::uint64_t seed = 0;
  // Wall-clock timing is opt-in: with it off the runtime column is 0 and the
  // CSV is byte-stable across executions.
  bool timing = false;
};

struct MetricsRecord {
  std::string algorithm;
  std::string factor;
  double value = 0.0;
  int repetition = 0;
  Money utility = 0.0;
  double runtime_seconds = 0.0;
  std::uint64_t memory_estimate_bytes = 0;  // solver peak + instance footprint
  int completed_tasks = 0;
  std::uint64_t seed_used = 0;
};

// Throws UsageError on an invalid grid. Validates every solver output and
// throws std::logic_error on a violation (that would be an implementation
// bug, not bad data). Honors the SATA_THREADS environment variable for
// running grid cells in parallel; record order is deterministic either way.
std::vector<MetricsRecord> run_experiment(const ExperimentGrid& grid);

// Derived per-cell instance seed (exposed for tests).
std::uint64_t derive_cell_seed(std::uint64_t grid_seed, std::size_t value_index,
                               int repetition);

void write_metrics_csv(const std::vector<MetricsRecord>& records,
                       const std::string& path);
std::vector<MetricsRecord> read_metrics_csv(const std::string& path);

}  // namespace sata
