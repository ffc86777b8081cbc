#include <doctest.h>

#include <cstdio>
#include <map>

#include "sata/bench.hpp"
#include "sata/errors.hpp"

using namespace sata;

namespace {

ExperimentGrid small_grid() {
  ExperimentGrid grid;
  grid.base.n_tasks = 10;
  grid.base.n_workers = 60;
  grid.factor = SweepFactor::NTasks;
  grid.values = {5, 10, 15};
  grid.algorithms = {Algo::Tba, Algo::Aba, Algo::Random};
  grid.repetitions = 2;
  grid.seed = 17;
  return grid;
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/sata_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("run_experiment emits one record per value x repetition x algorithm") {
  const auto records = run_experiment(small_grid());
  CHECK(records.size() == 3 * 2 * 3);

  for (const auto& r : records) {
    CHECK(r.utility >= 0.0);
    CHECK(r.runtime_seconds == 0.0);  // timing off by default
    CHECK(r.completed_tasks <= static_cast<int>(r.value));
    CHECK(r.memory_estimate_bytes > 0);
    CHECK(r.factor == "n_tasks");
  }
}

TEST_CASE("records are deterministic and cells are paired across algorithms") {
  const auto a = run_experiment(small_grid());
  const auto b = run_experiment(small_grid());
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].algorithm == b[i].algorithm);
    CHECK(a[i].value == b[i].value);
    CHECK(a[i].repetition == b[i].repetition);
    CHECK(a[i].utility == b[i].utility);
    CHECK(a[i].seed_used == b[i].seed_used);
  }

  // all algorithms of one cell saw the same derived seed
  std::map<std::pair<double, int>, std::uint64_t> cell_seed;
  for (const auto& r : a) {
    const auto key = std::make_pair(r.value, r.repetition);
    if (cell_seed.count(key)) {
      CHECK(cell_seed[key] == r.seed_used);
    } else {
      cell_seed[key] = r.seed_used;
    }
  }
  // distinct cells use distinct seeds
  CHECK(cell_seed.size() == 6);
}

TEST_CASE("greedy beats the random baseline on the small default grid point") {
  ExperimentGrid grid;
  grid.base.n_tasks = 30;
  grid.base.n_workers = 200;
  grid.factor = SweepFactor::NTasks;
  grid.values = {30};
  grid.repetitions = 10;
  grid.seed = 5;
  const auto records = run_experiment(grid);

  double tba = 0, rnd = 0;
  for (const auto& r : records) {
    if (r.algorithm == "tba") tba += r.utility;
    if (r.algorithm == "random") rnd += r.utility;
  }
  CHECK(tba > rnd);
}

TEST_CASE("invalid grids are refused") {
  ExperimentGrid grid = small_grid();
  SUBCASE("no sweep values") { grid.values.clear(); }
  SUBCASE("no repetitions") { grid.repetitions = 0; }
  SUBCASE("no algorithms") { grid.algorithms.clear(); }
  CHECK_THROWS_AS(run_experiment(grid), UsageError);
}

TEST_CASE("metrics CSV: header, row counts, round-trip") {
  TempFile f("metrics.csv");

  SUBCASE("no records -> header only") {
    write_metrics_csv({}, f.path);
    std::ifstream in(f.path);
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 1);
    CHECK(read_metrics_csv(f.path).empty());
  }

  SUBCASE("ten records -> eleven lines, parse reproduces them") {
    ExperimentGrid grid = small_grid();
    grid.values = {5, 10, 15, 20, 25};
    grid.algorithms = {Algo::Tba};
    const auto records = run_experiment(grid);
    REQUIRE(records.size() == 10);
    write_metrics_csv(records, f.path);

    std::ifstream in(f.path);
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 11);

    const auto back = read_metrics_csv(f.path);
    REQUIRE(back.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
      CHECK(back[i].algorithm == records[i].algorithm);
      CHECK(back[i].factor == records[i].factor);
      CHECK(back[i].value == records[i].value);
      CHECK(back[i].repetition == records[i].repetition);
      CHECK(back[i].utility == records[i].utility);  // %.17e round-trips exactly
      CHECK(back[i].runtime_seconds == records[i].runtime_seconds);
      CHECK(back[i].memory_estimate_bytes == records[i].memory_estimate_bytes);
      CHECK(back[i].completed_tasks == records[i].completed_tasks);
      CHECK(back[i].seed_used == records[i].seed_used);
    }
  }
}

TEST_CASE("every sweep factor applies to the right knob") {
  for (SweepFactor f : {SweepFactor::NTasks, SweepFactor::NWorkers, SweepFactor::Gamma,
                        SweepFactor::MeanBudget, SweepFactor::MeanPrice, SweepFactor::NSkills}) {
    ExperimentGrid grid;
    grid.base.n_tasks = 5;
    grid.base.n_workers = 20;
    grid.base.n_skills = 10;
    grid.factor = f;
    grid.values = {f == SweepFactor::Gamma ? 0.3 : 8.0};
    grid.algorithms = {Algo::Tba};
    grid.repetitions = 1;
    const auto records = run_experiment(grid);
    REQUIRE(records.size() == 1);
    CHECK(records[0].factor == factor_name(f));
  }
}
