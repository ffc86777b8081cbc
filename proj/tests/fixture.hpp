#pragma once

// Shared access to the committed party-planning example instance and the
// values pinned for it. Totals were derived by hand from the reward
// definition and cross-checked with an independent brute-force enumeration
// before being frozen here; tests assert them to 1e-9.

#include <cmath>
#include <string>

#include "sata/io.hpp"
#include "sata/model.hpp"

namespace fixture {

inline std::string data_dir() { return SATA_DATA_DIR; }

inline sata::Instance example1() {
  return sata::load_instance(data_dir() + "/example1.json");
}

// skill ids
inline constexpr sata::SkillId kMusic = 0;
inline constexpr sata::SkillId kDrinks = 1;
inline constexpr sata::SkillId kBarbecue = 2;
inline constexpr sata::SkillId kLights = 3;
inline constexpr sata::SkillId kStage = 4;

inline const double kSqrt2 = std::sqrt(2.0);
inline const double kSqrt5 = std::sqrt(5.0);
inline const double kSqrt10 = std::sqrt(10.0);
inline const double kSqrt13 = std::sqrt(13.0);

// greedy heuristic totals on the fixture
inline const double kTbaTotal = 29.5 - (kSqrt2 + kSqrt10 + kSqrt5) / 2.0;   // completes t2, t1
inline const double kAbaTotal = 30.5 - kSqrt13 / 2.0 - kSqrt5;              // completes t0, t1
inline const double kOptTotal = 31.0 - (kSqrt2 + kSqrt10 + kSqrt5) / 2.0;   // completes t0, t2

// per-task values quoted to fewer digits elsewhere
inline const double kAbaT0Utility = 16.0 - kSqrt13 / 2.0;                   // ~14.1972
inline const double kTbaT2Utility = 18.0 - (kSqrt2 + kSqrt10) / 2.0;        // ~15.7118

}  // namespace fixture
