#pragma once

#include <string>

#include "sata/bench.hpp"
#include "sata/datagen.hpp"
#include "sata/model.hpp"

namespace sata {

// Instance JSON: {"gamma", "skills", "workers": [{"id","x","y","skills":
// [{"skill","fee"}]}], "tasks": [{"id","x","y","required":[...],"budget"}],
// optional "distances": row-major |W|x|T|}. Loaders throw DataError with the
// offending location; saved files round-trip structurally.
Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

// Assignment JSON mirrors Contract fields plus the completed task list.
Assignment load_assignment(const std::string& path);
void save_assignment(const Assignment& asg, const std::string& path);

// GenParams / ExperimentGrid JSON; missing fields fall back to defaults.
GenParams load_gen_params(const std::string& path);
ExperimentGrid load_grid(const std::string& path);

std::string instance_to_json(const Instance& inst);
std::string assignment_to_json(const Assignment& asg);

}  // namespace sata
