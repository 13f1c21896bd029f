#pragma once

#include <string>

#include "chordcycle/cycles.hpp"
#include "chordcycle/generators.hpp"

namespace chordcycle {

// JSON document formats for generator specs, used by the CLI --spec files and
// the report/witness output. Parse errors throw std::invalid_argument.

std::string to_json_string(const BlowupCycleSpec& spec);
BlowupCycleSpec blowup_spec_from_json(const std::string& text);

std::string to_json_string(const FrameworkSpec& spec);
FrameworkSpec framework_spec_from_json(const std::string& text);

std::string to_json_string(const CycleWitness& w);

}  // namespace chordcycle
