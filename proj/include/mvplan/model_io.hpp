#pragma once

#include "mvplan/mission.hpp"
#include "mvplan/transition_system.hpp"

#include <string>
#include <string_view>

namespace mvplan {

// Line-oriented model format:
//   ap: p q r
//   states: s0 s1 s2
//   init: s0
//   label s0: p q
//   trans s0 -> s1
// `#` starts a comment. Unlabelled states have the empty label.
TransitionSystem parse_model(std::string_view text);
std::string serialize_model(const TransitionSystem& ts);

// One objective per line: `reward <non-negative int> : <LTL formula>`.
MissionSpec parse_spec(std::string_view text);
std::string serialize_spec(const MissionSpec& spec);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

} // namespace mvplan
