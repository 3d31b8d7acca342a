#pragma once

#include "mvplan/mission.hpp"
#include "mvplan/transition_system.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mvplan {

using Cell = std::pair<int, int>; // (row, column)

struct RescueVehicle {
    std::string name;
    Cell start;
    bool can_pickup = false;
    std::vector<std::string> engages;       // target removed, vehicle survives
    std::vector<std::string> sacrifices;    // target removed, vehicle lost
    std::vector<std::string> vulnerable_to; // lost inside the target's range
};

struct RescueTarget {
    std::string name;
    Cell cell;
    int range = 1; // Chebyshev radius of the firing range
};

struct RescueFriendly {
    std::string name;
    Cell cell;
};

struct RescueConfig {
    int rows = 4;
    int columns = 4;
    Cell base{0, 0};
    std::vector<RescueVehicle> vehicles;
    std::vector<RescueTarget> targets;
    std::vector<RescueFriendly> friendlies;
    // Pairs (first, later): `later` may only be picked up once `first` no
    // longer will be.
    std::vector<std::pair<std::string, std::string>> order;
    Reward pickup_reward = 10;
    Reward order_reward = 10;
    Reward survival_reward = 1;
    std::size_t max_states = 200000;
};

struct RescueMission {
    TransitionSystem ts;
    MissionSpec spec;
};

// JSON scenario description; see the README for the schema. Throws
// ValidationError on malformed or inconsistent configurations.
RescueConfig parse_rescue_config(std::string_view json_text);

// 4x4 grid: a UAV and a ground vehicle start at the base in a corner; the
// only friendly unit sits next to a target that the UAV can remove only by
// sacrificing itself and that is lethal to the ground vehicle.
RescueConfig default_rescue_config();

// Joint-state transition system and mission. Per step every active vehicle
// moves to a 4-neighbour or stays; a vehicle entering an active target's
// cell engages it (or is sacrificed to it), then vehicles inside the range
// of an active target they are vulnerable to are lost. Losses, engagements
// and pickups are irreversible. Propositions: p<V>_<F> (picker at a
// friendly's cell), p<V>_Base, a<V> (active); labels only hold for active
// vehicles. Throws ValidationError on bad configurations and LimitError past
// config.max_states.
RescueMission generate_rescue_mission(const RescueConfig& config);

} // namespace mvplan
