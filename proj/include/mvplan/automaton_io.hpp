#pragma once

#include "mvplan/automaton.hpp"
#include "mvplan/product.hpp"
#include "mvplan/weighted.hpp"

#include <string>

namespace mvplan {

// Line-per-record dumps in state-id order, stable across runs:
//   states <n>
//   initial <q>
//   accept <set-index> : <states...>      (generalized)
//   accepting : <states...>               (Buechi / weighted / product)
//   edge <from> -> <to> : <guard> [+w]
std::string dump(const GeneralizedBuchiAutomaton& a);
std::string dump(const BuchiAutomaton& a);
std::string dump(const WeightedBuchiAutomaton& a);
std::string dump(const WeightedProductAutomaton& p, const TransitionSystem& ts,
                 const WeightedBuchiAutomaton& wba);

std::string to_dot(const GeneralizedBuchiAutomaton& a);
std::string to_dot(const BuchiAutomaton& a);
std::string to_dot(const WeightedBuchiAutomaton& a);
std::string to_dot(const WeightedProductAutomaton& p, const TransitionSystem& ts,
                   const WeightedBuchiAutomaton& wba);

} // namespace mvplan
