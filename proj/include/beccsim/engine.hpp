#pragma once

#include "beccsim/config.hpp"
#include "beccsim/protocols.hpp"
#include "beccsim/radio.hpp"
#include "beccsim/rng.hpp"
#include "beccsim/world.hpp"

#include <cstdint>
#include <vector>

namespace beccsim {

/// membership sentinel: node transmits straight to the sink this round
inline constexpr int kDirectToSink = -1;
/// membership sentinel: node is dead and takes no part in the round
inline constexpr int kUnassigned = -2;

struct ClusterAssignment {
    std::vector<int> heads;                        ///< elected ids, ascending
    std::vector<int> membership;                   ///< node id -> head id (heads map to themselves), kDirectToSink, or kUnassigned
    std::vector<std::vector<int>> cluster_members; ///< parallel to heads; member ids excluding the head
};

struct RoundReport {
    int round = 0;
    int head_count = 0;
    std::vector<double> energy_spent;   ///< per node id; actual decrement, so it matches the residual delta exactly
    std::vector<int> deaths;            ///< ids newly dead at end of this round
    long sink_messages = 0;             ///< heads + direct transmitters
    std::vector<double> residual_after; ///< post-round snapshot per node id
};

enum class Termination {
    BudgetExhausted,
    AllNodesDead,
};

struct SimulationTrace {
    ScenarioConfig config;       ///< resolved scenario echo
    std::uint64_t seed = 0;
    std::vector<RoundReport> rounds;
    Termination termination = Termination::BudgetExhausted;
};

/// Election inputs that stay fixed across a run.
struct ElectionPolicy {
    Protocol protocol = Protocol::Leach;
    double p_opt = 0.05;
    double sep_lambda = 0.0; ///< two-level fraction; 0 when not two-level
    double sep_alpha = 0.0;  ///< two-level boost; 0 when not two-level
};

ElectionPolicy make_policy(const ScenarioConfig& cfg);

/// Deploys positions, assigns initial energies, seeds protocol bookkeeping
/// (rounds_since_ch = never, q_pol_carry = 1). Consumes rng draws in a
/// fixed order: positions first (x, y per node, ascending id), then the
/// energy assignment.
World build_world(const ScenarioConfig& cfg, RandomSource& rng);

/// Set-up phase of one round:
///   1. every alive node draws self-election at its protocol threshold
///      (thresholds computed from pre-round state, draws in ascending id);
///   2. non-heads join the nearest head by Euclidean distance, the
///      simulator's stand-in for advertisement signal strength;
///   3. a zero-head round falls back to everyone transmitting direct;
///   4. under BECC each head computes the polarized factors of its cluster
///      (itself included) from the members' piggybacked residuals and the
///      values are carried into the next round's thresholds. Direct nodes
///      keep their previous carry.
/// Elected heads get rounds_since_ch reset to 0.
ClusterAssignment run_setup_phase(World& world, const ElectionPolicy& policy, int round,
                                  RandomSource& rng);

/// Steady-state phase: one data frame per alive node. Members pay the
/// transmit cost to their head; heads pay receive per member, aggregation
/// of the members' frames plus their own, and one transmit to the sink;
/// direct nodes pay transmit to the sink. Charges floor residual energy at
/// zero — a node short of its cost still transmits (the sink still counts
/// the message) and will be marked dead at round end. Sink energy is not
/// tracked.
RoundReport run_steady_state(World& world, const ClusterAssignment& assignment,
                             const RadioParams& radio, int round);

/// Marks nodes at zero residual energy dead, exactly once, and records the
/// new deaths in the report. Idempotent.
void apply_death(World& world, RoundReport& report);

/// Full run: build world, iterate rounds (set-up, steady-state, death
/// check, rounds_since_ch increments) until the round budget runs out or
/// every node is dead. Validates the config first. Deterministic per seed.
SimulationTrace run_simulation(const ScenarioConfig& cfg);

} // namespace beccsim
