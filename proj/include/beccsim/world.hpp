#pragma once

#include "beccsim/rng.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace beccsim {

struct Position {
    double x = 0.0;
    double y = 0.0;
};

/// Euclidean distance. Positions are simulator bookkeeping only: they feed
/// the energy model (and stand in for received signal strength when members
/// pick the nearest head), never any protocol decision.
double distance(const Position& a, const Position& b);

/// rounds_since_ch value meaning "never served as a head". Large enough to
/// exceed any sane rotation epoch while leaving room for per-round
/// increments over the longest possible run.
inline constexpr int kNeverClusterHead = 1 << 20;

struct Node {
    int id = 0;
    Position pos;
    double e_init = 0.0;              ///< J at deployment
    double e_res = 0.0;               ///< residual J; 0 exactly when dead
    bool alive = true;
    bool advanced = false;            ///< two-level class tag
    int rounds_since_ch = kNeverClusterHead;
    double q_pol_carry = 1.0;         ///< polarized factor carried into the next round (BECC)
};

/// Two-level heterogeneity: a `lambda` fraction of advanced nodes carries
/// (1 + alpha) times the normal initial energy e0.
struct TwoLevelSpec {
    double e0 = 1.0;
    double lambda = 0.2;
    double alpha = 3.0;
};

/// Multi-level heterogeneity: initial energies drawn i.i.d. uniform from
/// [e_min, e_max]; if total_target is set, draws are rescaled so the
/// network total is exactly that value.
struct MultiLevelSpec {
    double e_min = 1.0;
    double e_max = 5.0;
    std::optional<double> total_target;
};

using HeterogeneitySpec = std::variant<TwoLevelSpec, MultiLevelSpec>;

struct World {
    double side = 500.0;
    Position sink{250.0, 250.0};
    std::vector<Node> nodes;

    int alive_count() const;
    double total_residual() const;       ///< sum of e_res over alive nodes
    double total_initial_alive() const;  ///< sum of e_init over alive nodes
};

/// n positions with coordinates i.i.d. uniform on [0, side], drawn x then y
/// in ascending node order. Deterministic for a fixed source state.
std::vector<Position> deploy_uniform(int n, double side, RandomSource& rng);

/// Sink sits at the field center.
Position sink_position(double side);

/// Marks round(lambda*N) nodes, chosen uniformly without replacement, as
/// advanced with e_init = (1+alpha)*e0; the rest get e0. Rejects specs whose
/// advanced count rounds to 0 or N (the network would be homogeneous).
void assign_two_level(std::vector<Node>& nodes, const TwoLevelSpec& spec, RandomSource& rng);

/// Draws e_init i.i.d. uniform on [e_min, e_max] in ascending node order,
/// then rescales multiplicatively to hit total_target when one is set.
/// Rescaled values may drift slightly outside the interval; accepted.
void assign_multi_level(std::vector<Node>& nodes, const MultiLevelSpec& spec, RandomSource& rng);

} // namespace beccsim
