#pragma once

#include "beccsim/rng.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace beccsim {

/// The five election schemes. They share everything downstream of election
/// (clustering, radio accounting, death rule); only the per-node threshold
/// rule differs, which is what makes cross-protocol curves comparable.
enum class Protocol {
    Leach,  ///< rotation threshold, energy-blind
    LeachE, ///< residual energy weighted against network total
    Sep,    ///< two-level class-weighted rotation
    SepM,   ///< initial-energy weighted rotation
    Becc,   ///< polarized-energy-factor threshold
};

std::string to_string(Protocol p);
std::optional<Protocol> protocol_from_string(std::string_view name);

/// Per-node election inputs for one round.
struct NodeView {
    double e_res = 0.0;
    double e_init = 0.0;
    int rounds_since_ch = 0;
    double q_pol_carry = 1.0;
    bool advanced = false;
};

/// Network-wide election inputs. Only the protocols with a documented
/// non-local dependency get this: LEACH-E (residual total) and SEP-M
/// (initial-energy total). Totals cover alive nodes.
struct GlobalView {
    int n_alive = 0;
    double total_residual = 0.0;
    double total_initial = 0.0;
};

struct ElectionContext {
    int round = 0;
    double p_opt = 0.05;
    NodeView node;
    std::optional<GlobalView> global;
};

/// Rotation epoch length ceil(1/p).
int rotation_epoch(double p);

/// The classic rotation threshold: p / (1 - p * (round mod ceil(1/p))) for
/// nodes that have not served as head within the last epoch, else 0.
/// Clamped to [0, 1].
double rotation_threshold(double p, int round, int rounds_since_ch);

double leach_threshold(const ElectionContext& ctx);

/// Relative energy factors of one cluster: q_rel_i = e_i / e_cluster * n.
/// The member list includes the head. Rejects empty clusters and
/// non-positive cluster energy.
std::vector<double> becc_relative_factors(const std::vector<double>& energies);

/// Polarized energy factors: below-average members drop to exactly 0 and
/// their relative-factor mass is redistributed to the at-or-above-average
/// members in proportion to their own q_rel. Sum is preserved: the factors
/// of a cluster of n members always sum to n.
std::vector<double> becc_polarized_factors(const std::vector<double>& energies);

/// BECC election threshold min(1, p_opt * q_pol).
double becc_threshold(double q_pol, double p_opt);

/// min(1, p_opt * n_alive * e_res / total_residual). Requires ctx.global.
double leach_e_threshold(const ElectionContext& ctx);

/// Class probabilities used by SEP: p_normal = p/(1+lambda*alpha),
/// p_advanced = p*(1+alpha)/(1+lambda*alpha).
struct SepClassProbabilities {
    double normal;
    double advanced;
};
SepClassProbabilities sep_class_probabilities(double p_opt, double lambda, double alpha);

/// SEP threshold: the node's class probability fed through the rotation
/// pattern with a per-class epoch.
double sep_threshold(const ElectionContext& ctx, double lambda, double alpha);

/// SEP-M threshold: min(1, p_opt * n_alive * e_init / total_initial) fed
/// through the rotation pattern with that probability's own epoch.
/// Requires ctx.global.
double sep_m_threshold(const ElectionContext& ctx);

/// One Bernoulli draw at the given threshold.
bool elect(double threshold, RandomSource& rng);

} // namespace beccsim
