#include "beccsim/protocols.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace beccsim {

std::string to_string(Protocol p)
{
    switch (p) {
    case Protocol::Leach:
        return "LEACH";
    case Protocol::LeachE:
        return "LEACH-E";
    case Protocol::Sep:
        return "SEP";
    case Protocol::SepM:
        return "SEP-M";
    case Protocol::Becc:
        return "BECC";
    }
    return "?";
}

std::optional<Protocol> protocol_from_string(std::string_view name)
{
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "leach") {
        return Protocol::Leach;
    }
    if (lower == "leach-e" || lower == "leach_e" || lower == "leache") {
        return Protocol::LeachE;
    }
    if (lower == "sep") {
        return Protocol::Sep;
    }
    if (lower == "sep-m" || lower == "sep_m" || lower == "sepm") {
        return Protocol::SepM;
    }
    if (lower == "becc") {
        return Protocol::Becc;
    }
    return std::nullopt;
}

int rotation_epoch(double p)
{
    if (!(p > 0.0)) {
        throw std::invalid_argument("rotation_epoch: probability must be positive");
    }
    if (p >= 1.0) {
        return 1;
    }
    return static_cast<int>(std::ceil(1.0 / p));
}

double rotation_threshold(double p, int round, int rounds_since_ch)
{
    if (p >= 1.0) {
        return 1.0;
    }
    const int epoch = rotation_epoch(p);
    if (rounds_since_ch < epoch) {
        return 0.0; // served as head too recently, outside the eligible set
    }
    const double denom = 1.0 - p * static_cast<double>(round % epoch);
    const double t = p / denom;
    return std::clamp(t, 0.0, 1.0);
}

double leach_threshold(const ElectionContext& ctx)
{
    return rotation_threshold(ctx.p_opt, ctx.round, ctx.node.rounds_since_ch);
}

std::vector<double> becc_relative_factors(const std::vector<double>& energies)
{
    if (energies.empty()) {
        throw std::invalid_argument("becc_relative_factors: empty cluster");
    }
    double cluster_total = 0.0;
    for (double e : energies) {
        cluster_total += e;
    }
    if (!(cluster_total > 0.0)) {
        throw std::invalid_argument("becc_relative_factors: cluster energy must be positive");
    }
    const double n = static_cast<double>(energies.size());
    std::vector<double> q_rel(energies.size());
    for (std::size_t i = 0; i < energies.size(); ++i) {
        q_rel[i] = energies[i] / cluster_total * n;
    }
    return q_rel;
}

std::vector<double> becc_polarized_factors(const std::vector<double>& energies)
{
    const std::vector<double> q_rel = becc_relative_factors(energies);

    // Mass below the cluster average moves to the members at or above it,
    // pro rata to their own q_rel. Ties at exactly 1 count as above.
    double below_sum = 0.0;
    double above_sum = 0.0;
    for (double q : q_rel) {
        if (q >= 1.0) {
            above_sum += q;
        } else {
            below_sum += q;
        }
    }
    // above_sum >= 1 always: the q_rel values average to 1, so the largest
    // one is at least 1. No division-by-zero branch exists.
    const double redistribution = below_sum / above_sum;

    std::vector<double> q_pol(q_rel.size());
    for (std::size_t i = 0; i < q_rel.size(); ++i) {
        q_pol[i] = q_rel[i] >= 1.0 ? q_rel[i] * (1.0 + redistribution) : 0.0;
    }
    return q_pol;
}

double becc_threshold(double q_pol, double p_opt)
{
    if (q_pol < 0.0) {
        throw std::invalid_argument("becc_threshold: polarized factor must be non-negative");
    }
    return std::min(1.0, p_opt * q_pol);
}

double leach_e_threshold(const ElectionContext& ctx)
{
    if (!ctx.global) {
        throw std::invalid_argument("leach_e_threshold: global view required");
    }
    if (!(ctx.global->total_residual > 0.0)) {
        return 0.0;
    }
    const double weighted =
        ctx.p_opt * static_cast<double>(ctx.global->n_alive) * ctx.node.e_res / ctx.global->total_residual;
    return std::min(1.0, weighted);
}

SepClassProbabilities sep_class_probabilities(double p_opt, double lambda, double alpha)
{
    const double denom = 1.0 + lambda * alpha;
    return SepClassProbabilities{p_opt / denom, p_opt * (1.0 + alpha) / denom};
}

double sep_threshold(const ElectionContext& ctx, double lambda, double alpha)
{
    const SepClassProbabilities cls = sep_class_probabilities(ctx.p_opt, lambda, alpha);
    const double p = ctx.node.advanced ? cls.advanced : cls.normal;
    return rotation_threshold(p, ctx.round, ctx.node.rounds_since_ch);
}

double sep_m_threshold(const ElectionContext& ctx)
{
    if (!ctx.global) {
        throw std::invalid_argument("sep_m_threshold: global view required");
    }
    if (!(ctx.global->total_initial > 0.0)) {
        return 0.0;
    }
    const double weighted =
        ctx.p_opt * static_cast<double>(ctx.global->n_alive) * ctx.node.e_init / ctx.global->total_initial;
    const double p = std::min(1.0, weighted);
    return rotation_threshold(p, ctx.round, ctx.node.rounds_since_ch);
}

bool elect(double threshold, RandomSource& rng)
{
    if (threshold < 0.0 || threshold > 1.0) {
        throw std::invalid_argument("elect: threshold must lie in [0, 1]");
    }
    return rng.bernoulli(threshold);
}

} // namespace beccsim
