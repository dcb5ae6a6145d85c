#include "beccsim/world.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace beccsim {

double distance(const Position& a, const Position& b)
{
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

int World::alive_count() const
{
    int n = 0;
    for (const Node& node : nodes) {
        n += node.alive ? 1 : 0;
    }
    return n;
}

double World::total_residual() const
{
    double total = 0.0;
    for (const Node& node : nodes) {
        if (node.alive) {
            total += node.e_res;
        }
    }
    return total;
}

double World::total_initial_alive() const
{
    double total = 0.0;
    for (const Node& node : nodes) {
        if (node.alive) {
            total += node.e_init;
        }
    }
    return total;
}

std::vector<Position> deploy_uniform(int n, double side, RandomSource& rng)
{
    if (n <= 0) {
        throw std::invalid_argument("deploy_uniform: node count must be positive");
    }
    if (!(side > 0.0)) {
        throw std::invalid_argument("deploy_uniform: field side must be positive");
    }
    std::vector<Position> positions(static_cast<std::size_t>(n));
    for (Position& pos : positions) {
        pos.x = rng.uniform(0.0, side);
        pos.y = rng.uniform(0.0, side);
    }
    return positions;
}

Position sink_position(double side)
{
    if (!(side > 0.0)) {
        throw std::invalid_argument("sink_position: field side must be positive");
    }
    return Position{side / 2.0, side / 2.0};
}

void assign_two_level(std::vector<Node>& nodes, const TwoLevelSpec& spec, RandomSource& rng)
{
    const int n = static_cast<int>(nodes.size());
    if (n == 0) {
        throw std::invalid_argument("assign_two_level: no nodes");
    }
    if (!(spec.e0 > 0.0)) {
        throw std::invalid_argument("assign_two_level: e0 must be positive");
    }
    if (!(spec.lambda > 0.0) || !(spec.lambda < 1.0)) {
        throw std::invalid_argument("assign_two_level: lambda must lie in (0, 1)");
    }
    if (spec.alpha < 0.0) {
        throw std::invalid_argument("assign_two_level: alpha must be non-negative");
    }
    const int advanced_count = static_cast<int>(std::lround(spec.lambda * n));
    if (advanced_count <= 0 || advanced_count >= n) {
        throw std::invalid_argument("assign_two_level: lambda*N rounds to " +
                                    std::to_string(advanced_count) +
                                    " advanced nodes, which leaves the network homogeneous");
    }

    // Partial Fisher-Yates over the id list; the first advanced_count
    // entries are the advanced subset.
    std::vector<int> ids(static_cast<std::size_t>(n));
    std::iota(ids.begin(), ids.end(), 0);
    for (int i = 0; i < advanced_count; ++i) {
        const int j = i + static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(n - i)));
        std::swap(ids[static_cast<std::size_t>(i)], ids[static_cast<std::size_t>(j)]);
    }

    for (Node& node : nodes) {
        node.advanced = false;
        node.e_init = spec.e0;
    }
    for (int i = 0; i < advanced_count; ++i) {
        Node& node = nodes[static_cast<std::size_t>(ids[static_cast<std::size_t>(i)])];
        node.advanced = true;
        node.e_init = (1.0 + spec.alpha) * spec.e0;
    }
    for (Node& node : nodes) {
        node.e_res = node.e_init;
    }
}

void assign_multi_level(std::vector<Node>& nodes, const MultiLevelSpec& spec, RandomSource& rng)
{
    const int n = static_cast<int>(nodes.size());
    if (n == 0) {
        throw std::invalid_argument("assign_multi_level: no nodes");
    }
    if (!(spec.e_min > 0.0)) {
        throw std::invalid_argument("assign_multi_level: e_min must be positive");
    }
    if (spec.e_max < spec.e_min) {
        throw std::invalid_argument("assign_multi_level: e_max must be >= e_min");
    }
    if (spec.total_target) {
        const double lo = spec.e_min * n;
        const double hi = spec.e_max * n;
        if (*spec.total_target < lo || *spec.total_target > hi) {
            throw std::invalid_argument("assign_multi_level: total_target outside [N*e_min, N*e_max]");
        }
    }

    double total = 0.0;
    for (Node& node : nodes) {
        node.advanced = false;
        node.e_init = rng.uniform(spec.e_min, spec.e_max);
        total += node.e_init;
    }
    if (spec.total_target) {
        const double scale = *spec.total_target / total;
        for (Node& node : nodes) {
            node.e_init *= scale;
        }
    }
    for (Node& node : nodes) {
        node.e_res = node.e_init;
    }
}

} // namespace beccsim
