#include "beccsim/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace beccsim {

namespace {

// Per-node election thresholds from pre-round state, in id order. Election
// draws happen afterwards, so no draw can influence another node's
// threshold within the same round.
std::vector<double> election_thresholds(const World& world, const ElectionPolicy& policy, int round)
{
    std::vector<double> thresholds(world.nodes.size(), 0.0);

    std::optional<GlobalView> global;
    if (policy.protocol == Protocol::LeachE || policy.protocol == Protocol::SepM) {
        global = GlobalView{world.alive_count(), world.total_residual(), world.total_initial_alive()};
    }

    for (const Node& node : world.nodes) {
        if (!node.alive) {
            continue;
        }
        ElectionContext ctx;
        ctx.round = round;
        ctx.p_opt = policy.p_opt;
        ctx.node = NodeView{node.e_res, node.e_init, node.rounds_since_ch, node.q_pol_carry,
                            node.advanced};
        ctx.global = global;

        double t = 0.0;
        switch (policy.protocol) {
        case Protocol::Leach:
            t = leach_threshold(ctx);
            break;
        case Protocol::LeachE:
            t = leach_e_threshold(ctx);
            break;
        case Protocol::Sep:
            t = sep_threshold(ctx, policy.sep_lambda, policy.sep_alpha);
            break;
        case Protocol::SepM:
            t = sep_m_threshold(ctx);
            break;
        case Protocol::Becc:
            t = becc_threshold(node.q_pol_carry, policy.p_opt);
            break;
        }
        thresholds[static_cast<std::size_t>(node.id)] = t;
    }
    return thresholds;
}

} // namespace

ElectionPolicy make_policy(const ScenarioConfig& cfg)
{
    ElectionPolicy policy;
    policy.protocol = cfg.protocol;
    policy.p_opt = cfg.p_opt;
    if (const auto* two = std::get_if<TwoLevelSpec>(&cfg.heterogeneity)) {
        policy.sep_lambda = two->lambda;
        policy.sep_alpha = two->alpha;
    }
    return policy;
}

World build_world(const ScenarioConfig& cfg, RandomSource& rng)
{
    World world;
    world.side = cfg.side;
    world.sink = cfg.sink.value_or(sink_position(cfg.side));

    const std::vector<Position> positions = deploy_uniform(cfg.nodes, cfg.side, rng);
    world.nodes.resize(static_cast<std::size_t>(cfg.nodes));
    for (int i = 0; i < cfg.nodes; ++i) {
        Node& node = world.nodes[static_cast<std::size_t>(i)];
        node.id = i;
        node.pos = positions[static_cast<std::size_t>(i)];
        node.alive = true;
        node.rounds_since_ch = kNeverClusterHead;
        node.q_pol_carry = 1.0;
    }

    if (const auto* two = std::get_if<TwoLevelSpec>(&cfg.heterogeneity)) {
        assign_two_level(world.nodes, *two, rng);
    } else {
        assign_multi_level(world.nodes, std::get<MultiLevelSpec>(cfg.heterogeneity), rng);
    }
    return world;
}

ClusterAssignment run_setup_phase(World& world, const ElectionPolicy& policy, int round,
                                  RandomSource& rng)
{
    const std::size_t n = world.nodes.size();
    if (world.alive_count() == 0) {
        throw std::invalid_argument("run_setup_phase: no alive nodes");
    }

    ClusterAssignment assignment;
    assignment.membership.assign(n, kUnassigned);

    const std::vector<double> thresholds = election_thresholds(world, policy, round);

    // Self-election, ascending id. One draw per alive node.
    for (Node& node : world.nodes) {
        if (!node.alive) {
            continue;
        }
        if (elect(thresholds[static_cast<std::size_t>(node.id)], rng)) {
            assignment.heads.push_back(node.id);
            node.rounds_since_ch = 0;
        }
    }

    if (assignment.heads.empty()) {
        // No head advertised itself: everyone reports straight to the sink
        // this round, so the throughput series never silently stalls.
        for (const Node& node : world.nodes) {
            if (node.alive) {
                assignment.membership[static_cast<std::size_t>(node.id)] = kDirectToSink;
            }
        }
        return assignment;
    }

    assignment.cluster_members.resize(assignment.heads.size());
    std::vector<std::size_t> head_slot(n, 0);
    for (std::size_t h = 0; h < assignment.heads.size(); ++h) {
        const int head_id = assignment.heads[h];
        assignment.membership[static_cast<std::size_t>(head_id)] = head_id;
        head_slot[static_cast<std::size_t>(head_id)] = h;
    }

    // Members join the closest head; advertisement signal strength is
    // modeled as Euclidean distance. Ties break toward the lowest head id.
    for (const Node& node : world.nodes) {
        if (!node.alive || assignment.membership[static_cast<std::size_t>(node.id)] == node.id) {
            continue;
        }
        int best_head = assignment.heads.front();
        double best_dist = std::numeric_limits<double>::infinity();
        for (const int head_id : assignment.heads) {
            const double d = distance(node.pos, world.nodes[static_cast<std::size_t>(head_id)].pos);
            if (d < best_dist) {
                best_dist = d;
                best_head = head_id;
            }
        }
        assignment.membership[static_cast<std::size_t>(node.id)] = best_head;
        assignment.cluster_members[head_slot[static_cast<std::size_t>(best_head)]].push_back(node.id);
    }

    if (policy.protocol == Protocol::Becc) {
        // Heads learn their members' residuals from the piggybacked join
        // requests, compute the polarized factors for the whole cluster
        // (head first, members in id order), and hand them back with the
        // TDMA schedule. The factors drive the next round's thresholds.
        std::vector<double> energies;
        for (std::size_t h = 0; h < assignment.heads.size(); ++h) {
            const int head_id = assignment.heads[h];
            const std::vector<int>& members = assignment.cluster_members[h];
            energies.clear();
            energies.push_back(world.nodes[static_cast<std::size_t>(head_id)].e_res);
            for (const int member_id : members) {
                energies.push_back(world.nodes[static_cast<std::size_t>(member_id)].e_res);
            }
            const std::vector<double> q_pol = becc_polarized_factors(energies);
            world.nodes[static_cast<std::size_t>(head_id)].q_pol_carry = q_pol.front();
            for (std::size_t m = 0; m < members.size(); ++m) {
                world.nodes[static_cast<std::size_t>(members[m])].q_pol_carry = q_pol[m + 1];
            }
        }
    }

    return assignment;
}

namespace {

// Charges a node, flooring residual energy at zero, and records the actual
// decrement so spent always equals the residual delta.
void charge(Node& node, double cost, std::vector<double>& spent)
{
    const double actual = std::min(cost, node.e_res);
    node.e_res -= actual;
    spent[static_cast<std::size_t>(node.id)] += actual;
}

} // namespace

RoundReport run_steady_state(World& world, const ClusterAssignment& assignment,
                             const RadioParams& radio, int round)
{
    const std::size_t n = world.nodes.size();
    RoundReport report;
    report.round = round;
    report.head_count = static_cast<int>(assignment.heads.size());
    report.energy_spent.assign(n, 0.0);

    const std::int64_t k = radio.msg_bits;

    for (std::size_t h = 0; h < assignment.heads.size(); ++h) {
        Node& head = world.nodes[static_cast<std::size_t>(assignment.heads[h])];
        const std::vector<int>& members = assignment.cluster_members[h];

        for (const int member_id : members) {
            Node& member = world.nodes[static_cast<std::size_t>(member_id)];
            charge(member, tx_energy(k, distance(member.pos, head.pos), radio),
                   report.energy_spent);
        }

        const auto member_count = static_cast<std::int64_t>(members.size());
        if (member_count > 0) {
            charge(head, static_cast<double>(member_count) * rx_energy(k, radio),
                   report.energy_spent);
        }
        // the head fuses its own frame along with the members'
        charge(head, agg_energy(member_count + 1, k, radio), report.energy_spent);
        charge(head, tx_energy(k, distance(head.pos, world.sink), radio), report.energy_spent);
        report.sink_messages += 1;
    }

    for (Node& node : world.nodes) {
        if (node.alive && assignment.membership[static_cast<std::size_t>(node.id)] == kDirectToSink) {
            charge(node, tx_energy(k, distance(node.pos, world.sink), radio), report.energy_spent);
            report.sink_messages += 1;
        }
    }

    report.residual_after.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        report.residual_after[i] = world.nodes[i].e_res;
    }
    return report;
}

void apply_death(World& world, RoundReport& report)
{
    for (Node& node : world.nodes) {
        if (node.alive && node.e_res <= 0.0) {
            node.alive = false;
            node.e_res = 0.0;
            report.deaths.push_back(node.id);
        }
    }
}

SimulationTrace run_simulation(const ScenarioConfig& cfg)
{
    cfg.validate();

    SimulationTrace trace;
    trace.config = cfg;
    trace.seed = cfg.seed;

    RandomSource rng(cfg.seed);
    World world = build_world(cfg, rng);
    const ElectionPolicy policy = make_policy(cfg);

    trace.termination = Termination::BudgetExhausted;
    for (long round = 0; !cfg.round_budget || round < *cfg.round_budget; ++round) {
        ClusterAssignment assignment = run_setup_phase(world, policy, static_cast<int>(round), rng);
        RoundReport report =
            run_steady_state(world, assignment, cfg.radio, static_cast<int>(round));
        apply_death(world, report);
        for (Node& node : world.nodes) {
            if (node.alive) {
                node.rounds_since_ch += 1;
            }
        }
        trace.rounds.push_back(std::move(report));
        if (world.alive_count() == 0) {
            trace.termination = Termination::AllNodesDead;
            break;
        }
    }
    return trace;
}

} // namespace beccsim
