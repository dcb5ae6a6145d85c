#pragma once

#include "beccsim/protocols.hpp"
#include "beccsim/radio.hpp"
#include "beccsim/world.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace beccsim {

/// Everything a run needs. Defaults reproduce the standard setup: 200 nodes
/// on a (0,0)-(500,500) grid, sink at the center, 50 nJ/b circuitry,
/// 5 nJ/bit/signal aggregation, 10 pJ/bit/m^2 and 0.0013 pJ/bit/m^4
/// amplifiers, 4000-bit frames, p_opt = 0.05.
struct ScenarioConfig {
    int nodes = 200;
    double side = 500.0;
    std::optional<Position> sink;           ///< unset = field center
    HeterogeneitySpec heterogeneity = MultiLevelSpec{};
    Protocol protocol = Protocol::Becc;
    double p_opt = 0.05;
    RadioParams radio = RadioParams::defaults();
    std::optional<long> round_budget;       ///< unset = run until all nodes dead
    std::uint64_t seed = 1;
    int replicates = 20;

    bool two_level() const;
    bool multi_level() const;

    /// Throws std::invalid_argument with a one-line message on the first
    /// violated constraint. Returns warnings (e.g. SEP on a multi-level
    /// scenario) without failing.
    std::vector<std::string> validate() const;
};

/// Parses the key = value config format:
///
///   [network]       nodes, side, sink_x, sink_y
///   [radio]         e_elec_nj, e_da_nj, eps_fs_pj, eps_mp_pj, message_bits
///   [heterogeneity] kind = two-level | multi-level; e0, lambda, alpha;
///                   e_min, e_max, total_target
///   [simulation]    protocol, p_opt, rounds (count or "unlimited"), seed,
///                   replicates
///
/// '#' and ';' start comments. Keys are applied on top of `base`, so a file
/// only needs the values it changes. Unknown sections or keys are errors.
/// Radio values are converted from nJ/pJ to joules here, at load time.
ScenarioConfig parse_config(std::istream& in, const ScenarioConfig& base = {});
ScenarioConfig parse_config_file(const std::string& path, const ScenarioConfig& base = {});
ScenarioConfig parse_config_string(const std::string& text, const ScenarioConfig& base = {});

/// Writes the fully resolved config back out in the same format, with a
/// fixed key order and number formatting, so identical configs always
/// produce identical bytes. Every CLI run drops one of these next to its
/// outputs.
void write_config(std::ostream& out, const ScenarioConfig& cfg);

/// One-line form used in CSV comment headers.
std::string config_summary(const ScenarioConfig& cfg);

} // namespace beccsim
