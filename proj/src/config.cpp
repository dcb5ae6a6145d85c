#include "beccsim/config.hpp"

#include "beccsim/version.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace beccsim {

namespace {

std::string trim(const std::string& s)
{
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value)
{
    double out = 0.0;
    const char* first = value.data();
    const char* last = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last) {
        throw std::invalid_argument("config: " + key + " expects a number, got '" + value + "'");
    }
    return out;
}

long long parse_int(const std::string& key, const std::string& value)
{
    long long out = 0;
    const char* first = value.data();
    const char* last = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last) {
        throw std::invalid_argument("config: " + key + " expects an integer, got '" + value + "'");
    }
    return out;
}

std::uint64_t parse_uint(const std::string& key, const std::string& value)
{
    std::uint64_t out = 0;
    const char* first = value.data();
    const char* last = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last) {
        throw std::invalid_argument("config: " + key + " expects a non-negative integer, got '" +
                                    value + "'");
    }
    return out;
}

std::string format_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

} // namespace

bool ScenarioConfig::two_level() const
{
    return std::holds_alternative<TwoLevelSpec>(heterogeneity);
}

bool ScenarioConfig::multi_level() const
{
    return std::holds_alternative<MultiLevelSpec>(heterogeneity);
}

std::vector<std::string> ScenarioConfig::validate() const
{
    if (nodes <= 0) {
        throw std::invalid_argument("config: nodes must be positive");
    }
    if (!(side > 0.0)) {
        throw std::invalid_argument("config: side must be positive");
    }
    if (!(p_opt > 0.0) || !(p_opt < 1.0)) {
        throw std::invalid_argument("config: p_opt must lie in (0, 1)");
    }
    radio.validate();
    if (replicates <= 0) {
        throw std::invalid_argument("config: replicates must be positive");
    }
    if (round_budget && *round_budget < 0) {
        throw std::invalid_argument("config: rounds must be non-negative");
    }

    if (const auto* two = std::get_if<TwoLevelSpec>(&heterogeneity)) {
        if (!(two->e0 > 0.0)) {
            throw std::invalid_argument("config: e0 must be positive");
        }
        if (!(two->lambda > 0.0) || !(two->lambda < 1.0)) {
            throw std::invalid_argument("config: lambda must lie in (0, 1)");
        }
        if (two->alpha < 0.0) {
            throw std::invalid_argument("config: alpha must be non-negative");
        }
        const long advanced = std::lround(two->lambda * nodes);
        if (advanced <= 0 || advanced >= nodes) {
            throw std::invalid_argument(
                "config: lambda*N rounds to a homogeneous network (0 or N advanced nodes)");
        }
    } else {
        const auto& multi = std::get<MultiLevelSpec>(heterogeneity);
        if (!(multi.e_min > 0.0)) {
            throw std::invalid_argument("config: e_min must be positive");
        }
        if (multi.e_max < multi.e_min) {
            throw std::invalid_argument("config: e_max must be >= e_min");
        }
        if (multi.total_target) {
            if (*multi.total_target < multi.e_min * nodes ||
                *multi.total_target > multi.e_max * nodes) {
                throw std::invalid_argument("config: total_target outside [N*e_min, N*e_max]");
            }
        }
    }

    std::vector<std::string> warnings;
    if (protocol == Protocol::Sep && multi_level()) {
        warnings.push_back("SEP assumes a two-level scenario; on this multi-level scenario every "
                           "node is treated as normal class (collapses toward LEACH)");
    }
    return warnings;
}

ScenarioConfig parse_config(std::istream& in, const ScenarioConfig& base)
{
    // first pass: section-qualified key/value map, last value wins
    std::map<std::string, std::string> values;
    std::string section;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string text = trim(line);
        if (text.empty() || text.front() == '#' || text.front() == ';') {
            continue;
        }
        if (text.front() == '[') {
            if (text.back() != ']') {
                throw std::invalid_argument("config: malformed section header at line " +
                                            std::to_string(line_no));
            }
            section = trim(text.substr(1, text.size() - 2));
            continue;
        }
        const auto eq = text.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config: expected 'key = value' at line " +
                                        std::to_string(line_no));
        }
        if (section.empty()) {
            throw std::invalid_argument("config: key outside any [section] at line " +
                                        std::to_string(line_no));
        }
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw std::invalid_argument("config: empty key or value at line " +
                                        std::to_string(line_no));
        }
        values[section + "." + key] = value;
    }

    ScenarioConfig cfg = base;

    auto take = [&values](const std::string& qualified) -> std::optional<std::string> {
        const auto it = values.find(qualified);
        if (it == values.end()) {
            return std::nullopt;
        }
        std::string v = it->second;
        values.erase(it);
        return v;
    };

    if (const auto v = take("network.nodes")) {
        cfg.nodes = static_cast<int>(parse_int("nodes", *v));
    }
    if (const auto v = take("network.side")) {
        cfg.side = parse_double("side", *v);
    }
    {
        const auto sx = take("network.sink_x");
        const auto sy = take("network.sink_y");
        if (sx.has_value() != sy.has_value()) {
            throw std::invalid_argument("config: sink_x and sink_y must be given together");
        }
        if (sx) {
            cfg.sink = Position{parse_double("sink_x", *sx), parse_double("sink_y", *sy)};
        }
    }

    // radio values arrive in nJ/pJ and become joules here, once
    if (const auto v = take("radio.e_elec_nj")) {
        cfg.radio.e_elec = parse_double("e_elec_nj", *v) * 1e-9;
    }
    if (const auto v = take("radio.e_da_nj")) {
        cfg.radio.e_da = parse_double("e_da_nj", *v) * 1e-9;
    }
    if (const auto v = take("radio.eps_fs_pj")) {
        cfg.radio.eps_fs = parse_double("eps_fs_pj", *v) * 1e-12;
    }
    if (const auto v = take("radio.eps_mp_pj")) {
        cfg.radio.eps_mp = parse_double("eps_mp_pj", *v) * 1e-12;
    }
    if (const auto v = take("radio.message_bits")) {
        cfg.radio.msg_bits = parse_int("message_bits", *v);
    }

    std::string kind = cfg.two_level() ? "two-level" : "multi-level";
    if (const auto v = take("heterogeneity.kind")) {
        if (*v != "two-level" && *v != "multi-level") {
            throw std::invalid_argument("config: kind must be 'two-level' or 'multi-level'");
        }
        kind = *v;
    }
    if (kind == "two-level") {
        TwoLevelSpec spec = cfg.two_level() ? std::get<TwoLevelSpec>(cfg.heterogeneity)
                                            : TwoLevelSpec{};
        if (const auto v = take("heterogeneity.e0")) {
            spec.e0 = parse_double("e0", *v);
        }
        if (const auto v = take("heterogeneity.lambda")) {
            spec.lambda = parse_double("lambda", *v);
        }
        if (const auto v = take("heterogeneity.alpha")) {
            spec.alpha = parse_double("alpha", *v);
        }
        cfg.heterogeneity = spec;
    } else {
        MultiLevelSpec spec = cfg.multi_level() ? std::get<MultiLevelSpec>(cfg.heterogeneity)
                                                : MultiLevelSpec{};
        if (const auto v = take("heterogeneity.e_min")) {
            spec.e_min = parse_double("e_min", *v);
        }
        if (const auto v = take("heterogeneity.e_max")) {
            spec.e_max = parse_double("e_max", *v);
        }
        if (const auto v = take("heterogeneity.total_target")) {
            if (*v == "none") {
                spec.total_target.reset();
            } else {
                spec.total_target = parse_double("total_target", *v);
            }
        }
        cfg.heterogeneity = spec;
    }

    if (const auto v = take("simulation.protocol")) {
        const auto p = protocol_from_string(*v);
        if (!p) {
            throw std::invalid_argument("config: unknown protocol '" + *v +
                                        "' (expected LEACH, LEACH-E, SEP, SEP-M or BECC)");
        }
        cfg.protocol = *p;
    }
    if (const auto v = take("simulation.p_opt")) {
        cfg.p_opt = parse_double("p_opt", *v);
    }
    if (const auto v = take("simulation.rounds")) {
        if (*v == "unlimited") {
            cfg.round_budget.reset();
        } else {
            cfg.round_budget = static_cast<long>(parse_int("rounds", *v));
        }
    }
    if (const auto v = take("simulation.seed")) {
        cfg.seed = parse_uint("seed", *v);
    }
    if (const auto v = take("simulation.replicates")) {
        cfg.replicates = static_cast<int>(parse_int("replicates", *v));
    }

    if (!values.empty()) {
        throw std::invalid_argument("config: unknown key '" + values.begin()->first + "'");
    }
    return cfg;
}

ScenarioConfig parse_config_file(const std::string& path, const ScenarioConfig& base)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("config: cannot open '" + path + "'");
    }
    return parse_config(in, base);
}

ScenarioConfig parse_config_string(const std::string& text, const ScenarioConfig& base)
{
    std::istringstream in(text);
    return parse_config(in, base);
}

void write_config(std::ostream& out, const ScenarioConfig& cfg)
{
    out << "# resolved scenario (beccsim " << kVersion << ")\n";
    out << "[network]\n";
    out << "nodes = " << cfg.nodes << "\n";
    out << "side = " << format_double(cfg.side) << "\n";
    const Position sink = cfg.sink.value_or(sink_position(cfg.side));
    out << "sink_x = " << format_double(sink.x) << "\n";
    out << "sink_y = " << format_double(sink.y) << "\n";
    out << "\n[radio]\n";
    out << "e_elec_nj = " << format_double(cfg.radio.e_elec * 1e9) << "\n";
    out << "e_da_nj = " << format_double(cfg.radio.e_da * 1e9) << "\n";
    out << "eps_fs_pj = " << format_double(cfg.radio.eps_fs * 1e12) << "\n";
    out << "eps_mp_pj = " << format_double(cfg.radio.eps_mp * 1e12) << "\n";
    out << "message_bits = " << cfg.radio.msg_bits << "\n";
    out << "\n[heterogeneity]\n";
    if (const auto* two = std::get_if<TwoLevelSpec>(&cfg.heterogeneity)) {
        out << "kind = two-level\n";
        out << "e0 = " << format_double(two->e0) << "\n";
        out << "lambda = " << format_double(two->lambda) << "\n";
        out << "alpha = " << format_double(two->alpha) << "\n";
    } else {
        const auto& multi = std::get<MultiLevelSpec>(cfg.heterogeneity);
        out << "kind = multi-level\n";
        out << "e_min = " << format_double(multi.e_min) << "\n";
        out << "e_max = " << format_double(multi.e_max) << "\n";
        out << "total_target = "
            << (multi.total_target ? format_double(*multi.total_target) : std::string("none"))
            << "\n";
    }
    out << "\n[simulation]\n";
    out << "protocol = " << to_string(cfg.protocol) << "\n";
    out << "p_opt = " << format_double(cfg.p_opt) << "\n";
    out << "rounds = "
        << (cfg.round_budget ? std::to_string(*cfg.round_budget) : std::string("unlimited"))
        << "\n";
    out << "seed = " << cfg.seed << "\n";
    out << "replicates = " << cfg.replicates << "\n";
}

std::string config_summary(const ScenarioConfig& cfg)
{
    std::ostringstream out;
    const Position sink = cfg.sink.value_or(sink_position(cfg.side));
    out << "nodes=" << cfg.nodes << " side=" << format_double(cfg.side) << " sink=("
        << format_double(sink.x) << "," << format_double(sink.y) << ")";
    if (const auto* two = std::get_if<TwoLevelSpec>(&cfg.heterogeneity)) {
        out << " two-level{e0=" << format_double(two->e0) << ",lambda=" << format_double(two->lambda)
            << ",alpha=" << format_double(two->alpha) << "}";
    } else {
        const auto& multi = std::get<MultiLevelSpec>(cfg.heterogeneity);
        out << " multi-level{e_min=" << format_double(multi.e_min)
            << ",e_max=" << format_double(multi.e_max) << ",total="
            << (multi.total_target ? format_double(*multi.total_target) : std::string("none"))
            << "}";
    }
    out << " protocol=" << to_string(cfg.protocol) << " p_opt=" << format_double(cfg.p_opt)
        << " radio{e_elec=" << format_double(cfg.radio.e_elec)
        << ",eps_fs=" << format_double(cfg.radio.eps_fs)
        << ",eps_mp=" << format_double(cfg.radio.eps_mp)
        << ",e_da=" << format_double(cfg.radio.e_da) << ",bits=" << cfg.radio.msg_bits << "}"
        << " rounds="
        << (cfg.round_budget ? std::to_string(*cfg.round_budget) : std::string("unlimited"))
        << " seed=" << cfg.seed;
    return out.str();
}

} // namespace beccsim
