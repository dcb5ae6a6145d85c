#include "beccsim/radio.hpp"

#include <cmath>
#include <stdexcept>

namespace beccsim {

RadioParams RadioParams::defaults()
{
    return RadioParams{
        50e-9,     // e_elec, 50 nJ/b
        10e-12,    // eps_fs, 10 pJ/bit/m^2
        0.0013e-12, // eps_mp, 0.0013 pJ/bit/m^4
        5e-9,      // e_da, 5 nJ/bit/signal
        4000,
    };
}

void RadioParams::validate() const
{
    if (!(e_elec > 0.0)) {
        throw std::invalid_argument("radio: e_elec must be positive");
    }
    if (!(eps_fs > 0.0)) {
        throw std::invalid_argument("radio: eps_fs must be positive");
    }
    if (!(eps_mp > 0.0)) {
        throw std::invalid_argument("radio: eps_mp must be positive");
    }
    if (!(e_da > 0.0)) {
        throw std::invalid_argument("radio: e_da must be positive");
    }
    if (msg_bits <= 0) {
        throw std::invalid_argument("radio: msg_bits must be positive");
    }
}

double crossover_distance(const RadioParams& p)
{
    if (!(p.eps_fs > 0.0) || !(p.eps_mp > 0.0)) {
        throw std::invalid_argument("crossover_distance: amplifier coefficients must be positive");
    }
    return std::sqrt(p.eps_fs / p.eps_mp);
}

double tx_energy(std::int64_t bits, double distance_m, const RadioParams& p)
{
    if (bits <= 0) {
        throw std::invalid_argument("tx_energy: bits must be positive");
    }
    if (distance_m < 0.0) {
        throw std::invalid_argument("tx_energy: distance must be non-negative");
    }
    const double k = static_cast<double>(bits);
    const double circuit = k * p.e_elec;
    // d exactly at the crossover takes the multipath branch
    if (distance_m < crossover_distance(p)) {
        return circuit + k * p.eps_fs * distance_m * distance_m;
    }
    const double d2 = distance_m * distance_m;
    return circuit + k * p.eps_mp * d2 * d2;
}

double rx_energy(std::int64_t bits, const RadioParams& p)
{
    if (bits <= 0) {
        throw std::invalid_argument("rx_energy: bits must be positive");
    }
    return static_cast<double>(bits) * p.e_elec;
}

double agg_energy(std::int64_t packets, std::int64_t bits, const RadioParams& p)
{
    if (packets < 0) {
        throw std::invalid_argument("agg_energy: packet count must be non-negative");
    }
    if (bits <= 0) {
        throw std::invalid_argument("agg_energy: bits must be positive");
    }
    return static_cast<double>(packets) * static_cast<double>(bits) * p.e_da;
}

} // namespace beccsim
