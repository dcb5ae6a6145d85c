#pragma once

#include <cstdint>

namespace beccsim {

/// First-order radio dissipation parameters. All energies are in joules;
/// the config loader converts from the nJ/pJ units used in config files
/// once, at load time, so no mixed-unit arithmetic happens anywhere else.
struct RadioParams {
    double e_elec;         ///< transmitter/receiver circuitry, J/bit
    double eps_fs;         ///< free-space amplifier, J/bit/m^2
    double eps_mp;         ///< multipath amplifier, J/bit/m^4
    double e_da;           ///< data aggregation, J/bit/signal
    std::int64_t msg_bits; ///< data frame size, bits

    /// Standard parameterization: E_elec = 50 nJ/b, E_DA = 5 nJ/bit/signal,
    /// eps_fs = 10 pJ/bit/m^2, eps_mp = 0.0013 pJ/bit/m^4, 4000-bit frames.
    static RadioParams defaults();

    /// Throws std::invalid_argument unless every field is strictly positive.
    void validate() const;
};

/// Amplifier crossover distance d0 = sqrt(eps_fs / eps_mp). Below it the
/// free-space (d^2) term applies, at or above it the multipath (d^4) term.
double crossover_distance(const RadioParams& p);

/// Energy to transmit `bits` over `distance_m` meters:
/// bits * e_elec + bits * eps_fs * d^2   (d <  d0)
/// bits * e_elec + bits * eps_mp * d^4   (d >= d0)
double tx_energy(std::int64_t bits, double distance_m, const RadioParams& p);

/// Energy to receive `bits`: bits * e_elec.
double rx_energy(std::int64_t bits, const RadioParams& p);

/// Energy to fuse `packets` frames of `bits` bits each: packets * bits * e_da.
double agg_energy(std::int64_t packets, std::int64_t bits, const RadioParams& p);

} // namespace beccsim
