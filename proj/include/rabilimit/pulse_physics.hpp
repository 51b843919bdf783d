#pragma once

#include <optional>

namespace rabilimit {

// One coherent drive pulse, described by the quantities an experimenter
// actually quotes. Construction validates that everything is strictly
// positive and throws std::invalid_argument otherwise.
struct CoherentPulse {
    double frequency_hz;
    double duration_s;
    double peak_power_w;

    // When set, used in place of h * frequency_hz. Lets a caller reproduce
    // numbers quoted with a rounded photon energy.
    std::optional<double> photon_energy_override_j;

    CoherentPulse(double frequency_hz, double duration_s, double peak_power_w,
                  std::optional<double> photon_energy_override_j = std::nullopt);
};

// Energy of one photon in joules: the override if present, else h * frequency.
double photon_energy(const CoherentPulse& pulse);

// Mean photon number: pulse energy (duration * peak power) over photon energy.
double nbar_from_pulse(const CoherentPulse& pulse);

// c / wavelength. Requires wavelength_m > 0.
double frequency_from_wavelength(double wavelength_m);

}  // namespace rabilimit
