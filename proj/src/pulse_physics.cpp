#include "rabilimit/pulse_physics.hpp"

#include <stdexcept>

#include "rabilimit/constants.hpp"

namespace rabilimit {

CoherentPulse::CoherentPulse(double frequency_hz, double duration_s,
                             double peak_power_w,
                             std::optional<double> photon_energy_override_j)
    : frequency_hz(frequency_hz),
      duration_s(duration_s),
      peak_power_w(peak_power_w),
      photon_energy_override_j(photon_energy_override_j) {
    if (!(frequency_hz > 0.0))
        throw std::invalid_argument("CoherentPulse: frequency_hz must be > 0");
    if (!(duration_s > 0.0))
        throw std::invalid_argument("CoherentPulse: duration_s must be > 0");
    if (!(peak_power_w > 0.0))
        throw std::invalid_argument("CoherentPulse: peak_power_w must be > 0");
    if (photon_energy_override_j && !(*photon_energy_override_j > 0.0))
        throw std::invalid_argument(
            "CoherentPulse: photon_energy_override_j must be > 0");
}

double photon_energy(const CoherentPulse& pulse) {
    if (pulse.photon_energy_override_j) return *pulse.photon_energy_override_j;
    return kPlanck * pulse.frequency_hz;
}

double nbar_from_pulse(const CoherentPulse& pulse) {
    return pulse.duration_s * pulse.peak_power_w / photon_energy(pulse);
}

double frequency_from_wavelength(double wavelength_m) {
    if (!(wavelength_m > 0.0))
        throw std::invalid_argument(
            "frequency_from_wavelength: wavelength_m must be > 0");
    return kSpeedOfLight / wavelength_m;
}

}  // namespace rabilimit
