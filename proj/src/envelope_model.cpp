#include "rabilimit/envelope_model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rabilimit {

namespace {

void check_nbar(double nbar, const char* where) {
    if (!(nbar >= 0.0))
        throw std::invalid_argument(std::string(where) +
                                    ": nbar must be >= 0");
}

}  // namespace

double gauss_envelope(double tau, double nbar) {
    check_nbar(nbar, "gauss_envelope");
    return std::exp(-nbar * tau * tau / (2.0 * (nbar + 1.0)));
}

double w_envelope(double tau, double nbar) {
    return std::cos(2.0 * std::sqrt(nbar + 1.0) * tau) *
           gauss_envelope(tau, nbar);
}

bool w_envelope_in_domain(double tau, double nbar) {
    check_nbar(nbar, "w_envelope_in_domain");
    return std::abs(tau) < std::sqrt(nbar);
}

double rabi_angular_frequency(double nbar) {
    check_nbar(nbar, "rabi_angular_frequency");
    return 2.0 * std::sqrt(nbar + 1.0);
}

double rabi_period(double nbar) {
    check_nbar(nbar, "rabi_period");
    return std::numbers::pi / std::sqrt(nbar + 1.0);
}

double periods_in_interval(double nbar, double tau_len) {
    check_nbar(nbar, "periods_in_interval");
    if (!(tau_len >= 0.0))
        throw std::invalid_argument(
            "periods_in_interval: tau_len must be >= 0");
    return tau_len * std::sqrt(nbar + 1.0) / std::numbers::pi;
}

}  // namespace rabilimit
