#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "rabilimit/constants.hpp"

namespace rabilimit {

// Coherent driving field in dimensionless form. Only nbar enters the
// oscillation shape; the coupling g (rad/s) is kept so wall-clock time can
// be mapped to tau = g t when a caller has one.
struct RabiField {
    double nbar;
    std::optional<double> g;

    explicit RabiField(double nbar, std::optional<double> g = std::nullopt);
};

// Photon-number range [n_min, n_max] that carries all but at most
// tail_mass_bound of the Poisson mass at the given nbar.
struct TruncationWindow {
    std::uint64_t n_min;
    std::uint64_t n_max;
    double tail_mass_bound;
};

// log of the Poisson weight exp(-nbar) nbar^n / n!. Stable for nbar up to
// at least 1e12; see the implementation notes on the saddle-point form.
double poisson_log_weight(std::uint64_t n, double nbar);

// Window based on the Gaussian tail of the Poisson distribution. The
// half-width is k sqrt(nbar) with k chosen from tail_tol, never below 8
// sigma, and n_max is floored at 30 so small nbar keeps its slow tail.
TruncationWindow truncation_window(double nbar, double tail_tol);

// Poisson-weighted cosine series for one field strength. The weights are
// precomputed in descending order (walking outward from the mode) so that
// compensated accumulation sees big terms first; many tau evaluations then
// share the setup.
class PoissonSum {
public:
    PoissonSum(double nbar, double tail_tol = kDefaultTailTol);

    // W(tau) = sum_n p_n cos(2 sqrt(n + 1) tau). Even in tau.
    double w(double tau) const;

    // Total Poisson mass inside the window; 1 - weight_mass() <= tail bound.
    double weight_mass() const { return mass_; }

    const TruncationWindow& window() const { return window_; }
    double nbar() const { return nbar_; }

private:
    double nbar_;
    TruncationWindow window_;
    std::vector<double> weights_;  // descending
    std::vector<double> omegas_;   // 2 sqrt(n + 1), matching weights_
    double mass_;
};

// One-off evaluation of the series.
double w_exact(double tau, double nbar, double tail_tol = kDefaultTailTol);

// Excited-state population (1 + W(g t)) / 2 at wall-clock time t.
// Requires field.g; throws std::invalid_argument without it.
double excited_probability(double t_seconds, const RabiField& field,
                           double tail_tol = kDefaultTailTol);

// Uniformly sampled signal with the exact series and both closed-form
// channels side by side.
struct RabiTrace {
    double nbar;
    std::vector<double> tau_values;
    std::vector<double> w_exact;
    std::vector<double> w_envelope;
    std::vector<double> gauss_envelope;
};

// count >= 2 samples on [0, tau_max]; the grid is strictly increasing and
// hits both endpoints exactly.
RabiTrace sample_trace(double nbar, double tau_max, std::size_t count,
                       double tail_tol = kDefaultTailTol);

struct PeriodCount {
    double periods;            // sign_changes / 2
    std::int64_t sign_changes;
    bool degenerate_grid;      // consecutive exact zeros were seen
};

// Periods of the sampled w_exact channel counted through strict sign
// changes. A zero lying on a grid point joins the neighbouring samples, so
// + 0 - is one crossing and + 0 + is none.
PeriodCount count_periods_by_zero_crossings(const RabiTrace& trace);

}  // namespace rabilimit
