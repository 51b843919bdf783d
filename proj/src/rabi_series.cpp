#include "rabilimit/rabi_series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "rabilimit/compensated_sum.hpp"
#include "rabilimit/envelope_model.hpp"

namespace rabilimit {

namespace {

// Correction term ln n! - (n ln n - n + 0.5 ln(2 pi n)) via its asymptotic
// series. Only called for n > 15 where five terms already reach double
// precision; the term count follows the usual thresholds.
double stirling_error(double n) {
    constexpr double s0 = 1.0 / 12.0;
    constexpr double s1 = 1.0 / 360.0;
    constexpr double s2 = 1.0 / 1260.0;
    constexpr double s3 = 1.0 / 1680.0;
    constexpr double s4 = 1.0 / 1188.0;
    const double n1 = 1.0 / n;
    const double n2 = n1 * n1;
    if (n > 500.0) return (s0 - s1 * n2) * n1;
    if (n > 80.0) return (s0 - (s1 - s2 * n2) * n2) * n1;
    if (n > 35.0) return (s0 - (s1 - (s2 - s3 * n2) * n2) * n2) * n1;
    return (s0 - (s1 - (s2 - (s3 - s4 * n2) * n2) * n2) * n2) * n1;
}

// Deviance n ln(n / lambda) + lambda - n. The direct expression cancels
// catastrophically for n near lambda, which is exactly where the Poisson
// mass sits, so that region is summed as a series in (n-lambda)/(n+lambda).
double deviance(double n, double lambda) {
    if (std::abs(n - lambda) < 0.1 * (n + lambda)) {
        const double v = (n - lambda) / (n + lambda);
        double s = (n - lambda) * v;
        double ej = 2.0 * n * v;
        for (int j = 1;; ++j) {
            ej *= v * v;
            const double s1 = s + ej / (2 * j + 1);
            if (s1 == s) return s1;
            s = s1;
        }
    }
    return n * std::log(n / lambda) + lambda - n;
}

void check_nbar_positive(double nbar, const char* where) {
    if (!(nbar > 0.0))
        throw std::invalid_argument(std::string(where) + ": nbar must be > 0");
}

}  // namespace

RabiField::RabiField(double nbar, std::optional<double> g)
    : nbar(nbar), g(g) {
    check_nbar_positive(nbar, "RabiField");
    if (g && !(*g > 0.0))
        throw std::invalid_argument("RabiField: g must be > 0");
}

double poisson_log_weight(std::uint64_t n, double nbar) {
    check_nbar_positive(nbar, "poisson_log_weight");
    if (n == 0) return -nbar;
    const double nd = static_cast<double>(n);
    if (n <= 15)
        return -nbar + nd * std::log(nbar) - std::lgamma(nd + 1.0);
    // Saddle-point form: algebraically the line above, but the deviance
    // carries the whole cancellation, so the result stays accurate to a few
    // ulps even when -nbar and n ln(nbar) are both ~1e12.
    return -stirling_error(nd) - deviance(nd, nbar) -
           0.5 * std::log(2.0 * std::numbers::pi * nd);
}

TruncationWindow truncation_window(double nbar, double tail_tol) {
    check_nbar_positive(nbar, "truncation_window");
    if (!(tail_tol > 0.0 && tail_tol < 1.0))
        throw std::invalid_argument(
            "truncation_window: tail_tol must be in (0, 1)");
    // Gaussian bound: mass beyond k sigma on both sides is under
    // 2 exp(-k^2 / 2), so exp(-k^2 / 2) <= tail_tol / 4 leaves slack for
    // the Poisson skew. Small nbar has a slow upper tail; the floor of 30
    // on n_max covers it for any tail_tol down to ~1e-30.
    const double k =
        std::max(8.0, std::sqrt(2.0 * std::log(4.0 / tail_tol)));
    const double sigma = std::sqrt(nbar);
    const double lo = std::floor(nbar - k * sigma);
    const double hi = std::max(std::ceil(nbar + k * sigma), 30.0);
    TruncationWindow w;
    w.n_min = lo > 0.0 ? static_cast<std::uint64_t>(lo) : 0;
    w.n_max = static_cast<std::uint64_t>(hi);
    w.tail_mass_bound = tail_tol;
    return w;
}

PoissonSum::PoissonSum(double nbar, double tail_tol)
    : nbar_(nbar), window_(truncation_window(nbar, tail_tol)) {
    const auto lo = static_cast<std::int64_t>(window_.n_min);
    const auto hi = static_cast<std::int64_t>(window_.n_max);
    const std::size_t count = static_cast<std::size_t>(hi - lo + 1);
    weights_.reserve(count);
    omegas_.reserve(count);

    const auto weight = [this](std::int64_t n) {
        return std::exp(poisson_log_weight(static_cast<std::uint64_t>(n),
                                           nbar_));
    };
    const auto push = [this](std::int64_t n, double w) {
        weights_.push_back(w);
        omegas_.push_back(2.0 * std::sqrt(static_cast<double>(n) + 1.0));
    };

    // Walk outward from the mode, always emitting the heavier side next, so
    // weights_ ends up sorted descending without an O(count log count) sort.
    std::int64_t mode =
        std::clamp(static_cast<std::int64_t>(std::floor(nbar)), lo, hi);
    std::int64_t down = mode;
    std::int64_t up = mode + 1;
    double wd = weight(down);
    double wu = up <= hi ? weight(up) : -1.0;
    while (down >= lo || up <= hi) {
        const bool take_down =
            down >= lo && (up > hi || wd >= wu);
        if (take_down) {
            push(down, wd);
            --down;
            if (down >= lo) wd = weight(down);
        } else {
            push(up, wu);
            ++up;
            if (up <= hi) wu = weight(up);
        }
    }

    CompensatedSum mass;
    for (double w : weights_) mass.add(w);
    mass_ = mass.value();
}

double PoissonSum::w(double tau) const {
    CompensatedSum acc;
    for (std::size_t i = 0; i < weights_.size(); ++i)
        acc.add(weights_[i] * std::cos(omegas_[i] * tau));
    return acc.value();
}

double w_exact(double tau, double nbar, double tail_tol) {
    return PoissonSum(nbar, tail_tol).w(tau);
}

double excited_probability(double t_seconds, const RabiField& field,
                           double tail_tol) {
    if (!field.g)
        throw std::invalid_argument(
            "excited_probability: field.g is required to map time to tau");
    return 0.5 * (1.0 + w_exact(*field.g * t_seconds, field.nbar, tail_tol));
}

RabiTrace sample_trace(double nbar, double tau_max, std::size_t count,
                       double tail_tol) {
    if (!(tau_max > 0.0))
        throw std::invalid_argument("sample_trace: tau_max must be > 0");
    if (count < 2)
        throw std::invalid_argument("sample_trace: count must be >= 2");
    const PoissonSum series(nbar, tail_tol);

    RabiTrace trace;
    trace.nbar = nbar;
    trace.tau_values.reserve(count);
    trace.w_exact.reserve(count);
    trace.w_envelope.reserve(count);
    trace.gauss_envelope.reserve(count);

    const double step = tau_max / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
        const double tau =
            i + 1 == count ? tau_max : static_cast<double>(i) * step;
        trace.tau_values.push_back(tau);
        trace.w_exact.push_back(series.w(tau));
        trace.w_envelope.push_back(w_envelope(tau, nbar));
        trace.gauss_envelope.push_back(gauss_envelope(tau, nbar));
    }
    return trace;
}

PeriodCount count_periods_by_zero_crossings(const RabiTrace& trace) {
    if (trace.w_exact.empty())
        throw std::invalid_argument(
            "count_periods_by_zero_crossings: trace is empty");
    std::int64_t changes = 0;
    bool degenerate = false;
    int last_sign = 0;
    bool prev_zero = false;
    for (double v : trace.w_exact) {
        const int s = (v > 0.0) - (v < 0.0);
        if (s == 0) {
            if (prev_zero) degenerate = true;
            prev_zero = true;
            continue;
        }
        prev_zero = false;
        if (last_sign != 0 && s != last_sign) ++changes;
        last_sign = s;
    }
    PeriodCount pc;
    pc.periods = 0.5 * static_cast<double>(changes);
    pc.sign_changes = changes;
    pc.degenerate_grid = degenerate;
    return pc;
}

}  // namespace rabilimit
