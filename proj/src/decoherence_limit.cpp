#include "rabilimit/decoherence_limit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "rabilimit/compensated_sum.hpp"
#include "rabilimit/envelope_model.hpp"
#include "rabilimit/rabi_series.hpp"

namespace rabilimit {

namespace {

void check_inputs(double nbar, double p_th, const char* where) {
    if (!(nbar > 0.0))
        throw std::invalid_argument(std::string(where) + ": nbar must be > 0");
    if (!(p_th >= 0.0))
        throw std::invalid_argument(std::string(where) +
                                    ": p_th must be >= 0");
}

// Maximum of f on [a, b] by golden-section search. f is assumed unimodal on
// the bracket; the caller has already isolated one peak.
template <typename F>
double golden_section_max(F f, double a, double b, double tol) {
    constexpr double invphi = 0.6180339887498949;  // (sqrt(5) - 1) / 2
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        } else {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        }
    }
    return std::max(fc, fd);
}

// Height of the |W| peak nearest to tau_center, searched over one period
// centred there. A coarse scan brackets the interior local maxima; the one
// closest to tau_center is refined.
double nearest_peak_height(const PoissonSum& series, double tau_center,
                           double period) {
    constexpr int kScan = 41;
    double lo = tau_center - 0.5 * period;
    const double hi = tau_center + 0.5 * period;
    if (lo < 0.0) lo = 0.0;
    const double h = (hi - lo) / (kScan - 1);

    std::vector<double> x(kScan), f(kScan);
    for (int i = 0; i < kScan; ++i) {
        x[i] = lo + i * h;
        f[i] = std::abs(series.w(x[i]));
    }

    std::optional<int> best;
    for (int i = 1; i + 1 < kScan; ++i) {
        if (f[i] >= f[i - 1] && f[i] >= f[i + 1] &&
            (f[i] > f[i - 1] || f[i] > f[i + 1])) {
            if (!best ||
                std::abs(x[i] - tau_center) < std::abs(x[*best] - tau_center))
                best = i;
        }
    }
    if (!best)
        throw BracketingError(
            "nearest_peak_height: no interior |W| maximum in the period "
            "around tau = " +
            std::to_string(tau_center));

    const auto g = [&series](double t) { return std::abs(series.w(t)); };
    return golden_section_max(g, x[*best - 1], x[*best + 1], 1e-10 * period);
}

}  // namespace

std::int64_t LimitEstimate::floor_value() const {
    return static_cast<std::int64_t>(std::floor(value));
}

double n_chi_closed_form(double nbar, double p_th) {
    check_inputs(nbar, p_th, "n_chi_closed_form");
    return std::cbrt(6.0 * (nbar + 1.0) * p_th /
                     (std::numbers::pi * std::numbers::pi));
}

std::int64_t n_chi_cumulative(double nbar, double p_th, LossModel model,
                              double tail_tol) {
    check_inputs(nbar, p_th, "n_chi_cumulative");
    if (!(p_th < 1.0))
        throw std::invalid_argument(
            "n_chi_cumulative: p_th must be < 1 for the sum to terminate");
    const double period = rabi_period(nbar);
    std::optional<PoissonSum> series;
    if (model == LossModel::Exact) series.emplace(nbar, tail_tol);

    CompensatedSum acc;
    std::int64_t n = 0;
    for (;;) {
        const double tau = static_cast<double>(n + 1) * period;
        double loss = 0.0;
        switch (model) {
            case LossModel::Literal:
                loss = 0.5 * tau * tau;
                break;
            case LossModel::Envelope:
                loss = 1.0 - gauss_envelope(tau, nbar);
                break;
            case LossModel::Exact:
                loss = 1.0 - nearest_peak_height(*series, tau, period);
                break;
        }
        if (acc.value() + loss > p_th) break;
        acc.add(loss);
        ++n;
    }
    return n;
}

std::int64_t n_chi_per_period(double nbar, double p_th) {
    check_inputs(nbar, p_th, "n_chi_per_period");
    if (!(p_th < 1.0))
        throw std::invalid_argument("n_chi_per_period: p_th must be < 1");
    // 1 - gauss_envelope grows with tau, so the first period over budget
    // ends the scan.
    const double period = rabi_period(nbar);
    std::int64_t n = 0;
    while (1.0 - gauss_envelope(static_cast<double>(n + 1) * period, nbar) <=
           p_th)
        ++n;
    return n;
}

LimitEstimate estimate_limit(double nbar, double p_th, LimitMethod method,
                             double tail_tol) {
    LimitEstimate e;
    e.method = method;
    e.nbar = nbar;
    e.p_th = p_th;
    switch (method) {
        case LimitMethod::ClosedForm:
            e.value = n_chi_closed_form(nbar, p_th);
            break;
        case LimitMethod::CumulativeLiteral:
            e.value = static_cast<double>(
                n_chi_cumulative(nbar, p_th, LossModel::Literal, tail_tol));
            break;
        case LimitMethod::CumulativeEnvelope:
            e.value = static_cast<double>(
                n_chi_cumulative(nbar, p_th, LossModel::Envelope, tail_tol));
            break;
        case LimitMethod::ExactPeak:
            e.value = static_cast<double>(
                n_chi_cumulative(nbar, p_th, LossModel::Exact, tail_tol));
            break;
        case LimitMethod::PerPeriod:
            e.value = static_cast<double>(n_chi_per_period(nbar, p_th));
            break;
    }
    return e;
}

FeasibilityReport feasibility(std::int64_t chi, double nbar, double p_th,
                              LimitMethod method, double tail_tol) {
    if (chi < 1)
        throw std::invalid_argument("feasibility: chi must be >= 1");
    FeasibilityReport r;
    r.chi = chi;
    r.limit = estimate_limit(nbar, p_th, method, tail_tol);
    const std::int64_t bound = r.limit.floor_value();
    r.feasible = chi <= bound;
    r.margin = bound - chi;
    return r;
}

double runtime_estimate(double gate_count, double gate_rate_hz,
                        double parallelism) {
    if (!(gate_count > 0.0))
        throw std::invalid_argument(
            "runtime_estimate: gate_count must be > 0");
    if (!(gate_rate_hz > 0.0))
        throw std::invalid_argument(
            "runtime_estimate: gate_rate_hz must be > 0");
    if (!(parallelism >= 1.0))
        throw std::invalid_argument(
            "runtime_estimate: parallelism must be >= 1");
    return gate_count / (gate_rate_hz * parallelism);
}

const char* limit_method_name(LimitMethod method) {
    switch (method) {
        case LimitMethod::ClosedForm: return "closed_form";
        case LimitMethod::CumulativeLiteral: return "cumulative_literal";
        case LimitMethod::CumulativeEnvelope: return "cumulative_envelope";
        case LimitMethod::ExactPeak: return "exact_peak";
        case LimitMethod::PerPeriod: return "per_period";
    }
    return "unknown";
}

}  // namespace rabilimit
