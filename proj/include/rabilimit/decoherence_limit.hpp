#pragma once

#include <cstdint>
#include <stdexcept>

#include "rabilimit/constants.hpp"

namespace rabilimit {

enum class LimitMethod {
    ClosedForm,          // cube-root formula, real-valued
    CumulativeLiteral,   // accumulate tau_i^2 / 2 per period
    CumulativeEnvelope,  // accumulate 1 - gauss_envelope(tau_i)
    ExactPeak,           // accumulate 1 - |nearest series peak|
    PerPeriod,           // single-period criterion, no accumulation
};

enum class LossModel { Literal, Envelope, Exact };

// One estimate of how many oscillation periods fit before the accumulated
// amplitude loss crosses p_th. ClosedForm keeps the real-valued bound;
// every other method already stores an integer count.
struct LimitEstimate {
    LimitMethod method;
    double value;
    double nbar;
    double p_th;

    std::int64_t floor_value() const;
};

struct FeasibilityReport {
    std::int64_t chi;
    LimitEstimate limit;
    bool feasible;        // chi <= floor of the limit
    std::int64_t margin;  // floor(limit) - chi, negative when infeasible
};

// Thrown by the exact-peak loss model when a period bracket contains no
// interior maximum of |W|.
class BracketingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// (6 (nbar + 1) p_th / pi^2)^(1/3).
double n_chi_closed_form(double nbar, double p_th);

// Largest N such that the losses of periods 1..N sum to at most p_th.
// Requires 0 <= p_th < 1 so that accumulation terminates.
std::int64_t n_chi_cumulative(double nbar, double p_th, LossModel model,
                              double tail_tol = kDefaultTailTol);

// Largest N whose N-th period alone still loses at most p_th of the
// envelope. No accumulation across periods.
std::int64_t n_chi_per_period(double nbar, double p_th);

LimitEstimate estimate_limit(double nbar, double p_th, LimitMethod method,
                             double tail_tol = kDefaultTailTol);

// chi: gates demanded of the busiest qubit in one error-correction period.
FeasibilityReport feasibility(std::int64_t chi, double nbar, double p_th,
                              LimitMethod method,
                              double tail_tol = kDefaultTailTol);

// Wall-clock seconds for gate_count gates at gate_rate_hz with the given
// degree of parallelism (>= 1).
double runtime_estimate(double gate_count, double gate_rate_hz,
                        double parallelism);

const char* limit_method_name(LimitMethod method);

}  // namespace rabilimit
