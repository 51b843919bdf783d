#pragma once

// Independent recomputation routes for the expected values frozen in the
// test suite. Everything here deliberately avoids the library's own
// algorithms: log weights come from plain log accumulation instead of the
// saddle-point form, series sums are untruncated long double, and counting
// results come from brute force or algebraic inversion.

#include <cstdint>

#include "rabilimit/rabi_series.hpp"

namespace oracle {

// log of the Poisson weight via sum_{k=1..n} log(nbar / k) - nbar.
long double poisson_log_weight_by_sum(std::uint64_t n, long double nbar);

// Poisson mass inside [lo, hi], one long-double pass over 0..hi.
long double poisson_mass(std::uint64_t lo, std::uint64_t hi, long double nbar);

// Poisson mass outside the window, summed term by term on both sides.
long double poisson_tail_mass(const rabilimit::TruncationWindow& window,
                              long double nbar);

// W(tau) summed over every photon number with non-negligible weight.
long double w_series_full(double tau, double nbar);

// Largest N whose cumulative per-period losses stay within p_th;
// brute-force long-double partial sums of tau_i^2 / 2 or 1 - envelope.
std::int64_t cumulative_literal_count(double nbar, double p_th);
std::int64_t cumulative_envelope_count(double nbar, double p_th);

// Largest N passing the single-period criterion, by inverting the
// envelope algebraically and then verifying the boundary directly.
std::int64_t per_period_count_by_inversion(double nbar, double p_th);

}  // namespace oracle
