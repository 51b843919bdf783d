#pragma once

namespace rabilimit {

// Collapse envelope exp(-nbar tau^2 / (2 (nbar + 1))) of the coherent-state
// Rabi signal, in scaled time tau = g t. Accepts nbar >= 0 (vacuum allowed).
double gauss_envelope(double tau, double nbar);

// Mean-frequency approximation of the full signal:
//   cos(2 sqrt(nbar + 1) tau) * gauss_envelope(tau, nbar).
// The approximation is derived for tau < sqrt(nbar); the function still
// evaluates outside that range, use w_envelope_in_domain to check.
double w_envelope(double tau, double nbar);
bool w_envelope_in_domain(double tau, double nbar);

// Angular frequency 2 sqrt(nbar + 1) of the oscillation, per unit tau.
double rabi_angular_frequency(double nbar);

// One oscillation period pi / sqrt(nbar + 1), in tau.
double rabi_period(double nbar);

// How many mean-frequency periods fit into a tau interval of length tau_len.
double periods_in_interval(double nbar, double tau_len);

}  // namespace rabilimit
