#pragma once

#include <iosfwd>

#include "rabilimit/rabi_series.hpp"

namespace rabilimit {

// Header line tau,w_exact,w_envelope,gauss_envelope, then one row per
// sample. Values are written with 17 significant digits so a rewrite of
// the same trace is byte-identical.
void write_trace_csv(std::ostream& out, const RabiTrace& trace);

}  // namespace rabilimit
