#include "rabilimit/trace_csv.hpp"

#include <cstdio>
#include <ostream>

namespace rabilimit {

namespace {

void put(std::ostream& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << buf;
}

}  // namespace

void write_trace_csv(std::ostream& out, const RabiTrace& trace) {
    out << "tau,w_exact,w_envelope,gauss_envelope\n";
    for (std::size_t i = 0; i < trace.tau_values.size(); ++i) {
        put(out, trace.tau_values[i]);
        out << ',';
        put(out, trace.w_exact[i]);
        out << ',';
        put(out, trace.w_envelope[i]);
        out << ',';
        put(out, trace.gauss_envelope[i]);
        out << '\n';
    }
}

}  // namespace rabilimit
