#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "rabilimit/rabi_series.hpp"
#include "rabilimit/trace_csv.hpp"

using namespace rabilimit;

namespace {

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> lines;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

}  // namespace

TEST_CASE("csv layout: header plus one row per sample") {
    const RabiTrace trace = sample_trace(100.0, 0.5, 17);
    std::ostringstream out;
    write_trace_csv(out, trace);

    const auto lines = lines_of(out.str());
    REQUIRE(lines.size() == 18);
    CHECK(lines[0] == "tau,w_exact,w_envelope,gauss_envelope");
    for (std::size_t i = 1; i < lines.size(); ++i)
        CHECK(split_csv(lines[i]).size() == 4);
}

TEST_CASE("csv values round-trip to the exact doubles") {
    const RabiTrace trace = sample_trace(1e4, 1.0, 64);
    std::ostringstream out;
    write_trace_csv(out, trace);

    const auto lines = lines_of(out.str());
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto fields = split_csv(lines[i]);
        const std::size_t s = i - 1;
        CHECK(std::strtod(fields[0].c_str(), nullptr) == trace.tau_values[s]);
        CHECK(std::strtod(fields[1].c_str(), nullptr) == trace.w_exact[s]);
        CHECK(std::strtod(fields[2].c_str(), nullptr) == trace.w_envelope[s]);
        CHECK(std::strtod(fields[3].c_str(), nullptr) ==
              trace.gauss_envelope[s]);
    }
}

TEST_CASE("rewriting the same trace is byte-identical") {
    const RabiTrace trace = sample_trace(316.0, 2.0, 33);
    std::ostringstream a, b;
    write_trace_csv(a, trace);
    write_trace_csv(b, trace);
    CHECK(a.str() == b.str());
}
