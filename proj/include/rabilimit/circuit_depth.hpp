#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rabilimit {

// One gate application. Gate names carry no semantics here and are stored
// lowercase; qubit names are case-sensitive and unique per instruction.
struct Instruction {
    std::string gate_name;
    std::vector<std::string> qubits;

    bool operator==(const Instruction&) const = default;
};

// Gate list partitioned into error-correction periods. qubit_names keeps
// first-use order and every qubit referenced by an instruction is in it.
struct Circuit {
    std::vector<std::string> qubit_names;
    std::vector<std::vector<Instruction>> periods;  // never empty

    bool operator==(const Circuit&) const = default;
};

// Per-period, per-qubit gate counts. chi is the overall maximum; the argmax
// fields identify where it occurs, earliest period first and then smallest
// qubit name. A circuit without qubits reports chi = 0 and an empty argmax.
struct DepthReport {
    std::vector<std::map<std::string, std::int64_t>> per_period_per_qubit;
    std::int64_t chi = 0;
    std::size_t argmax_period = 0;
    std::string argmax_qubit;
};

class CircuitParseError : public std::runtime_error {
public:
    CircuitParseError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Line-oriented text format:
//   # comment (also allowed at end of line)
//   qubits <name> [<name> ...]
//   gate <name> <qubit> [<qubit> ...]
//   period
// Names match [A-Za-z0-9_]+. Directives are case-insensitive; qubit names
// are not. Unknown directives, malformed lines, and a duplicated qubit
// within one instruction raise CircuitParseError with the line number.
Circuit parse_circuit(std::string_view text);

// Canonical text form: one qubits line, gates in order, bare period
// separators. parse_circuit(serialize_circuit(c)) == c.
std::string serialize_circuit(const Circuit& circuit);

// Counts every incidence: a qubit is busy in a gate whether it is the
// first operand or the last.
DepthReport logical_depth(const Circuit& circuit);

}  // namespace rabilimit
