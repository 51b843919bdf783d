#include "rabilimit/circuit_depth.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace rabilimit {

namespace {

bool valid_name(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_';
    });
}

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
    });
    return out;
}

std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) tokens.emplace_back(line.substr(start, i - start));
    }
    return tokens;
}

}  // namespace

CircuitParseError::CircuitParseError(std::size_t line,
                                     const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

Circuit parse_circuit(std::string_view text) {
    Circuit circuit;
    circuit.periods.emplace_back();
    std::unordered_set<std::string> known;
    const auto add_qubit = [&](const std::string& q) {
        if (known.insert(q).second) circuit.qubit_names.push_back(q);
    };

    std::size_t line_no = 0;
    while (!text.empty() || line_no == 0) {
        const std::size_t nl = text.find('\n');
        std::string_view line =
            nl == std::string_view::npos ? text : text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{}
                                            : text.substr(nl + 1);
        ++line_no;

        if (const std::size_t hash = line.find('#');
            hash != std::string_view::npos)
            line = line.substr(0, hash);
        const std::vector<std::string> tokens = tokenize(line);
        if (tokens.empty()) continue;

        const std::string head = to_lower(tokens[0]);
        if (head == "qubits") {
            if (tokens.size() < 2)
                throw CircuitParseError(line_no,
                                        "qubits needs at least one name");
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                if (!valid_name(tokens[i]))
                    throw CircuitParseError(
                        line_no, "bad qubit name '" + tokens[i] + "'");
                add_qubit(tokens[i]);
            }
        } else if (head == "gate") {
            if (tokens.size() < 3)
                throw CircuitParseError(
                    line_no, "gate needs a name and at least one qubit");
            if (!valid_name(tokens[1]))
                throw CircuitParseError(line_no,
                                        "bad gate name '" + tokens[1] + "'");
            Instruction ins;
            ins.gate_name = to_lower(tokens[1]);
            std::unordered_set<std::string_view> seen;
            for (std::size_t i = 2; i < tokens.size(); ++i) {
                if (!valid_name(tokens[i]))
                    throw CircuitParseError(
                        line_no, "bad qubit name '" + tokens[i] + "'");
                if (!seen.insert(tokens[i]).second)
                    throw CircuitParseError(
                        line_no, "duplicate qubit '" + tokens[i] +
                                     "' in one instruction");
                add_qubit(tokens[i]);
                ins.qubits.push_back(tokens[i]);
            }
            circuit.periods.back().push_back(std::move(ins));
        } else if (head == "period") {
            if (tokens.size() != 1)
                throw CircuitParseError(line_no,
                                        "period takes no arguments");
            circuit.periods.emplace_back();
        } else {
            throw CircuitParseError(line_no,
                                    "unknown directive '" + tokens[0] + "'");
        }
    }
    return circuit;
}

std::string serialize_circuit(const Circuit& circuit) {
    std::string out;
    if (!circuit.qubit_names.empty()) {
        out += "qubits";
        for (const auto& q : circuit.qubit_names) {
            out += ' ';
            out += q;
        }
        out += '\n';
    }
    for (std::size_t p = 0; p < circuit.periods.size(); ++p) {
        if (p > 0) out += "period\n";
        for (const auto& ins : circuit.periods[p]) {
            out += "gate ";
            out += ins.gate_name;
            for (const auto& q : ins.qubits) {
                out += ' ';
                out += q;
            }
            out += '\n';
        }
    }
    return out;
}

DepthReport logical_depth(const Circuit& circuit) {
    DepthReport report;
    report.per_period_per_qubit.resize(circuit.periods.size());
    for (auto& row : report.per_period_per_qubit)
        for (const auto& q : circuit.qubit_names) row[q] = 0;

    for (std::size_t p = 0; p < circuit.periods.size(); ++p)
        for (const auto& ins : circuit.periods[p])
            for (const auto& q : ins.qubits)
                ++report.per_period_per_qubit[p][q];

    // Ties resolve to the earliest period and then the smallest qubit name,
    // which is exactly scan order over the sorted per-period maps.
    if (!circuit.qubit_names.empty()) {
        report.argmax_period = 0;
        report.argmax_qubit = report.per_period_per_qubit[0].begin()->first;
    }
    for (std::size_t p = 0; p < report.per_period_per_qubit.size(); ++p) {
        for (const auto& [qubit, ops] : report.per_period_per_qubit[p]) {
            if (ops > report.chi) {
                report.chi = ops;
                report.argmax_period = p;
                report.argmax_qubit = qubit;
            }
        }
    }
    return report;
}

}  // namespace rabilimit
