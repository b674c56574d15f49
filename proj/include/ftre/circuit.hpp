#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ftre/errors.hpp"

namespace ftre {

// ---------------------------------------------------------------------------
// Clifford+T gate set. CX is the only two-qubit kind.
// ---------------------------------------------------------------------------

enum class GateKind : std::uint8_t { H, S, Sdg, T, Tdg, X, Y, Z, CX };

inline constexpr bool is_two_qubit(GateKind k) { return k == GateKind::CX; }

inline constexpr bool is_t_like(GateKind k) {
    return k == GateKind::T || k == GateKind::Tdg;
}

inline constexpr const char* gate_name(GateKind k) {
    switch (k) {
        case GateKind::H:   return "H";
        case GateKind::S:   return "S";
        case GateKind::Sdg: return "SDG";
        case GateKind::T:   return "T";
        case GateKind::Tdg: return "TDG";
        case GateKind::X:   return "X";
        case GateKind::Y:   return "Y";
        case GateKind::Z:   return "Z";
        case GateKind::CX:  return "CX";
    }
    return "?";
}

inline std::optional<GateKind> gate_from_name(std::string_view token) {
    std::string up(token);
    std::transform(up.begin(), up.end(), up.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (up == "H")   return GateKind::H;
    if (up == "S")   return GateKind::S;
    if (up == "SDG") return GateKind::Sdg;
    if (up == "T")   return GateKind::T;
    if (up == "TDG") return GateKind::Tdg;
    if (up == "X")   return GateKind::X;
    if (up == "Y")   return GateKind::Y;
    if (up == "Z")   return GateKind::Z;
    if (up == "CX")  return GateKind::CX;
    return std::nullopt;
}

struct Gate {
    GateKind kind;
    std::uint32_t q0 = 0;
    std::uint32_t q1 = 0;  // second operand, CX only

    bool touches(std::uint32_t q) const {
        return q0 == q || (is_two_qubit(kind) && q1 == q);
    }
    friend bool operator==(const Gate&, const Gate&) = default;
};

struct LogicalCircuit {
    std::uint32_t qubit_count = 0;
    std::vector<Gate> gates;

    friend bool operator==(const LogicalCircuit&, const LogicalCircuit&) = default;
};

// ---------------------------------------------------------------------------
// Gate-list text format.
//
//   # comment
//   qubits <N>
//   <GATE> <q>        single-qubit gates: H S SDG T TDG X Y Z
//   CX <q1> <q2>
//
// Tokens are case-insensitive; '#' starts a comment anywhere on a line.
// ---------------------------------------------------------------------------

inline LogicalCircuit parse_circuit(std::string_view text) {
    LogicalCircuit circuit;
    bool have_header = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;

    auto fail = [&](const std::string& msg) -> void {
        throw parse_error("line " + std::to_string(line_no) + ": " + msg);
    };

    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;

        if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);

        std::vector<std::string> tokens;
        std::istringstream split{std::string(line)};
        for (std::string tok; split >> tok;) tokens.push_back(tok);
        if (tokens.empty()) continue;

        auto parse_qubit = [&](const std::string& tok) -> std::uint32_t {
            std::size_t used = 0;
            unsigned long v = 0;
            try {
                v = std::stoul(tok, &used);
            } catch (const std::exception&) {
                fail("expected qubit index, got '" + tok + "'");
            }
            if (used != tok.size()) fail("expected qubit index, got '" + tok + "'");
            if (v >= circuit.qubit_count)
                fail("qubit index " + tok + " out of range (circuit has " +
                     std::to_string(circuit.qubit_count) + " qubits)");
            return static_cast<std::uint32_t>(v);
        };

        if (!have_header) {
            std::string kw = tokens[0];
            std::transform(kw.begin(), kw.end(), kw.begin(),
                           [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
            if (kw != "qubits" || tokens.size() != 2)
                fail("expected header 'qubits <N>'");
            unsigned long n = 0;
            try {
                std::size_t used = 0;
                n = std::stoul(tokens[1], &used);
                if (used != tokens[1].size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                fail("invalid qubit count '" + tokens[1] + "'");
            }
            if (n == 0) fail("qubit count must be positive");
            circuit.qubit_count = static_cast<std::uint32_t>(n);
            have_header = true;
            continue;
        }

        auto kind = gate_from_name(tokens[0]);
        if (!kind) fail("unknown gate '" + tokens[0] + "'");
        if (is_two_qubit(*kind)) {
            if (tokens.size() != 3) fail("CX takes exactly two qubit operands");
            Gate g{*kind, parse_qubit(tokens[1]), parse_qubit(tokens[2])};
            if (g.q0 == g.q1) fail("CX operands must be distinct");
            circuit.gates.push_back(g);
        } else {
            if (tokens.size() != 2)
                fail(std::string(gate_name(*kind)) + " takes exactly one qubit operand");
            circuit.gates.push_back(Gate{*kind, parse_qubit(tokens[1]), 0});
        }
    }

    if (!have_header) throw parse_error("missing 'qubits <N>' header");
    return circuit;
}

inline std::string write_circuit(const LogicalCircuit& circuit) {
    std::string out = "qubits " + std::to_string(circuit.qubit_count) + "\n";
    for (const Gate& g : circuit.gates) {
        out += gate_name(g.kind);
        out += ' ';
        out += std::to_string(g.q0);
        if (is_two_qubit(g.kind)) {
            out += ' ';
            out += std::to_string(g.q1);
        }
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------
// Same-qubit precedence DAG. Edge (i, j) iff gates i and j share a qubit,
// i < j, and no gate in between touches that qubit.
// ---------------------------------------------------------------------------

struct DependencyDag {
    std::vector<std::vector<std::uint32_t>> succs;
    std::vector<std::vector<std::uint32_t>> preds;

    std::size_t node_count() const { return succs.size(); }
    std::size_t edge_count() const {
        std::size_t n = 0;
        for (const auto& s : succs) n += s.size();
        return n;
    }
};

inline DependencyDag build_dag(const LogicalCircuit& circuit) {
    DependencyDag dag;
    dag.succs.resize(circuit.gates.size());
    dag.preds.resize(circuit.gates.size());
    std::vector<std::int64_t> last(circuit.qubit_count, -1);

    for (std::uint32_t i = 0; i < circuit.gates.size(); ++i) {
        const Gate& g = circuit.gates[i];
        std::uint32_t qs[2] = {g.q0, g.q1};
        int nq = is_two_qubit(g.kind) ? 2 : 1;
        for (int k = 0; k < nq; ++k) {
            std::int64_t p = last[qs[k]];
            if (p >= 0) {
                auto& out = dag.succs[static_cast<std::size_t>(p)];
                if (out.empty() || out.back() != i) {  // dedupe CX-CX double edges
                    out.push_back(i);
                    dag.preds[i].push_back(static_cast<std::uint32_t>(p));
                }
            }
            last[qs[k]] = i;
        }
    }
    return dag;
}

// ---------------------------------------------------------------------------
// Logical-layer resource estimates. Counts are occurrence-weighted totals:
// a summary for a sub-circuit repeated n times carries n-fold gate, T and
// depth counts, so rows can be tallied directly into whole-algorithm totals.
// The CNOT gate contributes doubly to num_gates.
// ---------------------------------------------------------------------------

struct CircuitSummary {
    std::string name;
    double occurrences = 1.0;
    double num_lq = 0.0;
    double num_gates = 0.0;
    double num_t = 0.0;
    double depth = 0.0;
    double density = 0.0;
    double t_fraction = 0.0;
};

/// density = num_gates / (num_lq * depth), t_fraction = num_t / num_gates.
/// Throws on a zero denominator.
inline std::pair<double, double> derive_metrics(double num_gates, double num_lq,
                                                double depth, double num_t) {
    if (num_lq <= 0.0 || depth <= 0.0)
        throw std::invalid_argument("derive_metrics: num_lq and depth must be positive");
    if (num_gates <= 0.0)
        throw std::invalid_argument("derive_metrics: num_gates must be positive");
    return {num_gates / (num_lq * depth), num_t / num_gates};
}

/// ASAP layer count: each gate enters the earliest layer in which all of its
/// operand qubits are free; a CX occupies one layer on both operands.
inline std::uint64_t asap_depth(const LogicalCircuit& circuit) {
    std::vector<std::uint64_t> next_free(circuit.qubit_count, 0);
    std::uint64_t depth = 0;
    for (const Gate& g : circuit.gates) {
        std::uint64_t layer = next_free[g.q0];
        if (is_two_qubit(g.kind)) layer = std::max(layer, next_free[g.q1]);
        next_free[g.q0] = layer + 1;
        if (is_two_qubit(g.kind)) next_free[g.q1] = layer + 1;
        depth = std::max(depth, layer + 1);
    }
    return depth;
}

inline CircuitSummary compute_lre(const LogicalCircuit& circuit, double occurrences = 1.0) {
    CircuitSummary s;
    s.occurrences = occurrences;
    s.num_lq = circuit.qubit_count;

    double gates = 0.0, t = 0.0;
    for (const Gate& g : circuit.gates) {
        gates += is_two_qubit(g.kind) ? 2.0 : 1.0;
        if (is_t_like(g.kind)) t += 1.0;
    }
    double depth = static_cast<double>(asap_depth(circuit));

    s.num_gates = occurrences * gates;
    s.num_t = occurrences * t;
    s.depth = occurrences * depth;
    if (!circuit.gates.empty()) {
        auto [density, t_fraction] = derive_metrics(s.num_gates, s.num_lq, s.depth, s.num_t);
        s.density = density;
        s.t_fraction = t_fraction;
    }
    return s;
}

}  // namespace ftre
