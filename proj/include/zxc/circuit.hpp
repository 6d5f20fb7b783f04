#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace zxc {

enum class GateKind { H, CNOT, CZ, RZ, RX, SX, SY, SW, FSIM };

struct Gate {
    GateKind kind;
    std::vector<uint32_t> qubits;  // 1 or 2 entries, distinct
    std::vector<double> angles;    // radians; rz/rx: 1, fsim: 2, others: 0
};

struct Circuit {
    uint32_t n_qubits = 0;
    std::vector<Gate> gates;
};

const char* gate_name(GateKind k);

// Text format: first non-blank line "qubits <n>", then one gate per line:
// "<name> <q...> [<angle...>]". '#' starts a comment. Throws
// std::runtime_error with a line number on malformed input.
Circuit parse_circuit(const std::string& text);

std::string circuit_to_text(const Circuit& c);

// Random circuit on a rows x cols grid: per layer, one random gate from
// {sx, sy, sw} on every qubit, then fsim (random angles) on a cycling
// pattern of grid-adjacent pairs. If a layer's pattern has no edge on this
// grid, the next non-empty pattern is used instead, so every layer applies
// at least one fsim whenever the grid has an edge at all.
Circuit random_grid_circuit(uint32_t rows, uint32_t cols, uint32_t depth, uint64_t seed);

}  // namespace zxc
