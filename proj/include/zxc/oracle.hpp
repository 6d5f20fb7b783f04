#pragma once

#include <vector>

#include "zxc/circuit.hpp"
#include "zxc/common.hpp"
#include "zxc/zx_diagram.hpp"

namespace zxc {

// Brute-force references used to check every rewrite and the full pipeline.
// Deliberately simple and independent of the contraction engine.

constexpr size_t ORACLE_DEFAULT_LIMIT = 22;

// 2x2 / 4x4 gate matrices (row-major, basis order |q1 q2>).
Mat2 gate_matrix_1q(GateKind k, const std::vector<double>& angles);
std::array<cplx, 16> gate_matrix_2q(GateKind k, const std::vector<double>& angles);

// <x|C|0...0> by dense statevector simulation. Qubit q maps to bit
// (n-1-q) of the state index, so x reads left to right as q = 0,1,...
cplx statevector_amplitude(const Circuit& c, const std::vector<bool>& x, size_t max_qubits = ORACLE_DEFAULT_LIMIT);

// Value of a closed ZX-diagram by exhaustive summation: one {0,1} value per
// spider, and per wire the factor H^k evaluated at its endpoint values,
// where k counts the wire's Hadamard flag plus one Hadamard conjugation per
// X-spider endpoint. Throws if the diagram has boundary ports or more than
// `max_spiders` spiders.
cplx eval_zx_diagram(const ZxDiagram& d, size_t max_spiders = ORACLE_DEFAULT_LIMIT);

}  // namespace zxc
