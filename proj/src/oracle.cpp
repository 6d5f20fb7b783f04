#include "zxc/oracle.hpp"

#include <stdexcept>

namespace zxc {

namespace {

const cplx I_UNIT(0, 1);

Mat2 hadamard() { return {INV_SQRT2, INV_SQRT2, INV_SQRT2, -INV_SQRT2}; }

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

}  // namespace

Mat2 gate_matrix_1q(GateKind k, const std::vector<double>& angles) {
    switch (k) {
        case GateKind::H:
            return hadamard();
        case GateKind::RZ:
            return {1, 0, 0, expi(angles.at(0))};
        case GateKind::RX:
            return mat_mul(hadamard(), mat_mul(Mat2{1, 0, 0, expi(angles.at(0))}, hadamard()));
        case GateKind::SX:
            return {INV_SQRT2, -I_UNIT * INV_SQRT2, -I_UNIT * INV_SQRT2, INV_SQRT2};
        case GateKind::SY:
            return {INV_SQRT2, -INV_SQRT2, INV_SQRT2, INV_SQRT2};
        case GateKind::SW:
            // sqrt(i) and sqrt(-i) on their principal branches.
            return {INV_SQRT2, -expi(PI / 4) * INV_SQRT2, expi(-PI / 4) * INV_SQRT2, INV_SQRT2};
        default:
            throw std::invalid_argument("not a one-qubit gate");
    }
}

std::array<cplx, 16> gate_matrix_2q(GateKind k, const std::vector<double>& angles) {
    std::array<cplx, 16> m{};
    switch (k) {
        case GateKind::CNOT:
            m[0 * 4 + 0] = m[1 * 4 + 1] = m[2 * 4 + 3] = m[3 * 4 + 2] = 1;
            return m;
        case GateKind::CZ:
            m[0 * 4 + 0] = m[1 * 4 + 1] = m[2 * 4 + 2] = 1;
            m[3 * 4 + 3] = -1;
            return m;
        case GateKind::FSIM: {
            double theta = angles.at(0), phi = angles.at(1);
            m[0 * 4 + 0] = 1;
            m[1 * 4 + 1] = std::cos(theta);
            m[1 * 4 + 2] = -I_UNIT * std::sin(theta);
            m[2 * 4 + 1] = -I_UNIT * std::sin(theta);
            m[2 * 4 + 2] = std::cos(theta);
            m[3 * 4 + 3] = expi(-phi);
            return m;
        }
        default:
            throw std::invalid_argument("not a two-qubit gate");
    }
}

cplx statevector_amplitude(const Circuit& c, const std::vector<bool>& x, size_t max_qubits) {
    if (c.n_qubits > max_qubits)
        throw std::runtime_error("statevector oracle limited to " + std::to_string(max_qubits) + " qubits");
    if (x.size() != c.n_qubits)
        throw std::invalid_argument("bitstring length must equal qubit count");

    size_t dim = size_t(1) << c.n_qubits;
    std::vector<cplx> state(dim, 0.0);
    state[0] = 1.0;

    for (const Gate& g : c.gates) {
        if (g.qubits.size() == 1) {
            Mat2 m = gate_matrix_1q(g.kind, g.angles);
            size_t stride = size_t(1) << (c.n_qubits - 1 - g.qubits[0]);
            for (size_t base = 0; base < dim; ++base) {
                if (base & stride) continue;
                cplx a0 = state[base], a1 = state[base | stride];
                state[base] = m[0] * a0 + m[1] * a1;
                state[base | stride] = m[2] * a0 + m[3] * a1;
            }
        } else {
            auto m = gate_matrix_2q(g.kind, g.angles);
            size_t s1 = size_t(1) << (c.n_qubits - 1 - g.qubits[0]);
            size_t s2 = size_t(1) << (c.n_qubits - 1 - g.qubits[1]);
            for (size_t base = 0; base < dim; ++base) {
                if ((base & s1) || (base & s2)) continue;
                cplx a[4];
                for (int j = 0; j < 4; ++j)
                    a[j] = state[base | ((j & 2) ? s1 : 0) | ((j & 1) ? s2 : 0)];
                for (int i = 0; i < 4; ++i) {
                    cplx v = 0;
                    for (int j = 0; j < 4; ++j) v += m[i * 4 + j] * a[j];
                    state[base | ((i & 2) ? s1 : 0) | ((i & 1) ? s2 : 0)] = v;
                }
            }
        }
    }

    size_t idx = 0;
    for (uint32_t q = 0; q < c.n_qubits; ++q)
        if (x[q]) idx |= size_t(1) << (c.n_qubits - 1 - q);
    return state[idx];
}

cplx eval_zx_diagram(const ZxDiagram& d, size_t max_spiders) {
    if (!d.boundary.empty())
        throw std::invalid_argument("eval_zx_diagram needs a closed diagram");
    if (d.spiders.size() > max_spiders)
        throw std::runtime_error("eval_zx_diagram limited to " + std::to_string(max_spiders) + " spiders");

    std::map<NodeId, int> dense;
    std::vector<cplx> w0, w1;  // spider weight at value 0 / 1
    for (const auto& [id, s] : d.spiders) {
        dense[id] = static_cast<int>(w0.size());
        w0.push_back(1.0);
        w1.push_back(expi(s.phase));
    }

    struct WireFactor {
        int a, b;
        bool had;  // odd number of Hadamards on this wire after conjugation
    };
    std::vector<WireFactor> factors;
    for (const Wire& w : d.wires) {
        int k = w.hadamard;
        k += d.spiders.at(w.a).kind == SpiderKind::X;
        k += d.spiders.at(w.b).kind == SpiderKind::X;
        factors.push_back({dense[w.a], dense[w.b], (k % 2) != 0});
    }

    int n = static_cast<int>(w0.size());
    cplx total = 0;
    for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
        cplx term = 1.0;
        for (int v = 0; v < n && term != 0.0; ++v)
            term *= (mask >> v & 1) ? w1[v] : w0[v];
        if (term == 0.0) continue;
        for (const WireFactor& f : factors) {
            int sa = mask >> f.a & 1, sb = mask >> f.b & 1;
            if (f.had) {
                term *= (sa && sb) ? -INV_SQRT2 : INV_SQRT2;
            } else if (sa != sb) {
                term = 0;
                break;
            }
        }
        total += term;
    }
    return total * d.scalar;
}

}  // namespace zxc
