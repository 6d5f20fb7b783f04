#include "zxc/circuit.hpp"

#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "zxc/common.hpp"

namespace zxc {

namespace {

struct GateSpec {
    GateKind kind;
    int n_qubits;
    int n_angles;
};

const std::map<std::string, GateSpec>& gate_table() {
    static const std::map<std::string, GateSpec> table = {
        {"h", {GateKind::H, 1, 0}},      {"cnot", {GateKind::CNOT, 2, 0}},
        {"cz", {GateKind::CZ, 2, 0}},    {"rz", {GateKind::RZ, 1, 1}},
        {"rx", {GateKind::RX, 1, 1}},    {"sx", {GateKind::SX, 1, 0}},
        {"sy", {GateKind::SY, 1, 0}},    {"sw", {GateKind::SW, 1, 0}},
        {"fsim", {GateKind::FSIM, 2, 2}},
    };
    return table;
}

[[noreturn]] void fail(size_t line_no, const std::string& msg) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

const char* gate_name(GateKind k) {
    switch (k) {
        case GateKind::H: return "h";
        case GateKind::CNOT: return "cnot";
        case GateKind::CZ: return "cz";
        case GateKind::RZ: return "rz";
        case GateKind::RX: return "rx";
        case GateKind::SX: return "sx";
        case GateKind::SY: return "sy";
        case GateKind::SW: return "sw";
        case GateKind::FSIM: return "fsim";
    }
    return "?";
}

Circuit parse_circuit(const std::string& text) {
    Circuit c;
    std::istringstream in(text);
    std::string line;
    size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;  // blank line

        if (!header_seen) {
            if (head != "qubits") fail(line_no, "expected 'qubits <n>' header, got '" + head + "'");
            long long n = -1;
            if (!(ls >> n) || n < 1) fail(line_no, "qubit count must be a positive integer");
            std::string extra;
            if (ls >> extra) fail(line_no, "trailing token '" + extra + "' after qubit count");
            c.n_qubits = static_cast<uint32_t>(n);
            header_seen = true;
            continue;
        }

        auto it = gate_table().find(head);
        if (it == gate_table().end()) fail(line_no, "unknown gate '" + head + "'");
        const GateSpec& spec = it->second;

        Gate g;
        g.kind = spec.kind;
        for (int i = 0; i < spec.n_qubits; ++i) {
            long long q = -1;
            if (!(ls >> q)) fail(line_no, std::string(head) + " expects " + std::to_string(spec.n_qubits) + " qubit(s)");
            if (q < 0 || q >= static_cast<long long>(c.n_qubits))
                fail(line_no, "qubit " + std::to_string(q) + " out of range [0, " + std::to_string(c.n_qubits) + ")");
            g.qubits.push_back(static_cast<uint32_t>(q));
        }
        if (g.qubits.size() == 2 && g.qubits[0] == g.qubits[1])
            fail(line_no, std::string(head) + " needs two distinct qubits");
        for (int i = 0; i < spec.n_angles; ++i) {
            double a = 0;
            if (!(ls >> a)) fail(line_no, std::string(head) + " expects " + std::to_string(spec.n_angles) + " angle(s)");
            g.angles.push_back(a);
        }
        std::string extra;
        if (ls >> extra) fail(line_no, "trailing token '" + extra + "'");
        c.gates.push_back(std::move(g));
    }
    if (!header_seen) throw std::runtime_error("line 1: missing 'qubits <n>' header");
    return c;
}

std::string circuit_to_text(const Circuit& c) {
    std::ostringstream out;
    out << "qubits " << c.n_qubits << "\n";
    for (const Gate& g : c.gates) {
        out << gate_name(g.kind);
        for (uint32_t q : g.qubits) out << ' ' << q;
        char buf[32];
        for (double a : g.angles) {
            snprintf(buf, sizeof buf, " %.17g", a);
            out << buf;
        }
        out << "\n";
    }
    return out.str();
}

Circuit random_grid_circuit(uint32_t rows, uint32_t cols, uint32_t depth, uint64_t seed) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("grid must have at least one qubit");
    Circuit c;
    c.n_qubits = rows * cols;
    std::mt19937_64 rng(seed);
    auto uniform = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1p-53; };
    auto qubit = [cols](uint32_t r, uint32_t cc) { return r * cols + cc; };

    // Four edge patterns, cycled by layer; row-major within a pattern.
    auto pattern_edges = [&](uint32_t p) {
        std::vector<std::pair<uint32_t, uint32_t>> es;
        if (p == 0 || p == 1) {
            for (uint32_t r = 0; r < rows; ++r)
                for (uint32_t cc = p; cc + 1 < cols; cc += 2)
                    es.emplace_back(qubit(r, cc), qubit(r, cc + 1));
        } else {
            for (uint32_t r = p - 2; r + 1 < rows; r += 2)
                for (uint32_t cc = 0; cc < cols; ++cc)
                    es.emplace_back(qubit(r, cc), qubit(r + 1, cc));
        }
        return es;
    };

    static const GateKind one_q[3] = {GateKind::SX, GateKind::SY, GateKind::SW};
    for (uint32_t layer = 0; layer < depth; ++layer) {
        for (uint32_t q = 0; q < c.n_qubits; ++q)
            c.gates.push_back({one_q[rng() % 3], {q}, {}});
        std::vector<std::pair<uint32_t, uint32_t>> edges;
        for (uint32_t k = 0; k < 4 && edges.empty(); ++k)
            edges = pattern_edges((layer + k) % 4);
        for (auto [a, b] : edges)
            c.gates.push_back({GateKind::FSIM, {a, b}, {2 * PI * uniform(), 2 * PI * uniform()}});
    }
    return c;
}

}  // namespace zxc
