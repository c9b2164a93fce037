#include "graphcode/graphstate.hpp"

#include <deque>
#include <set>
#include <stdexcept>

namespace graphcode {

std::string gate_name(LocalGate gate) {
    return gate == LocalGate::SqrtMinusIX ? "sqrt(-iX)" : "sqrt(iZ)";
}

GraphState::GraphState(SimpleGraph g) : graph_(std::move(g)) {
    const std::size_t n = graph_.vertex_count();
    generators_.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        BinaryVector x(n);
        x.set(j, true);
        BinaryVector z = graph_.adjacency().row(j);
        generators_.emplace_back(std::move(x), std::move(z), 0);
    }
}

LocalCliffordOp lc_operator(const SimpleGraph& g, std::size_t v) {
    if (v >= g.vertex_count()) throw std::out_of_range("vertex index out of range");
    std::vector<GateFactor> factors;
    factors.push_back({v, LocalGate::SqrtMinusIX});
    for (std::size_t b : g.neighborhood(v)) factors.push_back({b, LocalGate::SqrtPlusIZ});
    return LocalCliffordOp(std::move(factors));
}

PauliImage conjugate_single(LocalGate gate, bool x, bool z) {
    // Index (x << 1) | z over {I, Z, X, XZ}. Derived once from the 2x2
    // matrices: sqrt(-iX) sends Z to -Y = i^3 XZ and XZ to -iZ;
    // sqrt(iZ) sends X to -Y and XZ to -iX.
    static constexpr PauliImage kSqrtMinusIX[4] = {
        {false, false, 0},  // I  -> I
        {true, true, 3},    // Z  -> -Y
        {true, false, 0},   // X  -> X
        {false, true, 3},   // XZ -> -iZ
    };
    static constexpr PauliImage kSqrtPlusIZ[4] = {
        {false, false, 0},  // I  -> I
        {false, true, 0},   // Z  -> Z
        {true, true, 3},    // X  -> -Y
        {true, false, 3},   // XZ -> -iX
    };
    const std::size_t idx = (static_cast<std::size_t>(x) << 1) | static_cast<std::size_t>(z);
    return gate == LocalGate::SqrtMinusIX ? kSqrtMinusIX[idx] : kSqrtPlusIZ[idx];
}

PauliOperator conjugate_pauli(PauliOperator p, const LocalCliffordOp& op) {
    BinaryVector x = p.x();
    BinaryVector z = p.z();
    unsigned phase = p.phase();
    // (f1 f2) p (f1 f2)^dag applies f2's conjugation first.
    const auto& factors = op.factors();
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        if (it->qubit >= p.size()) throw std::out_of_range("gate qubit out of range");
        const PauliImage image = conjugate_single(it->gate, x.get(it->qubit), z.get(it->qubit));
        x.set(it->qubit, image.x);
        z.set(it->qubit, image.z);
        phase = (phase + image.phase) % 4;
    }
    return PauliOperator(std::move(x), std::move(z), phase);
}

std::vector<PauliOperator> conjugate_generators(const GraphState& state,
                                                const LocalCliffordOp& op) {
    std::vector<PauliOperator> out;
    out.reserve(state.generators().size());
    for (const auto& gen : state.generators()) out.push_back(conjugate_pauli(gen, op));
    return out;
}

OrbitResult lc_orbit(const SimpleGraph& g, std::size_t max_size) {
    OrbitResult result;
    if (max_size == 0) {
        result.truncated = true;
        return result;
    }
    std::set<std::string> seen;
    std::deque<SimpleGraph> frontier;
    seen.insert(to_graph6(g));
    result.graphs.push_back(g);
    frontier.push_back(g);
    while (!frontier.empty()) {
        const SimpleGraph current = std::move(frontier.front());
        frontier.pop_front();
        for (std::size_t v = 0; v < current.vertex_count(); ++v) {
            SimpleGraph next = local_complement(current, v);
            if (!seen.insert(to_graph6(next)).second) continue;
            if (result.graphs.size() == max_size) {
                result.truncated = true;
                return result;
            }
            result.graphs.push_back(next);
            frontier.push_back(std::move(next));
        }
    }
    return result;
}

}  // namespace graphcode
