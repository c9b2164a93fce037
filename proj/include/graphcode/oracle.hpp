#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "graphcode/graph.hpp"
#include "graphcode/graphcode.hpp"
#include "graphcode/graphstate.hpp"
#include "graphcode/pauli.hpp"

namespace graphcode {

// Dense complex statevector over 2^n basis states. Qubit 0 is the leftmost
// position of a Pauli string and the most significant bit of a basis index,
// so |q0 q1 ... q_{n-1}> sits at index q0*2^(n-1) + ... + q_{n-1}.
//
// Everything in this module is an independent reference implementation: it
// never consults the symbolic tableau path it is used to check.
class StateVector {
public:
    StateVector() = default;

    static StateVector from_amplitudes(std::size_t n, std::vector<std::complex<double>> amps,
                                       bool normalized = true);
    static StateVector computational_basis(std::size_t n, std::size_t index);

    std::size_t qubit_count() const { return n_; }
    const std::vector<std::complex<double>>& amplitudes() const { return amps_; }
    std::complex<double> amplitude(std::size_t index) const { return amps_[index]; }

    double norm() const;
    bool is_normalized() const { return normalized_; }
    StateVector normalized() const;  // throws on (near-)zero norm

private:
    friend StateVector build_graph_state(const SimpleGraph& g);
    friend StateVector apply_pauli(const StateVector& s, const PauliOperator& p);
    friend StateVector apply_local_clifford(const StateVector& s, const LocalCliffordOp& op);
    friend class Simulator;

    std::size_t n_ = 0;
    std::vector<std::complex<double>> amps_;
    bool normalized_ = false;
};

// |<a|b>|.
double fidelity(const StateVector& a, const StateVector& b);

// max_i |a_i - b_i|; sign-sensitive, unlike fidelity.
double max_amplitude_diff(const StateVector& a, const StateVector& b);

// True iff p s = s within tol in the max norm (checks the eigenvalue sign,
// which fidelity alone cannot).
bool is_plus_one_eigenstate(const StateVector& s, const PauliOperator& p, double tol = 1e-10);

// |G> = prod CZ^(Gamma[i,j]) |+>^n; every amplitude is +-2^(-n/2).
StateVector build_graph_state(const SimpleGraph& g);

StateVector apply_pauli(const StateVector& s, const PauliOperator& p);

StateVector apply_local_clifford(const StateVector& s, const LocalCliffordOp& op);

// prod_i (I + (-1)^(outcomes_i) Zbar_i)/2 applied to s, then normalized.
// Throws "empty sector" when the projection annihilates the state.
StateVector project_logical(const StateVector& s, std::span<const PauliOperator> logical_z,
                            const BinaryVector& outcomes);

// Measurement handling for the teleportation circuits: either force every
// ancilla outcome to 0 (valid because the outcomes are uniformly likely;
// checked at runtime) or sample by the Born rule from a seeded generator.
struct OutcomePolicy {
    enum class Kind { ForceZero, Random };
    Kind kind = Kind::ForceZero;
    std::uint64_t seed = 0;

    static OutcomePolicy force_zero() { return {}; }
    static OutcomePolicy random(std::uint64_t seed) { return {Kind::Random, seed}; }
};

// Teleportation-like encoder: |c1..ck> (x) |G>, Hadamards on the ancillas,
// CZ per B entry, Hadamards again, ancilla measurement, then the logical X
// correction on the data qubits.
struct EncodeResult {
    StateVector state;      // n-qubit codeword
    BinaryVector measured;  // ancilla outcomes before correction
};
EncodeResult encode_teleport(const SimpleGraph& g, const BinaryMatrix& b,
                             const BinaryVector& info_bits,
                             const OutcomePolicy& policy = OutcomePolicy::force_zero());

// Logical-qubit conversion through the graph states: decode |c>_L back to
// |G1> (ancilla-controlled Xbar, Hadamards, measurement, conditional Zbar),
// apply U_v(G1), then project with the tau_v(G1) code's logical Zs. The
// second code uses the echelon kernel basis of tau_v(G1) at the same k.
struct TransportResult {
    StateVector state;  // n-qubit codeword of code2
    GraphCode code2;
};
TransportResult lc_transport(const GraphCode& code1, std::size_t v, const BinaryVector& info_bits,
                             const OutcomePolicy& policy = OutcomePolicy::force_zero());

}  // namespace graphcode
