#include "graphcode/oracle.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace graphcode {

namespace {

constexpr std::size_t kMaxOracleQubits = 14;
constexpr double kTol = 1e-10;

using Complex = std::complex<double>;

Complex i_power(unsigned phase) {
    switch (phase % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

void check_size(std::size_t n) {
    if (n > kMaxOracleQubits) {
        throw std::domain_error("statevector oracle is limited to " +
                                std::to_string(kMaxOracleQubits) + " qubits");
    }
}

}  // namespace

StateVector StateVector::from_amplitudes(std::size_t n, std::vector<Complex> amps,
                                         bool normalized) {
    check_size(n);
    if (amps.size() != (std::size_t{1} << n)) {
        throw std::invalid_argument("amplitude count must be 2^n");
    }
    StateVector s;
    s.n_ = n;
    s.amps_ = std::move(amps);
    s.normalized_ = normalized;
    if (normalized && std::abs(s.norm() - 1.0) > kTol) {
        throw std::invalid_argument("amplitudes are not normalized");
    }
    return s;
}

StateVector StateVector::computational_basis(std::size_t n, std::size_t index) {
    check_size(n);
    std::vector<Complex> amps(std::size_t{1} << n, Complex{0, 0});
    amps.at(index) = Complex{1, 0};
    return from_amplitudes(n, std::move(amps));
}

double StateVector::norm() const {
    double total = 0;
    for (const auto& a : amps_) total += std::norm(a);
    return std::sqrt(total);
}

StateVector StateVector::normalized() const {
    const double length = norm();
    if (length < kTol) throw std::domain_error("empty sector: projection annihilated the state");
    StateVector out = *this;
    for (auto& a : out.amps_) a /= length;
    out.normalized_ = true;
    return out;
}

double fidelity(const StateVector& a, const StateVector& b) {
    if (a.qubit_count() != b.qubit_count()) {
        throw std::invalid_argument("statevector size mismatch in fidelity");
    }
    Complex overlap{0, 0};
    for (std::size_t i = 0; i < a.amplitudes().size(); ++i) {
        overlap += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
    }
    return std::abs(overlap);
}

double max_amplitude_diff(const StateVector& a, const StateVector& b) {
    if (a.qubit_count() != b.qubit_count()) {
        throw std::invalid_argument("statevector size mismatch");
    }
    double worst = 0;
    for (std::size_t i = 0; i < a.amplitudes().size(); ++i) {
        worst = std::max(worst, std::abs(a.amplitudes()[i] - b.amplitudes()[i]));
    }
    return worst;
}

bool is_plus_one_eigenstate(const StateVector& s, const PauliOperator& p, double tol) {
    return max_amplitude_diff(apply_pauli(s, p), s) <= tol;
}

StateVector build_graph_state(const SimpleGraph& g) {
    const std::size_t n = g.vertex_count();
    check_size(n);
    const std::size_t dim = std::size_t{1} << n;
    const double amp = std::pow(2.0, -static_cast<double>(n) / 2.0);

    StateVector s;
    s.n_ = n;
    s.normalized_ = true;
    s.amps_.assign(dim, Complex{amp, 0});
    for (std::size_t index = 0; index < dim; ++index) {
        unsigned sign = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!((index >> (n - 1 - i)) & 1u)) continue;
            for (std::size_t j = i + 1; j < n; ++j) {
                if (((index >> (n - 1 - j)) & 1u) && g.edge(i, j)) sign ^= 1u;
            }
        }
        if (sign) s.amps_[index] = -s.amps_[index];
    }
    return s;
}

StateVector apply_pauli(const StateVector& s, const PauliOperator& p) {
    if (p.size() != s.qubit_count()) {
        throw std::invalid_argument("Pauli size does not match the statevector");
    }
    const std::size_t n = s.qubit_count();
    std::size_t flip = 0;
    std::size_t zmask = 0;
    for (std::size_t q = 0; q < n; ++q) {
        if (p.x().get(q)) flip |= std::size_t{1} << (n - 1 - q);
        if (p.z().get(q)) zmask |= std::size_t{1} << (n - 1 - q);
    }
    const Complex global = i_power(p.phase());

    StateVector out;
    out.n_ = n;
    out.normalized_ = s.normalized_;
    out.amps_.assign(s.amps_.size(), Complex{0, 0});
    for (std::size_t index = 0; index < s.amps_.size(); ++index) {
        // Z acts first (the X-before-Z operator ordering), then X flips.
        const bool minus = std::popcount(index & zmask) & 1u;
        out.amps_[index ^ flip] = (minus ? -global : global) * s.amps_[index];
    }
    return out;
}

namespace {

// Apply a 2x2 matrix to one qubit of the register.
void apply_single_qubit(std::vector<Complex>& amps, std::size_t n, std::size_t q,
                        const Complex m[2][2]) {
    const std::size_t stride = std::size_t{1} << (n - 1 - q);
    for (std::size_t base = 0; base < amps.size(); base += 2 * stride) {
        for (std::size_t offset = 0; offset < stride; ++offset) {
            const std::size_t i0 = base + offset;
            const std::size_t i1 = i0 + stride;
            const Complex a0 = amps[i0];
            const Complex a1 = amps[i1];
            amps[i0] = m[0][0] * a0 + m[0][1] * a1;
            amps[i1] = m[1][0] * a0 + m[1][1] * a1;
        }
    }
}

void apply_hadamard(std::vector<Complex>& amps, std::size_t n, std::size_t q) {
    const double r = 1.0 / std::numbers::sqrt2;
    const Complex h[2][2] = {{{r, 0}, {r, 0}}, {{r, 0}, {-r, 0}}};
    apply_single_qubit(amps, n, q, h);
}

void apply_cz(std::vector<Complex>& amps, std::size_t n, std::size_t q1, std::size_t q2) {
    const std::size_t mask =
        (std::size_t{1} << (n - 1 - q1)) | (std::size_t{1} << (n - 1 - q2));
    for (std::size_t index = 0; index < amps.size(); ++index) {
        if ((index & mask) == mask) amps[index] = -amps[index];
    }
}

}  // namespace

StateVector apply_local_clifford(const StateVector& s, const LocalCliffordOp& op) {
    const double r = 1.0 / std::numbers::sqrt2;
    const Complex sqrt_minus_ix[2][2] = {{{r, 0}, {0, -r}}, {{0, -r}, {r, 0}}};
    const Complex e_plus = std::polar(1.0, std::numbers::pi / 4);
    const Complex e_minus = std::polar(1.0, -std::numbers::pi / 4);
    const Complex sqrt_plus_iz[2][2] = {{e_plus, {0, 0}}, {{0, 0}, e_minus}};

    StateVector out = s;
    const auto& factors = op.factors();
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        if (it->qubit >= s.qubit_count()) throw std::out_of_range("gate qubit out of range");
        apply_single_qubit(out.amps_, out.n_, it->qubit,
                           it->gate == LocalGate::SqrtMinusIX ? sqrt_minus_ix : sqrt_plus_iz);
    }
    return out;
}

StateVector project_logical(const StateVector& s, std::span<const PauliOperator> logical_z,
                            const BinaryVector& outcomes) {
    if (outcomes.size() != logical_z.size()) {
        throw std::invalid_argument("outcome count must match the logical Z count");
    }
    StateVector current = s;
    for (std::size_t i = 0; i < logical_z.size(); ++i) {
        const StateVector flipped = apply_pauli(current, logical_z[i]);
        const double sign = outcomes.get(i) ? -1.0 : 1.0;
        for (std::size_t a = 0; a < current.amps_.size(); ++a) {
            current.amps_[a] = 0.5 * (current.amps_[a] + sign * flipped.amps_[a]);
        }
        current.normalized_ = false;
    }
    return current.normalized();
}

namespace {

class MeasureContext {
public:
    explicit MeasureContext(const OutcomePolicy& policy)
        : force_zero_(policy.kind == OutcomePolicy::Kind::ForceZero), rng_(policy.seed) {}

    // Measure one ancilla in the computational basis and collapse. The
    // teleportation circuits guarantee uniform outcomes, which is what makes
    // forcing zero a faithful simulation; verified here.
    int measure_uniform_qubit(std::vector<Complex>& amps, std::size_t n, std::size_t q) {
        const std::size_t bit = std::size_t{1} << (n - 1 - q);
        double p0 = 0;
        for (std::size_t index = 0; index < amps.size(); ++index) {
            if (!(index & bit)) p0 += std::norm(amps[index]);
        }
        if (std::abs(p0 - 0.5) > 1e-9) {
            throw std::logic_error("measurement outcomes are not uniform; circuit contract broken");
        }
        const int outcome = force_zero_ ? 0 : (next_unit_double() < p0 ? 0 : 1);
        const double scale = 1.0 / std::sqrt(outcome == 0 ? p0 : 1.0 - p0);
        const bool keep_bit_set = outcome == 1;
        for (std::size_t index = 0; index < amps.size(); ++index) {
            if (((index & bit) != 0) == keep_bit_set) {
                amps[index] *= scale;
            } else {
                amps[index] = 0;
            }
        }
        return outcome;
    }

private:
    // Deterministic across platforms, unlike the distribution adapters.
    double next_unit_double() {
        return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    }

    bool force_zero_;
    std::mt19937_64 rng_;
};

// Drop the k leading (already measured and collapsed) qubits whose outcome
// bits are `measured`.
StateVector extract_data_register(const std::vector<Complex>& amps, std::size_t k, std::size_t n,
                                  const BinaryVector& measured) {
    std::size_t block = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (measured.get(i)) block |= std::size_t{1} << (k - 1 - i);
    }
    const std::size_t dim = std::size_t{1} << n;
    std::vector<Complex> data(amps.begin() + static_cast<std::ptrdiff_t>(block * dim),
                              amps.begin() + static_cast<std::ptrdiff_t>((block + 1) * dim));
    return StateVector::from_amplitudes(n, std::move(data));
}

void apply_controlled_pauli(std::vector<Complex>& amps, std::size_t total, std::size_t control,
                            const PauliOperator& p, std::size_t offset) {
    std::size_t flip = 0;
    std::size_t zmask = 0;
    for (std::size_t q = 0; q < p.size(); ++q) {
        if (p.x().get(q)) flip |= std::size_t{1} << (total - 1 - (offset + q));
        if (p.z().get(q)) zmask |= std::size_t{1} << (total - 1 - (offset + q));
    }
    const std::size_t control_bit = std::size_t{1} << (total - 1 - control);
    const Complex global = i_power(p.phase());

    std::vector<Complex> out(amps.size(), Complex{0, 0});
    for (std::size_t index = 0; index < amps.size(); ++index) {
        if (index & control_bit) {
            const bool minus = std::popcount(index & zmask) & 1u;
            out[index ^ flip] += (minus ? -global : global) * amps[index];
        } else {
            out[index] += amps[index];
        }
    }
    amps = std::move(out);
}

}  // namespace

EncodeResult encode_teleport(const SimpleGraph& g, const BinaryMatrix& b,
                             const BinaryVector& info_bits, const OutcomePolicy& policy) {
    const GraphCode code = make_graph_code(g, b);
    const std::size_t k = code.k();
    const std::size_t n = code.n();
    check_size(k + n);
    if (info_bits.size() != k) throw std::invalid_argument("info bit count must equal k");

    // |c1..ck> (x) |G>
    const StateVector graph_state = build_graph_state(g);
    std::size_t info_block = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (info_bits.get(i)) info_block |= std::size_t{1} << (k - 1 - i);
    }
    const std::size_t dim = std::size_t{1} << (k + n);
    const std::size_t data_dim = std::size_t{1} << n;
    std::vector<Complex> amps(dim, Complex{0, 0});
    for (std::size_t j = 0; j < data_dim; ++j) {
        amps[info_block * data_dim + j] = graph_state.amplitudes()[j];
    }

    for (std::size_t i = 0; i < k; ++i) apply_hadamard(amps, k + n, i);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (b.get(i, j)) apply_cz(amps, k + n, i, k + j);
        }
    }
    for (std::size_t i = 0; i < k; ++i) apply_hadamard(amps, k + n, i);

    MeasureContext measurer(policy);
    BinaryVector measured(k);
    for (std::size_t i = 0; i < k; ++i) {
        measured.set(i, measurer.measure_uniform_qubit(amps, k + n, i) == 1);
    }

    StateVector data = extract_data_register(amps, k, n, measured);
    for (std::size_t i = 0; i < k; ++i) {
        if (measured.get(i)) data = apply_pauli(data, code.logical_x[i]);
    }
    return {std::move(data), std::move(measured)};
}

TransportResult lc_transport(const GraphCode& code1, std::size_t v, const BinaryVector& info_bits,
                             const OutcomePolicy& policy) {
    const SimpleGraph& g1 = code1.ext.inner();
    const std::size_t k = code1.k();
    const std::size_t n = code1.n();
    check_size(k + n);
    if (v >= n) throw std::out_of_range("vertex index out of range");
    if (info_bits.size() != k) throw std::invalid_argument("info bit count must equal k");

    // Stage (i): |+>^k (x) |c>_L, controlled Xbars, Hadamards, measurement,
    // conditional Zbar -- the inverse of the projection, back to |G1>.
    const StateVector codeword = project_logical(build_graph_state(g1), code1.logical_z, info_bits);
    const std::size_t dim = std::size_t{1} << (k + n);
    const std::size_t data_dim = std::size_t{1} << n;
    const double anc_amp = std::pow(2.0, -static_cast<double>(k) / 2.0);
    std::vector<Complex> amps(dim, Complex{0, 0});
    for (std::size_t a = 0; a < (std::size_t{1} << k); ++a) {
        for (std::size_t j = 0; j < data_dim; ++j) {
            amps[a * data_dim + j] = anc_amp * codeword.amplitudes()[j];
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        apply_controlled_pauli(amps, k + n, i, code1.logical_x[i], k);
    }
    for (std::size_t i = 0; i < k; ++i) apply_hadamard(amps, k + n, i);

    MeasureContext measurer(policy);
    BinaryVector measured(k);
    for (std::size_t i = 0; i < k; ++i) {
        measured.set(i, measurer.measure_uniform_qubit(amps, k + n, i) == 1);
    }
    StateVector state = extract_data_register(amps, k, n, measured);
    for (std::size_t i = 0; i < k; ++i) {
        if (measured.get(i)) state = apply_pauli(state, code1.logical_z[i]);
    }

    // Stage (ii): |G2> = U_v(G1) |G1>.
    const SimpleGraph g2 = local_complement(g1, v);
    state = apply_local_clifford(state, lc_operator(g1, v));

    // Stage (iii): project with the new code's logical Zs.
    BinaryMatrix b2;
    try {
        b2 = derive_b(g2, k);
    } catch (const std::domain_error& e) {
        throw std::domain_error(std::string("no valid B for the complemented graph: ") + e.what());
    }
    GraphCode code2 = make_graph_code(g2, std::move(b2));
    StateVector result = project_logical(state, code2.logical_z, info_bits);
    return {std::move(result), std::move(code2)};
}

}  // namespace graphcode
