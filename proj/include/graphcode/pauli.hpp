#pragma once

#include <span>
#include <string>
#include <string_view>

#include "graphcode/f2linalg.hpp"

namespace graphcode {

// n-qubit Pauli operator in binary symplectic form with an exact phase.
//
// The stored value is  i^phase * prod_j X_j^{x_j} Z_j^{z_j}  with the X
// factor to the left of the Z factor on each qubit. Under this convention
// "Y" parses to x=1, z=1, phase=1 (Y = i X Z), and the product rule has the
// closed form  phase(ab) = phase(a) + phase(b) + 2*(z_a . x_b)  mod 4.
class PauliOperator {
public:
    explicit PauliOperator(std::size_t n)
        : x_(n), z_(n), phase_(0) {}
    PauliOperator(BinaryVector x, BinaryVector z, unsigned phase);

    // Accepts an optional sign prefix ("+", "-", "i", "-i", "+i") followed by
    // characters in {I,X,Y,Z}.
    static PauliOperator from_string(std::string_view s);

    std::size_t size() const { return x_.size(); }
    const BinaryVector& x() const { return x_; }
    const BinaryVector& z() const { return z_; }
    unsigned phase() const { return phase_; }

    bool is_identity() const { return !x_.any() && !z_.any() && phase_ == 0; }
    // Hermitian iff phase == |x & z| mod 2; such operators square to +I.
    bool is_hermitian() const;
    std::size_t weight() const;

    // Length-2n (x|z) row used for GF(2) independence and span arguments.
    BinaryVector symplectic_row() const { return x_.concat(z_); }

    bool operator==(const PauliOperator& o) const = default;

    // Sign prefix then letters; Hermitian operators never print "i"/"-i".
    std::string to_string() const;

private:
    BinaryVector x_;
    BinaryVector z_;
    unsigned phase_;
};

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b);

// True iff the symplectic inner product x_a.z_b + z_a.x_b vanishes mod 2.
bool commutes(const PauliOperator& a, const PauliOperator& b);

// True iff the (x|z) rows are linearly independent over GF(2); phases ignored.
bool independent_set(std::span<const PauliOperator> ops);

}  // namespace graphcode
