#include "graphcode/pauli.hpp"

#include <cassert>
#include <stdexcept>
#include <vector>

#include "graphcode/errors.hpp"

namespace graphcode {

PauliOperator::PauliOperator(BinaryVector x, BinaryVector z, unsigned phase)
    : x_(std::move(x)), z_(std::move(z)), phase_(phase % 4) {
    if (x_.size() != z_.size()) throw std::invalid_argument("x/z length mismatch in PauliOperator");
}

PauliOperator PauliOperator::from_string(std::string_view s) {
    std::size_t pos = 0;
    unsigned sign = 0;  // exponent of i
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        if (s[pos] == '-') sign = 2;
        ++pos;
    }
    if (pos < s.size() && s[pos] == 'i') {
        sign += 1;
        ++pos;
    }
    const std::string_view letters = s.substr(pos);
    if (letters.empty()) throw ParseError("empty Pauli string", 1, pos + 1);

    BinaryVector x(letters.size());
    BinaryVector z(letters.size());
    unsigned ys = 0;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        switch (letters[i]) {
            case 'I': break;
            case 'X': x.set(i, true); break;
            case 'Z': z.set(i, true); break;
            case 'Y':
                x.set(i, true);
                z.set(i, true);
                ++ys;
                break;
            default:
                throw ParseError("invalid Pauli character '" + std::string(1, letters[i]) + "'", 1,
                                 pos + i + 1);
        }
    }
    return PauliOperator(std::move(x), std::move(z), (sign + ys) % 4);
}

bool PauliOperator::is_hermitian() const {
    const unsigned xz = x_.dot(z_) ? 1u : 0u;
    return (phase_ & 1u) == xz;
}

std::size_t PauliOperator::weight() const {
    std::size_t count = 0;
    for (std::size_t i = 0; i < size(); ++i) {
        if (x_.get(i) || z_.get(i)) ++count;
    }
    return count;
}

std::string PauliOperator::to_string() const {
    unsigned ys = 0;
    std::string letters(size(), 'I');
    for (std::size_t i = 0; i < size(); ++i) {
        const bool xi = x_.get(i);
        const bool zi = z_.get(i);
        if (xi && zi) {
            letters[i] = 'Y';
            ++ys;
        } else if (xi) {
            letters[i] = 'X';
        } else if (zi) {
            letters[i] = 'Z';
        }
    }
    const unsigned sign = (phase_ + 4 - (ys % 4)) % 4;
    assert(!is_hermitian() || sign % 2 == 0);
    static const char* kPrefix[4] = {"", "i", "-", "-i"};
    return kPrefix[sign] + letters;
}

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b) {
    if (a.size() != b.size()) throw std::invalid_argument("Pauli size mismatch in multiply");
    const unsigned swap = a.z().dot(b.x()) ? 2u : 0u;
    return PauliOperator(a.x() ^ b.x(), a.z() ^ b.z(), (a.phase() + b.phase() + swap) % 4);
}

bool commutes(const PauliOperator& a, const PauliOperator& b) {
    if (a.size() != b.size()) throw std::invalid_argument("Pauli size mismatch in commutes");
    return a.x().dot(b.z()) == a.z().dot(b.x());
}

bool independent_set(std::span<const PauliOperator> ops) {
    if (ops.empty()) return true;
    std::vector<BinaryVector> rows;
    rows.reserve(ops.size());
    for (const auto& op : ops) {
        if (op.size() != ops.front().size()) {
            throw std::invalid_argument("Pauli size mismatch in independent_set");
        }
        rows.push_back(op.symplectic_row());
    }
    return rank(BinaryMatrix::from_rows(std::move(rows))) == ops.size();
}

}  // namespace graphcode
