#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <complex>
#include <random>
#include <vector>

#include "graphcode/errors.hpp"
#include "graphcode/pauli.hpp"
#include "test_util.hpp"

using namespace graphcode;

namespace {

// Dense-matrix oracle, independent of the symplectic arithmetic under test.
using Matrix = std::vector<std::vector<std::complex<double>>>;

Matrix kron(const Matrix& a, const Matrix& b) {
    const std::size_t ar = a.size(), ac = a[0].size();
    const std::size_t br = b.size(), bc = b[0].size();
    Matrix out(ar * br, std::vector<std::complex<double>>(ac * bc));
    for (std::size_t i = 0; i < ar * br; ++i) {
        for (std::size_t j = 0; j < ac * bc; ++j) {
            out[i][j] = a[i / br][j / bc] * b[i % br][j % bc];
        }
    }
    return out;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size();
    Matrix out(n, std::vector<std::complex<double>>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) out[i][j] += a[i][k] * b[k][j];
        }
    }
    return out;
}

bool approx_equal(const Matrix& a, const Matrix& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (std::abs(a[i][j] - b[i][j]) > 1e-12) return false;
        }
    }
    return false || true ? [&] {
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (std::size_t j = 0; j < a.size(); ++j) {
                if (std::abs(a[i][j] - b[i][j]) > 1e-12) return false;
            }
        }
        return true;
    }() : false;
}

Matrix dense(const PauliOperator& p) {
    const Matrix kI{{1, 0}, {0, 1}};
    const Matrix kX{{0, 1}, {1, 0}};
    const Matrix kZ{{1, 0}, {0, -1}};
    Matrix out{{1}};
    for (std::size_t q = 0; q < p.size(); ++q) {
        Matrix factor = kI;
        if (p.x().get(q)) factor = kX;
        if (p.z().get(q)) factor = p.x().get(q) ? matmul(kX, kZ) : kZ;
        out = kron(out, factor);
    }
    const std::complex<double> phases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (auto& row : out) {
        for (auto& entry : row) entry *= phases[p.phase() % 4];
    }
    return out;
}

}  // namespace

TEST_CASE("from_string examples") {
    const PauliOperator k1 = PauliOperator::from_string("XZIIZ");
    CHECK(k1.x().to_string() == "10000");
    CHECK(k1.z().to_string() == "01001");
    CHECK(k1.phase() == 0);

    const PauliOperator mzz = PauliOperator::from_string("-ZZ");
    CHECK(mzz.x().to_string() == "00");
    CHECK(mzz.z().to_string() == "11");
    CHECK(mzz.phase() == 2);

    const PauliOperator y = PauliOperator::from_string("Y");
    CHECK(y.x().to_string() == "1");
    CHECK(y.z().to_string() == "1");
    CHECK(y.phase() == 1);
    CHECK(y.to_string() == "Y");

    CHECK(PauliOperator::from_string("iXZ").phase() == 1);
    CHECK(PauliOperator::from_string("-iY").to_string() == "-iY");
    CHECK_THROWS_AS(PauliOperator::from_string("XQ"), ParseError);
    CHECK_THROWS_AS(PauliOperator::from_string("-"), ParseError);
}

TEST_CASE("multiply examples") {
    const auto a = PauliOperator::from_string("XZIIZ");
    const auto b = PauliOperator::from_string("ZXZII");
    CHECK(multiply(a, b).to_string() == "YYZIZ");

    // X Z = -iY and Z X = iY, straight from the 2x2 matrices.
    const auto x = PauliOperator::from_string("X");
    const auto z = PauliOperator::from_string("Z");
    CHECK(multiply(x, z).to_string() == "-iY");
    CHECK(multiply(z, x).to_string() == "iY");

    CHECK_THROWS_AS(multiply(x, a), std::invalid_argument);
}

TEST_CASE("hermitian paulis square to the identity") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = testutil::random_hermitian_pauli(rng, 1 + rng() % 6);
        CAPTURE(p.to_string());
        CHECK(p.is_hermitian());
        const auto square = multiply(p, p);
        CHECK(square.is_identity());
    }
}

TEST_CASE("commutes examples") {
    const auto x = PauliOperator::from_string("X");
    const auto z = PauliOperator::from_string("Z");
    CHECK(commutes(x, x));
    CHECK(!commutes(x, z));
    // Zbar of the R5 code anticommutes with every graph-state generator.
    CHECK(!commutes(PauliOperator::from_string("ZZZZZ"), PauliOperator::from_string("XZIIZ")));
}

TEST_CASE("weight examples") {
    CHECK(PauliOperator::from_string("IIIII").weight() == 0);
    CHECK(PauliOperator::from_string("ZZZZZ").weight() == 5);
    CHECK(PauliOperator::from_string("YZIZY").weight() == 4);
}

TEST_CASE("independent_set examples") {
    const std::vector<PauliOperator> xz{PauliOperator::from_string("X"),
                                        PauliOperator::from_string("Z")};
    CHECK(independent_set(xz));

    const std::vector<PauliOperator> dependent{PauliOperator::from_string("XX"),
                                               PauliOperator::from_string("ZZ"),
                                               PauliOperator::from_string("YY")};
    CHECK(!independent_set(dependent));

    const std::vector<PauliOperator> r5_gens{
        PauliOperator::from_string("YYZIZ"), PauliOperator::from_string("XIXZZ"),
        PauliOperator::from_string("XZZXI"), PauliOperator::from_string("YZIZY")};
    CHECK(independent_set(r5_gens));
}

TEST_CASE("algebraic properties") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        const auto a = testutil::random_pauli(rng, n);
        const auto b = testutil::random_pauli(rng, n);
        const auto c = testutil::random_pauli(rng, n);
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
        CHECK(commutes(a, b) == commutes(b, a));
        // A commutes with BC whenever it anticommutes with both B and C.
        if (!commutes(a, b) && !commutes(a, c)) {
            CHECK(commutes(a, multiply(b, c)));
        }
    }
}

TEST_CASE("dense matrix oracle agrees for n <= 3") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 1 + rng() % 3;
        const auto a = testutil::random_pauli(rng, n);
        const auto b = testutil::random_pauli(rng, n);
        CAPTURE(a.to_string());
        CAPTURE(b.to_string());
        CHECK(approx_equal(dense(multiply(a, b)), matmul(dense(a), dense(b))));

        const Matrix ab = matmul(dense(a), dense(b));
        const Matrix ba = matmul(dense(b), dense(a));
        CHECK(commutes(a, b) == approx_equal(ab, ba));
    }
}

TEST_CASE("string round trip is canonical") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = testutil::random_pauli(rng, 1 + rng() % 6);
        CHECK(PauliOperator::from_string(p.to_string()) == p);
    }
}
