// Copyright 2026 The qcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <cmath>
#include <limits>

#include "doctest.h"
#include "oracles.hpp"
#include "qcorr/qmat.hpp"

using namespace qcorr;
using namespace qcorr::qmat;
using qcorr::testing::Rng;

namespace {
const std::complex<double> I(0, 1);
}

TEST_CASE("pauli matrices have their textbook entries") {
    Matrix2cd x, y, z;
    x << 0, 1, 1, 0;
    y << 0, -I, I, 0;
    z << 1, 0, 0, -1;
    CHECK(pauli_x() == x);
    CHECK(pauli_y() == y);
    CHECK(pauli_z() == z);
    CHECK(identity2() == Matrix2cd::Identity());
    CHECK_THROWS_AS(pauli(3), DimensionMismatch);
}

TEST_CASE("kron") {
    Matrix4cd zz = Matrix4cd::Zero();
    zz.diagonal() << 1, -1, -1, 1;
    CHECK(kron(pauli_z(), pauli_z()) == zz);
    CHECK(kron(identity2(), identity2()) == Matrix4cd::Identity());

    Matrix4cd xx = Matrix4cd::Zero();
    for (int i = 0; i < 4; ++i) xx(i, 3 - i) = 1;
    CHECK(kron(pauli_x(), pauli_x()) == xx);

    // Dimensions multiply for dynamic operands too.
    const Eigen::MatrixXcd a = Eigen::MatrixXcd::Ones(2, 3);
    const Eigen::MatrixXcd b = Eigen::MatrixXcd::Ones(3, 1);
    const auto k = kron(a, b);
    CHECK(k.rows() == 6);
    CHECK(k.cols() == 3);

    Matrix2cd bad = identity2();
    bad(0, 1) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(kron(bad, identity2()), NonFinite);
}

TEST_CASE("hermitian_eig on Pauli matrices") {
    const auto z = hermitian_eig(pauli_z());
    CHECK(z.eigenvalues(0) == doctest::Approx(1.0));
    CHECK(z.eigenvalues(1) == doctest::Approx(-1.0));

    const auto x = hermitian_eig(pauli_x());
    CHECK(x.eigenvalues(0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(x.eigenvalues(1) == doctest::Approx(-1.0).epsilon(1e-15));
    // Phase convention: first nonzero component real and positive.
    CHECK(x.eigenvectors(0, 0).imag() == 0.0);
    CHECK(x.eigenvectors(0, 0).real() > 0.0);
    CHECK(x.eigenvectors(0, 1).real() > 0.0);
}

TEST_CASE("hermitian_eig matches the characteristic polynomial on random 4x4 input") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix4cd h = testing::random_hermitian(rng, 4);
        const auto sys = hermitian_eig(h);
        const auto reference = testing::charpoly_eigenvalues(h);
        for (int k = 0; k < 4; ++k) {
            CHECK(std::abs(sys.eigenvalues(k) - reference[static_cast<std::size_t>(k)]) <= 1e-8);
        }
        // Residual and unitarity.
        for (int k = 0; k < 4; ++k) {
            const Eigen::Vector4cd v = sys.eigenvectors.col(k);
            CHECK((h * v - sys.eigenvalues(k) * v).norm() <= 1e-10);
        }
        CHECK((sys.eigenvectors.adjoint() * sys.eigenvectors - Matrix4cd::Identity()).norm() <=
              1e-10);
        CHECK((sys.reconstruct() - h).norm() <= 1e-9);
        for (int k = 0; k + 1 < 4; ++k) CHECK(sys.eigenvalues(k) >= sys.eigenvalues(k + 1));
    }
}

TEST_CASE("hermitian_eig handles degenerate spectra deterministically") {
    const auto id = hermitian_eig(Matrix4cd::Identity().eval());
    for (int k = 0; k < 4; ++k) CHECK(id.eigenvalues(k) == 1.0);
    CHECK(id.eigenvectors == Matrix4cd::Identity());

    // Bell-diagonal with a doubly degenerate eigenvalue.
    Matrix4cd rho = Matrix4cd::Zero();
    rho.diagonal() << 0.25, 0.25, 0.25, 0.25;
    rho(0, 3) = rho(3, 0) = 0.25;
    const auto first = hermitian_eig(rho);
    const auto second = hermitian_eig(rho);
    CHECK(first.eigenvectors == second.eigenvectors);
    CHECK(first.eigenvalues(0) == doctest::Approx(0.5));
    CHECK(first.eigenvalues(1) == doctest::Approx(0.25));
    CHECK(first.eigenvalues(2) == doctest::Approx(0.25));
    CHECK(std::abs(first.eigenvalues(3)) <= 1e-15);
    // Tie between |01> and |10>: the one led by index 1 comes first.
    CHECK(std::abs(first.eigenvectors(1, 1) - 1.0) <= 1e-15);
    CHECK(std::abs(first.eigenvectors(2, 2) - 1.0) <= 1e-15);
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
    Matrix2cd a = pauli_x();
    a(0, 1) += 1e-9;
    CHECK_THROWS_AS(hermitian_eig(a), NotHermitian);
    Matrix2cd b = pauli_x();
    b(0, 1) += 1e-13;
    CHECK_NOTHROW(hermitian_eig(b));
    CHECK_THROWS_AS(hermitian_eig(Eigen::MatrixXcd::Ones(2, 3)), DimensionMismatch);
}

TEST_CASE("hermitian_eig works at 8x8") {
    Rng rng(5);
    const Eigen::Matrix<std::complex<double>, 8, 8> h = testing::random_hermitian(rng, 8);
    const auto sys = hermitian_eig(h);
    CHECK((sys.reconstruct() - h).norm() <= 1e-9);
}

TEST_CASE("psd_sqrt") {
    Matrix4cd d = Matrix4cd::Zero();
    d.diagonal() << 4, 9, 1, 0;
    Matrix4cd expected = Matrix4cd::Zero();
    expected.diagonal() << 2, 3, 1, 0;
    CHECK((psd_sqrt(d) - expected).norm() <= 1e-14);
    CHECK((psd_sqrt(Matrix4cd::Identity().eval()) - Matrix4cd::Identity()).norm() <= 1e-14);

    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix4cd a = testing::random_psd(rng, 4);
        const Matrix4cd b = psd_sqrt(a);
        CHECK((b * b - a).norm() <= 1e-9);
        CHECK(hermiticity_defect(b) <= 1e-12);
        CHECK(hermitian_eigenvalues(b).minCoeff() >= 0.0);
    }

    Matrix2cd slightly = Matrix2cd::Zero();
    slightly.diagonal() << 1, -1e-11;
    CHECK_NOTHROW(psd_sqrt(slightly));
    slightly(1, 1) = -1e-9;
    CHECK_THROWS_AS(psd_sqrt(slightly), NotPSD);
}

TEST_CASE("psd_sqrt is monotone on ordered diagonal pairs") {
    Rng rng(8);
    std::uniform_real_distribution<double> u(0.0, 5.0);
    for (int trial = 0; trial < 100; ++trial) {
        Matrix4cd a = Matrix4cd::Zero(), b = Matrix4cd::Zero();
        for (int k = 0; k < 4; ++k) {
            const double lo = u(rng);
            a(k, k) = lo;
            b(k, k) = lo + u(rng);
        }
        const Matrix4cd sa = psd_sqrt(a), sb = psd_sqrt(b);
        for (int k = 0; k < 4; ++k) CHECK(sa(k, k).real() <= sb(k, k).real());
    }
}

TEST_CASE("trace_norm") {
    CHECK(trace_norm(pauli_x()) == doctest::Approx(2.0).epsilon(1e-15));
    Matrix2cd d = Matrix2cd::Zero();
    d.diagonal() << 1, -2;
    CHECK(trace_norm(d) == doctest::Approx(3.0).epsilon(1e-15));

    Rng rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix4cd a = testing::random_complex(rng, 4, 4);
        const double value = trace_norm(a);
        CHECK(std::abs(value - testing::charpoly_trace_norm(a)) <= 1e-8);
        // Norm ordering and unitary invariance.
        CHECK(value * value >= frobenius_norm_sq(a) - 1e-12);
        const Matrix4cd u = testing::random_unitary(rng, 4);
        const Matrix4cd v = testing::random_unitary(rng, 4);
        CHECK(std::abs(trace_norm(Matrix4cd(u * a * v)) - value) <= 1e-8);
    }
}

TEST_CASE("frobenius_norm_sq") {
    CHECK(frobenius_norm_sq(Matrix4cd::Identity()) == 4.0);
    CHECK(frobenius_norm_sq(pauli_y()) == 2.0);
    CHECK(frobenius_norm_sq(Matrix4cd::Zero()) == 0.0);
}

TEST_CASE("entropy_base2") {
    CHECK(entropy_base2(std::vector<double>{1, 0, 0, 0}) == 0.0);
    CHECK(entropy_base2(std::vector<double>{0.25, 0.25, 0.25, 0.25}) == doctest::Approx(2.0));
    // Reference: -0.35 log2 0.35 - 0.65 log2 0.65.
    const double h = -0.35 * std::log2(0.35) - 0.65 * std::log2(0.65);
    CHECK(entropy_base2(std::vector<double>{0.35, 0.65, 0, 0}) == doctest::Approx(h));
    CHECK(std::abs(entropy_base2(std::vector<double>{0.35, 0.65, 0, 0}) - 0.93407) <= 1e-5);
    CHECK(entropy_base2(std::vector<double>{0.5, 0.5 + 1e-9, -1e-11}) == doctest::Approx(1.0));

    CHECK_THROWS_AS(entropy_base2(std::vector<double>{0.5, 0.4}), NotADistribution);
    CHECK_THROWS_AS(entropy_base2(std::vector<double>{1.1, -0.1}), NotADistribution);
    CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
}
