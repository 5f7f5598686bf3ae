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
#pragma once

/**
 * @file qmat.hpp
 * @brief Small dense complex linear algebra on top of Eigen.
 *
 * Everything here is templated on the real scalar type and works on Eigen
 * expressions of fixed (2x2, 4x4, 8x8) or dynamic size. The Hermitian
 * eigensolver is a cyclic complex Jacobi iteration; every spectrum used by
 * the library (Wootters eigenvalues, entropies, trace norms) is routed
 * through it.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <ranges>
#include <vector>

#include <Eigen/Dense>

#include "qcorr/errors.hpp"

namespace qcorr::qmat {

template <typename Scalar>
using Complex = std::complex<Scalar>;

template <typename Scalar, int N>
using SquareMatrix = Eigen::Matrix<Complex<Scalar>, N, N>;

template <typename Scalar>
using Matrix2 = SquareMatrix<Scalar, 2>;

template <typename Scalar>
using Matrix4 = SquareMatrix<Scalar, 4>;

using Matrix2cd = Matrix2<double>;
using Matrix4cd = Matrix4<double>;

/// Tolerances shared by the kernel.
template <typename Scalar>
struct Tolerance {
    static constexpr Scalar hermitian = Scalar(1e-12);
    static constexpr Scalar psd_clamp = Scalar(1e-10);
    static constexpr Scalar distribution_sum = Scalar(1e-8);
    static constexpr Scalar nonzero_component = Scalar(1e-12);
    static constexpr int jacobi_sweeps = 100;
};

// -- constructors -----------------------------------------------------------

template <typename Scalar = double>
Matrix2<Scalar> identity2() {
    return Matrix2<Scalar>::Identity();
}

template <typename Scalar = double>
Matrix2<Scalar> pauli_x() {
    Matrix2<Scalar> m;
    m << 0, 1, 1, 0;
    return m;
}

template <typename Scalar = double>
Matrix2<Scalar> pauli_y() {
    const Complex<Scalar> i(0, 1);
    Matrix2<Scalar> m;
    m << Scalar(0), -i, i, Scalar(0);
    return m;
}

template <typename Scalar = double>
Matrix2<Scalar> pauli_z() {
    Matrix2<Scalar> m;
    m << 1, 0, 0, -1;
    return m;
}

/// Pauli matrix by axis index 0 (x), 1 (y), 2 (z).
template <typename Scalar = double>
Matrix2<Scalar> pauli(int axis) {
    switch (axis) {
    case 0: return pauli_x<Scalar>();
    case 1: return pauli_y<Scalar>();
    case 2: return pauli_z<Scalar>();
    default: throw DimensionMismatch("pauli: axis index must be 0, 1 or 2");
    }
}

// -- checks -----------------------------------------------------------------

template <typename Derived>
void require_finite(const Eigen::MatrixBase<Derived>& a, const char* where) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            const auto z = a(i, j);
            if (!std::isfinite(std::real(z)) || !std::isfinite(std::imag(z))) {
                throw NonFinite(std::string(where) + ": non-finite matrix entry");
            }
        }
    }
}

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& a, const char* where) {
    if (a.rows() != a.cols() || a.rows() == 0) {
        throw DimensionMismatch(std::string(where) + ": matrix must be square and non-empty");
    }
}

/// Largest entry of |a - a^dagger|.
template <typename Derived>
auto hermiticity_defect(const Eigen::MatrixBase<Derived>& a) {
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

// -- products ---------------------------------------------------------------

namespace detail {
constexpr int product_dim(int a, int b) {
    return (a == Eigen::Dynamic || b == Eigen::Dynamic) ? Eigen::Dynamic : a * b;
}
constexpr int double_dim(int a) {
    return a == Eigen::Dynamic ? Eigen::Dynamic : 2 * a;
}
} // namespace detail

/// Kronecker product a (x) b.
template <typename DA, typename DB>
auto kron(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
    using S = typename DA::Scalar;
    static_assert(std::is_same_v<S, typename DB::Scalar>, "kron: scalar types differ");
    constexpr int R = detail::product_dim(DA::RowsAtCompileTime, DB::RowsAtCompileTime);
    constexpr int C = detail::product_dim(DA::ColsAtCompileTime, DB::ColsAtCompileTime);
    require_finite(a, "kron");
    require_finite(b, "kron");

    Eigen::Matrix<S, R, C> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

// -- Hermitian eigensystem --------------------------------------------------

template <typename Scalar, int N>
struct HermitianEigenSystem {
    /// Sorted descending.
    Eigen::Matrix<Scalar, N, 1> eigenvalues;
    /// Column k is the unit eigenvector of eigenvalues[k].
    SquareMatrix<Scalar, N> eigenvectors;

    SquareMatrix<Scalar, N> reconstruct() const {
        return eigenvectors * eigenvalues.template cast<Complex<Scalar>>().asDiagonal() *
               eigenvectors.adjoint();
    }
};

namespace detail {

// One complex Jacobi rotation zeroing a(p, q). The rotation is
// U = diag(1, conj(e)) * [[c, s], [-s, c]] on the (p, q) plane, where
// e = a(p, q) / |a(p, q)| takes the block to a real symmetric one.
template <typename Scalar, int N>
void jacobi_rotate(SquareMatrix<Scalar, N>& a, SquareMatrix<Scalar, N>& v, Eigen::Index p,
                   Eigen::Index q) {
    using C = Complex<Scalar>;
    const C g = a(p, q);
    const Scalar abs_g = std::abs(g);
    const C e = g / abs_g;

    const Scalar theta = (std::real(a(q, q)) - std::real(a(p, p))) / (Scalar(2) * abs_g);
    Scalar t = Scalar(1) / (std::abs(theta) + std::sqrt(theta * theta + Scalar(1)));
    if (theta < 0) t = -t;
    const Scalar c = Scalar(1) / std::sqrt(Scalar(1) + t * t);
    const Scalar s = t * c;

    const C u_pp(c), u_pq(s);
    const C u_qp = -s * std::conj(e);
    const C u_qq = c * std::conj(e);

    const Eigen::Index n = a.rows();
    for (Eigen::Index k = 0; k < n; ++k) {
        const C akp = a(k, p), akq = a(k, q);
        a(k, p) = akp * u_pp + akq * u_qp;
        a(k, q) = akp * u_pq + akq * u_qq;
    }
    for (Eigen::Index k = 0; k < n; ++k) {
        const C apk = a(p, k), aqk = a(q, k);
        a(p, k) = std::conj(u_pp) * apk + std::conj(u_qp) * aqk;
        a(q, k) = std::conj(u_pq) * apk + std::conj(u_qq) * aqk;
    }
    a(p, q) = C(0);
    a(q, p) = C(0);
    a(p, p) = C(std::real(a(p, p)));
    a(q, q) = C(std::real(a(q, q)));

    for (Eigen::Index k = 0; k < n; ++k) {
        const C vkp = v(k, p), vkq = v(k, q);
        v(k, p) = vkp * u_pp + vkq * u_qp;
        v(k, q) = vkp * u_pq + vkq * u_qq;
    }
}

template <typename Scalar, int N>
Scalar off_diagonal_norm_sq(const SquareMatrix<Scalar, N>& a) {
    Scalar off = 0;
    for (Eigen::Index q = 1; q < a.rows(); ++q) {
        for (Eigen::Index p = 0; p < q; ++p) off += std::norm(a(p, q));
    }
    return Scalar(2) * off;
}

template <typename Vec>
Eigen::Index first_nonzero(const Vec& v, typename Vec::RealScalar threshold) {
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        if (std::abs(v(k)) > threshold) return k;
    }
    return v.size();
}

} // namespace detail

/**
 * Full eigensystem of a Hermitian matrix by cyclic complex Jacobi.
 *
 * Ordering is deterministic: eigenvalues descending; eigenvalues equal to
 * within 1e-12 (relative to the spectral scale) are ordered by the index of
 * their eigenvector's first nonzero component. Each eigenvector is rephased
 * so that its first nonzero component is real and positive.
 *
 * Throws NotHermitian when max|a - a^dagger| exceeds 1e-12 and NoConvergence
 * after 100 sweeps.
 */
template <typename Derived>
auto hermitian_eig(const Eigen::MatrixBase<Derived>& input) {
    using C = typename Derived::Scalar;
    using Scalar = typename C::value_type;
    constexpr int N = Derived::RowsAtCompileTime;
    using Tol = Tolerance<Scalar>;

    require_square(input, "hermitian_eig");
    require_finite(input, "hermitian_eig");
    if (hermiticity_defect(input) > Tol::hermitian) {
        throw NotHermitian("hermitian_eig: input is not Hermitian within 1e-12");
    }

    const Eigen::Index n = input.rows();
    SquareMatrix<Scalar, N> a = (input + input.adjoint()) / Scalar(2);
    SquareMatrix<Scalar, N> v = SquareMatrix<Scalar, N>::Identity(n, n);

    const Scalar eps = std::numeric_limits<Scalar>::epsilon();
    const Scalar scale_sq = a.squaredNorm();
    bool converged = scale_sq == Scalar(0);
    for (int sweep = 0; sweep < Tol::jacobi_sweeps && !converged; ++sweep) {
        const Scalar off = detail::off_diagonal_norm_sq<Scalar, N>(a);
        if (off <= eps * eps * scale_sq * Scalar(1e-4) ||
            off < std::numeric_limits<Scalar>::min()) {
            converged = true;
            break;
        }
        for (Eigen::Index p = 0; p + 1 < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) == Scalar(0)) continue;
                detail::jacobi_rotate<Scalar, N>(a, v, p, q);
            }
        }
    }
    if (!converged) {
        const Scalar off = detail::off_diagonal_norm_sq<Scalar, N>(a);
        if (off > eps * eps * scale_sq * Scalar(1e-4)) {
            throw NoConvergence("hermitian_eig: Jacobi sweep budget exhausted");
        }
    }

    // Phase convention first, so the tie-break below sees canonical vectors.
    for (Eigen::Index k = 0; k < n; ++k) {
        auto col = v.col(k);
        col.normalize();
        const Eigen::Index lead = detail::first_nonzero(col, Tol::nonzero_component);
        if (lead < n) col *= std::conj(col(lead)) / std::abs(col(lead));
    }

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    auto value = [&](Eigen::Index k) { return std::real(a(k, k)); };
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index l, Eigen::Index r) { return value(l) > value(r); });

    const Scalar spectral_scale = std::max(Scalar(1), std::sqrt(scale_sq));
    const Scalar tie = Tol::hermitian * spectral_scale;
    for (std::size_t begin = 0; begin < order.size();) {
        std::size_t end = begin + 1;
        while (end < order.size() && value(order[end - 1]) - value(order[end]) <= tie) ++end;
        std::stable_sort(order.begin() + static_cast<std::ptrdiff_t>(begin),
                         order.begin() + static_cast<std::ptrdiff_t>(end),
                         [&](Eigen::Index l, Eigen::Index r) {
                             return detail::first_nonzero(v.col(l), Tol::nonzero_component) <
                                    detail::first_nonzero(v.col(r), Tol::nonzero_component);
                         });
        begin = end;
    }

    HermitianEigenSystem<Scalar, N> out;
    out.eigenvalues.resize(n);
    out.eigenvectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const Eigen::Index src = order[static_cast<std::size_t>(k)];
        out.eigenvalues(k) = value(src);
        out.eigenvectors.col(k) = v.col(src);
    }
    return out;
}

/// Eigenvalues only, descending.
template <typename Derived>
auto hermitian_eigenvalues(const Eigen::MatrixBase<Derived>& a) {
    return hermitian_eig(a).eigenvalues;
}

// -- matrix functions -------------------------------------------------------

/// Principal square root of a positive semidefinite Hermitian matrix.
/// Eigenvalues in [-1e-10, 0) are clamped to zero; anything lower is NotPSD.
template <typename Derived>
auto psd_sqrt(const Eigen::MatrixBase<Derived>& a) {
    using Scalar = typename Derived::Scalar::value_type;
    auto sys = hermitian_eig(a);
    for (Eigen::Index k = 0; k < sys.eigenvalues.size(); ++k) {
        Scalar& lambda = sys.eigenvalues(k);
        if (lambda < -Tolerance<Scalar>::psd_clamp) {
            throw NotPSD("psd_sqrt: eigenvalue below -1e-10");
        }
        lambda = std::sqrt(std::max(lambda, Scalar(0)));
    }
    return sys.reconstruct();
}

/// Hermitian dilation [[0, a], [a^dagger, 0]]; its spectrum is {+/- singular values of a}.
template <typename Derived>
auto hermitian_dilation(const Eigen::MatrixBase<Derived>& a) {
    using C = typename Derived::Scalar;
    constexpr int M = detail::double_dim(Derived::RowsAtCompileTime);
    const Eigen::Index n = a.rows();
    Eigen::Matrix<C, M, M> d = Eigen::Matrix<C, M, M>::Zero(2 * n, 2 * n);
    d.topRightCorner(n, n) = a;
    d.bottomLeftCorner(n, n) = a.adjoint();
    return d;
}

/// Singular values of a square matrix, descending.
///
/// Read off the Hermitian dilation rather than as sqrt(eig(a^dagger a)), so
/// small singular values keep absolute accuracy ~eps*|a| instead of ~sqrt(eps).
template <typename Derived>
auto singular_values(const Eigen::MatrixBase<Derived>& a) {
    using Scalar = typename Derived::Scalar::value_type;
    require_square(a, "singular_values");
    const Eigen::Index n = a.rows();
    const auto spectrum = hermitian_eigenvalues(hermitian_dilation(a));
    Eigen::Matrix<Scalar, Derived::RowsAtCompileTime, 1> sv(n);
    for (Eigen::Index k = 0; k < n; ++k) sv(k) = std::max(spectrum(k), Scalar(0));
    return sv;
}

/// Trace norm Tr sqrt(a^dagger a), the sum of singular values.
template <typename Derived>
auto trace_norm(const Eigen::MatrixBase<Derived>& a) {
    using Scalar = typename Derived::Scalar::value_type;
    require_square(a, "trace_norm");
    require_finite(a, "trace_norm");
    if (hermiticity_defect(a) <= Tolerance<Scalar>::hermitian) {
        return hermitian_eigenvalues(a).cwiseAbs().sum();
    }
    return singular_values(a).sum();
}

/// Squared Hilbert-Schmidt (Frobenius) norm.
template <typename Derived>
auto frobenius_norm_sq(const Eigen::MatrixBase<Derived>& a) {
    return a.squaredNorm();
}

/// Von Neumann entropy in bits of a spectrum; 0 log 0 = 0.
/// Entries in [-1e-10, 0) are clamped; the sum must be 1 within 1e-8.
template <std::ranges::input_range Range>
auto entropy_base2(const Range& eigenvalues) {
    using Scalar = std::remove_cvref_t<std::ranges::range_value_t<Range>>;
    Scalar total = 0;
    Scalar entropy = 0;
    for (Scalar lambda : eigenvalues) {
        if (!std::isfinite(lambda) || lambda < -Tolerance<Scalar>::psd_clamp) {
            throw NotADistribution("entropy_base2: negative or non-finite probability");
        }
        total += lambda;
        if (lambda > 0) entropy -= lambda * std::log2(lambda);
    }
    if (std::abs(total - Scalar(1)) > Tolerance<Scalar>::distribution_sum) {
        throw NotADistribution("entropy_base2: probabilities do not sum to 1");
    }
    return entropy;
}

/// Binary entropy h(q) in bits.
template <typename Scalar>
Scalar binary_entropy(Scalar q) {
    const Scalar probs[2] = {q, Scalar(1) - q};
    return entropy_base2(probs);
}

} // namespace qcorr::qmat
