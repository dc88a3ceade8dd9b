// Complex-matrix primitives and entropy functionals shared by the whole
// library: Kronecker products, partial traces, Hermitian eigendecomposition,
// von Neumann / Shannon entropies and operator norms. Everything is a pure
// function of its inputs; all logarithms are base 2.
#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace eub {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Eigendecomposition of a Hermitian matrix. Eigenvalues are real and sorted
/// in descending order; eigenvectors(:, k) is the unit eigenvector for
/// eigenvalues(k), so eigenvectors * eigenvalues.asDiagonal() *
/// eigenvectors.adjoint() reconstructs the input.
struct Spectrum {
    RealVector eigenvalues;
    ComplexMatrix eigenvectors;
};

inline constexpr double kHermitianTol = 1e-8;
inline constexpr double kTraceTol = 1e-9;
inline constexpr double kEigClampTol = 1e-12;

inline double log2_safe(double x) { return std::log2(x); }

/// Kronecker product a (x) b in row-major block order.
inline ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

inline ComplexMatrix identity(int d) { return ComplexMatrix::Identity(d, d); }

namespace detail {

inline void check_dims_match(const ComplexMatrix& m, const std::vector<int>& dims) {
    long long prod = 1;
    for (int d : dims) {
        if (d < 1) throw std::invalid_argument("factor dimensions must be >= 1");
        prod *= d;
    }
    if (m.rows() != m.cols() || m.rows() != prod)
        throw std::invalid_argument("matrix size does not match factor dimensions");
}

}  // namespace detail

/// Trace out every tensor factor not listed in `keep`. Factors are indexed in
/// tensor order (slowest index first); `keep` must be strictly increasing.
/// The result acts on the kept factors in their original order.
inline ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<int>& dims,
                                   const std::vector<int>& keep) {
    detail::check_dims_match(m, dims);
    const int n = static_cast<int>(dims.size());
    for (std::size_t k = 0; k < keep.size(); ++k) {
        if (keep[k] < 0 || keep[k] >= n)
            throw std::invalid_argument("keep index out of range");
        if (k > 0 && keep[k] <= keep[k - 1])
            throw std::invalid_argument("keep indices must be strictly increasing");
    }

    std::vector<int> kept(keep), traced;
    for (int f = 0; f < n; ++f)
        if (std::find(kept.begin(), kept.end(), f) == kept.end()) traced.push_back(f);

    long long dim_keep = 1, dim_trace = 1;
    for (int f : kept) dim_keep *= dims[f];
    for (int f : traced) dim_trace *= dims[f];

    // Strides of each factor in the full row-major multi-index.
    std::vector<long long> stride(n, 1);
    for (int f = n - 2; f >= 0; --f) stride[f] = stride[f + 1] * dims[f + 1];

    auto offset = [&](const std::vector<int>& factors, long long flat) {
        long long off = 0;
        for (int k = static_cast<int>(factors.size()) - 1; k >= 0; --k) {
            int f = factors[k];
            off += (flat % dims[f]) * stride[f];
            flat /= dims[f];
        }
        return off;
    };

    ComplexMatrix out = ComplexMatrix::Zero(dim_keep, dim_keep);
    for (long long i = 0; i < dim_keep; ++i) {
        const long long row_keep = offset(kept, i);
        for (long long j = 0; j < dim_keep; ++j) {
            const long long col_keep = offset(kept, j);
            Complex sum = 0;
            for (long long t = 0; t < dim_trace; ++t) {
                const long long tr = offset(traced, t);
                sum += m(row_keep + tr, col_keep + tr);
            }
            out(i, j) = sum;
        }
    }
    return out;
}

/// Eigendecomposition of a Hermitian matrix. The input is symmetrized as
/// (M + M†)/2 first; asymmetry beyond 1e-8 is rejected.
inline Spectrum hermitian_eig(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("hermitian_eig: non-square input");
    const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (asym > kHermitianTol)
        throw std::invalid_argument("hermitian_eig: input asymmetry " + std::to_string(asym) +
                                    " exceeds tolerance");
    ComplexMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("hermitian_eig: eigensolver failed to converge");

    // Eigen returns ascending order; flip to descending.
    const Eigen::Index d = h.rows();
    Spectrum s;
    s.eigenvalues = solver.eigenvalues().reverse();
    s.eigenvectors.resize(d, d);
    for (Eigen::Index k = 0; k < d; ++k)
        s.eigenvectors.col(k) = solver.eigenvectors().col(d - 1 - k);
    return s;
}

namespace detail {

/// -sum x log2 x over an eigenvalue list, clamping values in [-1e-12, 0] to
/// zero and rejecting anything more negative.
inline double entropy_of_eigenvalues(const RealVector& lam) {
    double h = 0.0;
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
        double x = lam(i);
        if (x < -kEigClampTol)
            throw std::invalid_argument("entropy: eigenvalue " + std::to_string(x) +
                                        " below -1e-12; operator is not PSD");
        if (x <= 0.0) continue;
        h -= x * std::log2(x);
    }
    return h;
}

}  // namespace detail

/// Von Neumann entropy S(rho) = -Tr{rho log2 rho} in bits. Requires trace one
/// within 1e-9 and positive semidefiniteness up to the clamping tolerance.
inline double von_neumann_entropy(const ComplexMatrix& rho) {
    const double tr = rho.trace().real();
    if (std::abs(tr - 1.0) > kTraceTol)
        throw std::invalid_argument("von_neumann_entropy: trace " + std::to_string(tr) +
                                    " deviates from 1 beyond 1e-9");
    Spectrum s = hermitian_eig(rho);
    return detail::entropy_of_eigenvalues(s.eigenvalues);
}

/// Shannon entropy H(p) = -sum p log2 p in bits. Entries in [-1e-12, 0) are
/// clamped to zero and the distribution renormalized; the sum must be one
/// within 1e-9 before renormalization.
inline double shannon_entropy(std::span<const double> p) {
    double sum = 0.0;
    for (double x : p) {
        if (x < -kEigClampTol)
            throw std::invalid_argument("shannon_entropy: negative probability");
        sum += std::max(x, 0.0);
    }
    if (std::abs(sum - 1.0) > kTraceTol)
        throw std::invalid_argument("shannon_entropy: probabilities sum to " +
                                    std::to_string(sum));
    double h = 0.0;
    for (double x : p) {
        const double q = std::max(x, 0.0) / sum;
        if (q > 0.0) h -= q * std::log2(q);
    }
    return h;
}

inline double shannon_entropy(const std::vector<double>& p) {
    return shannon_entropy(std::span<const double>(p));
}

/// Binary entropy h(x) = -x log2 x - (1-x) log2(1-x).
inline double binary_entropy(double x) {
    if (x < -kEigClampTol || x > 1.0 + kEigClampTol)
        throw std::invalid_argument("binary_entropy: argument outside [0, 1]");
    x = std::clamp(x, 0.0, 1.0);
    double h = 0.0;
    if (x > 0.0) h -= x * std::log2(x);
    if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
    return h;
}

/// Largest singular value.
inline double operator_norm(const ComplexMatrix& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    return svd.singularValues()(0);
}

/// Principal square root of a PSD Hermitian matrix via its spectral
/// decomposition, with the same eigenvalue clamping rule as the entropies.
inline ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m) {
    Spectrum s = hermitian_eig(m);
    RealVector roots(s.eigenvalues.size());
    for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) {
        double x = s.eigenvalues(i);
        if (x < -kEigClampTol)
            throw std::invalid_argument("matrix_sqrt_psd: operator is not PSD");
        roots(i) = std::sqrt(std::max(x, 0.0));
    }
    return s.eigenvectors * roots.asDiagonal() * s.eigenvectors.adjoint();
}

}  // namespace eub
