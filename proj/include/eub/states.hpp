// Density operators with explicit tensor-factor structure, the Werner and
// isotropic families, maximally entangled states, purification, and seeded
// random-state generation for property tests.
#pragma once

#include <eub/matrix.hpp>

#include <cstdint>
#include <random>

namespace eub {

/// A density operator together with the dimensions of its tensor factors.
/// Construction validates Hermiticity (1e-10), unit trace (1e-9) and positive
/// semidefiniteness (min eigenvalue >= -1e-10).
class DensityOperator {
  public:
    DensityOperator(ComplexMatrix matrix, std::vector<int> dims)
        : matrix_(std::move(matrix)), dims_(std::move(dims)) {
        detail::check_dims_match(matrix_, dims_);
        const double asym = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
        if (asym > 1e-10)
            throw std::invalid_argument("DensityOperator: not Hermitian (asymmetry " +
                                        std::to_string(asym) + ")");
        const double tr = matrix_.trace().real();
        if (std::abs(tr - 1.0) > kTraceTol)
            throw std::invalid_argument("DensityOperator: trace " + std::to_string(tr) +
                                        " deviates from 1");
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (matrix_ + matrix_.adjoint()));
        if (solver.eigenvalues().minCoeff() < -1e-10)
            throw std::invalid_argument("DensityOperator: negative eigenvalue " +
                                        std::to_string(solver.eigenvalues().minCoeff()));
    }

    const ComplexMatrix& matrix() const { return matrix_; }
    const std::vector<int>& dims() const { return dims_; }
    int total_dim() const { return static_cast<int>(matrix_.rows()); }
    int factor_dim(int i) const { return dims_.at(static_cast<std::size_t>(i)); }
    int factor_count() const { return static_cast<int>(dims_.size()); }

    /// Reduced state on the listed factors (strictly increasing indices).
    DensityOperator marginal(const std::vector<int>& keep) const {
        std::vector<int> kept_dims;
        for (int f : keep) kept_dims.push_back(dims_.at(static_cast<std::size_t>(f)));
        return DensityOperator(partial_trace(matrix_, dims_, keep), kept_dims);
    }

    /// Same operator with adjacent factors [first, last] fused into one.
    /// Fusing adjacent factors does not change the matrix, only the bookkeeping.
    DensityOperator fuse_factors(int first, int last) const {
        if (first < 0 || last >= factor_count() || first > last)
            throw std::invalid_argument("fuse_factors: bad range");
        std::vector<int> fused;
        for (int f = 0; f < first; ++f) fused.push_back(dims_[f]);
        int prod = 1;
        for (int f = first; f <= last; ++f) prod *= dims_[f];
        fused.push_back(prod);
        for (int f = last + 1; f < factor_count(); ++f) fused.push_back(dims_[f]);
        return DensityOperator(matrix_, fused);
    }

  private:
    ComplexMatrix matrix_;
    std::vector<int> dims_;
};

/// |phi> <phi| as a density operator.
inline DensityOperator pure_state(const ComplexVector& phi, std::vector<int> dims) {
    ComplexVector v = phi / phi.norm();
    return DensityOperator(v * v.adjoint(), std::move(dims));
}

/// Swap operator F |i,j> = |j,i> on a d x d bipartite space.
inline ComplexMatrix swap_operator(int d) {
    ComplexMatrix f = ComplexMatrix::Zero(d * d, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) f(i * d + j, j * d + i) = 1.0;
    return f;
}

/// Projector onto the maximally entangled vector (1/sqrt d) sum_i |ii>.
inline ComplexMatrix max_entangled_projector(int d) {
    ComplexVector v = ComplexVector::Zero(d * d);
    for (int i = 0; i < d; ++i) v(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
    return v * v.adjoint();
}

/// Two-qubit Werner state (1-p)/4 I + p |Phi-><Phi-| with the singlet
/// |Phi-> = (|01> - |10>)/sqrt 2.
inline DensityOperator werner_main(double p) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("werner_main: p outside [0, 1]");
    ComplexVector singlet(4);
    singlet << 0.0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0;
    ComplexMatrix m = (1.0 - p) / 4.0 * ComplexMatrix::Identity(4, 4) +
                      p * (singlet * singlet.adjoint());
    return DensityOperator(m, {2, 2});
}

/// Werner state on d x d: 2(1-lam)/(d(d+1)) Pi+ + 2 lam/(d(d-1)) Pi-, with
/// Pi+- = (I +- F)/2 the symmetric/antisymmetric projectors. At d = 2 this
/// matches werner_main under lam = (1+3p)/4.
inline DensityOperator werner_general(int d, double lam) {
    if (d < 2) throw std::invalid_argument("werner_general: d must be >= 2");
    if (lam < 0.0 || lam > 1.0) throw std::invalid_argument("werner_general: lam outside [0, 1]");
    const ComplexMatrix f = swap_operator(d);
    const ComplexMatrix eye = ComplexMatrix::Identity(d * d, d * d);
    const ComplexMatrix sym = 0.5 * (eye + f);
    const ComplexMatrix asym = 0.5 * (eye - f);
    ComplexMatrix m = 2.0 * (1.0 - lam) / (d * (d + 1.0)) * sym +
                      2.0 * lam / (d * (d - 1.0)) * asym;
    return DensityOperator(m, {d, d});
}

/// Isotropic state on d x d: lam Phi_d + (1-lam)/(d^2-1) (I - Phi_d).
inline DensityOperator isotropic(int d, double lam) {
    if (d < 2) throw std::invalid_argument("isotropic: d must be >= 2");
    if (lam < 0.0 || lam > 1.0) throw std::invalid_argument("isotropic: lam outside [0, 1]");
    const ComplexMatrix phi = max_entangled_projector(d);
    const ComplexMatrix eye = ComplexMatrix::Identity(d * d, d * d);
    ComplexMatrix m = lam * phi + (1.0 - lam) / (d * d - 1.0) * (eye - phi);
    return DensityOperator(m, {d, d});
}

/// Pure maximally entangled state on d x d.
inline DensityOperator maximally_entangled(int d) {
    if (d < 2) throw std::invalid_argument("maximally_entangled: d must be >= 2");
    return DensityOperator(max_entangled_projector(d), {d, d});
}

/// Purification of rho: a pure state on the original factors plus one ancilla
/// factor of dimension rank(rho), appended last. Tracing out the ancilla
/// recovers rho. Eigenvalues below 1e-12 do not contribute to the rank.
inline DensityOperator purify(const DensityOperator& rho) {
    Spectrum s = hermitian_eig(rho.matrix());
    const int dim = rho.total_dim();
    int rank = 0;
    for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i)
        if (s.eigenvalues(i) > kEigClampTol) ++rank;
    if (rank == 0) throw std::invalid_argument("purify: zero operator");

    ComplexVector psi = ComplexVector::Zero(static_cast<Eigen::Index>(dim) * rank);
    for (int k = 0; k < rank; ++k) {
        const double w = std::sqrt(s.eigenvalues(k));
        for (int i = 0; i < dim; ++i) psi(static_cast<Eigen::Index>(i) * rank + k) += w * s.eigenvectors(i, k);
    }
    std::vector<int> dims = rho.dims();
    dims.push_back(rank);
    return pure_state(psi, dims);
}

namespace detail {

inline ComplexMatrix ginibre(int rows, int cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix g(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
    return g;
}

}  // namespace detail

/// Haar-random unitary, deterministic in the seed (QR of a Ginibre matrix
/// with the phase convention fixed by R's diagonal).
inline ComplexMatrix random_unitary(int d, std::uint64_t seed) {
    ComplexMatrix g = detail::ginibre(d, d, seed);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < d; ++j) {
        Complex rjj = r(j, j);
        q.col(j) *= rjj / std::abs(rjj);
    }
    return q;
}

/// Hilbert-Schmidt (Ginibre-induced) random density operator, deterministic
/// in the seed. Full rank with probability one.
inline DensityOperator random_density(const std::vector<int>& dims, std::uint64_t seed) {
    long long total = 1;
    for (int d : dims) total *= d;
    ComplexMatrix g = detail::ginibre(static_cast<int>(total), static_cast<int>(total), seed);
    ComplexMatrix m = g * g.adjoint();
    m /= m.trace().real();
    m = 0.5 * (m + m.adjoint());
    return DensityOperator(m, dims);
}

/// Haar-random pure state, deterministic in the seed.
inline DensityOperator random_pure(const std::vector<int>& dims, std::uint64_t seed) {
    long long total = 1;
    for (int d : dims) total *= d;
    ComplexVector v = detail::ginibre(static_cast<int>(total), 1, seed).col(0);
    return pure_state(v, dims);
}

}  // namespace eub
