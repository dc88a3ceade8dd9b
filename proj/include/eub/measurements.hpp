// POVMs and projective bases, the measurement-incompatibility constant
// c(P,Q), post-measurement classical-quantum states, outcome conditional
// entropies, and joint-outcome error probabilities for paired measurements.
#pragma once

#include <eub/states.hpp>

#include <numbers>
#include <optional>

namespace eub {

/// A POVM on one tensor factor: PSD elements that sum to the identity
/// (checked at 1e-10 / 1e-9 respectively).
class Measurement {
  public:
    Measurement(std::vector<ComplexMatrix> elements, std::string label = "")
        : elements_(std::move(elements)), label_(std::move(label)) {
        if (elements_.empty()) throw std::invalid_argument("Measurement: no elements");
        dim_ = static_cast<int>(elements_[0].rows());
        ComplexMatrix sum = ComplexMatrix::Zero(dim_, dim_);
        for (const auto& e : elements_) {
            if (e.rows() != dim_ || e.cols() != dim_)
                throw std::invalid_argument("Measurement: element dimension mismatch");
            Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (e + e.adjoint()));
            if ((e - e.adjoint()).cwiseAbs().maxCoeff() > 1e-10 ||
                solver.eigenvalues().minCoeff() < -1e-10)
                throw std::invalid_argument("Measurement: element is not PSD");
            sum += e;
        }
        if ((sum - ComplexMatrix::Identity(dim_, dim_)).cwiseAbs().maxCoeff() > kTraceTol)
            throw std::invalid_argument("Measurement: elements do not sum to identity");
    }

    const std::vector<ComplexMatrix>& elements() const { return elements_; }
    const ComplexMatrix& element(int k) const { return elements_.at(static_cast<std::size_t>(k)); }
    int outcome_count() const { return static_cast<int>(elements_.size()); }
    int dim() const { return dim_; }
    const std::string& label() const { return label_; }

  private:
    std::vector<ComplexMatrix> elements_;
    int dim_;
    std::string label_;
};

/// Outcome probabilities paired with the normalized memory states conditioned
/// on each outcome (Tr_A{(Lambda_k (x) I) rho} / p_k).
struct ClassicalQuantumState {
    std::vector<double> probabilities;
    std::vector<DensityOperator> conditional_states;
};

/// Rank-one projective measurement from an orthonormal basis.
inline Measurement projective(const std::vector<ComplexVector>& basis, std::string label = "") {
    const int d = static_cast<int>(basis.size());
    for (int i = 0; i < d; ++i) {
        if (basis[i].size() != d)
            throw std::invalid_argument("projective: need d vectors of dimension d");
        for (int j = 0; j < d; ++j) {
            const Complex g = basis[i].dot(basis[j]);  // <i|j>
            const double want = (i == j) ? 1.0 : 0.0;
            if (std::abs(g - want) > 1e-10)
                throw std::invalid_argument("projective: basis is not orthonormal");
        }
    }
    std::vector<ComplexMatrix> elems;
    elems.reserve(basis.size());
    for (const auto& v : basis) elems.push_back(v * v.adjoint());
    return Measurement(std::move(elems), std::move(label));
}

/// Projective measurement from the columns of a unitary.
inline Measurement projective_from_unitary(const ComplexMatrix& u, std::string label = "") {
    std::vector<ComplexVector> basis;
    basis.reserve(static_cast<std::size_t>(u.cols()));
    for (Eigen::Index j = 0; j < u.cols(); ++j) basis.push_back(u.col(j));
    return projective(basis, std::move(label));
}

inline Measurement computational_basis(int d) {
    std::vector<ComplexVector> basis;
    for (int i = 0; i < d; ++i) {
        ComplexVector v = ComplexVector::Zero(d);
        v(i) = 1.0;
        basis.push_back(v);
    }
    return projective(basis, "comp");
}

/// Fourier basis |x~> = (1/sqrt d) sum_z exp(2 pi i x z / d) |z>, mutually
/// unbiased with the computational basis.
inline Measurement fourier_basis(int d) {
    std::vector<ComplexVector> basis;
    for (int x = 0; x < d; ++x) {
        ComplexVector v(d);
        for (int z = 0; z < d; ++z) {
            const double phase = 2.0 * std::numbers::pi * x * z / d;
            v(z) = Complex(std::cos(phase), std::sin(phase)) / std::sqrt(static_cast<double>(d));
        }
        basis.push_back(v);
    }
    return projective(basis, "fourier");
}

inline Measurement pauli_z_basis() {
    std::vector<ComplexVector> basis(2, ComplexVector::Zero(2));
    basis[0](0) = 1.0;
    basis[1](1) = 1.0;
    return projective(basis, "pauli-z");
}

inline Measurement pauli_x_basis() {
    const double s = 1.0 / std::sqrt(2.0);
    std::vector<ComplexVector> basis(2, ComplexVector::Zero(2));
    basis[0](0) = s;
    basis[0](1) = s;
    basis[1](0) = s;
    basis[1](1) = -s;
    return projective(basis, "pauli-x");
}

/// Measurement incompatibility c(P,Q) = max_{p,q} || sqrt(Lambda_p)
/// sqrt(Gamma_q) ||_inf. Equals the largest basis overlap max |<p_i|q_j>| for
/// projective measurements; c is in (0, 1] and -2 log2 c <= log2 d.
inline double incompatibility(const Measurement& p, const Measurement& q) {
    if (p.dim() != q.dim()) throw std::invalid_argument("incompatibility: dimension mismatch");
    std::vector<ComplexMatrix> rp, rq;
    for (const auto& e : p.elements()) rp.push_back(matrix_sqrt_psd(e));
    for (const auto& e : q.elements()) rq.push_back(matrix_sqrt_psd(e));
    double c = 0.0;
    for (const auto& a : rp)
        for (const auto& b : rq) c = std::max(c, operator_norm(a * b));
    return c;
}

namespace detail {

/// Lift an operator on factor `which` to the full space of `dims`.
inline ComplexMatrix lift(const ComplexMatrix& op, const std::vector<int>& dims, int which) {
    if (which < 0 || which >= static_cast<int>(dims.size()))
        throw std::invalid_argument("lift: factor index out of range");
    if (op.rows() != dims[static_cast<std::size_t>(which)])
        throw std::invalid_argument("lift: operator does not match factor dimension");
    long long pre = 1, post = 1;
    for (int f = 0; f < which; ++f) pre *= dims[static_cast<std::size_t>(f)];
    for (int f = which + 1; f < static_cast<int>(dims.size()); ++f)
        post *= dims[static_cast<std::size_t>(f)];
    ComplexMatrix out = op;
    if (pre > 1) out = tensor(ComplexMatrix::Identity(pre, pre), out);
    if (post > 1) out = tensor(out, ComplexMatrix::Identity(post, post));
    return out;
}

}  // namespace detail

/// Outcome distribution p_k = Tr{(Lambda_k on `factor`) rho}.
inline std::vector<double> outcome_distribution(const Measurement& m, const DensityOperator& rho,
                                                int factor) {
    if (m.dim() != rho.factor_dim(factor))
        throw std::invalid_argument("outcome_distribution: measurement does not fit factor");
    std::vector<double> p;
    p.reserve(static_cast<std::size_t>(m.outcome_count()));
    for (const auto& e : m.elements()) {
        const ComplexMatrix lifted = detail::lift(e, rho.dims(), factor);
        p.push_back((lifted * rho.matrix()).trace().real());
    }
    return p;
}

/// Post-measurement classical-quantum state: outcome probabilities and the
/// normalized conditional states on the unmeasured factors. Outcomes with
/// probability below 1e-12 carry a maximally mixed placeholder conditional.
inline ClassicalQuantumState post_measurement_state(const Measurement& m,
                                                    const DensityOperator& rho, int measured) {
    if (m.dim() != rho.factor_dim(measured))
        throw std::invalid_argument("post_measurement_state: measurement does not fit factor");
    if (rho.factor_count() < 2)
        throw std::invalid_argument("post_measurement_state: state has no memory factor");

    std::vector<int> memory;
    std::vector<int> memory_dims;
    for (int f = 0; f < rho.factor_count(); ++f)
        if (f != measured) {
            memory.push_back(f);
            memory_dims.push_back(rho.factor_dim(f));
        }
    long long mem_dim = 1;
    for (int d : memory_dims) mem_dim *= d;

    ClassicalQuantumState cq;
    for (const auto& e : m.elements()) {
        const ComplexMatrix lifted = detail::lift(e, rho.dims(), measured);
        ComplexMatrix block = partial_trace(lifted * rho.matrix(), rho.dims(), memory);
        block = 0.5 * (block + block.adjoint());
        const double p = block.trace().real();
        cq.probabilities.push_back(std::max(p, 0.0));
        if (p > 1e-12) {
            cq.conditional_states.emplace_back(block / p, memory_dims);
        } else {
            cq.conditional_states.emplace_back(
                ComplexMatrix::Identity(mem_dim, mem_dim) / static_cast<double>(mem_dim),
                memory_dims);
        }
    }
    return cq;
}

/// S(X|B) = S(rho_XB) - S(rho_B) evaluated on the block-diagonal
/// classical-quantum state: H(p) + sum_k p_k S(rho_k) - S(sum_k p_k rho_k).
inline double conditional_entropy_of_outcome(const ClassicalQuantumState& cq) {
    const double hp = shannon_entropy(cq.probabilities);
    double avg_cond = 0.0;
    ComplexMatrix mixed = ComplexMatrix::Zero(cq.conditional_states[0].total_dim(),
                                              cq.conditional_states[0].total_dim());
    for (std::size_t k = 0; k < cq.probabilities.size(); ++k) {
        const double p = cq.probabilities[k];
        if (p <= 0.0) continue;
        avg_cond += p * von_neumann_entropy(cq.conditional_states[k].matrix());
        mixed += p * cq.conditional_states[k].matrix();
    }
    return hp + avg_cond - von_neumann_entropy(mixed);
}

/// Probability that the two sides of a bipartite state disagree when both
/// measure `m`, with outcome k on the first side paired with pairing[k] on
/// the second: p_e = 1 - sum_k Tr{(Lambda_k (x) Lambda_pairing[k]) rho}.
inline double joint_error_probability(const Measurement& m, const DensityOperator& rho,
                                      const std::vector<int>& pairing) {
    if (rho.factor_count() != 2 || rho.factor_dim(0) != rho.factor_dim(1))
        throw std::invalid_argument("joint_error_probability: need equal bipartite factors");
    if (m.dim() != rho.factor_dim(0))
        throw std::invalid_argument("joint_error_probability: measurement does not fit state");
    const int n = m.outcome_count();
    if (static_cast<int>(pairing.size()) != n)
        throw std::invalid_argument("joint_error_probability: pairing size mismatch");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int t : pairing) {
        if (t < 0 || t >= n || seen[static_cast<std::size_t>(t)])
            throw std::invalid_argument("joint_error_probability: pairing is not a permutation");
        seen[static_cast<std::size_t>(t)] = true;
    }
    double agree = 0.0;
    for (int k = 0; k < n; ++k) {
        const ComplexMatrix joint = tensor(m.element(k), m.element(pairing[static_cast<std::size_t>(k)]));
        agree += (joint * rho.matrix()).trace().real();
    }
    return std::clamp(1.0 - agree, 0.0, 1.0);
}

inline std::vector<int> identity_pairing(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

}  // namespace eub
