// The uncertainty bounds: Robertson's product bound, the Maassen-Uffink
// entropic bound, its state-dependent refinement, the quantum-memory bound of
// Berta et al., the discord-tightened bound and its tripartite variant, and
// the derived application bounds (entanglement-of-formation lower bound and
// distillable-common-randomness upper bound).
//
// Measurements always act on factor 0; every remaining factor is the memory.
#pragma once

#include <eub/correlations.hpp>

#include <array>

namespace eub {

/// Uncertainty sum and every applicable lower bound for one (state, P, Q)
/// triple, with the slack of the tightest bound.
struct BoundReport {
    double uncertainty_sum = 0.0;  // S(P|B) + S(Q|B)
    double mu_bound = 0.0;         // -2 log2 c
    double refined_bound = 0.0;    // -2 log2 c + S(rho_A)
    double berta_bound = 0.0;      // -2 log2 c + S(A|B)
    double new_bound = 0.0;        // berta + max{0, D_A - J_A}
    double slack_new = 0.0;        // uncertainty_sum - new_bound
    std::string state_id;
    std::string p_id;
    std::string q_id;
};

/// Robertson's bound for observables: returns (lhs, rhs) with
/// lhs = dP dQ and rhs = |<[P,Q]>| / 2.
inline std::pair<double, double> robertson_bound(const ComplexMatrix& p_obs,
                                                 const ComplexMatrix& q_obs,
                                                 const DensityOperator& rho) {
    auto check = [](const ComplexMatrix& o, const char* name) {
        if (o.rows() != o.cols() || (o - o.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
            throw std::invalid_argument(std::string("robertson_bound: ") + name +
                                        " is not Hermitian");
    };
    check(p_obs, "P");
    check(q_obs, "Q");
    if (p_obs.rows() != rho.total_dim() || q_obs.rows() != rho.total_dim())
        throw std::invalid_argument("robertson_bound: observable does not match state dimension");

    auto expectation = [&](const ComplexMatrix& o) { return (o * rho.matrix()).trace().real(); };
    auto deviation = [&](const ComplexMatrix& o) {
        const double mean = expectation(o);
        return std::sqrt(std::max(expectation(o * o) - mean * mean, 0.0));
    };
    const ComplexMatrix commutator = p_obs * q_obs - q_obs * p_obs;
    const double lhs = deviation(p_obs) * deviation(q_obs);
    const double rhs = 0.5 * std::abs((commutator * rho.matrix()).trace());
    return {lhs, rhs};
}

/// Maassen-Uffink bound -2 log2 c(P,Q).
inline double mu_bound(const Measurement& p, const Measurement& q) {
    return -2.0 * std::log2(incompatibility(p, q));
}

/// State-dependent refinement -2 log2 c + S(rho) for a state on the measured
/// system alone.
inline double refined_bound(const Measurement& p, const Measurement& q,
                            const DensityOperator& rho) {
    if (rho.total_dim() != p.dim())
        throw std::invalid_argument("refined_bound: state does not match measurement dimension");
    return mu_bound(p, q) + von_neumann_entropy(rho.matrix());
}

namespace detail {

/// View a multi-factor state as (measured factor 0) x (everything else).
inline DensityOperator as_bipartite(const DensityOperator& rho) {
    if (rho.factor_count() < 2)
        throw std::invalid_argument("bound: state has no memory factor");
    if (rho.factor_count() == 2) return rho;
    return rho.fuse_factors(1, rho.factor_count() - 1);
}

/// I(X;B) = S(sum_k p_k rho_k) - sum_k p_k S(rho_k) of a classical-quantum state.
inline double cq_mutual_information(const ClassicalQuantumState& cq) {
    ComplexMatrix mixed = ComplexMatrix::Zero(cq.conditional_states[0].total_dim(),
                                              cq.conditional_states[0].total_dim());
    double avg = 0.0;
    for (std::size_t k = 0; k < cq.probabilities.size(); ++k) {
        const double p = cq.probabilities[k];
        if (p <= 0.0) continue;
        mixed += p * cq.conditional_states[k].matrix();
        avg += p * von_neumann_entropy(cq.conditional_states[k].matrix());
    }
    return von_neumann_entropy(mixed) - avg;
}

}  // namespace detail

/// Measured uncertainty sum S(P|B) + S(Q|B) with both measurements on factor 0.
inline double uncertainty_sum(const Measurement& p, const Measurement& q,
                              const DensityOperator& rho) {
    const DensityOperator bip = detail::as_bipartite(rho);
    return conditional_entropy_of_outcome(post_measurement_state(p, bip, 0)) +
           conditional_entropy_of_outcome(post_measurement_state(q, bip, 0));
}

/// Quantum-memory bound of Berta et al.: -2 log2 c + S(A|B).
inline double berta_bound(const Measurement& p, const Measurement& q,
                          const DensityOperator& rho) {
    const DensityOperator bip = detail::as_bipartite(rho);
    if (bip.factor_dim(0) != p.dim())
        throw std::invalid_argument("berta_bound: state does not match measurement dimension");
    return mu_bound(p, q) + conditional_entropy(bip, 1);
}

/// Discord-tightened bound with an externally supplied classical correlation
/// J_A (e.g. a closed form): berta + max{0, D_A - J_A} with D_A = I(A;B) - J_A.
inline double new_bound_given_j(const Measurement& p, const Measurement& q,
                                const DensityOperator& rho, double j_a) {
    const DensityOperator bip = detail::as_bipartite(rho);
    const double berta = berta_bound(p, q, bip);
    const double mutual = mutual_information(bip);
    const double max_term = std::max(0.0, mutual - 2.0 * j_a);
    if (max_term > 0.0) {
        // The max form must agree with -2 log2 c + S(A) - 2 J_A.
        const double alt = mu_bound(p, q) +
                           von_neumann_entropy(bip.marginal({0}).matrix()) - 2.0 * j_a;
        if (std::abs(alt - (berta + max_term)) > 1e-9)
            throw std::logic_error("new_bound: algebraic forms disagree");
    }
    return berta + max_term;
}

/// Discord-tightened bound: -2 log2 c + S(A|B) + max{0, D_A - J_A}, with J_A
/// from the projective-measurement search.
inline double new_bound(const Measurement& p, const Measurement& q, const DensityOperator& rho,
                        const OptimizerConfig& config = {}) {
    const DensityOperator bip = detail::as_bipartite(rho);
    return new_bound_given_j(p, q, bip, classical_correlation(bip, 0, config).first);
}

/// Fano-inequality entropy penalty
/// b_F = h(pe_P) + pe_P log2(d-1) + h(pe_Q) + pe_Q log2(d-1).
inline double fano_term(double pe_p, double pe_q, int d) {
    if (pe_p < -kEigClampTol || pe_p > 1.0 + kEigClampTol || pe_q < -kEigClampTol ||
        pe_q > 1.0 + kEigClampTol)
        throw std::invalid_argument("fano_term: error probability outside [0, 1]");
    if (d < 2) throw std::invalid_argument("fano_term: dimension must be >= 2");
    const double extra = std::log2(static_cast<double>(d - 1));
    return binary_entropy(pe_p) + std::clamp(pe_p, 0.0, 1.0) * extra + binary_entropy(pe_q) +
           std::clamp(pe_q, 0.0, 1.0) * extra;
}

/// Lower bound on the regularized entanglement of formation:
/// -2 log2 c + max{0, D_A - J_A} - b_F, with the disagreement probabilities
/// taken under the supplied outcome pairings. May be negative (vacuous).
inline double eof_lower_bound(const Measurement& p, const Measurement& q,
                              const DensityOperator& rho, const std::vector<int>& pairing_p,
                              const std::vector<int>& pairing_q,
                              const OptimizerConfig& config = {}) {
    if (rho.factor_count() != 2 || rho.factor_dim(0) != rho.factor_dim(1))
        throw std::invalid_argument("eof_lower_bound: need equal bipartite factors");
    const double pe_p = joint_error_probability(p, rho, pairing_p);
    const double pe_q = joint_error_probability(q, rho, pairing_q);
    const double j = classical_correlation(rho, 0, config).first;
    const double max_term = std::max(0.0, mutual_information(rho) - 2.0 * j);
    return mu_bound(p, q) + max_term - fano_term(pe_p, pe_q, rho.factor_dim(0));
}

/// Upper bound on the distillable common randomness of rho_CB given a pure
/// tripartite rho_ABC: S(rho_B) + 2 log2 c - max{0, D_A - J_A} + b_F, with
/// the correlation terms and pairings evaluated on rho_AB.
inline double common_randomness_upper_bound(const DensityOperator& rho_abc, const Measurement& p,
                                            const Measurement& q,
                                            const std::vector<int>& pairing_p,
                                            const std::vector<int>& pairing_q,
                                            const OptimizerConfig& config = {}) {
    if (rho_abc.factor_count() != 3)
        throw std::invalid_argument("common_randomness_upper_bound: need three factors");
    Spectrum s = hermitian_eig(rho_abc.matrix());
    if (s.eigenvalues(0) < 1.0 - 1e-9)
        throw std::invalid_argument("common_randomness_upper_bound: state is not pure");
    const DensityOperator rho_ab = rho_abc.marginal({0, 1});
    if (rho_ab.factor_dim(0) != rho_ab.factor_dim(1))
        throw std::invalid_argument("common_randomness_upper_bound: need equal A and B factors");
    const double pe_p = joint_error_probability(p, rho_ab, pairing_p);
    const double pe_q = joint_error_probability(q, rho_ab, pairing_q);
    const double j = classical_correlation(rho_ab, 0, config).first;
    const double max_term = std::max(0.0, mutual_information(rho_ab) - 2.0 * j);
    return von_neumann_entropy(rho_abc.marginal({1}).matrix()) - mu_bound(p, q) - max_term +
           fano_term(pe_p, pe_q, rho_ab.factor_dim(0));
}

/// Tripartite (cryptographic) bound S(P|B) + S(Q|E) >= -2 log2 c +
/// max{0, D_A(rho_A|(BE')) - J_A(rho_AB)}, where E' is the purifying ancilla.
struct TripartiteReport {
    double lhs = 0.0;           // S(P|B) + S(Q|E)
    double rhs = 0.0;           // -2 log2 c + max{0, discord_abe_prime - j_ab}
    double slack = 0.0;         // lhs - rhs
    double discord_abe_prime = 0.0;
    double j_ab = 0.0;
};

inline TripartiteReport tripartite_bound(const Measurement& p, const Measurement& q,
                                         const DensityOperator& rho_abe,
                                         const OptimizerConfig& config = {}) {
    if (rho_abe.factor_count() != 3)
        throw std::invalid_argument("tripartite_bound: need three factors");
    if (rho_abe.factor_dim(0) != p.dim() || rho_abe.factor_dim(0) != q.dim())
        throw std::invalid_argument("tripartite_bound: measurements do not fit factor A");

    TripartiteReport report;
    const DensityOperator rho_ab = rho_abe.marginal({0, 1});
    const DensityOperator rho_ae = rho_abe.marginal({0, 2});
    report.lhs = conditional_entropy_of_outcome(post_measurement_state(p, rho_ab, 0)) +
                 conditional_entropy_of_outcome(post_measurement_state(q, rho_ae, 0));

    // Purify ABE with ancilla E', trace out E, and treat BE' as one memory.
    const DensityOperator psi = purify(rho_abe);
    const DensityOperator rho_abeprime = psi.marginal({0, 1, 3}).fuse_factors(1, 2);
    const double j_be = classical_correlation(rho_abeprime, 0, config).first;
    report.discord_abe_prime = mutual_information(rho_abeprime) - j_be;
    report.j_ab = classical_correlation(rho_ab, 0, config).first;
    report.rhs = mu_bound(p, q) + std::max(0.0, report.discord_abe_prime - report.j_ab);
    report.slack = report.lhs - report.rhs;
    return report;
}

/// Per-step slacks (lhs - rhs) of the proof chain behind the tightened bound:
///   (0) S(P|B)+S(Q|B) = H(P)-I(P;B)+H(Q)-I(Q;B)      (identity)
///   (1) ... >= H(P)+H(Q)-2 J_A                        (J_A maximality)
///   (2) ... >= -2 log2 c + S(A) - 2 J_A               (refined bound on rho_A)
///   (3) ... = -2 log2 c + S(A|B) + D_A - J_A          (identity)
inline std::array<double, 4> proof_chain_check(const Measurement& p, const Measurement& q,
                                               const DensityOperator& rho,
                                               const OptimizerConfig& config = {}) {
    const DensityOperator bip = detail::as_bipartite(rho);
    const ClassicalQuantumState cq_p = post_measurement_state(p, bip, 0);
    const ClassicalQuantumState cq_q = post_measurement_state(q, bip, 0);
    const double s_pb = conditional_entropy_of_outcome(cq_p);
    const double s_qb = conditional_entropy_of_outcome(cq_q);
    const double h_p = shannon_entropy(cq_p.probabilities);
    const double h_q = shannon_entropy(cq_q.probabilities);
    const double i_pb = detail::cq_mutual_information(cq_p);
    const double i_qb = detail::cq_mutual_information(cq_q);
    const double j = classical_correlation(bip, 0, config).first;
    const double mutual = mutual_information(bip);
    const double disc = mutual - j;
    const double s_a = von_neumann_entropy(bip.marginal({0}).matrix());
    const double s_ab = conditional_entropy(bip, 1);
    const double mu = mu_bound(p, q);

    const double line0 = s_pb + s_qb;
    const double line1 = h_p - i_pb + h_q - i_qb;
    const double line2 = h_p + h_q - 2.0 * j;
    const double line3 = mu + s_a - 2.0 * j;
    const double line4 = mu + s_ab + disc - j;
    return {line0 - line1, line1 - line2, line2 - line3, line3 - line4};
}

/// Full side-by-side report for one (state, P, Q) triple.
inline BoundReport bound_report(const Measurement& p, const Measurement& q,
                                const DensityOperator& rho, const OptimizerConfig& config = {},
                                std::string state_id = "") {
    const DensityOperator bip = detail::as_bipartite(rho);
    BoundReport report;
    report.state_id = std::move(state_id);
    report.p_id = p.label();
    report.q_id = q.label();
    report.uncertainty_sum = uncertainty_sum(p, q, bip);
    report.mu_bound = mu_bound(p, q);
    report.refined_bound = refined_bound(p, q, bip.marginal({0}));
    report.berta_bound = berta_bound(p, q, bip);
    report.new_bound = new_bound(p, q, bip, config);
    report.slack_new = report.uncertainty_sum - report.new_bound;
    return report;
}

}  // namespace eub
