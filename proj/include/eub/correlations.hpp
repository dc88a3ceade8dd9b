// Entropic correlation measures on bipartite states: conditional entropy,
// mutual information, the classical correlation J_A obtained by maximizing
// the accessible information over rank-one projective measurements, and the
// quantum discord D_A = I(A;B) - J_A.
//
// The J_A search runs seeded random restarts (plus the computational and
// Fourier bases as deterministic starts, and a dense Bloch-sphere grid when
// the measured factor is a qubit) followed by coordinate-wise Givens-rotation
// sweeps with golden-section line search. The returned value is a certified
// lower bound on the true J_A and never decreases when restarts are added.
#pragma once

#include <eub/measurements.hpp>

namespace eub {

struct OptimizerConfig {
    int restarts = 32;
    std::uint64_t seed = 0;
    double tolerance = 1e-9;
    int max_sweeps = 500;
    int dim_limit = 4;           // measured-factor cap; override for experiments
    bool override_dim_limit = false;
};

/// One state's correlation measures side by side, with the measurement that
/// achieved the reported classical correlation.
struct CorrelationReport {
    double conditional_entropy_ab = 0.0;  // S(A|B)
    double mutual_information = 0.0;      // I(A;B)
    double classical_correlation = 0.0;   // J_A (lower bound from the search)
    double discord = 0.0;                 // D_A = I(A;B) - J_A
    long optimizer_iterations = 0;        // objective evaluations
    Measurement optimizer_best_measurement;
};

/// S(rest | factor) = S(rho) - S(rho_factor).
inline double conditional_entropy(const DensityOperator& rho, int conditioned_on) {
    if (rho.factor_count() < 2)
        throw std::invalid_argument("conditional_entropy: need at least two factors");
    const DensityOperator part = rho.marginal({conditioned_on});
    return von_neumann_entropy(rho.matrix()) - von_neumann_entropy(part.matrix());
}

/// I(A;B) = S(A) + S(B) - S(AB) for a two-factor state.
inline double mutual_information(const DensityOperator& rho) {
    if (rho.factor_count() != 2)
        throw std::invalid_argument("mutual_information: need exactly two factors");
    return von_neumann_entropy(rho.marginal({0}).matrix()) +
           von_neumann_entropy(rho.marginal({1}).matrix()) -
           von_neumann_entropy(rho.matrix());
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Evaluates I(X;B) = S(B) - sum_k p_k S(rho_B|k) for rank-one projective
/// measurements given by unitary columns on the measured factor. The state is
/// pre-sliced into blocks so each evaluation is a small contraction plus
/// eigenvalue entropies.
class AccessibleInfoEvaluator {
  public:
    AccessibleInfoEvaluator(const DensityOperator& rho, int measured) {
        const auto& dims = rho.dims();
        da_ = dims.at(static_cast<std::size_t>(measured));
        long long pre = 1, post = 1;
        for (int f = 0; f < measured; ++f) pre *= dims[static_cast<std::size_t>(f)];
        for (int f = measured + 1; f < static_cast<int>(dims.size()); ++f)
            post *= dims[static_cast<std::size_t>(f)];
        mem_ = static_cast<int>(pre * post);

        blocks_.assign(static_cast<std::size_t>(da_) * da_, ComplexMatrix::Zero(mem_, mem_));
        const ComplexMatrix& m = rho.matrix();
        for (int s = 0; s < da_; ++s)
            for (int t = 0; t < da_; ++t) {
                ComplexMatrix& b = blocks_[static_cast<std::size_t>(s) * da_ + t];
                for (long long p = 0; p < pre; ++p)
                    for (long long q = 0; q < pre; ++q)
                        for (long long r = 0; r < post; ++r)
                            for (long long c = 0; c < post; ++c)
                                b(p * post + r, q * post + c) =
                                    m((p * da_ + s) * post + r, (q * da_ + t) * post + c);
            }

        ComplexMatrix rho_b = ComplexMatrix::Zero(mem_, mem_);
        for (int s = 0; s < da_; ++s) rho_b += blocks_[static_cast<std::size_t>(s) * da_ + s];
        memory_entropy_ = von_neumann_entropy(rho_b);
        scratch_.resize(mem_, mem_);
    }

    int measured_dim() const { return da_; }
    double memory_entropy() const { return memory_entropy_; }
    long evaluations() const { return evals_; }

    /// I(X;B) for the basis formed by the columns of u.
    double operator()(const ComplexMatrix& u) {
        ++evals_;
        double conditional = 0.0;
        for (int k = 0; k < da_; ++k) {
            scratch_.setZero();
            for (int s = 0; s < da_; ++s) {
                const Complex us = std::conj(u(s, k));
                for (int t = 0; t < da_; ++t)
                    scratch_.noalias() += (us * u(t, k)) * blocks_[static_cast<std::size_t>(s) * da_ + t];
            }
            conditional += unnormalized_entropy_term(scratch_);
        }
        return memory_entropy_ - conditional;
    }

  private:
    // p S(M/p) = -sum_i mu_i log2 mu_i + p log2 p for PSD M with trace p.
    double unnormalized_entropy_term(const ComplexMatrix& m) {
        const double p = m.trace().real();
        if (p <= 1e-15) return 0.0;
        double term = p * std::log2(p);
        if (mem_ == 2) {
            const double a = m(0, 0).real();
            const double d = m(1, 1).real();
            const double half = 0.5 * (a - d);
            const double disc = std::sqrt(half * half + std::norm(m(0, 1)));
            const double mu1 = 0.5 * (a + d) + disc;
            const double mu2 = 0.5 * (a + d) - disc;
            if (mu1 > 0.0) term -= mu1 * std::log2(mu1);
            if (mu2 > 0.0) term -= mu2 * std::log2(mu2);
            return term;
        }
        solver_.compute(m, Eigen::EigenvaluesOnly);
        const RealVector& mu = solver_.eigenvalues();
        for (Eigen::Index i = 0; i < mu.size(); ++i)
            if (mu(i) > 0.0) term -= mu(i) * std::log2(mu(i));
        return term;
    }

    int da_ = 0;
    int mem_ = 0;
    double memory_entropy_ = 0.0;
    std::vector<ComplexMatrix> blocks_;
    ComplexMatrix scratch_;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver_;
    long evals_ = 0;
};

/// Golden-section search for the maximum of f on [lo, hi].
template <typename F>
double golden_section_max(F&& f, double lo, double hi, double xtol, double* best_val) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > xtol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    const double x = 0.5 * (a + b);
    const double fx = f(x);
    if (best_val) *best_val = fx;
    return x;
}

inline ComplexMatrix givens_rotation(int d, int i, int j, double theta, double phi) {
    ComplexMatrix g = ComplexMatrix::Identity(d, d);
    const double c = std::cos(theta), s = std::sin(theta);
    const Complex e(std::cos(phi), std::sin(phi));
    g(i, i) = c;
    g(j, j) = c;
    g(i, j) = -s * std::conj(e);
    g(j, i) = s * e;
    return g;
}

/// Coordinate-wise refinement: per column pair, a coarse (theta, phi) scan
/// followed by alternating golden-section line searches; sweeps repeat until
/// the per-sweep improvement drops below tol.
inline double refine_basis(AccessibleInfoEvaluator& eval, ComplexMatrix& u, double current,
                           double tol, int max_sweeps) {
    const int d = eval.measured_dim();
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        const double sweep_start = current;
        for (int i = 0; i < d; ++i) {
            for (int j = i + 1; j < d; ++j) {
                auto rotated = [&](double theta, double phi) {
                    return eval(u * givens_rotation(d, i, j, theta, phi));
                };
                double best_theta = 0.0, best_phi = 0.0, best = current;
                for (int ti = -4; ti <= 4; ++ti) {
                    const double theta = ti * (std::numbers::pi / 8.0);
                    if (ti == 0) continue;  // identity already scored
                    for (int pi_ = 0; pi_ < 8; ++pi_) {
                        const double phi = pi_ * (std::numbers::pi / 4.0);
                        const double v = rotated(theta, phi);
                        if (v > best) {
                            best = v;
                            best_theta = theta;
                            best_phi = phi;
                        }
                    }
                }
                for (int round = 0; round < 2; ++round) {
                    double v = best;
                    const double t = golden_section_max(
                        [&](double theta) { return rotated(theta, best_phi); },
                        best_theta - std::numbers::pi / 8.0, best_theta + std::numbers::pi / 8.0,
                        1e-7, &v);
                    if (v > best) {
                        best = v;
                        best_theta = t;
                    }
                    const double p = golden_section_max(
                        [&](double phi) { return rotated(best_theta, phi); },
                        best_phi - std::numbers::pi / 4.0, best_phi + std::numbers::pi / 4.0, 1e-7,
                        &v);
                    if (v > best) {
                        best = v;
                        best_phi = p;
                    }
                }
                if (best > current) {
                    u = u * givens_rotation(d, i, j, best_theta, best_phi);
                    current = best;
                }
            }
        }
        if (current - sweep_start < tol) break;
    }
    return current;
}

inline ComplexMatrix bloch_basis(double theta, double phi) {
    const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
    const Complex e(std::cos(phi), std::sin(phi));
    ComplexMatrix u(2, 2);
    u(0, 0) = c;
    u(1, 0) = s * e;
    u(0, 1) = -s * std::conj(e);
    u(1, 1) = c;
    return u;
}

struct AccessibleInfoResult {
    double value = 0.0;
    ComplexMatrix basis;
    long evaluations = 0;
};

/// max_{rank-one projective X} I(X;B) on a two-factor state.
inline AccessibleInfoResult maximize_accessible_information(const DensityOperator& rho,
                                                            int measured,
                                                            const OptimizerConfig& config) {
    if (rho.factor_count() != 2)
        throw std::invalid_argument("classical_correlation: need exactly two factors");
    const int da = rho.factor_dim(measured);
    if (da > config.dim_limit && !config.override_dim_limit)
        throw std::invalid_argument(
            "classical_correlation: measured dimension exceeds the optimizer limit (" +
            std::to_string(config.dim_limit) + "); set the override to search anyway");

    AccessibleInfoEvaluator eval(rho, measured);

    std::vector<ComplexMatrix> starts;
    starts.push_back(ComplexMatrix::Identity(da, da));
    ComplexMatrix fourier(da, da);
    for (int x = 0; x < da; ++x)
        for (int z = 0; z < da; ++z) {
            const double phase = 2.0 * std::numbers::pi * x * z / da;
            fourier(z, x) = Complex(std::cos(phase), std::sin(phase)) /
                            std::sqrt(static_cast<double>(da));
        }
    starts.push_back(fourier);

    if (da == 2) {
        // Dense Bloch-sphere bracket: theta in [0, pi/2], phi in [0, 2 pi),
        // both in steps of pi/200 (antipodal bases coincide).
        double best = -1.0;
        double bt = 0.0, bp = 0.0;
        const double step = std::numbers::pi / 200.0;
        for (int ti = 0; ti <= 100; ++ti) {
            const double theta = ti * step;
            for (int pi_ = 0; pi_ < 400; ++pi_) {
                const double phi = pi_ * step;
                const double v = eval(bloch_basis(theta, phi));
                if (v > best) {
                    best = v;
                    bt = theta;
                    bp = phi;
                }
            }
        }
        starts.push_back(bloch_basis(bt, bp));
    }

    for (int r = 0; r < config.restarts; ++r)
        starts.push_back(random_unitary(da, splitmix64(config.seed) + static_cast<std::uint64_t>(r)));

    AccessibleInfoResult result;
    result.value = -std::numeric_limits<double>::infinity();
    for (auto& u : starts) {
        double v = eval(u);
        v = refine_basis(eval, u, v, config.tolerance, config.max_sweeps);
        if (v > result.value) {
            result.value = v;
            result.basis = u;
        }
    }
    result.evaluations = eval.evaluations();
    return result;
}

}  // namespace detail

/// Classical correlation J_A: the maximal mutual information I(X;B) over
/// rank-one projective measurements on `measured`. Returns the value (a
/// certified lower bound on J_A, monotone in optimizer effort) and the
/// achieving measurement.
inline std::pair<double, Measurement> classical_correlation(const DensityOperator& rho,
                                                            int measured,
                                                            const OptimizerConfig& config = {}) {
    auto r = detail::maximize_accessible_information(rho, measured, config);
    return {r.value, projective_from_unitary(r.basis, "optimized")};
}

/// Quantum discord D_A = I(A;B) - J_A.
inline double discord(const DensityOperator& rho, int measured, const OptimizerConfig& config = {}) {
    return mutual_information(rho) - classical_correlation(rho, measured, config).first;
}

/// All correlation measures of a two-factor state with A = factor 0 measured.
inline CorrelationReport correlation_report(const DensityOperator& rho, int measured,
                                            const OptimizerConfig& config = {}) {
    auto r = detail::maximize_accessible_information(rho, measured, config);
    CorrelationReport report{.conditional_entropy_ab = conditional_entropy(rho, measured == 0 ? 1 : 0),
                             .mutual_information = mutual_information(rho),
                             .classical_correlation = r.value,
                             .discord = 0.0,
                             .optimizer_iterations = r.evaluations,
                             .optimizer_best_measurement =
                                 projective_from_unitary(r.basis, "optimized")};
    report.discord = report.mutual_information - report.classical_correlation;
    return report;
}

}  // namespace eub
