// Parameter sweeps over the Werner and isotropic families with
// Fourier-conjugate measurements, producing deterministic CSV: the two-qubit
// noise sweep (berta vs tightened bound) and the (d, lambda) family grids in
// closed-form, numeric, or side-by-side comparison mode.
#pragma once

#include <eub/bounds.hpp>
#include <eub/closed_forms.hpp>

#include <cstdio>
#include <optional>
#include <sstream>

namespace eub {

enum class SweepMode { closed, numeric, both };

inline SweepMode sweep_mode_from_string(const std::string& s) {
    if (s == "closed") return SweepMode::closed;
    if (s == "numeric") return SweepMode::numeric;
    if (s == "both") return SweepMode::both;
    throw std::invalid_argument("mode must be closed, numeric or both");
}

struct Figure1Row {
    double p = 0.0;
    double berta_bound = 0.0;
    double new_bound = 0.0;
    double uncertainty_sum = 0.0;
};

struct SweepRow {
    std::string family;
    int d = 0;
    double lam = 0.0;
    std::optional<double> p;  // werner d=2 reparametrization, when in range
    double uncertainty_sum = 0.0;
    double mu_bound = 0.0;
    double refined_bound = 0.0;
    double berta_bound = 0.0;
    double new_bound = 0.0;
    double j_a = 0.0;
    double d_a = 0.0;
    double s_cond_ab = 0.0;
    // closed-vs-numeric absolute differences, filled in `both` mode
    std::optional<double> diff_uncertainty_sum;
    std::optional<double> diff_berta_bound;
    std::optional<double> diff_new_bound;
    std::optional<double> diff_j_a;
};

/// Two-qubit Werner sweep with sigma_x / sigma_z: the Berta bound, the
/// tightened bound and the measured uncertainty sum per noise value p.
inline std::vector<Figure1Row> figure1_rows(int p_steps, const OptimizerConfig& config = {}) {
    if (p_steps < 2) throw std::invalid_argument("figure1: need at least 2 steps");
    const Measurement mx = pauli_x_basis();
    const Measurement mz = pauli_z_basis();
    std::vector<Figure1Row> rows;
    rows.reserve(static_cast<std::size_t>(p_steps));
    for (int i = 0; i < p_steps; ++i) {
        const double p = static_cast<double>(i) / (p_steps - 1);
        const DensityOperator rho = werner_main(p);
        Figure1Row row;
        row.p = p;
        row.berta_bound = berta_bound(mx, mz, rho);
        row.new_bound = new_bound(mx, mz, rho, config);
        row.uncertainty_sum = uncertainty_sum(mx, mz, rho);
        rows.push_back(row);
    }
    return rows;
}

namespace detail {

inline std::optional<double> werner_p_of_lambda(const std::string& family, int d, double lam) {
    if (family != "werner" || d != 2) return std::nullopt;
    const double p = (4.0 * lam - 1.0) / 3.0;
    if (p < -1e-12) return std::nullopt;
    return std::max(p, 0.0);
}

}  // namespace detail

/// One family grid row per (d, lambda) with lambda on a uniform grid of
/// `lam_steps` points over [0, 1], Fourier-conjugate measurements.
inline std::vector<SweepRow> family_sweep_rows(Family family, const std::vector<int>& d_list,
                                               int lam_steps, SweepMode mode,
                                               const OptimizerConfig& config = {}) {
    if (lam_steps < 2) throw std::invalid_argument("sweep: need at least 2 lambda steps");
    const std::string family_name = family == Family::werner ? "werner" : "isotropic";
    std::vector<SweepRow> rows;
    for (int d : d_list) {
        if (d < 2) throw std::invalid_argument("sweep: d must be >= 2");
        const double logd = std::log2(static_cast<double>(d));
        const Measurement mp = computational_basis(d);
        const Measurement mq = fourier_basis(d);
        for (int i = 0; i < lam_steps; ++i) {
            const double lam = static_cast<double>(i) / (lam_steps - 1);
            const FamilyPoint pt{family, d, lam};
            SweepRow row;
            row.family = family_name;
            row.d = d;
            row.lam = lam;
            row.p = detail::werner_p_of_lambda(family_name, d, lam);

            double closed_sum = 0, closed_berta = 0, closed_new = 0, closed_j = 0;
            if (mode != SweepMode::numeric) {
                closed_sum = family_uncertainty_sum(pt);
                closed_berta = family_berta_bound(pt);
                closed_new = family_new_bound(pt);
                closed_j = family_classical_correlation(pt);
                row.uncertainty_sum = closed_sum;
                row.berta_bound = closed_berta;
                row.new_bound = closed_new;
                row.j_a = closed_j;
                row.mu_bound = logd;
                row.refined_bound = 2.0 * logd;        // family marginals are I/d
                row.s_cond_ab = closed_berta - logd;   // berta = -2 log2 c + S(A|B)
                row.d_a = (2.0 * logd - closed_berta) - closed_j;
            }
            if (mode != SweepMode::closed) {
                const DensityOperator rho =
                    family == Family::werner ? werner_general(d, lam) : isotropic(d, lam);
                const double num_sum = uncertainty_sum(mp, mq, rho);
                const double num_berta = berta_bound(mp, mq, rho);
                const double num_j = classical_correlation(rho, 0, config).first;
                const double num_new = new_bound_given_j(mp, mq, rho, num_j);
                if (mode == SweepMode::numeric) {
                    row.uncertainty_sum = num_sum;
                    row.berta_bound = num_berta;
                    row.new_bound = num_new;
                    row.j_a = num_j;
                    row.mu_bound = mu_bound(mp, mq);
                    row.refined_bound = refined_bound(mp, mq, rho.marginal({0}));
                    row.s_cond_ab = conditional_entropy(rho, 1);
                    row.d_a = mutual_information(rho) - num_j;
                } else {
                    row.diff_uncertainty_sum = std::abs(closed_sum - num_sum);
                    row.diff_berta_bound = std::abs(closed_berta - num_berta);
                    row.diff_new_bound = std::abs(closed_new - num_new);
                    row.diff_j_a = std::abs(closed_j - num_j);
                }
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

namespace detail {

inline std::string format_sig(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

inline std::string format_opt(const std::optional<double>& v) {
    return v ? format_sig(*v) : std::string();
}

}  // namespace detail

inline std::string figure1_csv(const std::vector<Figure1Row>& rows) {
    std::ostringstream out;
    out << "p,berta_bound,new_bound,uncertainty_sum\n";
    for (const auto& r : rows)
        out << detail::format_sig(r.p) << ',' << detail::format_sig(r.berta_bound) << ','
            << detail::format_sig(r.new_bound) << ',' << detail::format_sig(r.uncertainty_sum)
            << '\n';
    return out.str();
}

inline std::string sweep_csv(const std::vector<SweepRow>& rows, SweepMode mode) {
    std::ostringstream out;
    out << "family,d,lam,p,uncertainty_sum,mu_bound,refined_bound,berta_bound,new_bound,"
           "J_A,D_A,S_cond_AB";
    if (mode == SweepMode::both)
        out << ",diff_uncertainty_sum,diff_berta_bound,diff_new_bound,diff_J_A";
    out << '\n';
    for (const auto& r : rows) {
        out << r.family << ',' << r.d << ',' << detail::format_sig(r.lam) << ','
            << detail::format_opt(r.p) << ',' << detail::format_sig(r.uncertainty_sum) << ','
            << detail::format_sig(r.mu_bound) << ',' << detail::format_sig(r.refined_bound) << ','
            << detail::format_sig(r.berta_bound) << ',' << detail::format_sig(r.new_bound) << ','
            << detail::format_sig(r.j_a) << ',' << detail::format_sig(r.d_a) << ','
            << detail::format_sig(r.s_cond_ab);
        if (mode == SweepMode::both)
            out << ',' << detail::format_opt(r.diff_uncertainty_sum) << ','
                << detail::format_opt(r.diff_berta_bound) << ','
                << detail::format_opt(r.diff_new_bound) << ',' << detail::format_opt(r.diff_j_a);
        out << '\n';
    }
    return out.str();
}

/// Every emitted row must satisfy uncertainty_sum >= new_bound >= berta_bound
/// within 1e-6. Returns the number of violating rows.
inline int count_ordering_violations(const std::vector<SweepRow>& rows, double tol = 1e-6) {
    int bad = 0;
    for (const auto& r : rows)
        if (r.uncertainty_sum < r.new_bound - tol || r.new_bound < r.berta_bound - tol) ++bad;
    return bad;
}

inline int count_ordering_violations(const std::vector<Figure1Row>& rows, double tol = 1e-6) {
    int bad = 0;
    for (const auto& r : rows)
        if (r.uncertainty_sum < r.new_bound - tol || r.new_bound < r.berta_bound - tol) ++bad;
    return bad;
}

}  // namespace eub
