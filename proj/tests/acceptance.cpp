// Acceptance suite: one pass/fail line per criterion, each at its stated
// tolerance. Exits with the number of failed criteria.

#include <eub/eub.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

using namespace eub;

namespace {

int failures = 0;

double seconds_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(int number, const std::string& name, bool pass, const std::string& details) {
    std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", number, name.c_str(),
                details.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

void criterion_1_figure1() {
    const auto start = std::chrono::steady_clock::now();
    const auto rows = figure1_rows(101);
    double max_closed_dev = 0.0, max_sum_dev = 0.0, max_order_violation = 0.0, best_gap = 0.0;
    for (const auto& r : rows) {
        const double closed = 2.0 * binary_entropy((1.0 - r.p) / 2.0);
        max_closed_dev = std::max(max_closed_dev, std::abs(r.new_bound - closed));
        max_sum_dev = std::max(max_sum_dev, std::abs(r.new_bound - r.uncertainty_sum));
        max_order_violation = std::max(max_order_violation, r.berta_bound - r.new_bound);
        if (r.p > 0.1 && r.p < 0.9) best_gap = std::max(best_gap, r.new_bound - r.berta_bound);
    }
    const double elapsed = seconds_since(start);
    const bool pass = max_closed_dev <= 1e-9 && max_sum_dev <= 1e-9 &&
                      max_order_violation <= 1e-12 && best_gap > 0.01 && elapsed < 5.0;
    report(1, "figure-1 reproduction on the two-qubit Werner family", pass,
           "max closed-form dev " + fmt(max_closed_dev) + ", max sum dev " + fmt(max_sum_dev) +
               ", berta gap " + fmt(best_gap) + ", " + fmt(elapsed) + " s");
}

void family_tightness(int number, Family family, const std::string& name) {
    const auto start = std::chrono::steady_clock::now();
    double max_new_dev = 0.0, max_sum_dev = 0.0, max_assembled_dev = 0.0;
    for (int d : {2, 3, 4, 5}) {
        const Measurement mp = computational_basis(d);
        const Measurement mq = fourier_basis(d);
        for (int i = 0; i <= 20; ++i) {
            const double lam = i * 0.05;
            const DensityOperator rho =
                family == Family::werner ? werner_general(d, lam) : isotropic(d, lam);
            const double numeric = uncertainty_sum(mp, mq, rho);
            const FamilyPoint pt{family, d, lam};
            max_new_dev = std::max(max_new_dev, std::abs(numeric - family_new_bound(pt)));
            max_sum_dev = std::max(max_sum_dev, std::abs(numeric - family_uncertainty_sum(pt)));
            // numeric bound pipeline fed with the closed-form J_A
            const double assembled =
                new_bound_given_j(mp, mq, rho, family_classical_correlation(pt));
            max_assembled_dev = std::max(max_assembled_dev, std::abs(numeric - assembled));
        }
    }
    const double elapsed = seconds_since(start);
    const bool pass =
        max_new_dev <= 1e-9 && max_sum_dev <= 1e-9 && max_assembled_dev <= 1e-9 && elapsed < 30.0;
    report(number, name, pass,
           "max |sum - new| " + fmt(max_new_dev) + ", max |sum - closed sum| " + fmt(max_sum_dev) +
               ", max |sum - assembled new| " + fmt(max_assembled_dev) + ", " + fmt(elapsed) +
               " s");
}

void criterion_4_optimizer_vs_closed_forms() {
    const auto start = std::chrono::steady_clock::now();
    double worst_undershoot = 0.0, worst_overshoot = 0.0;
    const OptimizerConfig config;  // spec defaults: 32 restarts, seed 0, tol 1e-9
    for (const Family family : {Family::werner, Family::isotropic}) {
        for (int d : {2, 3}) {
            for (int i = 0; i <= 10; ++i) {
                const double lam = i * 0.1;
                const DensityOperator rho =
                    family == Family::werner ? werner_general(d, lam) : isotropic(d, lam);
                const double closed = family_classical_correlation({family, d, lam});
                const double j = classical_correlation(rho, 0, config).first;
                worst_undershoot = std::max(worst_undershoot, closed - j);
                worst_overshoot = std::max(worst_overshoot, j - closed);
            }
        }
    }
    const double elapsed = seconds_since(start);
    const bool pass = worst_undershoot <= 1e-3 && worst_overshoot <= 1e-9 && elapsed < 300.0;
    report(4, "optimizer J_A against the Chitambar closed forms", pass,
           "max undershoot " + fmt(worst_undershoot) + ", max overshoot " + fmt(worst_overshoot) +
               ", " + fmt(elapsed) + " s");
}

void criterion_5_random_states() {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<std::pair<Measurement, Measurement>> pairs = {
        {pauli_x_basis(), pauli_z_basis()}, {computational_basis(2), fourier_basis(2)}};
    const OptimizerConfig config;
    double worst_sum_slack = 1e300, worst_chain_ineq = 1e300;
    double worst_identity = 0.0, worst_new_vs_berta = 1e300;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const DensityOperator rho = random_density({2, 2}, seed);
        const double j = classical_correlation(rho, 0, config).first;
        for (const auto& [mp, mq] : pairs) {
            const double sum = uncertainty_sum(mp, mq, rho);
            const double berta = berta_bound(mp, mq, rho);
            const double tightened = new_bound_given_j(mp, mq, rho, j);
            worst_sum_slack = std::min(worst_sum_slack, sum - tightened);
            worst_new_vs_berta = std::min(worst_new_vs_berta, tightened - berta);
            const auto slacks = proof_chain_check(mp, mq, rho, config);
            worst_identity = std::max({worst_identity, std::abs(slacks[0]), std::abs(slacks[3])});
            worst_chain_ineq = std::min({worst_chain_ineq, slacks[1], slacks[2]});
        }
    }
    const double elapsed = seconds_since(start);
    const bool pass = worst_sum_slack >= -1e-6 && worst_new_vs_berta >= -1e-6 &&
                      worst_identity <= 1e-9 && worst_chain_ineq >= -1e-6;
    report(5, "bounds and proof chain on 500 random two-qubit states", pass,
           "min sum slack " + fmt(worst_sum_slack) + ", min new-berta " + fmt(worst_new_vs_berta) +
               ", max identity dev " + fmt(worst_identity) + ", min chain slack " +
               fmt(worst_chain_ineq) + ", " + fmt(elapsed) + " s");
}

void criterion_6_endpoints() {
    const OptimizerConfig config;
    bool pass = true;
    std::string details;

    // maximally entangled states with conjugate measurements
    double worst_maxent = 0.0;
    for (int d : {2, 3}) {
        const Measurement mp = computational_basis(d);
        const Measurement mq = fourier_basis(d);
        const DensityOperator rho = maximally_entangled(d);
        worst_maxent = std::max({worst_maxent, std::abs(uncertainty_sum(mp, mq, rho)),
                                 std::abs(new_bound(mp, mq, rho, config))});
    }
    pass = pass && worst_maxent <= 1e-9;
    details += "maxent dev " + fmt(worst_maxent);

    // product states: new bound reduces to the refined bound
    double worst_product = 0.0;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const DensityOperator a = random_density({2}, seed);
        const DensityOperator b = random_density({2}, seed + 900);
        const DensityOperator rho(tensor(a.matrix(), b.matrix()), {2, 2});
        const double dev = std::abs(new_bound(pauli_x_basis(), pauli_z_basis(), rho, config) -
                                    refined_bound(pauli_x_basis(), pauli_z_basis(), a));
        worst_product = std::max(worst_product, dev);
    }
    pass = pass && worst_product <= 1e-9;
    details += ", product dev " + fmt(worst_product);

    // classical-quantum states: the max term vanishes
    double worst_cq = 0.0;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const DensityOperator r0 = random_density({2}, seed + 50);
        const DensityOperator r1 = random_density({2}, seed + 150);
        ComplexMatrix m = ComplexMatrix::Zero(4, 4);
        m.block(0, 0, 2, 2) = 0.4 * r0.matrix();
        m.block(2, 2, 2, 2) = 0.6 * r1.matrix();
        const DensityOperator rho(m, {2, 2});
        const double j = classical_correlation(rho, 0, config).first;
        const double max_term = std::max(0.0, mutual_information(rho) - 2.0 * j);
        worst_cq = std::max(worst_cq, max_term);
    }
    pass = pass && worst_cq <= 1e-6;
    details += ", cq max-term " + fmt(worst_cq);

    report(6, "endpoint exactness (maximally entangled, product, classical-quantum)", pass,
           details);
}

void criterion_7_eof_tightness() {
    const double bound = eof_lower_bound(pauli_x_basis(), pauli_z_basis(), maximally_entangled(2),
                                         identity_pairing(2), identity_pairing(2));
    const bool pass = std::abs(bound - 1.0) <= 1e-9;
    report(7, "entanglement-of-formation bound tight on the Bell state", pass,
           "bound " + fmt(bound));
}

void criterion_8_tripartite() {
    const auto start = std::chrono::steady_clock::now();
    const Measurement mx = pauli_x_basis();
    const Measurement mz = pauli_z_basis();
    const OptimizerConfig config;
    double worst_slack = 1e300;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const DensityOperator psi = random_pure({2, 2, 2}, seed);
        const TripartiteReport rep = tripartite_bound(mx, mz, psi, config);
        worst_slack = std::min(worst_slack, rep.slack);
    }
    const double elapsed = seconds_since(start);
    const bool pass = worst_slack >= -1e-6;
    report(8, "tripartite bound on 500 random pure 2x2x2 states", pass,
           "min slack " + fmt(worst_slack) + ", " + fmt(elapsed) + " s");
}

}  // namespace

int main() {
    criterion_1_figure1();
    family_tightness(2, Family::werner, "Werner tightness across (d, lambda)");
    family_tightness(3, Family::isotropic, "isotropic tightness across (d, lambda)");
    criterion_4_optimizer_vs_closed_forms();
    criterion_5_random_states();
    criterion_6_endpoints();
    criterion_7_eof_tightness();
    criterion_8_tripartite();
    std::printf("%d of 8 criteria passed\n", 8 - failures);
    return failures;
}
