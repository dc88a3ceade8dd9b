// eub: entropic uncertainty bounds with quantum memory.
//
// Subcommands:
//   figure1     two-qubit Werner noise sweep (CSV)
//   sweep       Werner/isotropic (d, lambda) grids, closed-form and/or numeric (CSV)
//   analyze     full bound + correlation report for a state file
//   tripartite  memory-vs-eavesdropper bound for a tripartite state
//
// Exit codes: 0 success, 1 usage or parse error, 2 inequality invariant
// violated beyond tolerance.

#include <eub/eub.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

struct CommonFlags {
    std::uint64_t seed = 0;
    int restarts = 32;
    double tol = 1e-9;
    bool dim_override = false;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--seed", flags.seed, "optimizer seed");
    cmd->add_option("--restarts", flags.restarts, "optimizer random restarts")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--tol", flags.tol, "optimizer refinement tolerance");
    cmd->add_flag("--dim-override", flags.dim_override,
                  "search J_A above the default measured-dimension cap");
}

eub::OptimizerConfig make_config(const CommonFlags& flags) {
    eub::OptimizerConfig config;
    config.seed = flags.seed;
    config.restarts = flags.restarts;
    config.tolerance = flags.tol;
    config.override_dim_limit = flags.dim_override;
    return config;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::string fmt(double v) { return eub::detail::format_sig(v); }

int run_figure1(int p_steps, const std::string& out, const CommonFlags& flags) {
    const auto rows = eub::figure1_rows(p_steps, make_config(flags));
    write_text(out, eub::figure1_csv(rows));
    if (eub::count_ordering_violations(rows) > 0) {
        std::cerr << "eub: bound ordering violated in emitted rows\n";
        return 2;
    }
    return 0;
}

int run_sweep(const std::string& family, std::vector<int> d_list, int lam_steps,
              const std::string& mode_name, const std::string& out, const CommonFlags& flags) {
    const eub::Family family_id = [&] {
        if (family == "werner") return eub::Family::werner;
        if (family == "isotropic") return eub::Family::isotropic;
        throw CLI::ValidationError("--family", "must be werner or isotropic");
    }();
    const eub::SweepMode mode = eub::sweep_mode_from_string(mode_name);
    if (d_list.empty()) d_list = {2};
    if (mode != eub::SweepMode::closed)
        for (int d : d_list)
            if (d > 6) throw CLI::ValidationError("--d", "numeric mode supports d <= 6");
    const auto rows = eub::family_sweep_rows(family_id, d_list, lam_steps, mode, make_config(flags));
    write_text(out, eub::sweep_csv(rows, mode));
    if (eub::count_ordering_violations(rows) > 0) {
        std::cerr << "eub: bound ordering violated in emitted rows\n";
        return 2;
    }
    return 0;
}

int run_analyze(const std::string& state_path, const std::string& p_spec,
                const std::string& q_spec, const std::string& json_out,
                const CommonFlags& flags) {
    const eub::DensityOperator rho = eub::load_state(state_path);
    if (rho.factor_count() < 2)
        throw std::invalid_argument("analyze: state needs at least two factors");
    const eub::Measurement p = eub::resolve_measurement(p_spec, rho.factor_dim(0));
    const eub::Measurement q = eub::resolve_measurement(q_spec, rho.factor_dim(0));
    const eub::OptimizerConfig config = make_config(flags);

    const eub::DensityOperator bip =
        rho.factor_count() == 2 ? rho : rho.fuse_factors(1, rho.factor_count() - 1);
    const eub::BoundReport bounds = eub::bound_report(p, q, bip, config, state_path);
    const eub::CorrelationReport correlations = eub::correlation_report(bip, 0, config);

    std::vector<std::string> violations;
    const double tol = 1e-6;
    if (bounds.uncertainty_sum < bounds.new_bound - tol)
        violations.push_back("uncertainty_sum < new_bound");
    if (bounds.new_bound < bounds.berta_bound - tol)
        violations.push_back("new_bound < berta_bound");
    if (correlations.classical_correlation < -tol ||
        correlations.classical_correlation > correlations.mutual_information + tol)
        violations.push_back("J_A outside [0, I(A;B)]");

    std::ostringstream text;
    text << "state: " << state_path << "  dims:";
    for (int d : rho.dims()) text << ' ' << d;
    text << "\nP: " << p_spec << "  Q: " << q_spec << "\n"
         << "uncertainty sum S(P|B)+S(Q|B) = " << fmt(bounds.uncertainty_sum) << "\n"
         << "maassen-uffink bound          = " << fmt(bounds.mu_bound) << "\n"
         << "refined bound (-2logc + S(A)) = " << fmt(bounds.refined_bound) << "\n"
         << "berta bound                   = " << fmt(bounds.berta_bound) << "\n"
         << "new bound                     = " << fmt(bounds.new_bound) << "\n"
         << "slack (sum - new)             = " << fmt(bounds.slack_new) << "\n"
         << "S(A|B) = " << fmt(correlations.conditional_entropy_ab)
         << "  I(A;B) = " << fmt(correlations.mutual_information)
         << "  J_A = " << fmt(correlations.classical_correlation)
         << "  D_A = " << fmt(correlations.discord) << "\n"
         << "optimizer evaluations = " << correlations.optimizer_iterations << "\n";
    for (const auto& v : violations) text << "VIOLATION: " << v << "\n";
    std::cout << text.str();

    if (!json_out.empty()) {
        nlohmann::json j{
            {"state", state_path},
            {"p", p_spec},
            {"q", q_spec},
            {"bounds",
             {{"uncertainty_sum", bounds.uncertainty_sum},
              {"mu_bound", bounds.mu_bound},
              {"refined_bound", bounds.refined_bound},
              {"berta_bound", bounds.berta_bound},
              {"new_bound", bounds.new_bound},
              {"slack_new", bounds.slack_new}}},
            {"correlations",
             {{"conditional_entropy_ab", correlations.conditional_entropy_ab},
              {"mutual_information", correlations.mutual_information},
              {"classical_correlation", correlations.classical_correlation},
              {"discord", correlations.discord},
              {"optimizer_iterations", correlations.optimizer_iterations}}},
            {"violations", violations}};
        std::ofstream out(json_out);
        if (!out) throw std::runtime_error("cannot write " + json_out);
        out << j.dump(2) << "\n";
    }
    return violations.empty() ? 0 : 2;
}

int run_tripartite(const std::string& state_path, const std::string& p_spec,
                   const std::string& q_spec, int random_count, const CommonFlags& flags) {
    const eub::OptimizerConfig config = make_config(flags);

    auto report_one = [&](const eub::DensityOperator& rho, const std::string& id) {
        const eub::Measurement p = eub::resolve_measurement(p_spec, rho.factor_dim(0));
        const eub::Measurement q = eub::resolve_measurement(q_spec, rho.factor_dim(0));
        return std::pair<eub::TripartiteReport, std::string>(
            eub::tripartite_bound(p, q, rho, config), id);
    };

    const double tol = 1e-6;
    int violations = 0;
    if (random_count > 0) {
        double worst = std::numeric_limits<double>::infinity();
        for (int i = 0; i < random_count; ++i) {
            const auto rho = eub::random_pure({2, 2, 2}, flags.seed + static_cast<std::uint64_t>(i));
            const auto [rep, id] = report_one(rho, "random-" + std::to_string(i));
            worst = std::min(worst, rep.slack);
            if (rep.slack < -tol) {
                ++violations;
                std::cout << id << ": VIOLATION slack = " << fmt(rep.slack) << "\n";
            }
        }
        std::cout << "random pure tripartite states: " << random_count
                  << "  violations: " << violations << "  worst slack: " << fmt(worst) << "\n";
    } else {
        const eub::DensityOperator rho = eub::load_state(state_path);
        if (rho.factor_count() != 3)
            throw std::invalid_argument("tripartite: state needs exactly three factors");
        const auto [rep, id] = report_one(rho, state_path);
        std::cout << "state: " << id << "\n"
                  << "lhs  S(P|B)+S(Q|E)            = " << fmt(rep.lhs) << "\n"
                  << "rhs  -2logc + max{0, D-J}     = " << fmt(rep.rhs) << "\n"
                  << "slack                         = " << fmt(rep.slack) << "\n"
                  << "D_A(A|BE') = " << fmt(rep.discord_abe_prime)
                  << "  J_A(AB) = " << fmt(rep.j_ab) << "\n";
        if (rep.slack < -tol) ++violations;
    }
    return violations == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entropic uncertainty bounds with quantum memory"};
    app.require_subcommand(1);

    CommonFlags flags;

    auto* figure1 = app.add_subcommand("figure1", "two-qubit Werner noise sweep (CSV)");
    int p_steps = 101;
    std::string fig_out;
    figure1->add_option("--p-steps", p_steps, "grid points for p in [0, 1]")
        ->check(CLI::Range(2, 100000));
    figure1->add_option("--out", fig_out, "output CSV path (default stdout)");
    add_common_flags(figure1, flags);

    auto* sweep = app.add_subcommand("sweep", "family (d, lambda) grid (CSV)");
    std::string family = "werner", mode = "closed", sweep_out;
    std::vector<int> d_list;
    int lam_steps = 21;
    sweep->add_option("--family", family, "werner or isotropic")->required();
    sweep->add_option("--d", d_list, "dimensions (repeatable)");
    sweep->add_option("--lambda-steps", lam_steps, "grid points for lambda in [0, 1]")
        ->check(CLI::Range(2, 100000));
    sweep->add_option("--mode", mode, "closed, numeric or both");
    sweep->add_option("--out", sweep_out, "output CSV path (default stdout)");
    add_common_flags(sweep, flags);

    auto* analyze = app.add_subcommand("analyze", "bound + correlation report for a state file");
    std::string state_path, p_spec, q_spec, json_out;
    analyze->add_option("state", state_path, "state JSON file")->required();
    analyze->add_option("p", p_spec, "P measurement spec")->required();
    analyze->add_option("q", q_spec, "Q measurement spec")->required();
    analyze->add_option("--json", json_out, "also write the report as JSON");
    add_common_flags(analyze, flags);

    auto* tripartite = app.add_subcommand("tripartite", "tripartite (crypto) bound report");
    std::string tri_state, tri_p, tri_q;
    int random_count = 0;
    tripartite->add_option("p", tri_p, "P measurement spec")->required();
    tripartite->add_option("q", tri_q, "Q measurement spec")->required();
    tripartite->add_option("state", tri_state, "tripartite state JSON file");
    tripartite->add_option("--random", random_count,
                           "check N seeded random pure 2x2x2 states instead of a file");
    add_common_flags(tripartite, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (figure1->parsed()) return run_figure1(p_steps, fig_out, flags);
        if (sweep->parsed()) return run_sweep(family, d_list, lam_steps, mode, sweep_out, flags);
        if (analyze->parsed()) return run_analyze(state_path, p_spec, q_spec, json_out, flags);
        if (tripartite->parsed()) {
            if (random_count <= 0 && tri_state.empty())
                throw std::invalid_argument("tripartite: need a state file or --random N");
            return run_tripartite(tri_state, tri_p, tri_q, random_count, flags);
        }
    } catch (const std::exception& e) {
        std::cerr << "eub: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
