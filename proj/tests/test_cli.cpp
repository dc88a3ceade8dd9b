// Drives the built CLI binary end to end: CSV sweeps, state analysis,
// tripartite reports, exit codes.
#include <eub/io.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace eub;
using Catch::Approx;

namespace {

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(EUB_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace

TEST_CASE("figure1 subcommand") {
    const std::string out = temp_path("eub_cli_fig1.csv");
    REQUIRE(run_cli("figure1 --p-steps 5 --out " + out) == 0);
    const std::string csv = slurp(out);
    REQUIRE(csv.substr(0, csv.find('\n')) == "p,berta_bound,new_bound,uncertainty_sum");
    REQUIRE(csv.find("\n1,") != std::string::npos);  // p = 1 row

    SECTION("byte-identical across runs") {
        const std::string out2 = temp_path("eub_cli_fig1_again.csv");
        REQUIRE(run_cli("figure1 --p-steps 5 --out " + out2) == 0);
        REQUIRE(slurp(out2) == csv);
        std::filesystem::remove(out2);
    }
    std::filesystem::remove(out);
}

TEST_CASE("sweep subcommand") {
    const std::string out = temp_path("eub_cli_sweep.csv");
    REQUIRE(run_cli("sweep --family isotropic --d 2 --d 3 --lambda-steps 5 --mode closed --out " +
                    out) == 0);
    const std::string csv = slurp(out);
    REQUIRE(csv.find("family,d,lam,p,") == 0);
    REQUIRE(std::count(csv.begin(), csv.end(), '\n') == 11);  // header + 2 d's x 5 rows
    std::filesystem::remove(out);

    SECTION("numeric mode enforces the dimension caps") {
        REQUIRE(run_cli("sweep --family werner --d 7 --mode numeric --out " + out) == 1);
        REQUIRE(run_cli("sweep --family werner --d 5 --lambda-steps 3 --mode numeric --out " +
                        out) == 1);
    }
    SECTION("usage errors exit 1") {
        REQUIRE(run_cli("sweep --family nosuch --out " + out) == 1);
        REQUIRE(run_cli("sweep") == 1);
        REQUIRE(run_cli("nosuchcommand") == 1);
    }
}

TEST_CASE("analyze subcommand") {
    const std::string bell_path = temp_path("eub_cli_bell.json");
    save_state(bell_path, maximally_entangled(2));

    SECTION("Bell state with the pauli pair") {
        const std::string json_path = temp_path("eub_cli_bell_report.json");
        REQUIRE(run_cli("analyze " + bell_path + " pauli-x pauli-z --restarts 6 --json " +
                        json_path) == 0);
        const nlohmann::json report = nlohmann::json::parse(slurp(json_path));
        REQUIRE(report["bounds"]["new_bound"].get<double>() == Approx(0.0).margin(1e-6));
        REQUIRE(report["bounds"]["uncertainty_sum"].get<double>() == Approx(0.0).margin(1e-9));
        REQUIRE(report["correlations"]["discord"].get<double>() == Approx(1.0).margin(1e-6));
        REQUIRE(report["violations"].empty());
        std::filesystem::remove(json_path);
    }
    SECTION("product state: bound reduces to the refined bound") {
        const std::string prod_path = temp_path("eub_cli_prod.json");
        const DensityOperator a = random_density({2}, 4);
        const DensityOperator b = random_density({2}, 5);
        save_state(prod_path, DensityOperator(tensor(a.matrix(), b.matrix()), {2, 2}));
        const std::string json_path = temp_path("eub_cli_prod_report.json");
        REQUIRE(run_cli("analyze " + prod_path + " pauli-x pauli-z --restarts 6 --json " +
                        json_path) == 0);
        const nlohmann::json report = nlohmann::json::parse(slurp(json_path));
        REQUIRE(report["correlations"]["classical_correlation"].get<double>() ==
                Approx(0.0).margin(1e-6));
        REQUIRE(report["correlations"]["discord"].get<double>() == Approx(0.0).margin(1e-6));
        REQUIRE(report["bounds"]["new_bound"].get<double>() ==
                Approx(report["bounds"]["refined_bound"].get<double>()).margin(1e-6));
        std::filesystem::remove(prod_path);
        std::filesystem::remove(json_path);
    }
    SECTION("Werner file report matches the figure1 row") {
        const std::string w_path = temp_path("eub_cli_werner.json");
        save_state(w_path, werner_main(0.5));
        const std::string json_path = temp_path("eub_cli_werner_report.json");
        REQUIRE(run_cli("analyze " + w_path + " pauli-x pauli-z --json " + json_path) == 0);
        const nlohmann::json report = nlohmann::json::parse(slurp(json_path));
        const std::string fig_path = temp_path("eub_cli_fig3.csv");
        REQUIRE(run_cli("figure1 --p-steps 3 --out " + fig_path) == 0);  // p in {0, 0.5, 1}
        std::istringstream csv(slurp(fig_path));
        std::string line;
        std::getline(csv, line);  // header
        std::getline(csv, line);  // p = 0
        std::getline(csv, line);  // p = 0.5
        double p, berta, tightened, sum;
        REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &p, &berta, &tightened, &sum) == 4);
        REQUIRE(p == Approx(0.5));
        REQUIRE(report["bounds"]["berta_bound"].get<double>() == Approx(berta).margin(1e-9));
        REQUIRE(report["bounds"]["new_bound"].get<double>() == Approx(tightened).margin(1e-9));
        REQUIRE(report["bounds"]["uncertainty_sum"].get<double>() == Approx(sum).margin(1e-9));
        std::filesystem::remove(w_path);
        std::filesystem::remove(json_path);
        std::filesystem::remove(fig_path);
    }
    SECTION("parse failures exit 1") {
        const std::string bad_path = temp_path("eub_cli_bad.json");
        {
            std::ofstream out(bad_path);
            out << "{\"dims\": [2], \"re\": [[1.0, 0.0], [0.0, 0.5]], \"im\": [[0,0],[0,0]]}";
        }
        REQUIRE(run_cli("analyze " + bad_path + " pauli-x pauli-z") == 1);
        REQUIRE(run_cli("analyze /nonexistent.json pauli-x pauli-z") == 1);
        REQUIRE(run_cli("analyze " + bell_path + " comp") == 1);  // missing q
        std::filesystem::remove(bad_path);
    }
    std::filesystem::remove(bell_path);
}

TEST_CASE("tripartite subcommand") {
    SECTION("GHZ report") {
        const std::string path = temp_path("eub_cli_ghz.json");
        ComplexVector v = ComplexVector::Zero(8);
        v(0) = 1 / std::sqrt(2.0);
        v(7) = 1 / std::sqrt(2.0);
        save_state(path, pure_state(v, {2, 2, 2}));
        REQUIRE(run_cli("tripartite pauli-x pauli-z " + path + " --restarts 6") == 0);
        std::filesystem::remove(path);
    }
    SECTION("seeded random states satisfy the bound") {
        REQUIRE(run_cli("tripartite pauli-x pauli-z --random 5 --restarts 4 --seed 3") == 0);
    }
    SECTION("needs a state or --random") {
        REQUIRE(run_cli("tripartite pauli-x pauli-z") == 1);
    }
}
