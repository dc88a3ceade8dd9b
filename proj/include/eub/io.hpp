// JSON file formats: density operators as {"dims": [...], "re": [[...]],
// "im": [[...]]} with row-major real/imaginary parts, POVMs as {"elements":
// [matrix, ...]} in the same matrix layout, and the measurement spec strings
// accepted by the CLI ("pauli-x", "pauli-z", "comp", "fourier", or a path).
#pragma once

#include <eub/measurements.hpp>

#include <json.hpp>

#include <fstream>

namespace eub {

namespace detail {

inline ComplexMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.contains("re") || !j.contains("im"))
        throw std::invalid_argument("matrix JSON needs \"re\" and \"im\" arrays");
    const auto re = j.at("re").get<std::vector<std::vector<double>>>();
    const auto im = j.at("im").get<std::vector<std::vector<double>>>();
    if (re.empty() || re.size() != im.size())
        throw std::invalid_argument("matrix JSON: re/im shape mismatch");
    const std::size_t rows = re.size();
    const std::size_t cols = re[0].size();
    ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        if (re[r].size() != cols || im[r].size() != cols)
            throw std::invalid_argument("matrix JSON: ragged rows");
        for (std::size_t c = 0; c < cols; ++c)
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                Complex(re[r][c], im[r][c]);
    }
    return m;
}

inline nlohmann::json matrix_to_json(const ComplexMatrix& m) {
    std::vector<std::vector<double>> re, im;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        std::vector<double> rr, ri;
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            rr.push_back(m(r, c).real());
            ri.push_back(m(r, c).imag());
        }
        re.push_back(std::move(rr));
        im.push_back(std::move(ri));
    }
    return {{"re", re}, {"im", im}};
}

inline nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

}  // namespace detail

/// Parse a density operator; the DensityOperator constructor rejects
/// non-Hermitian, trace-violating or negative inputs.
inline DensityOperator state_from_json(const nlohmann::json& j) {
    if (!j.contains("dims")) throw std::invalid_argument("state JSON needs \"dims\"");
    const auto dims = j.at("dims").get<std::vector<int>>();
    return DensityOperator(detail::matrix_from_json(j), dims);
}

inline DensityOperator load_state(const std::string& path) {
    return state_from_json(detail::load_json(path));
}

inline nlohmann::json state_to_json(const DensityOperator& rho) {
    nlohmann::json j = detail::matrix_to_json(rho.matrix());
    j["dims"] = rho.dims();
    return j;
}

inline void save_state(const std::string& path, const DensityOperator& rho) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << state_to_json(rho).dump(2) << "\n";
}

inline Measurement measurement_from_json(const nlohmann::json& j, std::string label = "") {
    if (!j.contains("elements")) throw std::invalid_argument("measurement JSON needs \"elements\"");
    std::vector<ComplexMatrix> elems;
    for (const auto& e : j.at("elements")) elems.push_back(detail::matrix_from_json(e));
    return Measurement(std::move(elems), std::move(label));
}

inline Measurement load_measurement(const std::string& path) {
    return measurement_from_json(detail::load_json(path), path);
}

inline nlohmann::json measurement_to_json(const Measurement& m) {
    nlohmann::json elems = nlohmann::json::array();
    for (const auto& e : m.elements()) elems.push_back(detail::matrix_to_json(e));
    return {{"elements", elems}};
}

/// Resolve a CLI measurement spec against the measured-factor dimension:
/// "pauli-x" / "pauli-z" (qubits), "comp", "fourier", or a JSON file path.
inline Measurement resolve_measurement(const std::string& spec, int dim) {
    Measurement m = [&] {
        if (spec == "pauli-x") return pauli_x_basis();
        if (spec == "pauli-z") return pauli_z_basis();
        if (spec == "comp") return computational_basis(dim);
        if (spec == "fourier") return fourier_basis(dim);
        return load_measurement(spec);
    }();
    if (m.dim() != dim)
        throw std::invalid_argument("measurement \"" + spec + "\" has dimension " +
                                    std::to_string(m.dim()) + ", state factor has " +
                                    std::to_string(dim));
    return m;
}

}  // namespace eub
