#include "tqft/json_io.hpp"

namespace tqft {

nlohmann::json cyc_to_json(const CycNum& x) {
    nlohmann::json j;
    j["r"] = x.level();
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : x.coeffs()) coeffs.push_back(c.get_str());
    j["coeffs"] = coeffs;
    return j;
}

CycNum cyc_from_json(const nlohmann::json& j) {
    const CycField& f = CycField::get(j.at("r").get<int>());
    const auto& coeffs = j.at("coeffs");
    if (static_cast<int>(coeffs.size()) != f.degree())
        throw std::invalid_argument("cyc_from_json: coefficient count must be phi(r)");
    CycNum x(f);
    for (int i = 0; i < f.degree(); ++i) {
        Rational c = rational_from_string(coeffs[static_cast<size_t>(i)].get<std::string>());
        if (!is_zero(c)) x += c * CycNum::zeta(f, i);
    }
    return x;
}

nlohmann::json matrix_to_json(const MatX<CycNum>& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(cyc_to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

nlohmann::json block_to_json(const QuantumBlock& b) {
    nlohmann::json j;
    j["spec_version"] = kSpecVersion;
    j["r"] = b.disk.r;
    j["outer"] = b.disk.outer;
    j["colors"] = b.disk.colors;
    j["dim"] = b.dimension;
    j["image_basis"] = matrix_to_json(b.image_basis);
    return j;
}

std::string canonical_dump(const nlohmann::json& j) { return j.dump(2); }

}  // namespace tqft
