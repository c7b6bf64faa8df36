#include "kingdon/json_io.hpp"

#include "kingdon/errors.hpp"

namespace kingdon {

using nlohmann::json;

namespace {

Scalar scalar_from_json(const json& j) {
    if (j.is_number_integer())
        return Scalar(j.get<long long>());
    if (j.is_string())
        return parse_scalar(j.get<std::string>());
    throw ParseError("rational entries must be integers or \"p/q\" strings, got " + j.dump());
}

json coeffs_to_json(const std::vector<Scalar>& v) {
    json out = json::array();
    for (const Scalar& s : v)
        out.push_back(format_scalar(s));
    return out;
}

}  // namespace

json algebra_to_json(const Algebra& a) {
    json j;
    j["name"] = a.name();
    j["basis"] = a.basis_names();
    json table = json::array();
    for (int i = 0; i < a.dim(); ++i) {
        json row = json::array();
        for (int k = 0; k < a.dim(); ++k)
            row.push_back(coeffs_to_json(a.table(i, k)));
        table.push_back(std::move(row));
    }
    j["table"] = std::move(table);
    return j;
}

AlgebraPtr algebra_from_json(const json& j) {
    if (!j.is_object() || !j.contains("name") || !j.contains("basis") || !j.contains("table"))
        throw ParseError("algebra document needs name/basis/table");
    std::vector<std::string> basis = j.at("basis").get<std::vector<std::string>>();
    size_t dim = basis.size();
    const json& table = j.at("table");
    if (!table.is_array() || table.size() != dim)
        throw ParseError("table must be a dim x dim array");
    std::vector<std::vector<Scalar>> entries;
    entries.reserve(dim * dim);
    for (const json& row : table) {
        if (!row.is_array() || row.size() != dim)
            throw ParseError("table must be a dim x dim array");
        for (const json& cell : row) {
            if (!cell.is_array() || cell.size() != dim)
                throw ParseError("table entries must be coefficient vectors of length dim");
            std::vector<Scalar> v;
            v.reserve(dim);
            for (const json& e : cell)
                v.push_back(scalar_from_json(e));
            entries.push_back(std::move(v));
        }
    }
    return Algebra::create(j.at("name").get<std::string>(), std::move(basis), std::move(entries));
}

Matrix gram_from_json(const json& j) {
    if (!j.is_array())
        throw ParseError("form must be a JSON array of rows");
    int n = static_cast<int>(j.size());
    Matrix m(n, n);
    for (int r = 0; r < n; ++r) {
        const json& row = j.at(r);
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw ParseError("form must be a square matrix");
        for (int c = 0; c < n; ++c)
            m(r, c) = scalar_from_json(row.at(c));
    }
    if (!m.is_symmetric())
        throw NonSymmetric("form matrix is not symmetric");
    return m;
}

json structure_report_to_json(const StructureReport& rep) {
    json j;
    j["signature"] = {rep.cls.signature.b0, rep.cls.signature.b1, rep.cls.signature.bneg1};
    j["iso_class"] = rep.cls.iso_class;
    j["simple"] = rep.simple;
    j["division"] = rep.division;
    auto span = [](const std::vector<Element>& basis) {
        json out = json::array();
        for (const Element& e : basis)
            out.push_back(coeffs_to_json(e.coeffs));
        return out;
    };
    j["commutant_basis"] = span(rep.commutant);
    j["nucleus_basis"] = span(rep.nucleus);
    j["center_basis"] = span(rep.center);
    if (rep.zero_divisor) {
        j["zero_divisor_witness"] = {coeffs_to_json(rep.zero_divisor->first.coeffs),
                                     coeffs_to_json(rep.zero_divisor->second.coeffs)};
    } else {
        j["zero_divisor_witness"] = nullptr;
    }
    return j;
}

}  // namespace kingdon
