#include "fuzzyfrac/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "json.hpp"

namespace fuzzyfrac {

using nlohmann::json;

namespace {

std::vector<double> number_array(const json& doc, const char* field) {
    const auto it = doc.find(field);
    if (it == doc.end()) throw ParseError(std::string("missing field '") + field + "'");
    if (!it->is_array()) throw ParseError(std::string("field '") + field + "' must be an array");
    std::vector<double> out;
    out.reserve(it->size());
    for (std::size_t i = 0; i < it->size(); ++i) {
        const json& x = (*it)[i];
        if (!x.is_number()) {
            throw ParseError(std::string("field '") + field + "' element " + std::to_string(i) + " is not a number");
        }
        out.push_back(x.get<double>());
    }
    return out;
}

}  // namespace

FuzzyNumber parse_fuzzy(std::string_view json_text, const AlphaGrid& grid) {
    json doc;
    try {
        doc = json::parse(json_text.begin(), json_text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (doc.is_number()) return FuzzyNumber::crisp(doc.get<double>(), grid);
    if (!doc.is_object()) throw ParseError("expected a JSON object or number");

    if (doc.contains("lower") || doc.contains("upper")) {
        std::vector<double> lower = number_array(doc, "lower");
        std::vector<double> upper = number_array(doc, "upper");
        AlphaGrid g = grid;
        if (doc.contains("grid")) {
            try {
                g = AlphaGrid(number_array(doc, "grid"));
            } catch (const DomainError& e) {
                throw ParseError(std::string("field 'grid': ") + e.what());
            }
        }
        if (lower.size() != g.size() || upper.size() != g.size()) {
            throw ParseError("fields 'lower'/'upper' must have one entry per grid level (" +
                             std::to_string(g.size()) + ")");
        }
        return FuzzyNumber::from_endpoints(std::move(g), std::move(lower), std::move(upper));
    }
    if (doc.contains("triangular")) {
        const std::vector<double> p = number_array(doc, "triangular");
        if (p.size() != 3) throw ParseError("field 'triangular' needs 3 numbers");
        return FuzzyNumber::triangular(p[0], p[1], p[2], grid);
    }
    if (doc.contains("trapezoid")) {
        const std::vector<double> p = number_array(doc, "trapezoid");
        if (p.size() != 4) throw ParseError("field 'trapezoid' needs 4 numbers");
        return FuzzyNumber::trapezoid(p[0], p[1], p[2], p[3], grid);
    }
    throw ParseError("expected one of 'trapezoid', 'triangular' or 'lower'/'upper'");
}

std::optional<std::array<double, 4>> trapezoid_shape(const FuzzyNumber& u) {
    const auto lo = u.lower();
    const auto hi = u.upper();
    const std::size_t top = u.size() - 1;
    const std::array<double, 4> shape{lo[0], lo[top], hi[top], hi[0]};
    double scale = 0.0;
    for (double x : shape) scale = std::max(scale, std::abs(x));
    const double tol = 1e-12 * (1.0 + scale);
    for (std::size_t i = 0; i <= top; ++i) {
        const double a = u.grid()[i];
        if (std::abs(lo[i] - (shape[0] + a * (shape[1] - shape[0]))) > tol) return std::nullopt;
        if (std::abs(hi[i] - (shape[3] + a * (shape[2] - shape[3]))) > tol) return std::nullopt;
    }
    return shape;
}

std::string emit_fuzzy(const FuzzyNumber& u) {
    json doc;
    doc["grid"] = std::vector<double>(u.grid().levels().begin(), u.grid().levels().end());
    doc["lower"] = std::vector<double>(u.lower().begin(), u.lower().end());
    doc["upper"] = std::vector<double>(u.upper().begin(), u.upper().end());
    if (const auto s = trapezoid_shape(u)) {
        if ((*s)[1] == (*s)[2]) {
            doc["triangular"] = {(*s)[0], (*s)[1], (*s)[3]};
        } else {
            doc["trapezoid"] = *s;
        }
    }
    return doc.dump();
}

}  // namespace fuzzyfrac
