#include "henon/composition_io.hpp"

#include <fstream>
#include <sstream>

#include "henon/errors.hpp"

namespace henon {

namespace {

using nlohmann::json;

[[noreturn]] void fail_parse(const std::string& path, const json::parse_error& err,
                             const std::string& text) {
    // nlohmann reports a byte offset; translate to line/column.
    size_t line = 1, column = 1;
    for (size_t i = 0; i + 1 < err.byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    throw ValidationError(path + ": malformed JSON at line " + std::to_string(line) +
                          ", column " + std::to_string(column) + ": " + err.what());
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError(path + ": cannot open file");
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    try {
        return json::parse(text);
    } catch (const json::parse_error& err) {
        fail_parse(path, err, text);
    }
}

cd complex_from_json(const json& value) {
    GaussianRational g = coefficient_from_json(value);
    return g.to_complex();
}

}  // namespace

GaussianRational coefficient_from_json(const json& value) {
    if (value.is_string()) return GaussianRational(rational_from_string(value.get<std::string>()));
    if (value.is_number_integer()) return GaussianRational(static_cast<long>(value.get<long long>()));
    if (value.is_number_float())
        return GaussianRational(rational_from_double(value.get<double>()));
    if (value.is_array() && value.size() == 2) {
        auto part = [](const json& v) -> Rational {
            if (v.is_string()) return rational_from_string(v.get<std::string>());
            if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
            if (v.is_number_float()) return rational_from_double(v.get<double>());
            throw ValidationError("complex part must be a string or number");
        };
        return {part(value[0]), part(value[1])};
    }
    throw ValidationError("coefficient must be a string, number, or [re, im] pair");
}

HenonComposition composition_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("factors") || !doc["factors"].is_array() ||
        doc["factors"].empty())
        throw ValidationError("composition file needs a non-empty \"factors\" array");
    std::vector<HenonFactor> factors;
    for (const auto& fj : doc["factors"]) {
        if (!fj.contains("degree") || !fj["degree"].is_number_integer())
            throw ValidationError("factor needs an integer \"degree\"");
        int degree = fj["degree"].get<int>();
        if (degree < 2) throw ValidationError("factor degree must be >= 2");
        if (!fj.contains("delta")) throw ValidationError("factor needs \"delta\"");
        GaussianRational delta = coefficient_from_json(fj["delta"]);
        if (delta.is_zero()) throw ValidationError("delta must be nonzero");
        std::vector<GaussianRational> coeffs;
        if (fj.contains("coefficients")) {
            if (!fj["coefficients"].is_array())
                throw ValidationError("\"coefficients\" must be an array of c0..c_{d-1}");
            for (const auto& cj : fj["coefficients"]) coeffs.push_back(coefficient_from_json(cj));
        }
        coeffs.resize(degree);  // missing high coefficients default to 0
        if (fj.contains("coefficients") && fj["coefficients"].size() > static_cast<size_t>(degree))
            throw ValidationError("factor of degree " + std::to_string(degree) + " takes at most " +
                                  std::to_string(degree) + " coefficients");
        factors.emplace_back(degree, std::move(coeffs), std::move(delta));
    }
    return HenonComposition(std::move(factors));
}

HenonComposition load_composition(const std::string& path) {
    try {
        return composition_from_json(read_json_file(path));
    } catch (const ValidationError&) {
        throw;
    } catch (const std::exception& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

SliceSpec slice_from_json(const json& doc) {
    SliceSpec slice;
    auto point = [](const json& v) -> PointC2 {
        if (!v.is_array() || v.size() != 2)
            throw ValidationError("slice point must be [[re,im],[re,im]]");
        return {complex_from_json(v[0]), complex_from_json(v[1])};
    };
    if (doc.contains("origin")) slice.origin = point(doc["origin"]);
    if (doc.contains("axis_u")) slice.axis_u = point(doc["axis_u"]);
    if (doc.contains("axis_v")) slice.axis_v = point(doc["axis_v"]);
    if (doc.contains("extent")) {
        const auto& e = doc["extent"];
        if (!e.is_array() || e.size() != 4)
            throw ValidationError("\"extent\" must be [u_min, u_max, v_min, v_max]");
        slice.u_min = e[0].get<double>();
        slice.u_max = e[1].get<double>();
        slice.v_min = e[2].get<double>();
        slice.v_max = e[3].get<double>();
    }
    if (doc.contains("resolution")) {
        const auto& r = doc["resolution"];
        if (!r.is_array() || r.size() != 2)
            throw ValidationError("\"resolution\" must be [width, height]");
        slice.width = r[0].get<int>();
        slice.height = r[1].get<int>();
    }
    return slice;
}

SliceSpec load_slice(const std::string& path) {
    try {
        return slice_from_json(read_json_file(path));
    } catch (const ValidationError&) {
        throw;
    } catch (const std::exception& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

json composition_to_json(const HenonComposition& comp) {
    json doc;
    doc["factors"] = json::array();
    for (const auto& f : comp.factors) {
        json fj;
        fj["degree"] = f.degree;
        fj["coefficients"] = json::array();
        for (const auto& c : f.p_coeffs)
            fj["coefficients"].push_back(
                json::array({rational_to_string(c.real()), rational_to_string(c.imag())}));
        fj["delta"] =
            json::array({rational_to_string(f.delta.real()), rational_to_string(f.delta.imag())});
        doc["factors"].push_back(std::move(fj));
    }
    return doc;
}

}  // namespace henon
