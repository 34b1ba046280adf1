/**
 * JSON interchange for fans, complexes, characteristic functions and the
 * reports produced by the library.
 *
 * Indices are 1-based on disk.  Integers that do not fit in 64 bits are
 * written as decimal strings and such strings are accepted on input.
 */

#ifndef TORIC_JSON_IO_HPP
#define TORIC_JSON_IO_HPP

#include <algorithm>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "cohomology.hpp"
#include "complex.hpp"
#include "fan.hpp"
#include "isosearch.hpp"
#include "quasitoric.hpp"
#include "zlattice.hpp"

namespace toric {

using Json = nlohmann::ordered_json;

/// Malformed input: bad JSON syntax or a document of the wrong shape.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Json int_to_json(const Int& x)
{
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return static_cast<long long>(x);
    return x.str();
}

inline Int int_from_json(const Json& j, const std::string& where)
{
    if (j.is_number_integer())
        return j.is_number_unsigned() ? Int(j.get<unsigned long long>()) : Int(j.get<long long>());
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos)
            return Int(s);
    }
    throw ParseError(where + ": expected an integer");
}

inline Json vector_to_json(const IntVector& v)
{
    Json a = Json::array();
    for (const Int& x : v)
        a.push_back(int_to_json(x));
    return a;
}

inline IntVector vector_from_json(const Json& j, const std::string& where)
{
    if (!j.is_array())
        throw ParseError(where + ": expected an array of integers");
    IntVector v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        v[i] = int_from_json(j[i], where + "[" + std::to_string(i) + "]");
    return v;
}

inline Json matrix_to_json(const IntMatrix& m)
{
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        a.push_back(vector_to_json(m.row(i)));
    return a;
}

inline Json index_sets_to_json(const std::vector<IndexSet>& sets)
{
    Json a = Json::array();
    for (const auto& s : sets) {
        Json c = Json::array();
        for (int i : s)
            c.push_back(i + 1);
        a.push_back(c);
    }
    return a;
}

inline std::vector<IndexSet> index_sets_from_json(const Json& j, const std::string& where)
{
    if (!j.is_array())
        throw ParseError(where + ": expected an array of index arrays");
    std::vector<IndexSet> out;
    for (std::size_t c = 0; c < j.size(); ++c) {
        const std::string w = where + "[" + std::to_string(c) + "]";
        if (!j[c].is_array())
            throw ParseError(w + ": expected an array of indices");
        IndexSet s;
        for (const auto& x : j[c]) {
            if (!x.is_number_integer())
                throw ParseError(w + ": indices must be integers");
            s.push_back(static_cast<int>(x.get<long long>()) - 1);
        }
        out.push_back(s);
    }
    return out;
}

inline const Json& require(const Json& j, const char* key, const std::string& where)
{
    if (!j.is_object())
        throw ParseError(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(where + ": missing field \"" + key + "\"");
    return *it;
}

inline Json fan_to_json(const Fan& f)
{
    Json j;
    j["dim"] = f.dim();
    Json rays = Json::array();
    for (const auto& r : f.rays())
        rays.push_back(vector_to_json(r));
    j["rays"] = rays;
    j["max_cones"] = index_sets_to_json(f.max_cones());
    return j;
}

inline Fan fan_from_json(const Json& j)
{
    const Json& d = require(j, "dim", "fan");
    if (!d.is_number_integer() || d.get<long long>() < 0)
        throw ParseError("fan.dim: expected a nonnegative integer");
    const Json& rays = require(j, "rays", "fan");
    if (!rays.is_array())
        throw ParseError("fan.rays: expected an array");
    std::vector<IntVector> rv;
    for (std::size_t i = 0; i < rays.size(); ++i)
        rv.push_back(vector_from_json(rays[i], "fan.rays[" + std::to_string(i) + "]"));
    auto cones = index_sets_from_json(require(j, "max_cones", "fan"), "fan.max_cones");
    return Fan(static_cast<int>(d.get<long long>()), rv, cones);
}

inline Json complex_to_json(const SimplicialComplex& s)
{
    Json j;
    j["vertex_count"] = s.vertex_count();
    j["facets"] = index_sets_to_json(s.facets());
    return j;
}

inline SimplicialComplex complex_from_json(const Json& j)
{
    const Json& vc = require(j, "vertex_count", "complex");
    if (!vc.is_number_integer() || vc.get<long long>() < 0)
        throw ParseError("complex.vertex_count: expected a nonnegative integer");
    auto facets = index_sets_from_json(require(j, "facets", "complex"), "complex.facets");
    try {
        return SimplicialComplex(static_cast<int>(vc.get<long long>()), facets);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("complex: ") + e.what());
    }
}

inline Json characteristic_to_json(const CharacteristicFunction& c)
{
    Json j;
    j["complex"] = complex_to_json(c.complex);
    Json vals = Json::array();
    for (const auto& v : c.values)
        vals.push_back(vector_to_json(v));
    j["values"] = vals;
    return j;
}

inline CharacteristicFunction characteristic_from_json(const Json& j)
{
    CharacteristicFunction c;
    c.complex = complex_from_json(require(j, "complex", "characteristic function"));
    const Json& vals = require(j, "values", "characteristic function");
    if (!vals.is_array())
        throw ParseError("values: expected an array");
    for (std::size_t i = 0; i < vals.size(); ++i)
        c.values.push_back(vector_from_json(vals[i], "values[" + std::to_string(i) + "]"));
    return c;
}

/// A complex given directly, as the complex of a characteristic function,
/// or as the underlying complex of a fan.
inline SimplicialComplex any_complex_from_json(const Json& j)
{
    if (j.is_object() && j.contains("complex"))
        return complex_from_json(j["complex"]);
    if (j.is_object() && j.contains("max_cones"))
        return underlying_complex(fan_from_json(j));
    return complex_from_json(j);
}

inline Json fan_report_to_json(const FanReport& r)
{
    Json j;
    j["valid"] = r.valid;
    j["complete"] = r.complete;
    j["smooth"] = r.smooth;
    j["violations"] = r.violations;
    return j;
}

inline Json orbit_report_to_json(const OrbitReport& r)
{
    Json j;
    j["bound"] = int_to_json(r.bound);
    j["total_valid"] = int_to_json(r.total_valid);
    j["orbits_under_gl"] = int_to_json(r.orbits_under_gl);
    j["orbits_under_gl_and_aut"] = int_to_json(r.orbits_under_gl_and_aut);
    j["signs_quotiented"] = false;
    Json reps = Json::array();
    for (const auto& c : r.representatives)
        reps.push_back(characteristic_to_json(c));
    j["representatives"] = reps;
    return j;
}

inline Json classification_to_json(const ClassificationReport& r)
{
    auto named = [&](const std::vector<std::vector<std::size_t>>& parts) {
        Json a = Json::array();
        for (const auto& p : parts) {
            Json c = Json::array();
            for (auto i : p)
                c.push_back(r.members[i]);
            a.push_back(c);
        }
        return a;
    };
    Json j;
    j["members"] = r.members;
    j["search_bound"] = int_to_json(r.search_bound);
    j["exhaustive"] = {{"fan", r.fan_search_exhaustive},
                       {"complex", r.complex_search_exhaustive},
                       {"ring", r.ring_search_exhaustive}};
    j["fan_iso_classes"] = named(r.fan_iso_classes);
    j["complex_iso_classes"] = named(r.complex_iso_classes);
    j["ring_iso_classes"] = named(r.ring_iso_classes);
    Json pairs = Json::array();
    for (const auto& p : r.ring_pairs) {
        Json e;
        e["pair"] = {r.members[p.first], r.members[p.second]};
        e["maps_found"] = p.maps_found;
        e["includes_fan_induced_map"] = p.from_fan_isomorphism;
        e["witness"] = matrix_to_json(p.witness->matrix);
        e["pontrjagin_preserving_witness"] =
            p.preserving_witness ? matrix_to_json(p.preserving_witness->matrix) : Json(nullptr);
        e["some_preserve_pontrjagin"] = p.some_preserve_pontrjagin;
        e["all_preserve_pontrjagin"] = p.all_preserve_pontrjagin;
        e["some_preserve_chern"] = p.some_preserve_chern;
        e["all_preserve_chern"] = p.all_preserve_chern;
        pairs.push_back(e);
    }
    j["ring_isomorphic_pairs"] = pairs;
    Json wit = Json::array();
    for (auto [a, b] : r.rigidity_witnesses)
        wit.push_back({r.members[a], r.members[b]});
    j["rigidity_witnesses"] = wit;
    Json rig = Json::array();
    for (std::size_t c = 0; c < r.complex_iso_classes.size(); ++c) {
        Json e;
        Json m = Json::array();
        for (auto i : r.complex_iso_classes[c])
            m.push_back(r.members[i]);
        e["complex_class"] = m;
        e["status"] = r.complex_rigidity[c];
        rig.push_back(e);
    }
    j["complex_rigidity"] = rig;
    return j;
}

/// Parse text; syntax errors become ParseError carrying the byte offset.
/// Indented JSON where arrays of scalars stay on one line.
inline void write_pretty(std::ostream& os, const Json& j, int indent = 0)
{
    auto flat = [](const Json& a) {
        return std::none_of(a.begin(), a.end(), [](const Json& e) { return e.is_structured(); });
    };
    const std::string pad(indent + 2, ' ');
    if (j.is_object() && !j.empty()) {
        os << "{\n";
        std::size_t i = 0;
        for (auto it = j.begin(); it != j.end(); ++it, ++i) {
            os << pad << Json(it.key()).dump() << ": ";
            write_pretty(os, it.value(), indent + 2);
            os << (i + 1 < j.size() ? ",\n" : "\n");
        }
        os << std::string(indent, ' ') << "}";
    } else if (j.is_array() && !j.empty() && !flat(j)) {
        os << "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            os << pad;
            write_pretty(os, j[i], indent + 2);
            os << (i + 1 < j.size() ? ",\n" : "\n");
        }
        os << std::string(indent, ' ') << "]";
    } else {
        os << j.dump();
    }
}

inline std::string pretty(const Json& j)
{
    std::ostringstream os;
    write_pretty(os, j);
    return os.str();
}

inline Json parse_json_text(const std::string& text, const std::string& source)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(source + ": JSON syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

inline Json read_json_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(path + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str(), path);
}

inline Fan read_fan_file(const std::string& path)
{
    Json j = read_json_file(path);
    try {
        return fan_from_json(j);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace toric

#endif
