/**
 * Characteristic functions on simple polytopes, with the polytope given by
 * its dual simplicial sphere: validity, enumeration up to GL(n,Z) and
 * polytope automorphisms, extraction from fans and toric realizability.
 *
 * Signs are kept: v and -v on a facet give distinct functions.
 */

#ifndef TORIC_QUASITORIC_HPP
#define TORIC_QUASITORIC_HPP

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include "complex.hpp"
#include "fan.hpp"
#include "zlattice.hpp"

namespace toric {

struct CharacteristicFunction {
    SimplicialComplex complex;
    std::vector<IntVector> values;  // one per vertex of the complex

    int dim() const { return values.empty() ? 0 : static_cast<int>(values.front().size()); }

    friend bool operator==(const CharacteristicFunction& a, const CharacteristicFunction& b)
    {
        return a.complex == b.complex && a.values == b.values;
    }
};

struct OrbitReport {
    Int total_valid = 0;
    Int orbits_under_gl = 0;
    Int orbits_under_gl_and_aut = 0;
    Int bound = 0;
    /// Canonical form of each GL + Aut orbit, in lexicographic order.
    std::vector<CharacteristicFunction> representatives;
};

namespace detail {

inline IntMatrix face_matrix(const std::vector<IntVector>& values, const IndexSet& face, std::size_t n)
{
    std::vector<IntVector> cols;
    for (int v : face)
        cols.push_back(values[v]);
    return IntMatrix::from_columns(cols, n);
}

inline void check_shape(const CharacteristicFunction& c)
{
    const auto& cx = c.complex;
    if (static_cast<int>(c.values.size()) != cx.vertex_count())
        throw std::invalid_argument("characteristic function: one value per vertex required");
    const std::size_t n = c.values.empty() ? 0 : c.values.front().size();
    for (const auto& v : c.values)
        if (v.size() != n)
            throw std::invalid_argument("characteristic function: values have different dimensions");
    for (const auto& f : cx.facets())
        if (f.size() != n)
            throw std::invalid_argument("characteristic function: facet size " + std::to_string(f.size()) +
                                        " does not match value dimension " + std::to_string(n));
}

}  // namespace detail

/// Every value primitive and every facet's values a basis of Z^n.
inline bool is_characteristic(const CharacteristicFunction& c)
{
    detail::check_shape(c);
    for (const auto& v : c.values)
        if (!is_primitive(v))
            return false;
    const std::size_t n = c.dim();
    for (const auto& f : c.complex.facets())
        if (!is_unimodular(detail::face_matrix(c.values, f, n)))
            return false;
    return true;
}

inline CharacteristicFunction from_fan(const Fan& f)
{
    if (!validate_fan(f).ok())
        throw std::invalid_argument("from_fan: fan is not valid, complete and smooth");
    std::vector<IntVector> values;
    for (std::size_t i = 0; i < f.ray_count(); ++i)
        values.push_back(f.ray(i));
    return {underlying_complex(f), values};
}

/// The fan with the values as rays and the facets as maximal cones, if
/// it is a well-formed, complete and smooth fan.
inline bool is_toric_realizable(const CharacteristicFunction& c)
{
    detail::check_shape(c);
    if (!c.complex.uses_all_vertices())
        return false;
    try {
        Fan f(c.dim(), c.values, c.complex.facets());
        return validate_fan(f).ok();
    } catch (const std::invalid_argument&) {
        return false;
    }
}

/// Values transformed so the first facet's values become the standard basis.
inline std::vector<IntVector> gl_canonical_form(const SimplicialComplex& s, const std::vector<IntVector>& values)
{
    const std::size_t n = values.front().size();
    IntMatrix a = unimodular_inverse(detail::face_matrix(values, s.facets().front(), n));
    std::vector<IntVector> out;
    for (const auto& v : values)
        out.push_back(a * v);
    return out;
}

/// Lexicographically least GL canonical form over the automorphisms of s.
inline std::vector<IntVector> gl_aut_canonical_form(const SimplicialComplex& s, const std::vector<IntVector>& values,
                                                    const std::vector<VertexMap>& automorphisms)
{
    std::vector<IntVector> best;
    for (const auto& sigma : automorphisms) {
        std::vector<IntVector> moved(values.size(), IntVector(values.front().size()));
        for (std::size_t v = 0; v < values.size(); ++v)
            moved[sigma[v]] = values[v];
        auto cf = gl_canonical_form(s, moved);
        if (best.empty() || cf < best)
            best = std::move(cf);
    }
    return best;
}

/**
 * All characteristic functions on s with entries in [-bound, bound],
 * counted as they are and up to GL(n,Z) and up to GL(n,Z) x Aut(s).
 */
inline OrbitReport enumerate_characteristic(const SimplicialComplex& s, int n, const Int& bound)
{
    if (bound < 0)
        throw std::invalid_argument("enumerate_characteristic: bound must be nonnegative");
    if (!s.is_pure() || s.dimension() != n - 1)
        throw std::invalid_argument("enumerate_characteristic: complex must be pure of dimension n-1");
    OrbitReport rep;
    rep.bound = bound;
    const int m = s.vertex_count();

    std::vector<IntVector> box;
    {
        const long b = static_cast<long>(bound);
        IntVector v(n);
        std::function<void(int)> rec = [&](int i) {
            if (i == n) {
                if (is_primitive(v))
                    box.push_back(v);
                return;
            }
            for (long x = -b; x <= b; ++x) {
                v[i] = x;
                rec(i + 1);
            }
        };
        rec(0);
    }
    std::vector<std::vector<const IndexSet*>> closing(m);
    for (const auto& f : s.facets())
        closing[f.back()].push_back(&f);
    auto automorphisms = complex_automorphisms(s);

    std::set<std::vector<IntVector>> gl_forms, gl_aut_forms;
    std::vector<IntVector> values(m, IntVector(n));
    std::function<void(int)> extend = [&](int v) {
        if (v == m) {
            rep.total_valid += 1;
            gl_forms.insert(gl_canonical_form(s, values));
            gl_aut_forms.insert(gl_aut_canonical_form(s, values, automorphisms));
            return;
        }
        for (const auto& cand : box) {
            values[v] = cand;
            bool ok = true;
            for (const IndexSet* f : closing[v])
                if (!is_unimodular(detail::face_matrix(values, *f, n))) {
                    ok = false;
                    break;
                }
            if (ok)
                extend(v + 1);
        }
    };
    if (m > 0)
        extend(0);
    rep.orbits_under_gl = static_cast<long>(gl_forms.size());
    rep.orbits_under_gl_and_aut = static_cast<long>(gl_aut_forms.size());
    for (const auto& vals : gl_aut_forms)
        rep.representatives.push_back({s, vals});
    return rep;
}

}  // namespace toric

#endif
