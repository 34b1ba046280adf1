/**
 * Simplicial fans in R^n given by primitive rays and full-dimensional
 * maximal cones.  A complete non-singular fan is the combinatorial model of
 * a toric manifold; ray order fixes the labels of the divisor classes.
 *
 * Completeness is decided by the wall criterion: in a fan whose maximal
 * cones meet properly, the support is all of R^n iff every wall (facet of a
 * maximal cone) lies in exactly two maximal cones on strictly opposite sides
 * of its hyperplane and the adjacency graph of maximal cones is connected.
 * If the support had a boundary point, a generic such point lies in the
 * relative interior of a wall with only one maximal cone beside it; and a
 * closed union of cones without boundary is open, hence all of R^n once it
 * is connected.
 */

#ifndef TORIC_FAN_HPP
#define TORIC_FAN_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "complex.hpp"
#include "polyhedral.hpp"
#include "zlattice.hpp"

namespace toric {

class Fan
{
public:
    Fan() = default;
    Fan(int dim, std::vector<IntVector> rays, std::vector<IndexSet> max_cones)
        : dim_(dim), rays_(std::move(rays)), max_cones_(std::move(max_cones))
    {
        if (dim < 0)
            throw std::invalid_argument("Fan: negative dimension");
        for (auto& c : max_cones_)
            std::sort(c.begin(), c.end());
    }

    int dim() const { return dim_; }
    std::size_t ray_count() const { return rays_.size(); }
    const std::vector<IntVector>& rays() const { return rays_; }
    const IntVector& ray(std::size_t i) const { return rays_[i]; }
    const std::vector<IndexSet>& max_cones() const { return max_cones_; }

    /// n x |cone| matrix whose columns are the rays of the cone.
    IntMatrix cone_matrix(const IndexSet& cone) const
    {
        std::vector<IntVector> cols;
        for (int i : cone)
            cols.push_back(rays_[i]);
        return IntMatrix::from_columns(cols, dim_);
    }

    friend bool operator==(const Fan& a, const Fan& b)
    {
        return a.dim_ == b.dim_ && a.rays_ == b.rays_ && a.max_cones_ == b.max_cones_;
    }

private:
    int dim_ = 0;
    std::vector<IntVector> rays_;
    std::vector<IndexSet> max_cones_;
};

struct FanReport {
    bool valid = false;
    bool complete = false;
    bool smooth = false;
    std::vector<std::string> violations;

    bool ok() const { return valid && complete && smooth; }
};

/// Stage dimensions n_1..n_h and, for stage j >= 2 and fiber i, the twist
/// vector of length j-1 (coefficients on the earlier stages' generators).
struct BottTowerData {
    std::vector<int> stage_dims;
    // twists[j][i] for stage j (0-based); twists[0] is empty
    std::vector<std::vector<std::vector<Int>>> twists;
};

namespace detail {

// Structural checks: ray lengths, index ranges, cone sizes, usage.
inline std::vector<std::string> structural_violations(const Fan& f)
{
    std::vector<std::string> out;
    const int n = f.dim();
    for (std::size_t i = 0; i < f.ray_count(); ++i)
        if (static_cast<int>(f.ray(i).size()) != n)
            out.push_back("ray " + std::to_string(i + 1) + " has length " + std::to_string(f.ray(i).size()) +
                          ", expected " + std::to_string(n));
    if (f.max_cones().empty())
        out.push_back("fan has no maximal cones");
    std::vector<bool> used(f.ray_count(), false);
    for (std::size_t c = 0; c < f.max_cones().size(); ++c) {
        const auto& cone = f.max_cones()[c];
        bool in_range = true;
        for (int i : cone)
            if (i < 0 || i >= static_cast<int>(f.ray_count())) {
                out.push_back("cone " + std::to_string(c + 1) + " references missing ray " + std::to_string(i + 1));
                in_range = false;
            }
        if (std::adjacent_find(cone.begin(), cone.end()) != cone.end())
            out.push_back("cone " + std::to_string(c + 1) + " repeats a ray index");
        if (static_cast<int>(cone.size()) != n)
            out.push_back("cone " + std::to_string(c + 1) + " has " + std::to_string(cone.size()) +
                          " rays, expected " + std::to_string(n));
        if (in_range)
            for (int i : cone)
                used[i] = true;
    }
    for (std::size_t i = 0; i < used.size(); ++i)
        if (!used[i])
            out.push_back("ray " + std::to_string(i + 1) + " lies in no maximal cone");
    return out;
}

// Constraint rows expressing "coordinate k of x in the basis of the cone is >= 0".
inline std::vector<std::vector<Rational>> cone_coordinate_rows(const IntMatrix& basis)
{
    Int d = determinant(basis);
    IntMatrix adj = adjugate(basis);
    std::vector<std::vector<Rational>> rows(basis.rows(), std::vector<Rational>(basis.rows()));
    for (std::size_t k = 0; k < basis.rows(); ++k)
        for (std::size_t j = 0; j < basis.cols(); ++j)
            rows[k][j] = Rational(adj(k, j)) / Rational(d);
    return rows;
}

// True iff the two simplicial full-dimensional cones meet exactly in the
// cone on their common rays.  Decided by Fourier-Motzkin: the overlap is
// improper iff some x in both cones has a positive coordinate on a
// non-shared ray.
inline bool cones_meet_properly(const Fan& f, const IndexSet& a, const IndexSet& b)
{
    const std::size_t n = f.dim();
    auto ra = cone_coordinate_rows(f.cone_matrix(a));
    auto rb = cone_coordinate_rows(f.cone_matrix(b));
    std::vector<LinearConstraint> sys;
    std::vector<Rational> outside(n, Rational(0));
    for (std::size_t k = 0; k < n; ++k) {
        sys.push_back({ra[k], 0, false});
        sys.push_back({rb[k], 0, false});
        if (!std::binary_search(b.begin(), b.end(), a[k]))
            for (std::size_t j = 0; j < n; ++j)
                outside[j] += ra[k][j];
        if (!std::binary_search(a.begin(), a.end(), b[k]))
            for (std::size_t j = 0; j < n; ++j)
                outside[j] += rb[k][j];
    }
    sys.push_back({outside, 0, true});
    return !fm_feasible(std::move(sys), n);
}

// Integer normal vector of the hyperplane spanned by n-1 vectors (generalized
// cross product by cofactors).
inline IntVector hyperplane_normal(const std::vector<IntVector>& vecs, std::size_t n)
{
    IntVector w(n);
    for (std::size_t j = 0; j < n; ++j) {
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 0; r + 1 < n; ++r)
            for (std::size_t c = 0, mc = 0; c < n; ++c) {
                if (c == j)
                    continue;
                minor(r, mc++) = vecs[r][c];
            }
        Int d = determinant(minor);
        w[j] = (j % 2 == 0) ? d : Int(-d);
    }
    return w;
}

inline Int sign(const Int& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace detail

/// True iff every maximal cone's ray matrix has determinant +-1.
inline bool is_smooth(const Fan& f)
{
    for (const auto& c : f.max_cones()) {
        if (static_cast<int>(c.size()) != f.dim())
            return false;
        if (!is_unimodular(f.cone_matrix(c)))
            return false;
    }
    return true;
}

namespace detail {

inline std::vector<std::string> completeness_violations(const Fan& f)
{
    std::vector<std::string> out;
    const std::size_t n = f.dim();
    const auto& cones = f.max_cones();
    std::map<IndexSet, std::vector<std::size_t>> walls;  // wall -> cones containing it
    for (std::size_t c = 0; c < cones.size(); ++c)
        for (std::size_t drop = 0; drop < cones[c].size(); ++drop) {
            IndexSet w;
            for (std::size_t i = 0; i < cones[c].size(); ++i)
                if (i != drop)
                    w.push_back(cones[c][i]);
            walls[w].push_back(c);
        }
    std::vector<std::vector<std::size_t>> adj(cones.size());
    for (const auto& [wall, owners] : walls) {
        if (owners.size() != 2) {
            out.push_back("wall " + format_index_set(wall) + " lies in " + std::to_string(owners.size()) +
                          " maximal cone(s), expected 2");
            continue;
        }
        std::vector<IntVector> vecs;
        for (int i : wall)
            vecs.push_back(f.ray(i));
        IntVector normal = hyperplane_normal(vecs, n);
        auto apex = [&](std::size_t c) {
            return set_difference(cones[c], wall).front();
        };
        Int s1 = sign(dot(normal, f.ray(apex(owners[0]))));
        Int s2 = sign(dot(normal, f.ray(apex(owners[1]))));
        if (s1 == 0 || s2 == 0 || s1 == s2) {
            out.push_back("cones " + format_index_set(cones[owners[0]]) + " and " +
                          format_index_set(cones[owners[1]]) + " lie on the same side of wall " +
                          format_index_set(wall));
            continue;
        }
        adj[owners[0]].push_back(owners[1]);
        adj[owners[1]].push_back(owners[0]);
    }
    if (!cones.empty()) {
        std::vector<bool> seen(cones.size(), false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        while (!stack.empty()) {
            auto c = stack.back();
            stack.pop_back();
            for (auto d : adj[c])
                if (!seen[d]) {
                    seen[d] = true;
                    stack.push_back(d);
                }
        }
        if (std::find(seen.begin(), seen.end(), false) != seen.end())
            out.push_back("maximal cone adjacency graph is disconnected");
    }
    return out;
}

}  // namespace detail

/**
 * Wall criterion for completeness.  Assumes the maximal cones meet properly
 * (see validate_fan).
 */
inline bool is_complete(const Fan& f)
{
    if (!detail::structural_violations(f).empty())
        return false;
    return detail::completeness_violations(f).empty();
}

/// Proper-intersection, primitivity and distinctness checks plus the
/// completeness and smoothness flags.  Never throws on malformed data.
inline FanReport validate_fan(const Fan& f)
{
    FanReport r;
    r.violations = detail::structural_violations(f);
    if (!r.violations.empty())
        return r;

    bool valid = true;
    for (std::size_t i = 0; i < f.ray_count(); ++i) {
        if (!is_primitive(f.ray(i))) {
            r.violations.push_back("ray " + std::to_string(i + 1) + " " + f.ray(i).str() + " is not primitive");
            valid = false;
        }
        for (std::size_t j = 0; j < i; ++j)
            if (f.ray(i) == f.ray(j)) {
                r.violations.push_back("rays " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                                       " coincide");
                valid = false;
            }
    }
    const auto& cones = f.max_cones();
    std::vector<bool> full_dim(cones.size(), true);
    for (std::size_t c = 0; c < cones.size(); ++c) {
        for (std::size_t d = 0; d < c; ++d)
            if (cones[c] == cones[d]) {
                r.violations.push_back("cone " + format_index_set(cones[c]) + " is listed twice");
                valid = false;
            }
        if (determinant(f.cone_matrix(cones[c])) == 0) {
            r.violations.push_back("cone " + format_index_set(cones[c]) + " is not full-dimensional");
            full_dim[c] = false;
            valid = false;
        }
    }
    for (std::size_t c = 0; c < cones.size(); ++c)
        for (std::size_t d = c + 1; d < cones.size(); ++d) {
            if (!full_dim[c] || !full_dim[d] || cones[c] == cones[d])
                continue;
            if (!detail::cones_meet_properly(f, cones[c], cones[d])) {
                r.violations.push_back("cones " + format_index_set(cones[c]) + " and " + format_index_set(cones[d]) +
                                       " overlap improperly");
                valid = false;
            }
        }
    r.valid = valid;

    if (valid) {
        auto cv = detail::completeness_violations(f);
        r.complete = cv.empty();
        for (auto& v : cv)
            r.violations.push_back("incomplete: " + v);
    } else {
        r.violations.push_back("incomplete: completeness is undecided for an invalid fan");
    }

    r.smooth = true;
    for (const auto& c : cones) {
        Int d = determinant(f.cone_matrix(c));
        if (d != 1 && d != -1) {
            r.smooth = false;
            r.violations.push_back("singular: cone " + format_index_set(c) + " has |det| = " + abs(d).str());
        }
    }
    return r;
}

/// Facets are the maximal cones.
inline SimplicialComplex underlying_complex(const Fan& f)
{
    return SimplicialComplex(static_cast<int>(f.ray_count()), f.max_cones());
}

/// Block embedding of rays; maximal cones are unions of one cone from each factor.
inline Fan product(const Fan& f, const Fan& g)
{
    const int n = f.dim() + g.dim();
    std::vector<IntVector> rays;
    for (const auto& r : f.rays()) {
        IntVector v(n);
        for (int i = 0; i < f.dim(); ++i)
            v[i] = r[i];
        rays.push_back(v);
    }
    for (const auto& r : g.rays()) {
        IntVector v(n);
        for (int i = 0; i < g.dim(); ++i)
            v[f.dim() + i] = r[i];
        rays.push_back(v);
    }
    const int offset = static_cast<int>(f.ray_count());
    std::vector<IndexSet> cones;
    for (const auto& a : f.max_cones())
        for (const auto& b : g.max_cones()) {
            IndexSet c = a;
            for (int i : b)
                c.push_back(i + offset);
            cones.push_back(c);
        }
    return Fan(n, std::move(rays), std::move(cones));
}

/// The zero-dimensional fan: no rays and the single empty maximal cone.
inline Fan point_fan() { return Fan(0, {}, {IndexSet{}}); }

/**
 * Stellar subdivision at a face `cone` of some maximal cone.  The new ray is
 * the primitive vector along the sum of the cone's rays (the sum itself when
 * the cone is unimodular) and is appended last.  Each maximal cone containing
 * `cone` is replaced by the cones obtained by swapping one member of `cone`
 * for the new ray.  Maximal cones of the result are sorted.
 */
inline Fan stellar_subdivide(const Fan& f, IndexSet cone)
{
    cone = sorted_set(std::move(cone));
    if (cone.empty())
        throw std::invalid_argument("stellar_subdivide: empty cone");
    for (int i : cone)
        if (i < 0 || i >= static_cast<int>(f.ray_count()))
            throw std::invalid_argument("stellar_subdivide: ray index out of range");
    bool is_face = std::any_of(f.max_cones().begin(), f.max_cones().end(),
                               [&](const IndexSet& c) { return is_subset(cone, c); });
    if (!is_face)
        throw std::invalid_argument("stellar_subdivide: " + format_index_set(cone) + " is not a face of the fan");
    IntVector sum(f.dim());
    for (int i : cone)
        sum += f.ray(i);
    Int g = content(sum);
    if (g == 0)
        throw std::invalid_argument("stellar_subdivide: ray sum is zero");
    if (g != 1)
        for (std::size_t k = 0; k < sum.size(); ++k)
            sum[k] /= g;
    for (const auto& r : f.rays())
        if (r == sum)
            throw std::invalid_argument("stellar_subdivide: new ray " + sum.str() + " already present");

    std::vector<IntVector> rays = f.rays();
    rays.push_back(sum);
    const int fresh = static_cast<int>(f.ray_count());
    std::vector<IndexSet> cones;
    for (const auto& c : f.max_cones()) {
        if (!is_subset(cone, c)) {
            cones.push_back(c);
            continue;
        }
        for (int drop : cone) {
            IndexSet nc;
            for (int i : c)
                if (i != drop)
                    nc.push_back(i);
            nc.push_back(fresh);
            cones.push_back(sorted_set(nc));
        }
    }
    std::sort(cones.begin(), cones.end());
    return Fan(f.dim(), std::move(rays), std::move(cones));
}

/// Rays e_1..e_n, -(e_1+...+e_n); maximal cones all n-subsets.
inline Fan projective_space(int n)
{
    if (n < 1)
        throw std::invalid_argument("projective_space: dimension must be >= 1");
    std::vector<IntVector> rays;
    for (int i = 0; i < n; ++i)
        rays.push_back(unit_vector(n, i));
    IntVector last(n);
    for (int i = 0; i < n; ++i)
        last[i] = -1;
    rays.push_back(last);
    std::vector<IndexSet> cones;
    for (int skip = n; skip >= 0; --skip) {
        IndexSet c;
        for (int i = 0; i <= n; ++i)
            if (i != skip)
                c.push_back(i);
        cones.push_back(c);
    }
    return Fan(n, std::move(rays), std::move(cones));
}

/**
 * Fan of a generalized Bott tower.
 *
 * Coordinates are grouped by stage.  Rays are listed as the standard basis
 * vectors e_{j,i} (stage by stage) followed by one extra ray per stage,
 *   u_j = -sum_i e_{j,i} + sum_{k>j} sum_i t^{(k)}_{i,j} e_{k,i},
 * where t^{(k)}_{i,j} is the stage-j entry of the twist of fiber i at stage k.
 * Maximal cones omit exactly one ray of each stage.
 */
inline Fan bott_tower(const BottTowerData& data)
{
    const std::size_t h = data.stage_dims.size();
    if (h == 0)
        throw std::invalid_argument("bott_tower: no stages");
    std::vector<int> offset(h + 1, 0);
    for (std::size_t j = 0; j < h; ++j) {
        if (data.stage_dims[j] < 1)
            throw std::invalid_argument("bott_tower: stage dimensions must be positive");
        offset[j + 1] = offset[j] + data.stage_dims[j];
    }
    const int n = offset[h];
    auto twist = [&](std::size_t k, int i, std::size_t j) -> Int {
        if (k >= data.twists.size() || data.twists[k].empty())
            return 0;
        if (static_cast<int>(data.twists[k].size()) != data.stage_dims[k])
            throw std::invalid_argument("bott_tower: stage " + std::to_string(k + 1) + " needs " +
                                        std::to_string(data.stage_dims[k]) + " twist vectors");
        const auto& t = data.twists[k][i];
        if (t.size() != k)
            throw std::invalid_argument("bott_tower: twist vectors at stage " + std::to_string(k + 1) +
                                        " must have length " + std::to_string(k));
        return t[j];
    };
    if (!data.twists.empty() && !data.twists[0].empty())
        throw std::invalid_argument("bott_tower: the first stage carries no twists");
    if (data.twists.size() > h)
        throw std::invalid_argument("bott_tower: more twist stages than stages");

    std::vector<IntVector> rays;
    for (int i = 0; i < n; ++i)
        rays.push_back(unit_vector(n, i));
    for (std::size_t j = 0; j < h; ++j) {
        IntVector u(n);
        for (int i = 0; i < data.stage_dims[j]; ++i)
            u[offset[j] + i] = -1;
        for (std::size_t k = j + 1; k < h; ++k)
            for (int i = 0; i < data.stage_dims[k]; ++i)
                u[offset[k] + i] = twist(k, i, j);
        rays.push_back(u);
    }
    // stage j owns rays offset[j]..offset[j+1]-1 and n + j
    std::vector<IndexSet> cones{IndexSet{}};
    for (std::size_t j = 0; j < h; ++j) {
        std::vector<int> stage;
        for (int i = offset[j]; i < offset[j + 1]; ++i)
            stage.push_back(i);
        stage.push_back(n + static_cast<int>(j));
        std::vector<IndexSet> next;
        for (const auto& c : cones)
            for (int omit : stage) {
                IndexSet nc = c;
                for (int r : stage)
                    if (r != omit)
                        nc.push_back(r);
                next.push_back(sorted_set(nc));
            }
        cones = std::move(next);
    }
    std::sort(cones.begin(), cones.end());
    return Fan(n, std::move(rays), std::move(cones));
}

/// Hirzebruch surface P(C + gamma^a): rays (1,0), (0,1), (-1,a), (0,-1).
inline Fan hirzebruch(const Int& a)
{
    BottTowerData d;
    d.stage_dims = {1, 1};
    d.twists = {{}, {{a}}};
    return bott_tower(d);
}

/// The single blow-up of CP^2 x CP^1 at its first maximal cone.
inline Fan example_4_3_base()
{
    Fan p = product(projective_space(2), projective_space(1));
    return stellar_subdivide(p, p.max_cones().front());
}

/**
 * CP^2 x CP^1 blown up at two torus-fixed points, one fan for each
 * isomorphism class of underlying complexes.  The first blow-up uses the
 * first maximal cone; the second runs over all maximal cones of the result
 * and keeps the lowest-index cone of each complex class.
 */
inline std::vector<Fan> example_4_3_triple()
{
    Fan y = example_4_3_base();
    std::vector<Fan> reps;
    std::vector<SimplicialComplex> classes;
    for (const auto& cone : y.max_cones()) {
        Fan x = stellar_subdivide(y, cone);
        SimplicialComplex sx = underlying_complex(x);
        bool seen = std::any_of(classes.begin(), classes.end(),
                                [&](const SimplicialComplex& c) { return complexes_isomorphic(c, sx).has_value(); });
        if (!seen) {
            classes.push_back(sx);
            reps.push_back(x);
        }
    }
    return reps;
}

}  // namespace toric

#endif
