/**
 * Equivalence deciders: unimodular fan equivalence, simplicial complex
 * isomorphism, bounded search for graded ring isomorphisms of cohomology,
 * and preservation of Chern and Pontrjagin classes.
 *
 * Cohomology of a toric manifold is generated in degree 2, so a graded ring
 * map is its degree-2 matrix.  Matrix columns are the images of the source
 * degree-2 basis in target coordinates.
 *
 * Search pruning uses the top-degree form T(a_1,...,a_n) = int a_1...a_n on
 * H^2.  A ring isomorphism carries T_R to +-T_S (the top degree is Z), so
 * each partial assignment is rejected as soon as a fully assigned entry of
 * the form disagrees.  Every survivor is then checked against the source
 * relations degree by degree, which is the actual acceptance test.
 */

#ifndef TORIC_ISOSEARCH_HPP
#define TORIC_ISOSEARCH_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "cohomology.hpp"
#include "complex.hpp"
#include "fan.hpp"
#include "zlattice.hpp"

namespace toric {

/**
 * A unimodular A with A(cones of f) = cones of g, if one exists.
 *
 * Fixes the first maximal cone of f and tries every maximal cone of g with
 * every ordering of its rays, so the search is complete.
 */
inline std::optional<IntMatrix> fans_isomorphic(const Fan& f, const Fan& g)
{
    if (f.dim() != g.dim() || f.ray_count() != g.ray_count() || f.max_cones().size() != g.max_cones().size())
        return std::nullopt;
    const int n = f.dim();
    if (n == 0)
        return IntMatrix::identity(0);
    const IndexSet& sigma = f.max_cones().front();
    IntMatrix vs = f.cone_matrix(sigma);
    Int det_s = determinant(vs);
    if (det_s == 0)
        return std::nullopt;
    IntMatrix adj = adjugate(vs);

    std::map<IntVector, int> g_rays;
    for (std::size_t i = 0; i < g.ray_count(); ++i)
        g_rays[g.ray(i)] = static_cast<int>(i);
    std::set<IndexSet> g_cones(g.max_cones().begin(), g.max_cones().end());

    for (const auto& tau : g.max_cones()) {
        IndexSet order = tau;
        do {
            // A = V_tau(order) * V_sigma^{-1} = V_tau(order) * adj / det
            IntMatrix num = g.cone_matrix(order) * adj;
            bool integral = true;
            for (const Int& x : num.entries())
                if (x % det_s != 0) {
                    integral = false;
                    break;
                }
            if (!integral)
                continue;
            IntMatrix a(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    a(i, j) = num(i, j) / det_s;
            if (!is_unimodular(a))
                continue;
            std::vector<int> image(f.ray_count(), -1);
            bool ok = true;
            std::vector<bool> hit(g.ray_count(), false);
            for (std::size_t i = 0; i < f.ray_count() && ok; ++i) {
                auto it = g_rays.find(a * f.ray(i));
                if (it == g_rays.end() || hit[it->second]) {
                    ok = false;
                    break;
                }
                hit[it->second] = true;
                image[i] = it->second;
            }
            for (std::size_t c = 0; c < f.max_cones().size() && ok; ++c) {
                IndexSet img;
                for (int i : f.max_cones()[c])
                    img.push_back(image[i]);
                ok = g_cones.count(sorted_set(img)) > 0;
            }
            if (ok)
                return a;
        } while (std::next_permutation(order.begin(), order.end()));
    }
    return std::nullopt;
}

struct RingMap {
    IntMatrix matrix;  // rank H^2(target) x rank H^2(source)

    friend bool operator==(const RingMap& a, const RingMap& b) { return a.matrix == b.matrix; }
};

/**
 * Per-ring data reused by the search: monomials in the degree-2 basis for
 * every degree, their classes, the integer relations among them and the
 * values of the top form.
 */
class RingProfile
{
public:
    explicit RingProfile(const GradedRing& R) : ring_(&R)
    {
        const int n = R.top();
        r_ = n == 0 ? 0 : R.rank(1);
        monomials_.resize(n + 1);
        index_.resize(n + 1);
        images_.resize(n + 1);
        relations_.resize(n + 1);
        prefix_relations_.resize(n + 1);
        for (int k = 0; k <= n; ++k) {
            std::vector<int> cur;
            std::function<void(int)> rec = [&](int start) {
                if (static_cast<int>(cur.size()) == k) {
                    monomials_[k].push_back(cur);
                    return;
                }
                for (int i = start; i < static_cast<int>(r_); ++i) {
                    cur.push_back(i);
                    rec(i);
                    cur.pop_back();
                }
            };
            rec(0);
            // order by largest index so prefixes are contiguous
            std::stable_sort(monomials_[k].begin(), monomials_[k].end(),
                             [](const auto& a, const auto& b) { return !a.empty() && !b.empty() && a.back() < b.back(); });
            for (std::size_t s = 0; s < monomials_[k].size(); ++s)
                index_[k][monomials_[k][s]] = s;
            std::vector<IntVector> cols;
            for (const auto& mono : monomials_[k])
                cols.push_back(evaluate_in(R, mono, [&](int i) { return R.basis(2, i); }).coords);
            images_[k] = IntMatrix::from_columns(cols, R.rank(k));
            IntMatrix ker = integer_kernel(images_[k]);
            for (std::size_t j = 0; j < ker.cols(); ++j)
                relations_[k].push_back(ker.column(j));
            if (k < 2)
                continue;
            prefix_relations_[k].resize(r_);
            for (std::size_t j = 0; j < r_; ++j) {
                std::size_t len = 0;
                while (len < monomials_[k].size() && monomials_[k][len].back() <= static_cast<int>(j))
                    ++len;
                std::vector<IntVector> sub(cols.begin(), cols.begin() + len);
                IntMatrix kj = integer_kernel(IntMatrix::from_columns(sub, R.rank(k)));
                for (std::size_t c = 0; c < kj.cols(); ++c)
                    prefix_relations_[k][j].push_back(kj.column(c));
            }
        }
        for (std::size_t idx = 0; idx < monomials_[n].size(); ++idx)
            top_form_.push_back(n == 0 ? Int(1) : images_[n](0, idx));
    }

    const GradedRing& ring() const { return *ring_; }
    std::size_t degree2_rank() const { return r_; }
    const std::vector<std::vector<int>>& monomials(int k) const { return monomials_.at(k); }
    const IntMatrix& monomial_images(int k) const { return images_.at(k); }
    /// Integer relations among the degree-k monomials (coefficient vectors).
    const std::vector<IntVector>& relations(int k) const { return relations_.at(k); }
    /// Position of a sorted index list among the degree-k monomials.
    std::size_t monomial_index(int k, const std::vector<int>& mono) const { return index_.at(k).at(mono); }
    /// Relations among the degree-k monomials in the first j+1 basis classes.
    const std::vector<IntVector>& prefix_relations(int k, std::size_t j) const { return prefix_relations_.at(k).at(j); }
    /// Value of the top form on the i-th top-degree monomial.
    const Int& top_form(std::size_t i) const { return top_form_.at(i); }

    /// Product of the classes chosen for each index of the monomial.
    template <typename ClassOf>
    static CohClass evaluate_in(const GradedRing& R, const std::vector<int>& mono, ClassOf class_of)
    {
        CohClass prod = R.one();
        for (int i : mono)
            prod = cup(R, prod, class_of(i));
        return prod;
    }

private:
    const GradedRing* ring_;
    std::size_t r_ = 0;
    std::vector<std::vector<std::vector<int>>> monomials_;
    std::vector<IntMatrix> images_;
    std::vector<std::map<std::vector<int>, std::size_t>> index_;
    std::vector<std::vector<IntVector>> relations_;
    std::vector<std::vector<std::vector<IntVector>>> prefix_relations_;
    std::vector<Int> top_form_;
};

namespace detail {

inline CohClass column_class(const IntMatrix& m, std::size_t j) { return {2, m.column(j)}; }

// Elementary divisors of the pairing H^{2k} x H^{2n-2k} -> Z for each k.
inline std::vector<std::vector<Int>> pairing_divisors(const GradedRing& R)
{
    std::vector<std::vector<Int>> out;
    const int n = R.top();
    for (int k = 0; k <= n; ++k) {
        IntMatrix p(R.rank(k), R.rank(n - k));
        for (std::size_t i = 0; i < R.rank(k); ++i)
            for (std::size_t j = 0; j < R.rank(n - k); ++j)
                p(i, j) = integrate(R, cup(R, R.basis(2 * k, i), R.basis(2 * (n - k), j)));
        out.push_back(smith_normal_form(p).diagonal());
    }
    return out;
}

}  // namespace detail

/**
 * True iff the degree-2 matrix is square, unimodular and sends every source
 * relation (in every degree up to the top) to zero in the target.
 */
inline bool is_ring_isomorphism(const RingProfile& src, const RingProfile& dst, const IntMatrix& matrix)
{
    const GradedRing& R = src.ring();
    const GradedRing& S = dst.ring();
    if (R.top() != S.top() || R.ranks() != S.ranks())
        return false;
    if (matrix.rows() != dst.degree2_rank() || matrix.cols() != src.degree2_rank())
        return false;
    if (!matrix.is_square() || !is_unimodular(matrix))
        return false;
    for (int k = 2; k <= R.top(); ++k) {
        if (src.relations(k).empty())
            continue;
        std::vector<IntVector> mapped;
        for (const auto& mono : src.monomials(k))
            mapped.push_back(RingProfile::evaluate_in(S, mono, [&](int i) { return detail::column_class(matrix, i); }).coords);
        for (const auto& rel : src.relations(k)) {
            IntVector acc(S.rank(k));
            for (std::size_t s = 0; s < rel.size(); ++s)
                if (rel[s] != 0)
                    acc += rel[s] * mapped[s];
            if (!acc.is_zero())
                return false;
        }
    }
    return true;
}

inline bool is_ring_isomorphism(const GradedRing& R, const GradedRing& S, const RingMap& map)
{
    RingProfile a(R), b(S);
    return is_ring_isomorphism(a, b, map.matrix);
}

/**
 * All degree-2 matrices with entries in [-bound, bound] that induce graded
 * ring isomorphisms R -> S, sorted lexicographically by row-major entries.
 * An empty result means none exists within the bound.
 */
inline std::vector<RingMap> ring_isomorphisms(const RingProfile& src, const RingProfile& dst, const Int& bound)
{
    const GradedRing& R = src.ring();
    const GradedRing& S = dst.ring();
    std::vector<RingMap> out;
    if (R.top() != S.top() || R.ranks() != S.ranks())
        return out;
    if (detail::pairing_divisors(R) != detail::pairing_divisors(S))
        return out;
    const int n = R.top();
    const std::size_t r = src.degree2_rank();
    if (r == 0) {
        out.push_back({IntMatrix(0, 0)});
        return out;
    }

    // candidate columns: primitive vectors in the box
    std::vector<IntVector> box;
    {
        const long b = static_cast<long>(bound);
        IntVector v(r);
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == r) {
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

    // images[k][s]: class in S of the s-th degree-k monomial under the current columns
    std::vector<std::vector<CohClass>> images(n + 1);
    for (int k = 1; k <= n; ++k)
        images[k].resize(src.monomials(k).size());
    std::vector<IntVector> cols(r);

    auto relation_holds = [&](int k, const IntVector& rel) {
        IntVector acc(S.rank(k));
        for (std::size_t s = 0; s < rel.size(); ++s)
            if (rel[s] != 0)
                acc += rel[s] * images[k][s].coords;
        return acc.is_zero();
    };

    for (int eps : {1, -1}) {
        std::function<void(std::size_t)> extend = [&](std::size_t j) {
            if (j == r) {
                IntMatrix m = IntMatrix::from_columns(cols, r);
                if (is_ring_isomorphism(src, dst, m))
                    out.push_back({m});
                return;
            }
            for (const auto& cand : box) {
                cols[j] = cand;
                bool ok = true;
                for (int k = 1; k <= n && ok; ++k) {
                    const auto& monos = src.monomials(k);
                    for (std::size_t s = 0; s < monos.size(); ++s) {
                        if (monos[s].back() != static_cast<int>(j))
                            continue;
                        CohClass x{2, cand};
                        if (k == 1) {
                            images[k][s] = x;
                        } else {
                            std::vector<int> rest(monos[s].begin(), monos[s].end() - 1);
                            images[k][s] = cup(S, images[k - 1][src.monomial_index(k - 1, rest)], x);
                        }
                        if (k == n && integrate(S, images[k][s]) != eps * src.top_form(s)) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok && k >= 2)
                        for (const auto& rel : src.prefix_relations(k, j))
                            if (!relation_holds(k, rel)) {
                                ok = false;
                                break;
                            }
                }
                if (ok)
                    extend(j + 1);
            }
        };
        extend(0);
    }
    std::sort(out.begin(), out.end(),
              [](const RingMap& a, const RingMap& b) { return a.matrix.entries() < b.matrix.entries(); });
    return out;
}

inline std::vector<RingMap> ring_isomorphisms(const GradedRing& R, const GradedRing& S, const Int& bound)
{
    RingProfile a(R), b(S);
    return ring_isomorphisms(a, b, bound);
}

/// Image of an arbitrary class of R under the ring map, computed by writing
/// the class as a polynomial in the degree-2 basis.
inline CohClass apply_ring_map(const RingProfile& src, const RingProfile& dst, const RingMap& map, const CohClass& c)
{
    const GradedRing& S = dst.ring();
    const int k = c.degree / 2;
    if (k == 0)
        return {0, c.coords};
    auto y = solve_integer(src.monomial_images(k), c.coords);
    if (!y)
        throw InconsistencyError("apply_ring_map: class is not a polynomial in degree-2 classes");
    CohClass out = S.zero(c.degree);
    const auto& monos = src.monomials(k);
    for (std::size_t s = 0; s < monos.size(); ++s) {
        if ((*y)[s] == 0)
            continue;
        CohClass img = RingProfile::evaluate_in(S, monos[s], [&](int i) { return detail::column_class(map.matrix, i); });
        out = add(out, scale((*y)[s], img));
    }
    return out;
}

/**
 * Ring map induced by a fan isomorphism phi: mu_i of f goes to the divisor
 * class of the ray phi(v_i) of g.  Throws if phi does not biject the rays.
 */
inline RingMap induced_ring_map(const Fan& f, const Fan& g, const IntMatrix& phi, const GradedRing& R,
                                const GradedRing& S)
{
    if (f.ray_count() != g.ray_count() || phi.rows() != static_cast<std::size_t>(g.dim()) ||
        phi.cols() != static_cast<std::size_t>(f.dim()))
        throw std::invalid_argument("induced_ring_map: shape mismatch");
    std::map<IntVector, std::size_t> g_rays;
    for (std::size_t i = 0; i < g.ray_count(); ++i)
        g_rays[g.ray(i)] = i;
    std::vector<std::size_t> image(f.ray_count());
    std::vector<bool> hit(g.ray_count(), false);
    for (std::size_t i = 0; i < f.ray_count(); ++i) {
        auto it = g_rays.find(phi * f.ray(i));
        if (it == g_rays.end() || hit[it->second])
            throw std::invalid_argument("induced_ring_map: matrix does not induce a ray bijection");
        hit[it->second] = true;
        image[i] = it->second;
    }
    const std::size_t r = R.top() == 0 ? 0 : R.rank(1);
    const std::size_t rs = S.top() == 0 ? 0 : S.rank(1);
    IntMatrix m(rs, r);
    if (r > 0) {
        const auto& lifts = R.piece(1).lifts;
        const auto& monos = R.piece(1).monomials;
        for (std::size_t j = 0; j < r; ++j) {
            IntVector col(rs);
            for (std::size_t a = 0; a < monos.size(); ++a) {
                if (lifts[j][a] == 0)
                    continue;
                std::size_t i = std::find(monos[a].begin(), monos[a].end(), 1) - monos[a].begin();
                col += lifts[j][a] * S.generator_images()[image[i]];
            }
            for (std::size_t t = 0; t < rs; ++t)
                m(t, j) = col[t];
        }
    }
    RingMap map{m};
    if (!is_ring_isomorphism(R, S, map))
        throw InconsistencyError("induced_ring_map: induced map is not a ring isomorphism");
    return map;
}

inline RingMap induced_ring_map(const Fan& f, const Fan& g, const IntMatrix& phi)
{
    return induced_ring_map(f, g, phi, ordinary_cohomology(f), ordinary_cohomology(g));
}

namespace detail {

// prod_i (1 + phi(mu_i)^power) in S, graded components.
inline std::vector<CohClass> mapped_total_class(const GradedRing& R, const GradedRing& S, const RingMap& map,
                                                int power)
{
    const int n = S.top();
    std::vector<CohClass> total;
    for (int k = 0; k <= n; ++k)
        total.push_back(S.zero(2 * k));
    total[0] = S.one();
    if (power > n)
        return total;
    for (const auto& mu : R.generator_images()) {
        CohClass x{2, map.matrix * mu};
        CohClass xp = x;
        for (int e = 1; e < power; ++e)
            xp = cup(S, xp, x);
        for (int k = n; k >= power; --k)
            total[k] = add(total[k], cup(S, total[k - power], xp));
    }
    return total;
}

}  // namespace detail

/// map(p_k(R)) == p_k(S) for every k.
inline bool preserves_pontrjagin(const RingMap& map, const GradedRing& R, const GradedRing& S)
{
    auto mapped = detail::mapped_total_class(R, S, map, 2);
    auto target = pontrjagin_classes(S);
    for (std::size_t k = 0; k < target.size(); ++k)
        if (mapped[2 * (k + 1)] != target[k])
            return false;
    return true;
}

/// map(c_k(R)) == c_k(S) for every k.  Stronger than the Pontrjagin check.
inline bool preserves_chern(const RingMap& map, const GradedRing& R, const GradedRing& S)
{
    auto mapped = detail::mapped_total_class(R, S, map, 1);
    auto target = chern_classes(S);
    for (std::size_t k = 0; k < target.size(); ++k)
        if (mapped[k + 1] != target[k])
            return false;
    return true;
}

struct RingPairResult {
    std::size_t first = 0, second = 0;
    std::size_t maps_found = 0;
    std::optional<RingMap> witness;             // lexicographically first map
    std::optional<RingMap> preserving_witness;  // first map preserving p
    bool some_preserve_pontrjagin = false;
    bool all_preserve_pontrjagin = false;
    bool some_preserve_chern = false;
    bool all_preserve_chern = false;
    bool from_fan_isomorphism = false;

    /// "all", "some" or "none found".
    std::string pontrjagin_status() const
    {
        if (all_preserve_pontrjagin)
            return "all";
        if (some_preserve_pontrjagin)
            return "some";
        return "none found";
    }
};

struct ClassificationReport {
    std::vector<std::string> members;
    std::vector<std::vector<std::size_t>> fan_iso_classes;
    std::vector<std::vector<std::size_t>> complex_iso_classes;
    std::vector<std::vector<std::size_t>> ring_iso_classes;
    std::vector<RingPairResult> ring_pairs;
    // ring-isomorphic pairs whose complexes are not isomorphic
    std::vector<std::pair<std::size_t, std::size_t>> rigidity_witnesses;
    // per complex class: "not rigid" or "no counterexample found in corpus"
    std::vector<std::string> complex_rigidity;
    Int search_bound = 3;
    bool ring_search_exhaustive = false;
    bool fan_search_exhaustive = true;
    bool complex_search_exhaustive = true;
};

namespace detail {

inline std::vector<std::vector<std::size_t>> partition_from_pairs(std::size_t count,
                                                                   const std::vector<std::pair<std::size_t, std::size_t>>& edges)
{
    std::vector<std::size_t> parent(count);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (auto [a, b] : edges) {
        auto ra = find(a), rb = find(b);
        if (ra != rb)
            parent[std::max(ra, rb)] = std::min(ra, rb);
    }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < count; ++i)
        groups[find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [root, members] : groups)
        out.push_back(members);
    return out;
}

}  // namespace detail

/**
 * Pairwise comparison of a family of toric manifolds by fan isomorphism,
 * complex isomorphism and bounded ring-isomorphism search.  Ring classes
 * are the transitive closure of the pairs found; a fan isomorphism always
 * contributes its induced ring map.
 */
inline ClassificationReport classify_family(const std::vector<std::string>& ids, const std::vector<Fan>& fans,
                                            const Int& bound)
{
    if (ids.size() != fans.size())
        throw std::invalid_argument("classify_family: ids and fans differ in length");
    ClassificationReport rep;
    rep.members = ids;
    rep.search_bound = bound;
    const std::size_t count = fans.size();
    std::vector<GradedRing> rings;
    std::vector<SimplicialComplex> complexes;
    for (const auto& f : fans) {
        rings.push_back(ordinary_cohomology(f));
        complexes.push_back(underlying_complex(f));
    }
    std::vector<RingProfile> profiles;
    for (const auto& R : rings)
        profiles.emplace_back(R);

    std::vector<std::pair<std::size_t, std::size_t>> fan_edges, complex_edges, ring_edges;
    std::vector<std::vector<bool>> complex_iso(count, std::vector<bool>(count, false));
    for (std::size_t i = 0; i < count; ++i)
        complex_iso[i][i] = true;
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j) {
            auto phi = fans_isomorphic(fans[i], fans[j]);
            if (phi)
                fan_edges.emplace_back(i, j);
            if (complexes_isomorphic(complexes[i], complexes[j])) {
                complex_edges.emplace_back(i, j);
                complex_iso[i][j] = complex_iso[j][i] = true;
            }
            auto maps = ring_isomorphisms(profiles[i], profiles[j], bound);
            RingPairResult pr;
            pr.first = i;
            pr.second = j;
            if (phi) {
                RingMap induced = induced_ring_map(fans[i], fans[j], *phi, rings[i], rings[j]);
                if (std::find(maps.begin(), maps.end(), induced) == maps.end()) {
                    maps.push_back(induced);
                    pr.from_fan_isomorphism = true;
                }
            }
            if (maps.empty())
                continue;
            ring_edges.emplace_back(i, j);
            pr.maps_found = maps.size();
            pr.witness = maps.front();
            pr.all_preserve_pontrjagin = pr.all_preserve_chern = true;
            for (const auto& m : maps) {
                bool p = preserves_pontrjagin(m, rings[i], rings[j]);
                bool c = preserves_chern(m, rings[i], rings[j]);
                if (p && !pr.preserving_witness)
                    pr.preserving_witness = m;
                pr.some_preserve_pontrjagin |= p;
                pr.all_preserve_pontrjagin &= p;
                pr.some_preserve_chern |= c;
                pr.all_preserve_chern &= c;
            }
            if (!complex_iso[i][j])
                rep.rigidity_witnesses.emplace_back(i, j);
            rep.ring_pairs.push_back(std::move(pr));
        }
    rep.fan_iso_classes = detail::partition_from_pairs(count, fan_edges);
    rep.complex_iso_classes = detail::partition_from_pairs(count, complex_edges);
    rep.ring_iso_classes = detail::partition_from_pairs(count, ring_edges);
    for (const auto& cls : rep.complex_iso_classes) {
        bool witness = std::any_of(rep.rigidity_witnesses.begin(), rep.rigidity_witnesses.end(), [&](auto w) {
            return std::find(cls.begin(), cls.end(), w.first) != cls.end() ||
                   std::find(cls.begin(), cls.end(), w.second) != cls.end();
        });
        rep.complex_rigidity.push_back(witness ? "not rigid" : "no counterexample found in corpus");
    }
    return rep;
}

}  // namespace toric

#endif
