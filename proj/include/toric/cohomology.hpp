/**
 * Cohomology of toric manifolds from their fans.
 *
 * The equivariant ring is the face ring Z[tau_1..tau_m]/(non-faces) of the
 * underlying complex, an algebra over H*(BT) through u -> sum <u,v_i> tau_i.
 * Ordinary cohomology is the face ring modulo the linear forms
 * theta_j = sum_i (v_i)_j mu_i.  Each graded piece is computed as the
 * cokernel of (face-ring monomials of degree k-1) x (theta_1..theta_n)
 * inside the face-ring monomials of degree k, all over Z.
 *
 * Degrees: `degree` on CohClass is the cohomological degree 2k.  Internally
 * graded pieces are indexed by k = 0..n.
 */

#ifndef TORIC_COHOMOLOGY_HPP
#define TORIC_COHOMOLOGY_HPP

#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "fan.hpp"
#include "zlattice.hpp"

namespace toric {

/// Raised when an invariant guaranteed by the theory fails (torsion, an
/// inconsistent orientation).  Signals a bug or an invalid input fan.
struct InconsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

struct EquivariantPresentation {
    std::size_t m = 0;
    std::vector<IndexSet> sr_nonfaces;  // minimal non-faces, products vanish
    std::vector<IntVector> ray_vectors; // pi*(u) = sum_i <u, v_i> tau_i

    /// Coefficients of pi*(u) on tau_1..tau_m.
    IntVector structure_map(const IntVector& u) const
    {
        IntVector out(m);
        for (std::size_t i = 0; i < m; ++i)
            out[i] = dot(u, ray_vectors[i]);
        return out;
    }
};

inline EquivariantPresentation equivariant_presentation(const Fan& f)
{
    EquivariantPresentation p;
    p.m = f.ray_count();
    p.sr_nonfaces = underlying_complex(f).minimal_nonfaces();
    p.ray_vectors = f.rays();
    return p;
}

/// A homogeneous class: degree 2k and coordinates in the stored basis.
struct CohClass {
    int degree = 0;
    IntVector coords;

    bool is_zero() const { return coords.is_zero(); }
    friend bool operator==(const CohClass& a, const CohClass& b)
    {
        return a.degree == b.degree && a.coords == b.coords;
    }
    friend bool operator!=(const CohClass& a, const CohClass& b) { return !(a == b); }
};

/// Exponent vector over mu_1..mu_m.
using Monomial = std::vector<int>;

/// One graded piece H^{2k}: face-ring monomials, the canonical projection
/// onto the free quotient and a lift of every basis class.
struct GradedPiece {
    std::vector<Monomial> monomials;
    std::map<Monomial, std::size_t> index;
    IntMatrix projection;           // rank x |monomials|
    std::vector<IntVector> lifts;   // projection * lifts[j] == e_j
};

class GradedRing
{
public:
    int top() const { return n_; }
    std::size_t generator_count() const { return m_; }
    std::size_t rank(int k) const { return pieces_.at(k).projection.rows(); }

    std::vector<std::size_t> ranks() const
    {
        std::vector<std::size_t> r;
        for (int k = 0; k <= n_; ++k)
            r.push_back(rank(k));
        return r;
    }

    const GradedPiece& piece(int k) const { return pieces_.at(k); }

    /// Class of mu_i in the degree-2 basis.
    CohClass generator(std::size_t i) const { return {2, generator_images_.at(i)}; }
    const std::vector<IntVector>& generator_images() const { return generator_images_; }

    CohClass zero(int degree) const { return {degree, IntVector(rank(degree / 2))}; }
    CohClass one() const { return {0, unit_vector(1, 0)}; }
    CohClass basis(int degree, std::size_t j) const { return {degree, unit_vector(rank(degree / 2), j)}; }

    /// Product of basis classes e_i (degree 2p) and e_j (degree 2q).
    const IntVector& table(int p, int q, std::size_t i, std::size_t j) const
    {
        if (p > q) {
            std::swap(p, q);
            std::swap(i, j);
        }
        return tables_.at({p, q})[i][j];
    }

    /// Canonical coordinates of a face-ring polynomial of degree k (vector
    /// over the piece's monomials).
    IntVector project(int k, const IntVector& poly) const { return pieces_.at(k).projection * poly; }

    /// Class of the monomial prod mu_i^{e_i}; zero if its support is not a face.
    CohClass monomial_class(const Monomial& e) const
    {
        int k = 0;
        for (int x : e)
            k += x;
        if (k > n_)
            throw std::domain_error("monomial_class: degree exceeds the top degree");
        const auto& p = pieces_.at(k);
        auto it = p.index.find(e);
        if (it == p.index.end())
            return zero(2 * k);
        return {2 * k, p.projection.column(it->second)};
    }

private:
    friend GradedRing ordinary_cohomology(const Fan& f);

    int n_ = 0;
    std::size_t m_ = 0;
    std::vector<GradedPiece> pieces_;
    std::map<std::pair<int, int>, std::vector<std::vector<IntVector>>> tables_;
    std::vector<IntVector> generator_images_;
};

namespace detail {

// Monomials of degree k supported on faces of the complex, in descending
// lexicographic order of exponent vectors.
inline std::vector<Monomial> face_monomials(const std::vector<IndexSet>& faces, std::size_t m, int k)
{
    std::vector<Monomial> out;
    if (k == 0) {
        out.push_back(Monomial(m, 0));
        return out;
    }
    for (const auto& face : faces) {
        const int s = static_cast<int>(face.size());
        if (s == 0 || s > k)
            continue;
        // compositions of k into s positive parts
        std::vector<int> parts(s, 1);
        parts[s - 1] = k - s + 1;
        std::function<void(int, int)> rec = [&](int pos, int remaining) {
            if (pos == s - 1) {
                parts[pos] = remaining;
                Monomial e(m, 0);
                for (int i = 0; i < s; ++i)
                    e[face[i]] = parts[i];
                out.push_back(std::move(e));
                return;
            }
            for (int v = 1; v <= remaining - (s - 1 - pos); ++v) {
                parts[pos] = v;
                rec(pos + 1, remaining - v);
            }
        };
        rec(0, k);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

inline Monomial multiply(const Monomial& a, const Monomial& b)
{
    Monomial c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = a[i] + b[i];
    return c;
}

}  // namespace detail

/**
 * H*(X) as a graded ring with canonical integral bases.
 *
 * Requires a valid, complete, smooth fan.  Throws InconsistencyError if a
 * graded piece has torsion or the fixed-point monomials disagree.
 */
inline GradedRing ordinary_cohomology(const Fan& f)
{
    FanReport report = validate_fan(f);
    if (!report.ok())
        throw std::invalid_argument("ordinary_cohomology: fan must be valid, complete and smooth");

    GradedRing R;
    R.n_ = f.dim();
    R.m_ = f.ray_count();
    const int n = R.n_;
    const std::size_t m = R.m_;
    const auto faces = underlying_complex(f).faces();

    R.pieces_.resize(n + 1);
    for (int k = 0; k <= n; ++k) {
        GradedPiece& piece = R.pieces_[k];
        piece.monomials = detail::face_monomials(faces, m, k);
        for (std::size_t i = 0; i < piece.monomials.size(); ++i)
            piece.index[piece.monomials[i]] = i;
        const std::size_t N = piece.monomials.size();

        // ideal generators theta_j * (monomial of degree k-1)
        std::vector<IntVector> gens;
        if (k > 0) {
            for (const auto& base : R.pieces_[k - 1].monomials)
                for (int j = 0; j < n; ++j) {
                    IntVector g(N);
                    for (std::size_t i = 0; i < m; ++i) {
                        const Int& c = f.ray(i)[j];
                        if (c == 0)
                            continue;
                        Monomial e = base;
                        e[i] += 1;
                        auto it = piece.index.find(e);
                        if (it != piece.index.end())
                            g[it->second] += c;
                    }
                    if (!g.is_zero())
                        gens.push_back(std::move(g));
                }
        }
        IntMatrix a = IntMatrix::from_columns(gens, N);
        HermiteDecomposition h = hermite_normal_form(a);
        if (h.rank > 0) {
            CokernelStructure cs = cokernel_structure(h.H.row_block(0, h.rank));
            if (!cs.torsion.empty())
                throw InconsistencyError("ordinary_cohomology: torsion in degree " + std::to_string(2 * k));
        }
        IntMatrix quotient = h.U.row_block(h.rank, N);
        piece.projection = hermite_normal_form(quotient).H;
    }
    if (R.rank(0) != 1 || R.rank(n) != 1)
        throw InconsistencyError("ordinary_cohomology: extreme degrees must have rank 1");

    // orient the top degree so every fixed-point monomial integrates to +1
    {
        GradedPiece& top = R.pieces_[n];
        std::optional<Int> common;
        for (const auto& cone : f.max_cones()) {
            Monomial e(m, 0);
            for (int i : cone)
                e[i] = 1;
            const Int& c = top.projection(0, top.index.at(e));
            if (common && *common != c)
                throw InconsistencyError("ordinary_cohomology: fixed-point classes disagree");
            common = c;
        }
        if (!common || (*common != 1 && *common != -1))
            throw InconsistencyError("ordinary_cohomology: fixed-point class is not a generator");
        if (*common == -1)
            top.projection.negate_row(0);
    }

    for (int k = 0; k <= n; ++k) {
        GradedPiece& piece = R.pieces_[k];
        const std::size_t r = piece.projection.rows();
        for (std::size_t j = 0; j < r; ++j) {
            IntVector target = unit_vector(r, j);
            std::optional<IntVector> lift;
            for (std::size_t c = 0; c < piece.monomials.size() && !lift; ++c)
                if (piece.projection.column(c) == target)
                    lift = unit_vector(piece.monomials.size(), c);
            if (!lift)
                lift = solve_integer(piece.projection, target);
            if (!lift)
                throw InconsistencyError("ordinary_cohomology: projection is not surjective");
            piece.lifts.push_back(std::move(*lift));
        }
    }

    for (int p = 0; p <= n; ++p)
        for (int q = p; p + q <= n; ++q) {
            const auto& P = R.pieces_[p];
            const auto& Q = R.pieces_[q];
            const auto& T = R.pieces_[p + q];
            std::vector<std::vector<IntVector>> tab(P.lifts.size(), std::vector<IntVector>(Q.lifts.size()));
            for (std::size_t i = 0; i < P.lifts.size(); ++i)
                for (std::size_t j = 0; j < Q.lifts.size(); ++j) {
                    IntVector prod(T.monomials.size());
                    for (std::size_t a = 0; a < P.monomials.size(); ++a) {
                        if (P.lifts[i][a] == 0)
                            continue;
                        for (std::size_t b = 0; b < Q.monomials.size(); ++b) {
                            if (Q.lifts[j][b] == 0)
                                continue;
                            auto it = T.index.find(detail::multiply(P.monomials[a], Q.monomials[b]));
                            if (it != T.index.end())
                                prod[it->second] += P.lifts[i][a] * Q.lifts[j][b];
                        }
                    }
                    tab[i][j] = T.projection * prod;
                }
            R.tables_[{p, q}] = std::move(tab);
        }

    const auto& deg1 = R.pieces_[std::min(1, n)];
    for (std::size_t i = 0; i < m; ++i) {
        Monomial e(m, 0);
        e[i] = 1;
        R.generator_images_.push_back(deg1.projection.column(deg1.index.at(e)));
    }
    return R;
}

/// Ranks b_0, b_2, ..., b_{2n}.
inline std::vector<Int> betti_numbers(const GradedRing& R)
{
    std::vector<Int> b;
    for (auto r : R.ranks())
        b.emplace_back(r);
    return b;
}

/// f_i = coefficient of s^{n-i-1} in sum_k b_{2k} (s+1)^{n-k}, i = 0..n-1.
inline std::vector<Int> f_from_betti(const std::vector<Int>& betti, int n)
{
    if (static_cast<int>(betti.size()) != n + 1)
        throw std::invalid_argument("f_from_betti: expected n+1 Betti numbers");
    std::vector<Int> poly(n + 1);  // coefficient of s^d
    for (int k = 0; k <= n; ++k) {
        const int e = n - k;
        Int binom = 1;
        for (int d = 0; d <= e; ++d) {
            poly[d] += betti[k] * binom;
            binom = binom * (e - d) / (d + 1);
        }
    }
    std::vector<Int> f(n);
    for (int i = 0; i < n; ++i)
        f[i] = poly[n - i - 1];
    return f;
}

inline CohClass cup(const GradedRing& R, const CohClass& a, const CohClass& b)
{
    const int p = a.degree / 2, q = b.degree / 2;
    if (a.degree % 2 || b.degree % 2 || p < 0 || q < 0)
        throw std::invalid_argument("cup: classes must have nonnegative even degree");
    if (p + q > R.top())
        throw std::domain_error("cup: degree " + std::to_string(a.degree + b.degree) + " exceeds top degree " +
                                std::to_string(2 * R.top()));
    if (a.coords.size() != R.rank(p) || b.coords.size() != R.rank(q))
        throw std::invalid_argument("cup: coordinate length does not match the graded rank");
    IntVector out(R.rank(p + q));
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        if (a.coords[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coords.size(); ++j)
            if (b.coords[j] != 0)
                out += (a.coords[i] * b.coords[j]) * R.table(p, q, i, j);
    }
    return {a.degree + b.degree, out};
}

inline CohClass add(const CohClass& a, const CohClass& b)
{
    if (a.degree != b.degree)
        throw std::invalid_argument("add: degree mismatch");
    return {a.degree, a.coords + b.coords};
}

inline CohClass scale(const Int& c, const CohClass& a) { return {a.degree, c * a.coords}; }

/// Pairing with the fundamental class; every fixed-point monomial integrates to +1.
inline Int integrate(const GradedRing& R, const CohClass& top)
{
    if (top.degree != 2 * R.top())
        throw std::invalid_argument("integrate: class is not of top degree");
    return top.coords[0];
}

namespace detail {

// Graded components 0..max_k (in units of degree 2) of prod_i (1 + mu_i^power).
inline std::vector<CohClass> product_of_factors(const GradedRing& R, int power)
{
    const int n = R.top();
    std::vector<CohClass> total;
    for (int k = 0; k <= n; ++k)
        total.push_back(R.zero(2 * k));
    total[0] = R.one();
    if (power > n)
        return total;
    for (std::size_t i = 0; i < R.generator_count(); ++i) {
        CohClass x = R.generator(i);
        CohClass xp = x;
        for (int e = 1; e < power; ++e)
            xp = cup(R, xp, x);
        for (int k = n; k >= power; --k)
            total[k] = add(total[k], cup(R, total[k - power], xp));
    }
    return total;
}

}  // namespace detail

/// c_1..c_n of the ring's divisor classes, prod (1 + mu_i).
inline std::vector<CohClass> chern_classes(const GradedRing& R)
{
    auto total = detail::product_of_factors(R, 1);
    return std::vector<CohClass>(total.begin() + 1, total.end());
}

/// p_1..p_{floor(n/2)} from prod (1 + mu_i^2); p_k has degree 4k.
inline std::vector<CohClass> pontrjagin_classes(const GradedRing& R)
{
    std::vector<CohClass> p;
    if (R.top() < 2)
        return p;
    auto total = detail::product_of_factors(R, 2);
    for (int k = 2; k <= R.top(); k += 2)
        p.push_back(total[k]);
    return p;
}

inline std::vector<CohClass> total_chern(const Fan& f, const GradedRing& R)
{
    if (f.ray_count() != R.generator_count())
        throw std::invalid_argument("total_chern: ring was not computed from this fan");
    return chern_classes(R);
}

inline std::vector<CohClass> total_pontrjagin(const Fan& f, const GradedRing& R)
{
    if (f.ray_count() != R.generator_count())
        throw std::invalid_argument("total_pontrjagin: ring was not computed from this fan");
    return pontrjagin_classes(R);
}

/// Integer partitions of n into parts, largest first, in descending lexicographic order.
inline std::vector<std::vector<int>> partitions(int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

/// Chern numbers: integral of c_{l_1}...c_{l_r} for each partition l of n.
inline std::vector<std::pair<std::vector<int>, Int>> chern_numbers(const Fan& f, const GradedRing& R)
{
    auto c = total_chern(f, R);
    std::vector<std::pair<std::vector<int>, Int>> out;
    for (const auto& part : partitions(R.top())) {
        CohClass prod = R.one();
        for (int k : part)
            prod = cup(R, prod, c[k - 1]);
        out.emplace_back(part, integrate(R, prod));
    }
    return out;
}

/// Pontrjagin numbers for partitions of n/2 (empty when n is odd).
inline std::vector<std::pair<std::vector<int>, Int>> pontrjagin_numbers(const Fan& f, const GradedRing& R)
{
    std::vector<std::pair<std::vector<int>, Int>> out;
    if (R.top() % 2 != 0 || R.top() == 0)
        return out;
    auto p = total_pontrjagin(f, R);
    for (const auto& part : partitions(R.top() / 2)) {
        CohClass prod = R.one();
        for (int k : part)
            prod = cup(R, prod, p[k - 1]);
        out.emplace_back(part, integrate(R, prod));
    }
    return out;
}

/// Polynomial in r variables: exponent vector -> coefficient.
using Polynomial = std::map<std::vector<int>, Int>;

/**
 * Presentation Z[x_1..x_r]/(relations) obtained by eliminating the divisor
 * classes of one maximal cone through the linear relations.  The eliminated
 * cone is the maximal cone whose complement is lexicographically smallest,
 * so the surviving generators are the earliest mu_i.
 */
struct Presentation {
    IndexSet eliminated_cone;
    IndexSet kept;                          // x_j = mu_{kept[j]}
    std::vector<std::vector<Int>> mu_in_x;  // mu_i as a linear form in x
    std::vector<std::string> names;
    std::vector<Polynomial> relations;

    std::string format_monomial(const std::vector<int>& e) const
    {
        const bool short_names = names.size() <= 3;
        std::string out;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!out.empty() && !short_names)
                out += "*";
            out += names[i];
            if (e[i] > 1)
                out += "^" + std::to_string(e[i]);
        }
        return out;
    }

    // Terms ordered with later variables most significant: y^2 before xy before x^2.
    static std::vector<std::pair<std::vector<int>, Int>> ordered_terms(const Polynomial& p)
    {
        std::vector<std::pair<std::vector<int>, Int>> terms(p.begin(), p.end());
        std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
            int da = 0, db = 0;
            for (int x : a.first)
                da += x;
            for (int x : b.first)
                db += x;
            if (da != db)
                return da > db;
            std::vector<int> ra(a.first.rbegin(), a.first.rend()), rb(b.first.rbegin(), b.first.rend());
            return ra > rb;
        });
        return terms;
    }

    std::string format_polynomial(const Polynomial& p) const
    {
        if (p.empty())
            return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : ordered_terms(p)) {
            std::string mono = format_monomial(e);
            Int ac = abs(c);
            if (c < 0)
                out += "-";
            else if (!first)
                out += "+";
            if (mono.empty())
                out += ac.str();
            else if (ac != 1)
                out += ac.str() + (names.size() <= 3 ? "" : "*") + mono;
            else
                out += mono;
            first = false;
        }
        return out;
    }

    std::string str() const
    {
        std::string out = "Z[";
        for (std::size_t i = 0; i < names.size(); ++i)
            out += (i ? "," : "") + names[i];
        out += "]";
        if (relations.empty())
            return out;
        out += "/(";
        for (std::size_t i = 0; i < relations.size(); ++i)
            out += (i ? ", " : "") + format_polynomial(relations[i]);
        return out + ")";
    }
};

inline Presentation presentation(const Fan& f)
{
    if (!is_smooth(f))
        throw std::invalid_argument("presentation: fan must be smooth");
    const std::size_t m = f.ray_count();
    const int n = f.dim();
    Presentation pr;
    std::optional<IndexSet> best_complement;
    for (const auto& cone : f.max_cones()) {
        IndexSet all(m);
        std::iota(all.begin(), all.end(), 0);
        IndexSet comp = set_difference(all, cone);
        if (!best_complement || comp < *best_complement) {
            best_complement = comp;
            pr.eliminated_cone = cone;
        }
    }
    pr.kept = *best_complement;
    const std::size_t r = pr.kept.size();
    if (r == 1)
        pr.names = {"x"};
    else if (r == 2)
        pr.names = {"x", "y"};
    else if (r == 3)
        pr.names = {"x", "y", "z"};
    else
        for (std::size_t j = 0; j < r; ++j)
            pr.names.push_back("x" + std::to_string(j + 1));

    // V_sigma mu_sigma + V_K mu_K = 0  =>  mu_sigma = -V_sigma^{-1} V_K x
    IntMatrix vs = f.cone_matrix(pr.eliminated_cone);
    IntMatrix vk = f.cone_matrix(pr.kept);
    IntMatrix elim = unimodular_inverse(vs) * vk;
    pr.mu_in_x.assign(m, std::vector<Int>(r));
    for (std::size_t j = 0; j < r; ++j)
        pr.mu_in_x[pr.kept[j]][j] = 1;
    for (int a = 0; a < n; ++a)
        for (std::size_t j = 0; j < r; ++j)
            pr.mu_in_x[pr.eliminated_cone[a]][j] = -elim(a, j);

    for (const auto& nonface : underlying_complex(f).minimal_nonfaces()) {
        Polynomial poly{{std::vector<int>(r, 0), Int(1)}};
        for (int i : nonface) {
            Polynomial next;
            for (const auto& [e, c] : poly)
                for (std::size_t j = 0; j < r; ++j) {
                    if (pr.mu_in_x[i][j] == 0)
                        continue;
                    auto e2 = e;
                    e2[j] += 1;
                    next[e2] += c * pr.mu_in_x[i][j];
                }
            for (auto it = next.begin(); it != next.end();)
                it = it->second == 0 ? next.erase(it) : std::next(it);
            poly = std::move(next);
        }
        if (poly.empty())
            continue;
        auto lead = Presentation::ordered_terms(poly).front();
        if (lead.second < 0)
            for (auto& [e, c] : poly)
                c = -c;
        if (std::find(pr.relations.begin(), pr.relations.end(), poly) == pr.relations.end())
            pr.relations.push_back(std::move(poly));
    }
    return pr;
}

}  // namespace toric

#endif
