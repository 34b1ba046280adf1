// Brute-force reference implementations used to cross-check the library.
// They favour obviousness over speed and avoid the library routines they
// are meant to check.

#ifndef TORIC_TESTS_ORACLES_HPP
#define TORIC_TESTS_ORACLES_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "toric/toric.hpp"

namespace oracle {

using toric::Int;
using toric::IntMatrix;
using toric::IntVector;
using toric::IndexSet;
using toric::Rational;

inline Int gcd(Int a, Int b)
{
    if (a < 0)
        a = -a;
    if (b < 0)
        b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// Determinant by cofactor expansion along the first row.
inline Int laplace_det(const std::vector<std::vector<Int>>& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return m[0][0];
    Int total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0)
            continue;
        std::vector<std::vector<Int>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Int> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j)
                    row.push_back(m[r][c]);
            minor.push_back(row);
        }
        Int t = m[0][j] * laplace_det(minor);
        total += (j % 2 == 0) ? t : Int(-t);
    }
    return total;
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

/// Elementary divisors from gcds of k x k minors: d_k = g_k / g_{k-1}.
inline std::vector<Int> minor_gcd_divisors(const IntMatrix& a)
{
    std::vector<Int> d;
    Int prev = 1;
    const std::size_t kmax = std::min(a.rows(), a.cols());
    for (std::size_t k = 1; k <= kmax; ++k) {
        Int g = 0;
        for (const auto& rows : subsets(a.rows(), k))
            for (const auto& cols : subsets(a.cols(), k)) {
                std::vector<std::vector<Int>> m(k, std::vector<Int>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        m[i][j] = a(rows[i], cols[j]);
                g = gcd(g, laplace_det(m));
            }
        if (g == 0) {
            for (std::size_t r = k; r <= kmax; ++r)
                d.push_back(0);
            break;
        }
        d.push_back(g / prev);
        prev = g;
    }
    return d;
}

/// Rank over Q by rational Gaussian elimination.
inline std::size_t rational_rank(const IntMatrix& a)
{
    std::vector<std::vector<Rational>> m(a.rows(), std::vector<Rational>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m[i][j] = Rational(a(i, j));
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && m[p][c] == 0)
            ++p;
        if (p == a.rows())
            continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < a.cols(); ++j)
                m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

/// Vertex bijections tried exhaustively.
inline bool complexes_isomorphic(const toric::SimplicialComplex& s, const toric::SimplicialComplex& t)
{
    if (s.vertex_count() != t.vertex_count() || s.facets().size() != t.facets().size())
        return false;
    std::set<IndexSet> target(t.facets().begin(), t.facets().end());
    std::vector<int> perm(s.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (const auto& f : s.facets()) {
            IndexSet img;
            for (int v : f)
                img.push_back(perm[v]);
            std::sort(img.begin(), img.end());
            if (!target.count(img)) {
                ok = false;
                break;
            }
        }
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline std::vector<std::vector<int>> complex_automorphisms(const toric::SimplicialComplex& s)
{
    std::vector<std::vector<int>> out;
    std::set<IndexSet> facets(s.facets().begin(), s.facets().end());
    std::vector<int> perm(s.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (const auto& f : s.facets()) {
            IndexSet img;
            for (int v : f)
                img.push_back(perm[v]);
            std::sort(img.begin(), img.end());
            ok = ok && facets.count(img);
        }
        if (ok)
            out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// x lies in some maximal cone: its coordinates in the cone's ray basis
/// (solved by Cramer's rule) are all nonnegative.
inline bool covered(const toric::Fan& f, const std::vector<Int>& x)
{
    const std::size_t n = f.dim();
    for (const auto& cone : f.max_cones()) {
        std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m[i][j] = f.ray(cone[j])[i];
        Int d = laplace_det(m);
        if (d == 0)
            continue;
        bool inside = true;
        for (std::size_t j = 0; j < n && inside; ++j) {
            auto mj = m;
            for (std::size_t i = 0; i < n; ++i)
                mj[i][j] = x[i];
            Rational coord = Rational(laplace_det(mj)) / Rational(d);
            inside = coord >= 0;
        }
        if (inside)
            return true;
    }
    return false;
}

/// Completeness judged by 1000 random integer directions.
inline bool sampled_complete(const toric::Fan& f, unsigned seed, int samples = 1000)
{
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coord(-1000, 1000);
    for (int s = 0; s < samples; ++s) {
        std::vector<Int> x(f.dim());
        for (auto& c : x)
            c = coord(rng);
        if (!covered(f, x))
            return false;
    }
    return true;
}

/// n vectors form a basis of Z^n iff every elementary divisor of their
/// matrix is 1.
inline bool snf_basis(const std::vector<IntVector>& cols)
{
    const std::size_t n = cols.empty() ? 0 : cols.front().size();
    if (cols.size() != n)
        return false;
    auto d = toric::smith_normal_form(IntMatrix::from_columns(cols, n)).diagonal();
    return std::all_of(d.begin(), d.end(), [](const Int& x) { return x == 1; });
}

/**
 * Naive quotient description of H^{2k}: all monomials of degree k in
 * mu_1..mu_m and the spanning set of the ideal in that degree, namely
 * non-face monomials times anything and theta_j times degree k-1
 * monomials.  Non-faces are found by testing subsets against the cones.
 */
struct NaiveDegree {
    std::vector<std::vector<int>> monomials;  // exponent vectors
    std::vector<IntVector> ideal;             // vectors over the monomials
};

inline std::vector<std::vector<int>> exponent_vectors(std::size_t m, int k)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur(m, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == m) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[i] = e;
            rec(i + 1, left - e);
        }
    };
    if (m == 0)
        return k == 0 ? std::vector<std::vector<int>>{{}} : out;
    rec(0, k);
    return out;
}

inline NaiveDegree naive_degree(const toric::Fan& f, int k)
{
    const std::size_t m = f.ray_count();
    NaiveDegree d;
    d.monomials = exponent_vectors(m, k);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < d.monomials.size(); ++i)
        index[d.monomials[i]] = i;
    auto is_face = [&](const std::vector<int>& e) {
        for (const auto& c : f.max_cones()) {
            bool inside = true;
            for (std::size_t i = 0; i < m; ++i)
                if (e[i] > 0 && !std::binary_search(c.begin(), c.end(), static_cast<int>(i)))
                    inside = false;
            if (inside)
                return true;
        }
        return false;
    };
    for (std::size_t i = 0; i < d.monomials.size(); ++i)
        if (!is_face(d.monomials[i]))
            d.ideal.push_back(toric::unit_vector(d.monomials.size(), i));
    if (k >= 1)
        for (const auto& base : exponent_vectors(m, k - 1))
            for (int j = 0; j < f.dim(); ++j) {
                IntVector v(d.monomials.size());
                for (std::size_t i = 0; i < m; ++i) {
                    auto e = base;
                    e[i] += 1;
                    v[index.at(e)] += f.ray(i)[j];
                }
                d.ideal.push_back(v);
            }
    return d;
}

/// Product of two polynomials given over exponent-vector lists.
inline std::map<std::vector<int>, Int> poly_mul(const std::map<std::vector<int>, Int>& a,
                                                const std::map<std::vector<int>, Int>& b)
{
    std::map<std::vector<int>, Int> out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            auto e = ea;
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] += eb[i];
            out[e] += ca * cb;
        }
    return out;
}

/// A random unimodular matrix: a product of elementary operations and signs.
inline IntMatrix random_unimodular(std::size_t n, std::mt19937& rng, int steps = 6)
{
    IntMatrix a = IntMatrix::identity(n);
    if (n < 2) {
        if (n == 1 && rng() % 2)
            a(0, 0) = -1;
        return a;
    }
    for (int s = 0; s < steps; ++s) {
        std::size_t i = rng() % n, j = rng() % n;
        if (i == j)
            continue;
        Int c = static_cast<long>(rng() % 5) - 2;
        for (std::size_t col = 0; col < n; ++col)
            a(i, col) += c * a(j, col);
    }
    if (rng() % 2)
        for (std::size_t col = 0; col < n; ++col)
            a(0, col) = -a(0, col);
    return a;
}

inline toric::Fan transform_fan(const toric::Fan& f, const IntMatrix& a)
{
    std::vector<IntVector> rays;
    for (const auto& r : f.rays())
        rays.push_back(a * r);
    return toric::Fan(f.dim(), rays, f.max_cones());
}

/// Same fan with rays relabelled: new ray perm[i] is old ray i.
inline toric::Fan relabel_fan(const toric::Fan& f, const std::vector<int>& perm)
{
    std::vector<IntVector> rays(f.ray_count(), IntVector(f.dim()));
    for (std::size_t i = 0; i < f.ray_count(); ++i)
        rays[perm[i]] = f.ray(i);
    std::vector<IndexSet> cones;
    for (const auto& c : f.max_cones()) {
        IndexSet nc;
        for (int i : c)
            nc.push_back(perm[i]);
        cones.push_back(toric::sorted_set(nc));
    }
    std::sort(cones.begin(), cones.end());
    return toric::Fan(f.dim(), rays, cones);
}

/// Compare the library ring of f with the naive quotient in every degree:
/// the library's monomial map must kill exactly the naive ideal (which is
/// saturated and of the right corank), and every product in the
/// multiplication table must agree with multiplying lifted polynomials.
inline bool agrees_with_naive_quotient(const toric::Fan& f, std::string* why = nullptr)
{
    auto fail = [&](const std::string& msg) {
        if (why)
            *why = msg;
        return false;
    };
    toric::GradedRing R = toric::ordinary_cohomology(f);
    const int n = f.dim();
    std::vector<NaiveDegree> deg;
    std::vector<IntMatrix> phi;
    for (int k = 0; k <= n; ++k) {
        NaiveDegree d = naive_degree(f, k);
        std::vector<IntVector> cols;
        for (const auto& e : d.monomials)
            cols.push_back(R.monomial_class(e).coords);
        IntMatrix p = IntMatrix::from_columns(cols, R.rank(k));
        for (const auto& v : d.ideal)
            if (!(p * v).is_zero())
                return fail("degree " + std::to_string(k) + ": ideal element not killed");
        auto image = toric::cokernel_structure(p);
        if (image.free_rank != 0 || !image.torsion.empty())
            return fail("degree " + std::to_string(k) + ": monomials do not span");
        if (!d.ideal.empty()) {
            auto q = toric::cokernel_structure(IntMatrix::from_columns(d.ideal, d.monomials.size()));
            if (q.free_rank != R.rank(k) || !q.torsion.empty())
                return fail("degree " + std::to_string(k) + ": naive quotient has a different shape");
        } else if (d.monomials.size() != R.rank(k)) {
            return fail("degree " + std::to_string(k) + ": rank differs");
        }
        deg.push_back(std::move(d));
        phi.push_back(p);
    }
    auto lift = [&](int k, std::size_t i) {
        auto y = toric::solve_integer(phi[k], toric::unit_vector(R.rank(k), i));
        std::map<std::vector<int>, Int> poly;
        for (std::size_t s = 0; s < y->size(); ++s)
            if ((*y)[s] != 0)
                poly[deg[k].monomials[s]] = (*y)[s];
        return poly;
    };
    for (int p = 0; p <= n; ++p)
        for (int q = p; p + q <= n; ++q)
            for (std::size_t i = 0; i < R.rank(p); ++i)
                for (std::size_t j = 0; j < R.rank(q); ++j) {
                    auto prod = poly_mul(lift(p, i), lift(q, j));
                    IntVector v(deg[p + q].monomials.size());
                    for (std::size_t s = 0; s < v.size(); ++s) {
                        auto it = prod.find(deg[p + q].monomials[s]);
                        if (it != prod.end())
                            v[s] = it->second;
                    }
                    if (phi[p + q] * v != R.table(p, q, i, j))
                        return fail("product of degree " + std::to_string(p) + " and " + std::to_string(q) +
                                    " basis classes differs");
                }
    return true;
}

/// Toric manifolds with at most 5 rays and dimension at most 2: corpus
/// members and their single blow-ups.
inline std::vector<toric::Fan> small_oracle_fans()
{
    std::vector<toric::Fan> out;
    for (const auto& e : toric::corpus()) {
        const auto& f = e.fan;
        if (f.dim() > 2 || f.ray_count() > 5)
            continue;
        out.push_back(f);
        for (const auto& c : f.max_cones()) {
            if (f.ray_count() + 1 > 5 || f.dim() < 2)
                continue;
            out.push_back(toric::stellar_subdivide(f, c));
        }
    }
    return out;
}

/**
 * Independent check that a degree-2 matrix defines a graded ring
 * isomorphism.  In each degree the map L_k is built from integer lifts of
 * the basis through the degree-k monomials in the degree-2 basis; then
 * L_k must be well defined (L_k A_k = B_k), unimodular, and every product
 * of two basis classes must be carried to the product of the images.
 */
inline bool ring_map_is_isomorphism(const toric::GradedRing& R, const toric::GradedRing& S, const IntMatrix& m)
{
    using toric::CohClass;
    const int n = R.top();
    if (S.top() != n || R.ranks() != S.ranks())
        return false;
    if (n == 0)
        return true;
    const std::size_t r = R.rank(1);
    if (m.rows() != r || m.cols() != r)
        return false;
    std::vector<IntMatrix> L(n + 1);
    L[0] = IntMatrix::identity(1);
    for (int k = 1; k <= n; ++k) {
        std::vector<IntVector> a_cols, b_cols;
        std::vector<std::size_t> idx(k, 0);
        std::function<void(int, std::size_t)> rec = [&](int pos, std::size_t start) {
            if (pos == k) {
                CohClass a = R.one(), b = S.one();
                for (auto i : idx) {
                    a = toric::cup(R, a, R.basis(2, i));
                    b = toric::cup(S, b, CohClass{2, m.column(i)});
                }
                a_cols.push_back(a.coords);
                b_cols.push_back(b.coords);
                return;
            }
            for (std::size_t i = start; i < r; ++i) {
                idx[pos] = i;
                rec(pos + 1, i);
            }
        };
        rec(0, 0);
        IntMatrix A = IntMatrix::from_columns(a_cols, R.rank(k));
        IntMatrix B = IntMatrix::from_columns(b_cols, S.rank(k));
        std::vector<IntVector> l_cols;
        for (std::size_t t = 0; t < R.rank(k); ++t) {
            auto y = toric::solve_integer(A, toric::unit_vector(R.rank(k), t));
            if (!y)
                return false;
            l_cols.push_back(B * *y);
        }
        L[k] = IntMatrix::from_columns(l_cols, S.rank(k));
        if (L[k] * A != B)
            return false;
        std::vector<std::vector<Int>> rows(L[k].rows(), std::vector<Int>(L[k].cols()));
        for (std::size_t i = 0; i < L[k].rows(); ++i)
            for (std::size_t j = 0; j < L[k].cols(); ++j)
                rows[i][j] = L[k](i, j);
        Int d = laplace_det(rows);
        if (d != 1 && d != -1)
            return false;
    }
    for (int p = 0; p <= n; ++p)
        for (int q = p; p + q <= n; ++q)
            for (std::size_t i = 0; i < R.rank(p); ++i)
                for (std::size_t j = 0; j < R.rank(q); ++j) {
                    CohClass lhs{2 * (p + q), L[p + q] * R.table(p, q, i, j)};
                    CohClass rhs = toric::cup(S, CohClass{2 * p, L[p].column(i)}, CohClass{2 * q, L[q].column(j)});
                    if (lhs != rhs)
                        return false;
                }
    return true;
}

struct OrbitCounts {
    long total = 0, gl = 0, gl_aut = 0;
};

/**
 * Characteristic functions counted by exhaustive enumeration of the box
 * (no pruning) and grouped by explicit search for equivalences: lambda and
 * lambda' are equivalent when lambda'(sigma(v)) = A lambda(v) for some
 * A in GL(n,Z) and automorphism sigma (only the identity for GL orbits).
 */
inline OrbitCounts brute_force_orbits(const toric::SimplicialComplex& s, int n, long bound)
{
    std::vector<IntVector> box;
    {
        std::vector<long> cur(n, -bound);
        while (true) {
            IntVector v(n);
            Int g = 0;
            for (int i = 0; i < n; ++i) {
                v[i] = cur[i];
                g = gcd(g, v[i]);
            }
            if (g == 1)
                box.push_back(v);
            int i = 0;
            while (i < n && cur[i] == bound)
                cur[i++] = -bound;
            if (i == n)
                break;
            ++cur[i];
        }
    }
    const int m = s.vertex_count();
    auto det_of = [&](const std::vector<IntVector>& vals, const IndexSet& f) {
        std::vector<std::vector<Int>> rows(n, std::vector<Int>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                rows[i][j] = vals[f[j]][i];
        return laplace_det(rows);
    };
    std::vector<std::vector<IntVector>> valid;
    std::vector<std::size_t> choice(m, 0);
    while (true) {
        std::vector<IntVector> vals;
        for (int v = 0; v < m; ++v)
            vals.push_back(box[choice[v]]);
        bool ok = true;
        for (const auto& f : s.facets()) {
            Int d = det_of(vals, f);
            ok = ok && (d == 1 || d == -1);
        }
        if (ok)
            valid.push_back(vals);
        int v = 0;
        while (v < m && choice[v] + 1 == box.size())
            choice[v++] = 0;
        if (v == m)
            break;
        ++choice[v];
    }
    // A = [lambda'(sigma F)] [lambda(F)]^{-1} for the first facet F
    auto equivalent = [&](const std::vector<IntVector>& a, const std::vector<IntVector>& b,
                          const std::vector<int>& sigma) {
        const IndexSet& f = s.facets().front();
        std::vector<IntVector> src, dst;
        for (int v : f) {
            src.push_back(a[v]);
            dst.push_back(b[sigma[v]]);
        }
        IntMatrix A = IntMatrix::from_columns(dst, n) * toric::unimodular_inverse(IntMatrix::from_columns(src, n));
        for (int v = 0; v < m; ++v)
            if (A * a[v] != b[sigma[v]])
                return false;
        return true;
    };
    auto count_classes = [&](const std::vector<std::vector<int>>& group) {
        std::vector<int> cls(valid.size(), -1);
        long classes = 0;
        for (std::size_t i = 0; i < valid.size(); ++i) {
            if (cls[i] >= 0)
                continue;
            cls[i] = static_cast<int>(classes);
            for (std::size_t j = i + 1; j < valid.size(); ++j)
                if (cls[j] < 0)
                    for (const auto& sigma : group)
                        if (equivalent(valid[i], valid[j], sigma)) {
                            cls[j] = cls[i];
                            break;
                        }
            ++classes;
        }
        return classes;
    };
    std::vector<int> identity(m);
    std::iota(identity.begin(), identity.end(), 0);
    OrbitCounts c;
    c.total = static_cast<long>(valid.size());
    c.gl = count_classes({identity});
    c.gl_aut = count_classes(oracle::complex_automorphisms(s));
    return c;
}

}  // namespace oracle

#endif
