/**
 * Finite simplicial complexes given by their facets, with face enumeration,
 * f- and h-vectors, minimal non-faces and isomorphism search.
 *
 * Vertices are 0-based internally.  The JSON layer converts to 1-based.
 */

#ifndef TORIC_COMPLEX_HPP
#define TORIC_COMPLEX_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "zlattice.hpp"

namespace toric {

using IndexSet = std::vector<int>;  // sorted, distinct

inline IndexSet sorted_set(IndexSet s)
{
    std::sort(s.begin(), s.end());
    return s;
}

inline bool is_subset(const IndexSet& a, const IndexSet& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline IndexSet set_intersection(const IndexSet& a, const IndexSet& b)
{
    IndexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline IndexSet set_difference(const IndexSet& a, const IndexSet& b)
{
    IndexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline std::string format_index_set(const IndexSet& s, int offset = 1)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + std::to_string(s[i] + offset);
    return out + "}";
}

class SimplicialComplex
{
public:
    SimplicialComplex() = default;

    /// Facets are sorted internally; facets contained in other facets are dropped.
    SimplicialComplex(int vertex_count, std::vector<IndexSet> facets) : vertex_count_(vertex_count)
    {
        for (auto& f : facets) {
            f = sorted_set(std::move(f));
            if (std::adjacent_find(f.begin(), f.end()) != f.end())
                throw std::invalid_argument("SimplicialComplex: repeated vertex in facet");
            for (int v : f)
                if (v < 0 || v >= vertex_count)
                    throw std::invalid_argument("SimplicialComplex: vertex out of range");
        }
        std::sort(facets.begin(), facets.end());
        facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
        for (std::size_t i = 0; i < facets.size(); ++i) {
            bool contained = false;
            for (std::size_t j = 0; j < facets.size() && !contained; ++j)
                contained = i != j && facets[i].size() < facets[j].size() && is_subset(facets[i], facets[j]);
            if (!contained)
                facets_.push_back(facets[i]);
        }
    }

    int vertex_count() const { return vertex_count_; }
    const std::vector<IndexSet>& facets() const { return facets_; }

    /// Largest facet size minus one; -1 for the void complex.
    int dimension() const
    {
        int d = -1;
        for (const auto& f : facets_)
            d = std::max(d, static_cast<int>(f.size()) - 1);
        return d;
    }

    bool is_pure() const
    {
        return std::all_of(facets_.begin(), facets_.end(),
                           [&](const IndexSet& f) { return static_cast<int>(f.size()) == dimension() + 1; });
    }

    /// Every vertex lies in some facet.
    bool uses_all_vertices() const
    {
        std::vector<bool> used(vertex_count_, false);
        for (const auto& f : facets_)
            for (int v : f)
                used[v] = true;
        return std::all_of(used.begin(), used.end(), [](bool b) { return b; });
    }

    bool is_face(const IndexSet& s) const
    {
        return std::any_of(facets_.begin(), facets_.end(), [&](const IndexSet& f) { return is_subset(s, f); });
    }

    /// All faces including the empty face, sorted by size then lexicographically.
    std::vector<IndexSet> faces() const
    {
        std::set<IndexSet> all;
        for (const auto& f : facets_) {
            const std::size_t k = f.size();
            for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
                IndexSet s;
                for (std::size_t i = 0; i < k; ++i)
                    if (mask & (1ul << i))
                        s.push_back(f[i]);
                all.insert(std::move(s));
            }
        }
        std::vector<IndexSet> out(all.begin(), all.end());
        std::stable_sort(out.begin(), out.end(),
                         [](const IndexSet& a, const IndexSet& b) { return a.size() < b.size(); });
        return out;
    }

    /// f_0, ..., f_d: number of faces with i+1 vertices.
    std::vector<Int> f_vector() const
    {
        std::vector<Int> f(dimension() + 1);
        for (const auto& s : faces())
            if (!s.empty())
                f[s.size() - 1] += 1;
        return f;
    }

    /// h-vector of a pure (d-1)-dimensional complex: h_k = sum_i (-1)^{k-i} C(d-i, k-i) f_{i-1}.
    std::vector<Int> h_vector() const
    {
        const int d = dimension() + 1;
        std::vector<Int> f(d + 1);
        f[0] = 1;
        auto fv = f_vector();
        for (int i = 1; i <= d; ++i)
            f[i] = fv[i - 1];
        auto binom = [](int n, int k) {
            Int r = 1;
            for (int i = 1; i <= k; ++i)
                r = r * (n - k + i) / i;
            return r;
        };
        std::vector<Int> h(d + 1);
        for (int k = 0; k <= d; ++k)
            for (int i = 0; i <= k; ++i) {
                Int term = binom(d - i, k - i) * f[i];
                h[k] += ((k - i) % 2 == 0) ? term : Int(-term);
            }
        return h;
    }

    /// Minimal subsets that are not faces, by size then lexicographically.
    std::vector<IndexSet> minimal_nonfaces() const
    {
        std::set<IndexSet> face_set;
        for (auto& s : faces())
            face_set.insert(s);
        std::vector<IndexSet> out;
        for (int v = 0; v < vertex_count_; ++v)
            if (!face_set.count({v}))
                out.push_back({v});
        const int max_size = dimension() + 2;
        std::vector<IndexSet> layer;
        for (const auto& s : face_set)
            if (s.size() == 1)
                layer.push_back(s);
        for (int k = 2; k <= max_size; ++k) {
            std::vector<IndexSet> next;
            for (const auto& base : layer) {
                for (int v = base.back() + 1; v < vertex_count_; ++v) {
                    IndexSet cand = base;
                    cand.push_back(v);
                    bool boundary_ok = true;
                    for (std::size_t drop = 0; drop < cand.size() && boundary_ok; ++drop) {
                        IndexSet sub;
                        for (std::size_t i = 0; i < cand.size(); ++i)
                            if (i != drop)
                                sub.push_back(cand[i]);
                        boundary_ok = face_set.count(sub) > 0;
                    }
                    if (!boundary_ok)
                        continue;
                    if (face_set.count(cand))
                        next.push_back(cand);
                    else
                        out.push_back(cand);
                }
            }
            layer = std::move(next);
        }
        return out;
    }

    /// Number of facets containing v.
    int vertex_degree(int v) const
    {
        int d = 0;
        for (const auto& f : facets_)
            if (std::binary_search(f.begin(), f.end(), v))
                ++d;
        return d;
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b)
    {
        return a.vertex_count_ == b.vertex_count_ && a.facets_ == b.facets_;
    }

private:
    int vertex_count_ = 0;
    std::vector<IndexSet> facets_;
};

/// A vertex bijection: vertex v of the source maps to map[v] of the target.
using VertexMap = std::vector<int>;

namespace detail {

// Vertex invariant used for pruning: facet degree plus the f-vector of the
// vertex link.  Isomorphisms preserve it.
inline std::vector<long> vertex_signature(const SimplicialComplex& s, int v)
{
    std::vector<long> sig;
    sig.push_back(s.vertex_degree(v));
    std::set<IndexSet> link_faces;
    for (const auto& f : s.facets()) {
        if (!std::binary_search(f.begin(), f.end(), v))
            continue;
        IndexSet rest;
        for (int w : f)
            if (w != v)
                rest.push_back(w);
        const std::size_t k = rest.size();
        for (unsigned long mask = 1; mask < (1ul << k); ++mask) {
            IndexSet sub;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (1ul << i))
                    sub.push_back(rest[i]);
            link_faces.insert(sub);
        }
    }
    std::vector<long> counts(s.dimension() + 1, 0);
    for (const auto& f : link_faces)
        counts[f.size() - 1]++;
    sig.insert(sig.end(), counts.begin(), counts.end());
    return sig;
}

// Backtracking over vertex bijections.  `visit` returns false to stop.
inline void search_isomorphisms(const SimplicialComplex& s, const SimplicialComplex& t,
                                const std::function<bool(const VertexMap&)>& visit)
{
    const int m = s.vertex_count();
    if (m != t.vertex_count() || s.facets().size() != t.facets().size())
        return;
    {
        auto fs = s.f_vector(), ft = t.f_vector();
        if (fs != ft)
            return;
    }
    std::vector<std::vector<long>> sig_s(m), sig_t(m);
    for (int v = 0; v < m; ++v) {
        sig_s[v] = vertex_signature(s, v);
        sig_t[v] = vertex_signature(t, v);
    }
    {
        auto a = sig_s, b = sig_t;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            return;
    }
    std::set<IndexSet> target_facets(t.facets().begin(), t.facets().end());
    // facets of s indexed by their largest vertex: checked once fully assigned
    std::vector<std::vector<const IndexSet*>> closing(m);
    for (const auto& f : s.facets())
        if (!f.empty())
            closing[f.back()].push_back(&f);

    VertexMap map(m, -1);
    std::vector<bool> used(m, false);
    bool stop = false;
    std::function<void(int)> extend = [&](int v) {
        if (stop)
            return;
        if (v == m) {
            if (!visit(map))
                stop = true;
            return;
        }
        for (int w = 0; w < m && !stop; ++w) {
            if (used[w] || sig_s[v] != sig_t[w])
                continue;
            map[v] = w;
            bool ok = true;
            for (const IndexSet* f : closing[v]) {
                IndexSet img;
                for (int x : *f)
                    img.push_back(map[x]);
                std::sort(img.begin(), img.end());
                if (!target_facets.count(img)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                used[w] = true;
                extend(v + 1);
                used[w] = false;
            }
            map[v] = -1;
        }
    };
    extend(0);
}

}  // namespace detail

/// Some vertex bijection carrying the facets of s onto the facets of t.
inline std::optional<VertexMap> complexes_isomorphic(const SimplicialComplex& s, const SimplicialComplex& t)
{
    std::optional<VertexMap> found;
    detail::search_isomorphisms(s, t, [&](const VertexMap& m) {
        found = m;
        return false;
    });
    return found;
}

/// All isomorphisms s -> t in lexicographic order of the vertex images.
inline std::vector<VertexMap> all_complex_isomorphisms(const SimplicialComplex& s, const SimplicialComplex& t)
{
    std::vector<VertexMap> out;
    detail::search_isomorphisms(s, t, [&](const VertexMap& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

inline std::vector<VertexMap> complex_automorphisms(const SimplicialComplex& s)
{
    return all_complex_isomorphisms(s, s);
}

}  // namespace toric

#endif
