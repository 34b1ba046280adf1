// Hand-rolled random generators shared by the unit tests and the acceptance gate.
#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "toric/toric.hpp"

namespace gen {

using toric::Fan;
using toric::IndexSet;
using toric::IntMatrix;
using toric::SimplicialComplex;

inline IntMatrix random_matrix(std::size_t r, std::size_t c, int lo, int hi, std::mt19937& rng)
{
    std::uniform_int_distribution<int> dist(lo, hi);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = dist(rng);
    return m;
}

// Random pure complex: k random d-subsets of m vertices.
inline SimplicialComplex random_complex(int m, int d, int k, std::mt19937& rng)
{
    std::vector<IndexSet> facets;
    for (int i = 0; i < k; ++i) {
        std::vector<int> all(m);
        std::iota(all.begin(), all.end(), 0);
        std::shuffle(all.begin(), all.end(), rng);
        facets.emplace_back(all.begin(), all.begin() + d);
    }
    return SimplicialComplex(m, facets);
}

inline SimplicialComplex permuted(const SimplicialComplex& s, const std::vector<int>& perm)
{
    std::vector<IndexSet> facets;
    for (const auto& f : s.facets()) {
        IndexSet g;
        for (int v : f)
            g.push_back(perm[v]);
        facets.push_back(g);
    }
    return SimplicialComplex(s.vertex_count(), facets);
}

inline Fan without_cone(const Fan& f, std::size_t c)
{
    auto cones = f.max_cones();
    cones.erase(cones.begin() + c);
    return Fan(f.dim(), f.rays(), cones);
}

// Smooth complete fans with n <= 3 and at most 8 rays, plus random blow-ups.
inline std::vector<Fan> small_complete_fans(std::mt19937& rng)
{
    std::vector<Fan> out;
    for (const auto& e : toric::corpus())
        if (e.fan.dim() <= 3 && e.fan.ray_count() <= 8)
            out.push_back(e.fan);
    for (int t = 0; t < 10; ++t) {
        Fan f = out[rng() % out.size()];
        while (f.ray_count() < 8) {
            Fan g = toric::stellar_subdivide(f, f.max_cones()[rng() % f.max_cones().size()]);
            if (g.ray_count() > 8)
                break;
            f = g;
            if (rng() % 2)
                break;
        }
        out.push_back(f);
    }
    return out;
}

}  // namespace gen
