/**
 * The built-in corpus of toric manifolds used by the tests and the CLI.
 * Every entry records the constructor call that produced it.
 */

#ifndef TORIC_CORPUS_HPP
#define TORIC_CORPUS_HPP

#include <random>
#include <string>
#include <vector>

#include "fan.hpp"

namespace toric {

struct CorpusEntry {
    std::string id;
    Fan fan;
    std::string provenance;
};

inline constexpr unsigned corpus_seed = 20240611u;

/// Ten generalized Bott towers with at least two stages, total dimension
/// 2..4 and twists in [-3, 3], drawn from a fixed-seed mt19937.
inline std::vector<BottTowerData> random_bott_towers()
{
    std::mt19937 rng(corpus_seed);
    std::vector<BottTowerData> out;
    for (int t = 0; t < 10; ++t) {
        BottTowerData d;
        int total = 2 + static_cast<int>(rng() % 3);
        int first = 1 + static_cast<int>(rng() % (total - 1));
        d.stage_dims.push_back(first);
        int rest = total - first;
        while (rest > 0) {
            int k = 1 + static_cast<int>(rng() % rest);
            d.stage_dims.push_back(k);
            rest -= k;
        }
        d.twists.resize(d.stage_dims.size());
        for (std::size_t j = 1; j < d.stage_dims.size(); ++j)
            for (int i = 0; i < d.stage_dims[j]; ++i) {
                std::vector<Int> tw;
                for (std::size_t k = 0; k < j; ++k)
                    tw.push_back(static_cast<long>(rng() % 7) - 3);
                d.twists[j].push_back(tw);
            }
        out.push_back(d);
    }
    return out;
}

inline std::string describe(const BottTowerData& d)
{
    std::string s = "bott_tower(dims=[";
    for (std::size_t j = 0; j < d.stage_dims.size(); ++j)
        s += (j ? "," : "") + std::to_string(d.stage_dims[j]);
    s += "], twists=[";
    bool first = true;
    for (std::size_t j = 1; j < d.twists.size(); ++j)
        for (const auto& tw : d.twists[j]) {
            s += first ? "[" : ",[";
            first = false;
            for (std::size_t k = 0; k < tw.size(); ++k)
                s += (k ? "," : "") + tw[k].str();
            s += "]";
        }
    return s + "])";
}

inline std::vector<CorpusEntry> corpus()
{
    std::vector<CorpusEntry> out;
    for (int n = 1; n <= 4; ++n)
        out.push_back({"cp" + std::to_string(n), projective_space(n), "projective_space(" + std::to_string(n) + ")"});
    for (int a = -3; a <= 3; ++a)
        out.push_back({"hirzebruch_" + std::to_string(a), hirzebruch(a), "hirzebruch(" + std::to_string(a) + ")"});
    auto towers = random_bott_towers();
    for (std::size_t t = 0; t < towers.size(); ++t) {
        std::string id = std::string("bott_random_") + (t < 9 ? "0" : "") + std::to_string(t + 1);
        out.push_back({id, bott_tower(towers[t]),
                       describe(towers[t]) + " from mt19937 seed " + std::to_string(corpus_seed)});
    }
    out.push_back({"cp1xcp1", product(projective_space(1), projective_space(1)),
                   "product(projective_space(1), projective_space(1))"});
    out.push_back({"cp2xcp1", product(projective_space(2), projective_space(1)),
                   "product(projective_space(2), projective_space(1))"});
    out.push_back({"example_4_3_base", example_4_3_base(),
                   "stellar_subdivide(cp2xcp1, first maximal cone)"});
    auto triple = example_4_3_triple();
    for (std::size_t i = 0; i < triple.size(); ++i)
        out.push_back({"example_4_3_" + std::to_string(i + 1), triple[i],
                       "example_4_3_triple()[" + std::to_string(i) + "]"});
    return out;
}

}  // namespace toric

#endif
