#include <random>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "toric/toric.hpp"

using namespace toric;
using gen::without_cone;
using gen::small_complete_fans;

namespace {

bool has_violation(const FanReport& r, const std::string& needle)
{
    return std::any_of(r.violations.begin(), r.violations.end(),
                       [&](const std::string& v) { return v.find(needle) != std::string::npos; });
}

}  // namespace

TEST(Fan, ProjectivePlaneIsToricManifold)
{
    Fan f = projective_space(2);
    EXPECT_EQ(f.rays(), (std::vector<IntVector>{{1, 0}, {0, 1}, {-1, -1}}));
    FanReport r = validate_fan(f);
    EXPECT_TRUE(r.ok());
    EXPECT_TRUE(r.violations.empty());
}

TEST(Fan, MissingConeIsIncomplete)
{
    Fan f = without_cone(projective_space(2), 0);
    FanReport r = validate_fan(f);
    EXPECT_TRUE(r.valid);
    EXPECT_FALSE(r.complete);
    EXPECT_TRUE(r.smooth);
    EXPECT_TRUE(has_violation(r, "incomplete"));
}

TEST(Fan, SingularCone)
{
    Fan f(2, {{1, 0}, {0, 1}, {-1, -2}}, {{0, 1}, {1, 2}, {0, 2}});
    FanReport r = validate_fan(f);
    EXPECT_TRUE(r.valid);
    EXPECT_TRUE(r.complete);
    EXPECT_FALSE(r.smooth);
    EXPECT_TRUE(has_violation(r, "|det| = 2"));
}

TEST(Fan, ImproperOverlap)
{
    Fan f(2, {{1, 0}, {0, 1}, {1, 1}}, {{0, 1}, {0, 2}});
    FanReport r = validate_fan(f);
    EXPECT_FALSE(r.valid);
    EXPECT_TRUE(has_violation(r, "overlap improperly"));
}

TEST(Fan, MalformedInputsReported)
{
    EXPECT_TRUE(has_violation(validate_fan(Fan(2, {{2, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}})),
                              "not primitive"));
    EXPECT_TRUE(has_violation(validate_fan(Fan(2, {{1, 0}, {1, 0}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}})),
                              "coincide"));
    EXPECT_TRUE(has_violation(validate_fan(Fan(2, {{1, 0}, {0, 1}}, {{0, 1}, {0, 1}})), "listed twice"));
    EXPECT_TRUE(has_violation(validate_fan(Fan(2, {{1, 0}, {0, 1}}, {{0, 4}})), "missing ray"));
    EXPECT_TRUE(has_violation(validate_fan(Fan(2, {{1, 0, 0}, {0, 1}}, {{0, 1}})), "has length"));
    EXPECT_FALSE(validate_fan(Fan(2, {{1, 0}, {0, 1}}, {{0, 1}})).complete);
}

TEST(Fan, Hirzebruch)
{
    for (int a = -3; a <= 3; ++a) {
        Fan f = hirzebruch(a);
        EXPECT_EQ(f.rays(), (std::vector<IntVector>{{1, 0}, {0, 1}, {-1, a}, {0, -1}}));
        EXPECT_TRUE(validate_fan(f).ok());
        EXPECT_EQ(f.max_cones().size(), 4u);
    }
}

TEST(Fan, BottTowers)
{
    BottTowerData d;
    d.stage_dims = {1, 1};
    d.twists = {{}, {{2}}};
    EXPECT_EQ(bott_tower(d), hirzebruch(2));

    BottTowerData cube;
    cube.stage_dims = {1, 1, 1};
    Fan c = bott_tower(cube);
    EXPECT_EQ(c.ray_count(), 6u);
    EXPECT_EQ(c.max_cones().size(), 8u);
    EXPECT_TRUE(validate_fan(c).ok());

    // dims (2,1) without twists is CP^2 x CP^1 up to the order of the rays
    BottTowerData d21;
    d21.stage_dims = {2, 1};
    Fan b = bott_tower(d21);
    Fan p = product(projective_space(2), projective_space(1));
    std::set<IntVector> rb(b.rays().begin(), b.rays().end()), rp(p.rays().begin(), p.rays().end());
    EXPECT_EQ(rb, rp);
    EXPECT_TRUE(fans_isomorphic(b, p).has_value());

    BottTowerData bad;
    bad.stage_dims = {1, 1};
    bad.twists = {{}, {{1, 2}}};
    EXPECT_THROW(bott_tower(bad), std::invalid_argument);
}

TEST(Fan, RandomBottTowersAreToricManifolds)
{
    for (const auto& d : random_bott_towers()) {
        int total = std::accumulate(d.stage_dims.begin(), d.stage_dims.end(), 0);
        EXPECT_GE(total, 2);
        EXPECT_LE(total, 4);
        EXPECT_TRUE(validate_fan(bott_tower(d)).ok()) << describe(d);
    }
}

TEST(Fan, Product)
{
    Fan p = product(projective_space(1), projective_space(1));
    EXPECT_EQ(p.dim(), 2);
    EXPECT_EQ(p.ray_count(), 4u);
    EXPECT_EQ(p.max_cones().size(), 4u);
    EXPECT_TRUE(validate_fan(p).ok());
    EXPECT_TRUE(fans_isomorphic(p, hirzebruch(0)).has_value());
}

TEST(Fan, StellarSubdivision)
{
    Fan f = stellar_subdivide(projective_space(2), {0, 1});
    EXPECT_EQ(f.ray_count(), 4u);
    EXPECT_EQ(f.ray(3), (IntVector{1, 1}));
    EXPECT_TRUE(validate_fan(f).ok());
    EXPECT_THROW(stellar_subdivide(projective_space(2), {0, 1, 2}), std::invalid_argument);
    EXPECT_THROW(stellar_subdivide(projective_space(2), {}), std::invalid_argument);
    EXPECT_THROW(stellar_subdivide(projective_space(2), {0, 7}), std::invalid_argument);
}

TEST(Fan, StellarSubdivisionMatchesComplexSubdivision)
{
    // Combinatorially the complex is subdivided at the face: facets F
    // containing the face are replaced by (F minus v) + new vertex, v in face.
    std::mt19937 rng(53);
    for (int t = 0; t < 20; ++t) {
        Fan f = t % 2 ? product(projective_space(2), projective_space(1)) : hirzebruch(static_cast<long>(t % 5) - 2);
        const auto& cone = f.max_cones()[rng() % f.max_cones().size()];
        IndexSet face;
        for (int v : cone)
            if (face.empty() || rng() % 2)
                face.push_back(v);
        if (face.size() == 1)
            face.push_back(cone.back() == face[0] ? cone.front() : cone.back());
        face = sorted_set(face);
        Fan g = stellar_subdivide(f, face);
        const int fresh = static_cast<int>(f.ray_count());
        std::vector<IndexSet> expected;
        for (const auto& c : f.max_cones()) {
            if (!is_subset(face, c)) {
                expected.push_back(c);
                continue;
            }
            for (int v : face) {
                IndexSet nc;
                for (int w : c)
                    if (w != v)
                        nc.push_back(w);
                nc.push_back(fresh);
                expected.push_back(nc);
            }
        }
        EXPECT_EQ(underlying_complex(g), SimplicialComplex(fresh + 1, expected));
        EXPECT_TRUE(validate_fan(g).ok());
    }
}

TEST(Fan, ExampleFourThreeTriple)
{
    Fan y = example_4_3_base();
    EXPECT_EQ(y.ray_count(), 6u);
    EXPECT_EQ(y.ray(5), (IntVector{1, 1, 1}));
    EXPECT_TRUE(validate_fan(y).ok());
    auto t = example_4_3_triple();
    ASSERT_EQ(t.size(), 3u);
    for (const auto& f : t) {
        EXPECT_TRUE(validate_fan(f).ok());
        EXPECT_EQ(f.ray_count(), 7u);
    }
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            EXPECT_FALSE(oracle::complexes_isomorphic(underlying_complex(t[i]), underlying_complex(t[j])));
}

TEST(Completeness, AgreesWithSamplingOracle)
{
    std::mt19937 rng(59);
    int complete = 0, incomplete = 0;
    for (const auto& f : small_complete_fans(rng)) {
        std::vector<Fan> cases{f, without_cone(f, rng() % f.max_cones().size())};
        if (f.max_cones().size() > 2)
            cases.push_back(without_cone(without_cone(f, 0), 0));
        for (const auto& g : cases) {
            bool exact = is_complete(g);
            bool sampled = oracle::sampled_complete(g, static_cast<unsigned>(rng()));
            EXPECT_EQ(exact, sampled);
            (exact ? complete : incomplete)++;
        }
    }
    EXPECT_GT(complete, 10);
    EXPECT_GT(incomplete, 10);
}

TEST(Completeness, InvariantUnderUnimodularChange)
{
    std::mt19937 rng(61);
    for (const auto& e : corpus()) {
        IntMatrix a = oracle::random_unimodular(e.fan.dim(), rng);
        FanReport r = validate_fan(oracle::transform_fan(e.fan, a));
        EXPECT_TRUE(r.ok()) << e.id;
    }
}

TEST(Corpus, EveryEntryIsAToricManifold)
{
    auto c = corpus();
    EXPECT_EQ(c.size(), 27u);
    std::set<std::string> ids;
    for (const auto& e : c) {
        EXPECT_TRUE(ids.insert(e.id).second) << e.id;
        EXPECT_TRUE(validate_fan(e.fan).ok()) << e.id;
    }
}
