#include <gtest/gtest.h>

#include "oracles.hpp"
#include "toric/toric.hpp"

using namespace toric;

namespace {

// Z[x,y]/(x^2, y^2 + a xy) worked by hand: mu_1 = mu_3 = x, mu_2 = y,
// mu_4 = y + a x, and the fundamental class is xy.  Elements of degree 4
// are multiples of xy; returns int of (sum of squares of the mu_i).
Int hirzebruch_p1_by_hand(long a)
{
    // (c_x x + c_y y)^2 = c_x^2 x^2 + 2 c_x c_y xy + c_y^2 y^2 = (2 c_x c_y - a c_y^2) xy
    auto square = [&](long cx, long cy) { return Int(2 * cx * cy - a * cy * cy); };
    return square(1, 0) + square(0, 1) + square(1, 0) + square(a, 1);
}

}  // namespace

TEST(Cohomology, ProjectiveSpaces)
{
    for (int n = 1; n <= 4; ++n) {
        Fan f = projective_space(n);
        GradedRing R = ordinary_cohomology(f);
        EXPECT_EQ(betti_numbers(R), std::vector<Int>(n + 1, Int(1)));
        EXPECT_EQ(presentation(f).str(), "Z[x]/(x^" + std::to_string(n + 1) + ")");
        // x^n integrates to 1
        CohClass p = R.one();
        for (int k = 0; k < n; ++k)
            p = cup(R, p, R.generator(0));
        EXPECT_EQ(integrate(R, p), 1);
    }
}

TEST(Cohomology, HirzebruchPresentations)
{
    EXPECT_EQ(presentation(hirzebruch(0)).str(), "Z[x,y]/(x^2, y^2)");
    EXPECT_EQ(presentation(hirzebruch(1)).str(), "Z[x,y]/(x^2, y^2+xy)");
    EXPECT_EQ(presentation(hirzebruch(-1)).str(), "Z[x,y]/(x^2, y^2-xy)");
    EXPECT_EQ(presentation(hirzebruch(3)).str(), "Z[x,y]/(x^2, y^2+3xy)");
    EXPECT_EQ(presentation(hirzebruch(-2)).str(), "Z[x,y]/(x^2, y^2-2xy)");
    EXPECT_EQ(betti_numbers(ordinary_cohomology(hirzebruch(1))), (std::vector<Int>{1, 2, 1}));
}

TEST(Cohomology, HirzebruchRingStructureByHand)
{
    for (long a = -3; a <= 3; ++a) {
        GradedRing R = ordinary_cohomology(hirzebruch(a));
        CohClass x = R.generator(0), y = R.generator(1);
        EXPECT_EQ(R.generator(2), x);
        EXPECT_TRUE(cup(R, x, x).is_zero());
        EXPECT_EQ(integrate(R, cup(R, x, y)), 1);
        EXPECT_EQ(integrate(R, cup(R, y, y)), -a);
    }
}

TEST(Cohomology, EquivariantPresentation)
{
    auto ep = equivariant_presentation(hirzebruch(2));
    EXPECT_EQ(ep.m, 4u);
    EXPECT_EQ(ep.sr_nonfaces, (std::vector<IndexSet>{{0, 2}, {1, 3}}));
    // u -> sum <u, v_i> mu_i
    EXPECT_EQ(ep.structure_map(IntVector{0, 1}), (IntVector{0, 1, 2, -1}));
}

TEST(Cohomology, RequiresToricManifold)
{
    Fan f(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}});
    EXPECT_THROW(ordinary_cohomology(f), std::invalid_argument);
}

TEST(Cohomology, CharacteristicClassesOfProjectiveSpaces)
{
    GradedRing R2 = ordinary_cohomology(projective_space(2));
    CohClass x = R2.generator(0);
    auto c = chern_classes(R2);
    ASSERT_EQ(c.size(), 2u);
    EXPECT_EQ(c[0], scale(3, x));
    EXPECT_EQ(c[1], scale(3, cup(R2, x, x)));
    auto p = pontrjagin_classes(R2);
    ASSERT_EQ(p.size(), 1u);
    EXPECT_EQ(p[0], scale(3, cup(R2, x, x)));
    EXPECT_EQ(integrate(R2, p[0]), 3);

    GradedRing R3 = ordinary_cohomology(projective_space(3));
    CohClass y = R3.generator(0);
    auto p3 = pontrjagin_classes(R3);
    ASSERT_EQ(p3.size(), 1u);
    EXPECT_EQ(p3[0], scale(4, cup(R3, y, y)));
    EXPECT_EQ(integrate(R3, cup(R3, p3[0], y)), 4);

    EXPECT_TRUE(pontrjagin_classes(ordinary_cohomology(projective_space(1))).empty());
}

TEST(Cohomology, HirzebruchFirstPontrjaginIntegratesToZero)
{
    for (long a = -3; a <= 3; ++a) {
        Fan f = hirzebruch(a);
        GradedRing R = ordinary_cohomology(f);
        auto p = total_pontrjagin(f, R);
        ASSERT_EQ(p.size(), 1u);
        EXPECT_EQ(integrate(R, p[0]), hirzebruch_p1_by_hand(a));
        EXPECT_EQ(integrate(R, p[0]), 0);
        EXPECT_EQ(integrate(R, total_chern(f, R)[1]), 4);
    }
}

TEST(Cohomology, CharacteristicNumbers)
{
    Fan f = projective_space(2);
    GradedRing R = ordinary_cohomology(f);
    auto cn = chern_numbers(f, R);
    ASSERT_EQ(cn.size(), 2u);
    EXPECT_EQ(cn[0].first, (std::vector<int>{2}));
    EXPECT_EQ(cn[0].second, 3);
    EXPECT_EQ(cn[1].first, (std::vector<int>{1, 1}));
    EXPECT_EQ(cn[1].second, 9);
    auto pn = pontrjagin_numbers(f, R);
    ASSERT_EQ(pn.size(), 1u);
    EXPECT_EQ(pn[0].second, 3);
    EXPECT_EQ(partitions(4).size(), 5u);
}

TEST(Cohomology, CorpusInvariants)
{
    for (const auto& e : corpus()) {
        const Fan& f = e.fan;
        GradedRing R = ordinary_cohomology(f);  // throws on torsion
        const int n = f.dim();
        auto b = betti_numbers(R);
        for (int k = 0; k <= n; ++k)
            EXPECT_EQ(b[k], b[n - k]) << e.id;
        SimplicialComplex s = underlying_complex(f);
        EXPECT_EQ(f_from_betti(b, n), s.f_vector()) << e.id;
        EXPECT_EQ(b, s.h_vector()) << e.id;
        EXPECT_EQ(integrate(R, total_chern(f, R).back()), Int(f.max_cones().size())) << e.id;
        for (const auto& c : f.max_cones()) {
            Monomial mono(f.ray_count(), 0);
            for (int i : c)
                mono[i] = 1;
            EXPECT_EQ(R.monomial_class(mono).coords, (IntVector{1})) << e.id;
        }
    }
}

TEST(Cohomology, CupIsCommutativeAndAssociative)
{
    for (const char* id : {"cp2xcp1", "example_4_3_base", "bott_random_03", "example_4_3_2"}) {
        Fan f;
        for (const auto& e : corpus())
            if (e.id == id)
                f = e.fan;
        GradedRing R = ordinary_cohomology(f);
        const std::size_t r = R.rank(1);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) {
                CohClass a = R.basis(2, i), b = R.basis(2, j);
                EXPECT_EQ(cup(R, a, b), cup(R, b, a));
                for (std::size_t k = 0; k < r && f.dim() >= 3; ++k) {
                    CohClass c = R.basis(2, k);
                    EXPECT_EQ(cup(R, cup(R, a, b), c), cup(R, a, cup(R, b, c)));
                }
            }
    }
}

TEST(Cohomology, BlowUpAddsOneToMiddleBetti)
{
    for (const auto& e : corpus()) {
        if (e.fan.dim() < 2 || e.fan.ray_count() > 6)
            continue;
        Fan g = stellar_subdivide(e.fan, e.fan.max_cones().front());
        auto b = betti_numbers(ordinary_cohomology(e.fan));
        auto c = betti_numbers(ordinary_cohomology(g));
        for (int k = 0; k <= e.fan.dim(); ++k)
            EXPECT_EQ(c[k], b[k] + ((k == 0 || k == e.fan.dim()) ? 0 : 1)) << e.id;
    }
}

TEST(Cohomology, AgreesWithNaiveQuotientOracle)
{
    auto fans = oracle::small_oracle_fans();
    EXPECT_GT(fans.size(), 20u);
    for (const auto& f : fans) {
        std::string why;
        EXPECT_TRUE(oracle::agrees_with_naive_quotient(f, &why)) << why;
    }
}

TEST(Cohomology, ErrorsOnMisuse)
{
    GradedRing R = ordinary_cohomology(projective_space(2));
    EXPECT_THROW(integrate(R, R.generator(0)), std::invalid_argument);
    EXPECT_THROW(cup(R, R.generator(0), CohClass{4, IntVector{1}}), std::domain_error);
    EXPECT_THROW(total_chern(hirzebruch(1), R), std::invalid_argument);
}
