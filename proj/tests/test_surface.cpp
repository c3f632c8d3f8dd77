#include "support.hpp"

#include <gtest/gtest.h>

using namespace tst;

namespace {

// Some 3-1 move at the vertex created by 1-3 on triangle t restores T.
bool restores(const Triangulation& T, int t) {
    Triangulation U = pachner_13(T, t);
    for (int k = 0; k < U.triangles(); ++k)
        for (int c = 0; c < 3; ++c) {
            try {
                if (pachner_31(U, k, c) == T) return true;
            } catch (const TriangulationError&) {
            }
        }
    return false;
}

}  // namespace

TEST(GenusSurface, Counts) {
    auto S0 = genus_surface(0);
    EXPECT_EQ(S0.count_vertices(), 3);
    EXPECT_EQ(S0.count_edges(), 3);
    EXPECT_EQ(S0.triangles(), 2);
    EXPECT_EQ(S0.euler_characteristic(), 2);
    auto S1 = genus_surface(1);
    EXPECT_EQ(S1.count_vertices(), 1);
    EXPECT_EQ(S1.count_edges(), 3);
    EXPECT_EQ(S1.triangles(), 2);
    EXPECT_EQ(S1.euler_characteristic(), 0);
    for (int g = 0; g <= 5; ++g) {
        for (int apex : {0, 1}) {
            auto T = genus_surface(g, apex);
            EXPECT_EQ(T.euler_characteristic(), 2 - 2 * g) << g;
            EXPECT_TRUE(T.boundary().empty());
            EXPECT_EQ(T.opp_gluings(), 0);
        }
    }
    EXPECT_THROW(genus_surface(-1), TriangulationError);
}

TEST(NonorientableSurface, Counts) {
    for (int k = 1; k <= 5; ++k) {
        auto T = nonorientable_surface(k);
        EXPECT_EQ(T.euler_characteristic(), 2 - k) << k;
        EXPECT_TRUE(T.boundary().empty());
        EXPECT_GT(T.opp_gluings(), 0);
    }
    EXPECT_THROW(nonorientable_surface(0), TriangulationError);
}

TEST(Gluing, Involution) {
    for (const auto& T : {genus_surface(2), nonorientable_surface(3)})
        for (int h = 0; h < 3 * T.triangles(); ++h) {
            int m = T.mate(h);
            ASSERT_GE(m, 0);
            EXPECT_NE(m, h);
            EXPECT_EQ(T.mate(m), h);
            EXPECT_EQ(T.flag(m), T.flag(h));
        }
    Triangulation T;
    T.add_triangle();
    T.add_triangle();
    T.glue(0, 0, 1, 0, Glue::Same);
    EXPECT_THROW(T.glue(0, 0, 1, 1, Glue::Same), TriangulationError);
    EXPECT_THROW(T.glue(0, 1, 0, 1, Glue::Same), TriangulationError);
}

TEST(Pachner, InverseMoves) {
    for (int g = 0; g <= 2; ++g) {
        auto T = genus_surface(g);
        for (int t = 0; t < T.triangles(); ++t) EXPECT_TRUE(restores(T, t)) << g << " " << t;
    }
    auto T2 = genus_surface(2);
    EXPECT_EQ(pachner_31(pachner_13(T2, 3), 3, 2), T2);
}

TEST(Pachner, Arithmetic) {
    auto T = genus_surface(1);
    auto U = pachner_13(T, 0);
    EXPECT_EQ(U.count_vertices(), 2);
    EXPECT_EQ(U.triangles(), T.triangles() + 2);
    EXPECT_EQ(U.euler_characteristic(), 0);
    for (int g = 0; g <= 2; ++g) {
        auto S = genus_surface(g);
        for (auto [t, s] : pachner_22_sites(S)) EXPECT_EQ(pachner_22(S, t, s).euler_characteristic(), 2 - 2 * g);
    }
}

TEST(Pachner, RejectsBadSites) {
    auto K = nonorientable_surface(2);
    int opp = -1;
    for (int h = 0; h < 3 * K.triangles(); ++h)
        if (K.flag(h) == Glue::Opp) opp = h;
    ASSERT_GE(opp, 0);
    EXPECT_THROW(pachner_22(K, opp / 3, opp % 3), TriangulationError);
    EXPECT_THROW(pachner_22(single_triangle(), 0, 0), TriangulationError);
    EXPECT_THROW(pachner_13(single_triangle(), 3), TriangulationError);
}

TEST(Pachner, RandomWalkKeepsChi) {
    for (unsigned seed = 1; seed <= 10; ++seed)
        for (int g = 0; g <= 2; ++g) EXPECT_EQ(random_pachner_walk(genus_surface(g), 25, seed).euler_characteristic(), 2 - 2 * g);
}

TEST(Flip, Examples) {
    auto S = genus_surface(0);
    EXPECT_EQ(flip_triangle_orientation(flip_triangle_orientation(S, 1), 1), S);
    auto F = flip_triangle_orientation(S, 0);
    EXPECT_EQ(F.opp_gluings(), 3);
    EXPECT_EQ(F.euler_characteristic(), 2);
    auto T = genus_surface(1);
    auto U = flip_triangle_orientation(T, 0);
    for (int s = 0; s < 3; ++s) {
        int h = 3 * 0 + s;
        if (T.mate(h) / 3 != 0) EXPECT_NE(T.flag(h), U.flag(h)) << s;
    }
    EXPECT_THROW(flip_triangle_orientation(T, 7), TriangulationError);
}

TEST(Text, RoundTrip) {
    for (const auto& T : {genus_surface(2), nonorientable_surface(2), pachner_13(genus_surface(1), 1)})
        EXPECT_EQ(Triangulation::parse(T.str()), T);
    EXPECT_THROW(Triangulation::parse("(0,0)~(1,0):same"), TriangulationError);
    EXPECT_THROW(Triangulation::parse("triangles + +\n(0,0)~(1,0):sideways"), TriangulationError);
    EXPECT_THROW(Triangulation::parse(""), TriangulationError);
}
