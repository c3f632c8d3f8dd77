#include "support.hpp"

#include <gtest/gtest.h>

using namespace tst;

TEST(Evaluate, Examples) {
    auto F = frobenius_fhk(matrix_algebra(2, Ring::C), q(1));
    EXPECT_EQ(evaluate(genus_surface(0), *F).value, q(4));
    for (const Scalar& R : {q(1), q(1, 2), q(3)})
        for (int n = 1; n <= 3; ++n)
            EXPECT_EQ(evaluate(genus_surface(1), *frobenius_fhk(matrix_algebra(n, Ring::C), R)).value, q(1));
}

TEST(Evaluate, CountsInReport) {
    auto F = frobenius_fhk(matrix_algebra(2, Ring::C), q(1));
    auto r = evaluate(genus_surface(2), *F);
    EXPECT_EQ(r.V, 1);
    EXPECT_EQ(r.T, 6);
    EXPECT_EQ(r.E, 9);
    EXPECT_GT(r.multiplications, 0);
    EXPECT_FALSE(r.contraction_order.empty());
}

TEST(Evaluate, MatchesClosedForm) {
    for (const Scalar& R : {q(1), q(1, 2)})
        for (const auto& [name, F] : standard_models(R)) {
            if (F->dim() > 9) continue;
            for (int g = 0; g <= 2; ++g)
                for (int apex : {0, 1})
                    EXPECT_EQ(evaluate(genus_surface(g, apex), *F).value, closed_genus_invariant(*F, g)) << name << " g=" << g;
        }
}

TEST(Evaluate, MatchesNaive) {
    for (const auto& [name, F] : standard_models(q(1, 2))) {
        if (F->dim() > 4) continue;
        for (int g = 0; g <= 1; ++g) EXPECT_EQ(evaluate_naive(genus_surface(g), *F), evaluate(genus_surface(g), *F).value) << name;
    }
}

TEST(Evaluate, InvariantUnderRandomMoves) {
    auto F = frobenius_fhk(matrix_algebra(2, Ring::C_R), q(1, 2));
    for (unsigned seed = 1; seed <= 6; ++seed)
        for (int g = 0; g <= 2; ++g)
            EXPECT_EQ(evaluate(random_pachner_walk(genus_surface(g), 20, seed), *F).value, closed_genus_invariant(*F, g));
}

TEST(Evaluate, CapAndInputErrors) {
    auto F = frobenius_fhk(matrix_algebra(3, Ring::C), q(1));
    EvalOptions tight;
    tight.cap = 10;
    EXPECT_THROW(evaluate(genus_surface(2), *F, nullptr, tight), ResourceError);
    EXPECT_THROW(evaluate(nonorientable_surface(1), *F), EvaluationError);
    auto bad = F->with_epsilon_scaled(q(2));
    EXPECT_THROW(evaluate(genus_surface(1), *bad), FrobeniusError);
    EXPECT_THROW(evaluate_naive(genus_surface(3), *F, nullptr, 1000), ResourceError);
}

TEST(Evaluate, DiskBoundaryIsC) {
    auto F = frobenius_fhk(matrix_algebra(2, Ring::C), q(1));
    auto r = evaluate(single_triangle(), *F);
    EXPECT_EQ(r.boundary_legs, (std::vector<int>{0, 1, 2}));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c) {
                auto it = r.boundary.find({a, b, c});
                Scalar z = it == r.boundary.end() ? Scalar() : it->second;
                EXPECT_EQ(z, F->C(a, b, c));
            }
}

TEST(Pachner, StandardModelsPass) {
    for (const auto& [name, F] : standard_models(q(1))) EXPECT_TRUE(verify_pachner(*F).ok()) << name;
    EXPECT_TRUE(verify_pachner(*frobenius_fhk(matrix_algebra(3, Ring::C), q(1, 2))).ok());
}

TEST(Pachner, ScaledEpsilonBreaksOneThree) {
    auto F = frobenius_fhk(matrix_algebra(3, Ring::C), q(1))->with_epsilon_scaled(q(2));
    auto r = verify_pachner(*F);
    EXPECT_TRUE(r.moves22.ok());
    EXPECT_FALSE(r.moves13.ok());
}

TEST(Pachner, NonAssociativeBreaksTwoTwo) {
    auto r = verify_pachner(*nonassociative_frobenius());
    EXPECT_FALSE(r.moves22.ok());
}

TEST(UnorientedMoves, Examples) {
    auto M = frobenius_fhk(matrix_algebra(2, Ring::R), q(1));
    EXPECT_TRUE(verify_unoriented_moves(*M, standard_involution(M, InvolutionKind::Transpose).S).ok());
    auto Z = frobenius_group(cyclic_group_algebra(4), q(1));
    EXPECT_TRUE(verify_unoriented_moves(*Z, standard_involution(Z, InvolutionKind::Inverse).S).ok());
    Matrix S = Matrix::identity(4);
    S(0, 1) = q(1);
    auto rep = verify_unoriented_moves(*M, S);
    EXPECT_FALSE(rep.symmetric.ok());
}
