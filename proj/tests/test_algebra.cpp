#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace tst;

namespace {

// Full associativity loop on structure constants.
bool associative(const Algebra& A) {
    const int n = A.dim();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    Scalar l, r;
                    for (int e = 0; e < n; ++e) {
                        l += A.c(a, b, e) * A.c(e, c, d);
                        r += A.c(b, c, e) * A.c(a, e, d);
                    }
                    if (l != r) return false;
                }
    return true;
}

bool unital(const Algebra& A) {
    for (int a = 0; a < A.dim(); ++a)
        if (A.mul(A.unit(), A.basis(a)) != A.basis(a) || A.mul(A.basis(a), A.unit()) != A.basis(a)) return false;
    return true;
}

bool graded(const Algebra& A) {
    const auto& g = *A.grading();
    for (int a = 0; a < A.dim(); ++a)
        for (int b = 0; b < A.dim(); ++b)
            for (const auto& [d, v] : A.prod(a, b))
                if (!v.is_zero() && g.grade[d] != g.add(g.grade[a], g.grade[b])) return false;
    return true;
}

std::vector<AlgebraPtr> zoo() {
    std::vector<AlgebraPtr> out;
    for (Ring r : {Ring::R, Ring::C, Ring::C_R, Ring::H_R})
        for (int n = 1; n <= 2; ++n) out.push_back(matrix_algebra(n, r));
    out.push_back(matrix_algebra(3, Ring::C));
    for (int m = 1; m <= 6; ++m) out.push_back(cyclic_group_algebra(m));
    out.push_back(abelian_group_algebra({2, 2}));
    out.push_back(abelian_group_algebra({4, 2}));
    out.push_back(group_algebra(symmetric_group(3)));
    out.push_back(group_algebra(quaternion_group()));
    out.push_back(group_algebra(dihedral_group(4)));
    out.push_back(pauli_matrix_algebra(2));
    out.push_back(pauli_matrix_algebra(3));
    out.push_back(block_z2_grading(matrix_algebra(3, Ring::C), 2));
    out.push_back(complex_i_grading(matrix_algebra(2, Ring::C_R)));
    out.push_back(klein_grading(matrix_algebra(1, Ring::H_R)));
    out.push_back(direct_sum(matrix_algebra(1, Ring::R), matrix_algebra(2, Ring::R)));
    out.push_back(direct_sum(cyclic_group_algebra(2), cyclic_group_algebra(2)));
    return out;
}

}  // namespace

TEST(MatrixAlgebra, ElementaryProduct) {
    auto A = matrix_algebra(2, Ring::R);
    EXPECT_EQ(A->dim(), 4);
    EXPECT_EQ(A->mul(A->basis(1), A->basis(2)), A->basis(0));  // e12 e21 = e11
    EXPECT_TRUE(vec_is_zero(A->mul(A->basis(2), A->basis(2))));
}

TEST(MatrixAlgebra, QuaternionUnits) {
    auto H = matrix_algebra(1, Ring::H_R);
    auto i = Element::basis(H, 1), j = Element::basis(H, 2), k = Element::basis(H, 3);
    EXPECT_EQ(i * j, k);
    EXPECT_EQ(j * i, q(-1) * k);
    EXPECT_EQ(i * i, q(-1) * Element::unit(H));
    EXPECT_EQ(i * j * k, q(-1) * Element::unit(H));
}

TEST(MatrixAlgebra, Unit) {
    auto A = matrix_algebra(2, Ring::C);
    Vec u(4);
    u[0] = q(1);
    u[3] = q(1);
    EXPECT_EQ(A->unit(), u);
    EXPECT_THROW(matrix_algebra(0, Ring::C), AlgebraError);
}

TEST(GroupAlgebra, CyclicProducts) {
    auto Z2 = cyclic_group_algebra(2);
    EXPECT_EQ(Z2->mul(Z2->basis(1), Z2->basis(1)), Z2->unit());
    auto Z3 = cyclic_group_algebra(3);
    EXPECT_EQ(Z3->mul(Z3->basis(1), Z3->basis(2)), Z3->unit());
}

TEST(GroupAlgebra, S3MatchesPermutationComposition) {
    auto perms = permutations(3);
    auto index = [&](std::vector<int> p) {
        return static_cast<int>(std::find(perms.begin(), perms.end(), p) - perms.begin());
    };
    auto A = group_algebra(symmetric_group(3));
    int t12 = index({1, 0, 2}), t13 = index({2, 1, 0}), c132 = index({2, 0, 1});
    EXPECT_EQ(A->mul(A->basis(t12), A->basis(t13)), A->basis(c132));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            std::vector<int> c(3);
            for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
            EXPECT_EQ(A->mul(A->basis(a), A->basis(b)), A->basis(index(c)));
        }
}

TEST(Groups, Invariants) {
    EXPECT_EQ(symmetric_group(3).conjugacy_class_count(), 3);
    EXPECT_EQ(quaternion_group().center().size(), 2u);
    EXPECT_EQ(dihedral_group(4).center().size(), 2u);
    auto dims = irrep_dimensions(symmetric_group(3));
    std::sort(dims.begin(), dims.end());
    EXPECT_EQ(dims, (std::vector<int>{1, 1, 2}));
    auto q8 = irrep_dimensions(quaternion_group());
    int sq = 0;
    for (int d : q8) sq += d * d;
    EXPECT_EQ(sq, 8);
}

TEST(DirectSum, Examples) {
    auto C = matrix_algebra(1, Ring::C);
    auto S = direct_sum(C, C);
    EXPECT_TRUE(vec_is_zero(S->mul(S->basis(0), S->basis(1))));
    EXPECT_EQ(direct_sum(matrix_algebra(1, Ring::R), matrix_algebra(2, Ring::R))->dim(), 5);
    auto Z = direct_sum(cyclic_group_algebra(2), cyclic_group_algebra(2));
    ASSERT_TRUE(Z->grading().has_value());
    EXPECT_EQ(Z->grading()->moduli, (std::vector<int>{2, 2}));
}

TEST(Center, Examples) {
    auto M = matrix_algebra(2, Ring::R);
    auto z = center_basis(*M);
    ASSERT_EQ(z.size(), 1u);
    EXPECT_TRUE(is_central(*M, M->unit()));
    EXPECT_FALSE(is_central(*M, M->basis(1)));
    EXPECT_EQ(center_basis(*cyclic_group_algebra(2)).size(), 2u);
    EXPECT_EQ(center_basis(*group_algebra(symmetric_group(3))).size(), 3u);
}

TEST(Element, MultiplyUnit) {
    auto A = matrix_algebra(2, Ring::C);
    for (int a = 0; a < A->dim(); ++a) EXPECT_EQ(multiply(Element::unit(A), Element::basis(A, a)), Element::basis(A, a));
}

TEST(Grading, RejectsInconsistentGrades) {
    auto A = cyclic_group_algebra(3);
    EXPECT_THROW(with_grading(A, Grading{{2}, {{0}, {1}, {1}}}), AlgebraError);
    EXPECT_THROW(block_z2_grading(matrix_algebra(2, Ring::C), 3), AlgebraError);
    EXPECT_THROW(klein_grading(matrix_algebra(2, Ring::C)), AlgebraError);
}

TEST(RawAlgebra, AssociativityCheck) {
    // e1 e1 = e0 + e1: associative.
    std::vector<Scalar> c(8);
    auto at = [&](int a, int b, int d) -> Scalar& { return c[(a * 2 + b) * 2 + d]; };
    at(0, 0, 0) = q(1);
    at(0, 1, 1) = q(1);
    at(1, 0, 1) = q(1);
    at(1, 1, 0) = q(1);
    at(1, 1, 1) = q(1);
    Vec u{q(1), q(0)};
    EXPECT_NO_THROW(raw_algebra(2, c, u));
    std::vector<Scalar> nonassoc(27);
    auto nat = [&](int a, int b, int d) -> Scalar& { return nonassoc[(a * 3 + b) * 3 + d]; };
    for (int a = 0; a < 3; ++a) {
        nat(0, a, a) = q(1);
        nat(a, 0, a) = q(1);
    }
    nat(1, 1, 2) = q(1);
    nat(1, 2, 1) = q(1);
    nat(2, 1, 0) = q(1);  // (e1 e1) e1 = e0, e1 (e1 e1) = e1
    EXPECT_THROW(raw_algebra(3, nonassoc, Vec{q(1), q(0), q(0)}), AlgebraError);
}

TEST(Properties, AssociativeUnitalGraded) {
    for (const auto& A : zoo()) {
        EXPECT_TRUE(associative(*A)) << A->name();
        EXPECT_TRUE(unital(*A)) << A->name();
        if (A->grading()) EXPECT_TRUE(graded(*A)) << A->name();
    }
}
