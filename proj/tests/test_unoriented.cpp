#include "support.hpp"

#include <gtest/gtest.h>

using namespace tst;

namespace {

std::vector<Involution> standard_involutions(const Scalar& R) {
    std::vector<Involution> out;
    for (int n = 1; n <= 2; ++n) {
        auto MR = frobenius_fhk(matrix_algebra(n, Ring::R), R);
        out.push_back(standard_involution(MR, InvolutionKind::Transpose));
        auto MC = frobenius_fhk(matrix_algebra(n, Ring::C), R);
        out.push_back(standard_involution(MC, InvolutionKind::Transpose));
        auto MCR = frobenius_fhk(matrix_algebra(n, Ring::C_R), R);
        out.push_back(standard_involution(MCR, InvolutionKind::Transpose));
        out.push_back(standard_involution(MCR, InvolutionKind::Hermitian));
    }
    auto MH = frobenius_fhk(matrix_algebra(1, Ring::H_R), R);
    out.push_back(standard_involution(MH, InvolutionKind::Quaternionic));
    auto M2R = frobenius_fhk(matrix_algebra(2, Ring::R), R);
    out.push_back(conjugated_involution(M2R, named_element(*M2R->algebra(), "Omega"), InvolutionKind::Transpose));
    for (int m = 1; m <= 6; ++m)
        out.push_back(standard_involution(frobenius_group(cyclic_group_algebra(m), R), InvolutionKind::Inverse));
    return out;
}

int gamma_of(const Involution& I) { return *I.classes.at(0).gamma; }

}  // namespace

TEST(Involution, GammaTable) {
    auto M2R = frobenius_fhk(matrix_algebra(2, Ring::R), q(1));
    EXPECT_EQ(gamma_of(standard_involution(M2R, InvolutionKind::Transpose)), 1);
    EXPECT_EQ(gamma_of(conjugated_involution(M2R, named_element(*M2R->algebra(), "Omega"), InvolutionKind::Transpose)), -1);
    auto M2CR = frobenius_fhk(matrix_algebra(2, Ring::C_R), q(1));
    EXPECT_EQ(gamma_of(conjugated_involution(M2CR, named_element(*M2CR->algebra(), "eta(1,1)"), InvolutionKind::Hermitian)), 0);
    auto H = frobenius_fhk(matrix_algebra(1, Ring::H_R), q(1));
    EXPECT_EQ(gamma_of(standard_involution(H, InvolutionKind::Quaternionic)), -1);
}

TEST(Involution, AxiomsHold) {
    for (const Scalar& R : {q(1), q(1, 2)})
        for (const auto& I : standard_involutions(R)) {
            EXPECT_TRUE(verify_unoriented_moves(*I.F, I.S).ok()) << I.F->algebra()->name() << " " << kind_name(I.kind);
            EXPECT_TRUE(verify_w_identities(I).ok()) << I.F->algebra()->name() << " " << kind_name(I.kind);
        }
}

TEST(Invariant, ComplexTranspose) {
    for (int n = 1; n <= 3; ++n)
        for (const Scalar& R : {q(1), q(1, 2)}) {
            auto I = standard_involution(frobenius_fhk(matrix_algebra(n, Ring::C), R), InvolutionKind::Transpose);
            for (int k = 1; k <= 3; ++k) EXPECT_EQ(nonorientable_invariant(I, k), (R * q(n)).pow(2 - k));
        }
}

TEST(Invariant, RealWithGamma) {
    auto M2R = frobenius_fhk(matrix_algebra(2, Ring::R), q(1, 2));
    auto I = conjugated_involution(M2R, named_element(*M2R->algebra(), "Omega"), InvolutionKind::Transpose);
    for (int k = 1; k <= 3; ++k) EXPECT_EQ(nonorientable_invariant(I, k), q(-1).pow(2 - k) * q(1).pow(2 - k));
}

TEST(Invariant, HermitianVanishes) {
    for (int n = 1; n <= 2; ++n) {
        auto I = standard_involution(frobenius_fhk(matrix_algebra(n, Ring::C_R), q(1)), InvolutionKind::Hermitian);
        EXPECT_TRUE(vec_is_zero(w_element(I)));
        for (int k = 1; k <= 3; ++k) EXPECT_EQ(nonorientable_invariant(I, k), q(0));
        EXPECT_EQ(evaluate(nonorientable_surface(2), *I.F, I.S).value, q(0));
    }
}

TEST(Invariant, Quaternionic) {
    for (const Scalar& R : {q(1), q(1, 2)}) {
        auto I = standard_involution(frobenius_fhk(matrix_algebra(1, Ring::H_R), R), InvolutionKind::Quaternionic);
        for (int k = 1; k <= 3; ++k) EXPECT_EQ(nonorientable_invariant(I, k), (q(2) * q(-1) * R).pow(2 - k));
    }
}

// Real characters of Z_m: 1 for odd m, 2 for even m.
TEST(Invariant, GroupInverseCountsRealCharacters) {
    for (int m = 1; m <= 6; ++m)
        for (const Scalar& R : {q(1), q(1, 2)}) {
            auto I = standard_involution(frobenius_group(cyclic_group_algebra(m), R), InvolutionKind::Inverse);
            Scalar real = q(m % 2 == 0 ? 2 : 1);
            for (int k = 1; k <= 3; ++k) EXPECT_EQ(nonorientable_invariant(I, k), real * R.pow(2 - k)) << m << " " << k;
        }
}

TEST(Invariant, BruteForceAgrees) {
    for (const auto& I : standard_involutions(q(1, 2))) {
        if (I.F->dim() > 8) continue;
        for (int k = 1; k <= 3; ++k)
            EXPECT_EQ(evaluate(nonorientable_surface(k), *I.F, I.S).value, nonorientable_invariant(I, k))
                << I.F->algebra()->name() << " " << kind_name(I.kind) << " k=" << k;
    }
}

TEST(Invariant, OddCrosscapsFromW) {
    for (const auto& I : standard_involutions(q(1))) {
        const auto& F = *I.F;
        const auto& A = *F.algebra();
        Vec w = w_element(I);
        EXPECT_TRUE(is_central(A, w));
        EXPECT_EQ(A.mul(w, F.z()), A.pow(w, 3));
        for (int g = 0; g <= 2; ++g)
            EXPECT_EQ(nonorientable_invariant(I, 2 * g + 1), F.R() * F.eps(A.mul(w, A.pow(F.z(), g))));
    }
}

TEST(Invariant, OrientedSurfaceIgnoresStar) {
    auto M = frobenius_fhk(matrix_algebra(2, Ring::R), q(1));
    auto I = standard_involution(M, InvolutionKind::Transpose);
    auto T = flip_triangle_orientation(genus_surface(2), 3);
    EXPECT_EQ(evaluate(T, *M, I.S).value, closed_genus_invariant(*M, 2));
}

TEST(Involution, InverseOnZ2) {
    auto I = standard_involution(frobenius_group(cyclic_group_algebra(2), q(1)), InvolutionKind::Inverse);
    const auto& A = *I.F->algebra();
    Vec w = w_element(I);
    EXPECT_TRUE(A.inverse(w).has_value());
}

TEST(Involution, RejectsBadS) {
    auto M = frobenius_fhk(matrix_algebra(2, Ring::R), q(1));
    Matrix S = Matrix::identity(4);
    S(0, 1) = q(1);
    EXPECT_THROW(involution_from_S(M, S), InvolutionError);
    EXPECT_THROW(standard_involution(M, InvolutionKind::Hermitian), InvolutionError);
}
