#include "support.hpp"

#include <gtest/gtest.h>

using namespace tst;

namespace {

CrossingData z2_sign(const Scalar& R = q(1)) {
    auto F = frobenius_group(cyclic_group_algebra(2), R);
    return bicharacter_crossing(F, sign_bicharacter({2}, {0}));
}

Vec scaled(Vec v, const Scalar& s) {
    for (auto& x : v) x *= s;
    return v;
}

}  // namespace

TEST(Axioms, CanonicalOnSymmetricModels) {
    for (const auto& [name, F] : standard_models(q(1))) {
        auto X = canonical_crossing(F);
        auto rep = verify_crossing_axioms(X);
        EXPECT_TRUE(rep.all_ok()) << name << " " << rep.summary();
        EXPECT_TRUE(rep.curl_free) << name;
        EXPECT_EQ(curl_map(X), Matrix::identity(F->dim())) << name;
        EXPECT_TRUE(verify_curl_properties(X).ok()) << name;
    }
}

TEST(Axioms, SignCrossingOnZ2) {
    auto X = z2_sign();
    auto rep = verify_crossing_axioms(X);
    EXPECT_TRUE(rep.all_ok()) << rep.summary();
    EXPECT_FALSE(rep.curl_free);
    Matrix phi(2, 2);
    phi(0, 0) = q(1);
    phi(1, 1) = q(-1);
    EXPECT_EQ(curl_map(X), phi);
    EXPECT_EQ(curl_left(X), curl_right(X));
}

TEST(Axioms, CanonicalOnNonSphericalFailsRibbon) {
    auto A = matrix_algebra(2, Ring::C);
    auto F = frobenius_from_element(A, diag_element(*A, 2, {q(1), q(2)}), q(2, 3));
    ASSERT_FALSE(sigma_involutive(*F));
    auto X = canonical_crossing(F);
    auto rep = verify_crossing_axioms(X);
    EXPECT_FALSE(rep.ok("B5"));
    EXPECT_TRUE(rep.ok("B1") && rep.ok("B2") && rep.ok("B3") && rep.ok("B4"));
    Matrix phi = curl_map(X);
    EXPECT_EQ(phi * F->nakayama(), Matrix::identity(4));
    EXPECT_NE(phi * phi, Matrix::identity(4));
    EXPECT_THROW(eta_chi(X), AxiomFailure);
}

TEST(Axioms, BrokenCrossingDetected) {
    auto F = frobenius_group(cyclic_group_algebra(2), q(1));
    auto X = crossing_from_entries(F, {{0, 0, 0, 0, q(1)}, {0, 1, 1, 0, q(1)}, {1, 0, 0, 1, q(1)}, {1, 1, 1, 1, q(2)}});
    EXPECT_FALSE(verify_crossing_axioms(X).all_ok());
    EXPECT_THROW(crossing_from_entries(F, {{0, 0, 2, 0, q(1)}}), SpinError);
}

TEST(Projectors, CanonicalSymmetric) {
    for (const auto& [name, F] : standard_models(q(1, 2))) {
        auto X = canonical_crossing(F);
        Matrix p = projector_p(X), n = projector_n(X);
        EXPECT_EQ(p, n) << name;
        Matrix Rp = p.scaled(F->R());
        EXPECT_EQ(Rp * Rp, Rp) << name;
        auto Z = center_basis(*F->algebra());
        EXPECT_EQ(rank(p), static_cast<int>(Z.size())) << name;
        for (const auto& z : Z) EXPECT_EQ(Rp.apply(z), z) << name;
        for (int a = 0; a < F->dim(); ++a) EXPECT_TRUE(is_central(*F->algebra(), p.apply(F->algebra()->basis(a)))) << name;
    }
}

TEST(Projectors, TwistedCentres) {
    auto X = z2_sign();
    Matrix p = projector_p(X), n = projector_n(X);
    Matrix phi = curl_map(X);
    EXPECT_EQ(phi * p, p);
    EXPECT_EQ(p * phi, p);
    EXPECT_EQ(phi * n, n * phi);
    EXPECT_EQ(rank(p), static_cast<int>(z_lambda(X).size()));
    EXPECT_EQ(rank(n), static_cast<int>(z_lambda_bar(X).size()));
}

TEST(Preferred, Z2Sign) {
    auto pe = eta_chi(z2_sign());
    EXPECT_EQ(pe.eta, (Vec{q(1, 2), q(0)}));
    EXPECT_EQ(pe.chi, scaled(pe.eta, q(-1)));
}

TEST(Preferred, CanonicalChiEqualsEta) {
    for (const auto& [name, F] : standard_models(q(1))) {
        auto pe = eta_chi(canonical_crossing(F));
        EXPECT_EQ(pe.chi, pe.eta) << name;
        EXPECT_EQ(pe.eta, F->z()) << name;
    }
}

TEST(Preferred, HandleVariantsAgree) {
    for (const auto& X : {z2_sign(), canonical_crossing(frobenius_fhk(matrix_algebra(2, Ring::C), q(1)))}) {
        auto pe = eta_chi(X);
        EXPECT_EQ(handle_element(X, true, false), pe.eta);
        EXPECT_EQ(handle_element(X, false, true), pe.eta);
        EXPECT_EQ(chi_outer_legs(X), pe.chi);
    }
}

TEST(SpinInvariant, Z2Sign) {
    auto X = z2_sign();
    for (int g = 1; g <= 3; ++g) {
        Scalar even = q(2) * q(1, 2).pow(g);
        EXPECT_EQ(spin_invariant(X, g, Parity::Even), even);
        EXPECT_EQ(spin_invariant(X, g, Parity::Odd), -even);
    }
    EXPECT_EQ(spin_invariant(X, 0, Parity::Even), q(2));
    EXPECT_THROW(spin_invariant(X, 0, Parity::Odd), SpinError);
}

TEST(SpinInvariant, FromCurls) {
    auto X = z2_sign();
    EXPECT_EQ(spin_invariant_from_curls(X, {0, 0}), spin_invariant(X, 1, Parity::Even));
    EXPECT_EQ(spin_invariant_from_curls(X, {1, 1}), spin_invariant(X, 1, Parity::Odd));
    EXPECT_EQ(spin_invariant_from_curls(X, {1, 0, 1, 1}), spin_invariant(X, 2, Parity::Odd));
    EXPECT_THROW(spin_invariant_from_curls(X, {1, 0, 1}), SpinError);
}

TEST(SpinInvariant, GenusZeroIndependentOfCrossing) {
    auto F = frobenius_group(cyclic_group_algebra(2), q(1));
    EXPECT_EQ(spin_invariant(canonical_crossing(F), 0, Parity::Even), spin_invariant(z2_sign(), 0, Parity::Even));
}

TEST(Bicharacter, Enumeration) {
    auto z2 = bicharacter_enumerate({2});
    EXPECT_EQ(z2.size(), 2u);
    auto z3 = bicharacter_enumerate({3});
    EXPECT_EQ(z3.size(), 3u);
    int admissible = 0;
    for (const auto& b : z3) admissible += b.crossing_admissible();
    EXPECT_EQ(admissible, 1);
    EXPECT_EQ(bicharacter_enumerate({2, 2}).size(), 8u);
    for (const auto& m : std::vector<std::vector<int>>{{2}, {3}, {4}, {2, 2}, {2, 3}, {4, 2}})
        for (const auto& b : bicharacter_enumerate(m)) EXPECT_TRUE(verify_bicharacter(b).ok()) << b.str();
    EXPECT_THROW(bicharacter_enumerate({13}), SpinError);
}

TEST(Bicharacter, RejectsBadData) {
    Bicharacter b{{3}, {{q(-1)}}};
    EXPECT_FALSE(verify_bicharacter(b).ok());
    Bicharacter c{{2, 2}, {{q(1), q(-1)}, {q(1), q(1)}}};
    EXPECT_FALSE(verify_bicharacter(c).ok());
    EXPECT_THROW(sign_bicharacter({3}, {0}), SpinError);
    auto F = frobenius_group(cyclic_group_algebra(3), q(1));
    Bicharacter w{{3}, {{root_of_unity(3, 1)}}};
    EXPECT_THROW(bicharacter_crossing(F, w), SpinError);
    EXPECT_THROW(bicharacter_crossing(F, sign_bicharacter({2}, {0})), SpinError);
    EXPECT_THROW(bicharacter_crossing(frobenius_fhk(matrix_algebra(2, Ring::C), q(1)), sign_bicharacter({2}, {0})), SpinError);
}

TEST(Bicharacter, D1Violation) {
    auto A = block_z2_grading(matrix_algebra(2, Ring::C), 1);
    Vec x(4);
    x[0] = q(1);
    x[1] = q(1);
    x[2] = q(1);
    auto F = frobenius_from_element(A, x, q(-1));
    try {
        bicharacter_crossing(F, sign_bicharacter({2}, {0}));
        FAIL() << "expected D1 error";
    } catch (const SpinError& e) {
        EXPECT_NE(std::string(e.what()).find("D1"), std::string::npos);
    }
}

TEST(Parity, Names) {
    EXPECT_EQ(parse_parity("odd"), Parity::Odd);
    EXPECT_EQ(parity_name(Parity::Even), "even");
    EXPECT_THROW(parse_parity("both"), SpinError);
}
