#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace tst;

TEST(RootOfUnity, Basics) {
    EXPECT_EQ(root_of_unity(1, 0), q(1));
    EXPECT_EQ(root_of_unity(4, 2), q(-1));
    EXPECT_EQ(root_of_unity(3, 1) + root_of_unity(3, 2), q(-1));
    EXPECT_EQ(root_of_unity(6, 3), q(-1));
    EXPECT_EQ(root_of_unity(5, 7), root_of_unity(5, 2));
    EXPECT_EQ(root_of_unity(5, -1), root_of_unity(5, 4));
    EXPECT_THROW(root_of_unity(0, 1), std::invalid_argument);
}

TEST(RootOfUnity, CyclotomicRelation) {
    for (int n = 2; n <= 12; ++n) {
        Scalar s;
        for (int k = 0; k < n; ++k) s += root_of_unity(n, k);
        EXPECT_TRUE(s.is_zero()) << n;
        EXPECT_EQ(root_of_unity(n, 1).pow(n), q(1)) << n;
    }
}

TEST(Inverse, Examples) {
    EXPECT_EQ(q(1).inverse(), q(1));
    EXPECT_EQ(imag_unit().inverse(), -imag_unit());
    Scalar x = q(1) + imag_unit();
    Scalar inv = x.inverse();
    EXPECT_EQ(inv, (q(1) - imag_unit()) * q(1, 2));
    EXPECT_EQ(x * inv, q(1));
    EXPECT_THROW(Scalar().inverse(), DivisionByZero);
}

TEST(Conjugate, Examples) {
    EXPECT_EQ(q(5, 3).conjugate(), q(5, 3));
    EXPECT_EQ(imag_unit().conjugate(), -imag_unit());
    Scalar z = root_of_unity(8, 1);
    EXPECT_EQ(z.conjugate(), root_of_unity(8, 7));
    EXPECT_EQ(z * z.conjugate(), q(1));
    EXPECT_EQ(z + z.conjugate(), (z + z.conjugate()).conjugate());
}

TEST(MixedConductor, LiftsToLcm) {
    Scalar a = root_of_unity(3, 1), b = root_of_unity(4, 1);
    Scalar p = a * b;
    EXPECT_EQ(p, root_of_unity(12, 7));
    EXPECT_EQ(p.pow(12), q(1));
    EXPECT_EQ(a + b - b, a);
}

TEST(Normalize, RationalCollapses) {
    Scalar z = root_of_unity(8, 1);
    Scalar r = z * z.conjugate();
    EXPECT_TRUE(r.is_rational());
    EXPECT_EQ(r.conductor(), 1);
    Scalar s = root_of_unity(4, 1) - root_of_unity(4, 1);
    EXPECT_TRUE(s.is_zero());
}

TEST(Text, RoundTrip) {
    std::vector<Scalar> xs{q(0), q(-7, 3), imag_unit(), root_of_unity(5, 2) + q(1, 2), root_of_unity(12, 5) * q(3)};
    for (const auto& x : xs) EXPECT_EQ(Scalar::parse(x.str()), x) << x.str();
    EXPECT_EQ(Scalar::parse(" 4/6 "), q(2, 3));
    EXPECT_EQ(Scalar::parse("cyclo(4)[0, 1]"), imag_unit());
    EXPECT_THROW(Scalar::parse("1/0"), DivisionByZero);
    EXPECT_THROW(Scalar::parse("abc"), ParseError);
    EXPECT_THROW(Scalar::parse("cyclo(0)[1]"), ParseError);
    EXPECT_THROW(Scalar::parse(""), ParseError);
}

TEST(Text, Decimal) {
    EXPECT_EQ(q(1, 4).decimal(), "0.25");
    EXPECT_EQ(q(-2).decimal(), "-2");
}

// Field axioms on random elements of Q(zeta_N).
class FieldAxioms : public ::testing::TestWithParam<int> {};

TEST_P(FieldAxioms, Random) {
    const int n = GetParam();
    std::mt19937 rng(static_cast<unsigned>(n) * 31u + 1u);
    std::uniform_int_distribution<int> coef(-4, 4), pw(0, n - 1);
    auto rnd = [&] {
        Scalar s;
        for (int k = 0; k < 3; ++k) s += root_of_unity(n, pw(rng)) * q(coef(rng), 1 + (coef(rng) + 4) % 3);
        return s;
    };
    for (int t = 0; t < 30; ++t) {
        Scalar a = rnd(), b = rnd(), c = rnd();
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, Scalar());
        EXPECT_EQ((a * b).conjugate(), a.conjugate() * b.conjugate());
        if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), q(1));
        if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
    }
}

INSTANTIATE_TEST_SUITE_P(Conductors, FieldAxioms, ::testing::Values(1, 3, 4, 5, 6, 8, 12));
