// Shared builders for the test suites.
#pragma once

#include "statesum/defect.hpp"
#include "statesum/involution.hpp"
#include "statesum/spin_structure.hpp"
#include "statesum/statesum.hpp"

#include <string>
#include <utility>
#include <vector>

namespace tst {

using namespace statesum;

inline Scalar q(long p, long d = 1) { return Scalar::rational(p, d); }

struct Named {
    std::string name;
    FrobeniusPtr F;
};

// Symmetric special models at desk dimensions.
inline std::vector<Named> standard_models(const Scalar& R) {
    std::vector<Named> out;
    for (int n = 1; n <= 3; ++n) {
        out.push_back({"M" + std::to_string(n) + "(C)", frobenius_fhk(matrix_algebra(n, Ring::C), R)});
        out.push_back({"M" + std::to_string(n) + "(R)", frobenius_fhk(matrix_algebra(n, Ring::R), R)});
    }
    for (int n = 1; n <= 2; ++n) {
        out.push_back({"M" + std::to_string(n) + "(C_R)", frobenius_fhk(matrix_algebra(n, Ring::C_R), R)});
        out.push_back({"M" + std::to_string(n) + "(H_R)", frobenius_fhk(matrix_algebra(n, Ring::H_R), R)});
    }
    for (int m = 1; m <= 6; ++m)
        out.push_back({"CZ" + std::to_string(m), frobenius_group(cyclic_group_algebra(m), R)});
    out.push_back({"CS3", frobenius_group(group_algebra(symmetric_group(3)), R)});
    return out;
}

inline Vec diag_element(const Algebra& A, int n, const std::vector<Scalar>& d) {
    Vec x(A.dim());
    for (int i = 0; i < n; ++i) x[i * n + i] = d[i];
    return x;
}

// M_3(C) with the block Z_2 grading (2|1) and the non-symmetric form Tr(x .), x = diag(1,1,-1).
inline FrobeniusPtr nonsymmetric_superalgebra() {
    auto A = block_z2_grading(matrix_algebra(3, Ring::C), 2);
    return frobenius_from_element(A, diag_element(*A, 3, {q(1), q(1), q(-1)}), q(1));
}

// Non-associative structure constants with a non-degenerate form: (e1 e1) e1 = e0, e1 (e1 e1) = e1.
inline FrobeniusPtr nonassociative_frobenius() {
    std::vector<Scalar> c(27);
    auto at = [&](int a, int b, int d) -> Scalar& { return c[(a * 3 + b) * 3 + d]; };
    for (int a = 0; a < 3; ++a) {
        at(0, a, a) = q(1);
        at(a, 0, a) = q(1);
    }
    at(1, 1, 2) = q(1);
    at(1, 2, 1) = q(1);
    at(2, 1, 0) = q(1);
    auto A = std::make_shared<Algebra>(3, std::vector<std::string>{"e0", "e1", "e2"}, c, Vec{q(1), q(0), q(0)});
    return frobenius_raw(A, Vec{q(1), q(2), q(3)}, q(1));
}

struct NamedCrossing {
    std::string name;
    CrossingData X;
};

// Every bicharacter construction the suites exercise, plus canonical crossings on a few fhk models.
inline std::vector<NamedCrossing> constructed_crossings() {
    std::vector<NamedCrossing> out;
    out.push_back({"block Z2 sign", bicharacter_crossing(nonsymmetric_superalgebra(), sign_bicharacter({2}, {0}))});
    {
        auto F = frobenius_fhk(complex_i_grading(matrix_algebra(1, Ring::C_R)), q(1));
        out.push_back({"C_R i-grading sign", bicharacter_crossing(F, sign_bicharacter({2}, {0}))});
    }
    {
        auto F = frobenius_fhk(klein_grading(matrix_algebra(1, Ring::H_R)), q(1));
        for (const auto& b : bicharacter_enumerate({2, 2}))
            out.push_back({"H_R Klein " + b.str(), bicharacter_crossing(F, b)});
    }
    {
        auto F = frobenius_fhk(pauli_matrix_algebra(2), q(1));
        for (int d1 : {1, -1})
            for (int d2 : {1, -1}) {
                Bicharacter b{{2, 2}, {{q(d1), q(-1)}, {q(-1), q(d2)}}};
                out.push_back({"pauli2 " + b.str(), bicharacter_crossing(F, b)});
            }
    }
    for (auto mod : std::vector<std::vector<int>>{{2}, {4}, {2, 2}, {3, 2}}) {
        auto F = frobenius_group(abelian_group_algebra(mod), q(1));
        std::vector<int> I;
        for (std::size_t i = 0; i < mod.size(); ++i)
            if (mod[i] % 2 == 0) I.push_back(static_cast<int>(i));
        out.push_back({F->algebra()->name() + " signs", bicharacter_crossing(F, sign_bicharacter(mod, I))});
    }
    for (auto F : {frobenius_fhk(matrix_algebra(2, Ring::C), q(1)), frobenius_fhk(matrix_algebra(1, Ring::H_R), q(1)),
                   frobenius_group(group_algebra(symmetric_group(3)), q(1))})
        out.push_back({F->algebra()->name() + " canonical", canonical_crossing(F)});
    return out;
}

}  // namespace tst
