/**
 * @file defect.hpp
 * @brief Bimodule defect data and generating-loop spin invariants.
 *
 * Actions are stored per algebra basis element: left[a] has column alpha = e_a . v_alpha,
 * right[a] has column alpha = v_alpha . e_a. P_inv(alpha, beta) = P^{-1}(w_alpha, v_beta),
 * Q_inv(alpha, beta) = Q^{-1}(v_alpha, w_beta); P, Q are their inverses.
 */

#pragma once

#include "spin.hpp"

#include <string>
#include <vector>

namespace statesum {

struct DefectError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BimoduleData {
    FrobeniusPtr frobenius;
    int dim_v = 0;
    std::vector<Matrix> left, right;
    Matrix P_inv, Q_inv;
    Scalar sign{1};
    bool regular = false;  // V = A with multiplication actions
    std::string name;

    Matrix P() const {
        auto m = try_inverse(P_inv);
        if (!m) throw DefectError("pairing P^-1 is degenerate");
        return *m;
    }
    Matrix Q() const {
        auto m = try_inverse(Q_inv);
        if (!m) throw DefectError("pairing Q^-1 is degenerate");
        return *m;
    }
};

// H1: associativity and unit of both actions and their compatibility.
inline CheckReport verify_bimodule_laws(const BimoduleData& V) {
    CheckReport rep;
    const auto& A = *V.frobenius->algebra();
    const int n = A.dim();
    if (static_cast<int>(V.left.size()) != n || static_cast<int>(V.right.size()) != n) {
        rep.fail("H1: one action matrix per algebra basis element required");
        return rep;
    }
    auto act = [&](const std::vector<Matrix>& M, const Vec& a) {
        Matrix r(V.dim_v, V.dim_v);
        for (int i = 0; i < n; ++i)
            if (!a[i].is_zero()) r = r + M[i].scaled(a[i]);
        return r;
    };
    const Matrix I = Matrix::identity(V.dim_v);
    if (act(V.left, A.unit()) != I) rep.fail("H1: 1 . v != v");
    if (act(V.right, A.unit()) != I) rep.fail("H1: v . 1 != v");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Vec ab = A.mul(A.basis(a), A.basis(b));
            if (act(V.left, ab) != V.left[a] * V.left[b]) rep.fail("H1: (ab)v != a(bv) at " + detail::idx({a, b}));
            if (act(V.right, ab) != V.right[b] * V.right[a]) rep.fail("H1: v(ab) != (va)b at " + detail::idx({a, b}));
            if (V.left[a] * V.right[b] != V.right[b] * V.left[a]) rep.fail("H1: (av)b != a(vb) at " + detail::idx({a, b}));
        }
    return rep;
}

// H2: P^-1(sigma(a) v b, w) = P^-1(v, b w a) and the Q^-1 twin.
inline CheckReport verify_pairing_laws(const BimoduleData& V) {
    CheckReport rep;
    const auto& F = *V.frobenius;
    const auto& A = *F.algebra();
    const int n = A.dim();
    const Matrix& sig = F.nakayama();
    for (int a = 0; a < n; ++a) {
        Vec sa = sig.apply(A.basis(a));
        Matrix Ls(V.dim_v, V.dim_v);
        for (int i = 0; i < n; ++i)
            if (!sa[i].is_zero()) Ls = Ls + V.left[i].scaled(sa[i]);
        for (int b = 0; b < n; ++b) {
            Matrix lhs_op = V.right[b] * Ls;        // v -> sigma(a) v b
            Matrix rhs_op = V.right[a] * V.left[b];  // w -> b w a
            // P^-1(x, y) with x in the first slot: lhs(x, y) = P_inv(op x, y)
            if (lhs_op.transpose() * V.P_inv != V.P_inv * rhs_op)
                rep.fail("H2: P^-1 twisted cyclicity fails at " + detail::idx({a, b}));
            if (lhs_op.transpose() * V.Q_inv != V.Q_inv * rhs_op)
                rep.fail("H2: Q^-1 twisted cyclicity fails at " + detail::idx({a, b}));
        }
    }
    return rep;
}

// Q_{ga} P^{gb} = P_{ag} Q^{bg}.
inline bool spherical_defect_condition(const BimoduleData& V) {
    return V.Q_inv.transpose() * V.P() == V.P_inv * V.Q().transpose();
}

// Matrix form (P^tr)^2 = Q^2.
inline bool spherical_defect_matrix_form(const BimoduleData& V) {
    Matrix P = V.P(), Q = V.Q();
    return P.transpose() * P.transpose() == Q * Q;
}

// sigma_V(v) = sum P^-1(w_a, v) v_b Q^{ab}; column gamma = sigma_V(v_gamma).
inline Matrix sigma_v(const BimoduleData& V) { return V.Q().transpose() * V.P_inv; }

// sigma_V^-1(v) = sum Q^-1(v, w_b) P^{ab} v_a, contracting the w-leg of P.
inline Matrix sigma_v_inverse(const BimoduleData& V) { return V.P() * V.Q_inv.transpose(); }

inline BimoduleData regular_bimodule(const FrobeniusPtr& F, const Scalar& sign) {
    if (sign != Scalar(1) && sign != Scalar(-1)) throw DefectError("defect sign must be +1 or -1");
    if (!sigma_involutive(*F)) throw DefectError("regular bimodule needs sigma^2 = id");
    const auto& A = *F->algebra();
    const int n = A.dim();
    BimoduleData V;
    V.frobenius = F;
    V.dim_v = n;
    V.regular = true;
    V.sign = sign;
    V.name = "regular";
    for (int a = 0; a < n; ++a) {
        Matrix L(n, n), R(n, n);
        for (int b = 0; b < n; ++b) {
            for (const auto& [d, v] : A.prod(a, b)) L(d, b) += v;
            for (const auto& [d, v] : A.prod(b, a)) R(d, b) += v;
        }
        V.left.push_back(L);
        V.right.push_back(R);
    }
    V.P_inv = F->B_low();
    V.Q_inv = F->B_low();
    CheckReport rep = verify_bimodule_laws(V);
    rep.merge(verify_pairing_laws(V), "");
    if (!rep.ok()) throw DefectError("regular bimodule fails: " + rep.failures.front());
    return V;
}

struct DefectElements {
    Vec eta_v, rho_v, chi_v;
};

namespace detail {

// V x V -> A through the pairing: v * w = sum B^{xy} e_x P^-1(e_y v, w).
inline Vec pair_product(const BimoduleData& V, const Vec& v, const Vec& w) {
    const auto& F = *V.frobenius;
    const int n = F.dim();
    Vec Pw = V.P_inv.apply(w);  // (P_inv w)_g = sum_b P_inv(g, b) w_b
    Vec out(n);
    for (auto [x, y] : F.B_support()) {
        Vec yv = V.left[y].apply(v);
        Scalar s;
        for (int g = 0; g < V.dim_v; ++g)
            if (!yv[g].is_zero()) s += yv[g] * Pw[g];
        if (!s.is_zero()) out[x] += F.B_up()(x, y) * s;
    }
    return out;
}

}  // namespace detail

// Curl on the defect loop with lambda_{V,V} = sign * lambda_{A,A}.
inline Matrix defect_curl(const BimoduleData& V, const CrossingData& X) {
    if (!V.regular) throw DefectError("defect crossings are built for regular bimodules only");
    const int n = V.dim_v;
    Matrix P = V.P();
    Matrix phi(n, n);
    for (int a = 0; a < n; ++a)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (P(x, y).is_zero()) continue;
                for (const auto& t : X(a, x))
                    if (!V.P_inv(t.l, y).is_zero()) phi(t.k, a) += V.sign * P(x, y) * t.v * V.P_inv(t.l, y);
            }
    return phi;
}

// Handle whose first loop is the defect: (v_a . e_u') * v_b' . e_v, phi_V / phi optional.
inline Vec defect_handle(const BimoduleData& V, const CrossingData& X, bool curl_v, bool curl_a) {
    if (!V.regular) throw DefectError("defect crossings are built for regular bimodules only");
    const auto& F = *X.frobenius();
    const auto& A = *F.algebra();
    const int n = A.dim();
    Matrix P = V.P();
    Matrix phiV = defect_curl(V, X), phi = curl_map(X);
    Vec out(n);
    for (int al = 0; al < V.dim_v; ++al)
        for (int be = 0; be < V.dim_v; ++be) {
            if (P(al, be).is_zero()) continue;
            Vec va = A.basis(al);
            if (curl_v) va = phiV.apply(va);
            for (auto [u, v] : F.B_support()) {
                Vec eu = A.basis(u);
                if (curl_a) eu = phi.apply(eu);
                // lambda_{V,A}(v_be (x) eu) = sum e_k (x) v_l
                detail::Sparse cr = detail::lambda_vec(X, A.basis(be), eu);
                Vec acc(n);
                for (const auto& [key, c] : cr) {
                    if (c.is_zero()) continue;
                    Vec left = V.right[static_cast<int>(key / n)].apply(va);
                    Vec t = detail::pair_product(V, left, A.basis(static_cast<int>(key % n)));
                    for (int d = 0; d < n; ++d)
                        if (!t[d].is_zero()) acc[d] += c * t[d];
                }
                Vec t = A.mul(acc, A.basis(v));
                Scalar s = P(al, be) * F.B_up()(u, v);
                for (int d = 0; d < n; ++d)
                    if (!t[d].is_zero()) out[d] += s * t[d];
            }
        }
    return out;
}

inline DefectElements defect_preferred_elements(const BimoduleData& V, const CrossingData& X) {
    require_axioms(X);
    if (V.frobenius != X.frobenius()) throw DefectError("bimodule and crossing use different Frobenius data");
    const auto& A = *X.frobenius()->algebra();
    DefectElements de{defect_handle(V, X, false, false), defect_handle(V, X, true, false),
                      defect_handle(V, X, true, true)};
    for (const Vec* e : {&de.eta_v, &de.rho_v, &de.chi_v})
        if (!is_central(A, *e)) throw DefectError("defect element is not central");
    if (V.regular) {
        auto pe = eta_chi(X);
        Vec sEta = pe.eta, sChi = pe.chi;
        for (auto& c : sEta) c *= V.sign;
        for (auto& c : sChi) c *= V.sign;
        if (de.eta_v != pe.eta || de.rho_v != sEta || de.chi_v != sChi)
            throw DefectError("regular bimodule elements differ from (eta, sign eta, sign chi)");
    }
    return de;
}

// One handle carries the defect loop; the rest follow the no-defect convention.
inline Scalar generating_loop_invariant(const BimoduleData& V, const CrossingData& X, int g, Parity s,
                                        int loop_curls) {
    if (g < 1) throw DefectError("genus must be >= 1");
    if (loop_curls != 0 && loop_curls != 1) throw DefectError("loop curls must be 0 or 1");
    const auto& F = *X.frobenius();
    const auto& A = *F.algebra();
    auto de = defect_preferred_elements(V, X);
    auto pe = eta_chi(X);
    Vec x;
    if (loop_curls == 1) {
        x = A.mul(s == Parity::Even ? de.rho_v : de.chi_v, A.pow(pe.eta, g - 1));
    } else if (s == Parity::Even) {
        x = A.mul(de.eta_v, A.pow(pe.eta, g - 1));
    } else {
        if (g == 1) throw DefectError("odd torus needs a curl on the defect loop");
        x = A.mul(A.mul(de.eta_v, pe.chi), A.pow(pe.eta, g - 2));
    }
    return F.R() * F.eps(x);
}

}  // namespace statesum
