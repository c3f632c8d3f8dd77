/**
 * @file frobenius.hpp
 * @brief Frobenius data (epsilon, R) on an algebra and the tensors derived from it.
 *
 * Index conventions:
 *   B_low(a,b) = eps(e_a e_b), B_up = B_low^{-1}, B = sum B_up(a,c) e_a (x) e_c
 *   C(a,b,c)   = eps(e_a e_b e_c)
 *   sigma(e_b) = sum_d sigma_b^d e_d with sigma_b^d = sum_a B_low(a,b) B_up(a,d)
 */

#pragma once

#include "algebra.hpp"

#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace statesum {

struct FrobeniusError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CheckReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
    void fail(std::string s) { failures.push_back(std::move(s)); }
    void merge(const CheckReport& o, const std::string& prefix = "") {
        for (const auto& f : o.failures) failures.push_back(prefix + f);
    }
};

class Frobenius;
using FrobeniusPtr = std::shared_ptr<const Frobenius>;

class Frobenius {
public:
    // Unchecked except for non-degeneracy and R != 0.
    Frobenius(AlgebraPtr A, Vec eps, Scalar R) : A_(std::move(A)), eps_(std::move(eps)), R_(std::move(R)) {
        const int n = A_->dim();
        if (static_cast<int>(eps_.size()) != n) throw FrobeniusError("epsilon covector has wrong length");
        if (R_.is_zero()) throw FrobeniusError("face amplitude R must be nonzero");
        Bl_ = Matrix(n, n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (const auto& [d, v] : A_->prod(a, b)) Bl_(a, b) += v * eps_[d];
        auto inv = try_inverse(Bl_);
        if (!inv) {
            auto ker = nullspace(Bl_);
            std::string k;
            for (int a = 0; a < n; ++a)
                if (!ker.empty() && !ker[0][a].is_zero()) k += " (" + ker[0][a].str() + ")" + A_->labels()[a];
            throw FrobeniusError("bilinear form eps(e_a e_b) is degenerate; kernel vector:" + k);
        }
        Bu_ = *inv;
        C_.assign(static_cast<std::size_t>(n) * n * n, Scalar());
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (const auto& [e, v] : A_->prod(a, b))
                    for (int c = 0; c < n; ++c)
                        if (!Bl_(e, c).is_zero()) C_[idx(a, b, c)] += v * Bl_(e, c);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (!C_[idx(a, b, c)].is_zero()) Csp_.push_back({a, b, c});
        sigma_ = Matrix(n, n);
        for (int b = 0; b < n; ++b)
            for (int d = 0; d < n; ++d)
                for (int a = 0; a < n; ++a)
                    if (!Bl_(a, b).is_zero() && !Bu_(a, d).is_zero()) sigma_(d, b) += Bl_(a, b) * Bu_(a, d);
        for (int a = 0; a < n; ++a)
            for (int c = 0; c < n; ++c)
                if (!Bu_(a, c).is_zero()) Bsp_.push_back({a, c});
    }

    const AlgebraPtr& algebra() const { return A_; }
    int dim() const { return A_->dim(); }
    const Vec& epsilon() const { return eps_; }
    const Scalar& R() const { return R_; }
    const Matrix& B_low() const { return Bl_; }
    const Matrix& B_up() const { return Bu_; }
    const Scalar& C(int a, int b, int c) const { return C_[idx(a, b, c)]; }
    const std::vector<std::array<int, 3>>& C_support() const { return Csp_; }
    const std::vector<std::array<int, 2>>& B_support() const { return Bsp_; }
    // Column b holds sigma(e_b).
    const Matrix& nakayama() const { return sigma_; }

    Scalar eps(const Vec& x) const {
        Scalar s;
        for (int a = 0; a < dim(); ++a)
            if (!x[a].is_zero() && !eps_[a].is_zero()) s += x[a] * eps_[a];
        return s;
    }

    // m(B) = sum B_up(a,c) e_a e_c
    Vec mB() const {
        Vec r(dim());
        for (auto [a, c] : Bsp_)
            for (const auto& [d, v] : A_->prod(a, c)) r[d] += Bu_(a, c) * v;
        return r;
    }

    bool special() const {
        Vec m = mB();
        for (auto& x : m) x *= R_;
        return m == A_->unit();
    }

    bool symmetric() const { return Bl_ == Bl_.transpose(); }

    Vec sigma(const Vec& x) const { return sigma_.apply(x); }

    // z = sum B^{ac} B^{bd} e_a e_b e_c e_d
    Vec z() const {
        const int n = dim();
        Vec r(n);
        for (auto [a, c] : Bsp_)
            for (auto [b, d] : Bsp_) {
                Scalar coef = Bu_(a, c) * Bu_(b, d);
                Vec t = A_->mul(A_->mul(A_->mul(A_->basis(a), A_->basis(b)), A_->basis(c)), A_->basis(d));
                for (int k = 0; k < n; ++k)
                    if (!t[k].is_zero()) r[k] += coef * t[k];
            }
        return r;
    }

    void require_special() const {
        if (!special()) throw FrobeniusError("specialness R*m(B) = 1 fails");
    }

    std::shared_ptr<const Frobenius> with_epsilon_scaled(const Scalar& s) const {
        Vec e = eps_;
        for (auto& x : e) x *= s;
        return std::make_shared<Frobenius>(A_, e, R_);
    }

private:
    std::size_t idx(int a, int b, int c) const {
        const std::size_t n = A_->dim();
        return (static_cast<std::size_t>(a) * n + b) * n + c;
    }

    AlgebraPtr A_;
    Vec eps_;
    Scalar R_;
    Matrix Bl_, Bu_, sigma_;
    std::vector<Scalar> C_;
    std::vector<std::array<int, 3>> Csp_;
    std::vector<std::array<int, 2>> Bsp_;
};

inline FrobeniusPtr frobenius_raw(AlgebraPtr A, Vec eps, Scalar R) {
    return std::make_shared<Frobenius>(std::move(A), std::move(eps), std::move(R));
}

// epsilon = R * sum_i w_i tr_i with w = n (ring C), |D| n (real rings), 1 (group blocks).
inline FrobeniusPtr frobenius_fhk(const AlgebraPtr& A, const Scalar& R) {
    if (A->blocks().empty()) throw FrobeniusError("fhk form needs a constructed matrix, group or direct-sum algebra");
    Vec eps(A->dim());
    for (const auto& b : A->blocks())
        for (int a = 0; a < A->dim(); ++a)
            if (!b.trace[a].is_zero()) eps[a] += R * b.fhk_weight * b.trace[a];
    return frobenius_raw(A, eps, R);
}

// eps(h) = R |H| delta_{h,1}; coincides with fhk on group algebras.
inline FrobeniusPtr frobenius_group(const AlgebraPtr& A, const Scalar& R) {
    if (A->blocks().size() != 1 || A->blocks()[0].kind != BlockKind::Group)
        throw FrobeniusError("group form needs a group algebra");
    return frobenius_fhk(A, R);
}

// eps(a) = sum_i tr_i(x a) through the block trace covectors; specialness required.
inline FrobeniusPtr frobenius_from_element(const AlgebraPtr& A, const Vec& x, const Scalar& R) {
    if (A->blocks().empty()) throw FrobeniusError("from_element needs a constructed algebra");
    if (!A->inverse(x)) throw FrobeniusError("x is not invertible");
    Vec tr(A->dim());
    for (const auto& b : A->blocks())
        for (int a = 0; a < A->dim(); ++a) tr[a] += b.trace[a];
    Vec eps(A->dim());
    for (int a = 0; a < A->dim(); ++a)
        for (int b = 0; b < A->dim(); ++b) {
            if (x[b].is_zero()) continue;
            for (const auto& [d, v] : A->prod(b, a))
                if (!tr[d].is_zero()) eps[a] += x[b] * v * tr[d];
        }
    auto F = frobenius_raw(A, eps, R);
    if (!F->special()) throw FrobeniusError("from_element: specialness R*m(B) = 1 fails for this x and R");
    return F;
}

inline Scalar closed_genus_invariant(const Frobenius& F, int g) {
    if (g < 0) throw FrobeniusError("genus must be nonnegative");
    F.require_special();
    Vec zg = F.algebra()->pow(F.z(), g);
    return F.R() * F.eps(zg);
}

// The C tensor obeys C_{abc} B^{cd} = B^{de} C_{eab}; nakayama obeys eps(xy) = eps(sigma(y) x).
inline CheckReport verify_frobenius_identities(const Frobenius& F) {
    CheckReport rep;
    const int n = F.dim();
    const auto& A = *F.algebra();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Scalar s;
            for (int c = 0; c < n; ++c) s += F.B_low()(a, c) * F.B_up()(c, b);
            if (s != Scalar(a == b ? 1 : 0)) rep.fail("snake identity at (" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int d = 0; d < n; ++d) {
                Scalar l, r;
                for (int c = 0; c < n; ++c) l += F.C(a, b, c) * F.B_up()(c, d);
                for (int e = 0; e < n; ++e) r += F.B_up()(d, e) * F.C(e, a, b);
                if (l != r) {
                    rep.fail("BC equation at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(d) + ")");
                    return rep;
                }
            }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            Scalar l = F.eps(A.mul(A.basis(x), A.basis(y)));
            Scalar r = F.eps(A.mul(F.sigma(A.basis(y)), A.basis(x)));
            if (l != r) rep.fail("Nakayama law at (" + std::to_string(x) + "," + std::to_string(y) + ")");
        }
    return rep;
}

// sigma(xy) = sigma(x) sigma(y) on basis pairs.
inline CheckReport verify_nakayama_automorphism(const Frobenius& F) {
    CheckReport rep;
    const auto& A = *F.algebra();
    for (int x = 0; x < F.dim(); ++x)
        for (int y = 0; y < F.dim(); ++y)
            if (F.sigma(A.mul(A.basis(x), A.basis(y))) != A.mul(F.sigma(A.basis(x)), F.sigma(A.basis(y))))
                rep.fail("sigma not multiplicative at (" + std::to_string(x) + "," + std::to_string(y) + ")");
    if (F.sigma(A.unit()) != A.unit()) rep.fail("sigma(1) != 1");
    return rep;
}

// B_{ca} B^{cb} = B_{ac} B^{bc}
inline bool spherical_condition(const Frobenius& F) {
    const int n = F.dim();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Scalar l, r;
            for (int c = 0; c < n; ++c) {
                l += F.B_low()(c, a) * F.B_up()(c, b);
                r += F.B_low()(a, c) * F.B_up()(b, c);
            }
            if (l != r) return false;
        }
    return true;
}

inline bool sigma_involutive(const Frobenius& F) {
    return F.nakayama() * F.nakayama() == Matrix::identity(F.dim());
}

// B_low = S + K with S symmetric, K antisymmetric and the two supported on
// complementary subspaces: S v = 0 for v in V_-, K v = 0 for v in V_+, V_+ + V_- = A.
inline bool b_symmetry_split(const Frobenius& F) {
    const int n = F.dim();
    const Matrix& B = F.B_low();
    Matrix Bt = B.transpose();
    // V_plus = {v : B v = Bt v}, V_minus = {v : B v = -Bt v}
    auto vp = nullspace(B - Bt);
    auto vm = nullspace(B + Bt);
    if (static_cast<int>(vp.size() + vm.size()) != n) return false;
    Matrix basis(n, n);
    int k = 0;
    for (const auto& v : vp) {
        for (int i = 0; i < n; ++i) basis(i, k) = v[i];
        ++k;
    }
    for (const auto& v : vm) {
        for (int i = 0; i < n; ++i) basis(i, k) = v[i];
        ++k;
    }
    if (rank(basis) != n) return false;
    // Orthogonality: v+^T B v- = 0 for all pairs.
    for (const auto& p : vp)
        for (const auto& m : vm) {
            Scalar s;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (!p[i].is_zero() && !m[j].is_zero()) s += p[i] * B(i, j) * m[j];
            if (!s.is_zero()) return false;
        }
    return true;
}

// t = R sum B^{ab} e_a (x) e_b: x t = t x on basis, and m(t) = 1.
inline CheckReport verify_separability(const Frobenius& F) {
    CheckReport rep;
    const int n = F.dim();
    const auto& A = *F.algebra();
    for (int x = 0; x < n; ++x) {
        // (x (x) 1) t and t (1 (x) x) as n x n coefficient arrays
        Matrix lhs(n, n), rhs(n, n);
        for (auto [a, b] : F.B_support()) {
            Scalar c = F.R() * F.B_up()(a, b);
            for (const auto& [d, v] : A.prod(x, a)) lhs(d, b) += c * v;
            for (const auto& [d, v] : A.prod(b, x)) rhs(a, d) += c * v;
        }
        if (lhs != rhs) rep.fail("x.t != t.x for basis element " + A.labels()[x]);
    }
    Vec m = F.mB();
    for (auto& v : m) v *= F.R();
    if (m != A.unit()) rep.fail("m(t) != 1");
    return rep;
}

}  // namespace statesum
