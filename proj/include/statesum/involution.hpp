/**
 * @file involution.hpp
 * @brief Involutions (*) for unoriented models: standard and conjugated
 * involutions, the S matrix, classification data, w and closed
 * non-orientable invariants.
 *
 * star(a, b) is the coefficient of e_b in (e_a)^*, i.e. S_a^b; S^{ab} = B^{ac} S_c^b.
 */

#pragma once

#include "statesum.hpp"

#include <optional>
#include <regex>
#include <string>
#include <vector>

namespace statesum {

struct InvolutionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class InvolutionKind { Canonical, Transpose, Hermitian, Quaternionic, Inverse, Conjugated };

inline std::string kind_name(InvolutionKind k) {
    switch (k) {
        case InvolutionKind::Canonical: return "canonical";
        case InvolutionKind::Transpose: return "transpose";
        case InvolutionKind::Hermitian: return "hermitian";
        case InvolutionKind::Quaternionic: return "quaternionic";
        case InvolutionKind::Inverse: return "inverse";
        case InvolutionKind::Conjugated: return "conjugated";
    }
    return "?";
}

inline InvolutionKind parse_kind(const std::string& s) {
    for (auto k : {InvolutionKind::Canonical, InvolutionKind::Transpose, InvolutionKind::Hermitian,
                   InvolutionKind::Quaternionic, InvolutionKind::Inverse, InvolutionKind::Conjugated})
        if (kind_name(k) == s) return k;
    throw InvolutionError("unknown involution kind '" + s + "'");
}

// Per simple block: s = mu s^base, and the class label gamma read off from w.
struct BlockClass {
    std::optional<Scalar> mu;
    std::optional<int> gamma;  // matrix blocks only
};

struct Involution {
    FrobeniusPtr F;
    Matrix star;  // S_a^b
    Matrix S;     // S^{ab}
    InvolutionKind kind = InvolutionKind::Canonical;
    InvolutionKind base = InvolutionKind::Canonical;
    std::vector<BlockClass> classes;
};

namespace detail {

inline void check_block_kind(const Block& b, InvolutionKind k) {
    if (b.kind == BlockKind::Group) {
        if (k != InvolutionKind::Inverse && k != InvolutionKind::Canonical)
            throw InvolutionError(kind_name(k) + " is not defined on a group block; use inverse");
        return;
    }
    switch (k) {
        case InvolutionKind::Inverse: throw InvolutionError("inverse needs a group block");
        case InvolutionKind::Transpose:
            if (b.ring == Ring::H_R) throw InvolutionError("transpose is not an anti-homomorphism on M_n(H_R); use quaternionic");
            break;
        case InvolutionKind::Hermitian:
            if (b.ring == Ring::C)
                throw InvolutionError("hermitian conjugation is not linear over the complex ground field; use transpose");
            if (b.ring != Ring::C_R) throw InvolutionError("hermitian needs an M_n(C_R) block");
            break;
        case InvolutionKind::Quaternionic:
            if (b.ring != Ring::H_R) throw InvolutionError("quaternionic needs an M_n(H_R) block");
            break;
        default: break;
    }
}

// Images of the block's basis elements under the elementary involution k.
inline void fill_block_star(const Algebra& A, const Block& b, InvolutionKind k, Matrix& star) {
    check_block_kind(b, k);
    if (b.kind == BlockKind::Group) {
        for (int h = 0; h < b.n; ++h) star(b.offset + h, b.offset + b.group->inv(h)) = Scalar(1);
        return;
    }
    if (k == InvolutionKind::Canonical) k = b.ring == Ring::H_R ? InvolutionKind::Quaternionic : InvolutionKind::Transpose;
    if (!b.units.empty()) {
        const int n = b.n;
        for (int loc = 0; loc < b.size; ++loc) {
            auto [w, l, m] = b.units[loc];
            int img = w * n * n + m * n + l;
            bool conj = k != InvolutionKind::Transpose && w != 0;
            star(b.offset + loc, b.offset + img) = Scalar(conj ? -1 : 1);
        }
        return;
    }
    if (b.rep.empty()) throw InvolutionError("matrix block has neither elementary units nor a representation");
    const int n = b.n;
    Matrix flat(n * n, b.size);
    for (int q = 0; q < b.size; ++q)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) flat(i * n + j, q) = b.rep[q](i, j);
    for (int q = 0; q < b.size; ++q) {
        Vec rhs(n * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) rhs[i * n + j] = b.rep[q](j, i);
        auto x = solve(flat, rhs);
        if (!x) throw InvolutionError("transpose leaves the block basis span");
        for (int r = 0; r < b.size; ++r) star(b.offset + q, b.offset + r) = (*x)[r];
    }
    (void)A;
}

inline Matrix elementary_star(const Algebra& A, InvolutionKind k) {
    if (A.blocks().empty()) throw InvolutionError("standard involutions need a constructed algebra");
    Matrix star(A.dim(), A.dim());
    for (const auto& b : A.blocks()) fill_block_star(A, b, k, star);
    return star;
}

inline Vec apply_star(const Matrix& star, const Vec& x) {
    Vec r(x.size());
    for (std::size_t a = 0; a < x.size(); ++a) {
        if (x[a].is_zero()) continue;
        for (std::size_t b = 0; b < x.size(); ++b)
            if (!star(static_cast<int>(a), static_cast<int>(b)).is_zero()) r[b] += x[a] * star(static_cast<int>(a), static_cast<int>(b));
    }
    return r;
}

inline Vec restrict_block(const Vec& x, const Block& b) {
    Vec r(x.size());
    for (int i = 0; i < b.size; ++i) r[b.offset + i] = x[b.offset + i];
    return r;
}

}  // namespace detail

// w = R sum e_a e_b e_c e_d S^{ac} S^{bd}
inline Vec w_element(const Frobenius& F, const Matrix& S) {
    const auto& A = *F.algebra();
    const int n = F.dim();
    std::vector<std::array<int, 2>> sup;
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c)
            if (!S(a, c).is_zero()) sup.push_back({a, c});
    Vec w(n);
    for (auto [a, c] : sup)
        for (auto [b, d] : sup) {
            Vec t = A.mul(A.mul(A.mul(A.basis(a), A.basis(b)), A.basis(c)), A.basis(d));
            Scalar coef = F.R() * S(a, c) * S(b, d);
            for (int k = 0; k < n; ++k)
                if (!t[k].is_zero()) w[k] += coef * t[k];
        }
    return w;
}

inline Vec w_element(const Involution& I) { return w_element(*I.F, I.S); }

namespace detail {

inline void classify(Involution& I, const std::optional<Vec>& s, const Matrix& base_star) {
    const auto& A = *I.F->algebra();
    Vec w = w_element(I);
    for (const auto& b : A.blocks()) {
        BlockClass bc;
        if (s) {
            Vec sb = restrict_block(*s, b);
            Vec sbase = apply_star(base_star, sb);
            for (int a = 0; a < A.dim() && !bc.mu; ++a)
                if (!sbase[a].is_zero()) bc.mu = sb[a] / sbase[a];
            if (!bc.mu) throw InvolutionError("s vanishes on a block");
            Vec scaled = sbase;
            for (auto& x : scaled) x *= *bc.mu;
            if (scaled != sb) throw InvolutionError("s is not proportional to s^base on block " + std::to_string(b.offset));
        } else if (b.kind == BlockKind::Matrix) {
            bc.mu = Scalar(1);
        }
        if (b.kind == BlockKind::Matrix) {
            // w restricted to the block is c * 1_block
            Vec wb = restrict_block(w, b), ub = restrict_block(A.unit(), b);
            Scalar c;
            for (int a = 0; a < A.dim(); ++a)
                if (!ub[a].is_zero()) {
                    c = wb[a] / ub[a];
                    break;
                }
            Vec cu = ub;
            for (auto& x : cu) x *= c;
            if (cu != wb) throw InvolutionError("w is not proportional to the block unit");
            Scalar g = c * I.F->R() * Scalar(b.n) * Scalar(b.ring == Ring::H_R ? 2 : 1);
            if (g == Scalar(1)) bc.gamma = 1;
            else if (g == Scalar(-1)) bc.gamma = -1;
            else if (g.is_zero()) bc.gamma = 0;
            else throw InvolutionError("w normalisation " + g.str() + " is not in {-1, 0, 1}");
        }
        I.classes.push_back(bc);
    }
}

inline Involution finish(FrobeniusPtr F, Matrix star, InvolutionKind kind, InvolutionKind base, const std::optional<Vec>& s,
                         const Matrix& base_star) {
    Involution I;
    I.F = std::move(F);
    I.S = I.F->B_up() * star;
    I.star = std::move(star);
    I.kind = kind;
    I.base = base;
    auto rep = verify_unoriented_moves(*I.F, I.S);
    if (!rep.ok()) {
        std::string msg = "involution fails the unoriented axioms:";
        for (const auto* r : {&rep.antihom, &rep.involutive, &rep.symmetric, &rep.eps_invariant})
            if (!r->ok()) msg += " " + r->failures.front() + ";";
        throw InvolutionError(msg);
    }
    classify(I, s, base_star);
    return I;
}

}  // namespace detail

inline Involution standard_involution(const FrobeniusPtr& F, InvolutionKind kind) {
    if (kind == InvolutionKind::Conjugated) throw InvolutionError("conjugated needs an element s and a base kind");
    Matrix star = detail::elementary_star(*F->algebra(), kind);
    return detail::finish(F, star, kind, kind, std::nullopt, star);
}

// a -> s a^base s^{-1}
inline Involution conjugated_involution(const FrobeniusPtr& F, const Vec& s, InvolutionKind base) {
    const auto& A = *F->algebra();
    if (base == InvolutionKind::Conjugated) throw InvolutionError("base kind must be elementary");
    auto sinv = A.inverse(s);
    if (!sinv) throw InvolutionError("s is not invertible");
    Matrix bstar = detail::elementary_star(A, base);
    Matrix star(A.dim(), A.dim());
    for (int a = 0; a < A.dim(); ++a) {
        Vec img = A.mul(A.mul(s, bstar.transpose().apply(A.basis(a))), *sinv);
        for (int b = 0; b < A.dim(); ++b) star(a, b) = img[b];
    }
    return detail::finish(F, star, InvolutionKind::Conjugated, base, s, bstar);
}

// Arbitrary S^{ab}; checked.
inline Involution involution_from_S(const FrobeniusPtr& F, const Matrix& S) {
    Matrix star = F->B_low() * S;
    Involution I;
    I.F = F;
    I.S = S;
    I.star = star;
    I.kind = InvolutionKind::Conjugated;
    auto rep = verify_unoriented_moves(*F, S);
    if (!rep.ok()) throw InvolutionError("S fails the unoriented axioms");
    return I;
}

inline Scalar nonorientable_invariant(const Involution& I, int k) {
    if (k < 1) throw InvolutionError("nonorientable genus must be >= 1");
    I.F->require_special();
    if (!verify_unoriented_moves(*I.F, I.S).ok()) throw InvolutionError("involution fails the unoriented axioms");
    Vec wk = I.F->algebra()->pow(w_element(I), k);
    return I.F->R() * I.F->eps(wk);
}

// w z = w^3 and w central.
inline CheckReport verify_w_identities(const Involution& I) {
    CheckReport rep;
    const auto& A = *I.F->algebra();
    Vec w = w_element(I), z = I.F->z();
    if (A.mul(w, z) != A.pow(w, 3)) rep.fail("w z != w^3");
    if (!is_central(A, w)) rep.fail("w is not central");
    return rep;
}

// ---- matrix forms of elements in one block ----

// Entries over Q(i) for R, C, C_R blocks.
inline Matrix block_matrix(const Algebra& A, int block, const Vec& x) {
    const Block& b = A.blocks().at(block);
    if (b.kind != BlockKind::Matrix || b.ring == Ring::H_R) throw InvolutionError("block_matrix needs an R, C or C_R block");
    Matrix M(b.n, b.n);
    if (!b.units.empty()) {
        for (int loc = 0; loc < b.size; ++loc) {
            auto [w, l, m] = b.units[loc];
            const Scalar& v = x[b.offset + loc];
            if (!v.is_zero()) M(l, m) += w == 1 ? v * imag_unit() : v;
        }
    } else {
        for (int loc = 0; loc < b.size; ++loc)
            if (!x[b.offset + loc].is_zero()) M = M + b.rep[loc].scaled(x[b.offset + loc]);
    }
    return M;
}

// Embed an n x n matrix into one block; `unit` picks the quaternion/complex unit for real rings.
inline Vec block_element(const Algebra& A, int block, const Matrix& M, int unit = 0) {
    const Block& b = A.blocks().at(block);
    if (b.kind != BlockKind::Matrix) throw InvolutionError("block_element needs a matrix block");
    Vec x(A.dim());
    if (!b.units.empty()) {
        for (int loc = 0; loc < b.size; ++loc) {
            auto [w, l, m] = b.units[loc];
            const Scalar& v = M(l, m);
            if (v.is_zero()) continue;
            if (b.ring == Ring::C_R && unit == 0) {
                Scalar re = (v + v.conjugate()) * Scalar::rational(1, 2);
                Scalar im = (v - v.conjugate()) * Scalar::rational(1, 2) * (-imag_unit());
                if (!re.is_rational() || !im.is_rational()) throw InvolutionError("entry is not in Q(i)");
                x[b.offset + loc] = w == 0 ? re : im;
            } else if (w == unit) {
                if (!v.is_rational()) throw InvolutionError("real-ring entries must be rational");
                x[b.offset + loc] = v;
            }
        }
        return x;
    }
    const int n = b.n;
    Matrix flat(n * n, b.size);
    Vec rhs(n * n);
    for (int q = 0; q < b.size; ++q)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) flat(i * n + j, q) = b.rep[q](i, j);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rhs[i * n + j] = M(i, j);
    auto sol = solve(flat, rhs);
    if (!sol) throw InvolutionError("matrix is outside the block span");
    for (int q = 0; q < b.size; ++q) x[b.offset + q] = (*sol)[q];
    return x;
}

inline Matrix eta_matrix(int p, int q) {
    Matrix M(p + q, p + q);
    for (int i = 0; i < p + q; ++i) M(i, i) = Scalar(i < p ? 1 : -1);
    return M;
}

inline Matrix omega_matrix(int n) {
    if (n % 2) throw InvolutionError("Omega needs even size");
    Matrix M(n, n);
    for (int i = 0; i < n; i += 2) {
        M(i, i + 1) = Scalar(1);
        M(i + 1, i) = Scalar(-1);
    }
    return M;
}

// Named s for a single-block algebra: "1", "eta(p,q)", "Omega", optionally prefixed "i*", "j*", "k*".
inline Vec named_element(const Algebra& A, const std::string& name, int block = 0) {
    static const std::regex re(R"(^\s*(?:([ijk])\s*\*\s*)?(1|Omega|eta\(\s*(\d+)\s*,\s*(\d+)\s*\))\s*$)");
    std::smatch m;
    if (!std::regex_match(name, m, re)) throw InvolutionError("unknown named element '" + name + "'");
    const Block& b = A.blocks().at(block);
    Matrix M;
    if (m[2] == "1") M = Matrix::identity(b.n);
    else if (m[2] == "Omega") M = omega_matrix(b.n);
    else {
        int p = std::stoi(m[3]), q = std::stoi(m[4]);
        if (p + q != b.n) throw InvolutionError("eta(p,q) needs p+q = n");
        M = eta_matrix(p, q);
    }
    int unit = 0;
    if (m[1].matched) {
        unit = std::string("ijk").find(m[1].str()[0]) + 1;
        if ((b.ring == Ring::C_R && unit > 1) || (b.ring != Ring::C_R && b.ring != Ring::H_R))
            throw InvolutionError("unit prefix not available for this ring");
        if (b.ring == Ring::C_R) {
            M = M.scaled(imag_unit());
            unit = 0;
        }
    }
    return block_element(A, block, M, unit);
}

struct FormClass {
    std::string label;  // "eta(p,q)", "Omega", "1" (complex symmetric)
    int p = 0, q = 0;
};

// Congruence reduction of a nondegenerate symmetric (transpose) or hermitian form;
// sign counting by symmetric Gaussian elimination.
inline FormClass normalize_form(Matrix s, bool hermitian, bool complex_ground = false) {
    const int n = s.rows();
    auto bar = [&](const Scalar& x) { return hermitian ? x.conjugate() : x; };
    bool sym = true, anti = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            sym = sym && s(i, j) == bar(s(j, i));
            anti = anti && s(i, j) == -bar(s(j, i));
        }
    if (!try_inverse(s)) throw InvolutionError("form is degenerate");
    if (!sym && anti && !hermitian) return {"Omega", n / 2, n / 2};
    if (!sym) throw InvolutionError("form is neither symmetric nor antisymmetric");
    if (complex_ground) return {"1", n, 0};
    int p = 0, q = 0;
    for (int k = 0; k < n; ++k) {
        if (s(k, k).is_zero()) {
            int j = -1;
            for (int c = k + 1; c < n && j < 0; ++c)
                if (!s(k, c).is_zero()) j = c;
            if (j < 0) throw InvolutionError("form is degenerate");
            for (Scalar c : {Scalar(1), imag_unit()}) {
                // row_k += c row_j, col_k += bar(c) col_j
                Matrix t = s;
                for (int i = 0; i < n; ++i) t(k, i) += c * s(j, i);
                Matrix u = t;
                for (int i = 0; i < n; ++i) u(i, k) += bar(c) * t(i, j);
                if (!u(k, k).is_zero()) {
                    s = u;
                    break;
                }
            }
            if (s(k, k).is_zero()) throw InvolutionError("pivot search failed");
        }
        Scalar piv = s(k, k);
        if (!piv.is_rational()) throw InvolutionError("diagonal entry is not real rational");
        (piv.rational_value() > 0 ? p : q)++;
        Scalar pinv = piv.inverse();
        for (int i = k + 1; i < n; ++i) {
            Scalar f = s(i, k) * pinv;
            if (f.is_zero()) continue;
            for (int c = 0; c < n; ++c) s(i, c) -= f * s(k, c);
            Scalar fb = bar(f);
            for (int r = 0; r < n; ++r) s(r, i) -= fb * s(r, k);
        }
    }
    return {"eta(" + std::to_string(p) + "," + std::to_string(q) + ")", p, q};
}

}  // namespace statesum
