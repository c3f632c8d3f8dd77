/**
 * @file spin.hpp
 * @brief Crossing tensors, curl map, spin preferred elements and bicharacter crossings.
 *
 * lambda(e_i (x) e_j) = sum lambda_{ij}^{kl} e_k (x) e_l. With B = sum B^{xy} e_x (x) e_y:
 *   curl     phi(a)   = sum B^{xy} (id (x) B_low)(lambda(a (x) e_x) (x) e_y)
 *   cylinder p(a)     = sum B^{xy} e_x . m(lambda(e_y (x) a))
 *   handle   h(c1,c2) = sum B^{xy} B^{uv} phi^{c1}(e_x) . m(lambda(e_y (x) phi^{c2}(e_u))) . e_v
 * eta = h(0,0), chi = h(1,1).
 */

#pragma once

#include "frobenius.hpp"
#include "statesum.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace statesum {

struct SpinError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct AxiomFailure : SpinError {
    using SpinError::SpinError;
};

enum class Parity { Even, Odd };

inline std::string parity_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

inline Parity parse_parity(const std::string& s) {
    if (s == "even") return Parity::Even;
    if (s == "odd") return Parity::Odd;
    throw SpinError("parity must be 'even' or 'odd', got '" + s + "'");
}

struct CrossingTerm {
    int k, l;
    Scalar v;
};

class CrossingData {
public:
    CrossingData(FrobeniusPtr F, std::vector<std::vector<CrossingTerm>> rows, std::string label = "")
        : F_(std::move(F)), rows_(std::move(rows)), label_(std::move(label)) {
        const int n = F_->dim();
        if (static_cast<int>(rows_.size()) != n * n) throw SpinError("crossing needs dim^2 rows");
        for (auto& r : rows_) {
            std::map<std::pair<int, int>, Scalar> acc;
            for (auto& t : r) {
                if (t.k < 0 || t.k >= n || t.l < 0 || t.l >= n) throw SpinError("crossing index out of range");
                acc[{t.k, t.l}] += t.v;
            }
            r.clear();
            for (auto& [kl, v] : acc)
                if (!v.is_zero()) r.push_back({kl.first, kl.second, v});
        }
    }

    const FrobeniusPtr& frobenius() const { return F_; }
    int dim() const { return F_->dim(); }
    const std::string& label() const { return label_; }
    const std::vector<CrossingTerm>& operator()(int i, int j) const { return rows_[i * dim() + j]; }

    Scalar at(int i, int j, int k, int l) const {
        for (const auto& t : (*this)(i, j))
            if (t.k == k && t.l == l) return t.v;
        return Scalar();
    }

    // Nonzero entries (i, j, k, l, value) in lexicographic order.
    std::vector<std::tuple<int, int, int, int, Scalar>> entries() const {
        std::vector<std::tuple<int, int, int, int, Scalar>> out;
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < dim(); ++j)
                for (const auto& t : (*this)(i, j)) out.emplace_back(i, j, t.k, t.l, t.v);
        return out;
    }

private:
    FrobeniusPtr F_;
    std::vector<std::vector<CrossingTerm>> rows_;
    std::string label_;
};

inline CrossingData canonical_crossing(const FrobeniusPtr& F) {
    const int n = F->dim();
    std::vector<std::vector<CrossingTerm>> rows(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[i * n + j].push_back({j, i, Scalar(1)});
    return CrossingData(F, std::move(rows), "canonical");
}

inline CrossingData crossing_from_entries(const FrobeniusPtr& F,
                                          const std::vector<std::tuple<int, int, int, int, Scalar>>& entries,
                                          std::string label = "") {
    const int n = F->dim();
    std::vector<std::vector<CrossingTerm>> rows(n * n);
    for (const auto& [i, j, k, l, v] : entries) {
        if (i < 0 || i >= n || j < 0 || j >= n) throw SpinError("crossing index out of range");
        rows[i * n + j].push_back({k, l, v});
    }
    return CrossingData(F, std::move(rows), std::move(label));
}

namespace detail {

using Sparse = std::map<long, Scalar>;

inline void acc(Sparse& s, long key, const Scalar& v) {
    auto [it, inserted] = s.try_emplace(key, v);
    if (!inserted) it->second += v;
}

inline bool sparse_equal(Sparse a, Sparse b) {
    auto prune = [](Sparse& s) {
        for (auto it = s.begin(); it != s.end();) it = it->second.is_zero() ? s.erase(it) : std::next(it);
    };
    prune(a);
    prune(b);
    return a == b;
}

// lambda applied to (x (x) y) for vectors, returning sum over (k,l) as Sparse key k*n+l.
inline Sparse lambda_vec(const CrossingData& X, const Vec& x, const Vec& y) {
    const int n = X.dim();
    Sparse out;
    for (int i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            Scalar c = x[i] * y[j];
            for (const auto& t : X(i, j)) acc(out, static_cast<long>(t.k) * n + t.l, c * t.v);
        }
    }
    return out;
}

// m applied to a Sparse two-leg tensor.
inline Vec multiply_legs(const Algebra& A, const Sparse& s) {
    const int n = A.dim();
    Vec r(n);
    for (const auto& [key, v] : s) {
        if (v.is_zero()) continue;
        for (const auto& [d, c] : A.prod(static_cast<int>(key / n), static_cast<int>(key % n))) r[d] += v * c;
    }
    return r;
}

inline std::string idx(std::initializer_list<int> xs) {
    std::string s = "(";
    bool first = true;
    for (int x : xs) {
        if (!first) s += ",";
        s += std::to_string(x);
        first = false;
    }
    return s + ")";
}

}  // namespace detail

// Right curl: column a holds phi_R(e_a).
inline Matrix curl_right(const CrossingData& X) {
    const auto& F = *X.frobenius();
    const int n = X.dim();
    Matrix phi(n, n);
    for (int a = 0; a < n; ++a)
        for (auto [x, y] : F.B_support())
            for (const auto& t : X(a, x))
                if (!F.B_low()(t.l, y).is_zero()) phi(t.k, a) += F.B_up()(x, y) * t.v * F.B_low()(t.l, y);
    return phi;
}

// Left curl: a -> sum B^{xy} (B_low (x) id)(e_x (x) lambda(e_y (x) a)).
inline Matrix curl_left(const CrossingData& X) {
    const auto& F = *X.frobenius();
    const int n = X.dim();
    Matrix phi(n, n);
    for (int a = 0; a < n; ++a)
        for (auto [x, y] : F.B_support())
            for (const auto& t : X(y, a))
                if (!F.B_low()(x, t.k).is_zero()) phi(t.l, a) += F.B_up()(x, y) * t.v * F.B_low()(x, t.k);
    return phi;
}

inline Matrix curl_map(const CrossingData& X) { return curl_right(X); }

struct AxiomReport {
    std::map<std::string, std::vector<std::string>> failures;  // axiom -> first failing inputs
    bool curl_free = false;

    bool ok(const std::string& axiom) const {
        auto it = failures.find(axiom);
        return it == failures.end() || it->second.empty();
    }
    bool all_ok() const {
        for (const auto& [k, v] : failures)
            if (!v.empty()) return false;
        return true;
    }
    std::string summary() const {
        std::string s;
        for (const auto& [k, v] : failures) s += k + (v.empty() ? ":pass " : ":FAIL" + v.front() + " ");
        s += curl_free ? "curl-free" : "curled";
        return s;
    }
};

inline const std::vector<std::string>& axiom_names() {
    static const std::vector<std::string> names{"B1", "B2", "B3", "B4", "B5"};
    return names;
}

// B1-B5 contracted exhaustively on basis inputs; B6 reported as curl_free.
inline AxiomReport verify_crossing_axioms(const CrossingData& X) {
    const auto& F = *X.frobenius();
    const auto& A = *F.algebra();
    const int n = X.dim();
    AxiomReport rep;
    for (const auto& a : axiom_names()) rep.failures[a];
    auto fail = [&](const std::string& ax, const std::string& where) {
        auto& v = rep.failures[ax];
        if (v.size() < 4) v.push_back(where);
    };

    // B1, lower form: (B_low (x) id)(id (x) lambda) = (id (x) B_low)(lambda (x) id) on a (x) c (x) b.
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c)
            for (int b = 0; b < n; ++b) {
                detail::Sparse l, r;
                for (const auto& t : X(c, b))
                    if (!F.B_low()(a, t.k).is_zero()) detail::acc(l, t.l, t.v * F.B_low()(a, t.k));
                for (const auto& t : X(a, c))
                    if (!F.B_low()(t.l, b).is_zero()) detail::acc(r, t.k, t.v * F.B_low()(t.l, b));
                if (!detail::sparse_equal(l, r)) fail("B1", "low" + detail::idx({a, c, b}));
            }
    // B1, upper form: (id (x) lambda)(B (x) a) = (lambda (x) id)(a (x) B).
    for (int a = 0; a < n; ++a) {
        detail::Sparse l, r;
        for (auto [x, y] : F.B_support()) {
            const Scalar& bxy = F.B_up()(x, y);
            for (const auto& t : X(y, a)) detail::acc(l, (static_cast<long>(x) * n + t.k) * n + t.l, bxy * t.v);
            for (const auto& t : X(a, x)) detail::acc(r, (static_cast<long>(t.k) * n + t.l) * n + y, bxy * t.v);
        }
        if (!detail::sparse_equal(l, r)) fail("B1", "up" + detail::idx({a}));
    }

    // B2: a strand crosses a product vertex from either side.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                detail::Sparse l, r;
                for (const auto& [d, v] : A.prod(a, b))
                    for (const auto& t : X(d, c)) detail::acc(l, static_cast<long>(t.k) * n + t.l, v * t.v);
                for (const auto& t1 : X(b, c))
                    for (const auto& t2 : X(a, t1.k))
                        for (const auto& [d, v] : A.prod(t2.l, t1.l))
                            detail::acc(r, static_cast<long>(t2.k) * n + d, t1.v * t2.v * v);
                if (!detail::sparse_equal(l, r)) fail("B2", "left" + detail::idx({a, b, c}));
                detail::Sparse l2, r2;
                for (const auto& [d, v] : A.prod(b, c))
                    for (const auto& t : X(a, d)) detail::acc(l2, static_cast<long>(t.k) * n + t.l, v * t.v);
                for (const auto& t1 : X(a, b))
                    for (const auto& t2 : X(t1.l, c))
                        for (const auto& [d, v] : A.prod(t1.k, t2.k))
                            detail::acc(r2, static_cast<long>(d) * n + t2.l, t1.v * t2.v * v);
                if (!detail::sparse_equal(l2, r2)) fail("B2", "right" + detail::idx({a, b, c}));
            }

    // B3: lambda o lambda = id.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            detail::Sparse l, r;
            for (const auto& t1 : X(a, b))
                for (const auto& t2 : X(t1.k, t1.l)) detail::acc(l, static_cast<long>(t2.k) * n + t2.l, t1.v * t2.v);
            r[static_cast<long>(a) * n + b] = Scalar(1);
            if (!detail::sparse_equal(l, r)) fail("B3", detail::idx({a, b}));
        }

    // B4: Yang-Baxter.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                detail::Sparse l, r;
                // (lambda (x) id)(id (x) lambda)(lambda (x) id)
                for (const auto& t1 : X(a, b))
                    for (const auto& t2 : X(t1.l, c))
                        for (const auto& t3 : X(t1.k, t2.k))
                            detail::acc(l, (static_cast<long>(t3.k) * n + t3.l) * n + t2.l, t1.v * t2.v * t3.v);
                // (id (x) lambda)(lambda (x) id)(id (x) lambda)
                for (const auto& t1 : X(b, c))
                    for (const auto& t2 : X(a, t1.k))
                        for (const auto& t3 : X(t2.l, t1.l))
                            detail::acc(r, (static_cast<long>(t2.k) * n + t3.k) * n + t3.l, t1.v * t2.v * t3.v);
                if (!detail::sparse_equal(l, r)) fail("B4", detail::idx({a, b, c}));
            }

    // B5: left curl = right curl.
    Matrix pl = curl_left(X), pr = curl_right(X);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (pl(b, a) != pr(b, a)) fail("B5", detail::idx({a, b}));
    rep.curl_free = rep.ok("B5") && pr == Matrix::identity(n);
    return rep;
}

// C1-C4 for the curl map.
inline CheckReport verify_curl_properties(const CrossingData& X) {
    CheckReport rep;
    const auto& F = *X.frobenius();
    const auto& A = *F.algebra();
    const int n = X.dim();
    Matrix phi = curl_map(X);
    if (phi * phi != Matrix::identity(n)) rep.fail("C1: phi^2 != id");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (phi.apply(A.mul(A.basis(a), A.basis(b))) != A.mul(phi.apply(A.basis(a)), phi.apply(A.basis(b)))) {
                rep.fail("C2: phi not multiplicative at " + detail::idx({a, b}));
                a = n;
                break;
            }
    if (phi.apply(A.unit()) != A.unit()) rep.fail("C2: phi(1) != 1");
    if (phi.transpose() * F.B_low() * phi != F.B_low()) rep.fail("C3: B_low(phi a, phi b) != B_low(a, b)");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            // lambda(phi a (x) b) = (id (x) phi) lambda(a (x) b); lambda(a (x) phi b) = (phi (x) id) lambda(a (x) b)
            detail::Sparse l1 = detail::lambda_vec(X, phi.apply(A.basis(a)), A.basis(b));
            detail::Sparse l2 = detail::lambda_vec(X, A.basis(a), phi.apply(A.basis(b)));
            detail::Sparse r1, r2;
            for (const auto& t : X(a, b))
                for (int c = 0; c < n; ++c) {
                    if (!phi(c, t.l).is_zero()) detail::acc(r1, static_cast<long>(t.k) * n + c, t.v * phi(c, t.l));
                    if (!phi(c, t.k).is_zero()) detail::acc(r2, static_cast<long>(c) * n + t.l, t.v * phi(c, t.k));
                }
            if (!detail::sparse_equal(l1, r1) || !detail::sparse_equal(l2, r2)) {
                rep.fail("C4: phi does not pass the crossing at " + detail::idx({a, b}));
                return rep;
            }
        }
    return rep;
}

inline void require_axioms(const CrossingData& X) {
    auto rep = verify_crossing_axioms(X);
    if (!rep.all_ok()) throw AxiomFailure("crossing axioms fail: " + rep.summary());
}

// p(a) = sum B^{xy} e_x . m(lambda(e_y (x) a)); with_curl puts phi on e_y (the map n).
inline Matrix cylinder_map(const CrossingData& X, bool with_curl) {
    const auto& F = *X.frobenius();
    const auto& A = *F.algebra();
    const int n = X.dim();
    Matrix phi = curl_map(X);
    Matrix out(n, n);
    for (int a = 0; a < n; ++a) {
        Vec acc(n);
        for (auto [x, y] : F.B_support()) {
            Vec ey = A.basis(y);
            if (with_curl) ey = phi.apply(ey);
            Vec t = A.mul(A.basis(x), detail::multiply_legs(A, detail::lambda_vec(X, ey, A.basis(a))));
            for (int d = 0; d < n; ++d)
                if (!t[d].is_zero()) acc[d] += F.B_up()(x, y) * t[d];
        }
        for (int d = 0; d < n; ++d) out(d, a) = acc[d];
    }
    return out;
}

inline Matrix projector_p(const CrossingData& X) {
    require_axioms(X);
    return cylinder_map(X, false);
}

inline Matrix projector_n(const CrossingData& X) {
    require_axioms(X);
    return cylinder_map(X, true);
}

// Solution space of b a = m(lambda(f(b) (x) a)) for all b, f = id or phi.
inline std::vector<Vec> twisted_center(const CrossingData& X, bool with_curl) {
    const auto& A = *X.frobenius()->algebra();
    const int n = X.dim();
    Matrix phi = curl_map(X);
    Matrix sys(n * n, n);
    for (int b = 0; b < n; ++b) {
        Vec fb = with_curl ? phi.apply(A.basis(b)) : A.basis(b);
        for (int a = 0; a < n; ++a) {
            Vec lhs = A.mul(A.basis(b), A.basis(a));
            Vec rhs = detail::multiply_legs(A, detail::lambda_vec(X, fb, A.basis(a)));
            for (int d = 0; d < n; ++d) sys(b * n + d, a) = lhs[d] - rhs[d];
        }
    }
    return nullspace(sys);
}

inline std::vector<Vec> z_lambda(const CrossingData& X) { return twisted_center(X, false); }
inline std::vector<Vec> z_lambda_bar(const CrossingData& X) { return twisted_center(X, true); }

// Punctured-torus element with optional curls on the two loops.
inline Vec handle_element(const CrossingData& X, bool curl1, bool curl2) {
    const auto& F = *X.frobenius();
    const auto& A = *F.algebra();
    const int n = X.dim();
    Matrix phi = curl_map(X);
    Vec out(n);
    for (auto [u, v] : F.B_support()) {
        Vec eu = A.basis(u);
        if (curl2) eu = phi.apply(eu);
        for (auto [x, y] : F.B_support()) {
            Vec ex = A.basis(x);
            if (curl1) ex = phi.apply(ex);
            Vec mid = detail::multiply_legs(A, detail::lambda_vec(X, A.basis(y), eu));
            Vec t = A.mul(A.mul(ex, mid), A.basis(v));
            Scalar c = F.B_up()(x, y) * F.B_up()(u, v);
            for (int d = 0; d < n; ++d)
                if (!t[d].is_zero()) out[d] += c * t[d];
        }
    }
    return out;
}

// chi with the curls on the outer legs: phi(u_a) . m(lambda(v_a (x) u_b)) . phi(v_b).
inline Vec chi_outer_legs(const CrossingData& X) {
    const auto& F = *X.frobenius();
    const auto& A = *F.algebra();
    const int n = X.dim();
    Matrix phi = curl_map(X);
    Vec out(n);
    for (auto [u, v] : F.B_support())
        for (auto [x, y] : F.B_support()) {
            Vec mid = detail::multiply_legs(A, detail::lambda_vec(X, A.basis(y), A.basis(u)));
            Vec t = A.mul(A.mul(phi.apply(A.basis(x)), mid), phi.apply(A.basis(v)));
            Scalar c = F.B_up()(x, y) * F.B_up()(u, v);
            for (int d = 0; d < n; ++d)
                if (!t[d].is_zero()) out[d] += c * t[d];
        }
    return out;
}

struct PreferredElements {
    Vec eta, chi;
};

inline PreferredElements eta_chi(const CrossingData& X) {
    require_axioms(X);
    const auto& A = *X.frobenius()->algebra();
    PreferredElements pe{handle_element(X, false, false), handle_element(X, true, true)};
    if (!is_central(A, pe.eta) || !is_central(A, pe.chi)) throw SpinError("eta or chi is not central");
    if (A.mul(pe.eta, pe.eta) != A.mul(pe.chi, pe.chi)) throw SpinError("eta^2 != chi^2");
    return pe;
}

inline Scalar spin_value(const Frobenius& F, const PreferredElements& pe, int g, Parity s) {
    if (g < 0) throw SpinError("genus must be >= 0");
    if (g == 0 && s == Parity::Odd) throw SpinError("the sphere has only the even spin structure");
    const auto& A = *F.algebra();
    if (g == 0) return F.R() * F.eps(A.unit());
    Vec x = s == Parity::Even ? A.pow(pe.eta, g) : A.mul(pe.chi, A.pow(pe.eta, g - 1));
    return F.R() * F.eps(x);
}

inline Scalar spin_invariant(const CrossingData& X, int g, Parity s) {
    return spin_value(*X.frobenius(), eta_chi(X), g, s);
}

// Handle i carries curls (flags[2i], flags[2i+1]) on its two loops.
inline Scalar spin_invariant_from_curls(const CrossingData& X, const std::vector<int>& flags) {
    if (flags.empty() || flags.size() % 2) throw SpinError("curl flags need 2g >= 2 entries");
    require_axioms(X);
    const auto& F = *X.frobenius();
    const auto& A = *F.algebra();
    std::map<std::pair<int, int>, Vec> cache;
    Vec x = A.unit();
    for (std::size_t i = 0; i < flags.size(); i += 2) {
        std::pair<int, int> key{flags[i] & 1, flags[i + 1] & 1};
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, handle_element(X, key.first, key.second)).first;
        x = A.mul(x, it->second);
    }
    return F.R() * F.eps(x);
}

// ---------------------------------------------------------------------------
// Bicharacters on Z_{n1} x ... x Z_{np}

struct Bicharacter {
    std::vector<int> moduli;
    std::vector<std::vector<Scalar>> gen;  // gen[i][j] = value on (r_i, r_j)

    Scalar operator()(const std::vector<int>& h, const std::vector<int>& j) const {
        Scalar s(1);
        for (std::size_t a = 0; a < moduli.size(); ++a)
            for (std::size_t b = 0; b < moduli.size(); ++b) {
                long e = static_cast<long>(h[a]) * j[b];
                if (e == 0 || gen[a][b] == Scalar(1)) continue;
                s *= gen[a][b].pow(e);
            }
        return s;
    }

    // Diagonal of order dividing 2, which lambda o lambda = id forces on h = j.
    bool crossing_admissible() const {
        for (std::size_t i = 0; i < moduli.size(); ++i)
            if (gen[i][i] * gen[i][i] != Scalar(1)) return false;
        return true;
    }

    // Generators whose diagonal value is -1.
    std::vector<int> sign_set() const {
        std::vector<int> I;
        for (std::size_t i = 0; i < moduli.size(); ++i)
            if (gen[i][i] == Scalar(-1)) I.push_back(static_cast<int>(i));
        return I;
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < moduli.size(); ++i) {
            if (i) s += "; ";
            for (std::size_t j = 0; j < moduli.size(); ++j) s += (j ? ", " : "") + gen[i][j].str();
        }
        return s + "]";
    }

    friend bool operator==(const Bicharacter& a, const Bicharacter& b) {
        return a.moduli == b.moduli && a.gen == b.gen;
    }
};

inline Bicharacter trivial_bicharacter(const std::vector<int>& moduli) {
    return Bicharacter{moduli, std::vector<std::vector<Scalar>>(moduli.size(), std::vector<Scalar>(moduli.size(), Scalar(1)))};
}

// Diagonal signs on the generators listed in I, all other generator values 1.
inline Bicharacter sign_bicharacter(const std::vector<int>& moduli, const std::vector<int>& I) {
    Bicharacter b = trivial_bicharacter(moduli);
    for (int i : I) {
        if (i < 0 || i >= static_cast<int>(moduli.size())) throw SpinError("sign generator out of range");
        if (moduli[i] % 2) throw SpinError("sign -1 on a generator of odd order " + std::to_string(moduli[i]));
        b.gen[i][i] = Scalar(-1);
    }
    return b;
}

// E1 checked exhaustively on the group, E2 on generators, E3 for distinct generators.
inline CheckReport verify_bicharacter(const Bicharacter& b) {
    CheckReport rep;
    const std::size_t p = b.moduli.size();
    if (b.gen.size() != p) {
        rep.fail("generator matrix has wrong size");
        return rep;
    }
    for (std::size_t i = 0; i < p; ++i) {
        if (b.gen[i].size() != p) {
            rep.fail("generator matrix has wrong size");
            return rep;
        }
        for (std::size_t j = 0; j < p; ++j) {
            if (b.gen[i][j].pow(b.moduli[i]) != Scalar(1) || b.gen[i][j].pow(b.moduli[j]) != Scalar(1))
                rep.fail("E2 fails at (r" + std::to_string(i + 1) + ",r" + std::to_string(j + 1) + ")");
            if (i != j && b.gen[i][j] * b.gen[j][i] != Scalar(1))
                rep.fail("E3 fails at (r" + std::to_string(i + 1) + ",r" + std::to_string(j + 1) + ")");
        }
    }
    if (!rep.ok()) return rep;
    const int N = group_size(b.moduli);
    Grading G{b.moduli, {}};
    for (int h = 0; h < N; ++h)
        for (int j = 0; j < N; ++j)
            for (int l = 0; l < N; ++l) {
                auto th = decode_tuple(h, b.moduli), tj = decode_tuple(j, b.moduli), tl = decode_tuple(l, b.moduli);
                if (b(th, G.add(tj, tl)) != b(th, tj) * b(th, tl) || b(G.add(th, tj), tl) != b(th, tl) * b(tj, tl)) {
                    rep.fail("E1 multiplicativity fails at " + detail::idx({h, j, l}));
                    return rep;
                }
            }
    return rep;
}

// All generator matrices satisfying E1-E3 (E3 off the diagonal); diagonal entries
// range over the gcd-order roots allowed by E2.
inline std::vector<Bicharacter> bicharacter_enumerate(const std::vector<int>& moduli, int bound = 12) {
    for (int m : moduli)
        if (m < 1 || m > bound) throw SpinError("cyclic factor order outside 1.." + std::to_string(bound));
    const std::size_t p = moduli.size();
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i; j < p; ++j) slots.emplace_back(i, j);
    std::vector<Bicharacter> out;
    Bicharacter cur = trivial_bicharacter(moduli);
    std::function<void(std::size_t)> rec = [&](std::size_t s) {
        if (s == slots.size()) {
            out.push_back(cur);
            return;
        }
        auto [i, j] = slots[s];
        int d = std::gcd(moduli[i], moduli[j]);
        for (int k = 0; k < d; ++k) {
            cur.gen[i][j] = root_of_unity(d, k);
            if (i != j) cur.gen[j][i] = root_of_unity(d, -k);
            rec(s + 1);
        }
    };
    rec(0);
    return out;
}

// lambda(a_h (x) b_j) = bc(h, j) b_j (x) a_h, after D1 and D2.
inline CrossingData bicharacter_crossing(const FrobeniusPtr& F, const Bicharacter& bc) {
    const auto& A = *F->algebra();
    if (!A.grading()) throw SpinError("algebra carries no grading");
    const Grading& G = *A.grading();
    if (G.moduli != bc.moduli) throw SpinError("grading group does not match the bicharacter group");
    if (auto r = verify_bicharacter(bc); !r.ok()) throw SpinError("not a bicharacter: " + r.failures.front());
    if (!bc.crossing_admissible()) throw SpinError("bicharacter diagonal has order > 2; lambda o lambda != id");
    const int n = A.dim();
    const int N = G.order();
    // D1: per grade pair, either orthogonal or bc(h,l) = bc(l,j) for all l.
    std::vector<std::vector<bool>> orth(N, std::vector<bool>(N, true));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (!F->B_low()(a, b).is_zero())
                orth[encode_tuple(G.grade[a], G.moduli)][encode_tuple(G.grade[b], G.moduli)] = false;
    for (int h = 0; h < N; ++h)
        for (int j = 0; j < N; ++j) {
            if (orth[h][j]) continue;
            auto th = decode_tuple(h, G.moduli), tj = decode_tuple(j, G.moduli);
            for (int l = 0; l < N; ++l) {
                auto tl = decode_tuple(l, G.moduli);
                if (bc(th, tl) != bc(tl, tj)) {
                    std::string ph, pj;
                    for (int x : th) ph += std::to_string(x);
                    for (int x : tj) pj += std::to_string(x);
                    throw SpinError("D1 violated: grades " + ph + " and " + pj +
                                    " are not orthogonal and the bicharacter is not balanced on them");
                }
            }
        }
    if (!sigma_involutive(*F)) throw SpinError("D2 violated: Nakayama automorphism has sigma^2 != id");
    std::vector<std::vector<CrossingTerm>> rows(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[i * n + j].push_back({j, i, bc(G.grade[i], G.grade[j])});
    CrossingData X(F, std::move(rows), "bicharacter " + bc.str());
    require_axioms(X);
    return X;
}

// ---------------------------------------------------------------------------
// Crossing search on C Z_n

struct SearchEntry {
    std::string description;
    Vec eta, chi;
    AlgebraPtr algebra;
    std::vector<Scalar> even, odd;  // g = 1..3
    bool distinguishes = false;
};

namespace detail {

inline std::vector<std::vector<int>> integer_partitions(int n, int max_part) {
    if (n == 0) return {{}};
    std::vector<std::vector<int>> out;
    for (int k = std::min(n, max_part); k >= 1; --k)
        for (auto rest : integer_partitions(n - k, k)) {
            rest.insert(rest.begin(), k);
            out.push_back(rest);
        }
    return out;
}

// Non-increasing moduli lists (each >= 2) with product m; {} for m = 1.
inline std::vector<std::vector<int>> moduli_with_product(int m, int max_factor) {
    if (m == 1) return {{}};
    std::vector<std::vector<int>> out;
    for (int f = std::min(m, max_factor); f >= 2; --f) {
        if (m % f) continue;
        for (auto rest : moduli_with_product(m / f, f)) {
            rest.insert(rest.begin(), f);
            out.push_back(rest);
        }
    }
    return out;
}

inline std::string moduli_name(const std::vector<int>& m) {
    if (m.empty()) return "C";
    std::string s = "CZ";
    for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "x" : "") + std::to_string(m[i]);
    return s;
}

inline SearchEntry make_entry(const CrossingData& X, std::string desc) {
    auto pe = eta_chi(X);
    SearchEntry e;
    e.description = std::move(desc);
    e.eta = pe.eta;
    e.chi = pe.chi;
    e.algebra = X.frobenius()->algebra();
    for (int g = 1; g <= 3; ++g) {
        e.even.push_back(spin_value(*X.frobenius(), pe, g, Parity::Even));
        e.odd.push_back(spin_value(*X.frobenius(), pe, g, Parity::Odd));
    }
    e.distinguishes = e.even != e.odd;
    return e;
}

inline std::string invariant_key(const SearchEntry& e) {
    std::string k;
    for (const auto& v : e.even) k += v.str() + ",";
    k += "|";
    for (const auto& v : e.odd) k += v.str() + ",";
    return k;
}

inline std::vector<SearchEntry> dedup(std::vector<SearchEntry> all) {
    std::map<std::string, SearchEntry> best;
    for (auto& e : all) {
        auto key = invariant_key(e);
        auto it = best.find(key);
        if (it == best.end() || e.description.size() < it->second.description.size() ||
            (e.description.size() == it->second.description.size() && e.description < it->second.description))
            best.insert_or_assign(key, std::move(e));
    }
    std::vector<SearchEntry> out;
    for (auto& [k, e] : best) out.push_back(std::move(e));
    std::sort(out.begin(), out.end(), [](const SearchEntry& a, const SearchEntry& b) {
        if (a.distinguishes != b.distinguishes) return !a.distinguishes;
        return invariant_key(a) < invariant_key(b);
    });
    return out;
}

}  // namespace detail

enum class SearchMode { Ansatz, Full };

// Distinct invariant families of crossings on C Z_n, keyed by the (even, odd)
// partition functions for g = 1..3.
inline std::vector<SearchEntry> crossing_search_cyclic(int n, SearchMode mode, const Scalar& R = Scalar(1),
                                                       long cap = 2000000) {
    if (n < 1) throw SpinError("cyclic order must be positive");
    std::vector<SearchEntry> all;
    if (mode == SearchMode::Ansatz) {
        if (n > 12) throw SpinError("ansatz search supports n <= 12");
        long work = 0;
        for (const auto& parts : detail::integer_partitions(n, n)) {
            // one group presentation per part, combined over all choices
            std::vector<std::vector<std::vector<int>>> choices;
            for (int m : parts) choices.push_back(detail::moduli_with_product(m, m));
            std::vector<std::size_t> pick(parts.size(), 0);
            while (true) {
                std::vector<std::vector<int>> groups;
                for (std::size_t i = 0; i < parts.size(); ++i) groups.push_back(choices[i][pick[i]]);
                // bicharacters per summand
                std::vector<std::vector<Bicharacter>> bcs;
                for (const auto& g : groups) {
                    std::vector<Bicharacter> ok;
                    for (auto& b : bicharacter_enumerate(g))
                        if (b.crossing_admissible()) ok.push_back(b);
                    bcs.push_back(ok);
                }
                AlgebraPtr A;
                for (const auto& g : groups) {
                    auto S = abelian_group_algebra(g);
                    A = A ? direct_sum(A, S) : S;
                }
                auto F = frobenius_fhk(A, R);
                std::vector<std::size_t> bp(groups.size(), 0);
                while (true) {
                    if (++work > cap) throw ResourceError("crossing search exceeded its candidate budget");
                    Bicharacter prod;
                    std::string desc;
                    for (std::size_t i = 0; i < groups.size(); ++i) {
                        const auto& b = bcs[i][bp[i]];
                        std::size_t off = prod.moduli.size();
                        prod.moduli.insert(prod.moduli.end(), b.moduli.begin(), b.moduli.end());
                        for (auto& row : prod.gen) row.resize(prod.moduli.size(), Scalar(1));
                        for (std::size_t r = 0; r < b.moduli.size(); ++r) {
                            std::vector<Scalar> row(prod.moduli.size(), Scalar(1));
                            for (std::size_t c = 0; c < b.moduli.size(); ++c) row[off + c] = b.gen[r][c];
                            prod.gen.push_back(row);
                        }
                        desc += (i ? " + " : "") + detail::moduli_name(groups[i]) + (b.moduli.empty() ? "" : b.str());
                    }
                    auto X = bicharacter_crossing(F, prod);
                    all.push_back(detail::make_entry(X, desc));
                    std::size_t k = 0;
                    while (k < bp.size() && ++bp[k] == bcs[k].size()) bp[k++] = 0;
                    if (k == bp.size()) break;
                }
                std::size_t k = 0;
                while (k < pick.size() && ++pick[k] == choices[k].size()) pick[k++] = 0;
                if (k == pick.size()) break;
            }
        }
        return detail::dedup(std::move(all));
    }

    if (n > 2) throw SpinError("full search supports n <= 2");
    auto A = cyclic_group_algebra(n);
    auto F = frobenius_group(A, R);
    const int d = n;
    auto key = [d](int i, int j, int k, int l) { return ((i * d + j) * d + k) * d + l; };
    const int total = d * d * d * d;
    // lambda_{0j}^{kl} = delta_0^l delta_j^k; B1 on C Z_n ties lambda_{ij}^{kl} to lambda_{-k,i}^{l,-j}.
    std::vector<int> parent(total);
    for (int x = 0; x < total; ++x) parent[x] = x;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    auto neg = [d](int x) { return (d - x) % d; };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) parent[find(key(i, j, k, l))] = find(key(neg(k), i, l, neg(j)));
    std::map<int, Scalar> fixed;
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
            for (int l = 0; l < d; ++l) {
                Scalar v(l == 0 && j == k ? 1 : 0);
                int r = find(key(0, j, k, l));
                auto it = fixed.find(r);
                if (it != fixed.end() && it->second != v) return {};  // inconsistent: no crossings
                fixed[r] = v;
            }
    std::vector<int> free;
    for (int x = 0; x < total; ++x)
        if (find(x) == x && !fixed.count(x)) free.push_back(x);
    std::vector<Scalar> values{Scalar(0)};
    for (int k = 0; k < 4; ++k) values.push_back(root_of_unity(4, k));
    long count = 1;
    for (std::size_t i = 0; i < free.size(); ++i) {
        count *= static_cast<long>(values.size());
        if (count > cap) throw ResourceError("full search space exceeds the candidate budget");
    }
    std::vector<std::size_t> pick(free.size(), 0);
    int found = 0;
    while (true) {
        std::map<int, Scalar> val = fixed;
        for (std::size_t i = 0; i < free.size(); ++i) val[free[i]] = values[pick[i]];
        std::vector<std::tuple<int, int, int, int, Scalar>> ent;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k)
                    for (int l = 0; l < d; ++l) {
                        const Scalar& v = val[find(key(i, j, k, l))];
                        if (!v.is_zero()) ent.emplace_back(i, j, k, l, v);
                    }
        CrossingData X = crossing_from_entries(F, ent);
        if (verify_crossing_axioms(X).all_ok()) {
            std::string desc = "solution " + std::to_string(++found) + " {";
            bool first = true;
            for (const auto& [i, j, k, l, v] : ent) {
                if (i == 0) continue;
                desc += (first ? "" : ", ") + std::string("l") + std::to_string(i) + std::to_string(j) + "^" +
                        std::to_string(k) + std::to_string(l) + "=" + v.str();
                first = false;
            }
            all.push_back(detail::make_entry(X, desc + "}"));
        }
        std::size_t k = 0;
        while (k < pick.size() && ++pick[k] == values.size()) pick[k++] = 0;
        if (k == pick.size()) break;
    }
    return detail::dedup(std::move(all));
}

// ---------------------------------------------------------------------------
// Non-abelian group algebras

struct NonAbelianResult {
    Scalar closed_form;  // closed-form sum over Inn(H) irreps
    Scalar direct;       // eta/chi contraction on CH
    bool agrees = false;
};

// Crossing on CH from signs on Z_2 quotients of the abelianization: I_size of
// the even cyclic factors of H/[H,H] get diagonal value -1.
inline CrossingData group_sign_crossing(const Group& H, int I_size, const Scalar& R) {
    auto Hc = commutator_subgroup(H);
    Group Ab = quotient_group(H, Hc);
    auto dec = decompose_abelian(Ab);
    std::vector<int> even;
    for (std::size_t i = 0; i < dec.moduli.size(); ++i)
        if (dec.moduli[i] % 2 == 0) even.push_back(static_cast<int>(i));
    if (I_size < 0 || I_size > static_cast<int>(even.size()))
        throw SpinError("abelianization has only " + std::to_string(even.size()) + " even cyclic factors");
    // coset of each element
    std::vector<int> coset(H.order(), -1);
    {
        std::vector<int> rep;
        for (int a = 0; a < H.order(); ++a) {
            if (coset[a] >= 0) continue;
            for (int n : Hc) coset[H.mul(a, n)] = static_cast<int>(rep.size());
            rep.push_back(a);
        }
    }
    auto A = group_algebra(H);
    auto F = frobenius_group(A, R);
    const int n = H.order();
    std::vector<std::vector<CrossingTerm>> rows(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto& ti = dec.grade[coset[i]];
            const auto& tj = dec.grade[coset[j]];
            int e = 0;
            for (int q = 0; q < I_size; ++q) e += ti[even[q]] * tj[even[q]];
            rows[i * n + j].push_back({j, i, Scalar(e % 2 ? -1 : 1)});
        }
    return CrossingData(F, std::move(rows), "sign crossing |I|=" + std::to_string(I_size));
}

// Closed form from the center decomposition Z(H) = Z_{n1} x ... with |I| sign generators.
inline Scalar non_abelian_closed_form(const Group& H, int I_size, int g, Parity s, const Scalar& R) {
    if (g < 1) throw SpinError("genus must be >= 1");
    auto Zc = H.center();
    std::vector<std::vector<int>> zt(Zc.size(), std::vector<int>(Zc.size()));
    std::map<int, int> pos;
    for (std::size_t i = 0; i < Zc.size(); ++i) pos[Zc[i]] = static_cast<int>(i);
    int zunit = pos.at(H.unit());
    for (std::size_t i = 0; i < Zc.size(); ++i)
        for (std::size_t j = 0; j < Zc.size(); ++j) zt[i][j] = pos.at(H.mul(Zc[i], Zc[j]));
    auto dec = decompose_abelian(Group(zt, zunit));
    std::vector<int> even;
    for (std::size_t i = 0; i < dec.moduli.size(); ++i)
        if (dec.moduli[i] % 2 == 0) even.push_back(static_cast<int>(i));
    if (I_size < 0 || I_size > static_cast<int>(even.size()))
        throw SpinError("inconsistent center decomposition: only " + std::to_string(even.size()) +
                        " even cyclic factors in Z(H)");
    long NI = 1;
    for (std::size_t i = 0; i < dec.moduli.size(); ++i) {
        bool inI = false;
        for (int q = 0; q < I_size; ++q) inI |= even[q] == static_cast<int>(i);
        if (!inI) NI *= dec.moduli[i];
    }
    Group Inn = quotient_group(H, Zc);
    auto dims = irrep_dimensions(Inn);
    const Scalar h(H.order()), z(static_cast<long>(Zc.size()));
    const Scalar dHI = Scalar(NI) * Scalar(Inn.order()).inverse();
    const Scalar sign = (s == Parity::Odd && I_size % 2) ? Scalar(-1) : Scalar(1);
    Scalar sum;
    for (int dj : dims) {
        Scalar inv2 = Scalar(dj * dj).inverse();
        Scalar base = dHI + Scalar(2) + inv2;
        Scalar f = s == Parity::Even ? base : sign * dHI + inv2;
        sum += base.pow(g - 1) * Scalar(dj * dj) * f;
    }
    return R.pow(2 - 2 * g) * h.pow(-g) * z.pow(1 - g) * sum;
}

inline NonAbelianResult non_abelian_group_invariant(const Group& H, int I_size, int g, Parity s, const Scalar& R) {
    NonAbelianResult r;
    r.closed_form = non_abelian_closed_form(H, I_size, g, s, R);
    if (H.order() <= 12) {
        r.direct = spin_invariant(group_sign_crossing(H, I_size, R), g, s);
        r.agrees = r.direct == r.closed_form;
    }
    return r;
}

}  // namespace statesum
