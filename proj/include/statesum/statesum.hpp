/**
 * @file statesum.hpp
 * @brief Partition functions of triangulated surfaces by sparse tensor
 * contraction, a naive state-sum oracle, and tensor-level move checks.
 */

#pragma once

#include "frobenius.hpp"
#include "triangulation.hpp"

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace statesum {

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EvaluationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline constexpr long long kDefaultCap = 100'000'000;

// STATESUM_CAP overrides the multiplication budget.
inline long long default_cap() {
    if (const char* s = std::getenv("STATESUM_CAP")) {
        try {
            long long v = std::stoll(s);
            if (v > 0) return v;
        } catch (...) {
        }
    }
    return kDefaultCap;
}

struct EvalOptions {
    long long cap = default_cap();
    bool require_special = true;
};

struct EvaluationReport {
    Scalar value;  // closed surfaces; boundary tensor otherwise
    std::vector<std::string> contraction_order;
    int V = 0, E = 0, T = 0;
    std::vector<int> boundary_legs;                  // half-edge ids, ascending
    std::map<std::vector<int>, Scalar> boundary;     // state tuple -> amplitude
    long long multiplications = 0;
};

namespace detail {

struct Tensor {
    std::vector<int> legs;
    std::unordered_map<std::uint64_t, Scalar> data;
    std::string name;
};

struct Packer {
    int bits = 1;
    std::uint64_t mask = 1;
    explicit Packer(int dim) {
        while ((1 << bits) < dim) ++bits;
        mask = (std::uint64_t{1} << bits) - 1;
    }
    int get(std::uint64_t k, int pos) const { return static_cast<int>((k >> (bits * pos)) & mask); }
    std::uint64_t put(int pos, int v) const { return static_cast<std::uint64_t>(v) << (bits * pos); }
    int max_legs() const { return 64 / bits; }
};

inline Tensor contract(const Tensor& A, const Tensor& B, const Packer& pk, long long& mults, long long cap) {
    std::vector<int> sa, sb, fa, fb;  // shared positions in A/B, free positions
    for (std::size_t i = 0; i < A.legs.size(); ++i) {
        auto it = std::find(B.legs.begin(), B.legs.end(), A.legs[i]);
        if (it != B.legs.end()) {
            sa.push_back(static_cast<int>(i));
            sb.push_back(static_cast<int>(it - B.legs.begin()));
        } else {
            fa.push_back(static_cast<int>(i));
        }
    }
    for (std::size_t j = 0; j < B.legs.size(); ++j)
        if (std::find(sb.begin(), sb.end(), static_cast<int>(j)) == sb.end()) fb.push_back(static_cast<int>(j));
    Tensor out;
    for (int i : fa) out.legs.push_back(A.legs[i]);
    for (int j : fb) out.legs.push_back(B.legs[j]);
    if (static_cast<int>(out.legs.size()) > pk.max_legs())
        throw ResourceError("intermediate tensor rank " + std::to_string(out.legs.size()) + " exceeds key width");
    std::unordered_map<std::uint64_t, std::vector<std::pair<std::uint64_t, const Scalar*>>> index;
    for (const auto& [k, v] : B.data) {
        std::uint64_t sk = 0, fk = 0;
        for (std::size_t i = 0; i < sb.size(); ++i) sk |= pk.put(static_cast<int>(i), pk.get(k, sb[i]));
        for (std::size_t i = 0; i < fb.size(); ++i) fk |= pk.put(static_cast<int>(fa.size() + i), pk.get(k, fb[i]));
        index[sk].push_back({fk, &v});
    }
    for (const auto& [k, v] : A.data) {
        std::uint64_t sk = 0, ak = 0;
        for (std::size_t i = 0; i < sa.size(); ++i) sk |= pk.put(static_cast<int>(i), pk.get(k, sa[i]));
        auto it = index.find(sk);
        if (it == index.end()) continue;
        for (std::size_t i = 0; i < fa.size(); ++i) ak |= pk.put(static_cast<int>(i), pk.get(k, fa[i]));
        for (const auto& [fk, pv] : it->second) {
            if (++mults > cap)
                throw ResourceError("multiplication budget of " + std::to_string(cap) + " exceeded");
            out.data[ak | fk] += v * *pv;
        }
    }
    for (auto it = out.data.begin(); it != out.data.end();)
        it = it->second.is_zero() ? out.data.erase(it) : std::next(it);
    return out;
}

inline int shared_legs(const Tensor& A, const Tensor& B) {
    int s = 0;
    for (int l : A.legs) s += std::find(B.legs.begin(), B.legs.end(), l) != B.legs.end();
    return s;
}

inline const Matrix& edge_matrix(const Triangulation& T, int h, const Frobenius& F, const Matrix* S) {
    if (T.flag(h) == Glue::Same) return F.B_up();
    if (!S) throw EvaluationError("triangulation has opposite-orientation gluings but no S matrix was supplied");
    return *S;
}

inline Scalar triangle_amp(const Frobenius& F, bool positive, int x0, int x1, int x2) {
    return positive ? F.C(x0, x1, x2) : F.C(x0, x2, x1);
}

inline void check_inputs(const Triangulation& T, const Frobenius& F, const Matrix* S, const EvalOptions& opt) {
    if (opt.require_special) F.require_special();
    if (S && (S->rows() != F.dim() || S->cols() != F.dim())) throw EvaluationError("S matrix has wrong shape");
    for (const auto& g : T.gluings())
        if (g.flag == Glue::Opp && !S)
            throw EvaluationError("triangulation has opposite-orientation gluings but no S matrix was supplied");
}

}  // namespace detail

// Z = R^V sum over states of prod C(t) prod B-or-S(e); greedy pairwise contraction.
inline EvaluationReport evaluate(const Triangulation& T, const Frobenius& F, const Matrix* S = nullptr,
                                 const EvalOptions& opt = {}) {
    detail::check_inputs(T, F, S, opt);
    const int n = F.dim();
    detail::Packer pk(n);
    std::vector<detail::Tensor> net;
    // Bond ids: half-edge h joins triangle leg h with one leg of its edge tensor.
    for (int t = 0; t < T.triangles(); ++t) {
        detail::Tensor tt;
        tt.legs = {3 * t, 3 * t + 1, 3 * t + 2};
        tt.name = "t" + std::to_string(t);
        for (const auto& [a, b, c] : F.C_support()) {
            // positive: legs (x0,x1,x2) = (a,b,c); negative: C(x0,x2,x1) = C(a,b,c) -> x1 = c, x2 = b
            int x0 = a, x1 = T.positive(t) ? b : c, x2 = T.positive(t) ? c : b;
            tt.data[pk.put(0, x0) | pk.put(1, x1) | pk.put(2, x2)] = F.C(a, b, c);
        }
        net.push_back(std::move(tt));
    }
    for (const auto& g : T.gluings()) {
        int h1 = 3 * g.t1 + g.s1, h2 = 3 * g.t2 + g.s2;
        const Matrix& M = detail::edge_matrix(T, h1, F, S);
        detail::Tensor e;
        e.legs = {h1, h2};
        e.name = "e" + std::to_string(h1) + "-" + std::to_string(h2);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (!M(x, y).is_zero()) e.data[pk.put(0, x) | pk.put(1, y)] = M(x, y);
        net.push_back(std::move(e));
    }
    EvaluationReport rep;
    rep.V = T.count_vertices();
    rep.E = T.count_edges();
    rep.T = T.triangles();
    while (net.size() > 1) {
        std::size_t bi = 0, bj = 1;
        long long best_rank = -1;
        double best_cost = 0;
        bool best_shared = false;
        for (std::size_t i = 0; i < net.size(); ++i)
            for (std::size_t j = i + 1; j < net.size(); ++j) {
                int s = detail::shared_legs(net[i], net[j]);
                long long r = static_cast<long long>(net[i].legs.size() + net[j].legs.size()) - 2 * s;
                double cost = static_cast<double>(net[i].data.size()) * static_cast<double>(net[j].data.size());
                bool better = best_rank < 0 || (s > 0 && !best_shared) ||
                              ((s > 0) == best_shared && (r < best_rank || (r == best_rank && cost < best_cost)));
                if (better) bi = i, bj = j, best_rank = r, best_cost = cost, best_shared = s > 0;
            }
        detail::Tensor c = detail::contract(net[bi], net[bj], pk, rep.multiplications, opt.cap);
        c.name = "(" + net[bi].name + "*" + net[bj].name + ")";
        rep.contraction_order.push_back(net[bi].name + " * " + net[bj].name + " -> rank " + std::to_string(c.legs.size()) +
                                        ", nnz " + std::to_string(c.data.size()));
        net.erase(net.begin() + static_cast<long>(bj));
        net[bi] = std::move(c);
    }
    Scalar pref = F.R().pow(rep.V);
    const detail::Tensor& fin = net.front();
    if (fin.legs.empty()) {
        auto it = fin.data.find(0);
        rep.value = it == fin.data.end() ? Scalar() : it->second * pref;
        return rep;
    }
    std::vector<int> order(fin.legs.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return fin.legs[a] < fin.legs[b]; });
    for (int p : order) rep.boundary_legs.push_back(fin.legs[p]);
    for (const auto& [k, v] : fin.data) {
        std::vector<int> st;
        for (int p : order) st.push_back(pk.get(k, p));
        rep.boundary[st] = v * pref;
    }
    return rep;
}

inline EvaluationReport evaluate(const Triangulation& T, const Frobenius& F, const Matrix& S, const EvalOptions& opt = {}) {
    return evaluate(T, F, &S, opt);
}

// Exhaustive sum over edge states (closed surfaces only), zero-pruned.
inline Scalar evaluate_naive(const Triangulation& T, const Frobenius& F, const Matrix* S = nullptr,
                             long long state_cap = 1'000'000) {
    detail::check_inputs(T, F, S, {});
    if (!T.boundary().empty()) throw EvaluationError("naive evaluation needs a closed surface");
    const int n = F.dim();
    auto gl = T.gluings();
    double space = 1;
    for (std::size_t i = 0; i < gl.size(); ++i) space *= n;
    if (space > static_cast<double>(state_cap))
        throw ResourceError("naive state space dim^E exceeds " + std::to_string(state_cap));
    std::vector<std::vector<std::array<int, 2>>> support(gl.size());
    std::vector<const Matrix*> mats(gl.size());
    for (std::size_t e = 0; e < gl.size(); ++e) {
        int h1 = 3 * gl[e].t1 + gl[e].s1;
        mats[e] = &detail::edge_matrix(T, h1, F, S);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (!(*mats[e])(x, y).is_zero()) support[e].push_back({x, y});
    }
    // Triangles become complete after the edge with the largest index touching them.
    std::vector<std::vector<int>> closes(gl.size());
    for (int t = 0; t < T.triangles(); ++t) {
        int last = -1;
        for (std::size_t e = 0; e < gl.size(); ++e)
            if (gl[e].t1 == t || gl[e].t2 == t) last = static_cast<int>(e);
        if (last >= 0) closes[last].push_back(t);
    }
    std::vector<int> state(3 * T.triangles(), -1);
    Scalar total;
    std::function<void(std::size_t, const Scalar&)> rec = [&](std::size_t e, const Scalar& acc) {
        if (e == gl.size()) {
            total += acc;
            return;
        }
        int h1 = 3 * gl[e].t1 + gl[e].s1, h2 = 3 * gl[e].t2 + gl[e].s2;
        for (auto [x, y] : support[e]) {
            state[h1] = x;
            state[h2] = y;
            Scalar a = acc * (*mats[e])(x, y);
            for (int t : closes[e]) {
                if (a.is_zero()) break;
                a *= detail::triangle_amp(F, T.positive(t), state[3 * t], state[3 * t + 1], state[3 * t + 2]);
            }
            if (!a.is_zero()) rec(e + 1, a);
        }
        state[h1] = state[h2] = -1;
    };
    rec(0, Scalar(1));
    return total * F.R().pow(T.count_vertices());
}

// C_ab^e = sum_f C_abf B^fe
inline std::vector<Scalar> raised_C(const Frobenius& F) {
    const int n = F.dim();
    std::vector<Scalar> out(static_cast<std::size_t>(n) * n * n);
    for (const auto& [a, b, f] : F.C_support())
        for (int e = 0; e < n; ++e)
            if (!F.B_up()(f, e).is_zero()) out[(static_cast<std::size_t>(a) * n + b) * n + e] += F.C(a, b, f) * F.B_up()(f, e);
    return out;
}

struct PachnerReport {
    CheckReport moves22, moves13;
    bool ok() const { return moves22.ok() && moves13.ok(); }
};

// 2-2: C_ab^e C_ecd = C_bc^e C_aed. 1-3: subdivided disk vs C_abc through the engine.
inline PachnerReport verify_pachner(const Frobenius& F, std::size_t max_listed = 20) {
    PachnerReport rep;
    const int n = F.dim();
    auto Cu = raised_C(F);
    auto cu = [&](int a, int b, int e) -> const Scalar& { return Cu[(static_cast<std::size_t>(a) * n + b) * n + e]; };
    std::size_t fails = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    Scalar l, r;
                    for (int e = 0; e < n; ++e) {
                        if (!cu(a, b, e).is_zero() && !F.C(e, c, d).is_zero()) l += cu(a, b, e) * F.C(e, c, d);
                        if (!cu(b, c, e).is_zero() && !F.C(a, e, d).is_zero()) r += cu(b, c, e) * F.C(a, e, d);
                    }
                    if (l != r && fails++ < max_listed)
                        rep.moves22.fail("2-2 at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                                         "," + std::to_string(d) + "): " + l.str() + " vs " + r.str());
                }
    if (fails > max_listed) rep.moves22.fail("2-2: " + std::to_string(fails - max_listed) + " further tuples fail");
    EvalOptions opt;
    opt.require_special = false;
    auto disk = evaluate(pachner_13(single_triangle(), 0), F, nullptr, opt);
    // boundary half-edges 0, 3, 6 carry the original sides 0, 1, 2
    fails = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                auto it = disk.boundary.find({a, b, c});
                Scalar z = it == disk.boundary.end() ? Scalar() : it->second;
                if (z != F.C(a, b, c) && fails++ < max_listed)
                    rep.moves13.fail("1-3 at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                                     "): Z_disk = " + z.str() + ", C = " + F.C(a, b, c).str());
            }
    if (fails > max_listed) rep.moves13.fail("1-3: " + std::to_string(fails - max_listed) + " further tuples fail");
    return rep;
}

struct UnorientedReport {
    CheckReport antihom, involutive, symmetric, eps_invariant;
    bool ok() const { return antihom.ok() && involutive.ok() && symmetric.ok() && eps_invariant.ok(); }
};

// star map S_a^b = B_ac S^cb
inline Matrix star_matrix(const Frobenius& F, const Matrix& S) { return F.B_low() * S; }

inline UnorientedReport verify_unoriented_moves(const Frobenius& F, const Matrix& S) {
    UnorientedReport rep;
    const int n = F.dim();
    if (S.rows() != n || S.cols() != n) {
        rep.symmetric.fail("S has wrong shape");
        return rep;
    }
    Matrix st = star_matrix(F, S);
    auto Cu = raised_C(F);
    auto cu = [&](int a, int b, int e) -> const Scalar& { return Cu[(static_cast<std::size_t>(a) * n + b) * n + e]; };
    // S_g^g' S_h^h' C_g'h'^k = C_hg^k' S_k'^k
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k) {
                Scalar l, r;
                for (int gp = 0; gp < n; ++gp) {
                    if (st(g, gp).is_zero()) continue;
                    for (int hp = 0; hp < n; ++hp)
                        if (!st(h, hp).is_zero() && !cu(gp, hp, k).is_zero()) l += st(g, gp) * st(h, hp) * cu(gp, hp, k);
                }
                for (int kp = 0; kp < n; ++kp)
                    if (!cu(h, g, kp).is_zero() && !st(kp, k).is_zero()) r += cu(h, g, kp) * st(kp, k);
                if (l != r) {
                    rep.antihom.fail("anti-homomorphism at (" + std::to_string(g) + "," + std::to_string(h) + "," +
                                     std::to_string(k) + ")");
                    if (rep.antihom.failures.size() > 20) goto done_antihom;
                }
            }
done_antihom:
    if (st * st != Matrix::identity(n)) rep.involutive.fail("** != id");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < a; ++b)
            if (S(a, b) != S(b, a)) rep.symmetric.fail("S not symmetric at (" + std::to_string(a) + "," + std::to_string(b) + ")");
    for (int a = 0; a < n; ++a) {
        Scalar s;
        for (int b = 0; b < n; ++b) s += st(a, b) * F.epsilon()[b];
        if (s != F.epsilon()[a]) rep.eps_invariant.fail("eps(e_a*) != eps(e_a) at " + std::to_string(a));
    }
    return rep;
}

}  // namespace statesum
