/**
 * @file groups.hpp
 * @brief Finite groups as Cayley tables, plus the abelian decomposition used
 * to grade commutative group algebras.
 */

#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace statesum {

struct InvalidGroup : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class Group {
public:
    Group(std::vector<std::vector<int>> table, int unit) : t_(std::move(table)), e_(unit) { validate(); }

    int order() const { return static_cast<int>(t_.size()); }
    int unit() const { return e_; }
    int mul(int a, int b) const { return t_[a][b]; }
    int inv(int a) const { return inv_[a]; }
    const std::vector<std::vector<int>>& table() const { return t_; }

    int element_order(int a) const {
        int k = 1;
        for (int x = a; x != e_; x = mul(x, a)) ++k;
        return k;
    }

    int power(int a, long k) const {
        int n = element_order(a);
        k = ((k % n) + n) % n;
        int r = e_;
        for (long i = 0; i < k; ++i) r = mul(r, a);
        return r;
    }

    bool is_abelian() const {
        for (int a = 0; a < order(); ++a)
            for (int b = 0; b < a; ++b)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    }

    std::vector<int> center() const {
        std::vector<int> z;
        for (int a = 0; a < order(); ++a) {
            bool c = true;
            for (int b = 0; b < order() && c; ++b) c = mul(a, b) == mul(b, a);
            if (c) z.push_back(a);
        }
        return z;
    }

    int conjugacy_class_count() const {
        std::vector<bool> seen(order(), false);
        int k = 0;
        for (int a = 0; a < order(); ++a) {
            if (seen[a]) continue;
            ++k;
            for (int g = 0; g < order(); ++g) seen[mul(mul(g, a), inv(g))] = true;
        }
        return k;
    }

    // Number of tuples (a1,b1,...,ag,bg) with prod [ai,bi] = 1.
    long long commutator_solutions(int g) const {
        const int n = order();
        std::vector<long long> count(n, 0);
        count[e_] = 1;
        std::vector<long long> comm(n, 0);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) ++comm[mul(mul(a, b), mul(inv(a), inv(b)))];
        for (int h = 0; h < g; ++h) {
            std::vector<long long> next(n, 0);
            for (int x = 0; x < n; ++x) {
                if (!count[x]) continue;
                for (int c = 0; c < n; ++c)
                    if (comm[c]) next[mul(x, c)] += count[x] * comm[c];
            }
            count = std::move(next);
        }
        return count[e_];
    }

private:
    void validate() {
        const int n = static_cast<int>(t_.size());
        if (n == 0) throw InvalidGroup("empty Cayley table");
        if (e_ < 0 || e_ >= n) throw InvalidGroup("unit index out of range");
        for (int a = 0; a < n; ++a) {
            if (static_cast<int>(t_[a].size()) != n) throw InvalidGroup("Cayley table is not square");
            std::vector<bool> row(n, false), col(n, false);
            for (int b = 0; b < n; ++b) {
                int x = t_[a][b], y = t_[b][a];
                if (x < 0 || x >= n || y < 0 || y >= n) throw InvalidGroup("table entry out of range");
                if (row[x]) throw InvalidGroup("row " + std::to_string(a) + " is not a permutation");
                if (col[y]) throw InvalidGroup("column " + std::to_string(a) + " is not a permutation");
                row[x] = col[y] = true;
            }
            if (t_[e_][a] != a || t_[a][e_] != a) throw InvalidGroup("unit row/column is not trivial");
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (t_[t_[a][b]][c] != t_[a][t_[b][c]])
                        throw InvalidGroup("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) +
                                           "," + std::to_string(c) + ")");
        inv_.assign(n, -1);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (t_[a][b] == e_) inv_[a] = b;
    }

    std::vector<std::vector<int>> t_;
    int e_;
    std::vector<int> inv_;
};

inline Group cyclic_group(int m) {
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) t[a][b] = (a + b) % m;
    return Group(t, 0);
}

// Z_{n1} x ... x Z_{np}, elements in lexicographic order (first factor slowest).
inline std::vector<int> decode_tuple(int idx, const std::vector<int>& moduli) {
    std::vector<int> t(moduli.size());
    for (std::size_t i = moduli.size(); i-- > 0;) {
        t[i] = idx % moduli[i];
        idx /= moduli[i];
    }
    return t;
}

inline int encode_tuple(const std::vector<int>& t, const std::vector<int>& moduli) {
    int idx = 0;
    for (std::size_t i = 0; i < moduli.size(); ++i) idx = idx * moduli[i] + ((t[i] % moduli[i]) + moduli[i]) % moduli[i];
    return idx;
}

inline int group_size(const std::vector<int>& moduli) {
    int n = 1;
    for (int m : moduli) n *= m;
    return n;
}

inline Group abelian_group(const std::vector<int>& moduli) {
    int n = group_size(moduli);
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
        auto ta = decode_tuple(a, moduli);
        for (int b = 0; b < n; ++b) {
            auto tb = decode_tuple(b, moduli);
            for (std::size_t i = 0; i < moduli.size(); ++i) tb[i] += ta[i];
            t[a][b] = encode_tuple(tb, moduli);
        }
    }
    return Group(t, 0);
}

// Symmetric group on k points; elements are permutations in lexicographic order,
// product (p q)(i) = p(q(i)).
inline std::vector<std::vector<int>> permutations(int k) {
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> all;
    do all.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return all;
}

inline Group symmetric_group(int k) {
    auto all = permutations(k);
    const int n = static_cast<int>(all.size());
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<int> c(k);
            for (int i = 0; i < k; ++i) c[i] = all[a][all[b][i]];
            t[a][b] = static_cast<int>(std::find(all.begin(), all.end(), c) - all.begin());
        }
    return Group(t, 0);
}

// Dihedral group of order 2m: r^a s^b at index a + m b.
inline Group dihedral_group(int m) {
    const int n = 2 * m;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int a1 = x % m, b1 = x / m, a2 = y % m, b2 = y / m;
            // r^a1 s^b1 r^a2 s^b2 = r^{a1 + (-1)^b1 a2} s^{b1+b2}
            int a = ((a1 + (b1 ? -a2 : a2)) % m + m) % m;
            t[x][y] = a + m * ((b1 + b2) % 2);
        }
    return Group(t, 0);
}

// Quaternion group {±1, ±i, ±j, ±k}: index = 4*sign + unit with units 1,i,j,k.
inline Group quaternion_group() {
    // unit products: (sign, unit)
    static const int u[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int s[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            int sx = x / 4, ux = x % 4, sy = y / 4, uy = y % 4;
            t[x][y] = 4 * ((sx + sy + s[ux][uy]) % 2) + u[ux][uy];
        }
    return Group(t, 0);
}

struct AbelianDecomposition {
    std::vector<int> moduli;               // orders of the chosen generators
    std::vector<int> generators;           // group element per factor
    std::vector<std::vector<int>> grade;   // element -> exponent tuple
};

namespace detail {

inline std::optional<AbelianDecomposition> finish_decomposition(const Group& G, const std::vector<int>& gens) {
    AbelianDecomposition d;
    d.generators = gens;
    for (int g : gens) d.moduli.push_back(G.element_order(g));
    if (group_size(d.moduli) != G.order()) return std::nullopt;
    d.grade.assign(G.order(), {});
    for (int idx = 0; idx < G.order(); ++idx) {
        auto tup = decode_tuple(idx, d.moduli);
        int x = G.unit();
        for (std::size_t i = 0; i < gens.size(); ++i) x = G.mul(x, G.power(gens[i], tup[i]));
        if (!d.grade[x].empty()) return std::nullopt;
        d.grade[x] = tup;
    }
    return d;
}

inline std::set<int> generated(const Group& G, const std::vector<int>& gens) {
    std::set<int> s{G.unit()};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(s.begin(), s.end());
        for (int x : cur)
            for (int g : gens) grew |= s.insert(G.mul(x, g)).second;
    }
    return s;
}

}  // namespace detail

// Cyclic decomposition of an abelian group. Greedy max-order choice first,
// exhaustive generator search otherwise.
inline AbelianDecomposition decompose_abelian(const Group& G) {
    if (!G.is_abelian()) throw InvalidGroup("group is not abelian");
    if (G.order() == 1) {
        AbelianDecomposition d;
        d.grade.assign(1, {});
        return d;
    }
    {
        std::vector<int> gens;
        std::set<int> S{G.unit()};
        while (static_cast<int>(S.size()) < G.order()) {
            int best = -1, best_ord = 0;
            for (int a = 0; a < G.order(); ++a) {
                if (S.count(a)) continue;
                auto cyc = detail::generated(G, {a});
                bool trivial = true;
                for (int x : cyc)
                    if (x != G.unit() && S.count(x)) trivial = false;
                int o = G.element_order(a);
                if (trivial && o > best_ord) best = a, best_ord = o;
            }
            if (best < 0) break;
            gens.push_back(best);
            S = detail::generated(G, gens);
        }
        if (auto d = detail::finish_decomposition(G, gens)) return *d;
    }
    // exhaustive route: generators with non-increasing orders whose product is |G|
    std::vector<int> gens;
    std::optional<AbelianDecomposition> found;
    std::function<void(int, int)> dfs = [&](int prod, int max_ord) {
        if (found) return;
        if (prod == G.order()) {
            found = detail::finish_decomposition(G, gens);
            return;
        }
        for (int a = 0; a < G.order() && !found; ++a) {
            int o = G.element_order(a);
            if (o < 2 || o > max_ord || (G.order() % (prod * o)) != 0) continue;
            gens.push_back(a);
            dfs(prod * o, o);
            gens.pop_back();
        }
    };
    dfs(1, G.order());
    if (found) return *found;
    throw InvalidGroup("abelian decomposition failed");
}

// Subgroup generated by all commutators.
inline std::vector<int> commutator_subgroup(const Group& G) {
    std::vector<int> comms;
    for (int a = 0; a < G.order(); ++a)
        for (int b = 0; b < G.order(); ++b) comms.push_back(G.mul(G.mul(a, b), G.mul(G.inv(a), G.inv(b))));
    auto s = detail::generated(G, comms);
    return {s.begin(), s.end()};
}

// G/N for a normal subgroup N; cosets ordered by smallest representative.
inline Group quotient_group(const Group& G, const std::vector<int>& N) {
    std::vector<int> coset(G.order(), -1);
    std::vector<int> rep;
    for (int a = 0; a < G.order(); ++a) {
        if (coset[a] >= 0) continue;
        int id = static_cast<int>(rep.size());
        rep.push_back(a);
        for (int n : N) coset[G.mul(a, n)] = id;
    }
    for (int a = 0; a < G.order(); ++a)
        for (int n : N)
            if (coset[G.mul(G.mul(G.inv(a), n), a)] != coset[G.unit()]) throw InvalidGroup("subgroup is not normal");
    const int k = static_cast<int>(rep.size());
    std::vector<std::vector<int>> t(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) t[i][j] = coset[G.mul(rep[i], rep[j])];
    return Group(t, coset[G.unit()]);
}

// Irreducible dimensions from class count, abelianization size and sum of squares.
// Throws when these constraints leave more than one multiset.
inline std::vector<int> irrep_dimensions(const Group& G) {
    const int n = G.order();
    const int classes = G.conjugacy_class_count();
    const int linear = n / static_cast<int>(commutator_subgroup(G).size());
    std::vector<int> cand;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) cand.push_back(d);
    std::vector<std::vector<int>> sols;
    std::vector<int> cur;
    std::function<void(std::size_t, int, int)> dfs = [&](std::size_t i, int left, int rem) {
        if (left == 0) {
            if (rem == 0) sols.push_back(cur);
            return;
        }
        if (i == cand.size() || rem <= 0) return;
        int d = cand[i];
        for (int c = 0; c <= left && c * d * d <= rem; ++c) {
            for (int r = 0; r < c; ++r) cur.push_back(d);
            dfs(i + 1, left - c, rem - c * d * d);
            for (int r = 0; r < c; ++r) cur.pop_back();
        }
    };
    dfs(0, classes - linear, n - linear);
    if (sols.size() != 1) throw InvalidGroup("irreducible dimensions not determined by class data");
    std::vector<int> dims(linear, 1);
    dims.insert(dims.end(), sols[0].begin(), sols[0].end());
    return dims;
}

}  // namespace statesum
