/**
 * @file algebra.hpp
 * @brief Finite-dimensional associative algebras given by structure constants.
 *
 * e_a e_b = sum_d c[a][b][d] e_d. Constructed algebras also carry block
 * metadata (division ring, matrix size, trace covector) that the Frobenius
 * and involution layers use in place of an explicit matrix representation.
 */

#pragma once

#include "groups.hpp"
#include "linalg.hpp"
#include "scalar.hpp"

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace statesum {

struct AlgebraError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Ring { R, C_R, H_R, C };

inline std::string ring_name(Ring r) {
    switch (r) {
        case Ring::R: return "R";
        case Ring::C_R: return "C_R";
        case Ring::H_R: return "H_R";
        case Ring::C: return "C";
    }
    return "?";
}

inline Ring parse_ring(const std::string& s) {
    if (s == "R") return Ring::R;
    if (s == "C_R") return Ring::C_R;
    if (s == "H_R") return Ring::H_R;
    if (s == "C") return Ring::C;
    throw AlgebraError("unknown ring '" + s + "' (expected R, C_R, H_R or C)");
}

inline int ring_dim(Ring r) { return r == Ring::C_R ? 2 : r == Ring::H_R ? 4 : 1; }

// Grading by Z_{n1} x ... x Z_{np}; an empty moduli list is the trivial group.
struct Grading {
    std::vector<int> moduli;
    std::vector<std::vector<int>> grade;  // per basis element

    int order() const { return group_size(moduli); }
    std::vector<int> add(const std::vector<int>& a, const std::vector<int>& b) const {
        std::vector<int> r(moduli.size());
        for (std::size_t i = 0; i < moduli.size(); ++i) r[i] = (a[i] + b[i]) % moduli[i];
        return r;
    }
    std::vector<int> neg(const std::vector<int>& a) const {
        std::vector<int> r(moduli.size());
        for (std::size_t i = 0; i < moduli.size(); ++i) r[i] = (moduli[i] - a[i]) % moduli[i];
        return r;
    }
    std::vector<int> zero() const { return std::vector<int>(moduli.size(), 0); }
};

enum class BlockKind { Matrix, Group };

// One Wedderburn block of a constructed algebra.
struct Block {
    BlockKind kind = BlockKind::Matrix;
    Ring ring = Ring::R;
    int n = 1;         // matrix size, or group order
    int offset = 0;    // first basis index
    int size = 0;      // number of basis elements
    Vec trace;         // Tr (ring C), Re Tr (real rings) or regular trace (group), full-length
    Scalar fhk_weight; // epsilon = R * sum_i fhk_weight_i * trace_i
    // Matrix blocks over R or C: n x n matrix per local basis element.
    std::vector<Matrix> rep;
    // Standard real bases w e_lm: local index -> (w, l, m).
    std::vector<std::array<int, 3>> units;
    std::shared_ptr<const Group> group;  // group blocks
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

class Algebra {
public:
    Algebra(int dim, std::vector<std::string> labels, std::vector<Scalar> c, Vec unit)
        : dim_(dim), labels_(std::move(labels)), c_(std::move(c)), unit_(std::move(unit)) {
        if (dim_ < 1) throw AlgebraError("dimension must be positive");
        if (static_cast<int>(labels_.size()) != dim_) throw AlgebraError("label count does not match dimension");
        if (c_.size() != static_cast<std::size_t>(dim_) * dim_ * dim_)
            throw AlgebraError("structure constants have wrong size");
        if (static_cast<int>(unit_.size()) != dim_) throw AlgebraError("unit has wrong length");
        build_sparse();
    }

    int dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const Scalar& c(int a, int b, int d) const { return c_[(static_cast<std::size_t>(a) * dim_ + b) * dim_ + d]; }
    const std::vector<Scalar>& structure() const { return c_; }
    const std::vector<std::pair<int, Scalar>>& prod(int a, int b) const { return sp_[a * dim_ + b]; }
    const Vec& unit() const { return unit_; }
    const std::optional<Grading>& grading() const { return grading_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    bool complex_ground() const { return complex_ground_; }
    const std::string& name() const { return name_; }

    Vec basis(int a) const {
        Vec v(dim_);
        v[a] = Scalar(1);
        return v;
    }

    Vec mul(const Vec& x, const Vec& y) const {
        Vec r(dim_);
        for (int a = 0; a < dim_; ++a) {
            if (x[a].is_zero()) continue;
            for (int b = 0; b < dim_; ++b) {
                if (y[b].is_zero()) continue;
                const auto& p = prod(a, b);
                if (p.empty()) continue;
                Scalar xy = x[a] * y[b];
                for (const auto& [d, v] : p) r[d] += xy * v;
            }
        }
        return r;
    }

    // (L_x)_{d b}: matrix of y -> x y.
    Matrix left_mult(const Vec& x) const {
        Matrix m(dim_, dim_);
        for (int a = 0; a < dim_; ++a) {
            if (x[a].is_zero()) continue;
            for (int b = 0; b < dim_; ++b)
                for (const auto& [d, v] : prod(a, b)) m(d, b) += x[a] * v;
        }
        return m;
    }

    std::optional<Vec> inverse(const Vec& x) const {
        auto y = solve(left_mult(x), unit_);
        if (!y) return std::nullopt;
        if (mul(*y, x) != unit_) return std::nullopt;
        return y;
    }

    Vec pow(const Vec& x, int k) const {
        Vec r = unit_;
        for (int i = 0; i < k; ++i) r = mul(r, x);
        return r;
    }

    // Exhaustive associativity check; returns the first failing triple.
    std::optional<std::array<int, 3>> associativity_failure() const {
        for (int a = 0; a < dim_; ++a)
            for (int b = 0; b < dim_; ++b)
                for (int cc = 0; cc < dim_; ++cc) {
                    Vec l = mul(mul(basis(a), basis(b)), basis(cc));
                    Vec r = mul(basis(a), mul(basis(b), basis(cc)));
                    if (l != r) return std::array<int, 3>{a, b, cc};
                }
        return std::nullopt;
    }

    std::optional<int> unit_failure() const {
        for (int a = 0; a < dim_; ++a)
            if (mul(unit_, basis(a)) != basis(a) || mul(basis(a), unit_) != basis(a)) return a;
        return std::nullopt;
    }

    std::optional<std::array<int, 3>> grading_failure(const Grading& g) const {
        for (int a = 0; a < dim_; ++a)
            for (int b = 0; b < dim_; ++b)
                for (const auto& [d, v] : prod(a, b))
                    if (g.grade[d] != g.add(g.grade[a], g.grade[b])) return std::array<int, 3>{a, b, d};
        return std::nullopt;
    }

    std::shared_ptr<Algebra> clone() const { return std::make_shared<Algebra>(*this); }

    // Mutators used by constructors only; algebras are shared immutably afterwards.
    void set_grading(std::optional<Grading> g) { grading_ = std::move(g); }
    void set_blocks(std::vector<Block> b) { blocks_ = std::move(b); }
    void set_complex_ground(bool c) { complex_ground_ = c; }
    void set_name(std::string n) { name_ = std::move(n); }

private:
    void build_sparse() {
        sp_.assign(static_cast<std::size_t>(dim_) * dim_, {});
        for (int a = 0; a < dim_; ++a)
            for (int b = 0; b < dim_; ++b)
                for (int d = 0; d < dim_; ++d)
                    if (!c(a, b, d).is_zero()) sp_[a * dim_ + b].emplace_back(d, c(a, b, d));
    }

    int dim_;
    std::vector<std::string> labels_;
    std::vector<Scalar> c_;
    Vec unit_;
    std::vector<std::vector<std::pair<int, Scalar>>> sp_;
    std::optional<Grading> grading_;
    std::vector<Block> blocks_;
    bool complex_ground_ = false;
    std::string name_;
};

// Element with a reference to its algebra.
class Element {
public:
    Element(AlgebraPtr A, Vec v) : A_(std::move(A)), v_(std::move(v)) {
        if (static_cast<int>(v_.size()) != A_->dim()) throw AlgebraError("element length does not match algebra");
    }
    static Element unit(AlgebraPtr A) {
        Vec u = A->unit();
        return Element(std::move(A), std::move(u));
    }
    static Element basis(AlgebraPtr A, int a) {
        Vec b = A->basis(a);
        return Element(std::move(A), std::move(b));
    }
    const AlgebraPtr& algebra() const { return A_; }
    const Vec& coeffs() const { return v_; }
    const Scalar& operator[](int a) const { return v_[a]; }

    friend Element operator+(const Element& x, const Element& y) {
        check(x, y);
        Vec r = x.v_;
        for (std::size_t i = 0; i < r.size(); ++i) r[i] += y.v_[i];
        return Element(x.A_, std::move(r));
    }
    friend Element operator-(const Element& x, const Element& y) {
        check(x, y);
        Vec r = x.v_;
        for (std::size_t i = 0; i < r.size(); ++i) r[i] -= y.v_[i];
        return Element(x.A_, std::move(r));
    }
    friend Element operator*(const Element& x, const Element& y) {
        check(x, y);
        return Element(x.A_, x.A_->mul(x.v_, y.v_));
    }
    friend Element operator*(const Scalar& s, const Element& x) {
        Vec r = x.v_;
        for (auto& c : r) c *= s;
        return Element(x.A_, std::move(r));
    }
    friend bool operator==(const Element& x, const Element& y) { return x.A_ == y.A_ && x.v_ == y.v_; }
    friend bool operator!=(const Element& x, const Element& y) { return !(x == y); }

    std::string str() const {
        std::string s;
        for (int a = 0; a < A_->dim(); ++a) {
            if (v_[a].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + v_[a].str() + ")" + A_->labels()[a];
        }
        return s.empty() ? "0" : s;
    }

private:
    static void check(const Element& x, const Element& y) {
        if (x.A_ != y.A_) throw AlgebraError("elements belong to different algebras");
    }
    AlgebraPtr A_;
    Vec v_;
};

inline Element multiply(const Element& a, const Element& b) { return a * b; }

namespace detail {

// Quaternion units 1,i,j,k: product = sign * unit.
inline std::pair<int, int> quat_mul(int a, int b) {
    static const int u[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int s[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    return {s[a][b], u[a][b]};
}

inline std::vector<Scalar> zero_structure(int dim) {
    return std::vector<Scalar>(static_cast<std::size_t>(dim) * dim * dim);
}

inline Scalar& at(std::vector<Scalar>& c, int dim, int a, int b, int d) {
    return c[(static_cast<std::size_t>(a) * dim + b) * dim + d];
}

inline Matrix elementary(int n, int l, int m) {
    Matrix e(n, n);
    e(l, m) = Scalar(1);
    return e;
}

}  // namespace detail

// M_n(D). Basis w e_lm at index w*n*n + l*n + m (0-based), w over the real units of D.
inline AlgebraPtr matrix_algebra(int n, Ring ring) {
    if (n < 1) throw AlgebraError("matrix size must be >= 1");
    const int dd = ring_dim(ring);
    const int dim = dd * n * n;
    static const char* unit_names[4] = {"", "i", "j", "k"};
    std::vector<std::string> labels(dim);
    auto c = detail::zero_structure(dim);
    Block blk;
    blk.kind = BlockKind::Matrix;
    blk.ring = ring;
    blk.n = n;
    blk.offset = 0;
    blk.size = dim;
    blk.trace.assign(dim, Scalar());
    blk.units.resize(dim);
    for (int w = 0; w < dd; ++w)
        for (int l = 0; l < n; ++l)
            for (int m = 0; m < n; ++m) {
                int idx = w * n * n + l * n + m;
                labels[idx] = std::string(unit_names[w]) + "e" + std::to_string(l + 1) + std::to_string(m + 1);
                blk.units[idx] = {w, l, m};
                if (w == 0 && l == m) blk.trace[idx] = Scalar(1);
            }
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
            auto [w1, l1, m1] = blk.units[a];
            auto [w2, l2, m2] = blk.units[b];
            if (m1 != l2) continue;
            int sign = 1, w = 0;
            if (ring == Ring::C_R) {
                w = (w1 + w2) % 2;
                sign = (w1 == 1 && w2 == 1) ? -1 : 1;
            } else if (ring == Ring::H_R) {
                std::tie(sign, w) = detail::quat_mul(w1, w2);
            }
            detail::at(c, dim, a, b, w * n * n + l1 * n + m2) = Scalar(sign);
        }
    Vec unit(dim);
    for (int l = 0; l < n; ++l) unit[l * n + l] = Scalar(1);
    blk.fhk_weight = Scalar(ring == Ring::C ? n : dd * n);
    if (ring == Ring::R || ring == Ring::C)
        for (int a = 0; a < dim; ++a) blk.rep.push_back(detail::elementary(n, blk.units[a][1], blk.units[a][2]));
    auto A = std::make_shared<Algebra>(dim, labels, std::move(c), std::move(unit));
    A->set_blocks({blk});
    A->set_complex_ground(ring == Ring::C);
    A->set_name("M" + std::to_string(n) + "(" + ring_name(ring) + ")");
    return A;
}

// Group algebra CH. Abelian groups are graded by their cyclic decomposition.
inline AlgebraPtr group_algebra(const Group& G) {
    const int n = G.order();
    std::vector<std::string> labels(n);
    for (int h = 0; h < n; ++h) labels[h] = "g" + std::to_string(h);
    labels[G.unit()] = "1";
    auto c = detail::zero_structure(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) detail::at(c, n, a, b, G.mul(a, b)) = Scalar(1);
    Vec unit(n);
    unit[G.unit()] = Scalar(1);
    Block blk;
    blk.kind = BlockKind::Group;
    blk.n = n;
    blk.size = n;
    blk.trace.assign(n, Scalar());
    blk.trace[G.unit()] = Scalar(n);
    blk.fhk_weight = Scalar(1);
    blk.group = std::make_shared<Group>(G);
    auto A = std::make_shared<Algebra>(n, labels, std::move(c), std::move(unit));
    if (G.is_abelian()) {
        auto d = decompose_abelian(G);
        A->set_grading(Grading{d.moduli, d.grade});
    }
    A->set_blocks({blk});
    A->set_complex_ground(true);
    A->set_name("CH" + std::to_string(n));
    return A;
}

inline AlgebraPtr group_algebra(const std::vector<std::vector<int>>& table, int unit_index) {
    return group_algebra(Group(table, unit_index));
}

// C Z_{n1} x ... x Z_{np} with its natural grading (tuple order).
inline AlgebraPtr abelian_group_algebra(const std::vector<int>& moduli) {
    Group G = abelian_group(moduli);
    auto A = std::const_pointer_cast<Algebra>(group_algebra(G));
    Grading g;
    g.moduli = moduli;
    for (int h = 0; h < G.order(); ++h) g.grade.push_back(decode_tuple(h, moduli));
    A->set_grading(g);
    std::string nm = "CZ";
    for (std::size_t i = 0; i < moduli.size(); ++i) nm += (i ? "x" : "") + std::to_string(moduli[i]);
    A->set_name(nm);
    return A;
}

inline AlgebraPtr cyclic_group_algebra(int m) { return abelian_group_algebra({m}); }

inline AlgebraPtr with_grading(const AlgebraPtr& A, Grading g) {
    if (static_cast<int>(g.grade.size()) != A->dim()) throw AlgebraError("grading has wrong length");
    for (auto& t : g.grade) {
        if (t.size() != g.moduli.size()) throw AlgebraError("grade tuple has wrong arity");
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = ((t[i] % g.moduli[i]) + g.moduli[i]) % g.moduli[i];
    }
    if (auto f = A->grading_failure(g))
        throw AlgebraError("grading inconsistent at " + A->labels()[(*f)[0]] + "*" + A->labels()[(*f)[1]] + " -> " +
                           A->labels()[(*f)[2]]);
    auto B = A->clone();
    B->set_grading(std::move(g));
    return B;
}

inline AlgebraPtr direct_sum(const AlgebraPtr& A1, const AlgebraPtr& A2) {
    const int d1 = A1->dim(), d2 = A2->dim(), dim = d1 + d2;
    std::vector<std::string> labels;
    for (const auto& l : A1->labels()) labels.push_back("(" + l + ",0)");
    for (const auto& l : A2->labels()) labels.push_back("(0," + l + ")");
    auto c = detail::zero_structure(dim);
    for (int a = 0; a < d1; ++a)
        for (int b = 0; b < d1; ++b)
            for (const auto& [d, v] : A1->prod(a, b)) detail::at(c, dim, a, b, d) = v;
    for (int a = 0; a < d2; ++a)
        for (int b = 0; b < d2; ++b)
            for (const auto& [d, v] : A2->prod(a, b)) detail::at(c, dim, d1 + a, d1 + b, d1 + d) = v;
    Vec unit(dim);
    for (int a = 0; a < d1; ++a) unit[a] = A1->unit()[a];
    for (int a = 0; a < d2; ++a) unit[d1 + a] = A2->unit()[a];
    auto A = std::make_shared<Algebra>(dim, labels, std::move(c), std::move(unit));
    Grading g1 = A1->grading().value_or(Grading{{}, std::vector<std::vector<int>>(d1)});
    Grading g2 = A2->grading().value_or(Grading{{}, std::vector<std::vector<int>>(d2)});
    Grading g;
    g.moduli = g1.moduli;
    g.moduli.insert(g.moduli.end(), g2.moduli.begin(), g2.moduli.end());
    for (int a = 0; a < d1; ++a) {
        auto t = g1.grade[a];
        t.resize(g.moduli.size(), 0);
        g.grade.push_back(t);
    }
    for (int a = 0; a < d2; ++a) {
        std::vector<int> t(g1.moduli.size(), 0);
        t.insert(t.end(), g2.grade[a].begin(), g2.grade[a].end());
        g.grade.push_back(t);
    }
    if (A1->grading() || A2->grading()) A->set_grading(g);
    std::vector<Block> blocks;
    for (const auto& b : A1->blocks()) {
        Block nb = b;
        nb.trace.resize(dim);
        blocks.push_back(nb);
    }
    for (const auto& b : A2->blocks()) {
        Block nb = b;
        nb.offset += d1;
        Vec t(dim);
        for (int a = 0; a < d2; ++a) t[d1 + a] = b.trace[a];
        nb.trace = t;
        blocks.push_back(nb);
    }
    if (blocks.size() == A1->blocks().size() + A2->blocks().size() && !A1->blocks().empty() && !A2->blocks().empty())
        A->set_blocks(blocks);
    A->set_complex_ground(A1->complex_ground() || A2->complex_ground());
    A->set_name(A1->name() + "+" + A2->name());
    return A;
}

// Raw structure constants; validated for associativity and unit.
inline AlgebraPtr raw_algebra(int dim, std::vector<Scalar> c, Vec unit, std::vector<std::string> labels = {},
                              bool check = true) {
    if (labels.empty())
        for (int a = 0; a < dim; ++a) labels.push_back("e" + std::to_string(a));
    auto A = std::make_shared<Algebra>(dim, std::move(labels), std::move(c), std::move(unit));
    if (check) {
        if (auto f = A->associativity_failure())
            throw AlgebraError("structure constants are not associative at (" + std::to_string((*f)[0]) + "," +
                               std::to_string((*f)[1]) + "," + std::to_string((*f)[2]) + ")");
        if (auto u = A->unit_failure()) throw AlgebraError("unit law fails at basis " + std::to_string(*u));
    }
    A->set_name("raw");
    return A;
}

inline std::vector<Vec> center_basis(const Algebra& A) {
    const int n = A.dim();
    Matrix sys(n * n, n);  // rows (a, d), unknown x^b
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            for (const auto& [d, v] : A.prod(b, a)) sys(a * n + d, b) += v;
            for (const auto& [d, v] : A.prod(a, b)) sys(a * n + d, b) -= v;
        }
    return nullspace(sys);
}

inline bool is_central(const Algebra& A, const Vec& x) {
    for (int a = 0; a < A.dim(); ++a)
        if (A.mul(x, A.basis(a)) != A.mul(A.basis(a), x)) return false;
    return true;
}

// ---- gradings of matrix algebras ----

// Z_2 block grading of M_{p+q}(D): diagonal blocks even, off-diagonal odd.
inline AlgebraPtr block_z2_grading(const AlgebraPtr& A, int p) {
    if (A->blocks().size() != 1 || A->blocks()[0].kind != BlockKind::Matrix || A->blocks()[0].units.empty())
        throw AlgebraError("block grading needs a single matrix algebra in the elementary basis");
    const Block& b = A->blocks()[0];
    if (p < 0 || p > b.n) throw AlgebraError("block size p out of range");
    Grading g{{2}, {}};
    for (const auto& u : b.units) g.grade.push_back({(u[1] < p) != (u[2] < p) ? 1 : 0});
    return with_grading(A, g);
}

// M_n(C_R) graded by Z_2 with i-multiples odd.
inline AlgebraPtr complex_i_grading(const AlgebraPtr& A) {
    if (A->blocks().size() != 1 || A->blocks()[0].ring != Ring::C_R) throw AlgebraError("i-grading needs M_n(C_R)");
    Grading g{{2}, {}};
    for (const auto& u : A->blocks()[0].units) g.grade.push_back({u[0]});
    return with_grading(A, g);
}

// M_n(H_R) graded by the Klein group: 1,i,j,k -> (0,0),(1,0),(0,1),(1,1).
inline AlgebraPtr klein_grading(const AlgebraPtr& A) {
    if (A->blocks().size() != 1 || A->blocks()[0].ring != Ring::H_R) throw AlgebraError("Klein grading needs M_n(H_R)");
    static const int tab[4][2] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    Grading g{{2, 2}, {}};
    for (const auto& u : A->blocks()[0].units) g.grade.push_back({tab[u[0]][0], tab[u[0]][1]});
    return with_grading(A, g);
}

namespace detail {

// Structure constants of a matrix basis: solve each product in the basis.
inline std::vector<Scalar> structure_from_reps(const std::vector<Matrix>& reps, int n) {
    const int dim = static_cast<int>(reps.size());
    Matrix flat(n * n, dim);
    for (int k = 0; k < dim; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) flat(i * n + j, k) = reps[k](i, j);
    auto c = zero_structure(dim);
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
            Matrix p = reps[a] * reps[b];
            Vec rhs(n * n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) rhs[i * n + j] = p(i, j);
            auto x = solve(flat, rhs);
            if (!x) throw AlgebraError("matrix basis is not closed under products");
            for (int d = 0; d < dim; ++d) at(c, dim, a, b, d) = (*x)[d];
        }
    return c;
}

}  // namespace detail

// M_n(C) in the basis X^a Y^b, graded by Z_n x Z_n.
inline AlgebraPtr pauli_matrix_algebra(int n) {
    if (n < 1) throw AlgebraError("matrix size must be >= 1");
    Matrix X(n, n), Y(n, n);
    for (int m = 0; m < n; ++m) X(m, m) = root_of_unity(n, n - 1 - m);
    Y(n - 1, 0) = Scalar(1);
    for (int m = 0; m + 1 < n; ++m) Y(m, m + 1) = Scalar(1);
    std::vector<Matrix> reps;
    std::vector<std::string> labels;
    Grading g{{n, n}, {}};
    Matrix Xa = Matrix::identity(n);
    for (int a = 0; a < n; ++a) {
        Matrix M = Xa;
        for (int b = 0; b < n; ++b) {
            reps.push_back(M);
            labels.push_back("X" + std::to_string(a) + "Y" + std::to_string(b));
            g.grade.push_back({a, b});
            M = M * Y;
        }
        Xa = Xa * X;
    }
    const int dim = n * n;
    auto c = detail::structure_from_reps(reps, n);
    Vec unit(dim);
    unit[0] = Scalar(1);
    Block blk;
    blk.kind = BlockKind::Matrix;
    blk.ring = Ring::C;
    blk.n = n;
    blk.size = dim;
    blk.trace.assign(dim, Scalar());
    for (int k = 0; k < dim; ++k)
        for (int i = 0; i < n; ++i) blk.trace[k] += reps[k](i, i);
    blk.fhk_weight = Scalar(n);
    blk.rep = reps;
    auto A = std::make_shared<Algebra>(dim, labels, std::move(c), std::move(unit));
    A->set_blocks({blk});
    A->set_complex_ground(true);
    A->set_grading(g);
    A->set_name("M" + std::to_string(n) + "(C)pauli");
    if (auto f = A->grading_failure(g)) throw AlgebraError("pauli grading inconsistent");
    return A;
}

}  // namespace statesum
