/**
 * @file triangulation.hpp
 * @brief Combinatorial triangulated surfaces with per-gluing orientation flags.
 *
 * Triangle t has corners 0,1,2 and sides 0,1,2; side s runs from corner s to
 * corner s+1. A half-edge is (t, s), id 3t+s. A gluing pairs two half-edges
 * and carries a flag: Same (B-type) or Opp (S-type). The corner matching is
 *   reversed  (corner s1 ~ s2+1, s1+1 ~ s2)  when (flag == Same) == (o1 == o2)
 *   parallel  (corner s1 ~ s2,   s1+1 ~ s2+1) otherwise,
 * so flipping a triangle (toggling its orientation and all incident flags)
 * leaves the underlying surface unchanged.
 */

#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace statesum {

struct TriangulationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Glue { Same, Opp };

struct Gluing {
    int t1, s1, t2, s2;
    Glue flag;
};

class Triangulation {
public:
    Triangulation() = default;

    int add_triangle(bool positive = true) {
        orient_.push_back(positive);
        mate_.insert(mate_.end(), 3, -1);
        flag_.insert(flag_.end(), 3, Glue::Same);
        return triangles() - 1;
    }

    void glue(int t1, int s1, int t2, int s2, Glue f) {
        int h1 = he(t1, s1), h2 = he(t2, s2);
        if (h1 == h2) throw TriangulationError("cannot glue a half-edge to itself");
        if (mate_[h1] >= 0 || mate_[h2] >= 0)
            throw TriangulationError("half-edge (" + std::to_string(t1) + "," + std::to_string(s1) + ") or (" +
                                     std::to_string(t2) + "," + std::to_string(s2) + ") already glued");
        mate_[h1] = h2;
        mate_[h2] = h1;
        flag_[h1] = flag_[h2] = f;
    }

    int triangles() const { return static_cast<int>(orient_.size()); }
    bool positive(int t) const { return orient_[t]; }
    int mate(int h) const { return mate_[h]; }
    Glue flag(int h) const { return flag_[h]; }
    int he(int t, int s) const {
        if (t < 0 || t >= triangles() || s < 0 || s > 2)
            throw TriangulationError("half-edge (" + std::to_string(t) + "," + std::to_string(s) + ") out of range");
        return 3 * t + s;
    }

    std::vector<Gluing> gluings() const {
        std::vector<Gluing> g;
        for (int h = 0; h < 3 * triangles(); ++h)
            if (mate_[h] > h) g.push_back({h / 3, h % 3, mate_[h] / 3, mate_[h] % 3, flag_[h]});
        return g;
    }

    std::vector<int> boundary() const {
        std::vector<int> b;
        for (int h = 0; h < 3 * triangles(); ++h)
            if (mate_[h] < 0) b.push_back(h);
        return b;
    }

    bool reversed(int h) const {
        int m = mate_[h];
        return (flag_[h] == Glue::Same) == (orient_[h / 3] == orient_[m / 3]);
    }

    // Corner classes: class id per corner 3t+c.
    std::vector<int> corner_classes() const {
        const int n = 3 * triangles();
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
        for (int h = 0; h < n; ++h) {
            int m = mate_[h];
            if (m < h) continue;
            int t1 = h / 3, s1 = h % 3, t2 = m / 3, s2 = m % 3;
            int a0 = 3 * t1 + s1, a1 = 3 * t1 + (s1 + 1) % 3;
            int b0 = 3 * t2 + s2, b1 = 3 * t2 + (s2 + 1) % 3;
            if (reversed(h)) {
                unite(a0, b1);
                unite(a1, b0);
            } else {
                unite(a0, b0);
                unite(a1, b1);
            }
        }
        std::vector<int> cls(n), id(n, -1);
        int k = 0;
        for (int c = 0; c < n; ++c) {
            int r = find(c);
            if (id[r] < 0) id[r] = k++;
            cls[c] = id[r];
        }
        return cls;
    }

    int count_all_vertices() const {
        auto cls = corner_classes();
        return cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
    }

    // Vertex classes that touch no boundary side.
    int count_vertices() const {
        auto cls = corner_classes();
        if (cls.empty()) return 0;
        int nv = *std::max_element(cls.begin(), cls.end()) + 1;
        std::vector<bool> on_boundary(nv, false);
        for (int h : boundary()) {
            int t = h / 3, s = h % 3;
            on_boundary[cls[3 * t + s]] = true;
            on_boundary[cls[3 * t + (s + 1) % 3]] = true;
        }
        return static_cast<int>(std::count(on_boundary.begin(), on_boundary.end(), false));
    }

    int count_edges() const {
        int glued = 0, free = 0;
        for (int h = 0; h < 3 * triangles(); ++h) (mate_[h] < 0 ? free : glued)++;
        return glued / 2 + free;
    }

    int euler_characteristic() const { return count_all_vertices() - count_edges() + triangles(); }

    int opp_gluings() const {
        int k = 0;
        for (const auto& g : gluings()) k += g.flag == Glue::Opp;
        return k;
    }

    friend bool operator==(const Triangulation& a, const Triangulation& b) {
        return a.orient_ == b.orient_ && a.mate_ == b.mate_ && a.flag_ == b.flag_;
    }

    // Mutable access for moves.
    void set_positive(int t, bool p) { orient_[t] = p; }
    void set_flag(int h, Glue f) { flag_[h] = f; }
    void unglue(int h) {
        int m = mate_[h];
        if (m >= 0) mate_[m] = -1;
        mate_[h] = -1;
    }

    std::string str() const {
        std::ostringstream os;
        os << "triangles";
        for (int t = 0; t < triangles(); ++t) os << ' ' << (orient_[t] ? '+' : '-');
        os << '\n';
        for (const auto& g : gluings())
            os << '(' << g.t1 << ',' << g.s1 << ")~(" << g.t2 << ',' << g.s2 << "):" << (g.flag == Glue::Same ? "same" : "opp")
               << '\n';
        return os.str();
    }

    // Inverse of str(): "triangles + - ..." then one gluing per line; '#' starts a comment.
    static Triangulation parse(const std::string& text) {
        Triangulation T;
        std::istringstream is(text);
        std::string line;
        bool have_triangles = false;
        int lineno = 0;
        static const std::regex glue_re(R"(^\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*~\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*:\s*(same|opp)\s*$)");
        std::vector<std::string> glue_lines;
        while (std::getline(is, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            std::istringstream ls(line);
            std::string head;
            ls >> head;
            if (head == "triangles") {
                if (have_triangles) throw TriangulationError("line " + std::to_string(lineno) + ": duplicate triangles line");
                std::string o;
                while (ls >> o) {
                    if (o != "+" && o != "-") throw TriangulationError("line " + std::to_string(lineno) + ": orientation must be + or -");
                    T.add_triangle(o == "+");
                }
                have_triangles = true;
                continue;
            }
            std::smatch m;
            if (!std::regex_match(line, m, glue_re))
                throw TriangulationError("line " + std::to_string(lineno) + ": expected (t1,s1)~(t2,s2):same|opp");
            if (!have_triangles) throw TriangulationError("line " + std::to_string(lineno) + ": gluing before triangles line");
            T.glue(std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]), std::stoi(m[4]), m[5] == "same" ? Glue::Same : Glue::Opp);
        }
        if (!have_triangles) throw TriangulationError("missing triangles line");
        return T;
    }

    static Glue parse_flag(const std::string& s) {
        if (s == "same") return Glue::Same;
        if (s == "opp") return Glue::Opp;
        throw TriangulationError("gluing flag must be same or opp");
    }

private:
    std::vector<bool> orient_;
    std::vector<int> mate_;
    std::vector<Glue> flag_;
};

// Polygon with sides 0..N-1 (side i from P_i to P_{i+1}), fan-triangulated from apex P_p.
// pairs: (i, j, inverse) glues side i to side j; inverse means the word reads x ... x^{-1}.
inline Triangulation polygon_surface(int N, const std::vector<std::array<int, 3>>& pairs, int apex = 0) {
    if (N < 3) throw TriangulationError("polygon needs at least 3 sides");
    Triangulation T;
    const int nt = N - 2;
    for (int j = 0; j < nt; ++j) T.add_triangle(true);
    // triangle j = (P_p, P_{p+j+1}, P_{p+j+2})
    for (int j = 0; j + 1 < nt; ++j) T.glue(j, 2, j + 1, 0, Glue::Same);
    auto side_he = [&](int i) -> std::pair<int, int> {
        int r = ((i - apex) % N + N) % N;
        if (r == 0) return {0, 0};
        if (r == N - 1) return {nt - 1, 2};
        return {r - 1, 1};
    };
    for (const auto& [i, j, inverse] : pairs) {
        auto [t1, s1] = side_he(i);
        auto [t2, s2] = side_he(j);
        // Every side half-edge runs in polygon direction, all triangles positive:
        // inverse pairing needs reversed corners (Same), direct pairing parallel (Opp).
        T.glue(t1, s1, t2, s2, inverse ? Glue::Same : Glue::Opp);
    }
    return T;
}

// g = 0: two triangles; g >= 1: 4g-gon with blocks a b a^-1 b^-1, fan from polygon vertex `apex`.
inline Triangulation genus_surface(int g, int apex = 0) {
    if (g < 0) throw TriangulationError("genus must be nonnegative");
    if (g == 0) {
        Triangulation T;
        T.add_triangle(true);
        T.add_triangle(true);
        T.glue(0, 0, 1, 0, Glue::Same);
        T.glue(0, 1, 1, 2, Glue::Same);
        T.glue(0, 2, 1, 1, Glue::Same);
        return T;
    }
    std::vector<std::array<int, 3>> pairs;
    for (int k = 0; k < g; ++k) {
        pairs.push_back({4 * k, 4 * k + 2, 1});
        pairs.push_back({4 * k + 1, 4 * k + 3, 1});
    }
    return polygon_surface(4 * g, pairs, apex);
}

// 4k-gon with blocks a b a b; every identification is an S-gluing.
inline Triangulation nonorientable_surface(int k, int apex = 0) {
    if (k < 1) throw TriangulationError("nonorientable genus must be >= 1");
    std::vector<std::array<int, 3>> pairs;
    for (int b = 0; b < k; ++b) {
        pairs.push_back({4 * b, 4 * b + 2, 0});
        pairs.push_back({4 * b + 1, 4 * b + 3, 0});
    }
    return polygon_surface(4 * k, pairs, apex);
}

inline Triangulation single_triangle() {
    Triangulation T;
    T.add_triangle(true);
    return T;
}

inline Triangulation flip_triangle_orientation(Triangulation T, int t) {
    if (t < 0 || t >= T.triangles()) throw TriangulationError("triangle index out of range");
    T.set_positive(t, !T.positive(t));
    for (int s = 0; s < 3; ++s) {
        int h = 3 * t + s, m = T.mate(h);
        if (m < 0) continue;
        if (m / 3 == t) continue;  // both ends flip: geometry already preserved
        Glue f = T.flag(h) == Glue::Same ? Glue::Opp : Glue::Same;
        T.set_flag(h, f);
        T.set_flag(m, f);
    }
    return T;
}

namespace detail {

// Rebuild with new triangles; remap[h] gives the new id of old half-edge h (or -1 if dropped).
struct Rebuild {
    std::vector<bool> orient;
    std::vector<std::array<int, 2>> inner;  // new-id pairs glued Same
    std::vector<int> remap;                  // old half-edge -> new half-edge
};

inline Triangulation apply_rebuild(const Triangulation& T, const Rebuild& r) {
    Triangulation N;
    for (bool o : r.orient) N.add_triangle(o);
    for (auto [a, b] : r.inner) N.glue(a / 3, a % 3, b / 3, b % 3, Glue::Same);
    for (int h = 0; h < 3 * T.triangles(); ++h) {
        int m = T.mate(h);
        if (m < 0 || m < h) continue;
        int nh = r.remap[h], nm = r.remap[m];
        if (nh < 0 || nm < 0) continue;
        N.glue(nh / 3, nh % 3, nm / 3, nm % 3, T.flag(h));
    }
    return N;
}

}  // namespace detail

// Retriangulate the quadrilateral around the edge of half-edge (t, s).
inline Triangulation pachner_22(const Triangulation& T, int t, int s) {
    int h = T.he(t, s), m = T.mate(h);
    if (m < 0) throw TriangulationError("2-2 site: edge is on the boundary");
    int t2 = m / 3, s2 = m % 3;
    if (t2 == t) throw TriangulationError("2-2 site: edge joins a triangle to itself");
    if (T.flag(h) != Glue::Same || T.positive(t) != T.positive(t2))
        throw TriangulationError("2-2 site: the two triangles are not orientation-coherent");
    detail::Rebuild r;
    r.orient.assign(T.triangles(), true);
    for (int k = 0; k < T.triangles(); ++k) r.orient[k] = T.positive(k);
    r.remap.resize(3 * T.triangles());
    std::iota(r.remap.begin(), r.remap.end(), 0);
    // N1 = (U, P, V) at index t, N2 = (V, Q, U) at index t2
    r.remap[3 * t + (s + 2) % 3] = 3 * t + 0;
    r.remap[3 * t2 + (s2 + 1) % 3] = 3 * t + 1;
    r.remap[3 * t2 + (s2 + 2) % 3] = 3 * t2 + 0;
    r.remap[3 * t + (s + 1) % 3] = 3 * t2 + 1;
    r.remap[h] = r.remap[m] = -1;
    r.inner.push_back({3 * t + 2, 3 * t2 + 2});
    return detail::apply_rebuild(T, r);
}

// Subdivide triangle t with a new interior vertex; new triangles appended.
inline Triangulation pachner_13(const Triangulation& T, int t) {
    if (t < 0 || t >= T.triangles()) throw TriangulationError("1-3 site: triangle index out of range");
    detail::Rebuild r;
    for (int k = 0; k < T.triangles(); ++k) r.orient.push_back(T.positive(k));
    const int a = t, b = T.triangles(), c = T.triangles() + 1;
    r.orient.push_back(T.positive(t));
    r.orient.push_back(T.positive(t));
    r.remap.resize(3 * T.triangles());
    std::iota(r.remap.begin(), r.remap.end(), 0);
    r.remap[3 * t + 0] = 3 * a;
    r.remap[3 * t + 1] = 3 * b;
    r.remap[3 * t + 2] = 3 * c;
    // (c0,c1,X), (c1,c2,X), (c2,c0,X)
    r.inner.push_back({3 * a + 1, 3 * b + 2});
    r.inner.push_back({3 * b + 1, 3 * c + 2});
    r.inner.push_back({3 * c + 1, 3 * a + 2});
    return detail::apply_rebuild(T, r);
}

// Merge the three triangles around the vertex at corner c of triangle t.
inline Triangulation pachner_31(const Triangulation& T, int t, int c) {
    if (t < 0 || t >= T.triangles() || c < 0 || c > 2) throw TriangulationError("3-1 site out of range");
    auto cls = T.corner_classes();
    int v = cls[3 * t + c];
    std::vector<int> corners;
    for (int k = 0; k < 3 * T.triangles(); ++k)
        if (cls[k] == v) corners.push_back(k);
    if (corners.size() != 3) throw TriangulationError("3-1 site: vertex does not have exactly 3 incident corners");
    std::vector<int> tris;
    for (int k : corners) tris.push_back(k / 3);
    std::sort(tris.begin(), tris.end());
    if (std::unique(tris.begin(), tris.end()) != tris.end())
        throw TriangulationError("3-1 site: incident triangles are not distinct");
    // Ordered fan: M0 owns (t,c); next triangle is across side (x0+2).
    std::vector<int> fan{t}, xs{c};
    for (int step = 0; step < 2; ++step) {
        int tt = fan.back(), x = xs.back();
        int h = 3 * tt + (x + 2) % 3, m = T.mate(h);
        if (m < 0) throw TriangulationError("3-1 site: vertex is on the boundary");
        if (T.flag(h) != Glue::Same || T.positive(tt) != T.positive(m / 3))
            throw TriangulationError("3-1 site: fan is not orientation-coherent");
        int nt = m / 3, ns = m % 3;
        fan.push_back(nt);
        xs.push_back(ns);  // side ns runs X -> next corner, so X sits at corner ns
    }
    {
        int h = 3 * fan[2] + (xs[2] + 2) % 3, m = T.mate(h);
        if (m != 3 * fan[0] + xs[0] || T.flag(h) != Glue::Same || T.positive(fan[2]) != T.positive(fan[0]))
            throw TriangulationError("3-1 site: fan does not close coherently");
        for (int i = 0; i < 3; ++i)
            if (cls[3 * fan[i] + xs[i]] != v) throw TriangulationError("3-1 site: inconsistent fan");
    }
    detail::Rebuild r;
    std::vector<int> newidx(T.triangles(), -1);
    int k = 0;
    for (int q = 0; q < T.triangles(); ++q) {
        if (q == fan[1] || q == fan[2]) continue;
        newidx[q] = k++;
        r.orient.push_back(T.positive(q));
    }
    r.remap.assign(3 * T.triangles(), -1);
    for (int q = 0; q < T.triangles(); ++q)
        if (newidx[q] >= 0 && q != fan[0])
            for (int s = 0; s < 3; ++s) r.remap[3 * q + s] = 3 * newidx[q] + s;
    const int M = newidx[fan[0]];
    for (int i = 0; i < 3; ++i) r.remap[3 * fan[i] + (xs[i] + 1) % 3] = 3 * M + i;
    return detail::apply_rebuild(T, r);
}

// Valid sites for random move sequences.
inline std::vector<std::array<int, 2>> pachner_22_sites(const Triangulation& T) {
    std::vector<std::array<int, 2>> out;
    for (int h = 0; h < 3 * T.triangles(); ++h) {
        int m = T.mate(h);
        if (m > h && m / 3 != h / 3 && T.flag(h) == Glue::Same && T.positive(h / 3) == T.positive(m / 3))
            out.push_back({h / 3, h % 3});
    }
    return out;
}

inline std::vector<std::array<int, 2>> pachner_31_sites(const Triangulation& T) {
    std::vector<std::array<int, 2>> out;
    auto cls = T.corner_classes();
    std::vector<int> seen;
    for (int k = 0; k < 3 * T.triangles(); ++k) {
        if (std::find(seen.begin(), seen.end(), cls[k]) != seen.end()) continue;
        seen.push_back(cls[k]);
        try {
            pachner_31(T, k / 3, k % 3);
            out.push_back({k / 3, k % 3});
        } catch (const TriangulationError&) {
        }
    }
    return out;
}

// Random sequence of valid moves; keeps triangle count within [min_t, max_t].
inline Triangulation random_pachner_walk(Triangulation T, int steps, unsigned seed, int max_t = 16) {
    std::mt19937 rng(seed);
    for (int i = 0; i < steps; ++i) {
        int kind = std::uniform_int_distribution<int>(0, 2)(rng);
        if (kind == 1 && T.triangles() + 2 > max_t) kind = 0;
        if (kind == 0) {
            auto sites = pachner_22_sites(T);
            if (sites.empty()) continue;
            auto s = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
            T = pachner_22(T, s[0], s[1]);
        } else if (kind == 1) {
            T = pachner_13(T, std::uniform_int_distribution<int>(0, T.triangles() - 1)(rng));
        } else {
            auto sites = pachner_31_sites(T);
            if (sites.empty()) continue;
            auto s = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
            T = pachner_31(T, s[0], s[1]);
        }
    }
    return T;
}

}  // namespace statesum
