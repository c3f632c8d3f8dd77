/**
 * @file spin_structure.hpp
 * @brief Quadratic forms on H_1(Sigma_g; Z_2) and the Arf invariant.
 *
 * Classes are bit vectors over the basis a_1, b_1, ..., a_g, b_g (bit 2i is a_{i+1}).
 */

#pragma once

#include "spin.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace statesum {

struct QuadraticForm {
    int genus = 0;
    std::vector<int> values;  // q(a_1), q(b_1), ..., each 0 or 1

    QuadraticForm() = default;
    QuadraticForm(int g, std::vector<int> v) : genus(g), values(std::move(v)) {
        if (g < 0) throw SpinError("genus must be >= 0");
        if (static_cast<int>(values.size()) != 2 * g)
            throw SpinError("quadratic form needs 2g = " + std::to_string(2 * g) + " values");
        for (int& x : values)
            if (x != 0 && x != 1) throw SpinError("quadratic form values must be bits");
    }

    // q(x) = sum x_k q(gen_k) + sum_i x(a_i) x(b_i) mod 2.
    int operator()(std::uint64_t x) const {
        int s = 0;
        for (int k = 0; k < 2 * genus; ++k)
            if (x >> k & 1) s ^= values[k];
        for (int i = 0; i < genus; ++i) s ^= static_cast<int>((x >> (2 * i)) & (x >> (2 * i + 1)) & 1);
        return s;
    }
};

// Standard intersection pairing mod 2.
inline int intersection(std::uint64_t x, std::uint64_t y, int g) {
    int s = 0;
    for (int i = 0; i < g; ++i)
        s ^= static_cast<int>(((x >> (2 * i)) & (y >> (2 * i + 1)) & 1) ^ ((x >> (2 * i + 1)) & (y >> (2 * i)) & 1));
    return s;
}

// q(x+y) = q(x) + q(y) + x.y on random pairs, and q(x+y+z) computed two ways.
inline bool verify_extension_rule(const QuadraticForm& q, int trials = 200, unsigned seed = 7) {
    if (q.genus == 0) return true;
    std::mt19937_64 rng(seed);
    const std::uint64_t mask = (q.genus >= 32) ? ~0ULL : ((1ULL << (2 * q.genus)) - 1);
    for (int t = 0; t < trials; ++t) {
        std::uint64_t x = rng() & mask, y = rng() & mask, z = rng() & mask;
        if (q(x ^ y) != (q(x) ^ q(y) ^ intersection(x, y, q.genus))) return false;
        int left = q((x ^ y) ^ z), right = q(x ^ (y ^ z));
        int via = q(x ^ y) ^ q(z) ^ intersection(x ^ y, z, q.genus);
        if (left != right || left != via) return false;
    }
    return true;
}

// 2^{-g} sum_x (-1)^{q(x)}, an exact +1 or -1.
inline int arf(const QuadraticForm& q) {
    if (q.genus > 12) throw SpinError("arf enumeration supports genus <= 12");
    long s = 0;
    const std::uint64_t n = 1ULL << (2 * q.genus);
    for (std::uint64_t x = 0; x < n; ++x) s += q(x) ? -1 : 1;
    const long scale = 1L << q.genus;
    if (s != scale && s != -scale) throw SpinError("Arf sum is not +-2^g; form is degenerate");
    return s > 0 ? 1 : -1;
}

inline Parity arf_parity(const QuadraticForm& q) { return arf(q) == 1 ? Parity::Even : Parity::Odd; }

// Closed form: Arf = sum_i q(a_i) q(b_i) mod 2.
inline Parity arf_parity_fast(const std::vector<int>& values) {
    int s = 0;
    for (std::size_t i = 0; i + 1 < values.size(); i += 2) s ^= values[i] & values[i + 1];
    return s ? Parity::Odd : Parity::Even;
}

inline std::pair<long, long> parity_census(int g) {
    if (g < 0 || g > 8) throw SpinError("parity census supports 0 <= g <= 8");
    long even = 0, odd = 0;
    const long n = 1L << (2 * g);
    for (long bits = 0; bits < n; ++bits) {
        std::vector<int> v(2 * g);
        for (int k = 0; k < 2 * g; ++k) v[k] = static_cast<int>(bits >> k & 1);
        (arf(QuadraticForm(g, v)) == 1 ? even : odd)++;
    }
    return {even, odd};
}

// Curl decorations on the standard diagram read as q on the generators.
inline Parity immersion_to_parity(const std::vector<int>& curl_flags) {
    if (curl_flags.size() % 2) throw SpinError("curl flags need an even length 2g");
    std::vector<int> bits;
    for (int f : curl_flags) bits.push_back(f & 1);
    return arf_parity(QuadraticForm(static_cast<int>(bits.size() / 2), bits));
}

// Symplectic generators acting on the values of q.
inline QuadraticForm swap_handle_basis(QuadraticForm q, int i) {
    std::swap(q.values.at(2 * i), q.values.at(2 * i + 1));
    return q;
}

inline QuadraticForm permute_handles(QuadraticForm q, int i, int j) {
    std::swap(q.values.at(2 * i), q.values.at(2 * j));
    std::swap(q.values.at(2 * i + 1), q.values.at(2 * j + 1));
    return q;
}

// a_i -> a_i + b_i.
inline QuadraticForm twist_handle(QuadraticForm q, int i) {
    q.values.at(2 * i) ^= q.values.at(2 * i + 1) ^ 1;
    return q;
}

}  // namespace statesum
