/**
 * @file scalar.hpp
 * @brief Exact elements of cyclotomic fields Q(zeta_N).
 *
 * A Scalar stores its conductor N and phi(N) rational coordinates in the
 * power basis 1, zeta, ..., zeta^{phi(N)-1}. Mixed-conductor arithmetic lifts
 * both operands to Q(zeta_lcm).
 */

#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace statesum {

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
};

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace detail {

// Reduction data for one conductor.
struct Cyclo {
    int n = 1;
    int phi = 1;
    std::vector<long> poly;                 // Phi_n, monic, degree phi
    std::vector<std::vector<long>> xpow;    // x^k mod Phi_n for 0 <= k < n
};

inline std::vector<long> poly_mul(const std::vector<long>& a, const std::vector<long>& b) {
    std::vector<long> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// Exact division by a monic divisor.
inline std::vector<long> poly_div(std::vector<long> num, const std::vector<long>& den) {
    const std::size_t dn = den.size() - 1;
    std::vector<long> q(num.size() - dn, 0);
    for (std::size_t k = num.size(); k-- > dn;) {
        long c = num[k];
        q[k - dn] = c;
        for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
    }
    return q;
}

inline std::shared_ptr<const Cyclo> build_cyclo(int n);

inline const Cyclo* cyclo(int n) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const Cyclo>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second.get();
    auto c = build_cyclo(n);
    cache.emplace(n, c);
    return c.get();
}

inline std::vector<long> cyclotomic_poly(int n) {
    // x^n - 1 divided by Phi_d for all proper divisors d.
    std::vector<long> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = poly_div(p, cyclotomic_poly(d));
    return p;
}

inline std::shared_ptr<const Cyclo> build_cyclo(int n) {
    auto c = std::make_shared<Cyclo>();
    c->n = n;
    c->poly = cyclotomic_poly(n);
    c->phi = static_cast<int>(c->poly.size()) - 1;
    const int phi = c->phi;
    c->xpow.assign(n, std::vector<long>(phi, 0));
    std::vector<long> cur(phi, 0);
    cur[0] = 1;
    if (phi == 0) return c;
    for (int k = 0; k < n; ++k) {
        c->xpow[k] = cur;
        // multiply by x, then reduce the overflow coefficient
        long top = cur[phi - 1];
        for (int j = phi - 1; j > 0; --j) cur[j] = cur[j - 1];
        cur[0] = 0;
        for (int j = 0; j < phi; ++j) cur[j] -= top * c->poly[j];
    }
    return c;
}

}  // namespace detail

class Scalar {
public:
    Scalar() : c_(1) {}
    Scalar(long v) : c_{mpq_class(v)} {}  // NOLINT(implicit)
    Scalar(int v) : c_{mpq_class(v)} {}   // NOLINT(implicit)
    Scalar(const mpq_class& q) : c_{q} { c_[0].canonicalize(); }  // NOLINT(implicit)
    static Scalar rational(long p, long q) {
        if (q == 0) throw DivisionByZero();
        mpq_class r(p, q);
        r.canonicalize();
        return Scalar(r);
    }

    // zeta_order^power
    static Scalar root_of_unity(int order, long power) {
        if (order < 1) throw std::invalid_argument("root_of_unity: order must be >= 1");
        long k = ((power % order) + order) % order;
        if (order == 1 || k == 0) return Scalar(1);
        const detail::Cyclo* d = detail::cyclo(order);
        Scalar s;
        s.n_ = order;
        s.d_ = d;
        s.c_.assign(d->phi, mpq_class(0));
        for (int j = 0; j < d->phi; ++j) s.c_[j] = d->xpow[k][j];
        s.normalize();
        return s;
    }

    int conductor() const { return n_; }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    bool is_zero() const { return n_ == 1 && c_[0] == 0; }
    bool is_rational() const { return n_ == 1; }
    const mpq_class& rational_value() const {
        if (n_ != 1) throw std::domain_error("scalar is not rational");
        return c_[0];
    }

    // Lifted copy in Q(zeta_m); m must be a multiple of the conductor.
    Scalar lifted(int m) const {
        if (m == n_) return *this;
        if (m % n_ != 0) throw std::logic_error("lift: conductor does not divide target");
        const detail::Cyclo* d = detail::cyclo(m);
        Scalar s;
        s.n_ = m;
        s.d_ = d;
        s.c_.assign(d->phi, mpq_class(0));
        const int step = m / n_;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] == 0) continue;
            const auto& xp = d->xpow[(k * step) % m];
            for (int j = 0; j < d->phi; ++j)
                if (xp[j] != 0) s.c_[j] += c_[k] * xp[j];
        }
        return s;
    }

    Scalar& operator+=(const Scalar& o) {
        if (o.n_ == 1) {
            c_[0] += o.c_[0];
        } else if (n_ == o.n_) {
            for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
        } else {
            int m = std::lcm(n_, o.n_);
            Scalar a = lifted(m);
            Scalar b = o.lifted(m);
            for (std::size_t j = 0; j < a.c_.size(); ++j) a.c_[j] += b.c_[j];
            *this = std::move(a);
        }
        normalize();
        return *this;
    }
    Scalar& operator-=(const Scalar& o) { return *this += -o; }

    Scalar operator-() const {
        Scalar s = *this;
        for (auto& q : s.c_) q = -q;
        return s;
    }

    Scalar& operator*=(const Scalar& o) {
        if (o.n_ == 1) {
            if (o.c_[0] == 0) return *this = Scalar();
            for (auto& q : c_) q *= o.c_[0];
            return *this;
        }
        if (n_ == 1) {
            mpq_class f = c_[0];
            *this = o;
            if (f == 0) return *this = Scalar();
            for (auto& q : c_) q *= f;
            return *this;
        }
        int m = std::lcm(n_, o.n_);
        const Scalar a = lifted(m);
        const Scalar b = o.lifted(m);
        const detail::Cyclo* d = a.d_;
        std::vector<mpq_class> acc(d->phi, mpq_class(0));
        mpq_class t;
        for (int i = 0; i < d->phi; ++i) {
            if (a.c_[i] == 0) continue;
            for (int j = 0; j < d->phi; ++j) {
                if (b.c_[j] == 0) continue;
                t = a.c_[i] * b.c_[j];
                const auto& xp = d->xpow[(i + j) % m];
                for (int k = 0; k < d->phi; ++k)
                    if (xp[k] != 0) acc[k] += t * xp[k];
            }
        }
        n_ = m;
        d_ = d;
        c_ = std::move(acc);
        normalize();
        return *this;
    }

    Scalar inverse() const {
        if (is_zero()) throw DivisionByZero();
        if (n_ == 1) return Scalar(mpq_class(1 / c_[0]));
        // Solve M y = e_0 where M is the multiplication-by-this matrix.
        const int phi = d_->phi;
        std::vector<std::vector<mpq_class>> M(phi, std::vector<mpq_class>(phi + 1, mpq_class(0)));
        for (int j = 0; j < phi; ++j) {
            Scalar col = *this * Scalar::basis(n_, j);
            Scalar lc = col.lifted(n_);
            for (int i = 0; i < phi; ++i) M[i][j] = lc.c_[i];
        }
        M[0][phi] = 1;
        for (int col = 0, row = 0; col < phi; ++col) {
            int piv = row;
            while (piv < phi && M[piv][col] == 0) ++piv;
            if (piv == phi) throw DivisionByZero();
            std::swap(M[piv], M[row]);
            mpq_class inv = 1 / M[row][col];
            for (int k = col; k <= phi; ++k) M[row][k] *= inv;
            for (int i = 0; i < phi; ++i) {
                if (i == row || M[i][col] == 0) continue;
                mpq_class f = M[i][col];
                for (int k = col; k <= phi; ++k) M[i][k] -= f * M[row][k];
            }
            ++row;
        }
        Scalar s;
        s.n_ = n_;
        s.d_ = d_;
        s.c_.resize(phi);
        for (int i = 0; i < phi; ++i) s.c_[i] = M[i][phi];
        s.normalize();
        return s;
    }

    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    // zeta -> zeta^{-1}
    Scalar conjugate() const {
        if (n_ == 1) return *this;
        Scalar s;
        s.n_ = n_;
        s.d_ = d_;
        s.c_.assign(d_->phi, mpq_class(0));
        for (int k = 0; k < d_->phi; ++k) {
            if (c_[k] == 0) continue;
            const auto& xp = d_->xpow[(n_ - k) % n_];
            for (int j = 0; j < d_->phi; ++j)
                if (xp[j] != 0) s.c_[j] += c_[k] * xp[j];
        }
        s.normalize();
        return s;
    }

    Scalar pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Scalar r(1), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.n_ == b.n_) return a.c_ == b.c_;
        if (a.n_ == 1 || b.n_ == 1) return false;  // normalized: rationals have n == 1
        int m = std::lcm(a.n_, b.n_);
        return a.lifted(m).c_ == b.lifted(m).c_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    // "p/q" for rationals, "cyclo(N)[c0, c1, ...]" otherwise.
    std::string str() const {
        if (n_ == 1) return c_[0].get_str();
        std::string s = "cyclo(" + std::to_string(n_) + ")[";
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (k) s += ", ";
            s += c_[k].get_str();
        }
        return s + "]";
    }

    // Display only: 12 significant digits of the complex embedding zeta = exp(2 pi i / N).
    std::string decimal() const;

    static Scalar parse(const std::string& text);

    // Reduce to the smallest conductor dividing n_ that still holds the value.
    void normalize() {
        if (n_ == 1) return;
        bool rational = true;
        for (std::size_t k = 1; k < c_.size(); ++k)
            if (c_[k] != 0) {
                rational = false;
                break;
            }
        if (rational) {
            mpq_class v = c_[0];
            n_ = 1;
            d_ = nullptr;
            c_.assign(1, v);
        }
    }

private:
    static Scalar basis(int n, int k) {
        Scalar s;
        s.n_ = n;
        s.d_ = detail::cyclo(n);
        s.c_.assign(s.d_->phi, mpq_class(0));
        s.c_[k] = 1;
        return s;
    }

    int n_ = 1;
    const detail::Cyclo* d_ = nullptr;
    std::vector<mpq_class> c_;
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

inline Scalar root_of_unity(int order, long power) { return Scalar::root_of_unity(order, power); }
inline Scalar scalar_inverse(const Scalar& s) { return s.inverse(); }
inline Scalar scalar_conjugate(const Scalar& s) { return s.conjugate(); }
inline Scalar imag_unit() { return Scalar::root_of_unity(4, 1); }

inline std::string Scalar::decimal() const {
    long double re = 0, im = 0;
    const long double tau = 6.283185307179586476925286766559L;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        long double v = c_[k].get_d();
        long double ang = tau * static_cast<long double>(k) / static_cast<long double>(n_);
        re += v * std::cos(ang);
        im += v * std::sin(ang);
    }
    std::ostringstream os;
    os.precision(12);
    auto tidy = [](long double x) { return (x < 1e-13L && x > -1e-13L) ? 0.0L : x; };
    re = tidy(re);
    im = tidy(im);
    if (im == 0) {
        os << static_cast<double>(re);
    } else {
        os << static_cast<double>(re) << (im < 0 ? "-" : "+") << static_cast<double>(im < 0 ? -im : im) << "i";
    }
    return os.str();
}

inline Scalar Scalar::parse(const std::string& text) {
    auto trim = [](std::string s) {
        std::size_t a = s.find_first_not_of(" \t\n\r");
        std::size_t b = s.find_last_not_of(" \t\n\r");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    auto rat = [&](const std::string& raw) {
        std::string t = trim(raw);
        if (t.empty()) throw ParseError("empty rational");
        for (std::size_t i = 0; i < t.size(); ++i) {
            char ch = t[i];
            bool ok = std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || (i == 0 && (ch == '-' || ch == '+'));
            if (!ok) throw ParseError("bad rational '" + t + "'");
        }
        if (t[0] == '+') t = t.substr(1);
        std::size_t slash = t.find('/');
        if (slash != std::string::npos && t.substr(slash + 1).find_first_not_of('0') == std::string::npos)
            throw DivisionByZero();
        mpq_class q;
        if (q.set_str(t, 10) != 0) throw ParseError("bad rational '" + t + "'");
        q.canonicalize();
        return q;
    };
    std::string t = trim(text);
    if (t.rfind("cyclo(", 0) != 0) return Scalar(rat(t));
    std::size_t close = t.find(')');
    std::size_t lb = t.find('[', close == std::string::npos ? 0 : close);
    if (close == std::string::npos || lb == std::string::npos || t.back() != ']')
        throw ParseError("bad cyclotomic literal '" + t + "'");
    int n = 0;
    try {
        n = std::stoi(t.substr(6, close - 6));
    } catch (const std::exception&) {
        throw ParseError("bad conductor in '" + t + "'");
    }
    if (n < 1) throw ParseError("conductor must be positive");
    std::vector<mpq_class> cs;
    std::string body = t.substr(lb + 1, t.size() - lb - 2);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) cs.push_back(rat(item));
    const int phi = n == 1 ? 1 : detail::cyclo(n)->phi;
    if (static_cast<int>(cs.size()) != phi)
        throw ParseError("cyclo(" + std::to_string(n) + ") needs " + std::to_string(phi) + " coefficients");
    Scalar s;
    if (n == 1) return Scalar(cs[0]);
    s.n_ = n;
    s.d_ = detail::cyclo(n);
    s.c_ = std::move(cs);
    s.normalize();
    return s;
}

}  // namespace statesum
