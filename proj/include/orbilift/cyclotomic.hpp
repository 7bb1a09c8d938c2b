/*
   Copyright 2026 The orbilift authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ORBILIFT_CYCLOTOMIC_HPP
#define ORBILIFT_CYCLOTOMIC_HPP

#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include "orbilift/common.hpp"
#include "orbilift/rational.hpp"

namespace orbilift {

// Largest conductor the toolkit will work in. Mixed-conductor arithmetic
// embeds into Q(zeta_lcm); exceeding the cap is an error, not a silent
// precision loss.
inline std::atomic<unsigned>& max_conductor() {
    static std::atomic<unsigned> cap{24};
    return cap;
}

inline void set_max_conductor(unsigned n) { max_conductor().store(n); }

inline unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace detail {

// dense univariate polynomials over Q, low-to-high coefficients, trimmed
using UPoly = std::vector<BigRational>;

inline void utrim(UPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    utrim(r);
    return r;
}

inline UPoly usub(UPoly a, const UPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    utrim(a);
    return a;
}

// division with remainder over the field Q; b must be nonzero
inline void udivmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    if (b.empty()) throw Error("cyclotomic: univariate division by zero");
    r = a;
    q.assign(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, BigRational());
    const BigRational lead = b.back();
    while (r.size() >= b.size()) {
        BigRational c = r.back() / lead;
        const std::size_t shift = r.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
        utrim(r);
    }
    utrim(q);
}

// extended gcd: returns monic g with u*a + v*b = g
inline void uext_gcd(UPoly a, UPoly b, UPoly& g, UPoly& u, UPoly& v) {
    UPoly u0{BigRational(1)}, v0{}, u1{}, v1{BigRational(1)};
    utrim(a);
    utrim(b);
    while (!b.empty()) {
        UPoly q, r;
        udivmod(a, b, q, r);
        UPoly u2 = usub(u0, umul(q, u1));
        UPoly v2 = usub(v0, umul(q, v1));
        a = b;
        b = r;
        u0 = u1;
        v0 = v1;
        u1 = u2;
        v1 = v2;
    }
    g = a;
    u = u0;
    v = v0;
    if (!g.empty() && !g.back().is_one()) {
        const BigRational lead = g.back();
        for (auto& c : g) c /= lead;
        for (auto& c : u) c /= lead;
        for (auto& c : v) c /= lead;
    }
}

// N-th cyclotomic polynomial, memoized; Phi_N = (x^N - 1) / prod_{d|N, d<N} Phi_d
inline const UPoly& cyclotomic_polynomial(unsigned n) {
    static std::map<unsigned, UPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n == 0) throw Error("cyclotomic: conductor must be positive");
    std::function<const UPoly&(unsigned)> get = [&](unsigned m) -> const UPoly& {
        auto found = cache.find(m);
        if (found != cache.end()) return found->second;
        UPoly result;
        if (m == 1) {
            result = {BigRational(-1), BigRational(1)};  // x - 1
        } else {
            UPoly num(m + 1);
            num[0] = BigRational(-1);
            num[m] = BigRational(1);  // x^m - 1
            for (unsigned d = 1; d < m; ++d) {
                if (m % d != 0) continue;
                UPoly q, r;
                udivmod(num, get(d), q, r);
                if (!r.empty()) throw Error("cyclotomic: internal division failure");
                num = q;
            }
            result = num;
        }
        return cache.emplace(m, std::move(result)).first->second;
    };
    return get(n);
}

}  // namespace detail

// Element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^{phi(N)-1},
// reduced modulo Phi_N. Conductor 1 holds the plain rationals. Mixed
// conductors embed into the lcm; equality embeds both sides first.
class Cyclotomic {
  public:
    Cyclotomic() : conductor_(1), coords_(1) {}
    Cyclotomic(const BigRational& r) : conductor_(1), coords_{r} {}  // NOLINT
    Cyclotomic(long long v) : conductor_(1), coords_{BigRational(v)} {}  // NOLINT

    static Cyclotomic zeta(unsigned n) {
        if (n == 0) throw Error("zeta: order must be positive");
        check_cap(n);
        detail::UPoly x{BigRational(0), BigRational(1)};
        return from_upoly(x, n);
    }

    static Cyclotomic zero() { return Cyclotomic(); }
    static Cyclotomic one() { return Cyclotomic(BigRational(1)); }

    unsigned conductor() const { return conductor_; }
    const std::vector<BigRational>& coords() const { return coords_; }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (!c.is_zero()) return false;
        return true;
    }

    bool is_rational() const {
        for (std::size_t i = 1; i < coords_.size(); ++i)
            if (!coords_[i].is_zero()) return false;
        return true;
    }

    // valid when is_rational()
    const BigRational& rational_value() const {
        if (!is_rational()) throw Error("Cyclotomic: value is not rational");
        return coords_[0];
    }

    bool is_one() const { return is_rational() && coords_[0].is_one(); }

    Cyclotomic embedded(unsigned n) const {
        if (n == conductor_) return *this;
        if (n % conductor_ != 0) throw Error("Cyclotomic: embedding target must be a multiple of the conductor");
        check_cap(n);
        const unsigned step = n / conductor_;
        detail::UPoly p;
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (coords_[i].is_zero()) continue;
            const std::size_t e = i * step;
            if (p.size() <= e) p.resize(e + 1);
            p[e] += coords_[i];
        }
        return from_upoly(p, n);
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        const unsigned n = std::lcm(a.conductor_, b.conductor_);
        Cyclotomic x = a.embedded(n), y = b.embedded(n);
        for (std::size_t i = 0; i < y.coords_.size(); ++i) x.coords_[i] += y.coords_[i];
        return x;
    }

    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

    Cyclotomic operator-() const {
        Cyclotomic r = *this;
        for (auto& c : r.coords_) c = -c;
        return r;
    }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        const unsigned n = std::lcm(a.conductor_, b.conductor_);
        Cyclotomic x = a.embedded(n), y = b.embedded(n);
        detail::UPoly p = detail::umul(to_upoly(x), to_upoly(y));
        return from_upoly(p, n);
    }

    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this / o; }

    // inverse via extended Euclid against Phi_N; Phi_N is irreducible over Q,
    // so every nonzero element is a unit
    Cyclotomic inverse() const {
        if (is_zero()) throw Error("Cyclotomic: division by zero");
        if (is_rational()) return Cyclotomic(coords_[0].inverse());
        detail::UPoly g, u, v;
        detail::uext_gcd(to_upoly(*this), detail::cyclotomic_polynomial(conductor_), g, u, v);
        if (g.size() != 1) throw Error("Cyclotomic: inverse failed (not coprime to Phi_N)");
        const BigRational scale = g[0].inverse();
        for (auto& c : u) c *= scale;
        return from_upoly(u, conductor_);
    }

    Cyclotomic pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        Cyclotomic base = *this, acc = one();
        unsigned long long k = static_cast<unsigned long long>(e);
        while (k != 0) {
            if (k & 1ULL) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.conductor_ == b.conductor_) return a.coords_ == b.coords_;
        const unsigned n = std::lcm(a.conductor_, b.conductor_);
        return a.embedded(n).coords_ == b.embedded(n).coords_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    std::string to_string() const {
        if (is_rational()) return coords_[0].to_string();
        std::string out;
        bool first = true;
        for (std::size_t i = coords_.size(); i-- > 0;) {
            const BigRational& c = coords_[i];
            if (c.is_zero()) continue;
            BigRational a = c;
            if (first) {
                if (a.sign() < 0) {
                    out += "-";
                    a = -a;
                }
            } else {
                out += a.sign() < 0 ? " - " : " + ";
                if (a.sign() < 0) a = -a;
            }
            first = false;
            std::string term;
            if (i == 0) {
                term = a.to_string();
            } else {
                std::string z = "zeta(" + std::to_string(conductor_) + ")";
                if (i > 1) z += "^" + std::to_string(i);
                term = a.is_one() ? z : a.to_string() + "*" + z;
            }
            out += term;
        }
        return out.empty() ? "0" : out;
    }

    std::size_t hash() const {
        std::size_t h = conductor_;
        for (const auto& c : coords_) hash_combine(h, c.hash());
        return h;
    }

  private:
    static void check_cap(unsigned n) {
        if (n > max_conductor().load())
            throw Error("Cyclotomic: conductor " + std::to_string(n) + " exceeds cap " +
                        std::to_string(max_conductor().load()) +
                        " (raise with --conductor-max)");
    }

    static detail::UPoly to_upoly(const Cyclotomic& c) {
        detail::UPoly p = c.coords_;
        detail::utrim(p);
        return p;
    }

    static Cyclotomic from_upoly(detail::UPoly p, unsigned n) {
        const detail::UPoly& phi = detail::cyclotomic_polynomial(n);
        const std::size_t deg = phi.size() - 1;
        // reduce mod the monic Phi_N
        while (p.size() > deg) {
            const BigRational c = p.back();
            const std::size_t shift = p.size() - phi.size();
            for (std::size_t i = 0; i < phi.size(); ++i) p[shift + i] -= c * phi[i];
            detail::utrim(p);
        }
        Cyclotomic r;
        r.conductor_ = n;
        r.coords_.assign(deg == 0 ? 1 : deg, BigRational());
        for (std::size_t i = 0; i < p.size(); ++i) r.coords_[i] = p[i];
        return r;
    }

    unsigned conductor_;
    std::vector<BigRational> coords_;
};

}  // namespace orbilift

#endif
