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

#ifndef ORBILIFT_RATIONAL_FUNCTION_HPP
#define ORBILIFT_RATIONAL_FUNCTION_HPP

#include <map>
#include <string>
#include <vector>

#include "orbilift/polynomial.hpp"

namespace orbilift {

// Quotient of polynomials. Normal form: denominator monic (grevlex leading
// coefficient 1), zero is 0/1. There is deliberately no multivariate gcd;
// equality is decided by cross-multiplication and reduction happens only
// through exact division (wholesale, or along tracked irreducible factors).
class RationalFunction {
  public:
    RationalFunction() : num_(), den_(Polynomial::constant(1)) {}
    RationalFunction(const Polynomial& p) : num_(p), den_(Polynomial::constant(1)) {}  // NOLINT
    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw Error("RationalFunction: zero denominator");
        normalize();
    }
    RationalFunction(long long v) : num_(Polynomial::constant(v)), den_(Polynomial::constant(1)) {}  // NOLINT

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    bool is_polynomial() const { return den_.is_constant() || exact_divide(num_, den_).has_value(); }

    Polynomial as_polynomial() const {
        if (den_.is_constant()) return num_.scaled(den_.constant_value().inverse());
        auto q = exact_divide(num_, den_);
        if (!q) throw Error("RationalFunction: value is not a polynomial");
        return *q;
    }

    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
        // when one denominator divides the other, share the larger one
        if (auto q = exact_divide(b.den_, a.den_))
            return RationalFunction(a.num_ * *q + b.num_, b.den_);
        if (auto q = exact_divide(a.den_, b.den_))
            return RationalFunction(a.num_ + b.num_ * *q, a.den_);
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return a + (-b);
    }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return RationalFunction();
        // opportunistic cross-cancellation keeps pullback chains small
        Polynomial n1 = a.num_, d1 = a.den_, n2 = b.num_, d2 = b.den_;
        if (!d2.is_constant()) {
            if (auto q = exact_divide(n1, d2)) {
                n1 = *q;
                d2 = Polynomial::constant(1);
            }
        }
        if (!d1.is_constant()) {
            if (auto q = exact_divide(n2, d1)) {
                n2 = *q;
                d1 = Polynomial::constant(1);
            }
        }
        return RationalFunction(n1 * n2, d1 * d2);
    }

    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw Error("RationalFunction: division by zero");
        return a * RationalFunction(b.den_, b.num_);
    }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction scaled(const Cyclotomic& c) const {
        return RationalFunction(num_.scaled(c), den_);
    }

    RationalFunction pow(long long e) const {
        if (e < 0) {
            if (is_zero()) throw Error("RationalFunction: negative power of zero");
            return RationalFunction(den_, num_).pow(-e);
        }
        return RationalFunction(num_.pow(static_cast<unsigned>(e)),
                                den_.pow(static_cast<unsigned>(e)));
    }

    // substitute polynomials for variables in both numerator and denominator
    RationalFunction compose(const std::map<std::string, Polynomial>& sub) const {
        Polynomial n = num_.compose(sub);
        Polynomial d = den_.compose(sub);
        if (d.is_zero()) throw Error("RationalFunction: denominator vanishes under substitution");
        return RationalFunction(n, d);
    }

    RationalFunction renamed(const std::map<std::string, std::string>& names) const {
        return RationalFunction(num_.renamed(names), den_.renamed(names));
    }

    // cancel the given irreducible factors to their full common multiplicity
    RationalFunction reduced_by(const std::vector<Polynomial>& factors) const {
        Polynomial n = num_, d = den_;
        for (const Polynomial& f : factors) {
            if (f.is_constant()) continue;
            while (true) {
                auto qn = exact_divide(n, f);
                if (!qn) break;
                auto qd = exact_divide(d, f);
                if (!qd) break;
                n = *qn;
                d = *qd;
            }
        }
        return RationalFunction(n, d);
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    std::string to_string() const {
        if (den_.is_constant() && den_.constant_value().is_one()) return num_.to_string();
        const bool np = num_.terms().size() > 1;
        const bool dp = den_.terms().size() > 1;
        std::string n = np ? "(" + num_.to_string() + ")" : num_.to_string();
        std::string d = dp ? "(" + den_.to_string() + ")" : den_.to_string();
        return n + "/" + d;
    }

  private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = Polynomial::constant(1);
            return;
        }
        const Cyclotomic lead = den_.leading_coefficient();
        if (!lead.is_one()) {
            const Cyclotomic inv = lead.inverse();
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    Polynomial num_;
    Polynomial den_;
};

// Order of vanishing of f along the (caller-asserted irreducible)
// hypersurface {h = 0}: multiplicity of the numerator minus multiplicity of
// the denominator, infinity for f = 0.
inline ExtOrder rat_order(const RationalFunction& f, const Polynomial& h) {
    if (h.is_constant()) throw Error("rat_order: hypersurface polynomial must be non-constant");
    if (f.is_zero()) return ExtOrder::inf();
    return multiplicity(f.num(), h) - multiplicity(f.den(), h);
}

}  // namespace orbilift

#endif
