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

#ifndef ORBILIFT_RATIONAL_HPP
#define ORBILIFT_RATIONAL_HPP

#include <string>
#include <utility>

#include "orbilift/bigint.hpp"
#include "orbilift/common.hpp"

namespace orbilift {

// Exact rational number. Canonical form: gcd(|num|, den) = 1, den > 0,
// zero is 0/1. Equality is coordinate-wise on the canonical form.
class BigRational {
  public:
    BigRational() : num_(0), den_(1) {}
    BigRational(long long v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
    BigRational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT
    BigRational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    BigRational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    BigRational operator-() const {
        BigRational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend BigRational operator+(const BigRational& a, const BigRational& b) {
        return BigRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend BigRational operator-(const BigRational& a, const BigRational& b) { return a + (-b); }
    friend BigRational operator*(const BigRational& a, const BigRational& b) {
        return BigRational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend BigRational operator/(const BigRational& a, const BigRational& b) {
        if (b.is_zero()) throw Error("BigRational: division by zero");
        return BigRational(a.num_ * b.den_, a.den_ * b.num_);
    }

    BigRational& operator+=(const BigRational& o) { return *this = *this + o; }
    BigRational& operator-=(const BigRational& o) { return *this = *this - o; }
    BigRational& operator*=(const BigRational& o) { return *this = *this * o; }
    BigRational& operator/=(const BigRational& o) { return *this = *this / o; }

    BigRational inverse() const {
        if (is_zero()) throw Error("BigRational: inverse of zero");
        return BigRational(den_, num_);
    }

    friend bool operator==(const BigRational& a, const BigRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return !(a == b); }
    friend bool operator<(const BigRational& a, const BigRational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

    std::size_t hash() const {
        std::size_t h = num_.hash();
        hash_combine(h, den_.hash());
        return h;
    }

  private:
    void normalize() {
        if (den_.is_zero()) throw Error("BigRational: zero denominator");
        if (num_.is_zero()) {
            den_ = 1;
            return;
        }
        if (den_.is_negative()) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }

    BigInt num_;
    BigInt den_;
};

}  // namespace orbilift

#endif
