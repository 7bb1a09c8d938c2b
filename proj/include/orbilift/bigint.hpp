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

#ifndef ORBILIFT_BIGINT_HPP
#define ORBILIFT_BIGINT_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "orbilift/common.hpp"

namespace orbilift {

// Sign-magnitude arbitrary-precision integer, base 2^32 limbs little-endian.
// Zero is the empty limb vector with sign 0. Values stay small at desk scale,
// so schoolbook multiplication and shift-subtract division are enough.
class BigInt {
  public:
    BigInt() = default;

    BigInt(long long v) {  // NOLINT(google-explicit-constructor)
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        unsigned long long m =
            v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL : static_cast<unsigned long long>(v);
        while (m != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(m & 0xffffffffULL));
            m >>= 32;
        }
    }

    static BigInt from_string(const std::string& s) {
        BigInt r;
        std::size_t i = 0;
        int sign = 1;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -1;
            ++i;
        }
        if (i >= s.size()) throw Error("BigInt: empty literal");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw Error("BigInt: bad digit in literal '" + s + "'");
            r.mul_small(10);
            r.add_small(static_cast<std::uint32_t>(s[i] - '0'));
        }
        if (!r.limbs_.empty()) r.sign_ = sign;
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    bool is_one() const { return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1; }
    int sign() const { return sign_; }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.sign_ = a.sign_;
        } else {
            const int c = cmp_mag(a.limbs_, b.limbs_);
            if (c == 0) return BigInt();
            if (c > 0) {
                r.limbs_ = sub_mag(a.limbs_, b.limbs_);
                r.sign_ = a.sign_;
            } else {
                r.limbs_ = sub_mag(b.limbs_, a.limbs_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                                    r.limbs_[i + j] + carry;
                r.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
                carry = cur >> 32;
            }
            std::size_t k = i + b.limbs_.size();
            while (carry != 0) {
                std::uint64_t cur = r.limbs_[k] + carry;
                r.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
                carry = cur >> 32;
                ++k;
            }
        }
        r.trim();
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    // Truncated division: quotient rounds toward zero, remainder has the
    // dividend's sign.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw Error("BigInt: division by zero");
        if (cmp_mag(a.limbs_, b.limbs_) < 0) {
            q = BigInt();
            r = a;
            return;
        }
        // binary long division on magnitudes
        BigInt rem;
        BigInt quo;
        quo.limbs_.assign(a.limbs_.size(), 0);
        for (std::size_t bit = a.limbs_.size() * 32; bit-- > 0;) {
            rem.shift_left_1();
            if ((a.limbs_[bit / 32] >> (bit % 32)) & 1U) {
                if (rem.limbs_.empty()) rem.limbs_.push_back(0);
                rem.limbs_[0] |= 1U;
                rem.sign_ = 1;
            }
            if (cmp_mag(rem.limbs_, b.limbs_) >= 0) {
                rem.limbs_ = sub_mag(rem.limbs_, b.limbs_);
                rem.trim();
                quo.limbs_[bit / 32] |= (1U << (bit % 32));
            }
        }
        quo.trim();
        quo.sign_ = quo.limbs_.empty() ? 0 : a.sign_ * b.sign_;
        rem.sign_ = rem.limbs_.empty() ? 0 : a.sign_;
        q = quo;
        r = rem;
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }

    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a.sign_ = a.limbs_.empty() ? 0 : 1;
        b.sign_ = b.limbs_.empty() ? 0 : 1;
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = b;
            b = r;
        }
        return a;
    }

    BigInt pow(unsigned e) const {
        BigInt base = *this, acc = 1;
        while (e != 0) {
            if (e & 1U) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
        const int c = cmp_mag(a.limbs_, b.limbs_);
        return a.sign_ >= 0 ? c < 0 : c > 0;
    }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return a < b || a == b; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return b <= a; }

    // Valid only when the value fits; callers use this for exponents/orders.
    long long to_ll() const {
        unsigned long long m = 0;
        if (limbs_.size() > 2) throw Error("BigInt: value does not fit in 64 bits");
        for (std::size_t i = limbs_.size(); i-- > 0;) m = (m << 32) | limbs_[i];
        return sign_ < 0 ? -static_cast<long long>(m) : static_cast<long long>(m);
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        BigInt t = abs();
        const BigInt big10 = 1000000000LL;
        std::vector<std::uint32_t> chunks;
        while (!t.is_zero()) {
            BigInt q, r;
            divmod(t, big10, q, r);
            chunks.push_back(r.limbs_.empty() ? 0 : r.limbs_[0]);
            t = q;
        }
        out = std::to_string(chunks.back());
        for (std::size_t i = chunks.size() - 1; i-- > 0;) {
            std::string part = std::to_string(chunks[i]);
            out += std::string(9 - part.size(), '0') + part;
        }
        if (sign_ < 0) out.insert(out.begin(), '-');
        return out;
    }

    std::size_t hash() const {
        std::size_t h = static_cast<std::size_t>(sign_ + 2);
        for (std::uint32_t l : limbs_) hash_combine(h, l);
        return h;
    }

  private:
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) sign_ = 0;
    }

    void shift_left_1() {
        std::uint32_t carry = 0;
        for (auto& l : limbs_) {
            const std::uint32_t nc = l >> 31;
            l = (l << 1) | carry;
            carry = nc;
        }
        if (carry != 0) limbs_.push_back(carry);
        if (!limbs_.empty()) sign_ = sign_ == 0 ? 1 : sign_;
    }

    void mul_small(std::uint32_t m) {
        std::uint64_t carry = 0;
        for (auto& l : limbs_) {
            std::uint64_t cur = static_cast<std::uint64_t>(l) * m + carry;
            l = static_cast<std::uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
        }
        while (carry != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffULL));
            carry >>= 32;
        }
        trim();
    }

    void add_small(std::uint32_t v) {
        if (v == 0) return;
        if (limbs_.empty()) {
            limbs_.push_back(v);
            sign_ = 1;
            return;
        }
        std::uint64_t carry = v;
        for (auto& l : limbs_) {
            std::uint64_t cur = static_cast<std::uint64_t>(l) + carry;
            l = static_cast<std::uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
            if (carry == 0) break;
        }
        if (carry != 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::uint64_t cur = carry;
            if (i < a.size()) cur += a[i];
            if (i < b.size()) cur += b[i];
            r[i] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow -
                               (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            if (cur < 0) {
                cur += (1LL << 32);
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<std::uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    std::vector<std::uint32_t> limbs_;
    int sign_ = 0;
};

}  // namespace orbilift

#endif
