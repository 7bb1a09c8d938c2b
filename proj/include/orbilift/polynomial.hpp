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

#ifndef ORBILIFT_POLYNOMIAL_HPP
#define ORBILIFT_POLYNOMIAL_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbilift/common.hpp"
#include "orbilift/cyclotomic.hpp"

namespace orbilift {

using VarList = std::vector<std::string>;

// Exponent vector relative to a polynomial's variable list. Equality is
// trailing-zero-insensitive; ordering is graded reverse lexicographic.
struct Monomial {
    std::vector<unsigned> exps;

    Monomial() = default;
    explicit Monomial(std::vector<unsigned> e) : exps(std::move(e)) { trim(); }

    void trim() {
        while (!exps.empty() && exps.back() == 0) exps.pop_back();
    }

    unsigned degree() const {
        unsigned d = 0;
        for (unsigned e : exps) d += e;
        return d;
    }

    unsigned exp(std::size_t i) const { return i < exps.size() ? exps[i] : 0; }

    bool is_constant() const { return exps.empty(); }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        std::vector<unsigned> e(std::max(a.exps.size(), b.exps.size()), 0);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exp(i) + b.exp(i);
        return Monomial(std::move(e));
    }

    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < std::max(exps.size(), m.exps.size()); ++i)
            if (exp(i) > m.exp(i)) return false;
        return true;
    }

    Monomial quotient(const Monomial& d) const {
        std::vector<unsigned> e(std::max(exps.size(), d.exps.size()), 0);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = exp(i) - d.exp(i);
        return Monomial(std::move(e));
    }
};

// grevlex: compare by total degree, ties broken so that among equal degrees
// the monomial with the larger exponent further right is the smaller one
struct GrevlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const unsigned da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        const std::size_t n = std::max(a.exps.size(), b.exps.size());
        for (std::size_t i = n; i-- > 0;) {
            const long d = static_cast<long>(a.exp(i)) - static_cast<long>(b.exp(i));
            if (d != 0) return d > 0;
        }
        return false;
    }
};

// Integer extended with +infinity; the order of the zero function along any
// hypersurface.
struct ExtOrder {
    bool infinite = false;
    long long v = 0;

    static ExtOrder inf() { return ExtOrder{true, 0}; }
    static ExtOrder finite(long long k) { return ExtOrder{false, k}; }

    friend bool operator==(const ExtOrder& a, const ExtOrder& b) {
        return a.infinite == b.infinite && (a.infinite || a.v == b.v);
    }
    friend bool operator!=(const ExtOrder& a, const ExtOrder& b) { return !(a == b); }
    friend bool operator<(const ExtOrder& a, const ExtOrder& b) {
        if (a.infinite) return false;
        if (b.infinite) return true;
        return a.v < b.v;
    }
    friend bool operator>=(const ExtOrder& a, const ExtOrder& b) { return !(a < b); }

    friend ExtOrder operator-(const ExtOrder& a, const ExtOrder& b) {
        if (a.infinite && b.infinite) throw Error("ExtOrder: inf - inf is undefined");
        if (a.infinite) return inf();
        if (b.infinite) throw Error("ExtOrder: finite - inf is undefined");
        return finite(a.v - b.v);
    }
    friend ExtOrder operator+(const ExtOrder& a, long long k) {
        return a.infinite ? inf() : finite(a.v + k);
    }
    static ExtOrder min(const ExtOrder& a, const ExtOrder& b) { return a < b ? a : b; }

    std::string to_string() const { return infinite ? "inf" : std::to_string(v); }
};

// Sparse multivariate polynomial over Q(zeta). The variable list is kept
// sorted (natural order) and terms are stored grevlex-ascending, so printing,
// hashing and leading-term queries are canonical. No zero coefficient is
// ever stored.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Cyclotomic, GrevlexLess>;

    Polynomial() = default;

    static Polynomial constant(const Cyclotomic& c) {
        Polynomial p;
        if (!c.is_zero()) p.terms_.emplace(Monomial(), c);
        return p;
    }
    static Polynomial constant(long long v) { return constant(Cyclotomic(v)); }

    static Polynomial variable(const std::string& name) {
        Polynomial p;
        p.vars_ = {name};
        p.terms_.emplace(Monomial({1}), Cyclotomic::one());
        return p;
    }

    const VarList& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
    }

    Cyclotomic constant_value() const {
        if (is_zero()) return Cyclotomic::zero();
        if (!is_constant()) throw Error("Polynomial: not a constant");
        return terms_.begin()->second;
    }

    long total_degree() const {
        if (is_zero()) return -1;
        return static_cast<long>(terms_.rbegin()->first.degree());
    }

    // leading term in grevlex
    const Monomial& leading_monomial() const {
        if (is_zero()) throw Error("Polynomial: leading term of zero");
        return terms_.rbegin()->first;
    }
    const Cyclotomic& leading_coefficient() const {
        if (is_zero()) throw Error("Polynomial: leading term of zero");
        return terms_.rbegin()->second;
    }

    // copy with variables extended to the given sorted superset
    Polynomial aligned_to(const VarList& target) const {
        Polynomial r;
        r.vars_ = target;
        std::vector<std::size_t> pos(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto it = std::lower_bound(target.begin(), target.end(), vars_[i], NaturalLess());
            if (it == target.end() || *it != vars_[i])
                throw Error("Polynomial: aligned_to target is not a superset");
            pos[i] = static_cast<std::size_t>(it - target.begin());
        }
        for (const auto& [m, c] : terms_) {
            std::vector<unsigned> e(target.size(), 0);
            for (std::size_t i = 0; i < m.exps.size(); ++i) e[pos[i]] = m.exps[i];
            r.terms_.emplace(Monomial(std::move(e)), c);
        }
        return r;
    }

    static VarList merge_vars(const VarList& a, const VarList& b) {
        VarList out;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                       NaturalLess());
        return out;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        const VarList vars = merge_vars(a.vars_, b.vars_);
        Polynomial x = a.aligned_to(vars), y = b.aligned_to(vars);
        for (const auto& [m, c] : y.terms_) x.add_term(m, c);
        return x;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        const VarList vars = merge_vars(a.vars_, b.vars_);
        Polynomial x = a.aligned_to(vars), y = b.aligned_to(vars);
        Polynomial r;
        r.vars_ = vars;
        for (const auto& [ma, ca] : x.terms_)
            for (const auto& [mb, cb] : y.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const Cyclotomic& c) const {
        if (c.is_zero()) return Polynomial();
        Polynomial r = *this;
        for (auto& [m, coeff] : r.terms_) coeff = coeff * c;
        return r;
    }

    Polynomial pow(unsigned e) const {
        Polynomial acc = constant(1), base = *this;
        while (e != 0) {
            if (e & 1U) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return scaled(leading_coefficient().inverse());
    }

    Polynomial derivative(const std::string& var) const {
        auto it = std::find(vars_.begin(), vars_.end(), var);
        if (it == vars_.end()) return Polynomial();
        const std::size_t k = static_cast<std::size_t>(it - vars_.begin());
        Polynomial r;
        r.vars_ = vars_;
        for (const auto& [m, c] : terms_) {
            const unsigned e = m.exp(k);
            if (e == 0) continue;
            std::vector<unsigned> ne(m.exps);
            ne.resize(std::max<std::size_t>(ne.size(), k + 1), 0);
            ne[k] = e - 1;
            r.add_term(Monomial(std::move(ne)), c * Cyclotomic(static_cast<long long>(e)));
        }
        return r;
    }

    // substitute polynomials for a subset of variables
    Polynomial compose(const std::map<std::string, Polynomial>& sub) const {
        Polynomial result;
        std::map<std::string, std::vector<Polynomial>> pow_cache;
        for (const auto& [m, c] : terms_) {
            Polynomial term = constant(c);
            for (std::size_t i = 0; i < m.exps.size(); ++i) {
                const unsigned e = m.exps[i];
                if (e == 0) continue;
                const std::string& v = vars_[i];
                auto it = sub.find(v);
                const Polynomial base = it != sub.end() ? it->second : variable(v);
                auto& powers = pow_cache[v];
                if (powers.empty()) powers.push_back(constant(1));
                while (powers.size() <= e) powers.push_back(powers.back() * base);
                term = term * powers[e];
            }
            result += term;
        }
        return result;
    }

    Cyclotomic evaluate(const std::map<std::string, Cyclotomic>& point) const {
        Cyclotomic acc = Cyclotomic::zero();
        for (const auto& [m, c] : terms_) {
            Cyclotomic t = c;
            for (std::size_t i = 0; i < m.exps.size(); ++i) {
                if (m.exps[i] == 0) continue;
                auto it = point.find(vars_[i]);
                if (it == point.end())
                    throw Error("Polynomial: evaluate is missing a value for " + vars_[i]);
                t = t * it->second.pow(m.exps[i]);
            }
            acc += t;
        }
        return acc;
    }

    // rename variables; the map must be injective on vars()
    Polynomial renamed(const std::map<std::string, std::string>& names) const {
        VarList nv;
        std::vector<std::string> image(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto it = names.find(vars_[i]);
            image[i] = it != names.end() ? it->second : vars_[i];
            nv.push_back(image[i]);
        }
        std::sort(nv.begin(), nv.end(), NaturalLess());
        if (std::adjacent_find(nv.begin(), nv.end()) != nv.end())
            throw Error("Polynomial: renaming is not injective");
        std::vector<std::size_t> pos(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto it = std::lower_bound(nv.begin(), nv.end(), image[i], NaturalLess());
            pos[i] = static_cast<std::size_t>(it - nv.begin());
        }
        Polynomial r;
        r.vars_ = nv;
        for (const auto& [m, c] : terms_) {
            std::vector<unsigned> e(nv.size(), 0);
            for (std::size_t i = 0; i < m.exps.size(); ++i) e[pos[i]] = m.exps[i];
            r.terms_.emplace(Monomial(std::move(e)), c);
        }
        return r;
    }

    bool is_homogeneous() const {
        if (is_zero()) return true;
        const unsigned d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

    std::map<unsigned, Polynomial> homogeneous_components() const {
        std::map<unsigned, Polynomial> out;
        for (const auto& [m, c] : terms_) {
            auto& comp = out[m.degree()];
            if (comp.vars_.empty()) comp.vars_ = vars_;
            comp.terms_.emplace(m, c);
        }
        return out;
    }

    Cyclotomic coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Cyclotomic::zero() : it->second;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        const VarList vars = merge_vars(a.vars_, b.vars_);
        Polynomial x = a.aligned_to(vars), y = b.aligned_to(vars);
        if (x.terms_.size() != y.terms_.size()) return false;
        auto it = x.terms_.begin();
        auto jt = y.terms_.begin();
        for (; it != x.terms_.end(); ++it, ++jt) {
            if (it->first != jt->first || it->second != jt->second) return false;
        }
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Monomial& m = it->first;
            Cyclotomic c = it->second;
            std::string sign;
            if (c.is_rational() && c.rational_value().sign() < 0) {
                sign = first ? "-" : " - ";
                c = -c;
            } else {
                sign = first ? "" : " + ";
            }
            first = false;
            std::string mono;
            for (std::size_t i = 0; i < m.exps.size(); ++i) {
                if (m.exps[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += vars_[i];
                if (m.exps[i] > 1) mono += "^" + std::to_string(m.exps[i]);
            }
            std::string cs = c.to_string();
            const bool needs_parens = !c.is_rational();
            if (needs_parens) cs = "(" + cs + ")";
            if (mono.empty()) {
                out += sign + cs;
            } else if (c.is_one()) {
                out += sign + mono;
            } else {
                out += sign + cs + "*" + mono;
            }
        }
        return out;
    }

  private:
    void add_term(const Monomial& m, const Cyclotomic& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    VarList vars_;
    TermMap terms_;
};

inline Polynomial operator*(const Cyclotomic& c, const Polynomial& p) { return p.scaled(c); }

// Exact single-divisor division. Greedy leading-term cancellation in grevlex:
// if h divides p the run ends with remainder zero, otherwise some leading
// term is not divisible and we report failure.
inline std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& h) {
    if (h.is_zero()) throw Error("exact_divide: division by zero polynomial");
    if (p.is_zero()) return Polynomial();
    const VarList vars = Polynomial::merge_vars(p.vars(), h.vars());
    Polynomial rem = p.aligned_to(vars);
    Polynomial div = h.aligned_to(vars);
    Polynomial quot;
    const Monomial& lm_h = div.leading_monomial();
    const Cyclotomic& lc_h = div.leading_coefficient();
    while (!rem.is_zero()) {
        const Monomial& lm = rem.leading_monomial();
        if (!lm_h.divides(lm)) return std::nullopt;
        Polynomial t;
        t = Polynomial::constant(rem.leading_coefficient() / lc_h);
        Polynomial mono_poly;
        {
            // build the monomial factor lm / lm_h as a polynomial
            Monomial q = lm.quotient(lm_h);
            Polynomial mp = Polynomial::constant(1);
            for (std::size_t i = 0; i < q.exps.size(); ++i)
                if (q.exps[i] > 0) mp = mp * Polynomial::variable(vars[i]).pow(q.exps[i]);
            mono_poly = mp;
        }
        Polynomial step = t * mono_poly;
        quot += step;
        rem -= step * div;
    }
    return quot;
}

// Largest k with h^k dividing p; infinity for p = 0.
inline ExtOrder multiplicity(const Polynomial& p, const Polynomial& h) {
    if (h.is_constant()) throw Error("multiplicity: hypersurface polynomial must be non-constant");
    if (p.is_zero()) return ExtOrder::inf();
    long long k = 0;
    Polynomial cur = p;
    while (true) {
        auto q = exact_divide(cur, h);
        if (!q) return ExtOrder::finite(k);
        cur = *q;
        ++k;
    }
}

}  // namespace orbilift

#endif
