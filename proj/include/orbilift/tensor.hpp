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

#ifndef ORBILIFT_TENSOR_HPP
#define ORBILIFT_TENSOR_HPP

#include <map>
#include <string>
#include <vector>

#include "orbilift/invariants.hpp"
#include "orbilift/matrix_group.hpp"
#include "orbilift/polymap.hpp"
#include "orbilift/rational_function.hpp"

namespace orbilift {

// Multi-index into a tensor component: the first p entries are contravariant
// slots (d/dy^i), the remaining q entries covariant slots (dy^j).
using MultiIndex = std::vector<unsigned>;

// Type-(p,q) tensor field with rational-function components. Absent
// components are zero; zero values are never stored.
class TensorField {
  public:
    TensorField() = default;
    TensorField(unsigned p, unsigned q, VarList coords)
        : p_(p), q_(q), coords_(std::move(coords)) {}

    unsigned p() const { return p_; }
    unsigned q() const { return q_; }
    unsigned rank() const { return p_ + q_; }
    const VarList& coords() const { return coords_; }
    std::size_t dim() const { return coords_.size(); }
    const std::map<MultiIndex, RationalFunction>& components() const { return comps_; }

    bool is_zero() const { return comps_.empty(); }

    RationalFunction component(const MultiIndex& idx) const {
        auto it = comps_.find(idx);
        return it == comps_.end() ? RationalFunction() : it->second;
    }

    void set_component(const MultiIndex& idx, const RationalFunction& v) {
        if (idx.size() != rank()) throw Error("TensorField: multi-index length mismatch");
        for (unsigned i : idx)
            if (i >= coords_.size()) throw Error("TensorField: index out of range");
        if (v.is_zero())
            comps_.erase(idx);
        else
            comps_[idx] = v;
    }

    void add_component(const MultiIndex& idx, const RationalFunction& v) {
        set_component(idx, component(idx) + v);
    }

    TensorField scaled(const RationalFunction& f) const {
        TensorField r(p_, q_, coords_);
        if (f.is_zero()) return r;
        for (const auto& [idx, v] : comps_) r.set_component(idx, v * f);
        return r;
    }

    friend TensorField operator+(const TensorField& a, const TensorField& b) {
        if (a.p_ != b.p_ || a.q_ != b.q_ || a.coords_ != b.coords_)
            throw Error("TensorField: sum of incompatible tensors");
        TensorField r = a;
        for (const auto& [idx, v] : b.comps_) r.add_component(idx, v);
        return r;
    }

    friend bool operator==(const TensorField& a, const TensorField& b) {
        if (a.p_ != b.p_ || a.q_ != b.q_ || a.coords_ != b.coords_) return false;
        for (const auto& [idx, v] : a.comps_)
            if (b.component(idx) != v) return false;
        for (const auto& [idx, v] : b.comps_)
            if (a.component(idx) != v) return false;
        return true;
    }
    friend bool operator!=(const TensorField& a, const TensorField& b) { return !(a == b); }

    // embed into a chart with more coordinates (index positions remapped by name)
    TensorField rebased(const VarList& new_coords) const {
        std::vector<unsigned> pos(coords_.size());
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            auto it = std::find(new_coords.begin(), new_coords.end(), coords_[i]);
            if (it == new_coords.end())
                throw Error("TensorField: coordinate " + coords_[i] + " not present in chart");
            pos[i] = static_cast<unsigned>(it - new_coords.begin());
        }
        TensorField r(p_, q_, new_coords);
        for (const auto& [idx, v] : comps_) {
            MultiIndex nidx(idx.size());
            for (std::size_t k = 0; k < idx.size(); ++k) nidx[k] = pos[idx[k]];
            r.set_component(nidx, v);
        }
        return r;
    }

    std::string to_string() const {
        if (comps_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [idx, v] : comps_) {
            if (!first) out += " + ";
            first = false;
            std::string slots;
            for (unsigned k = 0; k < p_; ++k) {
                if (!slots.empty()) slots += " (x) ";
                slots += "ddy(" + coords_[idx[k]] + ")";
            }
            for (unsigned l = 0; l < q_; ++l) {
                if (!slots.empty()) slots += " (x) ";
                slots += "d(" + coords_[idx[p_ + l]] + ")";
            }
            std::string coeff = v.to_string();
            const bool parens = coeff.find(' ') != std::string::npos;
            if (parens) coeff = "(" + coeff + ")";
            if (slots.empty())
                out += coeff;
            else
                out += coeff == "1" ? slots : coeff + "*" + slots;
        }
        return out;
    }

  private:
    unsigned p_ = 0, q_ = 0;
    VarList coords_;
    std::map<MultiIndex, RationalFunction> comps_;
};

namespace detail {

inline RationalFunction rf_compose_linear(const RationalFunction& f, const GroupElement& g,
                                          const VarList& coords) {
    std::map<std::string, Polynomial> sub;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        Polynomial row;
        for (std::size_t j = 0; j < coords.size(); ++j) {
            const Cyclotomic& c = g.matrix().at(i, j);
            if (!c.is_zero()) row += Polynomial::variable(coords[j]).scaled(c);
        }
        sub[coords[i]] = row;
    }
    return f.compose(sub);
}

inline void enumerate_indices(std::size_t len, unsigned base, std::vector<MultiIndex>& out) {
    MultiIndex cur(len, 0);
    while (true) {
        out.push_back(cur);
        std::size_t k = len;
        while (k > 0) {
            if (++cur[k - 1] < base) break;
            cur[k - 1] = 0;
            --k;
        }
        if (k == 0) break;
    }
    if (len == 0) out.assign(1, MultiIndex{});
}

}  // namespace detail

// The linear action of g on tensor fields (pushforward): arguments composed
// with g^{-1} z, contravariant slots transformed by g, covariant slots by
// g^{-1}. Satisfies act(g1, act(g2, T)) = act(g1*g2, T).
inline TensorField act(const GroupElement& g, const TensorField& T) {
    if (g.dim() != T.dim()) throw Error("act: dimension mismatch");
    const GroupElement ginv = g.inverse();
    TensorField r(T.p(), T.q(), T.coords());
    const unsigned n = static_cast<unsigned>(T.dim());
    std::vector<MultiIndex> all;
    detail::enumerate_indices(T.rank(), n, all);
    for (const auto& [idx, v] : T.components()) {
        const RationalFunction moved = detail::rf_compose_linear(v, ginv, T.coords());
        for (const auto& target : all) {
            Cyclotomic factor = Cyclotomic::one();
            for (unsigned k = 0; k < T.p(); ++k) {
                factor *= g.matrix().at(target[k], idx[k]);
                if (factor.is_zero()) break;
            }
            if (!factor.is_zero()) {
                for (unsigned l = 0; l < T.q(); ++l) {
                    factor *= ginv.matrix().at(idx[T.p() + l], target[T.p() + l]);
                    if (factor.is_zero()) break;
                }
            }
            if (factor.is_zero()) continue;
            r.add_component(target, moved.scaled(factor));
        }
    }
    return r;
}

// invariance under the generators is invariance under the whole group
inline bool is_invariant(const FiniteMatrixGroup& G, const TensorField& T) {
    if (G.dim() != T.dim()) throw Error("is_invariant: dimension mismatch");
    for (const auto& g : G.generators())
        if (act(g, T) != T) return false;
    return true;
}

// averaging projection onto invariant tensor fields
inline TensorField reynolds_tensor(const FiniteMatrixGroup& G, const TensorField& T) {
    TensorField acc(T.p(), T.q(), T.coords());
    for (const auto& g : G.elements()) acc = acc + act(g, T);
    const Cyclotomic scale = Cyclotomic(BigRational(1, static_cast<long long>(G.order())));
    return acc.scaled(RationalFunction(Polynomial::constant(scale)));
}

// Pullback along a polynomial map with square invertible Jacobian. Covariant
// slots transform by J, contravariant slots by J^{-1} = adj(J)/det(J); the
// result lives on the source chart, with denominators dividing a power of
// det(J) times the pulled-back component denominators.
inline TensorField pullback(const TensorField& T, const PolyMap& f) {
    if (f.source_dim() != f.target_dim()) throw Error("non-square orbit map");
    if (T.coords() != f.target_vars) throw Error("pullback: tensor does not live on the target chart");
    const auto J = jacobian(f);
    const Polynomial det = poly_det(J);
    if (det.is_zero()) throw Error("pullback: degenerate Jacobian");
    const auto adj = poly_adjugate(J);
    const auto sub = f.substitution();
    const unsigned n = static_cast<unsigned>(f.source_dim());

    TensorField r(T.p(), T.q(), f.source_vars);
    std::vector<MultiIndex> all;
    detail::enumerate_indices(T.rank(), n, all);
    const RationalFunction det_inv(Polynomial::constant(1), det);
    for (const auto& [idx, v] : T.components()) {
        const RationalFunction composed = v.compose(sub);
        for (const auto& target : all) {
            Polynomial factor = Polynomial::constant(1);
            bool zero = false;
            for (unsigned k = 0; k < T.p() && !zero; ++k) {
                const Polynomial& e = adj[target[k]][idx[k]];
                if (e.is_zero()) zero = true;
                else factor = factor * e;
            }
            for (unsigned l = 0; l < T.q() && !zero; ++l) {
                const Polynomial& e = J[idx[T.p() + l]][target[T.p() + l]];
                if (e.is_zero()) zero = true;
                else factor = factor * e;
            }
            if (zero) continue;
            RationalFunction term = composed * RationalFunction(factor);
            for (unsigned k = 0; k < T.p(); ++k) term = term * det_inv;
            r.add_component(target, term);
        }
    }
    return r;
}

// Formal integer (or infinite) combination of irreducible hypersurfaces.
// Hypersurfaces are kept monic and pairwise distinct.
class Divisor {
  public:
    struct Term {
        Polynomial hypersurface;
        ExtOrder coefficient;
    };

    void set(const Polynomial& h, ExtOrder c) {
        if (h.is_constant()) throw Error("Divisor: hypersurface must be non-constant");
        Polynomial hm = h.monic();
        for (auto& t : terms_) {
            if (t.hypersurface == hm) {
                t.coefficient = c;
                return;
            }
        }
        terms_.push_back(Term{hm, c});
    }

    ExtOrder coefficient(const Polynomial& h) const {
        Polynomial hm = h.monic();
        for (const auto& t : terms_)
            if (t.hypersurface == hm) return t.coefficient;
        return ExtOrder::finite(0);
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    bool nonnegative() const {
        for (const auto& t : terms_)
            if (t.coefficient < ExtOrder::finite(0)) return false;
        return true;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& t : terms_) {
            if (!out.empty()) out += " + ";
            out += t.coefficient.to_string() + "*{" + t.hypersurface.to_string() + " = 0}";
        }
        return out;
    }

  private:
    std::vector<Term> terms_;
};

// div(T) on the given hypersurfaces: at each h the minimum of rat_order over
// the nonzero components; the zero tensor has order infinity everywhere.
inline Divisor tensor_divisor(const TensorField& T, const std::vector<Polynomial>& hypersurfaces) {
    Divisor D;
    for (const auto& h : hypersurfaces) {
        ExtOrder m = ExtOrder::inf();
        for (const auto& [idx, v] : T.components()) m = ExtOrder::min(m, rat_order(v, h));
        D.set(h, m);
    }
    return D;
}

// holomorphic = every component reduces to a polynomial
inline bool is_holomorphic(const TensorField& T) {
    for (const auto& [idx, v] : T.components())
        if (!v.is_polynomial()) return false;
    return true;
}

// skew-symmetry in the covariant slots, checked on adjacent transpositions
inline bool is_skew_covariant(const TensorField& T) {
    if (T.q() < 2) return true;
    for (const auto& [idx, v] : T.components()) {
        for (unsigned l = 0; l + 1 < T.q(); ++l) {
            MultiIndex swapped = idx;
            std::swap(swapped[T.p() + l], swapped[T.p() + l + 1]);
            if (T.component(swapped) != -v) return false;
        }
    }
    return true;
}

}  // namespace orbilift

#endif
