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

#ifndef ORBILIFT_INVARIANTS_HPP
#define ORBILIFT_INVARIANTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "orbilift/matrix_group.hpp"
#include "orbilift/polymap.hpp"

namespace orbilift {

// f o g for a linear map: substitute z_i -> sum_j g[i][j] z_j.
inline Polynomial compose_linear(const Polynomial& f, const GroupElement& g,
                                 const VarList& coords) {
    if (g.dim() != coords.size()) throw Error("compose_linear: dimension mismatch");
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

// Averaging projection onto the invariant ring: (1/|G|) sum_g f o g.
inline Polynomial reynolds(const FiniteMatrixGroup& G, const Polynomial& f) {
    Polynomial acc;
    for (const auto& g : G.elements()) acc += compose_linear(f, g, G.coords());
    return acc.scaled(Cyclotomic(BigRational(1, static_cast<long long>(G.order()))));
}

struct InvariantBasis {
    std::vector<Polynomial> generators;  // homogeneous, monic, degree-sorted
    std::vector<unsigned> degrees;
};

struct OrbitMap {
    InvariantBasis basis;
    PolyMap map;  // source z-chart -> target y-chart

    const VarList& source_vars() const { return map.source_vars; }
    const VarList& target_vars() const { return map.target_vars; }
};

// monomials of the given total degree, grevlex descending
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d) {
    std::vector<Monomial> out;
    std::vector<unsigned> cur(nvars, 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
        if (i + 1 == nvars) {
            cur[i] = left;
            out.emplace_back(cur);
            return;
        }
        for (unsigned e = left + 1; e-- > 0;) {
            cur[i] = e;
            rec(i + 1, left - e);
        }
        cur[i] = 0;
    };
    if (nvars == 0) {
        if (d == 0) out.emplace_back();
        return out;
    }
    rec(0, d);
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return GrevlexLess()(b, a); });
    return out;
}

inline Polynomial monomial_to_poly(const Monomial& m, const VarList& vars) {
    Polynomial p = Polynomial::constant(1);
    for (std::size_t i = 0; i < m.exps.size(); ++i)
        if (m.exps[i] > 0) p = p * Polynomial::variable(vars[i]).pow(m.exps[i]);
    return p;
}

namespace detail {

// dense coefficient vector of a homogeneous polynomial on the listed monomials
inline std::vector<Cyclotomic> coeff_vector(const Polynomial& p, const VarList& vars,
                                            const std::vector<Monomial>& monos) {
    Polynomial q = p.aligned_to(vars);
    std::vector<Cyclotomic> v(monos.size(), Cyclotomic::zero());
    for (std::size_t k = 0; k < monos.size(); ++k) v[k] = q.coefficient(monos[k]);
    return v;
}

// all exponent tuples a with sum a_i * deg_i = d
inline void degree_tuples(const std::vector<unsigned>& degs, unsigned d,
                          std::vector<std::vector<unsigned>>& out) {
    std::vector<unsigned> cur(degs.size(), 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
        if (i == degs.size()) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (unsigned a = 0; a * degs[i] <= left; ++a) {
            cur[i] = a;
            rec(i + 1, left - a * degs[i]);
        }
        cur[i] = 0;
    };
    rec(0, d);
}

}  // namespace detail

// Minimal homogeneous generating set of C[V]^G, swept degree by degree up to
// the Noether bound |G|. In each degree the Reynolds images of the monomials
// (grevlex order) are kept only when independent of the span of products of
// generators already selected.
inline InvariantBasis invariant_generators(const FiniteMatrixGroup& G) {
    const VarList& vars = G.coords();
    InvariantBasis basis;
    for (unsigned d = 1; d <= G.order(); ++d) {
        const std::vector<Monomial> monos = monomials_of_degree(vars.size(), d);
        LinearSpan span(monos.size());
        std::vector<std::vector<unsigned>> tuples;
        detail::degree_tuples(basis.degrees, d, tuples);
        for (const auto& t : tuples) {
            Polynomial prod = Polynomial::constant(1);
            bool trivial = true;
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (t[i] == 0) continue;
                trivial = false;
                prod = prod * basis.generators[i].pow(t[i]);
            }
            if (trivial) continue;
            span.insert(detail::coeff_vector(prod, vars, monos));
        }
        for (const auto& m : monos) {
            Polynomial f = reynolds(G, monomial_to_poly(m, vars));
            if (f.is_zero()) continue;
            if (span.insert(detail::coeff_vector(f, vars, monos))) {
                basis.generators.push_back(f.monic());
                basis.degrees.push_back(d);
            }
        }
    }
    return basis;
}

inline VarList orbit_target_vars(std::size_t m) { return default_coords(m, "y"); }

inline OrbitMap orbit_map(const FiniteMatrixGroup& G) {
    OrbitMap om;
    om.basis = invariant_generators(G);
    om.map = PolyMap(G.coords(), orbit_target_vars(om.basis.generators.size()),
                     om.basis.generators);
    return om;
}

inline OrbitMap orbit_map(const FiniteMatrixGroup& G, InvariantBasis basis) {
    OrbitMap om;
    om.basis = std::move(basis);
    om.map = PolyMap(G.coords(), orbit_target_vars(om.basis.generators.size()),
                     om.basis.generators);
    return om;
}

// Rewrite an invariant polynomial as a polynomial in the basis generators.
// Solved degree by degree with exact linear algebra; nullopt when some
// homogeneous component is outside the subalgebra.
inline std::optional<Polynomial> express_in_invariants(const Polynomial& p,
                                                       const InvariantBasis& basis,
                                                       const VarList& source_vars,
                                                       const VarList& target_vars) {
    if (target_vars.size() != basis.generators.size())
        throw Error("express_in_invariants: one target variable per generator required");
    Polynomial result;
    for (const auto& [deg, comp] : p.homogeneous_components()) {
        if (deg == 0) {
            result += comp;
            continue;
        }
        const std::vector<Monomial> monos = monomials_of_degree(source_vars.size(), deg);
        std::vector<std::vector<unsigned>> tuples;
        detail::degree_tuples(basis.degrees, deg, tuples);
        if (tuples.empty()) return std::nullopt;
        CycMatrix A(monos.size(), tuples.size());
        for (std::size_t col = 0; col < tuples.size(); ++col) {
            Polynomial prod = Polynomial::constant(1);
            for (std::size_t i = 0; i < tuples[col].size(); ++i)
                if (tuples[col][i] > 0) prod = prod * basis.generators[i].pow(tuples[col][i]);
            auto v = detail::coeff_vector(prod, source_vars, monos);
            for (std::size_t row = 0; row < monos.size(); ++row) A.at(row, col) = v[row];
        }
        auto b = detail::coeff_vector(comp, source_vars, monos);
        auto x = solve_linear(A, b);
        if (!x) return std::nullopt;
        for (std::size_t col = 0; col < tuples.size(); ++col) {
            if ((*x)[col].is_zero()) continue;
            Polynomial term = Polynomial::constant((*x)[col]);
            for (std::size_t i = 0; i < tuples[col].size(); ++i)
                if (tuples[col][i] > 0)
                    term = term * Polynomial::variable(target_vars[i]).pow(tuples[col][i]);
            result += term;
        }
    }
    return result;
}

}  // namespace orbilift

#endif
