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

#ifndef ORBILIFT_POLYMAP_HPP
#define ORBILIFT_POLYMAP_HPP

#include <map>
#include <string>
#include <vector>

#include "orbilift/rational_function.hpp"

namespace orbilift {

// Polynomial map between coordinate charts: target_vars[a] = components[a],
// a polynomial in source_vars.
struct PolyMap {
    VarList source_vars;
    VarList target_vars;
    std::vector<Polynomial> components;

    PolyMap() = default;
    PolyMap(VarList src, VarList dst, std::vector<Polynomial> comps)
        : source_vars(std::move(src)), target_vars(std::move(dst)), components(std::move(comps)) {
        if (target_vars.size() != components.size())
            throw Error("PolyMap: one component per target variable required");
    }

    static PolyMap identity(const VarList& vars) {
        std::vector<Polynomial> comps;
        for (const auto& v : vars) comps.push_back(Polynomial::variable(v));
        return PolyMap(vars, vars, comps);
    }

    std::size_t source_dim() const { return source_vars.size(); }
    std::size_t target_dim() const { return target_vars.size(); }

    std::map<std::string, Polynomial> substitution() const {
        std::map<std::string, Polynomial> sub;
        for (std::size_t a = 0; a < target_vars.size(); ++a) sub[target_vars[a]] = components[a];
        return sub;
    }

    // pull a polynomial on the target back to the source: p o f
    Polynomial pull(const Polynomial& p) const { return p.compose(substitution()); }
    RationalFunction pull(const RationalFunction& f) const { return f.compose(substitution()); }

    // f.after(g) is the composite x -> f(g(x))
    PolyMap after(const PolyMap& g) const {
        if (g.target_vars != source_vars)
            throw Error("PolyMap: charts do not match under composition");
        std::vector<Polynomial> comps;
        for (const auto& c : components) comps.push_back(g.pull(c));
        return PolyMap(g.source_vars, target_vars, comps);
    }
};

// Jacobian matrix: entry (a, i) = d components[a] / d source_vars[i].
inline std::vector<std::vector<Polynomial>> jacobian(const PolyMap& f) {
    std::vector<std::vector<Polynomial>> J(f.target_dim(),
                                           std::vector<Polynomial>(f.source_dim()));
    for (std::size_t a = 0; a < f.target_dim(); ++a)
        for (std::size_t i = 0; i < f.source_dim(); ++i)
            J[a][i] = f.components[a].derivative(f.source_vars[i]);
    return J;
}

// cofactor expansion; fine for the small chart dimensions this library works in
inline Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw Error("poly_det: non-square matrix");
    if (n == 0) return Polynomial::constant(1);
    if (n == 1) return m[0][0];
    Polynomial det;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Polynomial>> minor(n - 1, std::vector<Polynomial>(n - 1));
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == j) continue;
                minor[i - 1][cc++] = m[i][k];
            }
        }
        Polynomial term = m[0][j] * poly_det(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

inline Polynomial jacobian_det(const PolyMap& f) {
    if (f.source_dim() != f.target_dim()) throw Error("non-square orbit map");
    return poly_det(jacobian(f));
}

// adjugate: adj(M) * M = det(M) * I
inline std::vector<std::vector<Polynomial>> poly_adjugate(
    const std::vector<std::vector<Polynomial>>& m) {
    const std::size_t n = m.size();
    std::vector<std::vector<Polynomial>> adj(n, std::vector<Polynomial>(n));
    if (n == 1) {
        adj[0][0] = Polynomial::constant(1);
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::vector<Polynomial>> minor(n - 1, std::vector<Polynomial>(n - 1));
            std::size_t rr = 0;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == i) continue;
                std::size_t cc = 0;
                for (std::size_t c = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor[rr][cc++] = m[r][c];
                }
                ++rr;
            }
            Polynomial cof = poly_det(minor);
            adj[j][i] = ((i + j) % 2 == 0) ? cof : -cof;  // transpose of cofactors
        }
    }
    return adj;
}

}  // namespace orbilift

#endif
