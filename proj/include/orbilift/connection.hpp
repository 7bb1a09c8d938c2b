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

#ifndef ORBILIFT_CONNECTION_HPP
#define ORBILIFT_CONNECTION_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "orbilift/tensor.hpp"

namespace orbilift {

// Linear connection through its Christoffel components Gamma^a_{bc}. Only
// the index chart is recorded; the component expressions live in whatever
// variables the producing operation documents.
class ChristoffelConnection {
  public:
    using Index = std::array<unsigned, 3>;  // (upper, lower1, lower2)

    ChristoffelConnection() = default;
    explicit ChristoffelConnection(VarList coords) : coords_(std::move(coords)) {}

    const VarList& coords() const { return coords_; }
    std::size_t dim() const { return coords_.size(); }
    const std::map<Index, RationalFunction>& components() const { return comps_; }

    RationalFunction component(unsigned a, unsigned b, unsigned c) const {
        auto it = comps_.find(Index{a, b, c});
        return it == comps_.end() ? RationalFunction() : it->second;
    }

    void set_component(unsigned a, unsigned b, unsigned c, const RationalFunction& v) {
        if (a >= dim() || b >= dim() || c >= dim())
            throw Error("ChristoffelConnection: index out of range");
        if (v.is_zero())
            comps_.erase(Index{a, b, c});
        else
            comps_[Index{a, b, c}] = v;
    }

    bool is_zero() const { return comps_.empty(); }

    friend bool operator==(const ChristoffelConnection& x, const ChristoffelConnection& y) {
        if (x.coords_ != y.coords_) return false;
        for (const auto& [idx, v] : x.comps_)
            if (y.component(idx[0], idx[1], idx[2]) != v) return false;
        for (const auto& [idx, v] : y.comps_)
            if (x.component(idx[0], idx[1], idx[2]) != v) return false;
        return true;
    }
    friend bool operator!=(const ChristoffelConnection& x, const ChristoffelConnection& y) {
        return !(x == y);
    }

    std::string to_string() const {
        if (comps_.empty()) return "0";
        std::string out;
        for (const auto& [idx, v] : comps_) {
            if (!out.empty()) out += ", ";
            out += "[" + coords_[idx[0]] + " " + coords_[idx[1]] + " " + coords_[idx[2]] +
                   "] = " + v.to_string();
        }
        return "{ " + out + " }";
    }

  private:
    VarList coords_;
    std::map<Index, RationalFunction> comps_;
};

// A connection reacts to a linear map like a (1,2)-tensor field.
inline TensorField connection_as_tensor(const ChristoffelConnection& c) {
    TensorField t(1, 2, c.coords());
    for (const auto& [idx, v] : c.components())
        t.set_component(MultiIndex{idx[0], idx[1], idx[2]}, v);
    return t;
}

inline ChristoffelConnection tensor_as_connection(const TensorField& t) {
    if (t.p() != 1 || t.q() != 2) throw Error("tensor_as_connection: type (1,2) required");
    ChristoffelConnection c(t.coords());
    for (const auto& [idx, v] : t.components()) c.set_component(idx[0], idx[1], idx[2], v);
    return c;
}

inline bool is_invariant_connection(const FiniteMatrixGroup& G, const ChristoffelConnection& c) {
    return is_invariant(G, connection_as_tensor(c));
}

inline bool is_invariant_connection(const GroupElement& g, const ChristoffelConnection& c) {
    TensorField t = connection_as_tensor(c);
    return act(g, t) == t;
}

// Image of a connection under the polynomial map f (source chart -> target
// chart), through the transformation law
//
//   gamma^a_{bc} o f = (dy^a/dx^i)(dx^j/dy^b)(dx^k/dy^c) Gamma^i_{jk}
//                      - (d^2 y^a / dx^i dx^j)(dx^i/dy^b)(dx^j/dy^c).
//
// Everything stays expressed in the source variables (the composition with f
// is never inverted symbolically); the result is indexed by the target chart.
inline ChristoffelConnection connection_transform(const ChristoffelConnection& gamma,
                                                  const PolyMap& f) {
    if (f.source_dim() != f.target_dim()) throw Error("connection_transform: non-square map");
    if (gamma.dim() != f.source_dim())
        throw Error("connection_transform: connection does not live on the source chart");
    const auto J = jacobian(f);
    const Polynomial det = poly_det(J);
    if (det.is_zero()) throw Error("connection_transform: degenerate Jacobian");
    const auto adj = poly_adjugate(J);
    const std::size_t n = f.source_dim();
    const RationalFunction det_inv(Polynomial::constant(1), det);

    // second derivatives of the map components
    std::vector<std::vector<std::vector<Polynomial>>> hess(
        n, std::vector<std::vector<Polynomial>>(n, std::vector<Polynomial>(n)));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                hess[a][i][j] =
                    f.components[a].derivative(f.source_vars[i]).derivative(f.source_vars[j]);

    ChristoffelConnection out(f.target_vars);
    for (unsigned a = 0; a < n; ++a) {
        for (unsigned b = 0; b < n; ++b) {
            for (unsigned c = 0; c < n; ++c) {
                RationalFunction acc;
                for (const auto& [idx, v] : gamma.components()) {
                    const Polynomial& ja = J[a][idx[0]];
                    const Polynomial& ab = adj[idx[1]][b];
                    const Polynomial& ac = adj[idx[2]][c];
                    if (ja.is_zero() || ab.is_zero() || ac.is_zero()) continue;
                    acc += v * RationalFunction(ja * ab * ac) * det_inv * det_inv;
                }
                for (unsigned i = 0; i < n; ++i) {
                    for (unsigned j = 0; j < n; ++j) {
                        const Polynomial& h = hess[a][i][j];
                        if (h.is_zero()) continue;
                        const Polynomial& ab = adj[i][b];
                        const Polynomial& ac = adj[j][c];
                        if (ab.is_zero() || ac.is_zero()) continue;
                        acc -= RationalFunction(h * ab * ac) * det_inv * det_inv;
                    }
                }
                out.set_component(a, b, c, acc);
            }
        }
    }
    return out;
}

// Components of gamma in the new chart defined by psi: new -> old, i.e.
// old = psi(new). Input expressions are in the old variables, the output is
// fully expressed in the new variables.
inline ChristoffelConnection connection_in_chart(const ChristoffelConnection& gamma,
                                                 const PolyMap& psi) {
    if (psi.source_dim() != psi.target_dim()) throw Error("connection_in_chart: non-square map");
    if (gamma.dim() != psi.target_dim())
        throw Error("connection_in_chart: connection does not live on the old chart");
    const auto J = jacobian(psi);  // d old / d new
    const Polynomial det = poly_det(J);
    if (det.is_zero()) throw Error("connection_in_chart: degenerate chart change");
    const auto adj = poly_adjugate(J);
    const std::size_t n = psi.source_dim();
    const RationalFunction det_inv(Polynomial::constant(1), det);
    const auto sub = psi.substitution();

    std::vector<std::vector<std::vector<Polynomial>>> hess(
        n, std::vector<std::vector<Polynomial>>(n, std::vector<Polynomial>(n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                hess[i][b][c] =
                    psi.components[i].derivative(psi.source_vars[b]).derivative(psi.source_vars[c]);

    ChristoffelConnection out(psi.source_vars);
    for (unsigned a = 0; a < n; ++a) {
        for (unsigned b = 0; b < n; ++b) {
            for (unsigned c = 0; c < n; ++c) {
                RationalFunction acc;
                for (const auto& [idx, v] : gamma.components()) {
                    const Polynomial& ai = adj[a][idx[0]];
                    const Polynomial& jb = J[idx[1]][b];
                    const Polynomial& jc = J[idx[2]][c];
                    if (ai.is_zero() || jb.is_zero() || jc.is_zero()) continue;
                    acc += v.compose(sub) * RationalFunction(ai * jb * jc) * det_inv;
                }
                for (unsigned i = 0; i < n; ++i) {
                    const Polynomial& h = hess[i][b][c];
                    if (h.is_zero()) continue;
                    const Polynomial& ai = adj[a][i];
                    if (ai.is_zero()) continue;
                    acc += RationalFunction(ai * h) * det_inv;
                }
                out.set_component(a, b, c, acc);
            }
        }
    }
    return out;
}

}  // namespace orbilift

#endif
