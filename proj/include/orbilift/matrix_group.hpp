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

#ifndef ORBILIFT_MATRIX_GROUP_HPP
#define ORBILIFT_MATRIX_GROUP_HPP

#include <deque>
#include <string>
#include <unordered_set>
#include <vector>

#include "orbilift/linalg.hpp"
#include "orbilift/polynomial.hpp"

namespace orbilift {

// Element of a finite subgroup of GL(n). The matrix is kept at the ambient
// conductor chosen by close(), which makes coordinate vectors (and therefore
// hashing) canonical across the whole group.
class GroupElement {
  public:
    GroupElement() = default;
    explicit GroupElement(CycMatrix m) : m_(std::move(m)), hash_(m_.hash()) {}

    const CycMatrix& matrix() const { return m_; }
    std::size_t dim() const { return m_.rows(); }
    std::size_t hash() const { return hash_; }

    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return a.hash_ == b.hash_ && a.m_ == b.m_;
    }
    friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }

    friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
        return GroupElement(a.m_ * b.m_);
    }

    GroupElement inverse() const {
        auto inv = m_.inverse();
        if (!inv) throw Error("GroupElement: singular matrix");
        return GroupElement(*inv);
    }

    bool is_identity() const { return m_ == CycMatrix::identity(m_.rows()); }

    bool is_diagonal() const {
        for (std::size_t i = 0; i < m_.rows(); ++i)
            for (std::size_t j = 0; j < m_.cols(); ++j)
                if (i != j && !m_.at(i, j).is_zero()) return false;
        return true;
    }

    struct Hash {
        std::size_t operator()(const GroupElement& g) const { return g.hash(); }
    };

  private:
    CycMatrix m_;
    std::size_t hash_ = 0;
};

struct ReflectionHyperplane {
    Polynomial linear_form;           // degree 1, first nonzero coefficient normalized to 1
    unsigned label = 2;               // e_H
    GroupElement stabilizer_generator;
};

class FiniteMatrixGroup {
  public:
    std::size_t dim() const { return dim_; }
    const VarList& coords() const { return coords_; }
    const std::vector<GroupElement>& generators() const { return generators_; }
    const std::vector<GroupElement>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }

    const GroupElement& identity() const { return elements_.front(); }

    friend FiniteMatrixGroup close(std::vector<GroupElement> gens, std::size_t cap,
                                   VarList coords);

  private:
    std::size_t dim_ = 0;
    VarList coords_;
    std::vector<GroupElement> generators_;
    std::vector<GroupElement> elements_;  // BFS order, identity first
};

inline VarList default_coords(std::size_t n, const std::string& prefix = "z") {
    VarList v;
    for (std::size_t i = 1; i <= n; ++i) v.push_back(prefix + std::to_string(i));
    return v;
}

// Breadth-first closure of the generated group. All generator entries are
// embedded into the lcm conductor first so that element hashing is canonical.
inline FiniteMatrixGroup close(std::vector<GroupElement> gens, std::size_t cap = 10000,
                               VarList coords = {}) {
    if (gens.empty()) throw Error("close: at least one generator required");
    const std::size_t n = gens.front().dim();
    unsigned conductor = 1;
    for (const auto& g : gens) {
        if (g.matrix().rows() != g.matrix().cols()) throw Error("close: generators must be square");
        if (g.dim() != n) throw Error("close: generators must share one dimension");
        conductor = std::lcm(conductor, g.matrix().conductor_lcm());
    }
    for (auto& g : gens) {
        CycMatrix m = g.matrix().embedded(conductor);
        if (m.det().is_zero()) throw Error("close: generator is not invertible");
        g = GroupElement(std::move(m));
    }

    FiniteMatrixGroup G;
    G.dim_ = n;
    G.coords_ = coords.empty() ? default_coords(n) : std::move(coords);
    if (G.coords_.size() != n) throw Error("close: coordinate list does not match dimension");
    G.generators_ = gens;

    const GroupElement id(CycMatrix::identity(n).embedded(conductor));
    std::unordered_set<GroupElement, GroupElement::Hash> seen;
    std::deque<GroupElement> todo;
    seen.insert(id);
    G.elements_.push_back(id);
    todo.push_back(id);
    while (!todo.empty()) {
        GroupElement cur = todo.front();
        todo.pop_front();
        for (const auto& g : gens) {
            GroupElement next = cur * g;
            if (seen.insert(next).second) {
                if (seen.size() > cap) throw Error("group too large or infinite");
                G.elements_.push_back(next);
                todo.push_back(next);
            }
        }
    }
    return G;
}

inline std::size_t element_order(const GroupElement& g, std::size_t cap = 100000) {
    GroupElement acc = g;
    std::size_t k = 1;
    while (!acc.is_identity()) {
        acc = acc * g;
        if (++k > cap) throw Error("element_order: order exceeds cap");
    }
    return k;
}

inline bool is_reflection(const GroupElement& g) {
    if (g.is_identity()) return false;
    CycMatrix d = g.matrix() - CycMatrix::identity(g.dim());
    return d.rank() == 1;
}

// All complex reflections in G: g != id fixing a hyperplane pointwise.
inline std::vector<GroupElement> reflections(const FiniteMatrixGroup& G) {
    std::vector<GroupElement> out;
    for (const auto& g : G.elements())
        if (is_reflection(g)) out.push_back(g);
    return out;
}

// The fixed hyperplane of a reflection is cut out by any nonzero row of
// (g - id): g - id has rank one, so all rows are proportional.
inline Polynomial reflection_hyperplane_form(const GroupElement& g, const VarList& coords) {
    CycMatrix d = g.matrix() - CycMatrix::identity(g.dim());
    for (std::size_t i = 0; i < d.rows(); ++i) {
        Polynomial form;
        bool nonzero = false;
        Cyclotomic first;
        for (std::size_t j = 0; j < d.cols(); ++j) {
            if (d.at(i, j).is_zero()) continue;
            if (!nonzero) {
                first = d.at(i, j);
                nonzero = true;
            }
            form += Polynomial::variable(coords[j]).scaled(d.at(i, j));
        }
        if (nonzero) return form.scaled(first.inverse());
    }
    throw Error("reflection_hyperplane_form: element is the identity");
}

// Reflections grouped by fixed hyperplane; e_H = (#reflections fixing H) + 1.
// The pointwise stabilizer of each hyperplane is verified to be cyclic of
// order e_H, which must hold for any finite subgroup of GL(n).
inline std::vector<ReflectionHyperplane> hyperplanes(const FiniteMatrixGroup& G) {
    std::vector<Polynomial> forms;
    std::vector<std::vector<GroupElement>> groups;
    for (const auto& g : reflections(G)) {
        Polynomial form = reflection_hyperplane_form(g, G.coords());
        bool placed = false;
        for (std::size_t k = 0; k < forms.size(); ++k) {
            if (forms[k] == form) {
                groups[k].push_back(g);
                placed = true;
                break;
            }
        }
        if (!placed) {
            forms.push_back(form);
            groups.push_back({g});
        }
    }
    std::vector<ReflectionHyperplane> out;
    for (std::size_t k = 0; k < forms.size(); ++k) {
        const unsigned e = static_cast<unsigned>(groups[k].size()) + 1;
        GroupElement generator;
        bool found = false;
        for (const auto& g : groups[k]) {
            if (element_order(g) != e) continue;
            // powers of g must enumerate the stabilizer: id plus the listed reflections
            std::unordered_set<GroupElement, GroupElement::Hash> powers;
            GroupElement acc = g;
            for (unsigned t = 1; t < e; ++t) {
                powers.insert(acc);
                acc = acc * g;
            }
            bool all = true;
            for (const auto& h : groups[k])
                if (powers.find(h) == powers.end()) all = false;
            if (all) {
                generator = g;
                found = true;
                break;
            }
        }
        if (!found) throw Error("hyperplanes: pointwise stabilizer is not cyclic (internal error)");
        out.push_back(ReflectionHyperplane{forms[k], e, generator});
    }
    return out;
}

inline bool is_diagonal(const FiniteMatrixGroup& G) {
    for (const auto& g : G.elements())
        if (!g.is_diagonal()) return false;
    return true;
}

// True iff the reflections of G generate all of G.
inline bool is_reflection_group(const FiniteMatrixGroup& G) {
    auto refl = reflections(G);
    if (refl.empty()) return G.order() == 1;
    FiniteMatrixGroup H = close(refl, G.order(), G.coords());
    return H.order() == G.order();
}

}  // namespace orbilift

#endif
