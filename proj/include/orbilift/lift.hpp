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

#ifndef ORBILIFT_LIFT_HPP
#define ORBILIFT_LIFT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbilift/connection.hpp"
#include "orbilift/invariants.hpp"
#include "orbilift/tensor.hpp"

namespace orbilift {

inline long long floordiv(long long a, long long b) {
    long long q = a / b;
    if (a % b != 0 && (a < 0) != (b < 0)) --q;
    return q;
}

inline VarList chart_vars(std::size_t n, const std::string& prefix) {
    if (n == 1) return {prefix};
    return default_coords(n, prefix);
}

// Codimension-1 stratum of the orbit space in an adapted chart: S is cut out
// by the adapted coordinate, with the ramification r = e_S of the pointwise
// stabilizer across it.
struct StratumModel {
    std::string stratum_coord;
    unsigned ramification = 2;
    Polynomial label_equation;

    static StratumModel make(const std::string& coord, unsigned r) {
        if (r < 2) throw Error("StratumModel: ramification must be at least 2");
        return StratumModel{coord, r, Polynomial::variable(coord)};
    }
};

// V-side reflection divisor: one term e_H * H per reflection hyperplane.
inline Divisor reflection_divisor(const FiniteMatrixGroup& G) {
    Divisor D;
    for (const auto& H : hyperplanes(G))
        D.set(H.linear_form, ExtOrder::finite(static_cast<long long>(H.label)));
    return D;
}

namespace detail {

// for a diagonal group every reflection fixes a coordinate hyperplane;
// returns the coordinate index of {z_k = 0}
inline std::size_t coordinate_of_hyperplane(const ReflectionHyperplane& H, const VarList& coords) {
    for (std::size_t k = 0; k < coords.size(); ++k)
        if (H.linear_form == Polynomial::variable(coords[k])) return k;
    throw Error("coordinate_of_hyperplane: hyperplane is not a coordinate hyperplane");
}

}  // namespace detail

// ramification per coordinate of a diagonal group (1 where no reflections fix
// the coordinate hyperplane)
inline std::vector<unsigned> diagonal_ramifications(const FiniteMatrixGroup& G) {
    if (!is_diagonal(G))
        throw Error("adapted charts available for diagonal groups only; use lift_via_pullback");
    std::vector<unsigned> r(G.dim(), 1);
    for (const auto& H : hyperplanes(G))
        r[detail::coordinate_of_hyperplane(H, G.coords())] = H.label;
    return r;
}

// Orbit-space strata of a diagonal group: the hyperplane {z_k = 0} with label
// r becomes the stratum {y_k = 0} with ramification r in the monomial chart.
inline std::vector<StratumModel> orbit_strata(const FiniteMatrixGroup& G) {
    const std::vector<unsigned> r = diagonal_ramifications(G);
    const VarList yvars = chart_vars(G.dim(), "y");
    std::vector<StratumModel> out;
    for (std::size_t k = 0; k < r.size(); ++k)
        if (r[k] >= 2) out.push_back(StratumModel::make(yvars[k], r[k]));
    return out;
}

// The global monomial chart of a diagonal group generated by its reflections:
// sigma_k = z_k^{r_k}.
inline OrbitMap monomial_orbit_map(const FiniteMatrixGroup& G) {
    const std::vector<unsigned> r = diagonal_ramifications(G);
    const VarList zvars = G.coords();
    const VarList yvars = chart_vars(G.dim(), "y");
    InvariantBasis basis;
    std::vector<Polynomial> comps;
    for (std::size_t k = 0; k < r.size(); ++k) {
        comps.push_back(Polynomial::variable(zvars[k]).pow(r[k]));
        basis.generators.push_back(comps.back());
        basis.degrees.push_back(r[k]);
    }
    OrbitMap om;
    om.basis = std::move(basis);
    om.map = PolyMap(zvars, yvars, comps);
    return om;
}

struct ResiduumEntry {
    MultiIndex index;
    long long m = 0;        // order along the stratum coordinate
    unsigned p_prime = 0;   // contravariant occurrences of the stratum slot
    unsigned q_prime = 0;   // covariant occurrences
    long long mu = 0;       // m r + (q' - p')(r - 1)
};

struct ResiduumReport {
    std::vector<ResiduumEntry> per_summand;
    ExtOrder mu_S = ExtOrder::inf();
    std::optional<std::pair<long long, long long>> s_t;  // p - q = r s + t (1-D charts)
};

// Reflection residuum of each summand of T at the stratum S, and their
// minimum mu_S.
inline ResiduumReport residuum(const TensorField& T, const StratumModel& S) {
    auto it = std::find(T.coords().begin(), T.coords().end(), S.stratum_coord);
    if (it == T.coords().end())
        throw Error("residuum: tensor chart does not contain the stratum coordinate");
    const unsigned k = static_cast<unsigned>(it - T.coords().begin());
    const Polynomial yn = Polynomial::variable(S.stratum_coord);
    const long long r = S.ramification;

    ResiduumReport rep;
    for (const auto& [idx, v] : T.components()) {
        ExtOrder ord = rat_order(v, yn);
        if (ord.infinite) continue;  // cannot happen for stored (nonzero) components
        ResiduumEntry e;
        e.index = idx;
        e.m = ord.v;
        for (unsigned a = 0; a < T.p(); ++a)
            if (idx[a] == k) ++e.p_prime;
        for (unsigned b = 0; b < T.q(); ++b)
            if (idx[T.p() + b] == k) ++e.q_prime;
        e.mu = e.m * r + (static_cast<long long>(e.q_prime) - e.p_prime) * (r - 1);
        rep.mu_S = ExtOrder::min(rep.mu_S, ExtOrder::finite(e.mu));
        rep.per_summand.push_back(std::move(e));
    }
    if (T.coords().size() == 1) {
        const long long pq = static_cast<long long>(T.p()) - T.q();
        const long long s = floordiv(pq, r);
        rep.s_t = std::make_pair(s, pq - r * s);
    }
    return rep;
}

struct LiftCertificate {
    bool lifts = false;
    std::optional<TensorField> lifted;                // present iff lifts
    std::optional<StratumModel> failing_stratum;      // present when a residuum fails
    std::optional<long long> failing_mu;
    std::optional<Polynomial> failing_hypersurface;   // present when an off-strata pole fails
};

namespace detail {

// Certify that a component has no pole outside the tracked hypersurfaces.
// The denominator is reduced by the tracked factors; a non-constant residual
// must divide the numerator wholesale, otherwise we refuse to guess.
inline void check_untracked(const RationalFunction& v, const std::vector<Polynomial>& tracked) {
    Polynomial den = v.den();
    for (const auto& h : tracked) {
        while (true) {
            auto q = exact_divide(den, h);
            if (!q) break;
            den = *q;
        }
    }
    if (den.is_constant()) return;
    if (!exact_divide(v.num(), den)) throw Error("cannot certify off-strata holomorphy");
}

}  // namespace detail

// Lifting criterion on an adapted orbit chart: every stratum residuum must be
// nonnegative and the tensor must be pole-free along every declared
// off-strata hypersurface. On success the lifted tensor is built explicitly
// by the monomial substitution y_k -> z_k^{r_k}, slot by slot.
inline LiftCertificate decide_lift_adapted(const TensorField& T,
                                           const std::vector<StratumModel>& strata,
                                           const std::vector<Polynomial>& off_strata,
                                           VarList source_vars = {}) {
    LiftCertificate cert;

    std::vector<Polynomial> tracked;
    for (const auto& S : strata) tracked.push_back(S.label_equation);
    for (const auto& h : off_strata) tracked.push_back(h);

    for (const auto& S : strata) {
        ResiduumReport rep = residuum(T, S);
        if (rep.mu_S < ExtOrder::finite(0)) {
            cert.lifts = false;
            cert.failing_stratum = S;
            cert.failing_mu = rep.mu_S.v;
            return cert;
        }
    }
    for (const auto& [idx, v] : T.components()) {
        for (const auto& h : off_strata) {
            if (rat_order(v, h) < ExtOrder::finite(0)) {
                cert.lifts = false;
                cert.failing_hypersurface = h;
                return cert;
            }
        }
        detail::check_untracked(v, tracked);
    }

    cert.lifts = true;

    // explicit lift through the monomial chart
    const VarList& yv = T.coords();
    const std::size_t n = yv.size();
    if (source_vars.empty()) source_vars = chart_vars(n, "z");
    if (source_vars.size() != n) throw Error("decide_lift_adapted: source chart size mismatch");
    std::vector<unsigned> ram(n, 1);
    for (const auto& S : strata) {
        auto it = std::find(yv.begin(), yv.end(), S.stratum_coord);
        if (it == yv.end()) throw Error("decide_lift_adapted: stratum coordinate not in chart");
        ram[static_cast<std::size_t>(it - yv.begin())] = S.ramification;
    }
    std::map<std::string, Polynomial> sub;
    for (std::size_t k = 0; k < n; ++k)
        sub[yv[k]] = Polynomial::variable(source_vars[k]).pow(ram[k]);

    TensorField lifted(T.p(), T.q(), source_vars);
    for (const auto& [idx, v] : T.components()) {
        RationalFunction val = v.compose(sub);
        for (unsigned a = 0; a < T.p(); ++a) {
            const unsigned k = idx[a];
            Polynomial slope =
                Polynomial::variable(source_vars[k]).pow(ram[k] - 1).scaled(Cyclotomic(ram[k]));
            val = val / RationalFunction(slope);
        }
        for (unsigned b = 0; b < T.q(); ++b) {
            const unsigned k = idx[T.p() + b];
            Polynomial slope =
                Polynomial::variable(source_vars[k]).pow(ram[k] - 1).scaled(Cyclotomic(ram[k]));
            val = val * RationalFunction(slope);
        }
        std::vector<Polynomial> coord_factors;
        for (const auto& sv : source_vars) coord_factors.push_back(Polynomial::variable(sv));
        lifted.add_component(idx, val.reduced_by(coord_factors));
    }
    if (!is_holomorphic(lifted))
        throw Error("decide_lift_adapted: certified lift is not holomorphic (internal error)");
    cert.lifted = std::move(lifted);
    return cert;
}

// Closed-form lift over the cyclic group Z_r acting on C: the tensor
// g(y) y^m (dy)^q (d/dy)^p lifts iff m >= p - q - s where p - q = r s + t.
// The lift is z^{t + r(m - p + q + s)} g(z^r) r^{q-p} in the slots (dz)^q
// (d/dz)^p.
inline std::optional<TensorField> lift_cyclic_1d(const Polynomial& g_series, long long m,
                                                 unsigned p, unsigned q, unsigned r) {
    if (r < 2) throw Error("lift_cyclic_1d: ramification must be at least 2");
    if (g_series.is_zero()) throw Error("lift_cyclic_1d: g must be a unit at 0");
    if (g_series.vars().size() > 1) throw Error("lift_cyclic_1d: g must be univariate");
    {
        Monomial m0;
        if (g_series.coefficient(m0).is_zero()) throw Error("lift_cyclic_1d: g must be a unit at 0");
    }
    const long long pq = static_cast<long long>(p) - q;
    const long long s = floordiv(pq, r);
    const long long t = pq - static_cast<long long>(r) * s;
    if (m < pq - s) return std::nullopt;

    const long long expo = t + static_cast<long long>(r) * (m - pq + s);
    const std::string zname = "z";
    Polynomial z = Polynomial::variable(zname);
    std::map<std::string, Polynomial> sub;
    if (!g_series.vars().empty()) sub[g_series.vars().front()] = z.pow(r);
    Polynomial f = g_series.compose(sub) * z.pow(static_cast<unsigned>(expo));
    // scale by r^{q-p}
    BigRational scale(1);
    const BigRational rr(static_cast<long long>(r));
    for (long long k = 0; k < pq; ++k) scale = scale / rr;
    for (long long k = 0; k < -pq; ++k) scale = scale * rr;
    f = f.scaled(Cyclotomic(scale));

    TensorField lift(p, q, {zname});
    lift.set_component(MultiIndex(p + q, 0), RationalFunction(f));
    return lift;
}

// Pullback route: T lifts iff its pullback along the orbit map is
// holomorphic. Invariance of the pullback is automatic and asserted.
inline LiftCertificate lift_via_pullback(const TensorField& T, const OrbitMap& sigma,
                                         const FiniteMatrixGroup& G) {
    if (sigma.map.source_dim() != sigma.map.target_dim()) throw Error("non-square orbit map");
    TensorField P = pullback(T, sigma.map);
    if (!is_invariant(G, P))
        throw Error("lift_via_pullback: pullback is not invariant (internal error)");
    LiftCertificate cert;
    cert.lifts = is_holomorphic(P);
    if (cert.lifts) cert.lifted = std::move(P);
    return cert;
}

// The two decision routes must agree wherever both apply.
inline bool cross_validate(const TensorField& T, const OrbitMap& sigma,
                           const FiniteMatrixGroup& G, const std::vector<StratumModel>& strata) {
    std::vector<Polynomial> off;
    for (const auto& y : T.coords()) {
        bool is_stratum = false;
        for (const auto& S : strata)
            if (S.stratum_coord == y) is_stratum = true;
        if (!is_stratum) off.push_back(Polynomial::variable(y));
    }
    LiftCertificate a = decide_lift_adapted(T, strata, off, sigma.map.source_vars);
    LiftCertificate b = lift_via_pullback(T, sigma, G);
    return a.lifts == b.lifts;
}

// Solve sigma^* phi = omega for a polynomial form phi, for an invariant
// polynomial skew q-form omega of a reflection group. The inverse covariant
// transformation produces phi o sigma with det-J denominators; skew symmetry
// forces the reduction to a polynomial, which is then rewritten in the
// invariant generators.
inline TensorField solomon_express(const TensorField& omega, const OrbitMap& sigma,
                                   const FiniteMatrixGroup& G) {
    if (omega.p() != 0) throw Error("solomon_express: covariant forms only (p = 0)");
    if (!is_skew_covariant(omega)) throw Error("solomon_express: form is not skew-symmetric");
    for (const auto& [idx, v] : omega.components())
        if (!v.is_polynomial()) throw Error("solomon_express: form must have polynomial components");
    if (!is_reflection_group(G)) throw Error("solomon_express requires a reflection group");
    if (!is_invariant(G, omega)) throw Error("not G-invariant");
    if (sigma.map.source_dim() != sigma.map.target_dim()) throw Error("non-square orbit map");

    const auto J = jacobian(sigma.map);
    const Polynomial det = poly_det(J);
    if (det.is_zero()) throw Error("solomon_express: degenerate Jacobian");
    const auto adj = poly_adjugate(J);
    const unsigned n = static_cast<unsigned>(sigma.map.source_dim());
    const unsigned q = omega.q();
    const RationalFunction det_inv(Polynomial::constant(1), det);

    TensorField phi(0, q, sigma.map.target_vars);
    std::vector<MultiIndex> all;
    detail::enumerate_indices(q, n, all);
    for (const auto& target : all) {
        RationalFunction acc;
        for (const auto& [idx, v] : omega.components()) {
            Polynomial factor = Polynomial::constant(1);
            bool zero = false;
            for (unsigned l = 0; l < q && !zero; ++l) {
                const Polynomial& e = adj[idx[l]][target[l]];
                if (e.is_zero()) zero = true;
                else factor = factor * e;
            }
            if (zero) continue;
            RationalFunction term = v * RationalFunction(factor);
            for (unsigned l = 0; l < q; ++l) term = term * det_inv;
            acc += term;
        }
        if (acc.is_zero()) continue;
        if (!acc.is_polynomial())
            throw Error("solomon_express: component does not reduce to a polynomial (internal)");
        auto expressed = express_in_invariants(acc.as_polynomial(), sigma.basis,
                                               sigma.map.source_vars, sigma.map.target_vars);
        if (!expressed)
            throw Error("solomon_express: component is outside the invariant subalgebra (internal)");
        phi.set_component(target, RationalFunction(*expressed));
    }
    if (pullback(phi, sigma.map) != omega)
        throw Error("solomon_express: round-trip check failed (internal error)");
    return phi;
}

// The two-route equivalence sweep over the 1-D cyclic charts: the residuum
// criterion against the explicit pullback, plus the integer identity
// m r + (q - p)(r - 1) >= 0  <=>  m >= p - q - s  (p - q = r s + t).
struct Thm37Sweep {
    unsigned long long verdict_cases = 0;
    unsigned long long verdict_agreements = 0;
    unsigned long long inequality_cases = 0;
    unsigned long long inequality_agreements = 0;

    bool all_agree() const {
        return verdict_cases == verdict_agreements && inequality_cases == inequality_agreements;
    }
};

inline std::vector<Polynomial> thm37_default_weights() {
    const Polynomial y = Polynomial::variable("y");
    return {Polynomial::constant(1), Polynomial::constant(1) + y,
            Polynomial::constant(2) + y.pow(2)};
}

inline Thm37Sweep run_thm37_sweep(unsigned rmax, unsigned pqmax, long long mlo, long long mhi,
                                  const std::vector<Polynomial>& weights = thm37_default_weights()) {
    if (rmax < 2) throw Error("run_thm37_sweep: rmax must be at least 2");
    Thm37Sweep sweep;
    for (unsigned r = 2; r <= rmax; ++r) {
        CycMatrix gm(1, 1);
        gm.at(0, 0) = Cyclotomic::zeta(r);
        FiniteMatrixGroup G = close({GroupElement(gm)}, 10000, {"z"});
        const OrbitMap sigma = monomial_orbit_map(G);
        const std::vector<StratumModel> strata = orbit_strata(G);
        for (unsigned p = 0; p <= pqmax; ++p) {
            for (unsigned q = 0; q <= pqmax; ++q) {
                const long long pq = static_cast<long long>(p) - q;
                const long long s = floordiv(pq, r);
                for (long long m = mlo; m <= mhi; ++m) {
                    const bool by_mu = m * r + (static_cast<long long>(q) - p) * (r - 1) >= 0;
                    const bool by_s = m >= pq - s;
                    ++sweep.inequality_cases;
                    if (by_mu == by_s) ++sweep.inequality_agreements;
                    for (const auto& g : weights) {
                        const Polynomial y = Polynomial::variable("y");
                        RationalFunction val =
                            m >= 0 ? RationalFunction(g * y.pow(static_cast<unsigned>(m)))
                                   : RationalFunction(g, y.pow(static_cast<unsigned>(-m)));
                        TensorField T(p, q, {"y"});
                        T.set_component(MultiIndex(p + q, 0), val);
                        ++sweep.verdict_cases;
                        if (cross_validate(T, sigma, G, strata)) ++sweep.verdict_agreements;
                    }
                }
            }
        }
    }
    return sweep;
}

// Necessary conditions for a chart-level diffeomorphism f (with verified
// polynomial inverse) to respect the reflection data: every source stratum
// must map into a destination stratum with the same ramification label,
// bijectively.
inline bool check_diffeo_conditions(const PolyMap& f, const PolyMap& f_inv,
                                    const std::vector<StratumModel>& strata_src,
                                    const std::vector<StratumModel>& strata_dst) {
    if (f.source_dim() != f_inv.target_dim() || f.target_dim() != f_inv.source_dim())
        throw Error("check_diffeo: inverse chart mismatch");
    const PolyMap round = f_inv.after(f);
    const PolyMap round2 = f.after(f_inv);
    for (std::size_t k = 0; k < round.components.size(); ++k)
        if (round.components[k] != Polynomial::variable(round.source_vars[k]))
            throw Error("check_diffeo: supplied inverse does not verify f_inv o f = id");
    for (std::size_t k = 0; k < round2.components.size(); ++k)
        if (round2.components[k] != Polynomial::variable(round2.source_vars[k]))
            throw Error("check_diffeo: supplied inverse does not verify f o f_inv = id");

    if (strata_src.size() != strata_dst.size()) return false;
    std::vector<bool> used(strata_dst.size(), false);
    for (const auto& S : strata_src) {
        bool matched = false;
        for (std::size_t j = 0; j < strata_dst.size(); ++j) {
            if (used[j]) continue;
            // h' o f vanishes on {h = 0}
            Polynomial pulled = f.pull(strata_dst[j].label_equation);
            if (!exact_divide(pulled, S.label_equation)) continue;
            if (strata_dst[j].ramification != S.ramification) return false;
            used[j] = true;
            matched = true;
            break;
        }
        if (!matched) return false;
    }
    return true;
}

}  // namespace orbilift

#endif
