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

#ifndef ORBILIFT_CONNECTION_LIFT_HPP
#define ORBILIFT_CONNECTION_LIFT_HPP

#include <string>
#include <vector>

#include "orbilift/connection.hpp"
#include "orbilift/lift.hpp"

namespace orbilift {

// Pole pattern of a liftable connection on an adapted chart whose stratum is
// cut out by the last coordinate, with ramification r across it.
struct AdaptedConnectionPattern {
    unsigned r = 2;
    unsigned n = 1;

    AdaptedConnectionPattern(unsigned r_, unsigned n_) : r(r_), n(n_) {
        if (r < 2) throw Error("AdaptedConnectionPattern: ramification must be at least 2");
        if (n < 1) throw Error("AdaptedConnectionPattern: chart dimension must be positive");
    }
};

struct ConnectionCheckReport {
    bool ok = true;
    std::vector<std::string> diagnostics;

    void fail(const std::string& msg) {
        ok = false;
        diagnostics.push_back(msg);
    }
};

namespace detail {

enum class ConnSlot {
    all_transverse,   // gamma^i_{jk}
    mixed_lower,      // gamma^i_{jn}, gamma^i_{nk}
    mixed_upper,      // gamma^n_{jn}, gamma^n_{nk}
    upper_stratum,    // gamma^n_{jk}
    lower_stratum2,   // gamma^i_{nn}
    full_stratum      // gamma^n_{nn}
};

inline ConnSlot classify(unsigned a, unsigned b, unsigned c, unsigned last) {
    const bool ua = a == last;
    const int lowers = (b == last ? 1 : 0) + (c == last ? 1 : 0);
    if (!ua && lowers == 0) return ConnSlot::all_transverse;
    if (!ua && lowers == 1) return ConnSlot::mixed_lower;
    if (ua && lowers == 1) return ConnSlot::mixed_upper;
    if (ua && lowers == 0) return ConnSlot::upper_stratum;
    if (!ua && lowers == 2) return ConnSlot::lower_stratum2;
    return ConnSlot::full_stratum;
}

inline std::string slot_name(const ChristoffelConnection& g, unsigned a, unsigned b, unsigned c) {
    return "gamma[" + g.coords()[a] + "][" + g.coords()[b] + "][" + g.coords()[c] + "]";
}

}  // namespace detail

// Checks the component pattern a meromorphic connection on the orbit chart
// must have in order to come from (and lift to) an invariant holomorphic
// connection on the slice: away from the stratum slot everything holomorphic,
// gamma^n_{jk} divisible by y^n, y^n gamma^i_{nn} holomorphic, and
// gamma^n_{nn} + (r-1)/(r y^n) holomorphic.
inline ConnectionCheckReport check_liftable_connection(const ChristoffelConnection& gamma,
                                                       const AdaptedConnectionPattern& pattern) {
    if (gamma.dim() != pattern.n)
        throw Error("check_liftable_connection: chart dimension mismatch");
    const unsigned n = pattern.n;
    const unsigned last = n - 1;
    const Polynomial yn = Polynomial::variable(gamma.coords()[last]);
    const RationalFunction yn_rf(yn);
    const RationalFunction pole_shift(
        Polynomial::constant(Cyclotomic(BigRational(pattern.r - 1, pattern.r))), yn);

    ConnectionCheckReport rep;
    for (unsigned a = 0; a < n; ++a) {
        for (unsigned b = 0; b < n; ++b) {
            for (unsigned c = 0; c < n; ++c) {
                const RationalFunction v = gamma.component(a, b, c);
                switch (detail::classify(a, b, c, last)) {
                    case detail::ConnSlot::all_transverse:
                    case detail::ConnSlot::mixed_lower:
                    case detail::ConnSlot::mixed_upper:
                        if (!v.is_polynomial())
                            rep.fail(detail::slot_name(gamma, a, b, c) + " must be holomorphic");
                        break;
                    case detail::ConnSlot::upper_stratum:
                        if (!(v / yn_rf).is_polynomial())
                            rep.fail(detail::slot_name(gamma, a, b, c) +
                                     " must vanish on the stratum");
                        break;
                    case detail::ConnSlot::lower_stratum2:
                        if (!(v * yn_rf).is_polynomial())
                            rep.fail(detail::slot_name(gamma, a, b, c) +
                                     " may have at most a first-order pole on the stratum");
                        break;
                    case detail::ConnSlot::full_stratum:
                        if (!(v + pole_shift).is_polynomial())
                            rep.fail(detail::slot_name(gamma, a, b, c) + " + (r-1)/(r*" +
                                     gamma.coords()[last] + ") must be holomorphic");
                        break;
                }
            }
        }
    }
    return rep;
}

namespace detail {

// rewrite a slice polynomial whose stratum-coordinate exponents are all
// divisible by r as a polynomial on the orbit chart
inline Polynomial slice_to_orbit_poly(const Polynomial& p, const VarList& zvars,
                                      const VarList& yvars, unsigned r) {
    const std::string& zn = zvars.back();
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        Polynomial term = Polynomial::constant(c);
        for (std::size_t i = 0; i < m.exps.size(); ++i) {
            unsigned e = m.exps[i];
            if (e == 0) continue;
            const std::string& v = p.vars()[i];
            auto it = std::find(zvars.begin(), zvars.end(), v);
            if (it == zvars.end())
                throw Error("slice_to_orbit_poly: unexpected variable " + v);
            const std::size_t k = static_cast<std::size_t>(it - zvars.begin());
            if (v == zn) {
                if (e % r != 0)
                    throw Error("slice_to_orbit_poly: exponent of " + zn +
                                " is not divisible by the ramification");
                e /= r;
            }
            if (e > 0) term = term * Polynomial::variable(yvars[k]).pow(e);
        }
        out += term;
    }
    return out;
}

}  // namespace detail

// Recover the holomorphic coefficient functions from a pattern-consistent
// gamma and substitute the slice chart: the eight component relations
//
//   Gamma^i_{jk} =            tG^i_{jk} o s      Gamma^n_{jk} = (1/r) z^n tG^n_{jk} o s
//   Gamma^i_{jn} = r (z^n)^{r-1} tG^i_{jn} o s   Gamma^i_{nk} = r (z^n)^{r-1} tG^i_{nk} o s
//   Gamma^n_{jn} =            tG^n_{jn} o s      Gamma^n_{nk} =            tG^n_{nk} o s
//   Gamma^i_{nn} = r^2 (z^n)^{r-2} tG^i_{nn} o s Gamma^n_{nn} = r (z^n)^{r-1} tG^n_{nn} o s
//
// with s = (z^1, ..., (z^n)^r). The result is holomorphic and invariant
// under diag(1, ..., 1, zeta_r).
inline ChristoffelConnection lift_connection_slice(const ChristoffelConnection& gamma,
                                                   const AdaptedConnectionPattern& pattern) {
    ConnectionCheckReport rep = check_liftable_connection(gamma, pattern);
    if (!rep.ok) throw Error("lift_connection_slice: connection fails the liftability check");
    const unsigned n = pattern.n;
    const unsigned r = pattern.r;
    const unsigned last = n - 1;
    const Polynomial yn = Polynomial::variable(gamma.coords()[last]);
    const RationalFunction yn_rf(yn);
    const RationalFunction pole_shift(
        Polynomial::constant(Cyclotomic(BigRational(r - 1, r))), yn);

    const VarList zvars = chart_vars(n, "z");
    std::map<std::string, Polynomial> sub;
    for (unsigned k = 0; k < n; ++k)
        sub[gamma.coords()[k]] =
            Polynomial::variable(zvars[k]).pow(k == last ? r : 1);

    const Polynomial zn = Polynomial::variable(zvars[last]);
    ChristoffelConnection out(zvars);
    for (unsigned a = 0; a < n; ++a) {
        for (unsigned b = 0; b < n; ++b) {
            for (unsigned c = 0; c < n; ++c) {
                const RationalFunction v = gamma.component(a, b, c);
                Polynomial tilde;  // the holomorphic coefficient on the orbit chart
                switch (detail::classify(a, b, c, last)) {
                    case detail::ConnSlot::all_transverse:
                    case detail::ConnSlot::mixed_lower:
                    case detail::ConnSlot::mixed_upper:
                        tilde = v.is_zero() ? Polynomial() : v.as_polynomial();
                        break;
                    case detail::ConnSlot::upper_stratum:
                        tilde = (v / yn_rf).as_polynomial();
                        break;
                    case detail::ConnSlot::lower_stratum2:
                        tilde = (v * yn_rf).as_polynomial();
                        break;
                    case detail::ConnSlot::full_stratum:
                        tilde = (v + pole_shift).as_polynomial();
                        break;
                }
                if (tilde.is_zero()) continue;
                Polynomial moved = tilde.compose(sub);
                Polynomial value;
                switch (detail::classify(a, b, c, last)) {
                    case detail::ConnSlot::all_transverse:
                    case detail::ConnSlot::mixed_upper:
                        value = moved;
                        break;
                    case detail::ConnSlot::upper_stratum:
                        value = moved * zn;
                        value = value.scaled(Cyclotomic(BigRational(1, r)));
                        break;
                    case detail::ConnSlot::mixed_lower:
                        value = moved * zn.pow(r - 1);
                        value = value.scaled(Cyclotomic(static_cast<long long>(r)));
                        break;
                    case detail::ConnSlot::lower_stratum2:
                        value = moved * zn.pow(r - 2);
                        value = value.scaled(Cyclotomic(static_cast<long long>(r) * r));
                        break;
                    case detail::ConnSlot::full_stratum:
                        value = moved * zn.pow(r - 1);
                        value = value.scaled(Cyclotomic(static_cast<long long>(r)));
                        break;
                }
                out.set_component(a, b, c, RationalFunction(value));
            }
        }
    }
    return out;
}

// Image of an invariant holomorphic slice connection on the orbit chart,
// read off from the adapted-chart component formulas. Round-trips with
// lift_connection_slice.
inline ChristoffelConnection pushforward_connection_slice(const ChristoffelConnection& Gamma,
                                                          unsigned r) {
    if (r < 2) throw Error("pushforward_connection_slice: ramification must be at least 2");
    const unsigned n = static_cast<unsigned>(Gamma.dim());
    const unsigned last = n - 1;

    // invariance under the slice stabilizer generator diag(1, ..., 1, zeta_r)
    CycMatrix gm = CycMatrix::identity(n);
    gm.at(last, last) = Cyclotomic::zeta(r);
    const GroupElement g(gm);
    if (!is_invariant_connection(g, Gamma))
        throw Error("pushforward_connection_slice: connection is not invariant under the slice stabilizer");

    const VarList& zvars = Gamma.coords();
    const VarList yvars = chart_vars(n, "y");
    const Polynomial zn = Polynomial::variable(zvars.back());
    const Polynomial yn = Polynomial::variable(yvars.back());
    const RationalFunction pole(
        Polynomial::constant(Cyclotomic(BigRational(r - 1, r))), yn);

    ChristoffelConnection out(yvars);
    // gamma^n_{nn} carries the pole even when Gamma^n_{nn} = 0
    out.set_component(last, last, last, -pole);

    for (unsigned a = 0; a < n; ++a) {
        for (unsigned b = 0; b < n; ++b) {
            for (unsigned c = 0; c < n; ++c) {
                const RationalFunction v = Gamma.component(a, b, c);
                if (v.is_zero()) continue;
                if (!v.is_polynomial())
                    throw Error("pushforward_connection_slice: slice connection must be holomorphic");
                Polynomial p = v.as_polynomial();
                // peel the monomial scale forced by invariance
                RationalFunction scale_inv(Polynomial::constant(1));
                switch (detail::classify(a, b, c, last)) {
                    case detail::ConnSlot::all_transverse:
                    case detail::ConnSlot::mixed_upper:
                        break;
                    case detail::ConnSlot::upper_stratum:
                        scale_inv = RationalFunction(Polynomial::constant(Cyclotomic(static_cast<long long>(r))),
                                                     zn);
                        break;
                    case detail::ConnSlot::mixed_lower:
                    case detail::ConnSlot::full_stratum:
                        scale_inv = RationalFunction(
                            Polynomial::constant(Cyclotomic(BigRational(1, r))), zn.pow(r - 1));
                        break;
                    case detail::ConnSlot::lower_stratum2:
                        scale_inv = RationalFunction(
                            Polynomial::constant(Cyclotomic(BigRational(1, static_cast<long long>(r) * r))),
                            zn.pow(r - 2));
                        break;
                }
                RationalFunction peeled = RationalFunction(p) * scale_inv;
                if (!peeled.is_polynomial())
                    throw Error("pushforward_connection_slice: component violates the adapted pattern");
                Polynomial tilde_on_slice = peeled.as_polynomial();
                Polynomial tilde = detail::slice_to_orbit_poly(tilde_on_slice, zvars, yvars, r);
                RationalFunction value;
                switch (detail::classify(a, b, c, last)) {
                    case detail::ConnSlot::all_transverse:
                    case detail::ConnSlot::mixed_lower:
                    case detail::ConnSlot::mixed_upper:
                        value = RationalFunction(tilde);
                        break;
                    case detail::ConnSlot::upper_stratum:
                        value = RationalFunction(tilde * yn);
                        break;
                    case detail::ConnSlot::lower_stratum2:
                        value = RationalFunction(tilde, yn);
                        break;
                    case detail::ConnSlot::full_stratum:
                        value = RationalFunction(tilde) - pole;
                        break;
                }
                out.set_component(a, b, c, value);
            }
        }
    }
    return out;
}

}  // namespace orbilift

#endif
