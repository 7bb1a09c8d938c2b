#include <doctest.h>

#include <random>

#include "test_util.hpp"

using namespace orbilift;
using testutil::diag;

namespace {

Polynomial var(const std::string& n) { return Polynomial::variable(n); }

RationalFunction pole_term(unsigned r, const Polynomial& yn) {
    // -(r-1)/(r y^n)
    return RationalFunction(
        Polynomial::constant(Cyclotomic(BigRational(-(static_cast<long long>(r) - 1), r))), yn);
}

// gamma with only the forced pole component; the image of the flat connection
ChristoffelConnection flat_image(unsigned r, unsigned n) {
    ChristoffelConnection g(chart_vars(n, "y"));
    g.set_component(n - 1, n - 1, n - 1, pole_term(r, var(g.coords().back())));
    return g;
}

// random gamma consistent with the adapted pattern, built from random
// holomorphic coefficients; the test-side model of the component formulas
ChristoffelConnection random_pattern_gamma(std::mt19937& rng, unsigned r, unsigned n,
                                           unsigned max_deg) {
    const VarList yv = chart_vars(n, "y");
    const Polynomial yn = var(yv.back());
    ChristoffelConnection g(yv);
    const unsigned last = n - 1;
    for (unsigned a = 0; a < n; ++a) {
        for (unsigned b = 0; b < n; ++b) {
            for (unsigned c = 0; c < n; ++c) {
                Polynomial tilde = testutil::random_polynomial(rng, yv, max_deg);
                const bool ua = a == last;
                const int lowers = (b == last ? 1 : 0) + (c == last ? 1 : 0);
                RationalFunction v;
                if (ua && lowers == 0) {
                    v = RationalFunction(yn * tilde);
                } else if (!ua && lowers == 2) {
                    v = RationalFunction(tilde, yn);
                } else if (ua && lowers == 2) {
                    v = RationalFunction(tilde) + pole_term(r, yn);
                } else {
                    v = RationalFunction(tilde);
                }
                g.set_component(a, b, c, v);
            }
        }
    }
    return g;
}

}  // namespace

TEST_CASE("the image of the flat connection passes the check") {
    for (unsigned r = 2; r <= 5; ++r) {
        for (unsigned n = 1; n <= 3; ++n) {
            auto rep = check_liftable_connection(flat_image(r, n), AdaptedConnectionPattern(r, n));
            CHECK(rep.ok);
        }
    }
}

TEST_CASE("the flat connection on the orbit chart does not lift") {
    for (unsigned r = 2; r <= 4; ++r) {
        ChristoffelConnection zero(chart_vars(2, "y"));
        auto rep = check_liftable_connection(zero, AdaptedConnectionPattern(r, 2));
        CHECK_FALSE(rep.ok);
        REQUIRE(rep.diagnostics.size() == 1);
        CHECK(rep.diagnostics[0].find("gamma[y2][y2][y2]") != std::string::npos);
    }
}

TEST_CASE("a constant gamma^n_{jk} violates the pattern") {
    ChristoffelConnection g = flat_image(2, 2);
    g.set_component(1, 0, 0, RationalFunction(Polynomial::constant(1)));
    auto rep = check_liftable_connection(g, AdaptedConnectionPattern(2, 2));
    CHECK_FALSE(rep.ok);
    REQUIRE(rep.diagnostics.size() == 1);
    CHECK(rep.diagnostics[0].find("vanish on the stratum") != std::string::npos);
}

TEST_CASE("lift of the flat image is flat") {
    for (unsigned r = 2; r <= 4; ++r) {
        ChristoffelConnection lifted =
            lift_connection_slice(flat_image(r, 2), AdaptedConnectionPattern(r, 2));
        CHECK(lifted.is_zero());
    }
    // 1-D specialization: gamma = -1/(2y) lifts to the flat connection
    ChristoffelConnection g({"y"});
    g.set_component(0, 0, 0,
                    RationalFunction(Polynomial::constant(Cyclotomic(BigRational(-1, 2))),
                                     var("y")));
    CHECK(lift_connection_slice(g, AdaptedConnectionPattern(2, 1)).is_zero());
}

TEST_CASE("lift with unit coefficient functions follows the component scalings") {
    // all recovered coefficients equal to 1, r = 2, n = 2
    const unsigned r = 2, n = 2;
    const VarList yv = chart_vars(n, "y");
    const Polynomial y2 = var("y2"), z2 = var("z2");
    ChristoffelConnection g(yv);
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b)
            for (unsigned c = 0; c < n; ++c) {
                const bool ua = a == n - 1;
                const int lows = (b == n - 1 ? 1 : 0) + (c == n - 1 ? 1 : 0);
                if (ua && lows == 0) {
                    g.set_component(a, b, c, RationalFunction(y2));
                } else if (!ua && lows == 2) {
                    g.set_component(a, b, c, RationalFunction(Polynomial::constant(1), y2));
                } else if (ua && lows == 2) {
                    g.set_component(a, b, c,
                                    RationalFunction(Polynomial::constant(1)) + pole_term(r, y2));
                } else {
                    g.set_component(a, b, c, RationalFunction(Polynomial::constant(1)));
                }
            }
    auto rep = check_liftable_connection(g, AdaptedConnectionPattern(r, n));
    REQUIRE(rep.ok);
    ChristoffelConnection lifted = lift_connection_slice(g, AdaptedConnectionPattern(r, n));
    // Gamma^n_{jk} = (1/r) z^n, Gamma^i_{jn} = r z^n, Gamma^i_{nn} = r^2 (z^n)^{r-2},
    // Gamma^n_{nn} = r (z^n)^{r-1}, the rest stay constant
    CHECK(lifted.component(1, 0, 0) == RationalFunction(z2.scaled(Cyclotomic(BigRational(1, 2)))));
    CHECK(lifted.component(0, 0, 1) == RationalFunction(z2.scaled(Cyclotomic(2))));
    CHECK(lifted.component(0, 1, 0) == RationalFunction(z2.scaled(Cyclotomic(2))));
    CHECK(lifted.component(0, 1, 1) == RationalFunction(Polynomial::constant(4)));
    CHECK(lifted.component(1, 1, 1) == RationalFunction(z2.scaled(Cyclotomic(2))));
    CHECK(lifted.component(0, 0, 0) == RationalFunction(Polynomial::constant(1)));
    CHECK(lifted.component(1, 0, 1) == RationalFunction(Polynomial::constant(1)));
    CHECK(lifted.component(1, 1, 0) == RationalFunction(Polynomial::constant(1)));
}

TEST_CASE("lift refuses a failing gamma") {
    ChristoffelConnection zero(chart_vars(2, "y"));
    CHECK_THROWS_AS(lift_connection_slice(zero, AdaptedConnectionPattern(2, 2)), Error);
}

TEST_CASE("pushforward of the flat connection") {
    for (unsigned r = 2; r <= 5; ++r) {
        ChristoffelConnection flat(chart_vars(3, "z"));
        ChristoffelConnection g = pushforward_connection_slice(flat, r);
        CHECK(g == flat_image(r, 3));
    }
}

TEST_CASE("pushforward rejects non-invariant connections") {
    ChristoffelConnection g(chart_vars(2, "z"));
    g.set_component(1, 0, 0, RationalFunction(Polynomial::constant(1)));  // violates weights
    CHECK_THROWS_AS(pushforward_connection_slice(g, 2), Error);
}

TEST_CASE("1-D pushforward of a linear invariant connection") {
    // r = 2: Gamma^1_{11} = c z is invariant; gamma = c/2 - 1/(2y)
    const Cyclotomic c(3);
    ChristoffelConnection g({"z"});
    g.set_component(0, 0, 0, RationalFunction(var("z").scaled(c)));
    ChristoffelConnection down = pushforward_connection_slice(g, 2);
    RationalFunction expect =
        RationalFunction(Polynomial::constant(Cyclotomic(BigRational(3, 2)))) +
        pole_term(2, var("y"));
    CHECK(down.component(0, 0, 0) == expect);
}

TEST_CASE("pushforward agrees with the transformation-law oracle") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 12; ++trial) {
        const unsigned n = 1 + trial % 3;
        const unsigned r = 2 + trial % 3;
        ChristoffelConnection gamma = random_pattern_gamma(rng, r, n, 3);
        REQUIRE(check_liftable_connection(gamma, AdaptedConnectionPattern(r, n)).ok);
        ChristoffelConnection Gamma = lift_connection_slice(gamma, AdaptedConnectionPattern(r, n));

        // independent route: the raw transformation law along the monomial map
        const VarList zv = chart_vars(n, "z");
        const VarList yv = chart_vars(n, "y");
        std::vector<Polynomial> comps;
        for (unsigned k = 0; k < n; ++k)
            comps.push_back(Polynomial::variable(zv[k]).pow(k + 1 == n ? r : 1));
        PolyMap sigma(zv, yv, comps);
        ChristoffelConnection transformed = connection_transform(Gamma, sigma);

        ChristoffelConnection down = pushforward_connection_slice(Gamma, r);
        // express the pushforward on the source chart and compare exactly
        const auto sub = sigma.substitution();
        for (unsigned a = 0; a < n; ++a)
            for (unsigned b = 0; b < n; ++b)
                for (unsigned c2 = 0; c2 < n; ++c2)
                    CHECK(down.component(a, b, c2).compose(sub) ==
                          transformed.component(a, b, c2));
    }
}

TEST_CASE("pushforward and lift are mutually inverse on random data") {
    std::mt19937 rng(515);
    for (int trial = 0; trial < 10; ++trial) {
        const unsigned n = 1 + trial % 3;
        const unsigned r = 2 + trial % 3;
        ChristoffelConnection gamma = random_pattern_gamma(rng, r, n, 3);
        ChristoffelConnection Gamma = lift_connection_slice(gamma, AdaptedConnectionPattern(r, n));
        for (const auto& [idx, v] : Gamma.components()) CHECK(v.is_polynomial());
        CycMatrix gm = CycMatrix::identity(n);
        gm.at(n - 1, n - 1) = Cyclotomic::zeta(r);
        CHECK(is_invariant_connection(GroupElement(gm), Gamma));

        ChristoffelConnection down = pushforward_connection_slice(Gamma, r);
        CHECK(down == gamma);
        CHECK(check_liftable_connection(down, AdaptedConnectionPattern(r, n)).ok);
        CHECK(lift_connection_slice(down, AdaptedConnectionPattern(r, n)) == Gamma);
    }
}

TEST_CASE("the adapted pattern is stable under unit chart changes") {
    // y1 = w1, y2 = (1 + w1) w2: the transformed gamma keeps the adapted shape
    std::mt19937 rng(929);
    PolyMap psi({"w1", "w2"}, {"y1", "y2"},
                {var("w1"), (Polynomial::constant(1) + var("w1")) * var("w2")});
    for (unsigned r = 2; r <= 4; ++r) {
        ChristoffelConnection gamma = random_pattern_gamma(rng, r, 2, 2);
        ChristoffelConnection moved = connection_in_chart(gamma, psi);
        RationalFunction shifted =
            moved.component(1, 1, 1) +
            RationalFunction(Polynomial::constant(Cyclotomic(BigRational(r - 1, r))), var("w2"));
        // holomorphic on the polydisc chart: only powers of the unit 1 + w1
        // may remain in the denominator
        CHECK(rat_order(shifted, var("w2")) >= ExtOrder::finite(0));
        RationalFunction reduced = shifted.reduced_by({Polynomial::constant(1) + var("w1")});
        CHECK(reduced.is_polynomial());
    }
}
