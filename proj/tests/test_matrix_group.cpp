#include <doctest.h>

#include <random>

#include "test_util.hpp"

using namespace orbilift;
using testutil::diag;
using testutil::permutation;

namespace {

FiniteMatrixGroup symmetric3() {
    // two transpositions of S_3 acting on C^3 by permutation matrices
    return close({permutation({1, 0, 2}), permutation({0, 2, 1})});
}

}  // namespace

TEST_CASE("closure of a scalar cyclic group") {
    auto G = close({diag({Cyclotomic::zeta(3), Cyclotomic::zeta(3)})});
    CHECK(G.order() == 3);
    CHECK(is_diagonal(G));
}

TEST_CASE("closure of S_3 from two transpositions") {
    auto G = symmetric3();
    CHECK(G.order() == 6);
    CHECK_FALSE(is_diagonal(G));
}

TEST_CASE("infinite groups hit the cap") {
    CycMatrix m(1, 1);
    m.at(0, 0) = Cyclotomic(2);
    CHECK_THROWS_WITH_AS(close({GroupElement(m)}, 100), "group too large or infinite", Error);
}

TEST_CASE("non-invertible generators are rejected") {
    CycMatrix m(2, 2);
    m.at(0, 0) = Cyclotomic(1);
    CHECK_THROWS_AS(close({GroupElement(m)}), Error);
}

TEST_CASE("reflections of +-I are empty") {
    auto G = close({diag({Cyclotomic(-1), Cyclotomic(-1)})});
    CHECK(G.order() == 2);
    CHECK(reflections(G).empty());
    CHECK(hyperplanes(G).empty());
    CHECK_FALSE(is_reflection_group(G));
}

TEST_CASE("cyclic reflection group on the second coordinate") {
    for (unsigned r = 2; r <= 5; ++r) {
        auto G = close({diag({Cyclotomic(1), Cyclotomic::zeta(r)})});
        CHECK(G.order() == r);
        CHECK(reflections(G).size() == r - 1);
        auto hps = hyperplanes(G);
        REQUIRE(hps.size() == 1);
        CHECK(hps[0].label == r);
        CHECK(hps[0].linear_form == Polynomial::variable("z2"));
        CHECK(element_order(hps[0].stabilizer_generator) == r);
        CHECK(is_reflection_group(G));
    }
}

TEST_CASE("S_2 swap has the difference hyperplane") {
    auto G = close({permutation({1, 0})});
    auto hps = hyperplanes(G);
    REQUIRE(hps.size() == 1);
    CHECK(hps[0].label == 2);
    CHECK(hps[0].linear_form ==
          Polynomial::variable("z1") - Polynomial::variable("z2"));
}

TEST_CASE("S_3 has three transposition reflections") {
    auto G = symmetric3();
    CHECK(reflections(G).size() == 3);
    auto hps = hyperplanes(G);
    CHECK(hps.size() == 3);
    for (const auto& h : hps) CHECK(h.label == 2);
    CHECK(is_reflection_group(G));
}

TEST_CASE("is_reflection_group on a single reflection generator") {
    auto G = close({diag({Cyclotomic::zeta(2), Cyclotomic(1)})});
    CHECK(is_reflection_group(G));
}

TEST_CASE("is_diagonal") {
    CHECK(is_diagonal(close({diag({Cyclotomic::zeta(2), Cyclotomic::zeta(3)})})));
    CHECK_FALSE(is_diagonal(close({permutation({1, 0})})));
    CHECK(is_diagonal(close({diag({Cyclotomic(1)})})));  // trivial group
}

TEST_CASE("element orders divide the group order") {
    std::vector<FiniteMatrixGroup> groups;
    groups.push_back(symmetric3());
    groups.push_back(close({diag({Cyclotomic::zeta(4), Cyclotomic::zeta(6)})}));
    for (const auto& G : groups)
        for (const auto& g : G.elements()) CHECK(G.order() % element_order(g) == 0);
}

TEST_CASE("stabilizer generators have exact order e_H") {
    auto G = symmetric3();
    for (const auto& h : hyperplanes(G)) {
        GroupElement acc = h.stabilizer_generator;
        for (unsigned k = 1; k < h.label; ++k) {
            CHECK_FALSE(acc.is_identity());
            acc = acc * h.stabilizer_generator;
        }
        CHECK(acc.is_identity());
    }
}

TEST_CASE("sum of (e_H - 1) counts the reflections") {
    for (const auto& G : {symmetric3(), close({diag({Cyclotomic::zeta(3), Cyclotomic(1)}),
                                               diag({Cyclotomic(1), Cyclotomic::zeta(4)})})}) {
        std::size_t total = 0;
        for (const auto& h : hyperplanes(G)) total += h.label - 1;
        CHECK(total == reflections(G).size());
    }
}

TEST_CASE("hyperplane forms annihilate the fixed space") {
    auto G = close({diag({Cyclotomic(1), Cyclotomic::zeta(3)}), permutation({1, 0})});
    for (const auto& h : hyperplanes(G)) {
        const auto& g = h.stabilizer_generator;
        CycMatrix d = g.matrix() - CycMatrix::identity(g.dim());
        auto kernel = d.kernel_basis();
        CHECK(kernel.size() == g.dim() - 1);
        for (const auto& v : kernel) {
            std::map<std::string, Cyclotomic> point;
            for (std::size_t i = 0; i < v.size(); ++i) point[G.coords()[i]] = v[i];
            CHECK(h.linear_form.evaluate(point).is_zero());
        }
    }
}

TEST_CASE("hyperoctahedral-type groups with cyclotomic hyperplanes") {
    // diag(-1, 1) and the swap generate a group of order 8 with four
    // hyperplanes: z1, z2, z1 - z2, z1 + z2, all with label 2
    auto B2 = close({diag({Cyclotomic(-1), Cyclotomic(1)}), permutation({1, 0})});
    CHECK(B2.order() == 8);
    CHECK(reflections(B2).size() == 4);
    CHECK(hyperplanes(B2).size() == 4);
    CHECK(is_reflection_group(B2));

    // diag(zeta_4, 1) and the swap: order 32, labels 4 on the coordinate
    // hyperplanes and 2 on the four skew ones
    auto G = close({diag({Cyclotomic::zeta(4), Cyclotomic(1)}), permutation({1, 0})});
    CHECK(G.order() == 32);
    CHECK(reflections(G).size() == 10);
    auto hps = hyperplanes(G);
    CHECK(hps.size() == 6);
    std::size_t label4 = 0, label2 = 0;
    for (const auto& h : hps) {
        if (h.label == 4) ++label4;
        if (h.label == 2) ++label2;
    }
    CHECK(label4 == 2);
    CHECK(label2 == 4);
    CHECK(is_reflection_group(G));
}

TEST_CASE("reflections are stable under conjugation") {
    auto G = symmetric3();
    auto refl = reflections(G);
    std::mt19937 rng(13);
    std::uniform_int_distribution<std::size_t> pick_g(0, G.order() - 1);
    std::uniform_int_distribution<std::size_t> pick_r(0, refl.size() - 1);
    for (int k = 0; k < 40; ++k) {
        const GroupElement& g = G.elements()[pick_g(rng)];
        const GroupElement& r = refl[pick_r(rng)];
        GroupElement conj = g * r * g.inverse();
        CHECK(is_reflection(conj));
    }
}
