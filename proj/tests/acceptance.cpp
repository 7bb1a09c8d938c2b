// Acceptance suite: one pass/fail line per criterion, exit 0 only when all
// criteria hold. Everything is checked exactly; the wall-clock budgets are
// part of the criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <orbilift/orbilift.hpp>

using namespace orbilift;

namespace {

Polynomial var(const std::string& n) { return Polynomial::variable(n); }

GroupElement diag(const std::vector<Cyclotomic>& entries) {
    CycMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, i) = entries[i];
    return GroupElement(m);
}

GroupElement permutation(const std::vector<std::size_t>& image) {
    CycMatrix m(image.size(), image.size());
    for (std::size_t i = 0; i < image.size(); ++i) m.at(i, image[i]) = Cyclotomic::one();
    return GroupElement(m);
}

FiniteMatrixGroup cyclic_line(unsigned r) {
    return close({diag({Cyclotomic::zeta(r)})}, 10000, {"z"});
}

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<bool(std::string&)> body;
};

Polynomial random_poly(std::mt19937& rng, const VarList& vars, unsigned max_deg) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<unsigned> deg(0, max_deg);
    Polynomial p;
    for (int t = 0; t < 3; ++t) {
        Polynomial mono = Polynomial::constant(coeff(rng));
        unsigned budget = deg(rng);
        for (const auto& v : vars) {
            if (budget == 0) break;
            std::uniform_int_distribution<unsigned> e(0, budget);
            unsigned ev = e(rng);
            if (ev > 0) mono = mono * var(v).pow(ev);
            budget -= ev;
        }
        p += mono;
    }
    return p;
}

// ---- criterion 1: two-route agreement on the 1-D charts -------------------

bool criterion_thm37_oracle(std::string& detail) {
    const Thm37Sweep sweep = run_thm37_sweep(6, 2, -3, 3);
    detail = std::to_string(sweep.verdict_agreements) + "/" +
             std::to_string(sweep.verdict_cases) + " verdicts agree";
    return sweep.verdict_cases == 945 && sweep.verdict_agreements == 945;
}

// ---- criterion 2: the closed-form inequality equivalence ------------------

bool criterion_inequality(std::string& detail) {
    unsigned long long cases = 0, agree = 0;
    for (long long r = 2; r <= 6; ++r)
        for (long long p = 0; p <= 2; ++p)
            for (long long q = 0; q <= 2; ++q)
                for (long long m = -3; m <= 3; ++m) {
                    ++cases;
                    const long long s = floordiv(p - q, r);
                    const bool lhs = m * r + (q - p) * (r - 1) >= 0;
                    const bool rhs = m >= p - q - s;
                    if (lhs == rhs) ++agree;
                }
    detail = std::to_string(agree) + "/" + std::to_string(cases) + " tuples agree";
    return cases == agree;
}

// ---- criterion 3: the adapted-chart connection formulas --------------------

ChristoffelConnection random_adapted_gamma(std::mt19937& rng, unsigned r, unsigned n,
                                           unsigned max_deg) {
    const VarList yv = chart_vars(n, "y");
    const Polynomial yn = var(yv.back());
    ChristoffelConnection g(yv);
    const unsigned last = n - 1;
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b)
            for (unsigned c = 0; c < n; ++c) {
                Polynomial tilde = random_poly(rng, yv, max_deg);
                const bool ua = a == last;
                const int lows = (b == last ? 1 : 0) + (c == last ? 1 : 0);
                RationalFunction v;
                if (ua && lows == 0) v = RationalFunction(yn * tilde);
                else if (!ua && lows == 2) v = RationalFunction(tilde, yn);
                else if (ua && lows == 2)
                    v = RationalFunction(tilde) -
                        RationalFunction(Polynomial::constant(Cyclotomic(BigRational(r - 1, r))),
                                         yn);
                else v = RationalFunction(tilde);
                g.set_component(a, b, c, v);
            }
    return g;
}

bool criterion_connection_formulas(std::string& detail) {
    // the image of the flat connection along z -> z^r
    for (unsigned r = 2; r <= 6; ++r) {
        ChristoffelConnection flat({"z"});
        PolyMap f({"z"}, {"y"}, {var("z").pow(r)});
        const RationalFunction expect(
            Polynomial::constant(Cyclotomic(BigRational(-(static_cast<long long>(r) - 1), r))),
            var("z").pow(r));
        if (connection_transform(flat, f).component(0, 0, 0) != expect) {
            detail = "flat image mismatch at r=" + std::to_string(r);
            return false;
        }
        // the checker accepts the image of the flat connection ...
        ChristoffelConnection gamma({"y"});
        gamma.set_component(0, 0, 0, RationalFunction(
            Polynomial::constant(Cyclotomic(BigRational(-(static_cast<long long>(r) - 1), r))),
            var("y")));
        if (!check_liftable_connection(gamma, AdaptedConnectionPattern(r, 1)).ok) {
            detail = "checker rejected the flat image at r=" + std::to_string(r);
            return false;
        }
        // ... and rejects the flat connection on the orbit chart
        if (check_liftable_connection(ChristoffelConnection({"y"}),
                                      AdaptedConnectionPattern(r, 1)).ok) {
            detail = "checker accepted gamma = 0 at r=" + std::to_string(r);
            return false;
        }
    }
    // round trips on 25 random invariant connections, exact equality
    std::mt19937 rng(20260101);
    for (int trial = 0; trial < 25; ++trial) {
        const unsigned n = 1 + trial % 3;
        const unsigned r = 2 + trial % 3;
        ChristoffelConnection gamma = random_adapted_gamma(rng, r, n, 4);
        if (!check_liftable_connection(gamma, AdaptedConnectionPattern(r, n)).ok) {
            detail = "random adapted gamma failed its own pattern";
            return false;
        }
        ChristoffelConnection Gamma = lift_connection_slice(gamma, AdaptedConnectionPattern(r, n));
        CycMatrix gm = CycMatrix::identity(n);
        gm.at(n - 1, n - 1) = Cyclotomic::zeta(r);
        if (!is_invariant_connection(GroupElement(gm), Gamma)) {
            detail = "lifted connection is not invariant";
            return false;
        }
        if (pushforward_connection_slice(Gamma, r) != gamma) {
            detail = "pushforward(lift(gamma)) != gamma";
            return false;
        }
        if (lift_connection_slice(pushforward_connection_slice(Gamma, r),
                                  AdaptedConnectionPattern(r, n)) != Gamma) {
            detail = "lift(pushforward(Gamma)) != Gamma";
            return false;
        }
    }
    detail = "flat images for r=2..6, 25 exact round trips";
    return true;
}

// ---- criterion 4: Solomon expressibility -----------------------------------

bool criterion_solomon(std::string& detail) {
    struct Family {
        std::string name;
        FiniteMatrixGroup G;
    };
    std::vector<Family> groups;
    groups.push_back({"Z2", cyclic_line(2)});
    groups.push_back({"Z3", cyclic_line(3)});
    groups.push_back({"S2", close({permutation({1, 0})})});
    groups.push_back({"S3", close({permutation({1, 0, 2}), permutation({0, 2, 1})})});

    std::mt19937 rng(424242);
    unsigned long long done = 0;
    for (const auto& fam : groups) {
        const auto& G = fam.G;
        const OrbitMap sigma = is_diagonal(G) ? monomial_orbit_map(G) : orbit_map(G);
        const unsigned n = static_cast<unsigned>(G.dim());
        int produced = 0;
        int tries = 0;
        while (produced < 50) {
            if (++tries > 2000) {
                detail = "could not sample invariant forms for " + fam.name;
                return false;
            }
            std::uniform_int_distribution<unsigned> pick_q(1, n);
            const unsigned q = pick_q(rng);
            TensorField raw(0, q, G.coords());
            std::uniform_int_distribution<unsigned> idx(0, n - 1);
            for (int c = 0; c < 3; ++c) {
                MultiIndex mi(q);
                for (auto& e : mi) e = idx(rng);
                raw.add_component(mi, RationalFunction(random_poly(rng, G.coords(), 4)));
            }
            TensorField skew(0, q, G.coords());
            if (q == 1) {
                skew = raw;
            } else {
                // antisymmetrize over all covariant slots
                std::vector<unsigned> perm(q);
                for (unsigned i = 0; i < q; ++i) perm[i] = i;
                std::vector<unsigned> order = perm;
                for (const auto& [mi, v] : raw.components()) {
                    std::sort(order.begin(), order.end());
                    do {
                        int sign = 1;
                        for (std::size_t i = 0; i < order.size(); ++i)
                            for (std::size_t j = i + 1; j < order.size(); ++j)
                                if (order[i] > order[j]) sign = -sign;
                        MultiIndex image(q);
                        for (unsigned i = 0; i < q; ++i) image[i] = mi[order[i]];
                        skew.add_component(image,
                                           sign > 0 ? v : -v);
                    } while (std::next_permutation(order.begin(), order.end()));
                }
            }
            TensorField w = reynolds_tensor(G, skew);
            if (w.is_zero()) continue;
            if (!is_skew_covariant(w) || !is_invariant(G, w)) {
                detail = "sampler produced a non-invariant form";
                return false;
            }
            TensorField phi = solomon_express(w, sigma, G);
            if (!is_holomorphic(phi) || pullback(phi, sigma.map) != w) {
                detail = "round trip failed over " + fam.name;
                return false;
            }
            ++produced;
            ++done;
        }
    }
    detail = std::to_string(done) + " forms expressed with exact round trips";
    return done == 200;
}

// ---- criterion 5: reflection data ------------------------------------------

bool criterion_reflection_data(std::string& detail) {
    {
        auto S3 = close({permutation({1, 0, 2}), permutation({0, 2, 1})});
        auto hps = hyperplanes(S3);
        if (hps.size() != 3) {
            detail = "S3 hyperplane count";
            return false;
        }
        for (const auto& h : hps)
            if (h.label != 2) {
                detail = "S3 label";
                return false;
            }
    }
    for (unsigned r = 2; r <= 6; ++r) {
        auto G = close({diag({Cyclotomic(1), Cyclotomic::zeta(r)})});
        auto hps = hyperplanes(G);
        if (hps.size() != 1 || hps[0].label != r ||
            hps[0].linear_form != var("z2")) {
            detail = "diag(1, zeta_" + std::to_string(r) + ") hyperplane data";
            return false;
        }
    }
    {
        auto PM = close({diag({Cyclotomic(-1), Cyclotomic(-1)})});
        if (!hyperplanes(PM).empty()) {
            detail = "+-I must have no hyperplanes";
            return false;
        }
    }
    // div(jacobian_det sigma) = sum (e_H - 1) H for S_2, S_3 and the Z_r family
    std::vector<FiniteMatrixGroup> fams;
    fams.push_back(close({permutation({1, 0})}));
    fams.push_back(close({permutation({1, 0, 2}), permutation({0, 2, 1})}));
    for (unsigned r = 2; r <= 6; ++r) fams.push_back(cyclic_line(r));
    for (const auto& G : fams) {
        const OrbitMap sigma = orbit_map(G);
        const Polynomial det = jacobian_det(sigma.map);
        Polynomial expected = Polynomial::constant(1);
        long total = 0;
        for (const auto& h : hyperplanes(G)) {
            if (multiplicity(det, h.linear_form) !=
                ExtOrder::finite(static_cast<long long>(h.label - 1))) {
                detail = "multiplicity of det J along a hyperplane";
                return false;
            }
            expected = expected * h.linear_form.pow(h.label - 1);
            total += h.label - 1;
        }
        auto quot = exact_divide(det, expected);
        if (det.total_degree() != total || !quot || !quot->is_constant()) {
            detail = "det J is not a scalar times the product of hyperplane forms";
            return false;
        }
    }
    detail = "S3, +-I, diag(1, zeta_r) and det J divisors all exact";
    return true;
}

// ---- criterion 6: invariant generation --------------------------------------

bool criterion_invariants(std::string& detail) {
    for (unsigned r = 2; r <= 6; ++r) {
        auto basis = invariant_generators(cyclic_line(r));
        if (basis.degrees != std::vector<unsigned>{r}) {
            detail = "Z_" + std::to_string(r) + " degrees";
            return false;
        }
    }
    auto S2 = close({permutation({1, 0})});
    auto S3 = close({permutation({1, 0, 2}), permutation({0, 2, 1})});
    auto PM = close({diag({Cyclotomic(-1), Cyclotomic(-1)})});
    if (invariant_generators(S2).degrees != std::vector<unsigned>{1, 2}) {
        detail = "S2 degrees";
        return false;
    }
    if (invariant_generators(S3).degrees != std::vector<unsigned>{1, 2, 3}) {
        detail = "S3 degrees";
        return false;
    }
    if (invariant_generators(PM).degrees != std::vector<unsigned>{2, 2, 2}) {
        detail = "+-I degrees";
        return false;
    }
    // product of degrees = |G| on the reflection subfamily
    std::vector<FiniteMatrixGroup> fams;
    fams.push_back(S2);
    fams.push_back(S3);
    for (unsigned r = 2; r <= 6; ++r) fams.push_back(cyclic_line(r));
    for (const auto& G : fams) {
        unsigned long long prod = 1;
        for (unsigned d : invariant_generators(G).degrees) prod *= d;
        if (prod != G.order()) {
            detail = "product of degrees != |G|";
            return false;
        }
    }
    detail = "degrees {r}, {1,2}, {1,2,3}, {2,2,2}; products match orders";
    return true;
}

// ---- criterion 7: residuum chart independence --------------------------------

bool criterion_chart_independence(std::string& detail) {
    PolyMap psi({"w1", "w2"}, {"y1", "y2"},
                {var("w1"), (Polynomial::constant(1) + var("w1")) * var("w2")});
    std::vector<std::pair<TensorField, unsigned>> family;
    const Polynomial y1 = var("y1"), y2 = var("y2");
    auto add = [&](unsigned r, unsigned p, unsigned q, const MultiIndex& idx,
                   const RationalFunction& v) {
        TensorField T(p, q, {"y1", "y2"});
        T.set_component(idx, v);
        family.emplace_back(T, r);
    };
    add(2, 1, 0, {1}, RationalFunction(Polynomial::constant(1), y2));
    add(2, 1, 0, {1}, RationalFunction(y2));
    add(2, 0, 1, {1}, RationalFunction(Polynomial::constant(1), y2.pow(2)));
    add(3, 0, 1, {1}, RationalFunction(y1, y2));
    add(3, 1, 1, {1, 1}, RationalFunction(y1 + y2));
    add(3, 1, 1, {1, 0}, RationalFunction(Polynomial::constant(1), y2.pow(3)));
    add(4, 0, 2, {1, 1}, RationalFunction(y2.pow(2)));
    add(4, 2, 0, {1, 1}, RationalFunction(y1.pow(2), y2));
    add(5, 1, 1, {0, 1}, RationalFunction(y1 * y2));
    add(5, 2, 1, {1, 1, 1}, RationalFunction(Polynomial::constant(7), y2));
    if (family.size() != 10) {
        detail = "family size";
        return false;
    }
    for (const auto& [T, r] : family) {
        const ExtOrder before = residuum(T, StratumModel::make("y2", r)).mu_S;
        const ExtOrder after = residuum(pullback(T, psi), StratumModel::make("w2", r)).mu_S;
        if (!(before == after)) {
            detail = "mu_S changed under the unit chart change";
            return false;
        }
    }
    detail = "mu_S invariant on the 10-tensor family";
    return true;
}

// ---- criterion 8: diffeomorphism necessary conditions -----------------------

bool criterion_diffeo(std::string& detail) {
    for (unsigned r = 2; r <= 5; ++r) {
        std::vector<StratumModel> strata{StratumModel::make("y", r)};
        PolyMap id = PolyMap::identity({"y"});
        PolyMap scale({"y"}, {"y"}, {var("y").scaled(Cyclotomic(2))});
        PolyMap unscale({"y"}, {"y"}, {var("y").scaled(Cyclotomic(BigRational(1, 2)))});
        if (!check_diffeo_conditions(id, id, strata, strata) ||
            !check_diffeo_conditions(scale, unscale, strata, strata)) {
            detail = "matching charts must pass at r=" + std::to_string(r);
            return false;
        }
        std::vector<StratumModel> other{StratumModel::make("y", r + 1)};
        if (check_diffeo_conditions(id, id, strata, other)) {
            detail = "label mismatch must fail";
            return false;
        }
    }
    detail = "identity and scalings pass, label mismatches fail (r = 2..5)";
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {"two-route lifting equivalence (945 one-dimensional cases)", 10.0,
         criterion_thm37_oracle},
        {"closed-form inequality equivalence (exhaustive)", 10.0, criterion_inequality},
        {"adapted-chart connection formulas and round trips", 60.0,
         criterion_connection_formulas},
        {"Solomon expressibility (50 random forms per group)", 60.0, criterion_solomon},
        {"reflection data and Jacobian divisor", 30.0, criterion_reflection_data},
        {"invariant generator degrees", 30.0, criterion_invariants},
        {"residuum chart independence", 30.0, criterion_chart_independence},
        {"diffeomorphism divisor conditions", 10.0, criterion_diffeo},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        std::string detail;
        bool ok = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            ok = c.body(detail);
        } catch (const Error& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && seconds > c.budget_seconds) {
            ok = false;
            detail += " (budget " + std::to_string(c.budget_seconds) + "s exceeded)";
        }
        std::printf("[%s] criterion %zu: %s - %s (%.2fs)\n", ok ? "PASS" : "FAIL", i + 1,
                    c.name.c_str(), detail.c_str(), seconds);
        if (!ok) ++failed;
    }
    std::printf("%zu criteria: %zu passed, %d failed\n", criteria.size(),
                criteria.size() - failed, failed);
    return failed == 0 ? 0 : 1;
}
