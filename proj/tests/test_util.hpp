#ifndef ORBILIFT_TEST_UTIL_HPP
#define ORBILIFT_TEST_UTIL_HPP

#include <random>

#include <orbilift/orbilift.hpp>

namespace testutil {

using namespace orbilift;

inline BigRational random_rational(std::mt19937& rng, int max_abs = 8) {
    std::uniform_int_distribution<int> num(-max_abs, max_abs);
    std::uniform_int_distribution<int> den(1, max_abs);
    return BigRational(num(rng), den(rng));
}

inline Cyclotomic random_cyclotomic(std::mt19937& rng, unsigned conductor) {
    const unsigned deg = euler_phi(conductor);
    Cyclotomic acc = Cyclotomic(random_rational(rng));
    for (unsigned i = 1; i < deg; ++i)
        acc += Cyclotomic::zeta(conductor).pow(i) * Cyclotomic(random_rational(rng));
    return acc;
}

inline Polynomial random_polynomial(std::mt19937& rng, const VarList& vars, unsigned max_deg,
                                    int max_terms = 4, int max_coeff = 5) {
    std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
    std::uniform_int_distribution<unsigned> deg(0, max_deg);
    std::uniform_int_distribution<int> terms(1, max_terms);
    Polynomial p;
    const int t = terms(rng);
    for (int k = 0; k < t; ++k) {
        Polynomial mono = Polynomial::constant(coeff(rng));
        unsigned budget = deg(rng);
        for (const auto& v : vars) {
            if (budget == 0) break;
            std::uniform_int_distribution<unsigned> e(0, budget);
            const unsigned ev = e(rng);
            if (ev > 0) mono = mono * Polynomial::variable(v).pow(ev);
            budget -= ev;
        }
        p += mono;
    }
    return p;
}

inline Polynomial nonzero_polynomial(std::mt19937& rng, const VarList& vars, unsigned max_deg) {
    while (true) {
        Polynomial p = random_polynomial(rng, vars, max_deg);
        if (!p.is_zero()) return p;
    }
}

inline GroupElement diag(const std::vector<Cyclotomic>& entries) {
    CycMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, i) = entries[i];
    return GroupElement(m);
}

inline GroupElement permutation(const std::vector<std::size_t>& image) {
    CycMatrix m(image.size(), image.size());
    for (std::size_t i = 0; i < image.size(); ++i) m.at(i, image[i]) = Cyclotomic::one();
    return GroupElement(m);
}

}  // namespace testutil

#endif
