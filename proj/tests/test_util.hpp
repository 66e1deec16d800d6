#pragma once

#include <random>

#include "kauffman/ratfunc.hpp"

namespace kauffman::testutil {

/// Random sparse Laurent polynomial with exponents in [-2, 2] and small
/// coefficients. May be zero.
inline LaurentPoly random_poly(std::mt19937& gen) {
    std::uniform_int_distribution<int> n_terms(0, 4);
    std::uniform_int_distribution<long> exp(-2, 2);
    std::uniform_int_distribution<long> coeff(-3, 3);
    LaurentPoly p;
    const int n = n_terms(gen);
    for (int i = 0; i < n; ++i) p.add_term(exp(gen), exp(gen), mpz_class(coeff(gen)));
    return p;
}

inline LaurentPoly random_nonzero_poly(std::mt19937& gen) {
    for (;;) {
        LaurentPoly p = random_poly(gen);
        if (!p.is_zero()) return p;
    }
}

inline RatFunc random_ratfunc(std::mt19937& gen) {
    return RatFunc(random_poly(gen), random_nonzero_poly(gen));
}

inline RatFunc random_nonzero_ratfunc(std::mt19937& gen) {
    for (;;) {
        RatFunc f = random_ratfunc(gen);
        if (!f.is_zero()) return f;
    }
}

}  // namespace kauffman::testutil
