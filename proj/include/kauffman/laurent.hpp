#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

namespace kauffman {

/// Exponent pair (alpha exponent, s exponent), ordered lexicographically.
using Exp = std::pair<long, long>;

/// Sparse bivariate Laurent polynomial in alpha and s with arbitrary-precision
/// integer coefficients. The zero polynomial is the empty term map; no stored
/// coefficient is ever zero, so equality is term-map equality.
class LaurentPoly {
public:
    using TermMap = std::map<Exp, mpz_class>;

    LaurentPoly() = default;
    explicit LaurentPoly(long c) { add_term(0, 0, mpz_class(c)); }
    explicit LaurentPoly(const mpz_class& c) { add_term(0, 0, c); }

    static LaurentPoly monomial(long a_exp, long s_exp, mpz_class coeff = 1) {
        LaurentPoly p;
        p.add_term(a_exp, s_exp, coeff);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == Exp{0, 0});
    }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == Exp{0, 0} &&
               terms_.begin()->second == 1;
    }
    bool is_monomial() const { return terms_.size() == 1; }

    const TermMap& terms() const { return terms_; }

    void add_term(long a_exp, long s_exp, const mpz_class& c);

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    /// Multiply by the monomial alpha^da * s^ds.
    LaurentPoly shifted(long da, long ds) const;
    LaurentPoly scaled(const mpz_class& c) const;

    /// Componentwise minimum of all exponent pairs. Requires nonzero.
    Exp min_exp() const;
    /// Lexicographically least exponent pair. Requires nonzero.
    Exp least_term() const { return terms_.begin()->first; }
    mpz_class coeff(long a_exp, long s_exp) const;

    /// gcd of the absolute values of all coefficients (0 for the zero poly).
    mpz_class content() const;
    /// Exact division by an integer; every coefficient must be divisible.
    LaurentPoly divided_by_int(const mpz_class& c) const;

    /// True when every term has alpha exponent 0.
    bool univariate_in_s() const;

private:
    TermMap terms_;
};

}  // namespace kauffman
