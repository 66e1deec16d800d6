#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

#include "kauffman/laurent.hpp"

namespace kauffman {

struct division_by_zero : std::domain_error {
    division_by_zero() : std::domain_error("division by zero rational function") {}
};

struct pole_error : std::domain_error {
    pole_error() : std::domain_error("denominator vanishes at evaluation point") {}
};

/// Element of the ground field Q(alpha, s), stored as a quotient of two
/// Laurent polynomials. Values are immutable after construction and always
/// kept in canonical form:
///   - den is nonzero, carries no negative exponents, and has exponent
///     minimum (0,0) (the minimal monomial shift is applied to num too);
///   - gcd of all integer coefficients across num and den is 1;
///   - the lexicographically least term of den has positive coefficient.
/// Equality compares by cross-multiplication, so it is independent of
/// whether gcd reduction (reduce()) has been applied.
class RatFunc {
public:
    RatFunc() : num_(), den_(LaurentPoly(1)) {}
    RatFunc(long n) : num_(LaurentPoly(n)), den_(LaurentPoly(1)) {}
    RatFunc(LaurentPoly num, LaurentPoly den = LaurentPoly(1));

    static RatFunc alpha(long power = 1) {
        return power >= 0 ? RatFunc(LaurentPoly::monomial(power, 0))
                          : RatFunc(LaurentPoly(1), LaurentPoly::monomial(-power, 0));
    }
    static RatFunc s(long power = 1) {
        return power >= 0 ? RatFunc(LaurentPoly::monomial(0, power))
                          : RatFunc(LaurentPoly(1), LaurentPoly::monomial(0, -power));
    }
    static RatFunc monomial(long a_exp, long s_exp, mpz_class coeff = 1) {
        return RatFunc(LaurentPoly::monomial(a_exp, s_exp, std::move(coeff)));
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const { return *this * o.inv(); }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    /// Multiplicative inverse; throws division_by_zero on 0.
    RatFunc inv() const;
    RatFunc pow(long n) const;

    /// Cross-multiplication equality: num*o.den == o.num*den as polynomials.
    bool operator==(const RatFunc& o) const;

    /// Exact composition a(alpha_sub, s_sub). Throws division_by_zero when
    /// the substituted denominator vanishes identically.
    RatFunc substitute(const RatFunc& alpha_sub, const RatFunc& s_sub) const;

    /// Shorthand for the mirror substitution (alpha, s) -> (1/alpha, 1/s).
    RatFunc mirror() const { return substitute(alpha(-1), s(-1)); }

    /// Exact rational evaluation; throws pole_error when den vanishes at the
    /// point, division_by_zero when a negative power of a zero value is hit.
    mpq_class eval_rational(const mpq_class& alpha_val, const mpq_class& s_val) const;

    /// Full gcd reduction over Z[alpha, s] (primitive PRS in s with contents
    /// handled in Z[alpha]). The result is in lowest terms; *fully, when
    /// given, is set accordingly and is currently always true.
    RatFunc reduce(bool* fully = nullptr) const;

    std::string to_plain() const;
    std::string to_latex() const;

private:
    LaurentPoly num_, den_;
    void canonicalize();
};

/// The loop value delta = (alpha - 1/alpha)/(s - 1/s) + 1.
RatFunc delta();

/// s - 1/s, the skein-relation coefficient.
RatFunc s_minus_sinv();

}  // namespace kauffman
