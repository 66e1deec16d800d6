#include "kauffman/laurent.hpp"

#include <stdexcept>

namespace kauffman {

void LaurentPoly::add_term(long a_exp, long s_exp, const mpz_class& c) {
    if (c == 0) return;
    Exp key{a_exp, s_exp};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e.first, e.second, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e.first, e.second, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            r.add_term(e1.first + e2.first, e1.second + e2.second, c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::shifted(long da, long ds) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(Exp{e.first + da, e.second + ds}, c);
    return r;
}

LaurentPoly LaurentPoly::scaled(const mpz_class& c) const {
    if (c == 0) return LaurentPoly{};
    LaurentPoly r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

Exp LaurentPoly::min_exp() const {
    if (is_zero()) throw std::logic_error("min_exp of zero polynomial");
    long ma = terms_.begin()->first.first;
    long ms = terms_.begin()->first.second;
    for (const auto& [e, c] : terms_) {
        ma = std::min(ma, e.first);
        ms = std::min(ms, e.second);
    }
    return {ma, ms};
}

mpz_class LaurentPoly::coeff(long a_exp, long s_exp) const {
    auto it = terms_.find(Exp{a_exp, s_exp});
    return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class LaurentPoly::content() const {
    mpz_class g = 0;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

LaurentPoly LaurentPoly::divided_by_int(const mpz_class& c) const {
    LaurentPoly r;
    for (const auto& [e, k] : terms_) {
        mpz_class q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), k.get_mpz_t(), c.get_mpz_t());
        if (rem != 0) throw std::logic_error("inexact integer division");
        r.terms_.emplace(e, q);
    }
    return r;
}

bool LaurentPoly::univariate_in_s() const {
    for (const auto& [e, c] : terms_)
        if (e.first != 0) return false;
    return true;
}

}  // namespace kauffman
