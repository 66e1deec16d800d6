#include "kauffman/ratfunc.hpp"

#include <sstream>
#include <vector>

namespace kauffman {

namespace {

// --- univariate integer polynomials in s, used by reduce() -----------------

using UniPoly = std::map<long, mpz_class>;  // degree -> nonzero coefficient

long udeg(const UniPoly& p) { return p.empty() ? -1 : p.rbegin()->first; }

const mpz_class& ulc(const UniPoly& p) { return p.rbegin()->second; }

void uadd_term(UniPoly& p, long d, const mpz_class& c) {
    if (c == 0) return;
    auto it = p.find(d);
    if (it == p.end()) {
        p.emplace(d, c);
    } else {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

mpz_class ucontent(const UniPoly& p) {
    mpz_class g = 0;
    for (const auto& [d, c] : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

// Primitive part with positive leading coefficient.
UniPoly upp(const UniPoly& p) {
    if (p.empty()) return p;
    mpz_class g = ucontent(p);
    if (ulc(p) < 0) g = -g;
    UniPoly r;
    for (const auto& [d, c] : p) r.emplace(d, mpz_class(c / g));
    return r;
}

// Pseudo-remainder of a by b (b nonzero).
UniPoly uprem(UniPoly a, const UniPoly& b) {
    const long db = udeg(b);
    while (udeg(a) >= db) {
        const long shift = udeg(a) - db;
        const mpz_class ca = ulc(a);
        const mpz_class cb = ulc(b);
        UniPoly next;
        for (const auto& [d, c] : a) uadd_term(next, d, c * cb);
        for (const auto& [d, c] : b) uadd_term(next, d + shift, -c * ca);
        a = std::move(next);
    }
    return a;
}

// Primitive gcd via the primitive polynomial remainder sequence.
UniPoly ugcd(UniPoly a, UniPoly b) {
    a = upp(a);
    b = upp(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (udeg(a) < udeg(b)) std::swap(a, b);
    while (!b.empty()) {
        UniPoly r = uprem(a, b);
        a = std::move(b);
        b = upp(r);
    }
    return a;
}

// Exact division a / b in Z[s]; throws if not exact.
UniPoly udivexact(UniPoly a, const UniPoly& b) {
    UniPoly q;
    const long db = udeg(b);
    while (!a.empty()) {
        const long d = udeg(a) - db;
        if (d < 0) throw std::logic_error("inexact univariate division");
        mpz_class qc, rem;
        mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), ulc(a).get_mpz_t(),
                    ulc(b).get_mpz_t());
        if (rem != 0) throw std::logic_error("inexact univariate division");
        uadd_term(q, d, qc);
        for (const auto& [bd, bc] : b) uadd_term(a, bd + d, -bc * qc);
    }
    return q;
}

bool uis_one(const UniPoly& p) {
    return p.size() == 1 && p.begin()->first == 0 && p.begin()->second == 1;
}

UniPoly umul(const UniPoly& x, const UniPoly& y) {
    UniPoly r;
    for (const auto& [dx, cx] : x)
        for (const auto& [dy, cy] : y) uadd_term(r, dx + dy, cx * cy);
    return r;
}

// gcd in Z[alpha] including the integer content.
UniPoly ugcd_full(const UniPoly& a, const UniPoly& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    mpz_class ic;
    mpz_gcd(ic.get_mpz_t(), ucontent(a).get_mpz_t(), ucontent(b).get_mpz_t());
    UniPoly g = ugcd(a, b);
    for (auto& [d, c] : g) c *= ic;
    return g;
}

// --- bivariate polynomials, viewed in s with coefficients in Z[alpha] ------

using BiPoly = std::map<long, UniPoly>;  // s-degree -> nonzero coeff in Z[alpha]

long bdeg(const BiPoly& p) { return p.empty() ? -1 : p.rbegin()->first; }
const UniPoly& blc(const BiPoly& p) { return p.rbegin()->second; }

void badd_scaled(BiPoly& p, long sdeg, const UniPoly& coeff) {
    if (coeff.empty()) return;
    auto& slot = p[sdeg];
    for (const auto& [d, c] : coeff) uadd_term(slot, d, c);
    if (slot.empty()) p.erase(sdeg);
}

BiPoly bi_from_laurent(const LaurentPoly& p) {
    BiPoly r;
    for (const auto& [e, c] : p.terms()) r[e.second][e.first] = c;
    return r;
}

LaurentPoly bi_to_laurent(const BiPoly& p) {
    LaurentPoly r;
    for (const auto& [sd, coeff] : p)
        for (const auto& [ad, c] : coeff) r.add_term(ad, sd, c);
    return r;
}

UniPoly bcontent(const BiPoly& p) {
    UniPoly g;
    for (const auto& [sd, coeff] : p) {
        g = ugcd_full(g, coeff);
        if (uis_one(g)) break;
    }
    return g;
}

BiPoly bdiv_coeff(const BiPoly& p, const UniPoly& u) {
    if (uis_one(u)) return p;
    BiPoly r;
    for (const auto& [sd, coeff] : p) r[sd] = udivexact(coeff, u);
    return r;
}

BiPoly bprem(BiPoly a, const BiPoly& b) {
    const long db = bdeg(b);
    while (bdeg(a) >= db) {
        const long shift = bdeg(a) - db;
        const UniPoly ca = blc(a);
        const UniPoly cb = blc(b);
        BiPoly next;
        for (const auto& [d, c] : a) badd_scaled(next, d, umul(c, cb));
        for (const auto& [d, c] : b) {
            UniPoly t = umul(c, ca);
            for (auto& [ad, ac] : t) ac = -ac;
            badd_scaled(next, d + shift, t);
        }
        a = std::move(next);
    }
    return a;
}

// gcd in Z[alpha][s] via the primitive PRS in s, contents handled in Z[alpha].
BiPoly bgcd(BiPoly a, BiPoly b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    const UniPoly cg = ugcd_full(bcontent(a), bcontent(b));
    a = bdiv_coeff(a, bcontent(a));
    b = bdiv_coeff(b, bcontent(b));
    if (bdeg(a) < bdeg(b)) std::swap(a, b);
    while (!b.empty()) {
        BiPoly r = bprem(a, b);
        a = std::move(b);
        b = bdiv_coeff(r, bcontent(r));
    }
    if (!uis_one(cg)) {
        BiPoly scaled;
        for (const auto& [sd, coeff] : a) scaled[sd] = umul(coeff, cg);
        a = std::move(scaled);
    }
    return a;
}

BiPoly bdivexact(BiPoly a, const BiPoly& b) {
    BiPoly q;
    const long db = bdeg(b);
    while (!a.empty()) {
        const long d = bdeg(a) - db;
        if (d < 0) throw std::logic_error("inexact bivariate division");
        const UniPoly qc = udivexact(blc(a), blc(b));
        q[d] = qc;
        for (const auto& [bd, bc] : b) {
            UniPoly t = umul(bc, qc);
            for (auto& [ad, ac] : t) ac = -ac;
            badd_scaled(a, bd + d, t);
        }
    }
    return q;
}

bool bi_is_constant(const BiPoly& p) {
    return p.size() == 1 && p.begin()->first == 0 && p.begin()->second.size() == 1 &&
           p.begin()->second.begin()->first == 0;
}

}  // namespace

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

void RatFunc::canonicalize() {
    if (den_.is_zero()) throw division_by_zero();
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    const Exp m = den_.min_exp();
    if (m.first != 0 || m.second != 0) {
        den_ = den_.shifted(-m.first, -m.second);
        num_ = num_.shifted(-m.first, -m.second);
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_.content().get_mpz_t(), den_.content().get_mpz_t());
    if (g > 1) {
        num_ = num_.divided_by_int(g);
        den_ = den_.divided_by_int(g);
    }
    if (den_.terms().begin()->second < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    if (den_ == o.den_) return RatFunc(num_ - o.num_, den_);
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::inv() const {
    if (num_.is_zero()) throw division_by_zero();
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long n) const {
    if (n < 0) return inv().pow(-n);
    RatFunc acc(1);
    RatFunc base = *this;
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

bool RatFunc::operator==(const RatFunc& o) const {
    return (num_ * o.den_ - o.num_ * den_).is_zero();
}

RatFunc RatFunc::substitute(const RatFunc& alpha_sub, const RatFunc& s_sub) const {
    auto eval_poly = [&](const LaurentPoly& p) {
        std::map<long, RatFunc> apow, spow;
        auto power = [](std::map<long, RatFunc>& cache, const RatFunc& base, long e) {
            auto it = cache.find(e);
            if (it == cache.end()) it = cache.emplace(e, base.pow(e)).first;
            return it->second;
        };
        RatFunc acc(0);
        for (const auto& [e, c] : p.terms())
            acc += RatFunc(LaurentPoly(c)) * power(apow, alpha_sub, e.first) *
                   power(spow, s_sub, e.second);
        return acc;
    };
    RatFunc n = eval_poly(num_);
    RatFunc d = eval_poly(den_);
    if (d.is_zero()) throw division_by_zero();
    return n / d;
}

mpq_class RatFunc::eval_rational(const mpq_class& alpha_val,
                                 const mpq_class& s_val) const {
    auto qpow = [](const mpq_class& base, long e) {
        if (e == 0) return mpq_class(1);
        if (base == 0) {
            if (e < 0) throw division_by_zero();
            return mpq_class(0);
        }
        mpq_class b = e > 0 ? base : mpq_class(1) / base;
        unsigned long n = e > 0 ? e : -e;
        mpq_class acc(1);
        while (n > 0) {
            if (n & 1) acc *= b;
            b *= b;
            n >>= 1;
        }
        return acc;
    };
    auto eval_poly = [&](const LaurentPoly& p) {
        mpq_class acc(0);
        for (const auto& [e, c] : p.terms())
            acc += mpq_class(c) * qpow(alpha_val, e.first) * qpow(s_val, e.second);
        return acc;
    };
    mpq_class d = eval_poly(den_);
    if (d == 0) throw pole_error();
    mpq_class r = eval_poly(num_) / d;
    r.canonicalize();
    return r;
}

RatFunc RatFunc::reduce(bool* fully) const {
    if (fully) *fully = true;
    if (num_.is_zero() || den_.is_monomial()) return *this;
    // Shift the numerator into Z[alpha >= 0][s >= 0]; the canonical form keeps
    // the denominator there already.
    const Exp nmin = num_.min_exp();
    const long da = std::min(nmin.first, 0L);
    const long ds = std::min(nmin.second, 0L);
    const BiPoly a = bi_from_laurent(num_.shifted(-da, -ds));
    const BiPoly b = bi_from_laurent(den_);
    const BiPoly g = bgcd(a, b);
    if (bi_is_constant(g)) return *this;
    LaurentPoly new_num = bi_to_laurent(bdivexact(a, g)).shifted(da, ds);
    LaurentPoly new_den = bi_to_laurent(bdivexact(b, g));
    return RatFunc(std::move(new_num), std::move(new_den));
}

namespace {

void append_plain_term(std::ostringstream& out, bool first, const Exp& e,
                       const mpz_class& c) {
    mpz_class a = abs(c);
    if (first) {
        if (c < 0) out << "-";
    } else {
        out << (c < 0 ? " - " : " + ");
    }
    std::vector<std::string> parts;
    if (a != 1 || (e.first == 0 && e.second == 0)) parts.push_back(a.get_str());
    if (e.first != 0)
        parts.push_back(e.first == 1 ? "a" : "a^" + std::to_string(e.first));
    if (e.second != 0)
        parts.push_back(e.second == 1 ? "s" : "s^" + std::to_string(e.second));
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out << "*";
        out << parts[i];
    }
}

std::string poly_plain(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        append_plain_term(out, first, e, c);
        first = false;
    }
    return out.str();
}

std::string poly_latex(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool has_var = e.first != 0 || e.second != 0;
        if (a != 1 || !has_var) out << a.get_str();
        if (e.first != 0) {
            out << "\\alpha";
            if (e.first != 1) out << "^{" << e.first << "}";
        }
        if (e.second != 0) {
            out << "s";
            if (e.second != 1) out << "^{" << e.second << "}";
        }
    }
    return out.str();
}

}  // namespace

std::string RatFunc::to_plain() const {
    if (den_.is_one()) return poly_plain(num_);
    return "(" + poly_plain(num_) + ")/(" + poly_plain(den_) + ")";
}

std::string RatFunc::to_latex() const {
    if (den_.is_one()) return poly_latex(num_);
    return "\\frac{" + poly_latex(num_) + "}{" + poly_latex(den_) + "}";
}

RatFunc delta() {
    LaurentPoly num;
    num.add_term(1, 0, 1);
    num.add_term(-1, 0, -1);
    num.add_term(0, 1, 1);
    num.add_term(0, -1, -1);
    LaurentPoly den;
    den.add_term(0, 1, 1);
    den.add_term(0, -1, -1);
    return RatFunc(num, den);
}

RatFunc s_minus_sinv() {
    LaurentPoly p;
    p.add_term(0, 1, 1);
    p.add_term(0, -1, -1);
    return RatFunc(p);
}

}  // namespace kauffman
