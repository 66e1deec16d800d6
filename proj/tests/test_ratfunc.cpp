#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kauffman/ratfunc.hpp"
#include "kauffman/serialize.hpp"
#include "test_util.hpp"

using namespace kauffman;
using testutil::random_nonzero_ratfunc;
using testutil::random_ratfunc;

namespace {

RatFunc z() { return s_minus_sinv(); }

}  // namespace

TEST_CASE("delta algebra") {
    // delta * (s - 1/s) = alpha - 1/alpha + s - 1/s, straight from the
    // definition.
    const RatFunc lhs = delta() * z();
    const RatFunc rhs = RatFunc::alpha(1) - RatFunc::alpha(-1) + z();
    CHECK(lhs == rhs);

    CHECK(delta().inv() == z() / rhs);
    CHECK(delta().inv() + (RatFunc(1) - delta().inv()) == RatFunc(1));
    CHECK(delta() * delta().inv() == RatFunc(1));
}

TEST_CASE("rational evaluation") {
    // delta(2, 3) = (3/2)/(8/3) + 1 = 25/16, computed by hand.
    CHECK(delta().eval_rational(mpq_class(2), mpq_class(3)) == mpq_class(25, 16));
    CHECK(z().eval_rational(mpq_class(5), mpq_class(2)) == mpq_class(3, 2));
    CHECK(RatFunc::monomial(-2, 3).eval_rational(mpq_class(1, 2), mpq_class(3)) ==
          mpq_class(108));

    LaurentPoly s_minus_1;
    s_minus_1.add_term(0, 1, 1);
    s_minus_1.add_term(0, 0, -1);
    const RatFunc f(LaurentPoly(1), s_minus_1);
    CHECK_THROWS_AS(f.eval_rational(mpq_class(1), mpq_class(1)), pole_error);
    // Monomial denominators are shifted away, so 1/alpha is the Laurent
    // monomial alpha^-1 and alpha = 0 is a division, not a pole.
    CHECK_THROWS_AS(RatFunc::alpha(-1).eval_rational(mpq_class(0), mpq_class(1)),
                    division_by_zero);
    // Zero base with positive exponents is just zero.
    CHECK((RatFunc::s(2) + RatFunc(4)).eval_rational(mpq_class(1), mpq_class(0)) ==
          mpq_class(4));
}

TEST_CASE("division by zero") {
    CHECK_THROWS_AS(RatFunc(0).inv(), division_by_zero);
    CHECK_THROWS_AS(RatFunc(1) / RatFunc(0), division_by_zero);
    CHECK_THROWS_AS(RatFunc(LaurentPoly(1), LaurentPoly()), division_by_zero);
}

TEST_CASE("field axioms on random values") {
    std::mt19937 gen(1);
    for (int i = 0; i < 40; ++i) {
        const RatFunc a = random_ratfunc(gen);
        const RatFunc b = random_ratfunc(gen);
        const RatFunc c = random_ratfunc(gen);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == RatFunc(0));
        CHECK(a + RatFunc(0) == a);
        CHECK(a * RatFunc(1) == a);
        const RatFunc d = random_nonzero_ratfunc(gen);
        CHECK((a / d) * d == a);
        CHECK(d * d.inv() == RatFunc(1));
    }
}

TEST_CASE("equality is independent of common factors") {
    std::mt19937 gen(2);
    for (int i = 0; i < 40; ++i) {
        const LaurentPoly p = testutil::random_poly(gen);
        const LaurentPoly q = testutil::random_nonzero_poly(gen);
        const LaurentPoly r = testutil::random_nonzero_poly(gen);
        CHECK(RatFunc(p * r, q * r) == RatFunc(p, q));
    }
}

TEST_CASE("reduce returns lowest terms and preserves value") {
    std::mt19937 gen(3);
    for (int i = 0; i < 40; ++i) {
        const LaurentPoly p = testutil::random_poly(gen);
        const LaurentPoly q = testutil::random_nonzero_poly(gen);
        const LaurentPoly r = testutil::random_nonzero_poly(gen);
        const RatFunc inflated(p * r, q * r);
        bool fully = false;
        const RatFunc reduced = inflated.reduce(&fully);
        CHECK(fully);
        CHECK(reduced == inflated);
        // Idempotent: a second pass finds nothing to divide out.
        const RatFunc again = reduced.reduce();
        CHECK(again.num() == reduced.num());
        CHECK(again.den() == reduced.den());
    }
    // A value in lowest terms has at most as many terms as the inflated one.
    const RatFunc big = delta() * delta() - RatFunc(1);
    const RatFunc small = big.reduce();
    CHECK(small == big);
    CHECK(small.num().terms().size() <= big.num().terms().size());
}

TEST_CASE("powers") {
    CHECK(delta().pow(0) == RatFunc(1));
    CHECK(delta().pow(3) == delta() * delta() * delta());
    CHECK(delta().pow(-2) == (delta() * delta()).inv());
    CHECK(RatFunc::s(1).pow(-4) == RatFunc::s(-4));
}

TEST_CASE("substitution") {
    std::mt19937 gen(4);
    for (int i = 0; i < 25; ++i) {
        const RatFunc a = random_ratfunc(gen);
        CHECK(a.mirror().mirror() == a);
        CHECK(a.substitute(RatFunc::alpha(1), RatFunc::s(1)) == a);
    }
    // delta is mirror symmetric.
    CHECK(delta().mirror() == delta());
    CHECK(z().mirror() == -z());
    // Composition against hand expansion: (alpha*s)(s, alpha) = s*alpha.
    CHECK(RatFunc::monomial(1, 1).substitute(RatFunc::s(1), RatFunc::alpha(1)) ==
          RatFunc::monomial(1, 1));
    CHECK_THROWS_AS(RatFunc::alpha(-1).substitute(RatFunc(0), RatFunc::s(1)),
                    division_by_zero);
}

TEST_CASE("canonical form invariants") {
    std::mt19937 gen(5);
    for (int i = 0; i < 40; ++i) {
        const RatFunc a = random_ratfunc(gen);
        if (a.is_zero()) {
            CHECK(a.den().is_one());
            continue;
        }
        const Exp dmin = a.den().min_exp();
        CHECK(dmin.first == 0);
        CHECK(dmin.second == 0);
        CHECK(a.den().terms().begin()->second > 0);
        mpz_class joint;
        mpz_gcd(joint.get_mpz_t(), a.num().content().get_mpz_t(),
                a.den().content().get_mpz_t());
        CHECK(joint == 1);
    }
}

TEST_CASE("rendering") {
    CHECK(RatFunc(0).to_plain() == "0");
    CHECK(RatFunc(-7).to_plain() == "-7");
    CHECK(RatFunc::monomial(-2, 3).to_plain() == "a^-2*s^3");
    CHECK((RatFunc::alpha(2) * RatFunc::s(-1)).to_plain() == "a^2*s^-1");
    CHECK((RatFunc(1) + RatFunc::s(2)).to_plain() == "1 + s^2");
    CHECK((RatFunc(1) - RatFunc::monomial(1, 1, 3)).to_plain() == "1 - 3*a*s");
    {
        LaurentPoly num(1);
        LaurentPoly den;
        den.add_term(1, 0, 1);
        den.add_term(0, 0, 1);
        CHECK(RatFunc(num, den).to_plain() == "(1)/(1 + a)");
        CHECK(RatFunc(num, den).to_latex() == "\\frac{1}{1 + \\alpha}");
    }
    CHECK(RatFunc::monomial(-2, 3).to_latex() == "\\alpha^{-2}s^{3}");
    CHECK((RatFunc(2) * RatFunc::alpha(1)).to_latex() == "2\\alpha");
}

TEST_CASE("json round trip") {
    std::mt19937 gen(6);
    for (int i = 0; i < 25; ++i) {
        const RatFunc a = random_ratfunc(gen);
        const RatFunc back = ratfunc_from_json(to_json(a));
        CHECK(back.num() == a.num());
        CHECK(back.den() == a.den());
        // Serialization is deterministic.
        CHECK(to_json(a).dump() == to_json(back).dump());
    }
    const auto j = to_json(RatFunc::monomial(-1, 2, 5));
    CHECK(j.dump() == R"({"den":[[0,0,"1"]],"num":[[-1,2,"5"]]})");
}
