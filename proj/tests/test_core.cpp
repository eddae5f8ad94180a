#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aknsmf/series.hpp"
#include "helpers.hpp"

using namespace aknsmf;
using namespace aknsmf::testing;

TEST_CASE("gaussian rational arithmetic") {
    GaussianRational i = GaussianRational::imag_unit();
    GaussianRational s = GaussianRational::sqrt_two_i();

    CHECK(s * s == GaussianRational(0, 2));  // (1+i)^2 = 2i
    CHECK(i.inverse() == -i);
    CHECK(G(3, 2, 1, 4) + G(-3, 2, 3, 4) == i);
    CHECK(GaussianRational(1) / s == G(1, 2, -1, 2));  // 1/sqrt(2i) = (1-i)/2
    CHECK_THROWS_AS(i / GaussianRational(), Error);
}

TEST_CASE("gaussian rational rendering and parsing") {
    CHECK(GaussianRational().str() == "0");
    CHECK(G(-1, 4, 3, 8).str() == "-1/4+3/8i");
    CHECK(GaussianRational(0, -2).str() == "-2i");
    CHECK(GaussianRational::imag_unit().str() == "i");
    CHECK((-GaussianRational::imag_unit()).str() == "-i");
    CHECK(GaussianRational(3).str() == "3");
    CHECK(G(1, 2, -1, 2).str() == "1/2-1/2i");

    Rng rng(7);
    for (int t = 0; t < 50; ++t) {
        GaussianRational x = rng.scalar();
        CHECK(GaussianRational::parse(x.str()) == x);
    }
    CHECK(GaussianRational::parse("-1/4+3/8i") == G(-1, 4, 3, 8));
    CHECK(GaussianRational::parse("i") == GaussianRational::imag_unit());
    CHECK_THROWS_AS(GaussianRational::parse("1/"), Error);
}

TEST_CASE("field axioms on random scalars") {
    Rng rng(11);
    for (int t = 0; t < 60; ++t) {
        GaussianRational x = rng.scalar(), y = rng.scalar(), z = rng.scalar();
        CHECK((x + y) + z == x + (y + z));
        CHECK(x * (y + z) == x * y + x * z);
        if (!x.is_zero()) CHECK(x * x.inverse() == GaussianRational(1));
    }
}

TEST_CASE("polynomial arithmetic") {
    Poly ef = E(1) * F(1);
    CHECK(ef * ef == E(1) * E(1) * F(1) * F(1));
    CHECK(E(2) * F(2) * Poly(gi(2)) + ef * ef - ef * ef == E(2) * F(2) * Poly(gi(2)));
    Poly sum = E(1) + F(1);
    CHECK(sum * sum == E(1) * E(1) + Poly(2) * E(1) * F(1) + F(1) * F(1));
    CHECK((ef - ef).is_zero());
}

TEST_CASE("polynomial partial derivatives") {
    Poly h12 = E(2) * F(2) * Poly(gi(-2)) - E(1) * E(1) * F(1) * F(1);
    CHECK(h12.partial(Variable::f(2)) == E(2).scaled(gi(-2)));
    CHECK((E(1) * F(1)).partial(Variable::e(2)).is_zero());
    Poly a4 = E(1) * F(3) + E(2) * F(2) + E(3) * F(1);
    CHECK(a4.partial(Variable::f(3)) == E(1));
}

TEST_CASE("polynomial evaluation") {
    std::map<Variable, GaussianRational> at{{Variable::e(1), GaussianRational(2)},
                                            {Variable::f(1), gi()}};
    CHECK((E(1) * F(1)).evaluate(at) == gi(2));

    std::map<Variable, GaussianRational> at2{{Variable::e(1), GaussianRational(1)},
                                             {Variable::f(1), GaussianRational(-1)}};
    Poly sum = E(1) + F(1);
    CHECK((sum * sum).evaluate(at2).is_zero());

    Poly h12 = E(2) * F(2) * Poly(gi(-2)) - E(1) * E(1) * F(1) * F(1);
    std::map<Variable, GaussianRational> at3{{Variable::e(2), GaussianRational(1)},
                                             {Variable::f(2), GaussianRational(1)},
                                             {Variable::e(1), GaussianRational(0)},
                                             {Variable::f(1), GaussianRational(0)}};
    CHECK(h12.evaluate(at3) == gi(-2));

    try {
        (E(1) * F(4)).evaluate(at);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("f4") != std::string::npos);
    }
}

TEST_CASE("monomial balance") {
    Poly h12 = E(2) * F(2) * Poly(gi(-2)) - E(1) * E(1) * F(1) * F(1);
    CHECK(h12.monomial_balance());
    CHECK_FALSE(E(1).monomial_balance());
    CHECK((E(1) * F(2) + E(2) * F(1)).monomial_balance());
    CHECK_THROWS_AS(dE(1, 1).monomial_balance(), Error);
}

TEST_CASE("polynomial properties on random inputs") {
    Rng rng(13);
    for (int t = 0; t < 25; ++t) {
        Poly p = rng.poly(3, 3), q = rng.poly(3, 3);
        Variable v = rng.variable(3);
        CHECK((p * q).partial(v) == p.partial(v) * q + p * q.partial(v));

        std::map<Variable, GaussianRational> at;
        for (int j = 1; j <= 3; ++j) {
            at[Variable::e(j)] = rng.scalar();
            at[Variable::f(j)] = rng.scalar();
        }
        CHECK((p * q).evaluate(at) == p.evaluate(at) * q.evaluate(at));
        CHECK((p - p).is_zero());
    }
}

TEST_CASE("canonical rendering") {
    Poly h12 = E(2) * F(2) * Poly(gi(-2)) - E(1) * E(1) * F(1) * F(1);
    CHECK(h12.str() == "(-2i)*e2*f2 + (-1)*e1^2*f1^2");
    CHECK(Poly().str() == "0");
    CHECK(Variable::q({{1, 1}}).str() == "q_1");
    CHECK(Variable::q({{1, 2}}).str() == "q_11");
    CHECK(Variable::e(2, {{2, 1}}).str() == "e2_d{2:1}");
    CHECK(Variable::q({{1, 2}, {3, 1}}).str() == "q_d{1:2,3:1}");
    CHECK(Poly::spectral(1).str() == "(1)*lam");
    // ascending total degree, and e1*f2 ahead of e2*f1 within a degree
    CHECK((E(1) * F(2) + E(2) * F(1)).str() == "(1)*e1*f2 + (1)*e2*f1");
}

TEST_CASE("substitution") {
    std::map<Variable, Poly> table{{Variable::e(1), Qv() * Poly(G(1, 2, -1, 2))}};
    Poly p = E(1) * E(1) * F(1);
    Poly got = p.substitute(table);
    CHECK(got == Qv() * Qv() * F(1).scaled(G(0, 1, -1, 2)));  // (1/2 - i/2)^2 = -i/2
}

TEST_CASE("series arithmetic") {
    int M = 4;
    std::vector<Poly> ec, fc;
    for (int j = 1; j <= M; ++j) {
        ec.push_back(E(j));
        fc.push_back(F(j));
    }
    TruncSeries e = TruncSeries::from_coeffs(1, ec, M);
    TruncSeries f = TruncSeries::from_coeffs(1, fc, M);

    TruncSeries one_plus = TruncSeries::constant(GaussianRational(1), 2) +
                           TruncSeries::monomial(E(1), 1, 2);
    TruncSeries one_minus = TruncSeries::constant(GaussianRational(1), 2) -
                            TruncSeries::monomial(E(1), 1, 2);
    TruncSeries prod = one_plus * one_minus;
    CHECK(prod.coeff(0) == Poly(1));
    CHECK(prod.coeff(1).is_zero());
    CHECK(prod.coeff(2) == -(E(1) * E(1)));

    CHECK((e * f).coeff(2) == E(1) * F(1));
    CHECK(e.shifted(1).coeff(3) == E(2));
}

TEST_CASE("series inversion") {
    TruncSeries s = TruncSeries::constant(GaussianRational(1), 4) -
                    TruncSeries::monomial(E(1) * F(1), 2, 4);
    TruncSeries inv = s.inverse();
    Poly ef = E(1) * F(1);
    CHECK(inv.coeff(0) == Poly(1));
    CHECK(inv.coeff(2) == ef);
    CHECK(inv.coeff(4) == ef * ef);
    CHECK((s * inv).coeff(0) == Poly(1));
    for (int k = 1; k <= 4; ++k) CHECK((s * inv).coeff(k).is_zero());

    CHECK(TruncSeries::constant(gi(2)).inverse().coeff(0) == Poly(G(0, 1, -1, 2)));

    TruncSeries t = TruncSeries::constant(GaussianRational(1), 3) +
                    TruncSeries::monomial(E(1), 1, 3);
    CHECK(t.inverse().coeff(3) == -(E(1) * E(1) * E(1)));

    CHECK_THROWS_AS(TruncSeries::monomial(E(1), 1, 3).inverse(), Error);
}

TEST_CASE("series square root against the binomial oracle") {
    int M = 4;
    std::vector<Poly> ec, fc;
    for (int j = 1; j <= M; ++j) {
        ec.push_back(E(j));
        fc.push_back(F(j));
    }
    TruncSeries e = TruncSeries::from_coeffs(1, ec, M);
    TruncSeries f = TruncSeries::from_coeffs(1, fc, M);
    TruncSeries s = TruncSeries::constant(gi(2), M) - e * f;
    TruncSeries root = s.sqrt(GaussianRational::sqrt_two_i());

    // oracle: sqrt(2i) * (1 + u)^{1/2} with u = -ef/(2i), binomial series
    // (1+u)^{1/2} = 1 + u/2 - u^2/8 + ...
    TruncSeries u = (e * f).scaled(gi(2).inverse()).scaled(GaussianRational(-1));
    TruncSeries expect =
        (TruncSeries::constant(GaussianRational(1), M) + u.scaled(G(1, 2, 0, 1)) +
         (u * u).scaled(G(-1, 8, 0, 1)))
            .scaled(GaussianRational::sqrt_two_i());
    for (int k = 0; k <= M; ++k) CHECK(root.coeff(k) == expect.coeff(k));
    // the z^2 coefficient is (-1/4 + i/4) e1 f1
    CHECK(root.coeff(2) == (E(1) * F(1)).scaled(G(-1, 4, 1, 4)));

    // defining property on a random series
    Rng rng(17);
    std::vector<Poly> rc;
    for (int j = 1; j <= 4; ++j) rc.push_back(rng.poly(2, 3));
    TruncSeries r = TruncSeries::constant(GaussianRational(4), 4) +
                    TruncSeries::from_coeffs(1, rc, 4);
    TruncSeries rr = r.sqrt(GaussianRational(2));
    for (int k = 0; k <= 4; ++k) CHECK((rr * rr).coeff(k) == r.coeff(k));
    CHECK_THROWS_AS(r.sqrt(GaussianRational(3)), Error);

    // sqrt(1 + 2 e1 z, 1): coefficient of z is e1
    TruncSeries t = TruncSeries::constant(GaussianRational(1), 3) +
                    TruncSeries::monomial(E(1).scaled(GaussianRational(2)), 1, 3);
    CHECK(t.sqrt(GaussianRational(1)).coeff(1) == E(1));
}

TEST_CASE("series validity bookkeeping") {
    TruncSeries s = TruncSeries::constant(GaussianRational(1), 3) +
                    TruncSeries::monomial(E(1), 1, 3);
    CHECK_THROWS_AS(s.coeff(4), Error);
    CHECK_THROWS_AS(s.plus_projection(4), Error);
    CHECK(s.plus_projection(0).coeff(0) == Poly(1));

    // re-running at higher order only extends previously reported values
    TruncSeries s5 = TruncSeries::constant(GaussianRational(1), 5) +
                     TruncSeries::monomial(E(1), 1, 5);
    TruncSeries i3 = s.inverse(), i5 = s5.inverse();
    for (int k = 0; k <= 3; ++k) CHECK(i3.coeff(k) == i5.coeff(k));
}

TEST_CASE("series multiplication is associative and commutative") {
    Rng rng(19);
    auto rand_series = [&](int order) {
        std::vector<Poly> cs;
        for (int j = 0; j <= order; ++j) cs.push_back(rng.poly(2, 2));
        return TruncSeries::from_coeffs(0, cs, order);
    };
    for (int t = 0; t < 8; ++t) {
        TruncSeries a = rand_series(3), b = rand_series(3), c = rand_series(3);
        TruncSeries lhs = (a * b) * c, rhs = a * (b * c);
        CHECK(lhs.order() == rhs.order());
        for (int k = 0; k <= lhs.order(); ++k) CHECK(lhs.coeff(k) == rhs.coeff(k));
        TruncSeries ab = a * b, ba = b * a;
        for (int k = 0; k <= ab.order(); ++k) CHECK(ab.coeff(k) == ba.coeff(k));
    }
}

TEST_CASE("biseries coefficient access") {
    BiSeries s(3, 3);
    s.set(1, 2, E(1) * F(1));
    CHECK(s.coeff(1, 2) == E(1) * F(1));
    CHECK(s.coeff(2, 2).is_zero());
    CHECK_THROWS_AS(s.coeff(4, 1), Error);

    // arithmetic propagates validity pessimistically
    BiSeries t(2, 5);
    t.set(1, 2, E(2));
    BiSeries sum = s + t;
    CHECK(sum.coeff(1, 2) == E(1) * F(1) + E(2));
    CHECK_THROWS_AS(sum.coeff(3, 1), Error);  // order1 dropped to 2
    BiSeries diff = s - s;
    CHECK(diff.coeff(1, 2).is_zero());
}

TEST_CASE("series truncation restricts validity") {
    TruncSeries s = TruncSeries::constant(GaussianRational(1), 5) +
                    TruncSeries::monomial(E(1), 4, 5);
    TruncSeries t = s.truncated(2);
    CHECK(t.order() == 2);
    CHECK(t.coeff(2).is_zero());
    CHECK_THROWS_AS(t.coeff(4), Error);
}
