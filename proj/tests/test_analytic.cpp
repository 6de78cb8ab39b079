#include "doctest.h"
#include "equivlk/analytic.hpp"
#include "equivlk/errors.hpp"

using namespace equivlk;

namespace {

constexpr long kBits = 128;

BigFloat bf(long v, long bits = kBits) { return BigFloat(v, bits); }
BigFloat bq(long a, long b, long bits = kBits) { return BigFloat(make_rational(a, b), bits); }

bool close(const BigFloat& a, const BigFloat& b, long tol_bits) { return abs(a - b) < BigFloat::pow2(-tol_bits, kBits); }
bool close(const BigComplex& a, const BigComplex& b, long tol_bits) { return abs(a - b) < BigFloat::pow2(-tol_bits, kBits); }
BigComplex cx(const BigFloat& r) { return BigComplex(r); }

DirichletChar chi4() { return primitive_characters(4).at(0); }
DirichletChar chi3() { return primitive_characters(3).at(0); }

}  // namespace

TEST_CASE("Hurwitz zeta") {
    const BigFloat pi = BigFloat::pi(kBits);
    CHECK(close(hurwitz_zeta(bf(2), Rational(1), kBits), pi * pi / bf(6), 120));
    CHECK(close(hurwitz_zeta(bf(3), Rational(1), kBits), BigFloat::zeta_ui(3, kBits), 120));
    // zeta(s, 1/2) = (2^s - 1) zeta(s)
    CHECK(close(hurwitz_zeta(bf(4), make_rational(1, 2), kBits), bf(15) * BigFloat::zeta_ui(4, kBits), 118));
    // continuation: zeta(-n, a) = -B_{n+1}(a)/(n+1)
    for (long n = 0; n <= 4; ++n)
        for (long a : {1, 2, 3}) {
            const Rational x = make_rational(a, 4);
            const Rational expected = -bernoulli_polynomial(n + 1, x) / Rational(n + 1);
            CHECK(close(hurwitz_zeta(bf(-n), x, kBits), BigFloat(expected, kBits), 115));
        }
    // zeta'(0) = -log(2 pi)/2 and zeta'(-1) = 1/12 - log A via zeta'(2)
    const BigFloat d0 = hurwitz_zeta_derivative(bf(0), Rational(1), kBits);
    CHECK(close(d0, -log(pi * bf(2)) / bf(2), 115));
    // zeta'(0, a) = log Gamma(a) - log(2 pi)/2
    const BigFloat d0a = hurwitz_zeta_derivative(bf(0), make_rational(1, 3), kBits);
    CHECK(close(d0a, log(gamma(bq(1, 3))) - log(pi * bf(2)) / bf(2), 115));
    // zeta'(-2) = -zeta(3)/(4 pi^2)
    const BigFloat dm2 = hurwitz_zeta_derivative(bf(-2), Rational(1), kBits);
    CHECK(close(dm2, -BigFloat::zeta_ui(3, kBits) / (bf(4) * pi * pi), 112));
    CHECK_THROWS_AS(hurwitz_zeta(bf(1), Rational(1), kBits), PreconditionError);
    CHECK_THROWS_AS(hurwitz_zeta(bf(2), Rational(0), kBits), PreconditionError);
}

TEST_CASE("complex Hurwitz zeta agrees with the real one and with conjugation") {
    BigComplex s(bq(5, 2), BigFloat(0L, kBits));
    CHECK(close(hurwitz_zeta(s, make_rational(2, 5), kBits), cx(hurwitz_zeta(bq(5, 2), make_rational(2, 5), kBits)), 118));
    BigComplex t(bq(3, 2), bq(7, 3));
    auto z1 = hurwitz_zeta(t, make_rational(1, 3), kBits);
    auto z2 = hurwitz_zeta(t.conj(), make_rational(1, 3), kBits);
    CHECK(close(z1.conj(), z2, 118));
    // zeta(s) = zeta(s, 1/2)/(2^s - 1) at complex s
    auto zh = hurwitz_zeta(t, make_rational(1, 2), kBits);
    auto z = hurwitz_zeta(t, Rational(1), kBits);
    BigComplex one(bf(1));
    CHECK(close(zh, z * (pow(bf(2), t) - one), 112));
}

TEST_CASE("numeric L-values") {
    const BigFloat pi = BigFloat::pi(kBits);
    auto triv = DirichletChar::trivial();
    CHECK(close(l_numeric(cx(bf(2)), triv, {}, kBits), cx(pi * pi / bf(6)), 118));
    CHECK(close(l_numeric(cx(bf(2)), chi4(), {}, kBits), cx(BigFloat::catalan(kBits)), 118));
    CHECK(close(l_numeric(cx(bf(3)), triv, {2}, kBits), cx(BigFloat::zeta_ui(3, kBits) * bq(7, 8)), 118));
    // L(3, chi4) = pi^3/32
    CHECK(close(l_numeric(cx(bf(3)), chi4(), {}, kBits), cx(pi * pi * pi / bf(32)), 118));
    // an imprimitive character carries the Euler factors of its modulus
    auto imp = chi4().induce(12);
    auto expected = l_numeric(cx(bf(2)), chi4(), {}, kBits) * (BigComplex(bf(1)) + cx(bq(1, 9)));
    CHECK(close(l_numeric(cx(bf(2)), imp, {}, kBits), expected, 116));
    CHECK(close(l_numeric(cx(bf(2)), chi4(), {3}, kBits), expected, 116));
    CHECK_THROWS_AS(l_numeric(cx(bf(1)), triv, {}, kBits), NonConvergent);
    CHECK_THROWS_AS(l_numeric(cx(bq(1, 2)), chi4(), {}, kBits), NonConvergent);

    auto rec = l_value_numeric(2, chi4(), {}, kBits);
    CHECK(rec.kind == LValueKind::numeric);
    CHECK(rec.point == "2");
    CHECK(rec.bits == kBits);
    auto ex = l_value_record_exact(2, DirichletChar::trivial(), {});
    CHECK(ex.point == "-1");
    CHECK(*ex.exact == CycloNumber(make_rational(-1, 12)));
    CHECK(equivariant_l_vector_exact(2, 5, {5}).size() == 4);
}

TEST_CASE("Euler factor consistency, numeric") {
    for (long f : {5, 7, 8}) {
        for (const auto& chi : enumerate_characters(f)) {
            const auto prim = chi.primitive();
            for (long v : {2, 3, 11}) {
                if (prim.modulus() % v == 0) continue;
                auto lhs = l_numeric(cx(bf(3)), prim, {v}, kBits);
                BigComplex fac = BigComplex(bf(1)) - embed_complex(prim.value(v), kBits) * cx(BigFloat(make_rational(1, v * v * v), kBits));
                CHECK(close(lhs, l_numeric(cx(bf(3)), prim, {}, kBits) * fac, 116));
            }
        }
    }
}

TEST_CASE("Gauss sums and root numbers") {
    auto t4 = gauss_sum(chi4(), kBits);
    CHECK(close(t4, BigComplex(bf(0), bf(2)), 120));
    CHECK(close(root_number(chi4(), kBits), cx(bf(1)), 120));
    CHECK(close(gauss_sum(DirichletChar::trivial(), kBits), cx(bf(1)), 120));
    CHECK(close(root_number(DirichletChar::trivial(), kBits), cx(bf(1)), 120));
    CHECK(close(gauss_sum(chi3(), kBits), BigComplex(bf(0), sqrt(bf(3))), 120));
    CHECK(close(root_number(chi3(), kBits), cx(bf(1)), 120));
    for (long f = 3; f <= 30; ++f)
        for (const auto& chi : primitive_characters(f)) {
            CHECK(close(abs(root_number(chi, kBits)), bf(1), 118));
            // W(chi) W(conj chi) = 1
            CHECK(close(root_number(chi, kBits) * root_number(chi.conj(), kBits), cx(bf(1)), 116));
        }
    CHECK_THROWS_AS(gauss_sum(chi4().induce(8), kBits), PreconditionError);
}

TEST_CASE("archimedean factors and leading terms") {
    const BigFloat pi = BigFloat::pi(kBits);
    GammaData cplx{PlaceType::complex, 1, 0};
    GammaData plus{PlaceType::real, 1, 0};
    GammaData minus{PlaceType::real, 0, 1};
    CHECK(close(archimedean_factor(cplx, bf(2), kBits), bf(1) / (bf(2) * pi * pi), 120));
    CHECK(close(archimedean_factor(plus, bf(2), kBits), bf(1) / pi, 120));
    auto l0 = archimedean_leading_term(plus, 0, kBits);
    CHECK(l0.order == -1);
    CHECK(close(l0.coeff, bf(2), 120));
    CHECK_THROWS_AS(archimedean_factor(plus, bf(0), kBits), PreconditionError);
    CHECK_THROWS_AS(archimedean_factor(cplx, bf(-1), kBits), PreconditionError);
    // L_R(-1) = pi^{1/2} Gamma(-1/2) = -2 pi
    auto lm1 = archimedean_leading_term(plus, -1, kBits);
    CHECK(lm1.order == 0);
    CHECK(close(lm1.coeff, -bf(2) * pi, 118));
    auto c2 = archimedean_leading_term(GammaData{PlaceType::complex, 1, 1}, -1, kBits);
    CHECK(c2.order == -2);
    CHECK(close(c2.coeff, bf(16) * pi * pi, 116));
    // leading term vs a numeric limit: eps(s0 + h) h^{-order}
    for (long s0 : {0, -1, -2, -3}) {
        for (auto g : {plus, minus, cplx}) {
            auto lead = archimedean_leading_term(g, s0, kBits);
            const BigFloat h = BigFloat::pow2(-60, kBits);
            BigFloat approx = archimedean_factor(g, bf(s0) + h, kBits) * pow(h, -lead.order);
            CHECK(close(approx, lead.coeff, 50));
        }
    }
}

TEST_CASE("functional equation residuals") {
    const BigFloat bound = BigFloat::pow2(-(kBits - 24), kBits);
    for (auto [chi, s] : std::vector<std::pair<DirichletChar, long>>{{DirichletChar::trivial(), 2}, {chi4(), 2}, {chi3(), 3}, {chi4(), 3}, {DirichletChar::trivial(), 3}}) {
        auto res = fe_residual(chi, s, kBits);
        CHECK_MESSAGE(abs(res.residual) < bound, chi.label() << " s=" << s << " residual " << res.residual.to_string(5));
        CHECK(abs(res.lhs) > BigFloat::pow2(-10, kBits));
    }
    CHECK(fe_residual(DirichletChar::trivial(), 3, kBits).derivative_route);
    CHECK(!fe_residual(DirichletChar::trivial(), 2, kBits).derivative_route);
    for (const auto& chi : primitive_characters(7)) {
        auto res = fe_residual(chi, 2, kBits);
        CHECK(abs(res.residual) < bound);
    }
    CHECK_THROWS_AS(fe_residual(chi4().induce(8), 2, kBits), PreconditionError);
}

TEST_CASE("exact and numeric values meet through the functional equation") {
    const BigFloat bound = BigFloat::pow2(-(kBits - 24), kBits);
    for (long f : {1, 3, 4, 5, 8, 11, 12}) {
        for (const auto& chi : primitive_characters(f))
            for (long r = 2; r <= 4; ++r) {
                auto num = fe_transported_l_value(r, chi, kBits);
                auto ex = embed_complex(l_value_exact(r, chi), kBits);
                CHECK_MESSAGE(abs(num - ex) < bound, chi.label() << " r=" << r);
            }
    }
}

TEST_CASE("rational recognition and pi-power ratios") {
    CHECK(recognize_rational(bq(-355, 113), 10000, 100) == Rational(-355, 113));
    CHECK(!recognize_rational(BigFloat::pi(kBits), 10000, 100).has_value());
    CHECK(recognize_rational(bf(7), 10000, 100) == Rational(7));

    auto v1 = pi_power_ratio_check(2, GammaData{PlaceType::complex, 1, 0}, 128);
    CHECK(v1.pi_power == -3);
    CHECK(v1.rational);
    CHECK(v1.quotient == make_rational(-1, 8));
    auto v2 = pi_power_ratio_check(2, GammaData{PlaceType::real, 1, 0}, 128);
    CHECK(v2.pi_power == -2);
    CHECK(v2.rational);
    CHECK(v2.quotient == make_rational(-1, 2));
    auto v3 = pi_power_ratio_check(3, GammaData{PlaceType::real, 0, 1}, 128);
    CHECK(v3.pi_power == -3);
    CHECK(v3.rational);
    // a wrong power of pi is not rational
    GammaData g{PlaceType::real, 1, 1};
    for (long r : {2, 3}) {
        auto v = pi_power_ratio_check(r, g, 128);
        CHECK(v.rational);
        const BigFloat num = archimedean_factor(g, bf(r), kBits);
        const auto lead = archimedean_leading_term(g, 1 - r, kBits);
        CHECK(!recognize_rational(num / lead.coeff / pow(BigFloat::pi(kBits), v.pi_power + 1), 10000, 112).has_value());
    }
}
