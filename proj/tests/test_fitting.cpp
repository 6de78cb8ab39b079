#include <random>

#include "doctest.h"
#include "equivlk/fitting.hpp"
#include "equivlk/sampling.hpp"
#include "gen.hpp"

using namespace equivlk;

namespace {

CycloNumber c(long v) { return CycloNumber(v); }

QGElement elem(const GroupPtr& g, std::vector<long> coeffs) {
    std::vector<Rational> q;
    for (long x : coeffs) q.emplace_back(x);
    return QGElement(g, q);
}

Presentation column_c2() {
    auto c2 = cyclic_group(2);
    Presentation pr{c2, 3, 12, QGMatrix(c2, 2, 1)};
    pr.h(0, 0) = elem(c2, {3, 0});
    pr.h(1, 0) = elem(c2, {1, -1});
    return pr;
}

}  // namespace

TEST_CASE("trivial group: h = (9)") {
    auto g = cyclic_group(1);
    GroupAlgebra a(g);
    Presentation pr{g, 3, 12, QGMatrix(g, 1, 1)};
    pr.h(0, 0) = elem(g, {9});
    auto f = fitting_invariant(a, pr);
    REQUIRE(f.generators.size() == 1);
    CHECK(f.generators[0].components == std::vector<CycloNumber>{c(9)});
    CHECK(f.quadratic);
    auto m = cokernel_module(pr);
    CHECK(m.exps == std::vector<long>{2});
    auto ann = annihilator_bruteforce(m);
    ZpN r(3, 12);
    CHECK(ann.contains({9}));
    CHECK_FALSE(ann.contains({3}));
    CHECK(ann.log_order() == 10);
    CHECK(annihilation_check(a, pr).annihilates);
}

TEST_CASE("C2 column presentation") {
    auto pr = column_c2();
    GroupAlgebra a(pr.group);
    auto f = fitting_invariant(a, pr);
    REQUIRE(f.generators.size() == 2);
    CHECK(f.generators[0].components == std::vector<CycloNumber>{c(3), c(3)});
    CHECK(f.generators[1].components == std::vector<CycloNumber>{c(0), c(2)});
    CHECK(f.lower_bound);
    auto m = cokernel_module(pr);
    CHECK(m.exps == std::vector<long>{1});
    for (const auto& act : m.action) CHECK(act == ModMat{{1}});
    auto ann = annihilator_bruteforce(m);
    // a + b g annihilates Z/3 with trivial action iff a + b = 0 mod 3
    for (long x = 0; x < 9; ++x)
        for (long y = 0; y < 9; ++y) CHECK(ann.contains({x, y}) == ((x + y) % 3 == 0));
    CHECK(annihilation_check(a, pr).annihilates);
}

TEST_CASE("degenerate presentations") {
    auto c3 = cyclic_group(3);
    GroupAlgebra a(c3);
    Presentation row{c3, 3, 12, QGMatrix(c3, 1, 2)};
    row.h(0, 0) = elem(c3, {1, 0, 0});
    row.h(0, 1) = elem(c3, {0, 1, 0});
    auto f = fitting_invariant(a, row);
    CHECK(f.zero_class);
    CHECK(f.generators[0].components == std::vector<CycloNumber>{c(0), c(0), c(0)});
    CHECK_THROWS_AS(cokernel_module(row), PreconditionError);

    Presentation aug{c3, 3, 12, QGMatrix(c3, 1, 1)};
    aug.h(0, 0) = elem(c3, {1, -1, 0});
    CHECK(fitting_invariant(a, aug).generators[0].components[0] == c(0));
    CHECK_THROWS_AS(cokernel_module(aug), PreconditionError);

    Presentation bad{c3, 3, 12, QGMatrix(c3, 1, 1)};
    bad.h(0, 0) = QGElement::scalar(c3, make_rational(1, 3));
    CHECK_THROWS_AS(fitting_invariant(a, bad), PreconditionError);

    Presentation big{c3, 3, 12, QGMatrix(c3, 1, 1)};
    big.h(0, 0) = elem(c3, {729, 0, 0});
    CHECK_THROWS_AS(cokernel_module(big), BoundExceeded);

    Presentation many{c3, 3, 12, QGMatrix(c3, 30, 4)};
    CHECK_THROWS_AS(fitting_invariant(a, many), BoundExceeded);
}

TEST_CASE("denominator criterion") {
    CHECK(denominator_trivial(*symmetric_group_s3(), 5));
    CHECK_FALSE(denominator_trivial(*symmetric_group_s3(), 3));
    CHECK(denominator_trivial(*cyclic_group(6), 3));
    CHECK(denominator_trivial(*dihedral_group_d4(), 3));
    CHECK(denominator_trivial(*alternating_group_a4(), 3));
    CHECK(denominator_sample(*symmetric_group_s3(), 3) == 3);
    CHECK(denominator_sample(*symmetric_group_s3(), 5) == 1);
}

TEST_CASE("adjoint integrality probe") {
    std::mt19937_64 rng(1);
    GroupAlgebra c6(cyclic_group(6));
    auto pc = adjoint_integrality_probe(c6, 3, 30, rng);
    CHECK(pc.integral == 30);
    GroupAlgebra s3(symmetric_group_s3());
    auto ps = adjoint_integrality_probe(s3, 5, 30, rng);
    CHECK(ps.integral == 30);
    CHECK_FALSE(ps.witness);

    // The zero 1x1 matrix over S3: H* = e_triv + e_sign = (1 + (123) + (132))/3.
    CGMatrix zero(s3.group(), 1, 1);
    auto hs = generalized_adjoint(s3, zero);
    CHECK_FALSE(is_p_integral(hs, 3));
    CHECK(is_p_integral(hs, 5));
    for (int x = 0; x < 6; ++x)
        CHECK(hs(0, 0)[x] == CycloNumber(s3.group()->element_order(x) == 2 ? Rational(0) : make_rational(1, 3)));
}

TEST_CASE("abelian Fitting invariant equals the classical Fitting ideal") {
    std::mt19937_64 rng(44);
    const std::pair<const char*, long> cases[] = {{"C2", 3}, {"C3", 3}, {"C6", 5}, {"C3", 7}};
    for (const auto& [name, p] : cases) {
        auto g = group_by_name(name);
        GroupAlgebra a(g);
        ZpN ring(p, 12);
        for (int t = 0; t < 8; ++t) {
            const size_t b = static_cast<size_t>(draw(rng, 1, 3));
            const size_t rows = static_cast<size_t>(draw(rng, 1, 3));
            Presentation pr{g, p, 12, presentation_matrix(rng, g, rows, b, p)};
            auto ours = central_span(ring, a, fitt_elements(a, fitting_invariant(a, pr)));
            auto classical = left_ideal_span(ring, classical_fitting_generators(pr));
            CHECK(ours == classical);
        }
    }
}

TEST_CASE("Fitt generators annihilate and cokernel orders match") {
    std::mt19937_64 rng(55);
    const std::pair<const char*, long> cases[] = {{"S3", 5}, {"D4", 3}, {"Q8", 3}, {"C6", 5}, {"S3", 7}};
    for (const auto& [name, p] : cases) {
        auto g = group_by_name(name);
        GroupAlgebra a(g);
        int done = 0;
        for (int attempt = 0; attempt < 400 && done < 5; ++attempt) {
            const size_t n = static_cast<size_t>(draw(rng, 1, 2));
            Presentation pr{g, p, 12, presentation_matrix(rng, g, n, n, p)};
            FiniteGModule m;
            try {
                m = cokernel_module(pr);
            } catch (const Error&) {
                continue;
            }
            ++done;
            CAPTURE(name);
            CHECK(annihilation_check(a, pr).annihilates);
            // |M| = |prod_chi Nrd_chi(h)^{n_chi}|_p^{-1}
            auto nrd = reduced_norm(a, pr.h);
            CycloNumber prod(1);
            for (size_t chi = 0; chi < a.num_characters(); ++chi)
                for (long k = 0; k < a.degree(chi); ++k) prod *= nrd.components[chi];
            REQUIRE(prod.is_rational());
            CHECK(valuation(prod.to_rational(), p) == m.log_order());
        }
        CHECK(done == 5);
    }
}

TEST_CASE("Fitting invariant under elementary and diagonal unit transformations") {
    std::mt19937_64 rng(66);
    for (auto name : {"S3", "Q8", "C3"}) {
        auto g = group_by_name(name);
        GroupAlgebra a(g);
        const long p = 5;
        ZpN ring(p, 12);
        for (int t = 0; t < 4; ++t) {
            const size_t n = 2;
            Presentation pr{g, p, 12, presentation_matrix(rng, g, n, n, p)};
            QGMatrix e = QGMatrix::identity(g, n);
            e(0, 1) = random_element(rng, g, 4);
            QGMatrix d = QGMatrix::identity(g, n);
            d(1, 1) = QGElement::basis(g, static_cast<int>(draw(rng, 0, g->order() - 1)), Rational(2));
            for (const QGMatrix& u : {e, d, e * d}) {
                Presentation moved = pr;
                moved.h = u * pr.h;
                auto lhs = central_span(ring, a, fitt_elements(a, fitting_invariant(a, moved)));
                QGElement nu = to_rational(central_recompose(a, reduced_norm(a, u)));
                std::vector<QGElement> scaled;
                for (const auto& x : fitt_elements(a, fitting_invariant(a, pr))) scaled.push_back(nu * x);
                CHECK(lhs == central_span(ring, a, scaled));
            }
        }
    }
}

TEST_CASE("abelian Fitting ideal is invariant under GL_a") {
    std::mt19937_64 rng(77);
    auto g = cyclic_group(3);
    GroupAlgebra a(g);
    ZpN ring(3, 12);
    for (int t = 0; t < 6; ++t) {
        Presentation pr{g, 3, 12, presentation_matrix(rng, g, 3, 2, 3)};
        QGMatrix e = QGMatrix::identity(g, 3);
        e(2, 0) = random_element(rng, g, 4);
        e(0, 1) = random_element(rng, g, 4);
        Presentation moved = pr;
        moved.h = e * pr.h;
        CHECK(central_span(ring, a, fitt_elements(a, fitting_invariant(a, moved))) ==
              central_span(ring, a, fitt_elements(a, fitting_invariant(a, pr))));
    }
}
