#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gqf/genform.hpp"

#include "rng.hpp"
#include "witness_data.hpp"

using namespace gqf;

namespace {

GenQuadForm intro_form()
{
    // z^2 - z tau(z) + tau(z)^2 + w^2 + w tau(w) + tau(w)^2 over Q(sqrt 2)
    QuadField k(2);
    GenQuadForm g(2, k);
    g.set_alpha(0, 0, FieldElement(1));
    g.set_beta(0, 0, FieldElement(-1));
    g.set_alpha(1, 1, FieldElement(1));
    g.set_beta(1, 1, FieldElement(1));
    return g;
}

GenQuadForm random_binary_integral(TestRng& rng, const QuadField& k)
{
    GenQuadForm g(2, k);
    g.set_alpha(0, 0, rng.element(k));
    g.set_alpha(0, 1, rng.element(k));
    g.set_alpha(1, 1, rng.element(k));
    g.set_beta(0, 0, FieldElement(Rat(rng.uniform(-9, 9))));
    g.set_beta(0, 1, rng.element(k));
    g.set_beta(1, 1, FieldElement(Rat(rng.uniform(-9, 9))));
    return g;
}

} // namespace

TEST_CASE("gram matrix blocks and pinned entries")
{
    // G_2: M_G = [[1, -w/2, -1/2, 0], [-w/2, 1, 0, -1/2], ...]
    QuadField k2(2);
    GenQuadForm g2 = from_sextuple(witness::g2());
    KMat m = gram_matrix_G(g2);
    CHECK(m(0, 0) == FieldElement(1));
    CHECK(m(0, 1) == FieldElement(k2, 0, Rat(-1) / 2));
    CHECK(m(0, 2) == FieldElement(Rat(-1) / 2));
    CHECK(m(0, 3) == FieldElement());
    CHECK(m(2, 2) == FieldElement(1));
    CHECK(m(2, 3) == FieldElement(k2, 0, Rat(1) / 2)); // tau(b)/2

    // diagonal z tau(z): M_G = [[0, 1/2], [1/2, 0]]
    GenQuadForm norm_form(1, k2);
    norm_form.set_beta(0, 0, FieldElement(1));
    KMat nm = gram_matrix_G(norm_form);
    CHECK(nm(0, 0) == FieldElement());
    CHECK(nm(0, 1) == FieldElement(Rat(1) / 2));
    CHECK(nm(1, 0) == FieldElement(Rat(1) / 2));
    CHECK(nm(1, 1) == FieldElement());

    // G_6: printed matrix has rows [3, w, -5/2, w/2], [w, 3, -w/2, -1/2], ...
    QuadField k6(6);
    KMat m6 = gram_matrix_G(from_sextuple(witness::g6()));
    CHECK(m6(0, 0) == FieldElement(3));
    CHECK(m6(0, 1) == omega(k6));
    CHECK(m6(0, 2) == FieldElement(Rat(-5) / 2));
    CHECK(m6(0, 3) == FieldElement(k6, 0, Rat(1) / 2));
    CHECK(m6(1, 2) == FieldElement(k6, 0, Rat(-1) / 2));
    CHECK(m6(1, 3) == FieldElement(Rat(-1) / 2));
    CHECK(m6(2, 3) == -omega(k6));
    CHECK(m6(3, 3) == FieldElement(3));
}

TEST_CASE("gram matrix satisfies the quadratic identity at random points")
{
    TestRng rng;
    for (std::int64_t D : {2LL, 5LL, 7LL}) {
        QuadField k(D);
        GenQuadForm g = random_binary_integral(rng, k);
        KMat m = gram_matrix_G(g);
        for (int it = 0; it < 100; ++it) {
            std::vector<FieldElement> pt{rng.element(k), rng.element(k)};
            KMat v(4, 1);
            v(0, 0) = pt[0];
            v(1, 0) = pt[1];
            v(2, 0) = conj(pt[0]);
            v(3, 0) = conj(pt[1]);
            KMat val = v.transpose() * m * v;
            CHECK(rational_value(val(0, 0)) == eval_form(g, pt));
        }
    }
}

TEST_CASE("form evaluation matches pinned values")
{
    QuadField k2(2);
    CHECK(eval_form(intro_form(), {FieldElement(1), FieldElement()}) == 1);
    CHECK(eval_form(from_sextuple(witness::g2()), {FieldElement(1), FieldElement(1)}) == 2);

    // four squares on rational-integer arguments
    QuadField k11(11);
    GenQuadForm four(4, k11);
    for (int i = 0; i < 4; ++i) {
        four.set_alpha(i, i, FieldElement(1));
        four.set_beta(i, i, FieldElement(-1));
    }
    std::vector<FieldElement> ones(4, FieldElement(1));
    CHECK(eval_form(four, ones) == 4);
}

TEST_CASE("flattened forms are Q-valued generalized polynomials")
{
    TestRng rng;
    for (std::int64_t D : {2LL, 5LL, 10LL}) {
        QuadField k(D);
        for (int it = 0; it < 25; ++it) {
            GenQuadForm g = random_binary_integral(rng, k);
            GenPoly p = g.as_genpoly();
            CHECK(is_q_valued(p));
            CHECK(p.degree() <= 2);
            std::vector<FieldElement> pt{rng.element(k), rng.element(k)};
            CHECK(rational_value(eval(p, pt)) == eval_form(g, pt));
        }
    }
}

TEST_CASE("integrality classification")
{
    CHECK(classify_integrality(from_sextuple(witness::g5())) == IntegralityClass::Classical);
    CHECK(classify_integrality(from_sextuple(witness::g7())) == IntegralityClass::Integral);

    QuadField k2(2);
    BinarySextuple half{k2,     FieldElement(Rat(1) / 2), FieldElement(), FieldElement(1),
                        FieldElement(), Rat(0),           Rat(0)};
    CHECK(classify_integrality(from_sextuple(half)) == IntegralityClass::Nonintegral);

    // classical implies integral-only checks also hold
    GenQuadForm g5 = from_sextuple(witness::g5());
    for (int i = 0; i < 2; ++i)
        for (int j = i; j < 2; ++j) {
            CHECK(g5.alpha(i, j).is_integral());
            CHECK(g5.beta(i, j).is_integral());
        }
}

TEST_CASE("sextuple construction and conjugate-derived entries")
{
    QuadField k2(2);
    GenQuadForm g2 = from_sextuple(witness::g2());
    CHECK(g2.alpha(0, 0) == FieldElement(1));
    CHECK(g2.alpha(0, 1) == -sqrt_d(k2));
    CHECK(g2.gamma(0, 1) == sqrt_d(k2));
    CHECK(g2.beta(1, 0) == conj(g2.beta(0, 1)));

    // z tau(z) + w tau(w) as [0,0,0,1,0,1]
    BinarySextuple indef{k2,     FieldElement(), FieldElement(), FieldElement(),
                         FieldElement(), Rat(1), Rat(1)};
    GenQuadForm gi = from_sextuple(indef);
    CHECK(eval_form(gi, {FieldElement(k2, 1, 1), FieldElement()}) == -1); // Nm(1+w)

    BinarySextuple round = to_sextuple(g2);
    CHECK(round.a == FieldElement(1));
    CHECK(round.d == -1);
    CHECK(round.e == FieldElement());
}

TEST_CASE("full-input construction rejects conjugate mismatches")
{
    QuadField k2(2);
    std::map<std::pair<int, int>, FieldElement> alpha{{{0, 0}, FieldElement(1)}};
    std::map<std::pair<int, int>, FieldElement> beta{{{0, 1}, sqrt_d(k2)},
                                                     {{1, 0}, -sqrt_d(k2)}};
    std::map<std::pair<int, int>, FieldElement> gamma{{{0, 0}, FieldElement(1)}};
    CHECK_NOTHROW(GenQuadForm::from_full(2, k2, alpha, beta, gamma));

    auto bad_gamma = gamma;
    bad_gamma[{0, 0}] = FieldElement(2);
    CHECK_THROWS_AS(GenQuadForm::from_full(2, k2, alpha, beta, bad_gamma),
                    std::invalid_argument);

    auto bad_beta = beta;
    bad_beta[{1, 0}] = sqrt_d(k2); // should be tau(beta_01) = -sqrt(2)
    CHECK_THROWS_AS(GenQuadForm::from_full(2, k2, alpha, bad_beta, gamma),
                    std::invalid_argument);

    std::map<std::pair<int, int>, FieldElement> no_gamma;
    CHECK_THROWS_AS(GenQuadForm::from_full(2, k2, alpha, beta, no_gamma),
                    std::invalid_argument);
}

TEST_CASE("Z-valuedness")
{
    QuadField k2(2);
    CHECK(is_z_valued(from_sextuple(witness::g2())));

    GenQuadForm norm_form(1, k2);
    norm_form.set_beta(0, 0, FieldElement(1));
    CHECK(is_z_valued(norm_form));

    GenQuadForm half(1, k2);
    half.set_beta(0, 0, FieldElement(Rat(1) / 2)); // Q(1) = 1/2
    CHECK_FALSE(is_z_valued(half));

    // every integral Q-valued form is Z-valued
    TestRng rng;
    for (std::int64_t D : {3LL, 5LL}) {
        QuadField k(D);
        for (int it = 0; it < 50; ++it)
            CHECK(is_z_valued(random_binary_integral(rng, k)));
    }
}
