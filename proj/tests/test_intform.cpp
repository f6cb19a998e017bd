#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gqf/intform.hpp"

#include <set>

#include "rng.hpp"
#include "witness_data.hpp"

using namespace gqf;

namespace {

IntQuadForm diag_form(const std::vector<std::int64_t>& d)
{
    IMat g = IMat::Zero(d.size(), d.size());
    for (size_t i = 0; i < d.size(); ++i)
        g(i, i) = 2 * d[i];
    return IntQuadForm(g);
}

// Exhaustive box search oracle: all Q(x) = a with |x_i| <= bound,
// sign-canonicalised the same way as representations().
std::set<std::vector<std::int64_t>> brute_representations(const IntQuadForm& f, std::int64_t a,
                                                          std::int64_t bound)
{
    std::set<std::vector<std::int64_t>> out;
    const int m = f.dim();
    std::vector<std::int64_t> x(m, -bound);
    for (;;) {
        IVec v(m);
        for (int i = 0; i < m; ++i)
            v(i) = x[i];
        if (f.value(v) == a) {
            bool canonical = false;
            for (int i = 0; i < m; ++i) {
                if (x[i] > 0) {
                    canonical = true;
                    break;
                }
                if (x[i] < 0)
                    break;
            }
            if (canonical)
                out.insert(x);
        }
        int i = 0;
        while (i < m && x[i] == bound) {
            x[i] = -bound;
            ++i;
        }
        if (i == m)
            break;
        ++x[i];
    }
    return out;
}

std::set<std::vector<std::int64_t>> as_set(const std::vector<IVec>& vs)
{
    std::set<std::vector<std::int64_t>> out;
    for (const auto& v : vs) {
        std::vector<std::int64_t> x(v.size());
        for (Eigen::Index i = 0; i < v.size(); ++i)
            x[i] = v(i);
        out.insert(x);
    }
    return out;
}

IntQuadForm random_definite(TestRng& rng, int m)
{
    // U^t diag(positive) U with small unimodular-ish U keeps things definite
    IMat g = IMat::Zero(m, m);
    for (int i = 0; i < m; ++i)
        g(i, i) = 2 * rng.uniform(1, 4);
    IMat u = IMat::Identity(m, m);
    for (int it = 0; it < 4; ++it) {
        int a = static_cast<int>(rng.uniform(0, m - 1));
        int b = static_cast<int>(rng.uniform(0, m - 1));
        if (a != b)
            u(a, b) += rng.uniform(-1, 1);
    }
    return IntQuadForm(u.transpose() * g * u);
}

IMat random_unimodular(TestRng& rng, int m, int steps = 6, std::int64_t box = 3)
{
    IMat u = IMat::Identity(m, m);
    for (int it = 0; it < steps; ++it) {
        int a = static_cast<int>(rng.uniform(0, m - 1));
        int b = static_cast<int>(rng.uniform(0, m - 1));
        if (a == b)
            continue;
        std::int64_t c = rng.uniform(-box, box);
        for (int r = 0; r < m; ++r)
            u(r, b) += c * u(r, a);
    }
    return u;
}

} // namespace

TEST_CASE("doubled Gram invariants")
{
    IMat odd_diag(2, 2);
    odd_diag << 1, 0, 0, 2;
    CHECK_THROWS_AS(IntQuadForm{odd_diag}, std::invalid_argument);

    IMat asym(2, 2);
    asym << 2, 1, 0, 2;
    CHECK_THROWS_AS(IntQuadForm{asym}, std::invalid_argument);

    CHECK(diag_form({1, 2, 1, 2}).is_classical());
    IntQuadForm nc = IntQuadForm::from_coeffs(2, {1, 1, 1}); // x^2 + xy + y^2
    CHECK_FALSE(nc.is_classical());
    CHECK(nc.value((IVec(2) << 1, 1).finished()) == 3);
}

TEST_CASE("Bhargava notation")
{
    BhargavaTernary t = parse_bhargava("4: 1 2 2 0 0 0");
    CHECK(t.det == 4);
    CHECK(one_plus(t).dim() == 4);
    CHECK(one_plus(t).det_gram2() == 16 * 4); // det(2 M) = 2^4 det(M)
    CHECK(t.text() == "4: 1 2 2 0 0 0");

    // determinant is validated
    CHECK_THROWS_AS(parse_bhargava("5: 1 2 2 0 0 0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_bhargava("4: 1 2 2"), std::invalid_argument);
    CHECK_NOTHROW(parse_bhargava("49: 2 4 7 0 0 2"));
}

TEST_CASE("positive definiteness")
{
    CHECK(is_positive_definite(diag_form({1, 2, 1, 2})));
    CHECK_FALSE(is_positive_definite(diag_form({1, 1, -2, -2})));
    CHECK(is_positive_definite(IntQuadForm::from_MQ(witness::mq7())));
    CHECK_FALSE(is_positive_definite(diag_form({0, 1})));
}

TEST_CASE("representations: pinned examples")
{
    // diag(1,2,1,2) represents 15 via (1,1,2,2)
    auto reps = representations(diag_form({1, 2, 1, 2}), 15);
    bool found = false;
    for (const auto& v : reps)
        found = found || (v(0) == 1 && v(1) == 1 && v(2) == 2 && v(3) == 2) ||
                (v(0) == -1 && v(1) == -1 && v(2) == -2 && v(3) == -2);
    CHECK(found);

    // Lagrange: 7 = 1 + 1 + 1 + 4
    auto reps7 = representations(diag_form({1, 1, 1, 1}), 7);
    CHECK(!reps7.empty());

    // x^2 + 2y^2 misses 7
    CHECK(representations(diag_form({1, 2}), 7).empty());

    CHECK_THROWS_AS(representations(diag_form({1, -1}), 3), std::domain_error);
}

TEST_CASE("representations agree with brute force")
{
    TestRng rng;
    for (int it = 0; it < 200; ++it) {
        int m = static_cast<int>(rng.uniform(2, 4));
        IntQuadForm f = random_definite(rng, m);
        std::int64_t a = rng.uniform(1, 30);
        // box bound: |x_i| small since diagonal entries >= 1 after congruence
        auto fast = as_set(representations(f, a));
        auto slow = brute_representations(f, a, 12);
        CHECK(fast == slow);
    }
}

TEST_CASE("critical set checks")
{
    CriticalSet fifteen = fifteen_theorem_set();
    REQUIRE(fifteen.values == std::vector<std::int64_t>{1, 2, 3, 5, 6, 7, 10, 14, 15});

    CHECK(check_critical_set(diag_form({1, 2, 3, 6}), fifteen).all_represented);

    auto fail = check_critical_set(diag_form({1, 2, 5, 5}), fifteen);
    CHECK_FALSE(fail.all_represented);
    CHECK(std::find(fail.missing.begin(), fail.missing.end(), 15) != fail.missing.end());

    auto three_squares = check_critical_set(diag_form({1, 1, 1}), fifteen);
    CHECK(std::find(three_squares.missing.begin(), three_squares.missing.end(), 7) !=
          three_squares.missing.end());

    // the nine-number certificate requires a classical form
    IntQuadForm nonclassical = IntQuadForm::from_coeffs(4, {1, 1, 0, 0, 1, 0, 0, 1, 0, 1});
    CHECK_THROWS_AS(check_critical_set(nonclassical, fifteen), std::domain_error);

    // monotone: a superset can only add missing values
    CriticalSet more = fifteen;
    more.values.push_back(290);
    auto base = check_critical_set(diag_form({1, 1, 1}), fifteen);
    auto ext = check_critical_set(diag_form({1, 1, 1}), more);
    for (auto v : base.missing)
        CHECK(std::find(ext.missing.begin(), ext.missing.end(), v) != ext.missing.end());
}

TEST_CASE("isometry: pinned paper pairs")
{
    IntQuadForm q7 = IntQuadForm::from_MQ(witness::mq7());
    IntQuadForm target7 = one_plus(parse_bhargava("49: 2 4 7 0 0 2"));
    auto u = isometry_test(q7, target7);
    REQUIRE(u.has_value());
    CHECK(verify_transform(*u, q7, target7));

    // permutation equivalence
    auto up = isometry_test(diag_form({1, 2, 1, 2}), diag_form({1, 1, 2, 2}));
    REQUIRE(up.has_value());

    // determinant mismatch is rejected before searching
    CHECK_FALSE(isometry_test(diag_form({1, 1, 1, 1}), diag_form({1, 1, 1, 2})).has_value());

    CHECK_THROWS_AS(isometry_test(diag_form({1, 1}), diag_form({1, 1, 1})),
                    std::invalid_argument);
}

TEST_CASE("verify_transform accepts the printed matrices")
{
    // D = 7
    IMat a7(4, 4);
    a7 << 1, 0, 0, 0, 0, 2, -3, 3, 0, -5, 8, -7, 0, -1, 1, -1;
    IntQuadForm q7 = IntQuadForm::from_MQ(witness::mq7());
    IntQuadForm t7 = one_plus(parse_bhargava("49: 2 4 7 0 0 2"));
    CHECK(verify_transform(a7, q7, t7));

    // D = 10
    IMat a10(4, 4);
    a10 << 1, 0, 0, 0, 0, 1, 1, 2, 0, -6, -5, -10, 0, 4, 3, 7;
    IntQuadForm q10 = IntQuadForm::from_MQ(witness::mq10());
    IntQuadForm t10 = diag_form({1, 2, 5, 10});
    CHECK(verify_transform(a10, q10, t10));

    // D = 3, second witness of the classification section
    IMat a3(4, 4);
    a3 << 1, -3, 0, 3, 0, -1, 0, 2, 0, -1, 1, 3, 0, -1, 0, 1;
    IntQuadForm q3b = IntQuadForm::from_coeffs(4, {1, 0, 0, -6, 9, -6, -12, 2, 0, 18});
    IntQuadForm t3 = one_plus(parse_bhargava("9: 2 2 3 0 0 2"));
    CHECK(verify_transform(a3, q3b, t3));

    // identity fixes every form
    CHECK(verify_transform(IMat::Identity(4, 4), q7, q7));

    // wrong target rejected
    CHECK_FALSE(verify_transform(a7, q7, diag_form({1, 2, 4, 7})));
}

TEST_CASE("isometry search round-trips random unimodular transforms")
{
    TestRng rng;
    IntQuadForm base = diag_form({1, 2, 3, 5});
    for (int it = 0; it < 100; ++it) {
        IMat u = random_unimodular(rng, 4);
        IntQuadForm image(u.transpose() * base.gram2() * u);
        auto found = isometry_test(base, image);
        REQUIRE(found.has_value());
        CHECK(verify_transform(*found, base, image));
    }
}
