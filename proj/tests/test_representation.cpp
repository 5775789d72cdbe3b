#include <random>

#include "doctest.h"
#include "frb/representation.hpp"
#include "helpers.hpp"

using namespace frb;
using frb::testing::ball;

namespace {
Word W(const std::string& s, int rank = 2) { return Word::parse(s, rank); }

Word random_word(std::mt19937& rng, int rank, long len) {
    std::vector<Letter> ls;
    std::uniform_int_distribution<int> pick(0, 2 * rank - 2);
    auto letters = ordered_letters(rank);
    while (static_cast<long>(ls.size()) < len) {
        Letter x = letters[static_cast<std::size_t>(pick(rng)) % letters.size()];
        if (!ls.empty() && x == inv(ls.back())) continue;
        ls.push_back(x);
    }
    return Word(std::move(ls));
}
}  // namespace

TEST_CASE("the quasi-regular action is multiplicative") {
    BoundaryContext ctx(2);
    StepFunction f = StepFunction::indicator(ctx, W("ab"));
    for (const Word& gamma : ball(2, 2)) {
        for (const Word& delta : ball(2, 2)) {
            StepFunction lhs = apply_pi(ctx, gamma, apply_pi(ctx, delta, f));
            StepFunction rhs = apply_pi(ctx, multiply(gamma, delta), f);
            CHECK(integrate(ctx, pointwise_product(sub(lhs, rhs), sub(lhs, rhs))) == QuadExt(0));
        }
    }
}

TEST_CASE("the action is unitary") {
    std::mt19937 rng(20240817);
    for (int rank : {2, 3}) {
        BoundaryContext ctx(rank);
        for (int trial = 0; trial < 25; ++trial) {
            Word gamma = random_word(rng, rank, 1 + trial % 4);
            StepFunction f = StepFunction::indicator(ctx, random_word(rng, rank, 2));
            StepFunction g =
                add(StepFunction::constant(ctx, QuadExt(Rational(1, 3))),
                    scale(QuadExt(Rational(-2)), StepFunction::indicator(ctx, random_word(rng, rank, 1))));
            CHECK(inner(ctx, apply_pi(ctx, gamma, f), apply_pi(ctx, gamma, g)) == inner(ctx, f, g));
        }
    }
}

TEST_CASE("spherical function values") {
    BoundaryContext ctx(2);
    CHECK(harish_chandra_closed(ctx, 0) == QuadExt(1));
    CHECK(harish_chandra_closed(ctx, 1) == QuadExt(Rational(0), Rational(1, 2), 3));
    CHECK(harish_chandra_closed(ctx, 2) == QuadExt(Rational(2, 3)));

    BoundaryContext ctx3(3);
    CHECK(harish_chandra_closed(ctx3, 2) == QuadExt(Rational(7, 15)));
}

TEST_CASE("the diagonal coefficient is radial") {
    for (int rank : {2, 3}) {
        BoundaryContext ctx(rank);
        for (const Word& gamma : ball(rank, rank == 2 ? 4 : 3)) {
            CHECK(harish_chandra_integral(ctx, gamma) ==
                  harish_chandra_closed(ctx, static_cast<long>(gamma.size())));
            CHECK(inner(ctx, apply_pi(ctx, gamma, StepFunction::constant(ctx, QuadExt(1))),
                        StepFunction::constant(ctx, QuadExt(1))) ==
                  harish_chandra_closed(ctx, static_cast<long>(gamma.size())));
        }
    }
}

TEST_CASE("cylinder coefficients") {
    BoundaryContext ctx(2);
    CHECK(coeff_cylinder(ctx, W("a"), W("b")) == QuadExt(Rational(0), Rational(1, 12), 3));
    for (const Word& gamma : ball(2, 3))
        for (const Word& u : ball(2, 2))
            CHECK(coeff_cylinder(ctx, gamma, u) == coeff_cylinder_integrated(ctx, gamma, u));
    // Closed form for u a nonempty prefix of gamma, here u = gamma.prefix(k).
    Word g = W("abab");
    for (long k = 1; k <= 4; ++k)
        CHECK(coeff_cylinder(ctx, g, g.prefix(static_cast<std::size_t>(k))) ==
              coeff_cylinder_prefix_closed(ctx, 4, k));
}

TEST_CASE("sphere sums of the kernel recover the spherical function") {
    BoundaryContext ctx(2);
    for (long n = 0; n <= 6; ++n) {
        // The base cylinder must resolve the sphere radius.
        std::vector<Letter> ls;
        for (long i = 0; i < n; ++i) ls.push_back(i % 2 == 0 ? Letter(1) : Letter(2));
        CHECK(sum_sphere_poisson(ctx, n, Word(std::move(ls))) ==
              QuadExt(Rational(sphere_count(2, n))) * harish_chandra_closed(ctx, n));
    }
}

TEST_CASE("coefficient decay ratio stays below the spectral bound") {
    BoundaryContext ctx(2);
    for (long n = 1; n <= 10; ++n) {
        Word gamma(std::vector<Letter>(static_cast<std::size_t>(n), Letter(1)));
        RatioBound rb = harish_ratio_bound(ctx, gamma, W("b"));
        CHECK(rb.product == rb.ratio * QuadExt(Rational(n)));
        CHECK(!(rb.product > QuadExt(Rational(1, 2))));
    }
}
