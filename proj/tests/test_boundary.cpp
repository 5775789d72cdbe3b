#include "doctest.h"
#include "helpers.hpp"
#include "frb/boundary.hpp"

using namespace frb;

namespace {
Word W(const std::string& s, int rank = 2) { return Word::parse(s, rank); }
}

TEST_CASE("cylinder measures") {
    BoundaryContext ctx(2);
    CHECK(cylinder_measure(ctx, Word()) == Rational(1));
    CHECK(cylinder_measure(ctx, W("a")) == Rational(1, 4));
    CHECK(cylinder_measure(ctx, W("ab")) == Rational(1, 12));
    CHECK(cylinder_measure(ctx, W("aba")) == Rational(1, 36));

    BoundaryContext ctx3(3);
    CHECK(cylinder_measure(ctx3, W("a", 3)) == Rational(1, 6));
    CHECK(cylinder_measure(ctx3, W("ab", 3)) == Rational(1, 30));
}

TEST_CASE("measures are additive over children") {
    for (int rank : {2, 3}) {
        BoundaryContext ctx(rank);
        for (long d = 0; d <= 3; ++d) {
            frb::testing::each_sphere(rank, d, [&](const Word& u) {
                Rational children = 0;
                Letter block = u.empty() ? Letter(0) : inv(u[u.size() - 1]);
                for (Letter x : ordered_letters(rank)) {
                    if (x == block) continue;
                    std::vector<Letter> ls(u.letters());
                    ls.push_back(x);
                    children += cylinder_measure(ctx, Word(std::move(ls)));
                }
                CHECK(children == cylinder_measure(ctx, u));
            });
        }
    }
}

TEST_CASE("horospherical bookkeeping on cylinders") {
    BoundaryContext ctx(2);
    // Toward the cylinder the Busemann value is |gamma|, away it is -|gamma|.
    CHECK(busemann(ctx, W("a"), W("aa")) == 1);
    CHECK(busemann(ctx, W("a"), W("ba")) == -1);
    CHECK(busemann(ctx, W("ab"), W("abb")) == 2);
    CHECK(busemann(ctx, W("ab"), W("aab")) == 0);
    CHECK(busemann(ctx, Word(), W("b")) == 0);
    CHECK(gromov_product(W("aba"), W("abb")) == 2);

    CHECK(poisson_sqrt(ctx, W("a"), W("aa")) == half_power(3, 1));
    CHECK(poisson_sqrt(ctx, W("ab"), W("ba")) == half_power(3, -2));
}

TEST_CASE("step function algebra and integration") {
    BoundaryContext ctx(2);
    StepFunction one = StepFunction::constant(ctx, QuadExt(1));
    StepFunction xa = StepFunction::indicator(ctx, W("a"));
    StepFunction xab = StepFunction::indicator(ctx, W("ab"));

    CHECK(integrate(ctx, one) == QuadExt(1));
    CHECK(integrate(ctx, xa) == QuadExt(Rational(1, 4)));
    CHECK(integrate(ctx, add(xa, xab)) == QuadExt(Rational(1, 3)));
    CHECK(integrate(ctx, sub(one, xa)) == QuadExt(Rational(3, 4)));
    CHECK(integrate(ctx, scale(QuadExt(Rational(6)), xab)) == QuadExt(Rational(1, 2)));
    // chi_a * chi_ab = chi_ab, and disjoint supports multiply to zero.
    CHECK(integrate(ctx, pointwise_product(xa, xab)) == QuadExt(Rational(1, 12)));
    CHECK(integrate(ctx, pointwise_product(xab, StepFunction::indicator(ctx, W("b")))) ==
          QuadExt(0));
}

TEST_CASE("translates of cylinders are unions of cylinders of the same mass") {
    for (int rank : {2, 3}) {
        BoundaryContext ctx(rank);
        std::vector<Word> gammas{Word()};
        for (long d = 1; d <= 2; ++d)
            frb::testing::each_sphere(rank, d, [&](const Word& g) { gammas.push_back(g); });
        for (const Word& gamma : gammas) {
            frb::testing::each_sphere(rank, 2, [&](const Word& u) {
                std::vector<Word> parts = translate_cylinder(ctx, gamma, u);
                // Pushforward mass: mu(gamma B_u) integrates the Poisson
                // kernel of gamma^{-1} over B_u.
                Rational expect = 0;
                Word ginv = gamma.inverse();
                for_each_prefixed_word(rank, u, 4, [&](const Letter* ls, long len) {
                    Word c(std::vector<Letter>(ls, ls + len));
                    expect += cylinder_measure(ctx, c) *
                              pow_rational(2 * rank - 1, busemann(ctx, ginv, c));
                });
                CHECK(measure_of_union(ctx, parts) == expect);
            });
        }
    }
}

TEST_CASE("translation of indicators matches the set translate") {
    BoundaryContext ctx(2);
    Word gamma = W("aB");
    StepFunction moved = boundary_translate(ctx, gamma, StepFunction::indicator(ctx, W("b")));
    CHECK(integrate(ctx, moved) ==
          QuadExt(measure_of_union(ctx, translate_cylinder(ctx, gamma, W("b")))));
    // The junction edge cancels: inside B_a only two of the three children
    // are hit, so the translate is not itself a cylinder.
    CHECK(measure_of_union(ctx, translate_cylinder(ctx, gamma, W("b"))) == Rational(11, 12));
    CHECK(integrate(ctx, pointwise_product(moved, StepFunction::indicator(ctx, W("a")))) ==
          QuadExt(Rational(1, 6)));
}
