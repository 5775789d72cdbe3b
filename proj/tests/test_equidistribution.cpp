#include <cmath>

#include "doctest.h"
#include "frb/equidistribution.hpp"
#include "helpers.hpp"

using namespace frb;
using frb::testing::ball;

namespace {
Word W(const std::string& s, int rank = 2) { return Word::parse(s, rank); }
}

TEST_CASE("boundary means") {
    BoundaryContext ctx(2);
    CHECK(mean_value(ctx, VertexFunction::constant(Rational(5, 7))) == Rational(5, 7));
    CHECK(mean_value(ctx, VertexFunction::chi(W("a"))) == Rational(1, 4));
    CHECK(mean_value(ctx, VertexFunction::chi(W("ab"))) == Rational(1, 12));
    CHECK(mean_value(ctx, VertexFunction::table({{W("a"), Rational(3)}})) == Rational(0));
}

TEST_CASE("sphere pair sums match the enumeration oracle") {
    for (int rank : {2, 3}) {
        BoundaryContext ctx(rank);
        std::vector<VertexFunction> fns{VertexFunction::constant(Rational(1, 2)),
                                        VertexFunction::chi(W("a", rank)),
                                        VertexFunction::chi(W("ab", rank)),
                                        VertexFunction::table({{W("b", rank), Rational(2)},
                                                               {W("aB", rank), Rational(-1)}})};
        long n_max = rank == 2 ? 8 : 5;
        for (const VertexFunction& f : fns)
            for (const VertexFunction& g : fns)
                for (long n = 1; n <= n_max; ++n)
                    CHECK(pair_sum(ctx, f, g, n) == pair_sum_enumerated(ctx, f, g, n));
    }
}

TEST_CASE("pair sums are symmetric under inversion of the sphere") {
    BoundaryContext ctx(2);
    VertexFunction f = VertexFunction::chi(W("ab"));
    VertexFunction g = VertexFunction::chi(W("b"));
    for (long n = 1; n <= 12; ++n) CHECK(pair_sum(ctx, f, g, n) == pair_sum(ctx, g, f, n));
}

TEST_CASE("pair sums approach the product of the means") {
    BoundaryContext ctx(2);
    VertexFunction xa = VertexFunction::chi(W("a"));
    CHECK(pair_sum(ctx, xa, xa, 3) == Rational(1, 18));
    CHECK(pair_limit(ctx, xa, xa) == Rational(1, 16));
    double lim = to_double(pair_limit(ctx, xa, xa));
    // Deviations are monotone along each residue class mod 4.
    for (int cls = 0; cls < 4; ++cls) {
        double prev = 2;
        for (long n = 4 + cls; n <= 16; n += 4) {
            double dev = std::abs(to_double(pair_sum(ctx, xa, xa, n)) - lim);
            CHECK(dev < prev);
            prev = dev;
        }
    }
}

TEST_CASE("cumulative sums and their limits") {
    BoundaryContext ctx(2);
    VertexFunction one = VertexFunction::constant(Rational(1));
    CHECK(cumulative_pair_sum(ctx, one, one, 1) == Rational(5, 3));
    CHECK(cumulative_pair_sum(ctx, one, one, 12) == parse_rational("1062881/531441"));
    CHECK(cumulative_limit(ctx, one, one) == Rational(2));

    VertexFunction xa = VertexFunction::chi(W("a"));
    CHECK(cumulative_limit(ctx, xa, xa) == Rational(1, 8));
    CHECK(cumulative_pair_sum(ctx, xa, xa, 12) == parse_rational("66424/531441"));
}

TEST_CASE("report rows restate the pair sums") {
    BoundaryContext ctx(2);
    VertexFunction xa = VertexFunction::chi(W("a"));
    VertexFunction xb = VertexFunction::chi(W("b"));
    auto rows = equidist_report(ctx, xa, xb, 2, 9, false);
    REQUIRE(rows.size() == 8);
    for (const auto& row : rows) {
        CHECK(row.value == pair_sum(ctx, xa, xb, row.n));
        CHECK(row.limit == pair_limit(ctx, xa, xb));
        CHECK(row.cls == static_cast<int>(row.n % 4));
        CHECK(row.deviation == doctest::Approx(std::abs(to_double(row.value) -
                                                        to_double(row.limit))));
    }
}
