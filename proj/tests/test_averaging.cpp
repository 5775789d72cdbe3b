#include <algorithm>
#include <map>

#include "doctest.h"
#include "frb/averaging.hpp"
#include "helpers.hpp"

using namespace frb;
using frb::testing::ball;

namespace {
Word W(const std::string& s, int rank = 2) { return Word::parse(s, rank); }
}

TEST_CASE("products of cylinder indicators normalize by prefix order") {
    auto p = chi_product_normal_form(W("a"), W("ab"));
    CHECK(p.kind == ChiProduct::Kind::kChi);
    CHECK(p.word == W("ab"));
    CHECK(chi_product_normal_form(W("ab"), W("a")).word == W("ab"));
    CHECK(chi_product_normal_form(W("a"), W("a")).kind == ChiProduct::Kind::kChiSelf);
    CHECK(chi_product_normal_form(W("a"), W("b")).kind == ChiProduct::Kind::kZero);
    CHECK(chi_product_normal_form(W("ab"), W("aB")).kind == ChiProduct::Kind::kZero);
}

TEST_CASE("cylinder indicators decompose along deeper prefix sets") {
    BoundaryContext ctx(2);
    for (const Word& u : ball(2, 3)) {
        if (u.empty()) continue;
        for (long k = static_cast<long>(u.size()); k <= 4; ++k) {
            ChiDecomposition d = chi_decomposition_check(ctx, u, k);
            CHECK(d.ok);
            // Exactly the vertices under u strictly above depth k remain,
            // and each extension step has 2r-1 = 3 choices.
            long expect = 0, layer = 1;
            for (long j = static_cast<long>(u.size()); j < k; ++j, layer *= 3) expect += layer;
            CHECK(static_cast<long>(d.vertex_support.size()) == expect);
        }
    }
}

TEST_CASE("averaging the constant function fixes the ground state") {
    for (int rank : {2, 3}) {
        BoundaryContext ctx(rank);
        StepFunction one = StepFunction::constant(ctx, QuadExt(1));
        for (long n = 0; n <= 4; ++n) {
            StepFunction out = m_n_apply(ctx, VertexFunction::constant(1), n, one);
            for (std::size_t i = 0; i < out.size(); ++i)
                CHECK(out.value_at_index(i) == QuadExt(1));
        }
    }
}

TEST_CASE("blockwise averaging matches the literal sum") {
    BoundaryContext ctx(2);
    std::vector<VertexFunction> fs{VertexFunction::constant(Rational(2, 3)),
                                   VertexFunction::chi(W("a")), VertexFunction::chi(W("ba")),
                                   VertexFunction::table({{W("a"), Rational(1)},
                                                          {W("bA"), Rational(-1, 2)}})};
    std::vector<StepFunction> gs{StepFunction::constant(ctx, QuadExt(1)),
                                 StepFunction::indicator(ctx, W("b")),
                                 StepFunction::indicator(ctx, W("ab")),
                                 sub(StepFunction::indicator(ctx, W("aB")),
                                     StepFunction::indicator(ctx, W("ba")))};
    for (const VertexFunction& f : fs) {
        for (const StepFunction& g : gs) {
            for (long n = 0; n <= 4; ++n) {
                StepFunction fast = m_n_apply(ctx, f, n, g, MnMode::kFast);
                StepFunction lit = m_n_apply(ctx, f, n, g, MnMode::kEnumerated);
                REQUIRE(fast.size() == lit.size());
                for (std::size_t i = 0; i < fast.size(); ++i)
                    CHECK(fast.value_at_index(i) == lit.value_at_index(i));
            }
        }
    }
}

TEST_CASE("blockwise averaging is independent of the worker count") {
    BoundaryContext ctx(2);
    StepFunction g = StepFunction::indicator(ctx, W("ab"));
    VertexFunction f = VertexFunction::chi(W("a"));
    StepFunction w1 = m_n_apply(ctx, f, 6, g, MnMode::kFast, 1);
    StepFunction w4 = m_n_apply(ctx, f, 6, g, MnMode::kFast, 4);
    REQUIRE(w1.size() == w4.size());
    for (std::size_t i = 0; i < w1.size(); ++i)
        CHECK(w1.value_at_index(i) == w4.value_at_index(i));
}

TEST_CASE("grouped coefficients match the applied operator") {
    BoundaryContext ctx(2);
    std::vector<StepFunction> gs{StepFunction::constant(ctx, QuadExt(1)),
                                 StepFunction::indicator(ctx, W("b")),
                                 StepFunction::indicator(ctx, W("ab"))};
    std::vector<StepFunction> hs{StepFunction::constant(ctx, QuadExt(1)),
                                 StepFunction::indicator(ctx, W("a"))};
    VertexFunction f = VertexFunction::chi(W("a"));
    for (const StepFunction& g : gs) {
        for (const StepFunction& h : hs) {
            // The grouped path needs room for the head and tail patterns.
            long lo = std::max<long>(static_cast<long>(h.depth()), 1) +
                      static_cast<long>(g.depth()) + 1;
            for (long n = lo; n <= lo + 4; ++n)
                CHECK(m_n_coeff(ctx, f, n, g, h, MnMode::kFast) ==
                      m_n_coeff(ctx, f, n, g, h, MnMode::kEnumerated));
        }
    }
}

TEST_CASE("matrix entries of the average against disjoint cylinders") {
    BoundaryContext ctx(2);
    VertexFunction f = VertexFunction::chi(W("a"));
    StepFunction g = StepFunction::indicator(ctx, W("b"));
    StepFunction h = StepFunction::indicator(ctx, W("a"));
    CHECK(m_n_coeff(ctx, f, 2, g, h) == QuadExt(Rational(1, 24)));
    CHECK(m_n_coeff(ctx, f, 6, g, h) == QuadExt(Rational(11, 216)));
    CHECK(limit_coeff(ctx, f, g, h) == QuadExt(Rational(1, 16)));
}

TEST_CASE("tail split bounds the off-diagonal mass") {
    BoundaryContext ctx(2);
    for (long n = 2; n <= 8; ++n) {
        TailSplit ts = matrix_tail_split(ctx, W("a"), W("b"), n);
        CHECK(!(ts.value > QuadExt(ts.head) + ts.tail));
    }
    CHECK(matrix_tail_split(ctx, W("a"), W("b"), 12).correction <
          matrix_tail_split(ctx, W("a"), W("b"), 2).correction);
}

TEST_CASE("compressions of the average are near the identity") {
    BoundaryContext ctx(2);
    auto mat = compression_matrix(ctx, 3, 2);
    REQUIRE(mat.size() == 12);
    for (std::size_t i = 0; i < mat.size(); ++i)
        for (std::size_t j = i; j < mat.size(); ++j)
            CHECK(mat[i][j] == mat[j][i]);
    CHECK(compression_norm(ctx, 3, 2) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(compression_norm(ctx, 5, 3) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("projected translates of the ground state span quickly") {
    BoundaryContext ctx(2);
    CHECK(cyclicity_rank(ctx, 2, 1) == 4);
    CHECK(cyclicity_rank(ctx, 3, 2) == 12);
}
