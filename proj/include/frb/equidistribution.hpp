#pragma once

#include "frb/averaging.hpp"

namespace frb {

// Mean of the boundary part: the constant for constants, mu(B_u) for chi_u,
// 0 for finite tables.
Rational mean_value(const BoundaryContext& ctx, const VertexFunction& f);

// (1/|S_n|) sum over gamma in S_n of f(gamma) g(gamma^{-1}), exact. Closed
// paths for constants and cylinder indicators (prefix/suffix counting),
// direct sums for tables.
Rational pair_sum(const BoundaryContext& ctx, const VertexFunction& f, const VertexFunction& g,
                  long n);

// Enumeration oracle for pair_sum (guarded by a sphere-size cap).
Rational pair_sum_enumerated(const BoundaryContext& ctx, const VertexFunction& f,
                             const VertexFunction& g, long n);

// Limit of pair_sum: the product of the boundary means.
Rational pair_limit(const BoundaryContext& ctx, const VertexFunction& f, const VertexFunction& g);

// (2r-1)^{-n} sum over |gamma| <= n of f(gamma) g(gamma^{-1}), exact; the
// |gamma| = 0 term contributes f(e) g(e).
Rational cumulative_pair_sum(const BoundaryContext& ctx, const VertexFunction& f,
                             const VertexFunction& g, long n);

// Limit of the cumulative sum: r/(r-1) times the pair limit (geometric
// summation of sphere weights; derived normalization).
Rational cumulative_limit(const BoundaryContext& ctx, const VertexFunction& f,
                          const VertexFunction& g);

struct PairSumReport {
    long n;
    Rational value;
    Rational limit;
    double deviation;
    int cls;  // n mod 4: deviations are monotone within a class, not across
};

// Rows for n in [n_lo, n_hi]; cumulative switches to the cumulative sum and
// its limit.
std::vector<PairSumReport> equidist_report(const BoundaryContext& ctx, const VertexFunction& f,
                                           const VertexFunction& g, long n_lo, long n_hi,
                                           bool cumulative = false);

}  // namespace frb
