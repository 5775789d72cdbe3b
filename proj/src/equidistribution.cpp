#include "frb/equidistribution.hpp"

#include <cmath>

namespace frb {

namespace {

// sum over gamma in S_n of f(gamma) g(gamma^{-1}), not normalized
Rational unnormalized_pair_sum(const BoundaryContext& ctx, const VertexFunction& f,
                               const VertexFunction& g, long n) {
    using Kind = VertexFunction::Kind;
    if (f.kind() == Kind::kTable) {
        Rational s = 0;
        for (const auto& [x, val] : f.entries())
            if (static_cast<long>(x.size()) == n && val != 0) s += val * g.eval(x.inverse());
        return s;
    }
    if (g.kind() == Kind::kTable) {
        Rational s = 0;
        for (const auto& [y, val] : g.entries())
            if (static_cast<long>(y.size()) == n && val != 0) s += f.eval(y.inverse()) * val;
        return s;
    }
    if (f.kind() == Kind::kConstant && g.kind() == Kind::kConstant)
        return f.constant_value() * g.constant_value() * Rational(sphere_count(ctx.rank, n));
    // #{gamma in S_n : gamma ends with w} = #{gamma : gamma starts with w}
    // = (2r-1)^(n-|w|) by the reversal bijection
    if (f.kind() == Kind::kConstant) {
        long lv = static_cast<long>(g.chi_word().size());
        if (n < lv) return 0;
        return f.constant_value() * Rational(pow_bigint(ctx.q(), n - lv));
    }
    if (g.kind() == Kind::kConstant) {
        long lu = static_cast<long>(f.chi_word().size());
        if (n < lu) return 0;
        return g.constant_value() * Rational(pow_bigint(ctx.q(), n - lu));
    }
    return Rational(count_prefix_suffix(ctx.rank, n, f.chi_word(), g.chi_word()));
}

}  // namespace

Rational mean_value(const BoundaryContext& ctx, const VertexFunction& f) {
    switch (f.kind()) {
        case VertexFunction::Kind::kConstant:
            return f.constant_value();
        case VertexFunction::Kind::kChi:
            return cylinder_measure(ctx, f.chi_word());
        case VertexFunction::Kind::kTable:
            return 0;
    }
    throw std::logic_error("unreachable");
}

Rational pair_sum(const BoundaryContext& ctx, const VertexFunction& f, const VertexFunction& g,
                  long n) {
    if (n < 1) throw std::invalid_argument("pair_sum needs n >= 1");
    return unnormalized_pair_sum(ctx, f, g, n) / Rational(sphere_count(ctx.rank, n));
}

Rational pair_sum_enumerated(const BoundaryContext& ctx, const VertexFunction& f,
                             const VertexFunction& g, long n) {
    if (n < 1) throw std::invalid_argument("pair_sum needs n >= 1");
    sphere_count_u64(ctx.rank, n, UINT64_C(20000000));
    Rational s = 0;
    for_each_sphere_word(ctx.rank, n, [&](const Letter* w, long len) {
        Word gamma(std::vector<Letter>(w, w + len));
        Rational fv = f.eval(gamma);
        if (fv == 0) return;
        s += fv * g.eval(gamma.inverse());
    });
    return s / Rational(sphere_count(ctx.rank, n));
}

Rational pair_limit(const BoundaryContext& ctx, const VertexFunction& f, const VertexFunction& g) {
    return mean_value(ctx, f) * mean_value(ctx, g);
}

Rational cumulative_pair_sum(const BoundaryContext& ctx, const VertexFunction& f,
                             const VertexFunction& g, long n) {
    if (n < 1) throw std::invalid_argument("cumulative_pair_sum needs n >= 1");
    Rational s = 0;
    for (long k = 0; k <= n; ++k) s += unnormalized_pair_sum(ctx, f, g, k);
    return s / Rational(pow_bigint(ctx.q(), n));
}

Rational cumulative_limit(const BoundaryContext& ctx, const VertexFunction& f,
                          const VertexFunction& g) {
    return Rational(ctx.rank, ctx.rank - 1) * pair_limit(ctx, f, g);
}

std::vector<PairSumReport> equidist_report(const BoundaryContext& ctx, const VertexFunction& f,
                                           const VertexFunction& g, long n_lo, long n_hi,
                                           bool cumulative) {
    if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("bad n range");
    Rational limit = cumulative ? cumulative_limit(ctx, f, g) : pair_limit(ctx, f, g);
    std::vector<PairSumReport> rows;
    for (long n = n_lo; n <= n_hi; ++n) {
        Rational value =
            cumulative ? cumulative_pair_sum(ctx, f, g, n) : pair_sum(ctx, f, g, n);
        double dev = std::abs(to_double(Rational(value - limit)));
        rows.push_back({n, value, limit, dev, static_cast<int>(n % 4)});
    }
    return rows;
}

}  // namespace frb
