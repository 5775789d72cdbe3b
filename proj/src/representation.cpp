#include "frb/representation.hpp"

namespace frb {

StepFunction apply_pi(const BoundaryContext& ctx, const Word& gamma, const StepFunction& f) {
    if (f.rank() != ctx.rank) throw std::invalid_argument("rank mismatch");
    validate_rank(gamma, ctx.rank);
    long d = static_cast<long>(gamma.size()) + f.depth();
    StepFunction out(ctx.rank, d);
    Word ginv = gamma.inverse();
    for (std::size_t i = 0; i < out.size(); ++i) {
        Word c = out.base_word(i);
        out.value_at_index(i) = poisson_sqrt(ctx, gamma, c) * f.value_on(multiply(ginv, c));
    }
    return out;
}

QuadExt inner(const BoundaryContext& ctx, const StepFunction& f, const StepFunction& g) {
    return integrate(ctx, pointwise_product(f, g));
}

namespace {

struct Descent {
    const BoundaryContext& ctx;
    const Word& gamma;
    const StepFunction& g;
    const StepFunction& h;
    long n;
    long dg, dh;
    std::vector<Letter> w;
    QuadExt total;

    Descent(const BoundaryContext& c, const Word& gm, const StepFunction& g_,
            const StepFunction& h_)
        : ctx(c), gamma(gm), g(g_), h(h_), n(static_cast<long>(gm.size())), dg(g_.depth()),
          dh(h_.depth()) {}

    // arg = first dg letters of gamma^{-1} w-extension, valid once
    // (n - p) + (|w| - p) >= dg
    Word g_argument(long p) const {
        std::vector<Letter> arg(dg);
        long from_gamma = std::min<long>(dg, n - p);
        for (long i = 0; i < from_gamma; ++i) arg[i] = inv(gamma[n - 1 - i]);
        for (long i = from_gamma; i < dg; ++i) arg[i] = w[p + (i - from_gamma)];
        return Word(std::move(arg));
    }

    void visit(long p, bool following) {
        long len = static_cast<long>(w.size());
        if (following && len < n) {
            // still on gamma's spine: every child changes the block data
            for (Letter t : ordered_letters(ctx.rank)) {
                if (len > 0 && t == inv(w[len - 1])) continue;
                w.push_back(t);
                visit(t == gamma[len] ? p + 1 : p, t == gamma[len]);
                w.pop_back();
            }
            return;
        }
        // p is final here
        const QuadExt* hval = nullptr;
        if (len >= dh) {
            hval = &h.value_on(Word(std::vector<Letter>(w.begin(), w.begin() + dh)));
            if (hval->is_zero()) return;
        }
        const QuadExt* gval = nullptr;
        Word garg;
        if ((n - p) + (len - p) >= dg) {
            garg = g_argument(p);
            gval = &g.value_on(garg);
            if (gval->is_zero()) return;
        }
        if (hval && gval) {
            Word wb{std::vector<Letter>(w)};
            Rational mu = cylinder_measure(ctx, wb);
            total += QuadExt(mu) * half_power(ctx.q(), 2 * p - n) * (*gval) * (*hval);
            return;
        }
        for (Letter t : ordered_letters(ctx.rank)) {
            if (len > 0 && t == inv(w[len - 1])) continue;
            w.push_back(t);
            visit(p, false);
            w.pop_back();
        }
    }
};

}  // namespace

QuadExt pi_coeff(const BoundaryContext& ctx, const Word& gamma, const StepFunction& g,
                 const StepFunction& h) {
    if (g.rank() != ctx.rank || h.rank() != ctx.rank) throw std::invalid_argument("rank mismatch");
    validate_rank(gamma, ctx.rank);
    Descent d(ctx, gamma, g, h);
    d.visit(0, true);
    return d.total;
}

QuadExt harish_chandra_closed(const BoundaryContext& ctx, long n) {
    if (n < 0) throw std::invalid_argument("negative length");
    Rational lead = 1 + Rational(ctx.rank - 1) * n / ctx.rank;
    return QuadExt(lead) * half_power(ctx.q(), -n);
}

QuadExt harish_chandra_integral(const BoundaryContext& ctx, const Word& gamma) {
    StepFunction one = StepFunction::constant(ctx, QuadExt(1));
    return pi_coeff(ctx, gamma, one, one);
}

QuadExt coeff_cylinder_integrated(const BoundaryContext& ctx, const Word& gamma, const Word& u) {
    StepFunction one = StepFunction::constant(ctx, QuadExt(1));
    StepFunction hu = u.empty() ? one : StepFunction::indicator(ctx, u);
    return pi_coeff(ctx, gamma, one, hu);
}

QuadExt coeff_cylinder_prefix_closed(const BoundaryContext& ctx, long n, long u_len) {
    if (u_len < 1 || u_len > n) throw std::invalid_argument("need 1 <= |u| <= |gamma|");
    long deg = ctx.degree();
    Rational lead = Rational((n - u_len) * (deg - 2) + (deg - 1)) / deg;
    return QuadExt(lead) * half_power(ctx.q(), -n);
}

QuadExt coeff_cylinder(const BoundaryContext& ctx, const Word& gamma, const Word& u) {
    validate_rank(gamma, ctx.rank);
    validate_rank(u, ctx.rank);
    long n = static_cast<long>(gamma.size());
    long lu = static_cast<long>(u.size());
    if (u.empty()) return harish_chandra_integral(ctx, gamma);
    long p = static_cast<long>(common_prefix_len(gamma, u));
    if (p < std::min(n, lu)) {
        // u branches off gamma after p common letters, then k more letters
        long k = lu - p - 1;
        return QuadExt(Rational(1, ctx.degree())) * half_power(ctx.q(), -n - 2 * k);
    }
    if (p == n && p == lu)  // u == gamma
        return QuadExt(Rational(ctx.q(), ctx.degree())) * half_power(ctx.q(), -n);
    return coeff_cylinder_integrated(ctx, gamma, u);
}

QuadExt sum_sphere_poisson(const BoundaryContext& ctx, long n, const Word& c) {
    validate_rank(c, ctx.rank);
    if (n < 0) throw std::invalid_argument("negative sphere radius");
    if (static_cast<long>(c.size()) < n)
        throw std::invalid_argument("cylinder must be at least as deep as the sphere radius");
    if (n == 0) return QuadExt(1);
    QuadExt total;
    // gamma tracks c for p letters then leaves; the free tail contributes
    // (2r-1)^(n-p-1) words, all with the same Poisson exponent
    for (long p = 0; p < n; ++p) {
        int allowed = 2 * ctx.rank;
        // diverging letter must differ from c's next letter, and from the
        // inverse of the previous letter to stay reduced
        int excluded = 1;
        if (p > 0 && inv(c[p - 1]) != c[p]) excluded = 2;
        allowed -= excluded;
        QuadExt tail = QuadExt(pow_rational(Rational(ctx.q()), n - p - 1));
        total += QuadExt(Rational(allowed)) * tail * half_power(ctx.q(), 2 * p - n);
    }
    total += half_power(ctx.q(), n);  // gamma = the first n letters of c
    return total;
}

RatioBound harish_ratio_bound(const BoundaryContext& ctx, const Word& gamma, const Word& w) {
    if (gamma.empty()) throw std::invalid_argument("gamma must not be the identity");
    if (gamma.starts_with(w))
        throw std::invalid_argument("w must not be a prefix of gamma");
    QuadExt ratio = coeff_cylinder(ctx, gamma, w) / harish_chandra_closed(ctx, gamma.size());
    return RatioBound{ratio, ratio * QuadExt(static_cast<long>(gamma.size()))};
}

}  // namespace frb
