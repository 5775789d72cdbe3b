#include "frb/boundary.hpp"

#include <cmath>

namespace frb {

Rational cylinder_measure(const BoundaryContext& ctx, const Word& u) {
    validate_rank(u, ctx.rank);
    if (u.empty()) return 1;
    Rational den = Rational(ctx.degree()) * pow_rational(Rational(ctx.q()), u.size() - 1);
    return 1 / den;
}

double boundary_distance(const Word& u, const Word& v) {
    return std::exp(-static_cast<double>(gromov_product(u, v)));
}

long busemann(const BoundaryContext& ctx, const Word& gamma, const Word& c) {
    validate_rank(gamma, ctx.rank);
    validate_rank(c, ctx.rank);
    std::size_t p = common_prefix_len(gamma, c);
    if (p == c.size() && c.size() < gamma.size())
        throw std::invalid_argument("cylinder too shallow: it does not pin the Gromov product");
    return 2 * static_cast<long>(p) - static_cast<long>(gamma.size());
}

QuadExt poisson_sqrt(const BoundaryContext& ctx, const Word& gamma, const Word& c) {
    return half_power(ctx.q(), busemann(ctx, gamma, c));
}

StepFunction::StepFunction(int rank, long depth, QuadExt fill) : rank_(rank), depth_(depth) {
    check_rank(rank);
    if (depth < 0) throw std::invalid_argument("negative depth");
    v_.assign(sphere_count_u64(rank, depth, UINT64_C(1) << 23), fill);
}

StepFunction StepFunction::constant(const BoundaryContext& ctx, QuadExt value) {
    return StepFunction(ctx.rank, 0, std::move(value));
}

StepFunction StepFunction::indicator(const BoundaryContext& ctx, const Word& u) {
    validate_rank(u, ctx.rank);
    StepFunction f(ctx.rank, static_cast<long>(u.size()));
    f.v_[sphere_index(ctx.rank, u)] = QuadExt(1);
    return f;
}

const QuadExt& StepFunction::value_on(const Word& w) const {
    if (w.size() < static_cast<std::size_t>(depth_))
        throw std::invalid_argument("word shallower than the step function depth");
    return v_[sphere_index(rank_, w.size() == static_cast<std::size_t>(depth_)
                                      ? w
                                      : w.prefix(depth_))];
}

StepFunction StepFunction::refined(long new_depth) const {
    if (new_depth < depth_) throw std::invalid_argument("refinement must not lower the depth");
    if (new_depth == depth_) return *this;
    StepFunction out(rank_, new_depth);
    // children of a cylinder occupy a contiguous index block
    std::size_t block = out.v_.size() / v_.size();
    for (std::size_t i = 0; i < out.v_.size(); ++i) out.v_[i] = v_[i / block];
    return out;
}

bool operator==(const StepFunction& f, const StepFunction& g) {
    if (f.rank_ != g.rank_) return false;
    long d = std::max(f.depth_, g.depth_);
    const StepFunction& fr = f.depth_ == d ? f : f.refined(d);
    const StepFunction& gr = g.depth_ == d ? g : g.refined(d);
    return fr.v_ == gr.v_;
}

namespace {

StepFunction zip(const StepFunction& f, const StepFunction& g,
                 const std::function<QuadExt(const QuadExt&, const QuadExt&)>& op) {
    if (f.rank() != g.rank()) throw std::invalid_argument("rank mismatch");
    long d = std::max(f.depth(), g.depth());
    StepFunction fr = f.refined(d), gr = g.refined(d);
    for (std::size_t i = 0; i < fr.size(); ++i)
        fr.value_at_index(i) = op(fr.value_at_index(i), gr.value_at_index(i));
    return fr;
}

}  // namespace

StepFunction add(const StepFunction& f, const StepFunction& g) {
    return zip(f, g, [](const QuadExt& x, const QuadExt& y) { return x + y; });
}

StepFunction sub(const StepFunction& f, const StepFunction& g) {
    return zip(f, g, [](const QuadExt& x, const QuadExt& y) { return x - y; });
}

StepFunction scale(const QuadExt& c, const StepFunction& f) {
    StepFunction out = f;
    for (std::size_t i = 0; i < out.size(); ++i) out.value_at_index(i) = c * out.value_at_index(i);
    return out;
}

StepFunction pointwise_product(const StepFunction& f, const StepFunction& g) {
    return zip(f, g, [](const QuadExt& x, const QuadExt& y) { return x * y; });
}

QuadExt integrate(const BoundaryContext& ctx, const StepFunction& f) {
    if (f.rank() != ctx.rank) throw std::invalid_argument("rank mismatch");
    QuadExt total;
    for (std::size_t i = 0; i < f.size(); ++i) total += f.value_at_index(i);
    Rational mu = f.depth() == 0
                      ? Rational(1)
                      : 1 / (Rational(ctx.degree()) * pow_rational(Rational(ctx.q()), f.depth() - 1));
    return QuadExt(mu) * total;
}

StepFunction boundary_translate(const BoundaryContext& ctx, const Word& gamma,
                                const StepFunction& f) {
    if (f.rank() != ctx.rank) throw std::invalid_argument("rank mismatch");
    validate_rank(gamma, ctx.rank);
    long d = static_cast<long>(gamma.size()) + f.depth();
    StepFunction out(ctx.rank, d);
    Word ginv = gamma.inverse();
    for (std::size_t i = 0; i < out.size(); ++i) {
        Word c = sphere_word(ctx.rank, d, i);
        // |gamma^{-1} c| >= f.depth(): at most |gamma| letters cancel
        out.value_at_index(i) = f.value_on(multiply(ginv, c));
    }
    return out;
}

std::vector<Word> translate_cylinder(const BoundaryContext& ctx, const Word& gamma,
                                     const Word& u) {
    validate_rank(gamma, ctx.rank);
    validate_rank(u, ctx.rank);
    if (u.empty()) {
        // gamma . B = B
        return {Word{}};
    }
    Word base = multiply(gamma, u);
    std::size_t cancelled = (gamma.size() + u.size() - base.size()) / 2;
    if (cancelled < u.size()) return {base};
    // u cancelled entirely: gamma = delta . u^{-1}; the image is
    // delta . (B minus B_{inverse of u's last letter})
    Word delta = gamma.prefix(gamma.size() - u.size());
    Letter blocked = inv(u[u.size() - 1]);
    std::vector<Word> out;
    for (Letter t : ordered_letters(ctx.rank)) {
        if (t == blocked) continue;
        std::vector<Word> part = translate_cylinder(ctx, delta, Word({t}));
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

Rational measure_of_union(const BoundaryContext& ctx, const std::vector<Word>& cylinders) {
    Rational total = 0;
    for (const Word& c : cylinders) total += cylinder_measure(ctx, c);
    return total;
}

}  // namespace frb
