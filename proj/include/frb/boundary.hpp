#pragma once

#include <vector>

#include "frb/enumerate.hpp"
#include "frb/quadext.hpp"
#include "frb/word.hpp"

namespace frb {

// Boundary of the rank-r free group: right-infinite reduced words, with the
// visual measure mu(B_u) = 1/(2r (2r-1)^(|u|-1)) on cylinders and the
// ultrametric e^{-(xi|eta)}. The radicand for half-integer powers is 2r-1.
struct BoundaryContext {
    int rank;
    explicit BoundaryContext(int r) : rank(r) { check_rank(r); }
    long q() const { return 2 * rank - 1; }
    long degree() const { return 2 * rank; }
};

// A cylinder is named by its (nonempty) base word; the empty word is the
// whole boundary.
Rational cylinder_measure(const BoundaryContext& ctx, const Word& u);

// Gromov product of two boundary points (or cylinder labels) based at the
// identity vertex: the common prefix length.
inline long gromov_product(const Word& u, const Word& v) {
    return static_cast<long>(common_prefix_len(u, v));
}

// Visual metric e^{-(u|v)}; 0 would need u == v as infinite words, so this
// treats the inputs as distinct boundary points through their labels.
double boundary_distance(const Word& u, const Word& v);

// Busemann cocycle beta_xi(x0, gamma x0) = 2 (gamma|xi) - |gamma|, constant
// on B_c when c is deep enough to pin the Gromov product; throws otherwise.
long busemann(const BoundaryContext& ctx, const Word& gamma, const Word& c);

// P(gamma, xi)^(1/2) = (2r-1)^(busemann/2) on the cylinder B_c, exact.
QuadExt poisson_sqrt(const BoundaryContext& ctx, const Word& gamma, const Word& c);

// Function on the boundary constant on cylinders of a fixed depth; values
// are stored in canonical sphere order of the depth-d base words.
class StepFunction {
  public:
    StepFunction() = default;
    StepFunction(int rank, long depth, QuadExt fill = QuadExt());
    static StepFunction constant(const BoundaryContext& ctx, QuadExt value);
    static StepFunction indicator(const BoundaryContext& ctx, const Word& u);

    int rank() const { return rank_; }
    long depth() const { return depth_; }
    std::size_t size() const { return v_.size(); }

    const QuadExt& value_at_index(std::size_t i) const { return v_[i]; }
    QuadExt& value_at_index(std::size_t i) { return v_[i]; }
    // value on B_w, |w| >= depth
    const QuadExt& value_on(const Word& w) const;
    Word base_word(std::size_t i) const { return sphere_word(rank_, depth_, i); }

    StepFunction refined(long new_depth) const;

    friend bool operator==(const StepFunction& f, const StepFunction& g);

  private:
    int rank_ = 0;
    long depth_ = 0;
    std::vector<QuadExt> v_;
};

StepFunction add(const StepFunction& f, const StepFunction& g);
StepFunction sub(const StepFunction& f, const StepFunction& g);
StepFunction scale(const QuadExt& c, const StepFunction& f);
StepFunction pointwise_product(const StepFunction& f, const StepFunction& g);

// integral against the visual measure
QuadExt integrate(const BoundaryContext& ctx, const StepFunction& f);

// (gamma . f)(xi) = f(gamma^{-1} xi), materialized at depth |gamma| + f.depth
StepFunction boundary_translate(const BoundaryContext& ctx, const Word& gamma,
                                const StepFunction& f);

// gamma . B_u as a finite disjoint union of cylinders (empty-word entry =
// whole boundary); used for measure transport without materialization.
std::vector<Word> translate_cylinder(const BoundaryContext& ctx, const Word& gamma, const Word& u);

Rational measure_of_union(const BoundaryContext& ctx, const std::vector<Word>& cylinders);

}  // namespace frb
