#pragma once

#include <map>
#include <optional>

#include "frb/representation.hpp"

namespace frb {

// Finitely-described function on the group (vertices of the tree): a
// constant, a cylinder indicator chi_u (u nonempty), or a finite table.
class VertexFunction {
  public:
    enum class Kind { kConstant, kChi, kTable };

    static VertexFunction constant(Rational value);
    static VertexFunction chi(Word u);
    static VertexFunction table(std::map<Word, Rational> entries);

    Kind kind() const { return kind_; }
    const Word& chi_word() const { return u_; }
    const Rational& constant_value() const { return c_; }
    const std::map<Word, Rational>& entries() const { return t_; }

    Rational eval(const Word& x) const;

  private:
    Kind kind_ = Kind::kConstant;
    Rational c_;
    Word u_;
    std::map<Word, Rational> t_;
};

// Radial limit on the boundary: constants extend, chi_u becomes the cylinder
// indicator, finite tables vanish.
StepFunction boundary_part(const BoundaryContext& ctx, const VertexFunction& f);

// Normal form of chi_u * chi_v by prefix comparison.
struct ChiProduct {
    enum class Kind { kZero, kChi, kChiSelf } kind;
    Word word;  // for kChi: the deeper word; for kChiSelf: u (= v)
};
ChiProduct chi_product_normal_form(const Word& u, const Word& v);

// chi_u = sum over gamma in Pr_u(k) of chi_gamma away from finitely many
// vertices; reports that vertex support and checks it is exactly
// {x : u prefix of x, |u| <= |x| < k}, and that the boundary parts agree.
struct ChiDecomposition {
    bool ok;
    std::vector<Word> vertex_support;
};
ChiDecomposition chi_decomposition_check(const BoundaryContext& ctx, const Word& u, long k);

enum class MnMode { kAuto, kFast, kEnumerated };

// M_n(f) g = (1/|S_n|) sum over gamma in S_n of f(gamma) pi(gamma) g / Xi(n),
// exact at depth n + g.depth. Fast path: one pass over the output tree with
// blockwise sums over the sphere, grouped by divergence depth and tail
// pattern; enumerated path materializes the sum (small n only).
StepFunction m_n_apply(const BoundaryContext& ctx, const VertexFunction& f, long n,
                       const StepFunction& g, MnMode mode = MnMode::kAuto, int width = 0);

// <M_n(f) g, h>, exact. Fast path groups S_n by (head, tail) classes with
// count_avoiding multiplicities and one pi_coeff per class representative;
// enumerated path sums pi_coeff over the whole sphere (n <= 14).
QuadExt m_n_coeff(const BoundaryContext& ctx, const VertexFunction& f, long n,
                  const StepFunction& g, const StepFunction& h, MnMode mode = MnMode::kAuto);

// <M(f) g, h> for the limit operator M(f) = m(f|_B) P_{1_B}.
QuadExt limit_coeff(const BoundaryContext& ctx, const VertexFunction& f, const StepFunction& g,
                    const StepFunction& h);

// Matrix of P_d M_n(1) P_d in the orthonormalized depth-d cylinder basis,
// exact entries; symmetric by self-adjointness.
std::vector<std::vector<QuadExt>> compression_matrix(const BoundaryContext& ctx, long n, long d,
                                                     std::size_t dim_cap = 4096);

// Operator norm (largest |eigenvalue|) of the compression, in floats.
double compression_norm(const BoundaryContext& ctx, long n, long d, std::size_t dim_cap = 4096);

// Rank of the exact Gram matrix of {P_d pi(gamma) 1_B : |gamma| <= n_max};
// equals sphere_count(d) exactly when the projected orbit spans.
long cyclicity_rank(const BoundaryContext& ctx, long n_max, long d, std::size_t dim_cap = 4096);

struct ConvergenceRow {
    long n;
    QuadExt exact;
    double value;
    double deviation;
};

struct ConvergenceTable {
    std::vector<ConvergenceRow> rows;
    QuadExt limit;
    double limit_value;
    double fitted_rate;  // least-squares slope of log|dev| vs log n, last half
};

ConvergenceTable convergence_table(const BoundaryContext& ctx, const VertexFunction& f,
                                   const StepFunction& g, const StepFunction& h, long n_lo,
                                   long n_hi);

// Split of <M_n(chi_u) 1_{B_v}, 1_B> into the diagonal pair count plus the
// off-cylinder remainder; value <= head + tail holds exactly and tail decays
// like 1/n.
struct TailSplit {
    QuadExt value;
    Rational head;
    QuadExt tail;
    QuadExt correction;  // head + tail - limit
};
TailSplit matrix_tail_split(const BoundaryContext& ctx, const Word& u, const Word& v, long n);

}  // namespace frb
