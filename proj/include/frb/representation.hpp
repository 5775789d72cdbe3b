#pragma once

#include "frb/boundary.hpp"

namespace frb {

// Quasi-regular representation on L^2 of the boundary:
// (pi(gamma) f)(xi) = P(gamma, xi)^(1/2) f(gamma^{-1} xi).

// Materialized at depth |gamma| + f.depth, where the Poisson kernel and the
// pulled-back argument are both pinned.
StepFunction apply_pi(const BoundaryContext& ctx, const Word& gamma, const StepFunction& f);

// L^2 pairing (all values real).
QuadExt inner(const BoundaryContext& ctx, const StepFunction& f, const StepFunction& g);

// <pi(gamma) g, h>, exact, via adaptive cylinder decomposition: descend the
// prefix tree only until the Poisson exponent and both arguments are
// constant on the block, then integrate blockwise. Equal to the pairing of
// the materialized objects, at a cost polynomial in |gamma| and the depths.
QuadExt pi_coeff(const BoundaryContext& ctx, const Word& gamma, const StepFunction& g,
                 const StepFunction& h);

// Harish-Chandra function Xi(n) = (1 + (r-1) n / r) (2r-1)^(-n/2).
QuadExt harish_chandra_closed(const BoundaryContext& ctx, long n);

// Xi(|gamma|) as the actual integral of P(gamma, .)^(1/2).
QuadExt harish_chandra_integral(const BoundaryContext& ctx, const Word& gamma);

// <pi(gamma) 1_B, 1_{B_u}>: closed forms when u branches off gamma or
// u = gamma, integration otherwise. u empty means the whole boundary.
QuadExt coeff_cylinder(const BoundaryContext& ctx, const Word& gamma, const Word& u);

// The same value by integration only (oracle for the closed forms).
QuadExt coeff_cylinder_integrated(const BoundaryContext& ctx, const Word& gamma, const Word& u);

// Derived closed form for the case u a strict prefix of gamma (validated
// against integration in tests).
QuadExt coeff_cylinder_prefix_closed(const BoundaryContext& ctx, long n, long u_len);

// sum over gamma in S_n of P(gamma, .)^(1/2) on B_c, |c| >= n; exact,
// assembled blockwise from c's letters. Equals |S_n| Xi(n) for every c.
QuadExt sum_sphere_poisson(const BoundaryContext& ctx, long n, const Word& c);

struct RatioBound {
    QuadExt ratio;    // coeff_cylinder(gamma, w) / Xi(|gamma|)
    QuadExt product;  // ratio * |gamma|
};

// Decay ratio behind the matrix-coefficient estimates; requires gamma != e
// and w not a prefix of gamma.
RatioBound harish_ratio_bound(const BoundaryContext& ctx, const Word& gamma, const Word& w);

}  // namespace frb
