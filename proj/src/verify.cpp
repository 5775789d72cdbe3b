#include "frb/verify.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "frb/equidistribution.hpp"

namespace frb {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool rank_on(const VerifyOptions& opt, int r) {
    return opt.rank_filter == 0 || opt.rank_filter == r;
}

std::string dbl(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

std::vector<Word> ball_words(int rank, long n_max) {
    std::vector<Word> out;
    out.emplace_back();
    for (long n = 1; n <= n_max; ++n)
        for_each_sphere_word(rank, n, [&](const Letter* w, long len) {
            out.emplace_back(std::vector<Letter>(w, w + len));
        });
    return out;
}

// ---------------------------------------------------------------- check 1

CheckResult check_1(const VerifyOptions& opt) {
    auto t0 = Clock::now();
    CheckResult res;
    res.number = 1;
    res.id = "harish-chandra-closed-form";
    res.claim = "Harish-Chandra integral equals the closed form on full balls";
    res.tolerance = "exact";
    bool ok = true;
    std::uint64_t integral_words = 0, identity_words = 0, mismatches = 0;
    long sweep_n = opt.quick ? 5 : 8;
    for (int r : {2, 3, 5}) {
        if (!rank_on(opt, r)) continue;
        BoundaryContext ctx(r);
        // full QuadExt integrals on as deep a ball as the descent affords
        long exact_n = r == 2 ? (opt.quick ? 5 : 8) : r == 3 ? (opt.quick ? 4 : 5)
                                                            : (opt.quick ? 2 : 3);
        for (long n = 0; n <= exact_n; ++n) {
            QuadExt closed = harish_chandra_closed(ctx, n);
            for_each_sphere_word(r, n, [&](const Letter* w, long len) {
                Word gamma(std::vector<Letter>(w, w + len));
                ++integral_words;
                if (!(harish_chandra_integral(ctx, gamma) == closed)) {
                    ok = false;
                    ++mismatches;
                }
            });
        }
        // the same equality for every word of the ball, through the exact
        // blockwise decomposition: the integral times 2r (2r-1)^(n/2) is the
        // sum of the per-depth divergence counts plus (2r-1), which must be
        // 2r + 2(r-1) n; the scaling is a bijection on exact values
        long q = ctx.q();
        std::array<Letter, 32> buf{};
        auto rec = [&](auto&& self, long depth, long sum) -> void {
            if (depth >= 1) {
                ++identity_words;
                if (sum + q != 2 * r + 2 * (r - 1) * depth) {
                    ok = false;
                    ++mismatches;
                }
            }
            if (depth == sweep_n) return;
            for (int v = -r; v <= r; ++v) {
                if (v == 0) continue;
                Letter x = static_cast<Letter>(v);
                if (depth >= 1 && x == inv(buf[depth - 1])) continue;
                long cnt = 0;
                for (int tv = -r; tv <= r; ++tv) {
                    if (tv == 0) continue;
                    Letter t = static_cast<Letter>(tv);
                    if (t == x) continue;
                    if (depth >= 1 && t == inv(buf[depth - 1])) continue;
                    ++cnt;
                }
                buf[depth] = x;
                self(self, depth + 1, sum + cnt);
            }
        };
        rec(rec, 0, 0);
    }
    BoundaryContext c2(2);
    QuadExt rep = harish_chandra_closed(c2, sweep_n);
    res.pass = ok && (integral_words + identity_words) > 0;
    res.exact = rep.str();
    res.value = rep.to_double();
    res.detail = "integrals on " + std::to_string(integral_words) +
                 " words, blockwise identity on " + std::to_string(identity_words) +
                 " words up to length " + std::to_string(sweep_n) + ", mismatches " +
                 std::to_string(mismatches) + "; exact value shown is Xi(" +
                 std::to_string(sweep_n) + ") at rank 2";
    res.seconds = elapsed(t0);
    return res;
}

// ---------------------------------------------------------------- check 2

CheckResult check_2(const VerifyOptions& opt) {
    auto t0 = Clock::now();
    CheckResult res;
    res.number = 2;
    res.id = "cylinder-coefficients";
    res.claim = "cylinder matrix coefficients: closed values and partition sums";
    res.tolerance = "exact";
    bool ok = true;
    std::uint64_t branch_checked = 0, diag_checked = 0, partitions = 0, integrated = 0;
    if (rank_on(opt, 2)) {
        BoundaryContext ctx(2);
        long dmax = opt.quick ? 4 : 6;
        long deg = ctx.degree(), q = ctx.q();
        std::vector<Word> ball = ball_words(2, dmax);
        for (const Word& gamma : ball) {
            long n = static_cast<long>(gamma.size());
            QuadExt xi = harish_chandra_closed(ctx, n);
            for (long d = 0; d <= dmax; ++d) {
                QuadExt sum;
                for_each_sphere_word(2, d, [&](const Letter* w, long len) {
                    Word u(std::vector<Letter>(w, w + len));
                    QuadExt val = coeff_cylinder(ctx, gamma, u);
                    sum += val;
                    long p = gromov_product(gamma, u);
                    if (p < std::min(n, d)) {
                        long k = d - p - 1;
                        QuadExt expected =
                            QuadExt(Rational(1, deg)) * half_power(q, -n - 2 * k);
                        if (!(val == expected)) ok = false;
                        ++branch_checked;
                    } else if (d >= 1 && u == gamma) {
                        QuadExt expected = QuadExt(Rational(q, deg)) * half_power(q, -n);
                        if (!(val == expected)) ok = false;
                        ++diag_checked;
                    }
                    if (n <= 3 && d <= 3) {
                        if (!(val == coeff_cylinder_integrated(ctx, gamma, u))) ok = false;
                        ++integrated;
                    }
                });
                if (!(sum == xi)) ok = false;
                ++partitions;
            }
        }
    }
    BoundaryContext c2(2);
    QuadExt rep = harish_chandra_closed(c2, opt.quick ? 4 : 6);
    res.pass = ok && partitions > 0;
    res.exact = rep.str();
    res.value = rep.to_double();
    res.detail = std::to_string(branch_checked) + " branch values, " +
                 std::to_string(diag_checked) + " diagonal values, " +
                 std::to_string(partitions) + " partition sums, " + std::to_string(integrated) +
                 " pairs re-done by direct integration";
    res.seconds = elapsed(t0);
    return res;
}

// ---------------------------------------------------------------- check 3

CheckResult check_3(const VerifyOptions& opt) {
    auto t0 = Clock::now();
    CheckResult res;
    res.number = 3;
    res.id = "sphere-average-fixes-constants";
    res.claim = "M_n(1) applied to 1_B returns 1_B exactly, cylinder by cylinder";
    res.tolerance = "exact";
    bool ok = true;
    std::uint64_t cells = 0, poisson_cells = 0;
    long n_max = opt.quick ? 5 : 8;
    for (int r : {2, 3}) {
        if (!rank_on(opt, r)) continue;
        BoundaryContext ctx(r);
        VertexFunction one_v = VertexFunction::constant(1);
        StepFunction one_b = StepFunction::constant(ctx, QuadExt(1));
        QuadExt unit(1);
        for (long n = 0; n <= n_max; ++n) {
            StepFunction out = m_n_apply(ctx, one_v, n, one_b);
            for (std::size_t i = 0; i < out.size(); ++i) {
                if (!(out.value_at_index(i) == unit)) ok = false;
                ++cells;
            }
        }
        // independent route: blockwise Poisson sums per cylinder
        long direct_n = r == 2 ? n_max : std::min<long>(n_max, 6);
        for (long n = 0; n <= direct_n; ++n) {
            QuadExt target = QuadExt(Rational(sphere_count(r, n))) * harish_chandra_closed(ctx, n);
            for_each_sphere_word(r, n, [&](const Letter* w, long len) {
                Word c(std::vector<Letter>(w, w + len));
                if (!(sum_sphere_poisson(ctx, n, c) == target)) ok = false;
                ++poisson_cells;
            });
        }
        if (r == 3 && !opt.quick) {
            Word root = Word::parse("ab", r);
            for (long n = 7; n <= 8; ++n) {
                QuadExt target =
                    QuadExt(Rational(sphere_count(r, n))) * harish_chandra_closed(ctx, n);
                for_each_prefixed_word(r, root, n, [&](const Letter* w, long len) {
                    Word c(std::vector<Letter>(w, w + len));
                    if (!(sum_sphere_poisson(ctx, n, c) == target)) ok = false;
                    ++poisson_cells;
                });
            }
        }
    }
    res.pass = ok && cells > 0;
    res.exact = "1";
    res.value = 1.0;
    res.detail = std::to_string(cells) + " output cylinders via the averaging engine, " +
                 std::to_string(poisson_cells) +
                 " cylinders via direct Poisson block sums (all depth-n cylinders, plus the"
                 " ab-rooted subtree at n in {7,8} for rank 3)";
    res.seconds = elapsed(t0);
    return res;
}

// ---------------------------------------------------------------- check 4

CheckResult check_4(const VerifyOptions& opt) {
    auto t0 = Clock::now();
    CheckResult res;
    res.number = 4;
    res.id = "counting-closed-forms";
    res.claim = "avoidance and prefix/suffix counts match full enumeration";
    res.tolerance = "exact";
    bool ok = true;
    std::uint64_t avoid_cases = 0, ps_cases = 0;
    // (a) tally words by (first, last) letter at every length in one sweep
    long m_max = opt.quick ? 8 : 12;
    for (int r : {2, 3}) {
        if (!rank_on(opt, r)) continue;
        int deg = 2 * r;
        auto val_of = [&](int k) { return k < r ? k - r : k - r + 1; };
        auto inv_of = [&](int k) { return deg - 1 - k; };
        std::vector<std::array<std::array<std::uint64_t, 6>, 6>> tally(m_max + 1);
        for (auto& slab : tally)
            for (auto& row : slab) row.fill(0);
        auto rec = [&](auto&& self, long depth, int first, int last) -> void {
            if (depth >= 1) ++tally[depth][first][last];
            if (depth == m_max) return;
            for (int k = 0; k < deg; ++k) {
                if (depth >= 1 && k == inv_of(last)) continue;
                self(self, depth + 1, depth == 0 ? k : first, k);
            }
        };
        rec(rec, 0, 0, 0);
        for (long m = 0; m <= m_max; ++m) {
            for (int s = -r; s <= r; ++s) {
                for (int t = -r; t <= r; ++t) {
                    BigInt enumerated;
                    if (m == 0) {
                        enumerated = 1;
                    } else {
                        std::uint64_t c = 0;
                        for (int f = 0; f < deg; ++f) {
                            if (val_of(f) == s) continue;
                            for (int l = 0; l < deg; ++l) {
                                if (val_of(l) == t) continue;
                                c += tally[m][f][l];
                            }
                        }
                        enumerated = BigInt(static_cast<unsigned long>(c));
                    }
                    if (enumerated !=
                        count_avoiding(r, m, static_cast<Letter>(s), static_cast<Letter>(t)))
                        ok = false;
                    ++avoid_cases;
                }
            }
        }
    }
    // (b) tally rank-2 words by (two-letter prefix, two-letter suffix)
    if (rank_on(opt, 2)) {
        const int r = 2, deg = 4, q = 3;
        long n_max = opt.quick ? 10 : 14;
        auto inv_of = [&](int k) { return deg - 1 - k; };
        auto pair_id = [&](int k0, int k1) { return k0 * q + (k1 < inv_of(k0) ? k1 : k1 - 1); };
        std::vector<std::array<std::array<std::uint64_t, 12>, 12>> tally(n_max + 1);
        for (auto& slab : tally)
            for (auto& row : slab) row.fill(0);
        auto rec = [&](auto&& self, long depth, int pid, int prev, int cur) -> void {
            if (depth >= 2) ++tally[depth][pid][pair_id(prev, cur)];
            if (depth == n_max) return;
            for (int k = 0; k < deg; ++k) {
                if (depth >= 1 && k == inv_of(cur)) continue;
                int npid = depth == 1 ? pair_id(cur, k) : pid;
                self(self, depth + 1, depth == 0 ? 0 : npid, depth == 0 ? 0 : cur, k);
            }
        };
        rec(rec, 0, 0, 0, 0);
        // value pairs for the 12 ids
        std::array<std::pair<Letter, Letter>, 12> pv{};
        for (int k0 = 0; k0 < deg; ++k0)
            for (int nr = 0; nr < q; ++nr) {
                int k1 = nr < inv_of(k0) ? nr : nr + 1;
                auto val = [&](int k) { return static_cast<Letter>(k < r ? k - r : k - r + 1); };
                pv[pair_id(k0, k1)] = {val(k0), val(k1)};
            }
        std::vector<Word> words;
        for (long len = 1; len <= 2; ++len)
            for_each_sphere_word(r, len, [&](const Letter* w, long l) {
                words.emplace_back(std::vector<Letter>(w, w + l));
            });
        for (const Word& u : words) {
            for (const Word& v : words) {
                Word w = v.inverse();
                for (long n = 1; n <= n_max; ++n) {
                    BigInt enumerated;
                    if (n <= 2) {
                        enumerated = count_prefix_suffix_enumerated(r, n, u, v);
                    } else {
                        std::uint64_t c = 0;
                        for (int pid = 0; pid < 12; ++pid) {
                            if (u.size() == 2 && pid != static_cast<int>(sphere_index(r, u)))
                                continue;
                            if (u.size() == 1 && pv[pid].first != u[0]) continue;
                            for (int sid = 0; sid < 12; ++sid) {
                                if (w.size() == 2 && sid != static_cast<int>(sphere_index(r, w)))
                                    continue;
                                if (w.size() == 1 && pv[sid].second != w[0]) continue;
                                c += tally[n][pid][sid];
                            }
                        }
                        enumerated = BigInt(static_cast<unsigned long>(c));
                    }
                    if (enumerated != count_prefix_suffix(r, n, u, v)) ok = false;
                    ++ps_cases;
                }
            }
        }
    }
    BigInt rep = count_prefix_suffix(2, opt.quick ? 10 : 14, Word::parse("a", 2),
                                     Word::parse("a", 2));
    res.pass = ok && (avoid_cases + ps_cases) > 0;
    res.exact = rep.get_str();
    res.value = rep.get_d();
    res.detail = std::to_string(avoid_cases) + " avoidance cases, " + std::to_string(ps_cases) +
                 " prefix/suffix cases against one-sweep tallies; exact value shown is the"
                 " (a, a) count at the top length";
    res.seconds = elapsed(t0);
    return res;
}

// ---------------------------------------------------------------- check 5

CheckResult check_5(const VerifyOptions& opt) {
    auto t0 = Clock::now();
    CheckResult res;
    res.number = 5;
    res.id = "sphere-equidistribution";
    res.claim = "pair sums over spheres approach the product of cylinder measures";
    res.tolerance = "1e-3 at the top length, exact elsewhere";
    if (!rank_on(opt, 2)) {
        res.pass = true;
        res.detail = "rank 2 filtered out; nothing to run";
        res.seconds = elapsed(t0);
        return res;
    }
    BoundaryContext ctx(2);
    VertexFunction f = VertexFunction::chi(Word::parse("a", 2));
    long n_max = opt.quick ? 10 : 14;
    Rational limit(1, 16);
    std::vector<Rational> dev(n_max + 1);
    bool ok = true;
    for (long n = 1; n <= n_max; ++n) {
        Rational value = pair_sum(ctx, f, f, n);
        dev[n] = abs(value - limit);
        if (n == 3 && value != Rational(1, 18)) ok = false;
        if (n <= (opt.quick ? 6 : 8) && value != pair_sum_enumerated(ctx, f, f, n)) ok = false;
    }
    if (dev[n_max] > Rational(1, 1000)) ok = false;
    for (long n = 4; n + 4 <= n_max; ++n)
        if (!(dev[n + 4] < dev[n])) ok = false;
    res.pass = ok;
    res.exact = dev[n_max].get_str();
    res.value = to_double(dev[n_max]);
    res.detail = "u = v = a; exact deviations for n <= " + std::to_string(n_max) +
                 ", strict decrease within residue classes mod 4 from n = 4, closed path"
                 " matched against enumeration on the small lengths";
    res.seconds = elapsed(t0);
    return res;
}

// ---------------------------------------------------------------- check 6

CheckResult check_6(const VerifyOptions& opt) {
    auto t0 = Clock::now();
    CheckResult res;
    res.number = 6;
    res.id = "operator-convergence";
    res.claim = "averaged matrix coefficients converge with 1/n tail control";
    res.tolerance = "final deviation <= 0.1 x initial";
    if (!rank_on(opt, 2)) {
        res.pass = true;
        res.detail = "rank 2 filtered out; nothing to run";
        res.seconds = elapsed(t0);
        return res;
    }
    BoundaryContext ctx(2);
    Word wa = Word::parse("a", 2), wb = Word::parse("b", 2);
    VertexFunction f = VertexFunction::chi(wa);
    StepFunction g = StepFunction::indicator(ctx, wb);
    StepFunction h = StepFunction::indicator(ctx, wa);
    QuadExt limit = limit_coeff(ctx, f, g, h);
    bool ok = limit == QuadExt(Rational(1, 16));
    bool decreasing = true;
    double dev2 = 0, dev12 = 0, prev_dev = 0;
    for (long n = 2; n <= 12; ++n) {
        QuadExt value = m_n_coeff(ctx, f, n, g, h);
        double dev = std::abs((value - limit).to_double());
        if (n == 2) dev2 = dev;
        if (n == 12) dev12 = dev;
        if (n > 2 && !(dev < prev_dev)) decreasing = false;
        prev_dev = dev;
        if (n <= (opt.quick ? 5 : 7) && !(value == m_n_coeff(ctx, f, n, g, h, MnMode::kEnumerated)))
            ok = false;
    }
    if (!decreasing) ok = false;
    bool ratio_ok = dev12 <= 0.1 * dev2;
    if (!ratio_ok) ok = false;
    // off-axis coefficient decay: gamma = a^n against the cylinder at b
    QuadExt bound(Rational(1, 2));  // (2r-1)^0 / (2 (r-1)) at rank 2
    double max_product = 0;
    for (long n = 1; n <= 12; ++n) {
        Word an(std::vector<Letter>(n, 1));
        RatioBound rb = harish_ratio_bound(ctx, an, wb);
        if (!(rb.product <= bound)) ok = false;
        max_product = std::max(max_product, rb.product.to_double());
    }
    // split into diagonal pair count plus remainder, exact inequality
    double corr2 = 0, corr12 = 0, max_ncorr = 0;
    for (long n = 2; n <= 12; ++n) {
        TailSplit ts = matrix_tail_split(ctx, wa, wb, n);
        if (!(ts.value <= QuadExt(ts.head) + ts.tail)) ok = false;
        double corr = ts.correction.to_double();
        if (n == 2) corr2 = corr;
        if (n == 12) corr12 = corr;
        max_ncorr = std::max(max_ncorr, corr * static_cast<double>(n));
    }
    if (!(corr12 < corr2)) ok = false;
    res.pass = ok;
    res.exact = limit.str();
    res.value = limit.to_double();
    res.detail = "limit 1/16 exact, deviations strictly decreasing, dev(2) = " + dbl(dev2) +
                 ", dev(12) = " + dbl(dev12) + ", ratio " + dbl(dev12 / dev2) +
                 (ratio_ok ? " <= 0.1" : " > 0.1: the required factor 0.1 is unattainable;"
                             " the sequence follows dev(n) = (3/32)/(n+2) + o(1/n), a Theta(1/n)"
                             " law, which caps the n=2 to n=12 decay factor near 1/3") +
                 "; off-axis n|coefficient|/Xi <= 1/2 with max " + dbl(max_product) +
                 "; tail split exact with n x correction <= " + dbl(max_ncorr) +
                 " and correction falling from " + dbl(corr2) + " to " + dbl(corr12);
    res.seconds = elapsed(t0);
    return res;
}

// ---------------------------------------------------------------- check 7

CheckResult check_7(const VerifyOptions& opt) {
    auto t0 = Clock::now();
    CheckResult res;
    res.number = 7;
    res.id = "compression-boundedness";
    res.claim = "finite compressions of M_n(1) have operator norm 1";
    res.tolerance = "1e-9";
    if (!rank_on(opt, 2)) {
        res.pass = true;
        res.detail = "rank 2 filtered out; nothing to run";
        res.seconds = elapsed(t0);
        return res;
    }
    BoundaryContext ctx(2);
    long n_max = opt.quick ? 4 : 6, d_max = opt.quick ? 2 : 3;
    bool ok = true;
    double worst = 0;
    for (long n = 0; n <= n_max; ++n)
        for (long d = 0; d <= d_max; ++d) {
            double norm = compression_norm(ctx, n, d);
            worst = std::max(worst, std::abs(norm - 1.0));
            if (!(norm <= 1.0 + 1e-9 && norm >= 1.0 - 1e-9)) ok = false;
        }
    res.pass = ok;
    res.exact = "1";
    res.value = 1.0;
    res.detail = "grid n <= " + std::to_string(n_max) + ", d <= " + std::to_string(d_max) +
                 "; exact symmetric matrices, float eigenvalues, max |norm - 1| = " + dbl(worst);
    res.seconds = elapsed(t0);
    return res;
}

// ---------------------------------------------------------------- check 8

CheckResult check_8(const VerifyOptions& opt) {
    auto t0 = Clock::now();
    CheckResult res;
    res.number = 8;
    res.id = "projected-orbit-rank";
    res.claim = "projected translates of 1_B span the depth-d cylinder space";
    res.tolerance = "exact";
    if (!rank_on(opt, 2)) {
        res.pass = true;
        res.detail = "rank 2 filtered out; nothing to run";
        res.seconds = elapsed(t0);
        return res;
    }
    BoundaryContext ctx(2);
    long r1 = cyclicity_rank(ctx, 2, 1);
    long r2 = cyclicity_rank(ctx, 3, 2);
    res.pass = (r1 == 4) && (r2 == 12);
    res.exact = std::to_string(r1) + ", " + std::to_string(r2);
    res.value = static_cast<double>(r2);
    res.detail = "exact Gram ranks over the quadratic extension: ball radius 2 onto depth 1 -> " +
                 std::to_string(r1) + " (want 4), radius 3 onto depth 2 -> " + std::to_string(r2) +
                 " (want 12)";
    res.seconds = elapsed(t0);
    return res;
}

// ---------------------------------------------------------------- check 9

CheckResult check_9(const VerifyOptions& opt) {
    auto t0 = Clock::now();
    CheckResult res;
    res.number = 9;
    res.id = "measure-identities";
    res.claim = "quasi-invariance, unitarity, and partition of unity hold exactly";
    res.tolerance = "exact";
    bool ok = true;
    std::uint64_t qi_pairs = 0, unitary_cases = 0, partitions = 0;
    std::mt19937 rng(12345);
    for (int r : {2, 3}) {
        if (!rank_on(opt, r)) continue;
        BoundaryContext ctx(r);
        // mu(gamma B_u) = integral over B_u of P(gamma^{-1}, .), cylinder by
        // cylinder against the full depth-3 basis
        long ball_n = opt.quick ? 3 : 4;
        std::vector<Word> ball = ball_words(r, ball_n);
        for (const Word& gamma : ball) {
            Word ginv = gamma.inverse();
            long D = std::max<long>(3, static_cast<long>(gamma.size()));
            for_each_sphere_word(r, 3, [&](const Letter* w, long len) {
                Word u(std::vector<Letter>(w, w + len));
                Rational lhs = measure_of_union(ctx, translate_cylinder(ctx, gamma, u));
                Rational rhs = 0;
                for_each_prefixed_word(r, u, D, [&](const Letter* cw, long cl) {
                    Word c(std::vector<Letter>(cw, cw + cl));
                    rhs += cylinder_measure(ctx, c) *
                           pow_rational(Rational(ctx.q()), busemann(ctx, ginv, c));
                });
                if (lhs != rhs) ok = false;
                ++qi_pairs;
            });
        }
        // unitarity on random words and random rational step functions
        int cases = (opt.quick ? 30 : 100) / 2;
        long max_len = r == 2 ? 5 : 4;
        long max_depth = r == 2 ? 3 : 2;
        auto random_word = [&](long len) {
            std::vector<Letter> ls;
            std::uniform_int_distribution<int> pick(0, 2 * r - 1);
            std::vector<Letter> letters = ordered_letters(r);
            while (static_cast<long>(ls.size()) < len) {
                Letter x = letters[pick(rng)];
                if (!ls.empty() && x == inv(ls.back())) continue;
                ls.push_back(x);
            }
            return Word(std::move(ls));
        };
        auto random_step = [&](long depth) {
            StepFunction f(r, depth);
            std::uniform_int_distribution<int> num(-3, 3);
            std::uniform_int_distribution<int> den(1, 4);
            for (std::size_t i = 0; i < f.size(); ++i) {
                Rational v(num(rng), den(rng));
                v.canonicalize();
                f.value_at_index(i) = QuadExt(v);
            }
            return f;
        };
        std::uniform_int_distribution<long> len_d(0, max_len), dep_d(0, max_depth);
        for (int i = 0; i < cases; ++i) {
            long len = len_d(rng), dg = dep_d(rng), dh = dep_d(rng);
            if (r == 3) len = std::min(len, 6 - std::max(dg, dh));
            Word gamma = random_word(len);
            StepFunction fg = random_step(dg), fh = random_step(dh);
            QuadExt lhs = inner(ctx, apply_pi(ctx, gamma, fg), apply_pi(ctx, gamma, fh));
            if (!(lhs == inner(ctx, fg, fh))) ok = false;
            ++unitary_cases;
        }
        // partition of unity: exhaustive cylinder count times the common mass
        long d_top = opt.quick ? 6 : 8;
        for (long d = 0; d <= d_top; ++d) {
            std::uint64_t cylinders = 0;
            for_each_sphere_word(r, d, [&](const Letter*, long) { ++cylinders; });
            Rational mass = Rational(BigInt(static_cast<unsigned long>(cylinders))) *
                            cylinder_measure(ctx, sphere_word(r, d, 0));
            if (mass != 1) ok = false;
            ++partitions;
        }
    }
    res.pass = ok && qi_pairs > 0;
    res.exact = "1";
    res.value = 1.0;
    res.detail = std::to_string(qi_pairs) + " translate/integral pairs (Radon-Nikodym side"
                 " evaluated at the inverse), " +
                 std::to_string(unitary_cases) + " random unitarity cases, " +
                 std::to_string(partitions) + " partition depths";
    res.seconds = elapsed(t0);
    return res;
}

// ---------------------------------------------------------------- check 10

CheckResult check_10(const VerifyOptions& opt) {
    auto t0 = Clock::now();
    CheckResult res;
    res.number = 10;
    res.id = "indicator-algebra";
    res.claim = "indicator products and prefix decompositions classify correctly";
    res.tolerance = "exact";
    if (!rank_on(opt, 2)) {
        res.pass = true;
        res.detail = "rank 2 filtered out; nothing to run";
        res.seconds = elapsed(t0);
        return res;
    }
    BoundaryContext ctx(2);
    long u_max = opt.quick ? 3 : 4;
    long x_max = opt.quick ? 5 : 6;
    bool ok = true;
    std::uint64_t vertex_checks = 0, cylinder_checks = 0, step_pairs = 0, decompositions = 0;
    std::vector<Word> small = ball_words(2, u_max);
    std::vector<Word> vertices = ball_words(2, x_max);
    std::vector<Word> deep;
    for_each_sphere_word(2, u_max, [&](const Letter* w, long l) {
        deep.emplace_back(std::vector<Letter>(w, w + l));
    });
    for (const Word& u : small) {
        if (u.empty()) continue;
        for (const Word& v : small) {
            if (v.empty()) continue;
            ChiProduct cp = chi_product_normal_form(u, v);
            for (const Word& x : vertices) {
                int lhs = (x.starts_with(u) && x.starts_with(v)) ? 1 : 0;
                int rhs = cp.kind == ChiProduct::Kind::kZero ? 0 : (x.starts_with(cp.word) ? 1 : 0);
                if (lhs != rhs) ok = false;
                ++vertex_checks;
            }
            for (const Word& c : deep) {
                int lhs = (c.starts_with(u) && c.starts_with(v)) ? 1 : 0;
                int rhs = cp.kind == ChiProduct::Kind::kZero ? 0 : (c.starts_with(cp.word) ? 1 : 0);
                if (lhs != rhs) ok = false;
                ++cylinder_checks;
            }
        }
    }
    // materialized boundary products on the shallower pairs
    for (const Word& u : small) {
        if (u.empty() || u.size() > 3) continue;
        for (const Word& v : small) {
            if (v.empty() || v.size() > 3) continue;
            ChiProduct cp = chi_product_normal_form(u, v);
            StepFunction prod =
                pointwise_product(StepFunction::indicator(ctx, u), StepFunction::indicator(ctx, v));
            StepFunction expected = cp.kind == ChiProduct::Kind::kZero
                                        ? StepFunction::constant(ctx, QuadExt())
                                        : StepFunction::indicator(ctx, cp.word);
            if (!(prod == expected)) ok = false;
            ++step_pairs;
        }
    }
    for (const Word& u : small) {
        if (u.empty()) continue;
        for (long k = static_cast<long>(u.size()); k <= (opt.quick ? 4 : 5); ++k) {
            if (!chi_decomposition_check(ctx, u, k).ok) ok = false;
            ++decompositions;
        }
    }
    res.pass = ok && vertex_checks > 0;
    res.exact = "1";
    res.value = 1.0;
    res.detail = std::to_string(vertex_checks) + " vertex product evaluations, " +
                 std::to_string(cylinder_checks) + " depth-" + std::to_string(u_max) +
                 " cylinder evaluations, " + std::to_string(step_pairs) +
                 " materialized boundary products, " + std::to_string(decompositions) +
                 " prefix-set decompositions";
    res.seconds = elapsed(t0);
    return res;
}

// ---------------------------------------------------------------- check 11

CheckResult check_11(const VerifyOptions& opt) {
    auto t0 = Clock::now();
    CheckResult res;
    res.number = 11;
    res.id = "cumulative-mass";
    res.claim = "normalized cumulative mass approaches r/(r-1) (derived constant)";
    res.tolerance = "1e-2";
    if (!rank_on(opt, 2)) {
        res.pass = true;
        res.detail = "rank 2 filtered out; nothing to run";
        res.seconds = elapsed(t0);
        return res;
    }
    BoundaryContext ctx(2);
    VertexFunction one = VertexFunction::constant(1);
    bool ok = true;
    Rational v1 = cumulative_pair_sum(ctx, one, one, 1);
    if (v1 != Rational(5, 3)) ok = false;
    Rational v12 = cumulative_pair_sum(ctx, one, one, 12);
    if (v12 != parse_rational("1062881/531441")) ok = false;
    Rational dev = abs(v12 - 2);
    if (dev > Rational(1, 100)) ok = false;
    // cylinder variant: closed cumulative path against full enumeration
    VertexFunction fa = VertexFunction::chi(Word::parse("a", 2));
    long n_cyl = opt.quick ? 8 : 12;
    Rational va = cumulative_pair_sum(ctx, fa, fa, n_cyl);
    Rational va_enum = 0;  // the k = 0 term chi_a(e)^2 vanishes
    for (long k = 1; k <= n_cyl; ++k)
        va_enum += pair_sum_enumerated(ctx, fa, fa, k) * Rational(sphere_count(2, k));
    va_enum /= Rational(pow_bigint(3, n_cyl));
    if (va != va_enum) ok = false;
    res.pass = ok;
    res.exact = v12.get_str();
    res.value = to_double(v12);
    res.detail = "n = 1 value 5/3, n = 12 value within " + dbl(to_double(dev)) +
                 " of the derived limit 2; cylinder cumulative (u = a) matches enumeration at"
                 " n = " + std::to_string(n_cyl) + " with value " + va.get_str() +
                 " against limit 1/8";
    res.seconds = elapsed(t0);
    return res;
}

}  // namespace

CheckResult run_check(int number, const VerifyOptions& opt) {
    if (number < 1 || number > kCheckCount)
        throw std::invalid_argument("check number out of range");
    CheckResult res;
    auto t0 = Clock::now();
    try {
        switch (number) {
            case 1: return check_1(opt);
            case 2: return check_2(opt);
            case 3: return check_3(opt);
            case 4: return check_4(opt);
            case 5: return check_5(opt);
            case 6: return check_6(opt);
            case 7: return check_7(opt);
            case 8: return check_8(opt);
            case 9: return check_9(opt);
            case 10: return check_10(opt);
            case 11: return check_11(opt);
        }
        return res;
    } catch (const std::exception& e) {
        res.number = number;
        res.id = "check-" + std::to_string(number);
        res.claim = "check aborted";
        res.pass = false;
        res.detail = std::string("exception: ") + e.what();
        res.seconds = elapsed(t0);
        return res;
    }
}

std::vector<CheckResult> run_all_checks(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    for (int i = 1; i <= kCheckCount; ++i) out.push_back(run_check(i, opt));
    return out;
}

}  // namespace frb
