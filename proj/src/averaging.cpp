#include "frb/averaging.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <thread>

#include "frb/parallel.hpp"

namespace frb {

VertexFunction VertexFunction::constant(Rational value) {
    VertexFunction f;
    f.kind_ = Kind::kConstant;
    f.c_ = std::move(value);
    return f;
}

VertexFunction VertexFunction::chi(Word u) {
    if (u.empty()) throw std::invalid_argument("chi needs a nonempty word");
    VertexFunction f;
    f.kind_ = Kind::kChi;
    f.u_ = std::move(u);
    return f;
}

VertexFunction VertexFunction::table(std::map<Word, Rational> entries) {
    VertexFunction f;
    f.kind_ = Kind::kTable;
    f.t_ = std::move(entries);
    return f;
}

Rational VertexFunction::eval(const Word& x) const {
    switch (kind_) {
        case Kind::kConstant:
            return c_;
        case Kind::kChi:
            return x.starts_with(u_) ? 1 : 0;
        case Kind::kTable: {
            auto it = t_.find(x);
            return it == t_.end() ? Rational(0) : it->second;
        }
    }
    return 0;
}

StepFunction boundary_part(const BoundaryContext& ctx, const VertexFunction& f) {
    switch (f.kind()) {
        case VertexFunction::Kind::kConstant:
            return StepFunction::constant(ctx, QuadExt(f.constant_value()));
        case VertexFunction::Kind::kChi:
            return StepFunction::indicator(ctx, f.chi_word());
        case VertexFunction::Kind::kTable:
            return StepFunction::constant(ctx, QuadExt(0));
    }
    throw std::logic_error("unreachable");
}

ChiProduct chi_product_normal_form(const Word& u, const Word& v) {
    if (u.empty() || v.empty()) throw std::invalid_argument("chi words must be nonempty");
    if (u == v) return {ChiProduct::Kind::kChiSelf, u};
    if (v.starts_with(u)) return {ChiProduct::Kind::kChi, v};
    if (u.starts_with(v)) return {ChiProduct::Kind::kChi, u};
    return {ChiProduct::Kind::kZero, Word{}};
}

ChiDecomposition chi_decomposition_check(const BoundaryContext& ctx, const Word& u, long k) {
    validate_rank(u, ctx.rank);
    if (u.empty()) throw std::invalid_argument("chi word must be nonempty");
    if (k < static_cast<long>(u.size())) throw std::invalid_argument("need k >= |u|");
    ChiDecomposition out{true, {}};
    // vertex side: scan all x with |x| <= k + 1; beyond k the prefix sets
    // partition Pr_u, so the difference can only live strictly below k
    for (long len = 0; len <= k + 1; ++len) {
        for_each_sphere_word(ctx.rank, len, [&](const Letter* w, long l) {
            Word x(std::vector<Letter>(w, w + l));
            long chi_u = x.starts_with(u) ? 1 : 0;
            long sum = 0;  // chi_gamma(x) over gamma in Pr_u(k)
            if (l >= k) {
                Word head = x.prefix(k);
                sum = (head.starts_with(u)) ? 1 : 0;
            }
            if (chi_u != sum) {
                out.vertex_support.push_back(x);
                if (l >= k) out.ok = false;  // support must stay below k
            }
        });
    }
    // boundary side: exact step-function identity at depth k
    StepFunction lhs = StepFunction::indicator(ctx, u).refined(k);
    StepFunction rhs(ctx.rank, k);
    for_each_prefixed_word(ctx.rank, u, k, [&](const Letter* w, long l) {
        rhs.value_at_index(sphere_index(ctx.rank, Word(std::vector<Letter>(w, w + l)))) =
            QuadExt(1);
    });
    if (!(lhs == rhs)) out.ok = false;
    // the support must be exactly the u-prefixed vertices shorter than k
    for (const Word& x : out.vertex_support)
        if (!(x.starts_with(u) && static_cast<long>(x.size()) < k)) out.ok = false;
    BigInt expect = 0;
    for (long len = static_cast<long>(u.size()); len < k; ++len)
        expect += pow_bigint(ctx.q(), len - static_cast<long>(u.size()));
    if (BigInt(static_cast<unsigned long>(out.vertex_support.size())) != expect) out.ok = false;
    return out;
}

namespace {

struct MnEngine {
    const BoundaryContext& ctx;
    long n, dg, D;
    int r;
    long q;
    bool is_chi = false;
    Rational const_factor = 1;
    Word u0;
    long l0 = 0;
    const StepFunction& g;

    std::vector<Letter> letters;
    std::vector<QuadExt> pw;         // (2r-1)^((2p-n)/2)
    std::vector<Rational> powq;      // (2r-1)^m
    std::vector<QuadExt> g_inv;      // g(sigma^{-1}) by sigma sphere index
    std::vector<QuadExt> g_first;    // sum of g_inv over sigma with given first letter
    QuadExt g_total;
    QuadExt g0;
    QuadExt inv_norm;
    // count_avoiding(m, s, t) by (m, pattern): s==t / s==-t / distinct
    std::vector<std::array<Rational, 3>> cavoid_memo;

    MnEngine(const BoundaryContext& c, const VertexFunction& f, long n_, const StepFunction& g_)
        : ctx(c), n(n_), dg(g_.depth()), D(n_ + g_.depth()), r(c.rank), q(c.q()), g(g_) {
        switch (f.kind()) {
            case VertexFunction::Kind::kConstant:
                const_factor = f.constant_value();
                break;
            case VertexFunction::Kind::kChi:
                is_chi = true;
                u0 = f.chi_word();
                l0 = static_cast<long>(u0.size());
                break;
            default:
                throw std::logic_error("engine handles constant and chi only");
        }
        letters = ordered_letters(r);
        pw.resize(n + 1);
        for (long p = 0; p <= n; ++p) pw[p] = half_power(q, 2 * p - n);
        powq.resize(n + 1);
        for (long m = 0; m <= n; ++m) powq[m] = pow_rational(Rational(q), m);
        if (dg > 0) {
            std::uint64_t sz = sphere_count_u64(r, dg);
            g_inv.resize(sz);
            g_first.assign(2 * r, QuadExt());
            for (std::uint64_t i = 0; i < sz; ++i) {
                Word sigma = sphere_word(r, dg, i);
                g_inv[i] = g.value_on(sigma.inverse());
                g_first[letter_slot(sigma[0])] += g_inv[i];
                g_total += g_inv[i];
            }
        } else {
            g0 = g.value_at_index(0);
        }
        QuadExt norm = QuadExt(Rational(sphere_count(r, n))) * harish_chandra_closed(ctx, n);
        inv_norm = norm.inverse();
        // filled up front so the parallel sweep only reads; counts depend on
        // the (s, t) pattern class only
        cavoid_memo.resize(n + 1);
        for (long m = 0; m <= n; ++m)
            cavoid_memo[m] = {Rational(count_avoiding(r, m, 1, 1)),
                              Rational(count_avoiding(r, m, 1, -1)),
                              Rational(count_avoiding(r, m, 1, 2))};
    }

    int letter_slot(Letter x) const { return x < 0 ? x + r : x + r - 1; }

    const Rational& cavoid(long m, Letter s, Letter t) const {
        int pat = (s == t) ? 0 : (s == inv(t) ? 1 : 2);
        return cavoid_memo[m][pat];
    }

    // sum over continuations delta of t (|delta| = m >= dg) of g evaluated on
    // the pulled-back argument; forced_from..forced_to is the chi-imposed
    // prefix of delta inside u0 (empty when lpi == 0)
    QuadExt inner_sum(long m, Letter t, long lpi, long p) {
        long free_len = m - lpi;
        if (dg == 0) return QuadExt(powq[free_len]) * g0;
        if (lpi == 0) {
            if (m == dg) return g_total - g_first[letter_slot(inv(t))];
            QuadExt out;
            for (Letter x : letters) out += QuadExt(cavoid(m - dg, inv(t), inv(x))) * g_first[letter_slot(x)];
            return out;
        }
        Letter pilast = u0[p + lpi];
        if (free_len > dg) {
            QuadExt out;
            for (Letter x : letters)
                out += QuadExt(cavoid(free_len - dg, inv(pilast), inv(x))) * g_first[letter_slot(x)];
            return out;
        }
        if (free_len == dg) return g_total - g_first[letter_slot(inv(pilast))];
        // sigma overlaps the forced prefix: enumerate the free completion
        QuadExt out;
        std::vector<Letter> delta(m);
        for (long i = 0; i < lpi; ++i) delta[i] = u0[p + 1 + i];
        enumerate_completion(delta, lpi, m, t, [&](const std::vector<Letter>& d) {
            std::vector<Letter> sig(d.end() - dg, d.end());
            out += g_inv[sphere_index(r, Word(std::move(sig)))];
        });
        return out;
    }

    void enumerate_completion(std::vector<Letter>& delta, long at, long m, Letter prev,
                              const std::function<void(const std::vector<Letter>&)>& emit) {
        if (at == m) {
            emit(delta);
            return;
        }
        Letter pred = at > 0 ? delta[at - 1] : prev;
        for (Letter x : letters) {
            if (x == inv(pred)) continue;
            delta[at] = x;
            enumerate_completion(delta, at + 1, m, prev, emit);
        }
    }

    // divergence block at depth p (gamma agrees with the output cylinder on p
    // letters, then leaves); valid for m = n-p-1 >= dg
    QuadExt block(const Letter* buf, long p, long pfx) {
        QuadExt sumt;
        for (Letter t : letters) {
            if (t == buf[p]) continue;
            if (p >= 1 && t == inv(buf[p - 1])) continue;
            long lpi = 0;
            if (is_chi) {
                if (p < l0) {
                    if (pfx < p || t != u0[p]) continue;
                    lpi = l0 - 1 - p;
                } else if (pfx < l0) {
                    continue;
                }
            }
            sumt += inner_sum(n - p - 1, t, lpi, p);
        }
        return pw[p] * sumt;
    }

    // blocks with m < dg, plus the gamma-equals-prefix term; leaf only
    QuadExt leaf_rest(const Letter* buf, long pfx) {
        QuadExt out;
        for (long p = std::max<long>(0, n - dg); p <= n - 1; ++p) {
            long m = n - p - 1;
            QuadExt sumt;
            for (Letter t : letters) {
                if (t == buf[p]) continue;
                if (p >= 1 && t == inv(buf[p - 1])) continue;
                long lpi = 0;
                if (is_chi) {
                    if (p < l0) {
                        if (pfx < p || t != u0[p]) continue;
                        lpi = l0 - 1 - p;
                    } else if (pfx < l0) {
                        continue;
                    }
                }
                std::vector<Letter> delta(m);
                for (long i = 0; i < lpi; ++i) delta[i] = u0[p + 1 + i];
                auto add = [&](const std::vector<Letter>& d) {
                    std::vector<Letter> arg(dg);
                    for (long i = 0; i < m; ++i) arg[i] = inv(d[m - 1 - i]);
                    arg[m] = inv(t);
                    for (long i = m + 1; i < dg; ++i) arg[i] = buf[p + (i - m - 1)];
                    sumt += g.value_on(Word(std::move(arg)));
                };
                if (m == 0) add(delta);
                else enumerate_completion(delta, lpi, m, t, add);
            }
            out += pw[p] * sumt;
        }
        // gamma = the first n letters of the output cylinder
        bool gate = !is_chi || pfx >= l0;
        if (gate) {
            QuadExt tail_val =
                dg == 0 ? g0 : g.value_on(Word(std::vector<Letter>(buf + n, buf + D)));
            out += pw[n] * tail_val;
        }
        return out;
    }

    void run_range(StepFunction& out, Letter first, std::uint64_t base) {
        std::vector<Letter> buf(std::max<long>(D, 1));
        std::uint64_t i = base;
        buf[0] = first;
        long pfx0 = (is_chi && l0 > 0 && u0[0] == first) ? 1 : 0;
        QuadExt acc0 = (1 <= n - dg) ? block(buf.data(), 0, 0) : QuadExt();
        descend(out, buf, 1, pfx0, acc0, i);
    }

    void descend(StepFunction& out, std::vector<Letter>& buf, long depth, long pfx,
                 const QuadExt& acc, std::uint64_t& i) {
        if (depth == D) {
            out.value_at_index(i++) =
                inv_norm * QuadExt(const_factor) * (acc + leaf_rest(buf.data(), pfx));
            return;
        }
        for (Letter x : letters) {
            if (x == inv(buf[depth - 1])) continue;
            buf[depth] = x;
            long npfx = (pfx == depth && depth < l0 && x == u0[depth]) ? depth + 1 : pfx;
            QuadExt nacc = acc;
            if (depth + 1 <= n - dg) nacc += block(buf.data(), depth, pfx);
            descend(out, buf, depth + 1, npfx, nacc, i);
        }
    }

    StepFunction run(int width) {
        StepFunction out(r, D);
        if (is_chi && l0 > n) return out;  // chi vanishes on the sphere
        if (D == 0) {
            bool gate = !is_chi;  // |u0| >= 1 > 0 = n
            out.value_at_index(0) = gate ? inv_norm * QuadExt(const_factor) * pw[n] * g0 : QuadExt();
            return out;
        }
        std::uint64_t part = 1;
        for (long i = 1; i < D; ++i) part *= q;
        if (width <= 1) {
            for (int k = 0; k < 2 * r; ++k) run_range(out, letters[k], part * k);
            return out;
        }
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        int workers = std::min(width, 2 * r);
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (int k = next.fetch_add(1); k < 2 * r; k = next.fetch_add(1))
                    run_range(out, letters[k], part * k);
            });
        for (auto& th : pool) th.join();
        return out;
    }
};

StepFunction m_n_apply_literal(const BoundaryContext& ctx, const VertexFunction& f, long n,
                               const StepFunction& g) {
    std::uint64_t sphere = sphere_count_u64(ctx.rank, n);
    std::uint64_t out_size = sphere_count_u64(ctx.rank, n + g.depth());
    if (sphere * out_size > UINT64_C(40000000))
        throw resource_cap_error("literal M_n sum too large; use the fast path");
    StepFunction acc(ctx.rank, n + g.depth());
    for_each_sphere_word(ctx.rank, n, [&](const Letter* w, long len) {
        Word gamma(std::vector<Letter>(w, w + len));
        Rational fv = f.eval(gamma);
        if (fv == 0) return;
        StepFunction term = apply_pi(ctx, gamma, g);
        for (std::size_t i = 0; i < acc.size(); ++i)
            acc.value_at_index(i) += QuadExt(fv) * term.value_at_index(i);
    });
    QuadExt norm = QuadExt(Rational(sphere_count(ctx.rank, n))) * harish_chandra_closed(ctx, n);
    QuadExt inv_norm = norm.inverse();
    for (std::size_t i = 0; i < acc.size(); ++i)
        acc.value_at_index(i) = inv_norm * acc.value_at_index(i);
    return acc;
}

}  // namespace

StepFunction m_n_apply(const BoundaryContext& ctx, const VertexFunction& f, long n,
                       const StepFunction& g, MnMode mode, int width) {
    if (g.rank() != ctx.rank) throw std::invalid_argument("rank mismatch");
    if (n < 0) throw std::invalid_argument("negative sphere radius");
    if (f.kind() == VertexFunction::Kind::kTable) {
        StepFunction acc(ctx.rank, n + g.depth());
        QuadExt norm = QuadExt(Rational(sphere_count(ctx.rank, n))) * harish_chandra_closed(ctx, n);
        QuadExt inv_norm = norm.inverse();
        for (const auto& [gamma, val] : f.entries()) {
            if (static_cast<long>(gamma.size()) != n || val == 0) continue;
            StepFunction term = apply_pi(ctx, gamma, g);
            for (std::size_t i = 0; i < acc.size(); ++i)
                acc.value_at_index(i) += inv_norm * QuadExt(val) * term.value_at_index(i);
        }
        return acc;
    }
    if (mode == MnMode::kEnumerated) return m_n_apply_literal(ctx, f, n, g);
    MnEngine engine(ctx, f, n, g);
    return engine.run(width > 0 ? width : default_parallel_width());
}

namespace {

Word class_representative(int r, const Word& head, const Word& tail, long mid_len) {
    std::vector<Letter> w(head.letters());
    Letter prev = head.empty() ? 0 : head[head.size() - 1];
    Letter last_block = tail.empty() ? 0 : inv(tail[0]);
    for (long i = 0; i < mid_len; ++i) {
        for (int v = -r; v <= r; ++v) {
            Letter x = static_cast<Letter>(v);
            if (v == 0) continue;
            if (prev != 0 && x == inv(prev)) continue;
            if (i == 0 && !head.empty() && x == inv(head[head.size() - 1])) continue;
            if (i == mid_len - 1 && last_block != 0 && x == last_block) continue;
            w.push_back(x);
            prev = x;
            break;
        }
    }
    for (std::size_t i = 0; i < tail.size(); ++i) w.push_back(tail[i]);
    Word out(std::move(w));
    return out;
}

BigInt head_tail_count(int r, long n, const Word& head, const Word& tail) {
    long H = static_cast<long>(head.size()), T = static_cast<long>(tail.size());
    if (H == 0 && T == 0) return sphere_count(r, n);
    if (H == 0) return count_avoiding(r, n - T, 0, inv(tail[0]));
    if (T == 0) return count_avoiding(r, n - H, inv(head[head.size() - 1]), 0);
    return count_avoiding(r, n - H - T, inv(head[head.size() - 1]), inv(tail[0]));
}

QuadExt m_n_coeff_grouped(const BoundaryContext& ctx, const VertexFunction& f, long n,
                          const StepFunction& g, const StepFunction& h, long H, long T) {
    QuadExt total;
    const int r = ctx.rank;
    bool chi = f.kind() == VertexFunction::Kind::kChi;
    for_each_sphere_word(r, H, [&](const Letter* hw, long hl) {
        Word head(std::vector<Letter>(hw, hw + hl));
        Rational fv = chi ? Rational(head.starts_with(f.chi_word()) ? 1 : 0) : f.constant_value();
        if (fv == 0) return;
        for_each_sphere_word(r, T, [&](const Letter* tw, long tl) {
            Word tail(std::vector<Letter>(tw, tw + tl));
            BigInt cnt = head_tail_count(r, n, head, tail);
            Word rep = class_representative(r, head, tail, n - H - T);
            total += QuadExt(Rational(cnt) * fv) * pi_coeff(ctx, rep, g, h);
        });
    });
    QuadExt norm = QuadExt(Rational(sphere_count(r, n))) * harish_chandra_closed(ctx, n);
    return total / norm;
}

QuadExt m_n_coeff_enumerated(const BoundaryContext& ctx, const VertexFunction& f, long n,
                             const StepFunction& g, const StepFunction& h) {
    if (n > 14) throw resource_cap_error("enumerated M_n coefficient limited to n <= 14");
    QuadExt total;
    for_each_sphere_word(ctx.rank, n, [&](const Letter* w, long len) {
        Word gamma(std::vector<Letter>(w, w + len));
        Rational fv = f.eval(gamma);
        if (fv == 0) return;
        total += QuadExt(fv) * pi_coeff(ctx, gamma, g, h);
    });
    QuadExt norm = QuadExt(Rational(sphere_count(ctx.rank, n))) * harish_chandra_closed(ctx, n);
    return total / norm;
}

}  // namespace

QuadExt m_n_coeff(const BoundaryContext& ctx, const VertexFunction& f, long n,
                  const StepFunction& g, const StepFunction& h, MnMode mode) {
    if (g.rank() != ctx.rank || h.rank() != ctx.rank) throw std::invalid_argument("rank mismatch");
    if (n < 0) throw std::invalid_argument("negative sphere radius");
    if (f.kind() == VertexFunction::Kind::kTable) {
        QuadExt total;
        for (const auto& [gamma, val] : f.entries()) {
            if (static_cast<long>(gamma.size()) != n || val == 0) continue;
            total += QuadExt(val) * pi_coeff(ctx, gamma, g, h);
        }
        QuadExt norm = QuadExt(Rational(sphere_count(ctx.rank, n))) * harish_chandra_closed(ctx, n);
        return total / norm;
    }
    long chi_len = f.kind() == VertexFunction::Kind::kChi
                       ? static_cast<long>(f.chi_word().size())
                       : 0;
    if (chi_len > n) return QuadExt();
    long H = std::max(h.depth(), chi_len);
    long T = g.depth();
    bool can_group = n >= H + T + 1;
    switch (mode) {
        case MnMode::kFast:
            if (!can_group)
                throw std::invalid_argument("grouped path needs n >= head + tail + 1");
            return m_n_coeff_grouped(ctx, f, n, g, h, H, T);
        case MnMode::kEnumerated:
            return m_n_coeff_enumerated(ctx, f, n, g, h);
        case MnMode::kAuto:
            return can_group ? m_n_coeff_grouped(ctx, f, n, g, h, H, T)
                             : m_n_coeff_enumerated(ctx, f, n, g, h);
    }
    throw std::logic_error("unreachable");
}

QuadExt limit_coeff(const BoundaryContext& ctx, const VertexFunction& f, const StepFunction& g,
                    const StepFunction& h) {
    return integrate(ctx, g) * integrate(ctx, pointwise_product(boundary_part(ctx, f), h));
}

std::vector<std::vector<QuadExt>> compression_matrix(const BoundaryContext& ctx, long n, long d,
                                                     std::size_t dim_cap) {
    std::uint64_t dim = sphere_count_u64(ctx.rank, d, dim_cap);
    std::vector<std::vector<QuadExt>> A(dim, std::vector<QuadExt>(dim));
    VertexFunction one = VertexFunction::constant(1);
    Rational mu_d = d == 0 ? Rational(1)
                           : 1 / (Rational(ctx.degree()) * pow_rational(Rational(ctx.q()), d - 1));
    long D = n + d;
    Rational mu_D = D == 0 ? Rational(1)
                           : 1 / (Rational(ctx.degree()) * pow_rational(Rational(ctx.q()), D - 1));
    for (std::uint64_t v = 0; v < dim; ++v) {
        StepFunction col = m_n_apply(ctx, one, n, StepFunction::indicator(ctx, sphere_word(ctx.rank, d, v)));
        std::size_t block = col.size() / dim;
        for (std::uint64_t u = 0; u < dim; ++u) {
            QuadExt s;
            for (std::size_t i = u * block; i < (u + 1) * block; ++i) s += col.value_at_index(i);
            // <col, e_u> / mu_d in the orthonormalized basis
            A[u][v] = QuadExt(mu_D / mu_d) * s;
        }
    }
    for (std::uint64_t u = 0; u < dim; ++u)
        for (std::uint64_t v = u + 1; v < dim; ++v)
            if (!(A[u][v] == A[v][u]))
                throw std::logic_error("compression matrix lost self-adjointness");
    return A;
}

double compression_norm(const BoundaryContext& ctx, long n, long d, std::size_t dim_cap) {
    auto A = compression_matrix(ctx, n, d, dim_cap);
    const std::size_t dim = A.size();
    Eigen::MatrixXd M(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) M(i, j) = A[i][j].to_double();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(M, Eigen::EigenvaluesOnly);
    double norm = 0;
    for (long i = 0; i < solver.eigenvalues().size(); ++i)
        norm = std::max(norm, std::abs(solver.eigenvalues()[i]));
    return norm;
}

long cyclicity_rank(const BoundaryContext& ctx, long n_max, long d, std::size_t dim_cap) {
    std::uint64_t dim = sphere_count_u64(ctx.rank, d, dim_cap);
    std::vector<Word> ball;
    for (long k = 0; k <= n_max; ++k)
        for_each_sphere_word(ctx.rank, k, [&](const Letter* w, long len) {
            ball.emplace_back(std::vector<Letter>(w, w + len));
        });
    const std::size_t N = ball.size();
    Rational mu_d = d == 0 ? Rational(1)
                           : 1 / (Rational(ctx.degree()) * pow_rational(Rational(ctx.q()), d - 1));
    // components of P_d pi(gamma) 1_B in the indicator basis (up to the
    // common positive factor 1/mu_d, irrelevant for the rank)
    std::vector<std::vector<QuadExt>> comp(N, std::vector<QuadExt>(dim));
    for (std::size_t i = 0; i < N; ++i)
        for (std::uint64_t u = 0; u < dim; ++u)
            comp[i][u] = coeff_cylinder(ctx, ball[i], sphere_word(ctx.rank, d, u));
    std::vector<std::vector<QuadExt>> G(N, std::vector<QuadExt>(N));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i; j < N; ++j) {
            QuadExt s;
            for (std::uint64_t u = 0; u < dim; ++u) s += comp[i][u] * comp[j][u];
            G[i][j] = QuadExt(mu_d) * s;
            G[j][i] = G[i][j];
        }
    // exact Gaussian elimination
    long rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < N && row < N; ++col) {
        std::size_t piv = row;
        while (piv < N && G[piv][col].is_zero()) ++piv;
        if (piv == N) continue;
        std::swap(G[piv], G[row]);
        for (std::size_t i = row + 1; i < N; ++i) {
            if (G[i][col].is_zero()) continue;
            QuadExt factor = G[i][col] / G[row][col];
            for (std::size_t j = col; j < N; ++j) G[i][j] -= factor * G[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

ConvergenceTable convergence_table(const BoundaryContext& ctx, const VertexFunction& f,
                                   const StepFunction& g, const StepFunction& h, long n_lo,
                                   long n_hi) {
    if (n_lo < 0 || n_hi < n_lo) throw std::invalid_argument("bad n range");
    ConvergenceTable out;
    out.limit = limit_coeff(ctx, f, g, h);
    out.limit_value = out.limit.to_double();
    for (long n = n_lo; n <= n_hi; ++n) {
        QuadExt exact = m_n_coeff(ctx, f, n, g, h);
        QuadExt diff = exact - out.limit;
        double dev = std::abs(diff.to_double());
        out.rows.push_back({n, exact, exact.to_double(), dev});
    }
    // least-squares slope of log(dev) against log(n) on the last half
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = out.rows.size() / 2; i < out.rows.size(); ++i)
        if (out.rows[i].deviation > 0 && out.rows[i].n > 0)
            pts.emplace_back(std::log(static_cast<double>(out.rows[i].n)),
                             std::log(out.rows[i].deviation));
    if (pts.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (auto [x, y] : pts) sx += x, sy += y, sxx += x * x, sxy += x * y;
        double k = static_cast<double>(pts.size());
        out.fitted_rate = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    } else {
        out.fitted_rate = 0;
    }
    return out;
}

TailSplit matrix_tail_split(const BoundaryContext& ctx, const Word& u, const Word& v, long n) {
    validate_rank(u, ctx.rank);
    validate_rank(v, ctx.rank);
    if (u.empty() || v.empty()) throw std::invalid_argument("u, v must be nonempty");
    StepFunction one = StepFunction::constant(ctx, QuadExt(1));
    StepFunction gv = StepFunction::indicator(ctx, v);
    TailSplit out;
    out.value = m_n_coeff(ctx, VertexFunction::chi(u), n, gv, one);
    Rational sphere = Rational(sphere_count(ctx.rank, n));
    out.head = Rational(count_prefix_suffix(ctx.rank, n, v, u)) / sphere;
    long H = static_cast<long>(v.size()), T = static_cast<long>(u.size());
    QuadExt norm = QuadExt(sphere) * harish_chandra_closed(ctx, n);
    QuadExt tail_sum;
    Word y = u.inverse();
    if (n >= H + T + 1) {
        for_each_sphere_word(ctx.rank, H, [&](const Letter* hw, long hl) {
            Word head(std::vector<Letter>(hw, hw + hl));
            if (head == v) return;
            BigInt cnt = head_tail_count(ctx.rank, n, head, y);
            Word rep = class_representative(ctx.rank, head, y, n - H - T);
            tail_sum += QuadExt(Rational(cnt)) * coeff_cylinder(ctx, rep, v);
        });
    } else {
        for_each_sphere_word(ctx.rank, n, [&](const Letter* w, long len) {
            Word gamma(std::vector<Letter>(w, w + len));
            if (gamma.starts_with(v) || !gamma.ends_with(y)) return;
            tail_sum += coeff_cylinder(ctx, gamma, v);
        });
    }
    out.tail = tail_sum / norm;
    QuadExt limit = QuadExt(cylinder_measure(ctx, u) * cylinder_measure(ctx, v));
    out.correction = QuadExt(out.head) + out.tail - limit;
    return out;
}

}  // namespace frb
