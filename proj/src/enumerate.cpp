#include "frb/enumerate.hpp"

#include <algorithm>

namespace frb {

BigInt sphere_count(int rank, long n) {
    check_rank(rank);
    if (n < 0) throw std::invalid_argument("negative sphere radius");
    if (n == 0) return 1;
    return BigInt(2 * rank) * pow_bigint(2 * rank - 1, n - 1);
}

std::uint64_t sphere_count_u64(int rank, long n, std::uint64_t cap) {
    BigInt c = sphere_count(rank, n);
    if (!c.fits_ulong_p() || c.get_ui() > cap)
        throw resource_cap_error("sphere of radius " + std::to_string(n) + " at rank " +
                                 std::to_string(rank) + " exceeds the materialization cap");
    return c.get_ui();
}

std::vector<Letter> ordered_letters(int rank) {
    check_rank(rank);
    std::vector<Letter> out;
    for (int v = -rank; v <= rank; ++v)
        if (v != 0) out.push_back(static_cast<Letter>(v));
    return out;
}

namespace {

// rank of letter x in value order among all 2r letters
inline int letter_rank(int r, Letter x) { return x < 0 ? x + r : x + r - 1; }

inline Letter letter_at(int r, int k) { return static_cast<Letter>(k < r ? k - r : k - r + 1); }

// rank of x among the 2r-1 letters != -prev, in value order
inline int next_rank(int r, Letter prev, Letter x) {
    int k = letter_rank(r, x);
    return k - (letter_rank(r, static_cast<Letter>(-prev)) < k ? 1 : 0);
}

inline Letter next_at(int r, Letter prev, int k) {
    int skip = letter_rank(r, static_cast<Letter>(-prev));
    return letter_at(r, k < skip ? k : k + 1);
}

void dfs(int r, Letter* buf, long depth, long n,
         const std::function<void(const Letter*, long)>& visit) {
    if (depth == n) {
        visit(buf, n);
        return;
    }
    if (depth == 0) {
        for (int k = 0; k < 2 * r; ++k) {
            buf[0] = letter_at(r, k);
            dfs(r, buf, 1, n, visit);
        }
        return;
    }
    Letter prev = buf[depth - 1];
    for (int k = 0; k < 2 * r - 1; ++k) {
        buf[depth] = next_at(r, prev, k);
        dfs(r, buf, depth + 1, n, visit);
    }
}

}  // namespace

std::uint64_t sphere_index(int rank, const Word& w) {
    check_rank(rank);
    validate_rank(w, rank);
    if (w.empty()) return 0;
    std::uint64_t idx = letter_rank(rank, w[0]);
    for (std::size_t i = 1; i < w.size(); ++i)
        idx = idx * (2 * rank - 1) + next_rank(rank, w[i - 1], w[i]);
    return idx;
}

Word sphere_word(int rank, long n, std::uint64_t index) {
    check_rank(rank);
    if (index >= sphere_count_u64(rank, n)) throw std::invalid_argument("sphere index out of range");
    if (n == 0) return Word{};
    std::uint64_t tail = 1;
    for (long i = 1; i < n; ++i) tail *= 2 * rank - 1;
    std::vector<Letter> ls(n);
    ls[0] = letter_at(rank, static_cast<int>(index / tail));
    index %= tail;
    for (long i = 1; i < n; ++i) {
        tail /= 2 * rank - 1;
        ls[i] = next_at(rank, ls[i - 1], static_cast<int>(index / tail));
        index %= tail;
    }
    return Word(std::move(ls));
}

void for_each_sphere_word(int rank, long n,
                          const std::function<void(const Letter*, long)>& visit) {
    check_rank(rank);
    if (n < 0) throw std::invalid_argument("negative sphere radius");
    std::vector<Letter> buf(std::max<long>(n, 1));
    dfs(rank, buf.data(), 0, n, visit);
}

void for_each_prefixed_word(int rank, const Word& u, long n,
                            const std::function<void(const Letter*, long)>& visit) {
    check_rank(rank);
    validate_rank(u, rank);
    if (n < static_cast<long>(u.size()))
        throw std::invalid_argument("prefix longer than requested length");
    std::vector<Letter> buf(std::max<long>(n, 1));
    std::copy(u.letters().begin(), u.letters().end(), buf.begin());
    dfs(rank, buf.data(), static_cast<long>(u.size()), n, visit);
}

namespace {

}  // namespace

BigInt count_avoiding(int rank, long m, Letter s, Letter t) {
    check_rank(rank);
    if (m < 0) throw std::invalid_argument("negative word length");
    if (std::abs(static_cast<int>(s)) > rank || std::abs(static_cast<int>(t)) > rank)
        throw std::invalid_argument("constraint letter above rank");
    if (m == 0) return 1;
    long deg = 2 * rank, q = deg - 1;
    if (s == 0 && t == 0) return sphere_count(rank, m);
    if (s == 0 || t == 0) return pow_bigint(q, m);
    // The letter-to-letter transfer matrix J - P (J all ones, P the inversion
    // permutation) has eigenvalue q on constants and acts as -P on zero-sum
    // vectors, where P splits into +1/-1 eigenspaces. Summing the resulting
    // rank-one + involution form of (J - P)^{m-1} over first letter != s and
    // last letter != t gives
    //     (q^{m+1} + (-1)^m q^2) / (2r) - (-1)^m c
    // with c = q when the involution carries the t-exclusion onto the
    // s-exclusion (t == s for odd m, t == s^{-1} for even m), else c = q - 1.
    bool even_m = m % 2 == 0;
    long c = (even_m ? t == inv(s) : t == s) ? q : q - 1;
    BigInt num = pow_bigint(q, m + 1);
    if (even_m) num += q * q; else num -= q * q;
    BigInt out = num / deg;
    if (even_m) out -= c; else out += c;
    return out;
}

BigInt count_prefix_suffix(int rank, long n, const Word& u, const Word& v) {
    check_rank(rank);
    validate_rank(u, rank);
    validate_rank(v, rank);
    if (u.empty() || v.empty()) throw std::invalid_argument("prefix/suffix words must be nonempty");
    if (n < 0) throw std::invalid_argument("negative word length");
    long lu = static_cast<long>(u.size()), lv = static_cast<long>(v.size());
    if (n <= lu + lv) return count_prefix_suffix_enumerated(rank, n, u, v);
    // words u . z . v^{-1} with z of length n-|u|-|v| not starting with the
    // inverse of u's last letter and not ending with v's last letter
    Letter s = inv(u[u.size() - 1]);
    Letter t = v[v.size() - 1];
    return count_avoiding(rank, n - lu - lv, s, t);
}

BigInt count_prefix_suffix_enumerated(int rank, long n, const Word& u, const Word& v) {
    check_rank(rank);
    if (u.empty() || v.empty()) throw std::invalid_argument("prefix/suffix words must be nonempty");
    long lu = static_cast<long>(u.size()), lv = static_cast<long>(v.size());
    if (n < std::max(lu, lv)) return 0;
    Word vinv = v.inverse();
    const auto& tail = vinv.letters();
    std::uint64_t hits = 0;
    auto check = [&](const Letter* w, long len) {
        for (long i = 0; i < lv; ++i)
            if (w[len - lv + i] != tail[i]) return;
        ++hits;
    };
    for_each_prefixed_word(rank, u, n, check);
    return BigInt(static_cast<unsigned long>(hits));
}

}  // namespace frb
