#pragma once

#include <cstdint>
#include <functional>

#include "frb/base.hpp"
#include "frb/word.hpp"

namespace frb {

inline void check_rank(int rank) {
    if (rank < 2 || rank > 26) throw std::invalid_argument("rank must be in [2, 26]");
}

// |S_n| = 2r(2r-1)^(n-1), |S_0| = 1.
BigInt sphere_count(int rank, long n);

// sphere_count as uint64_t, throwing resource_cap_error above the cap.
std::uint64_t sphere_count_u64(int rank, long n, std::uint64_t cap = UINT64_C(1) << 40);

// Letters sorted by signed value: -r, ..., -1, 1, ..., r.
std::vector<Letter> ordered_letters(int rank);

// Canonical enumeration order of S_n: word index is built from the rank of
// the first letter among all 2r letters, then the rank of each next letter
// among the 2r-1 letters that keep the word reduced, all in value order.
std::uint64_t sphere_index(int rank, const Word& w);
Word sphere_word(int rank, long n, std::uint64_t index);

// Visit S_n in canonical order. The callback sees a borrowed letter buffer.
void for_each_sphere_word(int rank, long n,
                          const std::function<void(const Letter*, long)>& visit);

// Same, restricted to words with the given prefix (Pr_u(n), n >= |u|).
void for_each_prefixed_word(int rank, const Word& u, long n,
                            const std::function<void(const Letter*, long)>& visit);

// |S_m(s, t)|: reduced words of length m that do not start with s and do not
// end with t. Letter 0 means "no constraint". Closed form above the base
// lengths; base lengths from a pattern-class table.
BigInt count_avoiding(int rank, long m, Letter s, Letter t);

// Reduced words of length n with u as a prefix and v^{-1} as a suffix.
// Bijective reduction to count_avoiding when n >= |u| + |v| + 1, direct
// enumeration in the overlap regime n <= |u| + |v|.
BigInt count_prefix_suffix(int rank, long n, const Word& u, const Word& v);

// Enumeration oracle for the same quantity (used by tests and verify runs).
BigInt count_prefix_suffix_enumerated(int rank, long n, const Word& u, const Word& v);

}  // namespace frb
