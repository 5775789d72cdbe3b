#pragma once

#include <functional>
#include <vector>

#include "frb/enumerate.hpp"

namespace frb::testing {

inline void each_sphere(int rank, long n, const std::function<void(const Word&)>& fn) {
    for_each_sphere_word(rank, n, [&](const Letter* w, long len) {
        fn(Word(std::vector<Letter>(w, w + len)));
    });
}

inline std::vector<Word> ball(int rank, long n) {
    std::vector<Word> out{Word()};
    for (long d = 1; d <= n; ++d) each_sphere(rank, d, [&](const Word& w) { out.push_back(w); });
    return out;
}

}  // namespace frb::testing
