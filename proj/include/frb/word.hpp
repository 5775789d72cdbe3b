#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace frb {

// Generator index with sign: +k is the k-th generator, -k its inverse, 1-based.
using Letter = std::int8_t;

inline Letter inv(Letter x) { return static_cast<Letter>(-x); }

// Freely reduced word over r generators. Construction enforces reducedness;
// the empty word is the identity.
class Word {
  public:
    Word() = default;
    explicit Word(std::vector<Letter> letters);

    // Accepts "1,-2,1" (comma-separated signed indices) or compact "aBa"
    // (lowercase = generator, uppercase = inverse). "e" and "" are identity.
    static Word parse(const std::string& text, int rank);

    std::string str() const;

    std::size_t size() const { return ls_.size(); }
    bool empty() const { return ls_.empty(); }
    Letter operator[](std::size_t i) const { return ls_[i]; }
    const std::vector<Letter>& letters() const { return ls_; }

    Word inverse() const;
    Word prefix(std::size_t k) const;
    Word suffix(std::size_t k) const;
    bool starts_with(const Word& u) const;
    bool ends_with(const Word& u) const;

    int max_index() const;  // largest |letter|, 0 for the identity

    friend bool operator==(const Word& x, const Word& y) { return x.ls_ == y.ls_; }
    friend bool operator!=(const Word& x, const Word& y) { return !(x == y); }
    // length-first, then letter values; gives the canonical enumeration order
    friend bool operator<(const Word& x, const Word& y) {
        if (x.ls_.size() != y.ls_.size()) return x.ls_.size() < y.ls_.size();
        return x.ls_ < y.ls_;
    }

  private:
    std::vector<Letter> ls_;
};

// Free product with full cancellation.
Word multiply(const Word& u, const Word& v);

// Length of the longest common prefix.
std::size_t common_prefix_len(const Word& u, const Word& v);

bool is_reduced(const std::vector<Letter>& letters);

// Throws if any letter index exceeds the rank.
void validate_rank(const Word& w, int rank);

std::string letter_str(Letter x);

}  // namespace frb
