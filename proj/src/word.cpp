#include "frb/word.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace frb {

bool is_reduced(const std::vector<Letter>& letters) {
    for (std::size_t i = 0; i + 1 < letters.size(); ++i)
        if (letters[i] == -letters[i + 1]) return false;
    return std::all_of(letters.begin(), letters.end(), [](Letter x) { return x != 0; });
}

Word::Word(std::vector<Letter> letters) : ls_(std::move(letters)) {
    if (!is_reduced(ls_)) throw std::invalid_argument("word is not freely reduced");
}

std::string letter_str(Letter x) {
    int k = std::abs(static_cast<int>(x));
    if (k >= 1 && k <= 26) return std::string(1, static_cast<char>((x > 0 ? 'a' : 'A') + k - 1));
    return std::to_string(static_cast<int>(x));
}

std::string Word::str() const {
    if (ls_.empty()) return "e";
    std::string out;
    for (Letter x : ls_) out += letter_str(x);
    return out;
}

Word Word::parse(const std::string& text, int rank) {
    std::vector<Letter> ls;
    if (text.empty() || text == "e") return Word{};
    auto push = [&](int v) {
        if (v == 0 || std::abs(v) > rank)
            throw std::invalid_argument("letter out of range for rank " + std::to_string(rank) +
                                        ": " + std::to_string(v));
        ls.push_back(static_cast<Letter>(v));
    };
    if (text.find(',') != std::string::npos || text.find_first_of("0123456789") == 0 ||
        text[0] == '-') {
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t next = text.find(',', pos);
            if (next == std::string::npos) next = text.size();
            push(std::stoi(text.substr(pos, next - pos)));
            pos = next + 1;
        }
    } else {
        for (char c : text) {
            if (c >= 'a' && c <= 'z') push(c - 'a' + 1);
            else if (c >= 'A' && c <= 'Z') push(-(c - 'A' + 1));
            else throw std::invalid_argument(std::string("bad letter character: ") + c);
        }
    }
    if (!is_reduced(ls)) throw std::invalid_argument("word is not freely reduced: " + text);
    return Word(std::move(ls));
}

Word Word::inverse() const {
    std::vector<Letter> out(ls_.rbegin(), ls_.rend());
    for (Letter& x : out) x = static_cast<Letter>(-x);
    Word w;
    w.ls_ = std::move(out);  // reversal of a reduced word stays reduced
    return w;
}

Word Word::prefix(std::size_t k) const {
    Word w;
    w.ls_.assign(ls_.begin(), ls_.begin() + std::min(k, ls_.size()));
    return w;
}

Word Word::suffix(std::size_t k) const {
    k = std::min(k, ls_.size());
    Word w;
    w.ls_.assign(ls_.end() - k, ls_.end());
    return w;
}

bool Word::starts_with(const Word& u) const {
    return u.size() <= size() && std::equal(u.ls_.begin(), u.ls_.end(), ls_.begin());
}

bool Word::ends_with(const Word& u) const {
    return u.size() <= size() && std::equal(u.ls_.rbegin(), u.ls_.rend(), ls_.rbegin());
}

int Word::max_index() const {
    int m = 0;
    for (Letter x : ls_) m = std::max(m, std::abs(static_cast<int>(x)));
    return m;
}

Word multiply(const Word& u, const Word& v) {
    std::vector<Letter> out(u.letters());
    for (Letter x : v.letters()) {
        if (!out.empty() && out.back() == -x) out.pop_back();
        else out.push_back(x);
    }
    return Word(std::move(out));
}

std::size_t common_prefix_len(const Word& u, const Word& v) {
    std::size_t n = std::min(u.size(), v.size());
    std::size_t p = 0;
    while (p < n && u[p] == v[p]) ++p;
    return p;
}

void validate_rank(const Word& w, int rank) {
    if (w.max_index() > rank)
        throw std::invalid_argument("word uses generator index above rank " + std::to_string(rank));
}

}  // namespace frb
