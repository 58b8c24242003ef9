#include "fdfa/up_word.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fdfa {

namespace {

void require_period(const UpWord& w) {
    if (w.period.empty())
        throw std::invalid_argument("period must be nonempty");
}

Symbol letter_at(const UpWord& w, std::size_t pos) {
    if (pos < w.prefix.size()) return w.prefix[pos];
    return w.period[(pos - w.prefix.size()) % w.period.size()];
}

}  // namespace

Word primitive_root(const Word& v) {
    if (v.empty())
        throw std::invalid_argument("period must be nonempty");
    for (std::size_t len = 1; len <= v.size(); ++len) {
        if (v.size() % len != 0) continue;
        bool repeats = true;
        for (std::size_t i = len; i < v.size() && repeats; ++i)
            repeats = v[i] == v[i % len];
        if (repeats) return Word(v.begin(), v.begin() + len);
    }
    return v;  // unreachable: len == v.size() always repeats
}

bool up_equal(const UpWord& a, const UpWord& b) {
    require_period(a);
    require_period(b);
    const std::size_t bound = std::max(a.prefix.size(), b.prefix.size()) +
                              2 * std::lcm(a.period.size(), b.period.size());
    for (std::size_t pos = 0; pos < bound; ++pos)
        if (letter_at(a, pos) != letter_at(b, pos)) return false;
    return true;
}

UpWord canonicalize(const UpWord& w) {
    require_period(w);
    UpWord out{w.prefix, primitive_root(w.period)};
    while (!out.prefix.empty() && out.prefix.back() == out.period.back()) {
        out.prefix.pop_back();
        std::rotate(out.period.begin(), out.period.end() - 1, out.period.end());
    }
    return out;
}

Word up_prefix(const UpWord& w, std::size_t len) {
    require_period(w);
    Word out;
    out.reserve(len);
    for (std::size_t pos = 0; pos < len; ++pos) out.push_back(letter_at(w, pos));
    return out;
}

}  // namespace fdfa
