#pragma once

#include "fdfa/fdfa.hpp"

namespace fdfa {

// Two-state family over {a, b} that splits two spellings of one infinite
// word: it accepts (b, aa) but rejects (ba, aa), though both denote b a a a...
// The stock specimen for exercising the saturation checks.
Fdfa unsaturated_example();

// Family over {a, b} for the words that eventually repeat a single letter
// forever. Saturated.
Fdfa eventually_constant_family();

// Generated family for the words over {1..n} where every letter is followed
// by one of value at most one higher, and the set of letters occurring
// infinitely often has odd size. Deterministic acceptors for this language
// blow up exponentially in n; the family stays at (n+1, n^2).
struct LnInstance {
    std::size_t n;
    Fdfa family;
};
LnInstance gen_ln(std::size_t n);

// Direct oracle for the same language, evaluated on the representation
// (u, v): the follower rule is checked over u v v, which also covers the
// wrap-around from the end of the period to its start, and the period must
// use an odd number of distinct letters. Symbols are indices, so the letter
// value of symbol s is s + 1.
bool ln_semantic_member(std::size_t n, const Word& u, const Word& v);

}  // namespace fdfa
