#pragma once

#include <cstddef>

#include "fdfa/alphabet.hpp"

namespace fdfa {

// Ultimately periodic word prefix . period^w, and equally the decomposition
// pair (u, v) an acceptor is asked about. The period must be nonempty.
struct UpWord {
    Word prefix;
    Word period;

    bool operator==(const UpWord&) const = default;
};

// Shortest word p such that v is a whole number of copies of p.
Word primitive_root(const Word& v);

// Do the two decompositions denote the same infinite word? Compared letter by
// letter up to max(|u1|, |u2|) + 2 * lcm(|v1|, |v2|); past the longer prefix
// both streams are periodic with period dividing the lcm, so agreement on
// that window settles full equality.
bool up_equal(const UpWord& a, const UpWord& b);

// Unique representative of the up_equal class: the period is reduced to its
// primitive root, then letters shared between the prefix tail and the period
// tail migrate into the period by rotating it right. Two words are up_equal
// exactly when their canonical forms are identical.
UpWord canonicalize(const UpWord& w);

// First `len` letters of prefix . period^w.
Word up_prefix(const UpWord& w, std::size_t len);

}  // namespace fdfa
