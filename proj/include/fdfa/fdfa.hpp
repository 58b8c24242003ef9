#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fdfa/automaton.hpp"
#include "fdfa/up_word.hpp"

namespace fdfa {

// Family of DFAs: a leading automaton without acceptance plus one progress
// DFA per leading state, all over the same alphabet. A pair (u, v) is
// accepted when, after normalization, the progress DFA of the leading state
// reached by the normalized prefix accepts the normalized period.
struct Fdfa {
    Automaton leading;          // deterministic and complete, no acceptance
    std::vector<Dfa> progress;  // progress[q] belongs to leading state q
};

// Normalization of (u, v): x = u v^i and y = v^j for the least i >= 0,
// j >= 1 with the leading automaton sending x and x y to the same state.
struct NormalizedPair {
    Word x;
    Word y;
    std::size_t prefix_power;  // i: copies of v absorbed into x
    std::size_t period_power;  // j: copies of v forming y
};

struct FdfaSize {
    std::size_t leading_states;
    std::size_t max_progress_states;

    bool operator==(const FdfaSize&) const = default;
};

namespace detail {

// Normalization without materializing x and y.
struct NormalizationCore {
    std::size_t prefix_power;
    std::size_t period_power;
    State state_at_x;  // leading state reached by x (and by x y)
};
NormalizationCore normalize_core(const Automaton& leading, const Word& u, const Word& v);

}  // namespace detail

NormalizedPair normalize(const Automaton& leading, const Word& u, const Word& v);

bool accepts(const Fdfa& f, const Word& u, const Word& v);
bool accepts(const Fdfa& f, const UpWord& pair);

FdfaSize size(const Fdfa& f);

// Structural diagnostics: mismatched alphabets, wrong progress count,
// nondeterministic or partial components, out-of-range accepting states.
// Empty result means the family is well formed.
std::vector<std::string> validate(const Fdfa& f);

}  // namespace fdfa
