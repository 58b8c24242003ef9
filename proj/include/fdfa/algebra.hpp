#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "fdfa/fdfa.hpp"

namespace fdfa {

// Complement flips every progress accepting set. Size is unchanged, and a
// family that treats equal infinite words consistently keeps that property.
Fdfa complement(const Fdfa& f);

// Product families: the leading automata are paired, and the progress
// automaton of a paired state is the product of the two component progress
// automata with conjunctive (intersect) or disjunctive (unite) acceptance.
// The results match the intersection/union of the pair languages only when
// both inputs treat equal infinite words consistently; callers feeding
// arbitrary families get the pair-level product regardless. `full`
// materializes all state pairs instead of the reachable part.
Fdfa intersect(const Fdfa& f1, const Fdfa& f2, bool full = false);
Fdfa unite(const Fdfa& f1, const Fdfa& f2, bool full = false);

// Witness for nonemptiness: a pair (x, y) the family accepts, with the
// leading automaton sending x and x y to the same state.
struct EmptinessWitness {
    Word x;
    Word y;
};

struct EmptinessResult {
    bool empty;
    std::optional<EmptinessWitness> witness;  // present iff nonempty
};

// A family is nonempty iff some reachable leading state q admits a nonempty
// word y looping q to q whose run through the progress automaton of q ends
// accepting. Words are chosen shortest-first with ties broken by symbol
// order, so reports are reproducible.
EmptinessResult is_empty(const Fdfa& f);

struct UniversalityResult {
    bool universal;
    std::optional<UpWord> counterexample;  // a rejected pair, if any
};

UniversalityResult is_universal(const Fdfa& f);

struct ContainmentResult {
    bool contained;
    std::optional<UpWord> witness;  // accepted by lhs, rejected by rhs
};

// Containment and equality via emptiness of lhs intersected with the
// complement of rhs; meaningful under the same consistency assumption as
// intersect/unite.
ContainmentResult is_contained(const Fdfa& f1, const Fdfa& f2);
bool is_equal(const Fdfa& f1, const Fdfa& f2);

enum class SaturationVerdict {
    saturated_up_to_bound,  // no violation among the enumerated pairs
    unsaturated,            // two equal-word pairs with different verdicts
    saturated_exact,        // exhaustive search found no violation
};

struct SaturationReport {
    SaturationVerdict verdict;
    // Two decompositions of the same infinite word, the first accepted and
    // the second rejected. Present iff unsaturated.
    std::optional<std::pair<UpWord, UpWord>> counterexample;
    std::string bound_used;
};

// Enumerates every pair with |u| <= max_u and 1 <= |v| <= max_v, groups
// pairs denoting the same infinite word, and reports the first group with
// mixed verdicts.
SaturationReport check_saturation_bounded(const Fdfa& f, std::size_t max_u, std::size_t max_v);

class BudgetExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ExactBudget {
    // Cap on |X| * |X| where X is the set of transform classes explored for
    // one ordered pair of leading states.
    std::size_t max_transform_pairs = 4'000'000;
};

// Decides saturation outright. Words are folded into joint transform classes
// (their effect on the leading automaton and on two progress automata at
// once); a violation, if any exists, is witnessed by two loop words picked
// from those classes together with repetition counts bounded by the progress
// sizes. Throws BudgetExceededError instead of answering when the class
// space outgrows the budget.
SaturationReport check_saturation_exact(const Fdfa& f, ExactBudget budget = {});

}  // namespace fdfa
