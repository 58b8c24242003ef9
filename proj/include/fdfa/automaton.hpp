#pragma once

#include <cstddef>
#include <set>
#include <utility>
#include <variant>
#include <vector>

#include "fdfa/alphabet.hpp"

namespace fdfa {

// Transition structure over a dense state space [0, state_count). Carries no
// acceptance condition; acceptors pair it with one of the condition types
// below. May be nondeterministic and/or partial.
class Automaton {
public:
    Automaton(Alphabet alphabet, std::size_t state_count, State initial);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t state_count() const noexcept { return state_count_; }
    State initial() const noexcept { return initial_; }

    void add_edge(State from, Symbol symbol, State to);

    // Sorted, duplicate-free successor list for (from, symbol).
    const std::vector<State>& successors(State from, Symbol symbol) const;

    // Unique successor; throws unless exactly one edge leaves (from, symbol).
    State step(State from, Symbol symbol) const;

    bool is_deterministic() const;  // at most one successor everywhere
    bool is_complete() const;       // at least one successor everywhere
    bool is_partial() const { return !is_complete(); }

    bool operator==(const Automaton&) const = default;

private:
    Alphabet alphabet_;
    std::size_t state_count_;
    State initial_;
    std::vector<std::vector<State>> edges_;  // [from * |alphabet| + symbol]
};

// Acceptance conditions. FinalStates is the finite-word condition; the other
// three classify runs on infinite words.
struct FinalStates { std::set<State> states; };
struct BuchiStates { std::set<State> states; };    // visited infinitely often
struct CoBuchiStates { std::set<State> states; };  // visited finitely often
struct ParityColors {
    std::vector<int> colors;  // per state, values in [1, max]; accept iff the
                              // least color seen infinitely often is odd
    int max_color() const;
};
using Acceptance = std::variant<FinalStates, BuchiStates, CoBuchiStates, ParityColors>;

struct Dfa {
    Automaton automaton;  // deterministic and complete
    std::set<State> accepting;
};

struct Dba {
    Automaton automaton;  // deterministic and complete
    std::set<State> accepting;  // Buchi set: visited infinitely often
};

struct Dca {
    Automaton automaton;  // deterministic and complete
    std::set<State> accepting;  // co-Buchi set: visited only finitely often
};

struct Dpa {
    Automaton automaton;  // deterministic and complete
    ParityColors colors;
};

struct Nba {
    Automaton automaton;  // may be nondeterministic and partial
    std::set<State> accepting;  // Buchi set
};

// Runs a deterministic automaton from `from`; every (state, symbol) on the
// way must have exactly one successor.
State run_dfa(const Automaton& a, State from, const Word& word);

// Synchronous product of two deterministic complete automata over the same
// alphabet. By default only the part reachable from the paired initial states
// is materialized; `full` forces all |a1| x |a2| pairs with index q1*n2+q2.
// origin[i] gives the (q1, q2) pair behind product state i.
struct Product {
    Automaton automaton;
    std::vector<std::pair<State, State>> origin;
};
Product product(const Automaton& a1, const Automaton& a2, bool full = false);

// DFA intersection / union via the product construction.
Dfa dfa_and(const Dfa& d1, const Dfa& d2, bool full = false);
Dfa dfa_or(const Dfa& d1, const Dfa& d2, bool full = false);

// Completion: if any (state, symbol) lacks a successor, a sink is appended as
// the highest-numbered state; otherwise the automaton is returned unchanged.
// The sink is never accepting, so wrapping acceptors keep their language.
Automaton complete(const Automaton& a);
Dfa complete(const Dfa& d);

std::set<State> reachable_states(const Automaton& a);

// Acceptance of the ultimately periodic word u v^w by a deterministic
// acceptor. The run is unrolled until a state repeats on a v-boundary; the
// acceptance condition is evaluated on the set of states traversed inside
// that loop (both boundary endpoints included). FinalStates input is invalid.
bool det_accepts_up(const Automaton& a, const Acceptance& acc, const Word& u, const Word& v);

}  // namespace fdfa
