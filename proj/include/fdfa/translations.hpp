#pragma once

#include "fdfa/fdfa.hpp"

namespace fdfa {

// Families equivalent to deterministic omega-acceptors. Progress automata
// track the acceptor from the handed-over state together with enough
// bookkeeping to evaluate the condition on the loop:
//   Buchi / co-Buchi: one bit recording whether a marked state was entered
//     (2n progress states per leading state);
//   parity: the least color entered so far (kn progress states, k colors).
Fdfa dba_to_fdfa(const Dba& d);
Fdfa dca_to_fdfa(const Dca& d);
Fdfa dpa_to_fdfa(const Dpa& d);

// DFA for the words the leading automaton sends to q.
struct MqDfa {
    Dfa dfa;
    State leading_state;
};
MqDfa build_mq(const Fdfa& f, State q);

// DFA for the loop words at leading state q that the progress automaton of q
// sends from its initial state to `fst` and from `fst` back to `fst`. Built
// as a three-way product (leading restarted at q, progress from its initial
// state, progress restarted at fst), so it has at most n * k^2 states.
struct NqfDfa {
    Dfa dfa;
    State leading_state;
    State progress_state;
};
NqfDfa build_nqf(const Fdfa& f, State q, State fst);

// Nondeterministic Buchi automaton accepting exactly the infinite words
// u v^w whose decomposition pairs the family accepts, provided the family
// treats equal infinite words consistently. One subautomaton per (leading
// state, accepting progress state) pair with a nonempty loop language, all
// hanging off a shared copy of the leading automaton. Total state count is
// at most nk(n + nk^2).
Nba fdfa_to_nba(const Fdfa& f);

// Membership of u v^w in the language of a Buchi automaton, decided through
// the step relation of v: the word is accepted iff from some state reached
// on u a v-cycle is reachable that passes through an accepting state.
bool nba_accepts_up(const Nba& b, const Word& u, const Word& v);

}  // namespace fdfa
