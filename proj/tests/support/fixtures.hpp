#pragma once

#include <string>
#include <vector>

#include "fdfa/automaton.hpp"
#include "fdfa/fdfa.hpp"

namespace testsupport {

// Empty-language family whose progress automata still accept words: the
// leading automaton flips state on every letter, so only even-length
// periods close a loop, while the progress automaton at the initial state
// accepts exactly the odd-length words. Trips any emptiness search that
// forgets the loop requirement.
fdfa::Fdfa trap_family();

// Single-state families accepting every pair / no pair.
fdfa::Fdfa all_accepting_family();
fdfa::Fdfa none_accepting_family();

// Deterministic acceptors over {a, b}.
fdfa::Dba inf_a_dba();         // infinitely many a
fdfa::Dca fin_a_dca();         // finitely many a: co-Buchi twin of the above
fdfa::Dba ab_factor_dba();     // infinitely many ab stretches
fdfa::Dba all_dba();           // every word
fdfa::Dba none_dba();          // no word
fdfa::Dpa parity1_odd_dpa();   // one state, color 1: every word
fdfa::Dpa parity1_even_dpa();  // one state, color 2: no word
fdfa::Dpa parity2_dpa();       // two states, colors {2, 1}
fdfa::Dpa parity3_dpa();       // three states, colors {1, 2, 3}

struct NamedFdfa {
    std::string name;
    fdfa::Fdfa family;
};

// The families most sweeps run over: both built-in examples, a complement,
// the specials above, and the generated families for n = 2, 3.
std::vector<NamedFdfa> base_families();

// Translations of every deterministic acceptor above.
std::vector<NamedFdfa> translated_families();

}  // namespace testsupport
