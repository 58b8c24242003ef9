#include "support/fixtures.hpp"

#include <array>
#include <initializer_list>
#include <utility>

#include "fdfa/algebra.hpp"
#include "fdfa/families.hpp"
#include "fdfa/translations.hpp"

namespace testsupport {
namespace {

using fdfa::Alphabet;
using fdfa::Automaton;
using fdfa::Dfa;
using fdfa::Fdfa;
using fdfa::Symbol;

constexpr Symbol kA = 0;
constexpr Symbol kB = 1;

Alphabet ab() { return Alphabet({"a", "b"}); }

Automaton ab_loop(std::size_t states, fdfa::State initial,
                  std::initializer_list<std::array<fdfa::State, 3>> edges) {
    Automaton a(ab(), states, initial);
    for (const auto& [from, sym, to] : edges)
        a.add_edge(from, sym, to);
    return a;
}

}  // namespace

Fdfa trap_family() {
    Automaton leading = ab_loop(2, 0, {{0, kA, 1}, {0, kB, 1}, {1, kA, 0}, {1, kB, 0}});
    Automaton odd = ab_loop(2, 0, {{0, kA, 1}, {0, kB, 1}, {1, kA, 0}, {1, kB, 0}});
    Automaton nothing = ab_loop(1, 0, {{0, kA, 0}, {0, kB, 0}});
    return Fdfa{std::move(leading),
                {Dfa{std::move(odd), {1}}, Dfa{std::move(nothing), {}}}};
}

Fdfa all_accepting_family() {
    Automaton leading = ab_loop(1, 0, {{0, kA, 0}, {0, kB, 0}});
    Automaton prog = ab_loop(1, 0, {{0, kA, 0}, {0, kB, 0}});
    return Fdfa{std::move(leading), {Dfa{std::move(prog), {0}}}};
}

Fdfa none_accepting_family() {
    Automaton leading = ab_loop(1, 0, {{0, kA, 0}, {0, kB, 0}});
    Automaton prog = ab_loop(1, 0, {{0, kA, 0}, {0, kB, 0}});
    return Fdfa{std::move(leading), {Dfa{std::move(prog), {}}}};
}

fdfa::Dba inf_a_dba() {
    Automaton a = ab_loop(2, 1, {{0, kA, 0}, {0, kB, 1}, {1, kA, 0}, {1, kB, 1}});
    return fdfa::Dba{std::move(a), {0}};
}

fdfa::Dca fin_a_dca() {
    Automaton a = ab_loop(2, 1, {{0, kA, 0}, {0, kB, 1}, {1, kA, 0}, {1, kB, 1}});
    return fdfa::Dca{std::move(a), {0}};
}

fdfa::Dba ab_factor_dba() {
    Automaton a = ab_loop(3, 0,
                          {{0, kA, 1}, {0, kB, 0}, {1, kA, 1}, {1, kB, 2}, {2, kA, 1}, {2, kB, 0}});
    return fdfa::Dba{std::move(a), {2}};
}

fdfa::Dba all_dba() {
    Automaton a = ab_loop(1, 0, {{0, kA, 0}, {0, kB, 0}});
    return fdfa::Dba{std::move(a), {0}};
}

fdfa::Dba none_dba() {
    Automaton a = ab_loop(1, 0, {{0, kA, 0}, {0, kB, 0}});
    return fdfa::Dba{std::move(a), {}};
}

fdfa::Dpa parity1_odd_dpa() {
    Automaton a = ab_loop(1, 0, {{0, kA, 0}, {0, kB, 0}});
    return fdfa::Dpa{std::move(a), fdfa::ParityColors{{1}}};
}

fdfa::Dpa parity1_even_dpa() {
    Automaton a = ab_loop(1, 0, {{0, kA, 0}, {0, kB, 0}});
    return fdfa::Dpa{std::move(a), fdfa::ParityColors{{2}}};
}

fdfa::Dpa parity2_dpa() {
    Automaton a = ab_loop(2, 0, {{0, kA, 1}, {0, kB, 0}, {1, kA, 0}, {1, kB, 1}});
    return fdfa::Dpa{std::move(a), fdfa::ParityColors{{2, 1}}};
}

fdfa::Dpa parity3_dpa() {
    Automaton a = ab_loop(3, 0,
                          {{0, kA, 1}, {0, kB, 2}, {1, kA, 2}, {1, kB, 0}, {2, kA, 2}, {2, kB, 1}});
    return fdfa::Dpa{std::move(a), fdfa::ParityColors{{1, 2, 3}}};
}

std::vector<NamedFdfa> base_families() {
    std::vector<NamedFdfa> out;
    out.push_back({"unsaturated", fdfa::unsaturated_example()});
    out.push_back({"eventually-constant", fdfa::eventually_constant_family()});
    out.push_back({"eventually-constant-complement",
                   fdfa::complement(fdfa::eventually_constant_family())});
    out.push_back({"trap", trap_family()});
    out.push_back({"all", all_accepting_family()});
    out.push_back({"none", none_accepting_family()});
    out.push_back({"ln2", fdfa::gen_ln(2).family});
    out.push_back({"ln3", fdfa::gen_ln(3).family});
    return out;
}

std::vector<NamedFdfa> translated_families() {
    std::vector<NamedFdfa> out;
    out.push_back({"dba:inf-a", fdfa::dba_to_fdfa(inf_a_dba())});
    out.push_back({"dca:fin-a", fdfa::dca_to_fdfa(fin_a_dca())});
    out.push_back({"dba:ab-factor", fdfa::dba_to_fdfa(ab_factor_dba())});
    out.push_back({"dba:all", fdfa::dba_to_fdfa(all_dba())});
    out.push_back({"dba:none", fdfa::dba_to_fdfa(none_dba())});
    out.push_back({"dpa:odd", fdfa::dpa_to_fdfa(parity1_odd_dpa())});
    out.push_back({"dpa:even", fdfa::dpa_to_fdfa(parity1_even_dpa())});
    out.push_back({"dpa:two", fdfa::dpa_to_fdfa(parity2_dpa())});
    out.push_back({"dpa:three", fdfa::dpa_to_fdfa(parity3_dpa())});
    return out;
}

}  // namespace testsupport
