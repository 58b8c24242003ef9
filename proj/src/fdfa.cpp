#include "fdfa/fdfa.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fdfa {

namespace detail {

NormalizationCore normalize_core(const Automaton& leading, const Word& u, const Word& v) {
    if (v.empty())
        throw std::invalid_argument("period must be nonempty");

    // Track the leading state after u, u v, u v^2, ... until a state repeats.
    // The first repeat gives the least (i, j): states before it are pairwise
    // distinct, and from it on the sequence cycles.
    State s = run_dfa(leading, leading.initial(), u);
    std::map<State, std::size_t> first_seen;
    first_seen[s] = 0;
    for (std::size_t t = 1;; ++t) {
        s = run_dfa(leading, s, v);
        auto [it, inserted] = first_seen.try_emplace(s, t);
        if (!inserted)
            return NormalizationCore{it->second, t - it->second, s};
    }
}

}  // namespace detail

NormalizedPair normalize(const Automaton& leading, const Word& u, const Word& v) {
    auto core = detail::normalize_core(leading, u, v);
    NormalizedPair out;
    out.prefix_power = core.prefix_power;
    out.period_power = core.period_power;
    out.x = u;
    out.x.reserve(u.size() + core.prefix_power * v.size());
    for (std::size_t rep = 0; rep < core.prefix_power; ++rep)
        out.x.insert(out.x.end(), v.begin(), v.end());
    out.y.reserve(core.period_power * v.size());
    for (std::size_t rep = 0; rep < core.period_power; ++rep)
        out.y.insert(out.y.end(), v.begin(), v.end());
    return out;
}

bool accepts(const Fdfa& f, const Word& u, const Word& v) {
    if (f.progress.size() != f.leading.state_count())
        throw std::invalid_argument("family must carry one progress automaton per leading state");
    auto core = detail::normalize_core(f.leading, u, v);
    const Dfa& prog = f.progress[core.state_at_x];
    State p = prog.automaton.initial();
    for (std::size_t rep = 0; rep < core.period_power; ++rep)
        p = run_dfa(prog.automaton, p, v);
    return prog.accepting.count(p) != 0;
}

bool accepts(const Fdfa& f, const UpWord& pair) {
    return accepts(f, pair.prefix, pair.period);
}

FdfaSize size(const Fdfa& f) {
    FdfaSize out{f.leading.state_count(), 0};
    for (const Dfa& prog : f.progress)
        out.max_progress_states = std::max(out.max_progress_states, prog.automaton.state_count());
    return out;
}

std::vector<std::string> validate(const Fdfa& f) {
    std::vector<std::string> diagnostics;
    auto check_transitions = [&](const Automaton& a, const std::string& where) {
        for (State s = 0; s < a.state_count(); ++s)
            for (Symbol sym = 0; sym < a.alphabet().size(); ++sym) {
                std::size_t count = a.successors(s, sym).size();
                if (count == 0)
                    diagnostics.push_back(where + ": missing transition from state " + std::to_string(s) +
                                          " on symbol '" + a.alphabet().name(sym) + "'");
                else if (count > 1)
                    diagnostics.push_back(where + ": nondeterministic transition from state " +
                                          std::to_string(s) + " on symbol '" + a.alphabet().name(sym) + "'");
            }
    };

    check_transitions(f.leading, "leading");
    if (f.progress.size() != f.leading.state_count())
        diagnostics.push_back("progress: expected " + std::to_string(f.leading.state_count()) +
                              " automata (one per leading state), found " + std::to_string(f.progress.size()));
    for (std::size_t q = 0; q < f.progress.size(); ++q) {
        const std::string where = "progress[" + std::to_string(q) + "]";
        const Dfa& prog = f.progress[q];
        if (!(prog.automaton.alphabet() == f.leading.alphabet()))
            diagnostics.push_back(where + ": alphabet differs from the leading automaton");
        else
            check_transitions(prog.automaton, where);
        for (State s : prog.accepting)
            if (s >= prog.automaton.state_count())
                diagnostics.push_back(where + ": accepting state " + std::to_string(s) + " out of range");
    }
    return diagnostics;
}

}  // namespace fdfa
