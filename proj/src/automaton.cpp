#include "fdfa/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>

namespace fdfa {

namespace {

std::string edge_name(const Automaton& a, State s, Symbol sym) {
    return "state " + std::to_string(s) + " on symbol '" + a.alphabet().name(sym) + "'";
}

void require_same_alphabet(const Automaton& a1, const Automaton& a2) {
    if (!(a1.alphabet() == a2.alphabet()))
        throw std::invalid_argument("operands use different alphabets");
}

void require_dfa(const Automaton& a, const char* role) {
    if (!a.is_deterministic() || !a.is_complete())
        throw std::invalid_argument(std::string(role) + " must be deterministic and complete");
}

}  // namespace

Automaton::Automaton(Alphabet alphabet, std::size_t state_count, State initial)
    : alphabet_(std::move(alphabet)), state_count_(state_count), initial_(initial) {
    if (state_count_ == 0)
        throw std::invalid_argument("automaton needs at least one state");
    if (initial_ >= state_count_)
        throw std::invalid_argument("initial state out of range");
    edges_.resize(state_count_ * alphabet_.size());
}

void Automaton::add_edge(State from, Symbol symbol, State to) {
    if (from >= state_count_ || to >= state_count_)
        throw std::invalid_argument("transition endpoint out of range");
    if (symbol >= alphabet_.size())
        throw std::invalid_argument("transition symbol out of range");
    auto& succ = edges_[from * alphabet_.size() + symbol];
    auto it = std::lower_bound(succ.begin(), succ.end(), to);
    if (it == succ.end() || *it != to) succ.insert(it, to);
}

const std::vector<State>& Automaton::successors(State from, Symbol symbol) const {
    if (from >= state_count_)
        throw std::invalid_argument("state out of range");
    if (symbol >= alphabet_.size())
        throw std::invalid_argument("symbol index " + std::to_string(symbol) +
                                    " outside alphabet of size " + std::to_string(alphabet_.size()));
    return edges_[from * alphabet_.size() + symbol];
}

State Automaton::step(State from, Symbol symbol) const {
    const auto& succ = successors(from, symbol);
    if (succ.size() != 1)
        throw std::invalid_argument("expected exactly one successor for " + edge_name(*this, from, symbol) +
                                    ", found " + std::to_string(succ.size()));
    return succ.front();
}

bool Automaton::is_deterministic() const {
    return std::all_of(edges_.begin(), edges_.end(),
                       [](const auto& succ) { return succ.size() <= 1; });
}

bool Automaton::is_complete() const {
    return std::all_of(edges_.begin(), edges_.end(),
                       [](const auto& succ) { return !succ.empty(); });
}

int ParityColors::max_color() const {
    if (colors.empty())
        throw std::invalid_argument("parity condition needs at least one color");
    return *std::max_element(colors.begin(), colors.end());
}

State run_dfa(const Automaton& a, State from, const Word& word) {
    State s = from;
    for (Symbol sym : word) s = a.step(s, sym);
    return s;
}

Product product(const Automaton& a1, const Automaton& a2, bool full) {
    require_same_alphabet(a1, a2);
    require_dfa(a1, "left product operand");
    require_dfa(a2, "right product operand");

    const std::size_t n2 = a2.state_count();
    const std::size_t symbols = a1.alphabet().size();

    if (full) {
        Automaton out(a1.alphabet(), a1.state_count() * n2, a1.initial() * n2 + a2.initial());
        Product result{std::move(out), {}};
        result.origin.reserve(a1.state_count() * n2);
        for (State q1 = 0; q1 < a1.state_count(); ++q1)
            for (State q2 = 0; q2 < n2; ++q2) {
                result.origin.emplace_back(q1, q2);
                for (Symbol sym = 0; sym < symbols; ++sym)
                    result.automaton.add_edge(q1 * n2 + q2, sym,
                                              a1.step(q1, sym) * n2 + a2.step(q2, sym));
            }
        return result;
    }

    // Reachable part only, numbered in BFS discovery order.
    std::map<std::pair<State, State>, State> index;
    std::vector<std::pair<State, State>> origin;
    std::deque<State> queue;
    auto intern = [&](State q1, State q2) {
        auto [it, inserted] = index.try_emplace({q1, q2}, origin.size());
        if (inserted) {
            origin.emplace_back(q1, q2);
            queue.push_back(it->second);
        }
        return it->second;
    };
    intern(a1.initial(), a2.initial());
    std::vector<std::vector<State>> targets;  // [state][symbol]
    while (!queue.empty()) {
        State s = queue.front();
        queue.pop_front();
        auto [q1, q2] = origin[s];
        if (targets.size() <= s) targets.resize(s + 1, std::vector<State>(symbols));
        for (Symbol sym = 0; sym < symbols; ++sym)
            targets[s][sym] = intern(a1.step(q1, sym), a2.step(q2, sym));
    }
    Automaton out(a1.alphabet(), origin.size(), 0);
    for (State s = 0; s < origin.size(); ++s)
        for (Symbol sym = 0; sym < symbols; ++sym)
            out.add_edge(s, sym, targets[s][sym]);
    return Product{std::move(out), std::move(origin)};
}

namespace {

Dfa product_dfa(const Dfa& d1, const Dfa& d2, bool full, bool conjunctive) {
    Product p = product(d1.automaton, d2.automaton, full);
    Dfa out{std::move(p.automaton), {}};
    for (State s = 0; s < p.origin.size(); ++s) {
        auto [q1, q2] = p.origin[s];
        bool in1 = d1.accepting.count(q1) != 0;
        bool in2 = d2.accepting.count(q2) != 0;
        if (conjunctive ? (in1 && in2) : (in1 || in2)) out.accepting.insert(s);
    }
    return out;
}

}  // namespace

Dfa dfa_and(const Dfa& d1, const Dfa& d2, bool full) {
    return product_dfa(d1, d2, full, true);
}

Dfa dfa_or(const Dfa& d1, const Dfa& d2, bool full) {
    return product_dfa(d1, d2, full, false);
}

Automaton complete(const Automaton& a) {
    if (a.is_complete()) return a;
    const std::size_t symbols = a.alphabet().size();
    const State sink = a.state_count();
    Automaton out(a.alphabet(), a.state_count() + 1, a.initial());
    for (State s = 0; s < a.state_count(); ++s)
        for (Symbol sym = 0; sym < symbols; ++sym) {
            const auto& succ = a.successors(s, sym);
            if (succ.empty()) out.add_edge(s, sym, sink);
            for (State t : succ) out.add_edge(s, sym, t);
        }
    for (Symbol sym = 0; sym < symbols; ++sym) out.add_edge(sink, sym, sink);
    return out;
}

Dfa complete(const Dfa& d) {
    return Dfa{complete(d.automaton), d.accepting};
}

std::set<State> reachable_states(const Automaton& a) {
    std::set<State> seen{a.initial()};
    std::deque<State> queue{a.initial()};
    while (!queue.empty()) {
        State s = queue.front();
        queue.pop_front();
        for (Symbol sym = 0; sym < a.alphabet().size(); ++sym)
            for (State t : a.successors(s, sym))
                if (seen.insert(t).second) queue.push_back(t);
    }
    return seen;
}

bool det_accepts_up(const Automaton& a, const Acceptance& acc, const Word& u, const Word& v) {
    if (std::holds_alternative<FinalStates>(acc))
        throw std::invalid_argument("finite-word acceptance cannot classify infinite runs");
    if (v.empty())
        throw std::invalid_argument("period must be nonempty");
    require_dfa(a, "acceptor");
    if (const auto* parity = std::get_if<ParityColors>(&acc)) {
        if (parity->colors.size() != a.state_count())
            throw std::invalid_argument("parity condition must color every state");
        for (int c : parity->colors)
            if (c < 1) throw std::invalid_argument("parity colors start at 1");
    }

    // Lasso search: iterate v and record the state at each v-boundary until
    // one repeats. The repeat closes the part of the run that recurs forever.
    State s = run_dfa(a, a.initial(), u);
    std::map<State, std::size_t> boundary_index;
    std::vector<State> boundary{s};
    boundary_index[s] = 0;
    std::size_t loop_start;
    for (;;) {
        s = run_dfa(a, s, v);
        auto [it, inserted] = boundary_index.try_emplace(s, boundary.size());
        boundary.push_back(s);
        if (!inserted) {
            loop_start = it->second;
            break;
        }
    }

    // States traversed while looping, both endpoints included.
    std::set<State> infinity;
    State t = boundary[loop_start];
    infinity.insert(t);
    for (std::size_t round = loop_start; round + 1 < boundary.size(); ++round)
        for (Symbol sym : v) {
            t = a.step(t, sym);
            infinity.insert(t);
        }

    if (const auto* buchi = std::get_if<BuchiStates>(&acc)) {
        return std::any_of(infinity.begin(), infinity.end(),
                           [&](State q) { return buchi->states.count(q) != 0; });
    }
    if (const auto* cobuchi = std::get_if<CoBuchiStates>(&acc)) {
        return std::none_of(infinity.begin(), infinity.end(),
                            [&](State q) { return cobuchi->states.count(q) != 0; });
    }
    const auto& parity = std::get<ParityColors>(acc);
    int least = parity.colors[*infinity.begin()];
    for (State q : infinity) least = std::min(least, parity.colors[q]);
    return least % 2 == 1;
}

}  // namespace fdfa
