#include "fdfa/translations.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace fdfa {
namespace {

void require_det_complete(const Automaton& a, const char* what) {
    if (!a.is_deterministic() || !a.is_complete())
        throw std::invalid_argument(std::string(what) + " must be deterministic and complete");
}

void require_family(const Fdfa& f) {
    auto problems = validate(f);
    if (!problems.empty())
        throw std::invalid_argument("malformed family: " + problems.front());
}

// Shared shape of the Buchi and co-Buchi translations: progress state (p, b)
// at index p*2+b, where b flips to 1 once a marked state has been entered.
// The loop endpoint itself counts (it is the last state entered), so starting
// with b = 0 at (q, 0) loses nothing.
Fdfa bit_family(const Automaton& a, const std::set<State>& marked, bool accept_on_visit) {
    require_det_complete(a, "acceptor");
    for (State s : marked)
        if (s >= a.state_count())
            throw std::invalid_argument("marked state out of range");
    const std::size_t n = a.state_count();
    const std::size_t sigma = a.alphabet().size();

    Fdfa out{a, {}};
    out.progress.reserve(n);
    for (State q = 0; q < n; ++q) {
        Automaton prog(a.alphabet(), 2 * n, 2 * q);
        for (State p = 0; p < n; ++p) {
            for (Symbol s = 0; s < sigma; ++s) {
                State t = a.step(p, s);
                prog.add_edge(2 * p, s, marked.count(t) != 0 ? 2 * t + 1 : 2 * t);
                prog.add_edge(2 * p + 1, s, 2 * t + 1);
            }
        }
        std::set<State> acc;
        for (State p = 0; p < n; ++p)
            acc.insert(2 * p + (accept_on_visit ? 1 : 0));
        out.progress.push_back(Dfa{std::move(prog), std::move(acc)});
    }
    return out;
}

// Part of the loop-word product reachable from (q, initial, fst), in
// discovery order so the numbering is reproducible.
struct LoopProduct {
    std::vector<std::array<State, 3>> nodes;
    std::vector<std::tuple<State, Symbol, State>> edges;
    std::optional<State> goal;  // index of (q, fst, fst), when reachable
};

LoopProduct loop_product(const Fdfa& f, State q, State fst) {
    const Automaton& prog = f.progress[q].automaton;
    const std::size_t sigma = f.leading.alphabet().size();
    using Node = std::array<State, 3>;

    LoopProduct out;
    std::map<Node, State> index;
    Node start{q, prog.initial(), fst};
    index.emplace(start, 0);
    out.nodes.push_back(start);
    for (std::size_t at = 0; at < out.nodes.size(); ++at) {
        Node cur = out.nodes[at];
        for (Symbol s = 0; s < sigma; ++s) {
            Node nxt{f.leading.step(cur[0], s), prog.step(cur[1], s), prog.step(cur[2], s)};
            auto [it, inserted] = index.emplace(nxt, out.nodes.size());
            if (inserted)
                out.nodes.push_back(nxt);
            out.edges.emplace_back(static_cast<State>(at), s, it->second);
        }
    }
    auto it = index.find(Node{q, fst, fst});
    if (it != index.end())
        out.goal = it->second;
    return out;
}

}  // namespace

Fdfa dba_to_fdfa(const Dba& d) { return bit_family(d.automaton, d.accepting, true); }

Fdfa dca_to_fdfa(const Dca& d) { return bit_family(d.automaton, d.accepting, false); }

Fdfa dpa_to_fdfa(const Dpa& d) {
    require_det_complete(d.automaton, "acceptor");
    const std::size_t n = d.automaton.state_count();
    if (d.colors.colors.size() != n)
        throw std::invalid_argument("colors must cover every state");
    for (int c : d.colors.colors)
        if (c < 1)
            throw std::invalid_argument("colors must be positive");
    const int k = d.colors.max_color();
    const std::size_t sigma = d.automaton.alphabet().size();
    auto idx = [&](State p, int c) {
        return p * static_cast<std::size_t>(k) + static_cast<std::size_t>(c - 1);
    };

    Fdfa out{d.automaton, {}};
    out.progress.reserve(n);
    for (State q = 0; q < n; ++q) {
        // (p, c): acceptor state plus the least color entered so far. The
        // endpoint's own color joins at the end of the loop, so seeding with
        // the color of q is harmless and keeps the start state meaningful.
        Automaton prog(d.automaton.alphabet(), n * static_cast<std::size_t>(k),
                       idx(q, d.colors.colors[q]));
        for (State p = 0; p < n; ++p) {
            for (int c = 1; c <= k; ++c) {
                for (Symbol s = 0; s < sigma; ++s) {
                    State t = d.automaton.step(p, s);
                    prog.add_edge(idx(p, c), s, idx(t, std::min(c, d.colors.colors[t])));
                }
            }
        }
        std::set<State> acc;
        for (State p = 0; p < n; ++p)
            for (int c = 1; c <= k; c += 2)
                acc.insert(idx(p, c));
        out.progress.push_back(Dfa{std::move(prog), std::move(acc)});
    }
    return out;
}

MqDfa build_mq(const Fdfa& f, State q) {
    require_family(f);
    if (q >= f.leading.state_count())
        throw std::invalid_argument("leading state out of range");
    return MqDfa{Dfa{f.leading, {q}}, q};
}

NqfDfa build_nqf(const Fdfa& f, State q, State fst) {
    require_family(f);
    if (q >= f.leading.state_count())
        throw std::invalid_argument("leading state out of range");
    if (fst >= f.progress[q].automaton.state_count())
        throw std::invalid_argument("progress state out of range");

    LoopProduct prod = loop_product(f, q, fst);
    Automaton dfa(f.leading.alphabet(), prod.nodes.size(), 0);
    for (auto& [from, sym, to] : prod.edges)
        dfa.add_edge(from, sym, to);
    std::set<State> acc;
    if (prod.goal)
        acc.insert(*prod.goal);
    return NqfDfa{Dfa{std::move(dfa), std::move(acc)}, q, fst};
}

Nba fdfa_to_nba(const Fdfa& f) {
    require_family(f);
    const Automaton& lead = f.leading;
    const std::size_t n = lead.state_count();
    const std::size_t sigma = lead.alphabet().size();
    const std::set<State> reach = reachable_states(lead);

    // Shared copy of the leading automaton at indices [0, n); runs stay in it
    // while reading the transient prefix.
    std::vector<std::tuple<State, Symbol, State>> edges;
    for (State p = 0; p < n; ++p)
        for (Symbol s = 0; s < sigma; ++s)
            edges.emplace_back(p, s, lead.step(p, s));

    std::set<State> hubs;
    std::size_t total = n;
    for (State q = 0; q < n; ++q) {
        if (reach.count(q) == 0)
            continue;
        for (State fst : f.progress[q].accepting) {
            LoopProduct prod = loop_product(f, q, fst);
            if (!prod.goal)
                continue;
            const State goal = *prod.goal;
            // A nonempty loop word exists iff the goal node has an incoming
            // edge (every product node is reachable from the start node).
            const bool loops = std::any_of(prod.edges.begin(), prod.edges.end(),
                                           [&](const auto& e) { return std::get<2>(e) == goal; });
            if (!loops)
                continue;

            const State base = total;
            // Runs restart loop tracking after each completed loop word. When
            // the start node doubles as the goal node it can serve as the
            // restart point itself; otherwise a separate one is needed,
            // because continuing from the goal node would not reset the
            // initial-state component of the product.
            const bool fresh_hub = goal != 0;
            const State hub = fresh_hub ? base + prod.nodes.size() : base;

            for (auto& [s, sym, t] : prod.edges) {
                edges.emplace_back(base + s, sym, base + t);
                // Any move that lands on the goal may close the loop word and
                // jump to the restart point instead.
                if (t == goal && fresh_hub)
                    edges.emplace_back(base + s, sym, hub);
            }
            // Both the shared leading state q and the restart point move the
            // way the start node moves.
            for (auto& [s, sym, t] : prod.edges) {
                if (s != 0)
                    continue;
                edges.emplace_back(q, sym, base + t);
                if (t == goal)
                    edges.emplace_back(q, sym, hub);
                if (fresh_hub) {
                    edges.emplace_back(hub, sym, base + t);
                    if (t == goal)
                        edges.emplace_back(hub, sym, hub);
                }
            }
            hubs.insert(hub);
            total += prod.nodes.size() + (fresh_hub ? 1 : 0);
        }
    }

    Automaton a(lead.alphabet(), total, lead.initial());
    for (auto& [from, sym, to] : edges)
        a.add_edge(from, sym, to);
    return Nba{std::move(a), std::move(hubs)};
}

bool nba_accepts_up(const Nba& b, const Word& u, const Word& v) {
    const Automaton& a = b.automaton;
    if (v.empty())
        throw std::invalid_argument("period must be nonempty");
    for (State s : b.accepting)
        if (s >= a.state_count())
            throw std::invalid_argument("accepting state out of range");
    const std::size_t n = a.state_count();
    std::vector<char> is_acc(n, 0);
    for (State s : b.accepting)
        is_acc[s] = 1;

    std::set<State> frontier{a.initial()};
    for (Symbol s : u) {
        std::set<State> next;
        for (State m : frontier)
            for (State t : a.successors(m, s))
                next.insert(t);
        frontier = std::move(next);
    }
    if (frontier.empty())
        return false;

    // Step relation of one period: any[s] holds the states some run on v
    // reaches from s, flagged[s] those reachable while passing an accepting
    // state (either endpoint of the stretch counts).
    const std::size_t len = v.size();
    std::vector<std::vector<State>> any(n), flagged(n);
    for (State src = 0; src < n; ++src) {
        std::vector<char> seen((len + 1) * n * 2, 0);
        auto mark = [&](std::size_t pos, State m, int fl) {
            char& c = seen[(pos * n + m) * 2 + static_cast<std::size_t>(fl)];
            if (c)
                return false;
            c = 1;
            return true;
        };
        std::vector<std::pair<State, int>> layer;
        mark(0, src, is_acc[src]);
        layer.emplace_back(src, is_acc[src]);
        for (std::size_t pos = 0; pos < len; ++pos) {
            std::vector<std::pair<State, int>> next_layer;
            for (auto [m, fl] : layer) {
                for (State t : a.successors(m, v[pos])) {
                    int nf = fl | is_acc[t];
                    if (mark(pos + 1, t, nf))
                        next_layer.emplace_back(t, nf);
                }
            }
            layer = std::move(next_layer);
        }
        for (State t = 0; t < n; ++t) {
            const bool plain = seen[(len * n + t) * 2] != 0;
            const bool via_acc = seen[(len * n + t) * 2 + 1] != 0;
            if (plain || via_acc)
                any[src].push_back(t);
            if (via_acc)
                flagged[src].push_back(t);
        }
    }

    // Strongly connected components of the step graph. A flagged edge inside
    // one component sits on a cycle, so looping through it keeps hitting an
    // accepting state once per round.
    std::vector<State> order;
    {
        std::vector<char> visited(n, 0);
        for (State s0 = 0; s0 < n; ++s0) {
            if (visited[s0])
                continue;
            visited[s0] = 1;
            std::vector<std::pair<State, std::size_t>> stack{{s0, 0}};
            while (!stack.empty()) {
                auto& [m, i] = stack.back();
                if (i < any[m].size()) {
                    State t = any[m][i++];
                    if (!visited[t]) {
                        visited[t] = 1;
                        stack.emplace_back(t, 0);
                    }
                } else {
                    order.push_back(m);
                    stack.pop_back();
                }
            }
        }
    }
    std::vector<std::vector<State>> rev(n);
    for (State s = 0; s < n; ++s)
        for (State t : any[s])
            rev[t].push_back(s);
    std::vector<std::size_t> comp(n, n);
    std::size_t comp_count = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (comp[*it] != n)
            continue;
        std::vector<State> stack{*it};
        comp[*it] = comp_count;
        while (!stack.empty()) {
            State m = stack.back();
            stack.pop_back();
            for (State t : rev[m]) {
                if (comp[t] == n) {
                    comp[t] = comp_count;
                    stack.push_back(t);
                }
            }
        }
        ++comp_count;
    }

    std::vector<char> good(n, 0);
    for (State s = 0; s < n; ++s)
        for (State t : flagged[s])
            if (comp[s] == comp[t])
                good[s] = 1;

    std::vector<char> seen_h(n, 0);
    std::vector<State> stack(frontier.begin(), frontier.end());
    for (State s : frontier)
        seen_h[s] = 1;
    while (!stack.empty()) {
        State m = stack.back();
        stack.pop_back();
        if (good[m])
            return true;
        for (State t : any[m]) {
            if (!seen_h[t]) {
                seen_h[t] = 1;
                stack.push_back(t);
            }
        }
    }
    return false;
}

}  // namespace fdfa
