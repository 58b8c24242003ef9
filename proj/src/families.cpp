#include "fdfa/families.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fdfa {
namespace {

constexpr Symbol kA = 0;
constexpr Symbol kB = 1;

Alphabet ab_alphabet() { return Alphabet({"a", "b"}); }

}  // namespace

Fdfa unsaturated_example() {
    Alphabet ab = ab_alphabet();

    Automaton leading(ab, 2, 0);
    leading.add_edge(0, kA, 1);
    leading.add_edge(0, kB, 0);
    leading.add_edge(1, kA, 0);
    leading.add_edge(1, kB, 0);

    // everything
    Automaton p0(ab, 1, 0);
    p0.add_edge(0, kA, 0);
    p0.add_edge(0, kB, 0);

    // at least one b
    Automaton p1(ab, 2, 0);
    p1.add_edge(0, kA, 0);
    p1.add_edge(0, kB, 1);
    p1.add_edge(1, kA, 1);
    p1.add_edge(1, kB, 1);

    return Fdfa{std::move(leading),
                {Dfa{std::move(p0), {0}}, Dfa{std::move(p1), {1}}}};
}

Fdfa eventually_constant_family() {
    Alphabet ab = ab_alphabet();

    // the leading state remembers the last letter read
    Automaton leading(ab, 2, 0);
    leading.add_edge(0, kA, 0);
    leading.add_edge(0, kB, 1);
    leading.add_edge(1, kA, 0);
    leading.add_edge(1, kB, 1);

    // a* at the a-state, b* at the b-state
    Automaton p0(ab, 2, 0);
    p0.add_edge(0, kA, 0);
    p0.add_edge(0, kB, 1);
    p0.add_edge(1, kA, 1);
    p0.add_edge(1, kB, 1);

    Automaton p1(ab, 2, 0);
    p1.add_edge(0, kB, 0);
    p1.add_edge(0, kA, 1);
    p1.add_edge(1, kA, 1);
    p1.add_edge(1, kB, 1);

    return Fdfa{std::move(leading),
                {Dfa{std::move(p0), {0}}, Dfa{std::move(p1), {0}}}};
}

LnInstance gen_ln(std::size_t n) {
    if (n == 0)
        throw std::invalid_argument("family index must be positive");

    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t j = 1; j <= n; ++j)
        names.push_back(std::to_string(j));
    Alphabet alpha(std::move(names));

    // States 0..n-1 remember the last letter value (index + 1); state n is
    // the absorbing sink for follower-rule violations. Before any letter the
    // run sits at the highest letter state, which permits every first letter.
    const State sink = n;
    Automaton leading(alpha, n + 1, n - 1);
    for (State s = 0; s < n; ++s)
        for (Symbol sig = 0; sig < n; ++sig)
            leading.add_edge(s, sig, sig <= s + 1 ? sig : sink);
    for (Symbol sig = 0; sig < n; ++sig)
        leading.add_edge(sink, sig, sink);

    // Progress tracks (smallest, biggest) letter value seen. Under the
    // follower rule a loop's letters fill the whole span, so the span having
    // odd size is the distinct-letter count being odd.
    auto idx = [n](std::size_t small, std::size_t big) {
        return (small - 1) * n + (big - 1);
    };
    std::vector<Dfa> progress;
    progress.reserve(n + 1);
    for (State q = 0; q < n; ++q) {
        (void)q;  // the table is the same at every non-sink state
        Automaton prog(alpha, n * n, idx(n, 1));
        for (std::size_t small = 1; small <= n; ++small) {
            for (std::size_t big = 1; big <= n; ++big) {
                for (Symbol sig = 0; sig < n; ++sig) {
                    const std::size_t value = sig + 1;
                    prog.add_edge(idx(small, big), sig,
                                  idx(std::min(small, value), std::max(big, value)));
                }
            }
        }
        std::set<State> acc;
        for (std::size_t small = 1; small <= n; ++small)
            for (std::size_t big = 1; big <= n; ++big)
                if ((big >= small ? big - small : small - big) % 2 == 0)
                    acc.insert(idx(small, big));
        progress.push_back(Dfa{std::move(prog), std::move(acc)});
    }
    Automaton sink_prog(alpha, 1, 0);
    for (Symbol sig = 0; sig < n; ++sig)
        sink_prog.add_edge(0, sig, 0);
    progress.push_back(Dfa{std::move(sink_prog), {}});

    return LnInstance{n, Fdfa{std::move(leading), std::move(progress)}};
}

bool ln_semantic_member(std::size_t n, const Word& u, const Word& v) {
    if (n == 0)
        throw std::invalid_argument("family index must be positive");
    if (v.empty())
        throw std::invalid_argument("period must be nonempty");
    for (const Word* w : {&u, &v})
        for (Symbol s : *w)
            if (s >= n)
                throw std::invalid_argument("letter out of range");

    Word flat = u;
    flat.insert(flat.end(), v.begin(), v.end());
    flat.insert(flat.end(), v.begin(), v.end());
    for (std::size_t i = 0; i + 1 < flat.size(); ++i)
        if (flat[i + 1] > flat[i] + 1)
            return false;

    const std::set<Symbol> letters(v.begin(), v.end());
    return letters.size() % 2 == 1;
}

}  // namespace fdfa
