// Release gate for the library and its command line tool. Each criterion
// prints exactly one PASS or FAIL line and must finish inside its pinned
// runtime budget; the process exits nonzero when anything fails.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "fdfa/algebra.hpp"
#include "fdfa/families.hpp"
#include "fdfa/fdfa.hpp"
#include "fdfa/io.hpp"
#include "fdfa/translations.hpp"
#include "fdfa/up_word.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace fdfa;
using testsupport::NamedFdfa;

namespace {

constexpr Symbol kA = 0;
constexpr Symbol kB = 1;

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok)
        throw Failure(what);
}

std::string fingerprint(const Fdfa& f) { return serialize(make_document(f)); }

std::vector<NamedFdfa> all_families() {
    std::vector<NamedFdfa> out = testsupport::base_families();
    for (auto& nf : testsupport::translated_families())
        out.push_back(std::move(nf));
    return out;
}

// prefix bound for pointwise sweeps: trimmed on wider alphabets
std::size_t sweep_u(const Fdfa& f) { return f.leading.alphabet().size() > 2 ? 2 : 3; }

Word cat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Word times(const Word& w, std::size_t count) {
    Word out;
    for (std::size_t i = 0; i < count; ++i)
        out = cat(out, w);
    return out;
}

bool dfa_has(const Dfa& d, const Word& w) {
    return d.accepting.count(run_dfa(d.automaton, d.automaton.initial(), w)) > 0;
}

// ---- command line plumbing for the last criterion ----

struct CliRun {
    int code;
    std::string out;
};

CliRun sh(const std::string& command) {
    FILE* pipe = popen(command.c_str(), "r");
    require(pipe != nullptr, "popen failed for: " + command);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, n);
    const int status = pclose(pipe);
    require(status != -1, "pclose failed for: " + command);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string cli_bin() {
    const char* bin = std::getenv("FDFA_CLI_BIN");
    require(bin != nullptr, "FDFA_CLI_BIN is not set");
    return std::string("\"") + bin + "\"";
}

std::string write_file(const std::string& name, const std::string& text) {
    const std::string path = "/tmp/fdfa-acceptance-" + name + ".json";
    std::ofstream out(path, std::ios::binary);
    require(out.good(), "cannot write " + path);
    out << text;
    out.close();
    return path;
}

// ---- criteria ----

void criterion_membership_and_saturation() {
    const Fdfa u = unsaturated_example();
    const Fdfa s = eventually_constant_family();

    require(accepts(u, {kB}, {kA}), "the two-spelling family must accept (b, a)");
    require(!accepts(u, {kB, kA}, {kA, kA}), "the two-spelling family must reject (ba, aa)");
    const NormalizedPair np = normalize(u.leading, {kB}, {kA});
    require(np.x == Word{kB} && np.y == Word{kA, kA}, "(b, a) must normalize to (b, aa)");

    for (const SaturationReport& report :
         {check_saturation_bounded(u, 3, 3), check_saturation_exact(u)}) {
        require(report.verdict == SaturationVerdict::unsaturated,
                "both checks must flag the two-spelling family");
        require(report.counterexample.has_value(), "an unsaturated verdict needs a counterexample");
        const auto& [acc, rej] = *report.counterexample;
        require(up_equal(acc, rej), "counterexample spellings must denote the same word");
        require(accepts(u, acc.prefix, acc.period), "the first spelling must be accepted");
        require(!accepts(u, rej.prefix, rej.period), "the second spelling must be rejected");
    }

    require(check_saturation_bounded(s, 3, 3).verdict == SaturationVerdict::saturated_up_to_bound,
            "the eventually-constant family must pass the bounded check");
    require(check_saturation_exact(s).verdict == SaturationVerdict::saturated_exact,
            "the eventually-constant family must pass the exact check");
}

void criterion_complement() {
    for (const auto& [name, f] : all_families()) {
        const Fdfa c = complement(f);
        require(size(c) == size(f), name + ": complement must preserve size");
        require(fingerprint(complement(c)) == fingerprint(f),
                name + ": complementing twice must restore the family");
        testsupport::for_each_pair(f.leading.alphabet().size(), sweep_u(f), 3,
                                   [&](const Word& u, const Word& v) {
                                       require(accepts(c, u, v) != accepts(f, u, v),
                                               name + ": complement must flip every pair");
                                   });
    }
}

void criterion_products() {
    // advertised worst-case sizes when the full product is requested
    const std::vector<std::pair<Fdfa, Fdfa>> sized = {
        {unsaturated_example(), eventually_constant_family()},
        {gen_ln(2).family, gen_ln(2).family},
        {testsupport::trap_family(), testsupport::all_accepting_family()},
    };
    for (const auto& [f1, f2] : sized) {
        const FdfaSize s1 = size(f1);
        const FdfaSize s2 = size(f2);
        const FdfaSize want{s1.leading_states * s2.leading_states,
                            s1.max_progress_states * s2.max_progress_states};
        require(size(intersect(f1, f2, true)) == want, "full intersection size must multiply");
        require(size(unite(f1, f2, true)) == want, "full union size must multiply");
    }

    // pointwise behavior and saturation of the outputs, on saturated inputs
    std::vector<NamedFdfa> sat;
    sat.push_back({"eventually-constant", eventually_constant_family()});
    sat.push_back({"eventually-constant-complement", complement(eventually_constant_family())});
    sat.push_back({"trap", testsupport::trap_family()});
    sat.push_back({"all", testsupport::all_accepting_family()});
    sat.push_back({"none", testsupport::none_accepting_family()});
    sat.push_back({"dba:inf-a", dba_to_fdfa(testsupport::inf_a_dba())});
    sat.push_back({"dca:fin-a", dca_to_fdfa(testsupport::fin_a_dca())});
    for (const auto& [n1, f1] : sat) {
        for (const auto& [n2, f2] : sat) {
            const Fdfa both = intersect(f1, f2);
            const Fdfa either = unite(f1, f2);
            const std::string tag = n1 + " x " + n2;
            testsupport::for_each_pair(2, 3, 3, [&](const Word& u, const Word& v) {
                const bool a1 = accepts(f1, u, v);
                const bool a2 = accepts(f2, u, v);
                require(accepts(both, u, v) == (a1 && a2), tag + ": intersection must answer AND");
                require(accepts(either, u, v) == (a1 || a2), tag + ": union must answer OR");
            });
            for (const Fdfa* out : {&both, &either})
                require(check_saturation_bounded(*out, 3, 3).verdict !=
                            SaturationVerdict::unsaturated,
                        tag + ": product of saturated families must stay saturated");
        }
    }
}

void criterion_decision_oracles() {
    // fixtures whose exhaustive bounds are small enough to enumerate
    std::vector<NamedFdfa> instances;
    for (auto& nf : all_families()) {
        const FdfaSize s = size(nf.family);
        const std::size_t v_bound = s.leading_states * s.max_progress_states;
        const double words = std::pow(double(nf.family.leading.alphabet().size()), double(v_bound));
        if (words <= 9000.0)
            instances.push_back(std::move(nf));
    }
    require(instances.size() >= 10, "need at least ten enumerable fixture instances, have " +
                                        std::to_string(instances.size()));
    bool saw_trap = false;

    for (const auto& [name, f] : instances) {
        saw_trap = saw_trap || name == "trap";
        const std::size_t max_u = testsupport::emptiness_u_bound(f);
        const std::size_t max_v = testsupport::emptiness_v_bound(f);
        const auto oracle_pair = testsupport::oracle_accepted_pair(f, max_u, max_v);

        const EmptinessResult er = is_empty(f);
        require(er.empty == !oracle_pair.has_value(), name + ": emptiness verdict must match the oracle");
        if (!er.empty) {
            require(er.witness.has_value(), name + ": nonempty needs a witness");
            require(accepts(f, er.witness->x, er.witness->y), name + ": witness must be accepted");
        }

        const UniversalityResult ur = is_universal(f);
        require(ur.universal == testsupport::oracle_universal(f, max_u, max_v),
                name + ": universality verdict must match the oracle");
        if (!ur.universal && ur.counterexample)
            require(!accepts(f, ur.counterexample->prefix, ur.counterexample->period),
                    name + ": universality counterexample must be rejected");

        require(is_contained(f, f).contained, name + ": containment must be reflexive");
        require(is_equal(f, f), name + ": equality must be reflexive");
    }
    require(saw_trap, "the loopless-period trap must be among the oracle instances");

    // cross-fixture relations, against the same enumeration oracle
    const Fdfa s = eventually_constant_family();
    const Fdfa sc = complement(s);
    const Fdfa trap = testsupport::trap_family();
    const Fdfa all = testsupport::all_accepting_family();
    const Fdfa none = testsupport::none_accepting_family();
    const Fdfa inf_a = dba_to_fdfa(testsupport::inf_a_dba());
    const Fdfa fin_a = dca_to_fdfa(testsupport::fin_a_dca());
    const std::vector<std::pair<const Fdfa*, const Fdfa*>> rel = {
        {&s, &all}, {&none, &s},     {&trap, &none},  {&all, &s},
        {&s, &sc},  {&inf_a, &fin_a}, {&fin_a, &inf_a}, {&inf_a, &all},
    };
    for (const auto& [lhs, rhs] : rel) {
        const std::size_t max_u =
            std::max(testsupport::emptiness_u_bound(*lhs), testsupport::emptiness_u_bound(*rhs));
        const std::size_t max_v =
            std::max(testsupport::emptiness_v_bound(*lhs), testsupport::emptiness_v_bound(*rhs));
        const ContainmentResult cr = is_contained(*lhs, *rhs);
        require(cr.contained == testsupport::oracle_contained(*lhs, *rhs, max_u, max_v),
                "containment verdict must match the oracle");
        if (!cr.contained && cr.witness)
            require(accepts(*lhs, cr.witness->prefix, cr.witness->period) &&
                        !accepts(*rhs, cr.witness->prefix, cr.witness->period),
                    "containment witness must separate the families");
    }
    require(is_equal(trap, none), "the trap denotes the empty language");
    require(is_equal(dba_to_fdfa(testsupport::all_dba()), dpa_to_fdfa(testsupport::parity1_odd_dpa())),
            "two universal acceptors must translate to equal families");
    require(!is_equal(s, sc), "a family never equals its complement here");
}

void criterion_translations() {
    struct Det {
        std::string name;
        Automaton automaton;
        Acceptance acceptance;
        Fdfa family;
        FdfaSize want;
    };
    std::vector<Det> fixtures;
    auto add_dba = [&](const char* name, const Dba& d) {
        fixtures.push_back({name, d.automaton, BuchiStates{d.accepting}, dba_to_fdfa(d),
                            {d.automaton.state_count(), 2 * d.automaton.state_count()}});
    };
    auto add_dca = [&](const char* name, const Dca& d) {
        fixtures.push_back({name, d.automaton, CoBuchiStates{d.accepting}, dca_to_fdfa(d),
                            {d.automaton.state_count(), 2 * d.automaton.state_count()}});
    };
    auto add_dpa = [&](const char* name, const Dpa& d) {
        fixtures.push_back({name, d.automaton, d.colors, dpa_to_fdfa(d),
                            {d.automaton.state_count(),
                             std::size_t(d.colors.max_color()) * d.automaton.state_count()}});
    };
    add_dba("dba:inf-a", testsupport::inf_a_dba());
    add_dca("dca:fin-a", testsupport::fin_a_dca());
    add_dba("dba:ab-factor", testsupport::ab_factor_dba());
    add_dba("dba:all", testsupport::all_dba());
    add_dba("dba:none", testsupport::none_dba());
    add_dpa("dpa:odd", testsupport::parity1_odd_dpa());
    add_dpa("dpa:even", testsupport::parity1_even_dpa());
    add_dpa("dpa:two", testsupport::parity2_dpa());
    add_dpa("dpa:three", testsupport::parity3_dpa());
    require(fixtures.size() >= 6, "need at least six deterministic fixtures");

    for (const Det& d : fixtures) {
        require(size(d.family) == d.want, d.name + ": translation size is pinned");
        testsupport::for_each_pair(2, 3, 3, [&](const Word& u, const Word& v) {
            require(accepts(d.family, u, v) == det_accepts_up(d.automaton, d.acceptance, u, v),
                    d.name + ": family and acceptor must agree");
        });
        require(check_saturation_bounded(d.family, 3, 3).verdict !=
                    SaturationVerdict::unsaturated,
                d.name + ": translated family must be saturated");
    }
}

void criterion_buchi() {
    // the advertised bound holds for every fixture
    for (const auto& [name, f] : all_families()) {
        const FdfaSize s = size(f);
        const std::size_t n = s.leading_states;
        const std::size_t k = s.max_progress_states;
        const Nba b = fdfa_to_nba(f);
        require(b.automaton.state_count() <= n * k * (n + n * k * k),
                name + ": automaton must stay inside the size bound");
    }

    // query agreement and component closure on the consistent fixtures
    std::vector<NamedFdfa> consistent;
    consistent.push_back({"eventually-constant", eventually_constant_family()});
    consistent.push_back({"ln2", gen_ln(2).family});
    for (auto& nf : testsupport::translated_families())
        consistent.push_back(std::move(nf));

    for (const auto& [name, f] : consistent) {
        const Nba b = fdfa_to_nba(f);
        testsupport::for_each_pair(f.leading.alphabet().size(), 3, 3,
                                   [&](const Word& u, const Word& v) {
                                       require(nba_accepts_up(b, u, v) == accepts(f, u, v),
                                               name + ": automaton must agree with the family");
                                   });

        const std::vector<Word> words =
            testsupport::words_up_to(f.leading.alphabet().size(), 4, true);
        for (State q = 0; q < f.leading.state_count(); ++q) {
            const Dfa m = build_mq(f, q).dfa;
            std::vector<Word> in_m;
            for (const Word& w : words)
                if (dfa_has(m, w))
                    in_m.push_back(w);
            for (State fst : f.progress[q].accepting) {
                const Dfa nq = build_nqf(f, q, fst).dfa;
                std::vector<Word> in_n;
                for (const Word& w : words)
                    if (dfa_has(nq, w))
                        in_n.push_back(w);
                for (const Word& m_word : in_m)
                    for (const Word& n_word : in_n)
                        require(dfa_has(m, cat(m_word, n_word)),
                                name + ": M N must stay inside M");
                for (const Word& first : in_n)
                    for (const Word& second : in_n)
                        require(dfa_has(nq, cat(first, second)),
                                name + ": N N must stay inside N");
            }
        }
    }
}

void criterion_generated_families() {
    for (std::size_t n = 1; n <= 6; ++n)
        require(size(gen_ln(n).family) == FdfaSize{n + 1, n * n},
                "letter family " + std::to_string(n) + " must have the pinned size");

    auto letters = [](std::initializer_list<std::size_t> values) {
        Word w;
        for (std::size_t v : values)
            w.push_back(v - 1);
        return w;
    };
    const Fdfa l4 = gen_ln(4).family;
    const Word u4 = letters({2, 3, 3, 1});
    const Word v4 = letters({2, 2, 3, 4, 3, 2, 3, 3});
    require(accepts(l4, u4, v4) && ln_semantic_member(4, u4, v4),
            "the four-letter family must accept the worked example");
    const Fdfa l3 = gen_ln(3).family;
    const Word u3 = letters({1});
    const Word v3 = letters({2, 3, 3});
    require(!accepts(l3, u3, v3) && !ln_semantic_member(3, u3, v3),
            "the three-letter family must reject the worked example");

    for (std::size_t n : {std::size_t(2), std::size_t(3), std::size_t(4)}) {
        const Fdfa family = gen_ln(n).family;
        testsupport::for_each_pair(n, 3, 4, [&](const Word& u, const Word& v) {
            require(accepts(family, u, v) == ln_semantic_member(n, u, v),
                    "letter family " + std::to_string(n) + " must match its semantic rule");
        });
    }
}

void criterion_resplitting() {
    const std::vector<NamedFdfa> families = all_families();
    std::mt19937 rng(402317);
    std::size_t checked_pairs = 0;
    while (checked_pairs < 500) {
        const auto& [name, f] = families[checked_pairs % families.size()];
        std::uniform_int_distribution<std::size_t> pick_symbol(0, f.leading.alphabet().size() - 1);
        std::uniform_int_distribution<std::size_t> pick_u_len(0, 4);
        std::uniform_int_distribution<std::size_t> pick_v_len(1, 4);
        Word u(pick_u_len(rng));
        for (Symbol& s : u)
            s = pick_symbol(rng);
        Word v(pick_v_len(rng));
        for (Symbol& s : v)
            s = pick_symbol(rng);

        const NormalizedPair np = normalize(f.leading, u, v);
        for (std::size_t i = 0; i <= 2; ++i) {
            for (std::size_t j = 1; j <= 2; ++j) {
                for (std::size_t cut = 0; cut <= np.y.size(); ++cut) {
                    const Word head(np.y.begin(), np.y.begin() + cut);
                    const Word tail(np.y.begin() + cut, np.y.end());
                    const Word prefix2 = cat(cat(np.x, times(np.y, i)), head);
                    const Word period2 = times(cat(tail, head), j);
                    const NormalizedPair again = normalize(f.leading, prefix2, period2);
                    require(again.prefix_power == 0 && again.period_power == 1 &&
                                again.x == prefix2 && again.y == period2,
                            name + ": a re-split of a normalized pair must normalize to itself");
                }
            }
        }
        ++checked_pairs;
    }
}

void criterion_cli() {
    const std::string cli = cli_bin();

    // byte-stable round trips: complementing twice echoes the document
    for (const auto& [name, f] : all_families()) {
        const std::string text = fingerprint(f);
        const std::string path = write_file(name, text);
        const CliRun validated = sh(cli + " validate " + path);
        require(validated.code == 0, name + ": validate must accept the document");
        const CliRun round = sh(cli + " complement " + path + " | " + cli + " complement");
        require(round.code == 0, name + ": complement pipeline must succeed");
        require(round.out == text, name + ": round trip must be byte stable");
    }

    // exit codes: 0 accepted, 1 rejected, 2 bad input, 3 refused budget
    const std::string u_path = write_file("two-spelling", fingerprint(unsaturated_example()));
    require(sh(cli + " member " + u_path + " --u b --v a").code == 0,
            "membership must exit zero on acceptance");
    require(sh(cli + " member " + u_path + " --u ba --v aa 2>/dev/null").code == 1,
            "membership must exit one on rejection");
    require(sh(cli + " --help").code == 0, "--help must exit zero");
    require(sh(cli + " 2>/dev/null").code == 2, "a missing subcommand is a usage error");
    const std::string garbage = write_file("garbage", "not a document");
    require(sh(cli + " size " + garbage + " 2>/dev/null").code == 2,
            "an unparsable document is a data error");
    const std::string s_path = write_file("constant", fingerprint(eventually_constant_family()));
    require(sh(cli + " saturated --exact --budget 1 " + s_path + " 2>/dev/null").code == 3,
            "an exhausted budget must exit three");

    const std::string nba_path =
        write_file("nba", serialize(make_document(fdfa_to_nba(eventually_constant_family()))));
    const CliRun from_nba = sh(cli + " from-nba " + nba_path + " 2>&1");
    require(from_nba.code == 2, "from-nba must report a usage error");
    require(from_nba.out.find("unsupported") != std::string::npos &&
                from_nba.out.find("out of scope") != std::string::npos,
            "from-nba must explain why it is unavailable");
}

struct Criterion {
    const char* label;
    double budget_seconds;
    std::function<void()> body;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"stock families answer membership, normalization, and saturation", 1.0,
         criterion_membership_and_saturation},
        {"complement flips every verdict and preserves size", 10.0, criterion_complement},
        {"products multiply sizes and answer pointwise on saturated inputs", 30.0,
         criterion_products},
        {"decision procedures agree with enumeration oracles", 30.0, criterion_decision_oracles},
        {"deterministic acceptors translate at the advertised sizes", 30.0,
         criterion_translations},
        {"the Buchi construction stays in budget and agrees on queries", 60.0, criterion_buchi},
        {"generated families match their semantic rule", 60.0, criterion_generated_families},
        {"normalized pairs survive re-splitting", 10.0, criterion_resplitting},
        {"the command line round-trips documents and honors exit codes", 5.0, criterion_cli},
    };

    bool all_ok = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Criterion& c = criteria[i];
        const auto start = std::chrono::steady_clock::now();
        std::string failure;
        try {
            c.body();
        } catch (const std::exception& e) {
            failure = e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2fs of %.0fs", elapsed, c.budget_seconds);
        if (failure.empty() && elapsed > c.budget_seconds)
            failure = "exceeded the runtime budget";
        if (failure.empty()) {
            std::cout << "PASS criterion " << i + 1 << ": " << c.label << " (" << timing << ")\n";
        } else {
            std::cout << "FAIL criterion " << i + 1 << ": " << c.label << " (" << timing
                      << ") -- " << failure << "\n";
            all_ok = false;
        }
    }
    return all_ok ? 0 : 1;
}
