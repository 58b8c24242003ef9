#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fdfa/algebra.hpp"
#include "fdfa/families.hpp"
#include "fdfa/fdfa.hpp"
#include "fdfa/io.hpp"
#include "fdfa/translations.hpp"
#include "fdfa/up_word.hpp"

using namespace fdfa;

namespace {

using nlohmann::ordered_json;

// Thrown for user-facing failures; `code` becomes the process exit code.
struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void usage_error(std::string message) { throw CliError{2, std::move(message)}; }

std::string read_input(const std::string& path) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            usage_error("cannot open '" + path + "'");
        buffer << in.rdbuf();
    }
    return buffer.str();
}

Document load(const std::string& path) {
    try {
        return parse_document(read_input(path));
    } catch (const ParseError& e) {
        usage_error("'" + path + "': " + e.what());
    }
}

Fdfa load_fdfa(const std::string& path) {
    Document doc = load(path);
    if (doc.kind != DocKind::fdfa)
        usage_error("'" + path + "': expected an fdfa document, found '" +
                    kind_name(doc.kind) + "'");
    return std::get<Fdfa>(std::move(doc.body));
}

std::string show_word(const Alphabet& a, const Word& w) {
    std::string s = format_word(a, w);
    return s.empty() ? "(empty)" : s;
}

std::string show_pair(const Alphabet& a, const Word& x, const Word& y) {
    return "(" + show_word(a, x) + ", " + show_word(a, y) + ")";
}

ordered_json pair_json(const Alphabet& a, const Word& x, const Word& y) {
    ordered_json j = ordered_json::object();
    j["prefix"] = format_word(a, x);
    j["period"] = format_word(a, y);
    return j;
}

void emit_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

void check(bool verified) {
    if (!verified)
        throw std::logic_error("witness failed re-verification");
}

struct WordPairArgs {
    std::string file = "-";
    std::string u;
    std::string v;
};

struct TwoFileArgs {
    std::string first;
    std::string second;
    bool full = false;
};

struct SaturationArgs {
    std::string file = "-";
    bool exact = false;
    std::size_t max_u = 3;
    std::size_t max_v = 3;
    std::size_t budget = ExactBudget{}.max_transform_pairs;
};

Word parse_flag_word(const Alphabet& a, const std::string& text, const char* flag) {
    try {
        return parse_word(a, text);
    } catch (const ParseError& e) {
        usage_error(std::string(flag) + ": " + e.what());
    }
}

std::pair<Word, Word> parse_pair(const Alphabet& a, const WordPairArgs& args) {
    Word u = parse_flag_word(a, args.u, "--u");
    Word v = parse_flag_word(a, args.v, "--v");
    if (v.empty())
        usage_error("--v must name a nonempty period");
    return {std::move(u), std::move(v)};
}

int cmd_normalize(const WordPairArgs& args, bool json) {
    Fdfa f = load_fdfa(args.file);
    const Alphabet& a = f.leading.alphabet();
    auto [u, v] = parse_pair(a, args);
    NormalizedPair np = normalize(f.leading, u, v);
    if (json) {
        ordered_json j = ordered_json::object();
        j["command"] = "normalize";
        j["prefix"] = format_word(a, np.x);
        j["period"] = format_word(a, np.y);
        j["prefix_power"] = np.prefix_power;
        j["period_power"] = np.period_power;
        emit_json(j);
    } else {
        std::cout << "normalized: " << show_pair(a, np.x, np.y) << "\n";
    }
    return 0;
}

int cmd_member(const WordPairArgs& args, bool json) {
    Fdfa f = load_fdfa(args.file);
    const Alphabet& a = f.leading.alphabet();
    auto [u, v] = parse_pair(a, args);
    const bool accepted = accepts(f, u, v);
    NormalizedPair np = normalize(f.leading, u, v);
    if (json) {
        ordered_json j = ordered_json::object();
        j["command"] = "member";
        j["accepted"] = accepted;
        j["normalized"] = pair_json(a, np.x, np.y);
        emit_json(j);
    } else {
        std::cout << (accepted ? "accepted" : "rejected") << "\n";
        std::cout << "normalized: " << show_pair(a, np.x, np.y) << "\n";
    }
    return accepted ? 0 : 1;
}

int cmd_complement(const std::string& file) {
    std::cout << serialize(make_document(complement(load_fdfa(file))));
    return 0;
}

int cmd_combine(const TwoFileArgs& args, bool unite_them) {
    Fdfa f1 = load_fdfa(args.first);
    Fdfa f2 = load_fdfa(args.second);
    std::cerr << "note: the pairwise " << (unite_them ? "union" : "intersection")
              << " matches the language-level operation only when both inputs classify"
                 " spellings of the same infinite word consistently\n";
    Fdfa out = unite_them ? unite(f1, f2, args.full) : intersect(f1, f2, args.full);
    std::cout << serialize(make_document(std::move(out)));
    return 0;
}

int cmd_empty(const std::string& file, bool json) {
    Fdfa f = load_fdfa(file);
    const Alphabet& a = f.leading.alphabet();
    EmptinessResult r = is_empty(f);
    if (!r.empty)
        check(accepts(f, r.witness->x, r.witness->y));
    if (json) {
        ordered_json j = ordered_json::object();
        j["command"] = "empty";
        j["empty"] = r.empty;
        j["witness"] = r.empty ? ordered_json() : pair_json(a, r.witness->x, r.witness->y);
        emit_json(j);
    } else if (r.empty) {
        std::cout << "empty\n";
    } else {
        std::cout << "nonempty\n";
        std::cout << "witness: " << show_pair(a, r.witness->x, r.witness->y) << "\n";
    }
    return r.empty ? 0 : 1;
}

int cmd_universal(const std::string& file, bool json) {
    Fdfa f = load_fdfa(file);
    const Alphabet& a = f.leading.alphabet();
    UniversalityResult r = is_universal(f);
    if (!r.universal && r.counterexample)
        check(!accepts(f, r.counterexample->prefix, r.counterexample->period));
    if (json) {
        ordered_json j = ordered_json::object();
        j["command"] = "universal";
        j["universal"] = r.universal;
        j["counterexample"] = r.counterexample
                                  ? pair_json(a, r.counterexample->prefix, r.counterexample->period)
                                  : ordered_json();
        emit_json(j);
    } else if (r.universal) {
        std::cout << "universal\n";
    } else {
        std::cout << "not universal\n";
        if (r.counterexample)
            std::cout << "counterexample: "
                      << show_pair(a, r.counterexample->prefix, r.counterexample->period) << "\n";
    }
    return r.universal ? 0 : 1;
}

int cmd_contains(const TwoFileArgs& args, bool json) {
    Fdfa outer = load_fdfa(args.first);
    Fdfa inner = load_fdfa(args.second);
    ContainmentResult r = is_contained(inner, outer);
    const Alphabet& a = outer.leading.alphabet();
    if (!r.contained && r.witness)
        check(accepts(inner, r.witness->prefix, r.witness->period) &&
              !accepts(outer, r.witness->prefix, r.witness->period));
    if (json) {
        ordered_json j = ordered_json::object();
        j["command"] = "contains";
        j["contains"] = r.contained;
        j["witness"] =
            r.witness ? pair_json(a, r.witness->prefix, r.witness->period) : ordered_json();
        emit_json(j);
    } else if (r.contained) {
        std::cout << "contains\n";
    } else {
        std::cout << "does not contain\n";
        if (r.witness)
            std::cout << "witness only in second: "
                      << show_pair(a, r.witness->prefix, r.witness->period) << "\n";
    }
    return r.contained ? 0 : 1;
}

int cmd_equal(const TwoFileArgs& args, bool json) {
    Fdfa f1 = load_fdfa(args.first);
    Fdfa f2 = load_fdfa(args.second);
    const Alphabet& a = f1.leading.alphabet();
    ContainmentResult fwd = is_contained(f1, f2);
    ContainmentResult bwd = is_contained(f2, f1);
    const bool equal = fwd.contained && bwd.contained;
    const ContainmentResult& broken = fwd.contained ? bwd : fwd;
    if (!equal && broken.witness) {
        const Fdfa& in_side = fwd.contained ? f2 : f1;
        const Fdfa& out_side = fwd.contained ? f1 : f2;
        check(accepts(in_side, broken.witness->prefix, broken.witness->period) &&
              !accepts(out_side, broken.witness->prefix, broken.witness->period));
    }
    if (json) {
        ordered_json j = ordered_json::object();
        j["command"] = "equal";
        j["equal"] = equal;
        j["witness"] = !equal && broken.witness
                           ? pair_json(a, broken.witness->prefix, broken.witness->period)
                           : ordered_json();
        j["witness_side"] = equal ? ordered_json() : ordered_json(fwd.contained ? "second" : "first");
        emit_json(j);
    } else if (equal) {
        std::cout << "equal\n";
    } else {
        std::cout << "not equal\n";
        if (broken.witness)
            std::cout << "witness only in " << (fwd.contained ? "second" : "first") << ": "
                      << show_pair(a, broken.witness->prefix, broken.witness->period) << "\n";
    }
    return equal ? 0 : 1;
}

int cmd_saturated(const SaturationArgs& args, bool json) {
    Fdfa f = load_fdfa(args.file);
    const Alphabet& a = f.leading.alphabet();
    SaturationReport report = args.exact
                                  ? check_saturation_exact(f, ExactBudget{args.budget})
                                  : check_saturation_bounded(f, args.max_u, args.max_v);
    const bool bad = report.verdict == SaturationVerdict::unsaturated;
    if (bad) {
        const auto& [acc, rej] = *report.counterexample;
        check(up_equal(acc, rej));
        check(accepts(f, acc.prefix, acc.period) && !accepts(f, rej.prefix, rej.period));
    }
    if (json) {
        ordered_json j = ordered_json::object();
        j["command"] = "saturated";
        j["verdict"] = bad ? "unsaturated"
                           : (report.verdict == SaturationVerdict::saturated_exact
                                  ? "saturated"
                                  : "saturated-up-to-bound");
        j["bound"] = report.bound_used;
        j["accepted"] = bad ? pair_json(a, report.counterexample->first.prefix,
                                        report.counterexample->first.period)
                            : ordered_json();
        j["rejected"] = bad ? pair_json(a, report.counterexample->second.prefix,
                                        report.counterexample->second.period)
                            : ordered_json();
        emit_json(j);
    } else if (bad) {
        std::cout << "unsaturated\n";
        std::cout << "accepted spelling: "
                  << show_pair(a, report.counterexample->first.prefix,
                               report.counterexample->first.period)
                  << "\n";
        std::cout << "rejected spelling: "
                  << show_pair(a, report.counterexample->second.prefix,
                               report.counterexample->second.period)
                  << "\n";
    } else {
        std::cout << (report.verdict == SaturationVerdict::saturated_exact
                          ? "saturated"
                          : "saturated up to the bound")
                  << "\n";
        std::cout << "checked: " << report.bound_used << "\n";
    }
    return bad ? 1 : 0;
}

int cmd_to_nba(const std::string& file) {
    Fdfa f = load_fdfa(file);
    std::cerr << "note: the automaton recognizes the family's language only when the"
                 " family classifies spellings of the same infinite word consistently\n";
    std::cout << serialize(make_document(fdfa_to_nba(f)));
    return 0;
}

int cmd_from(const std::string& file, DocKind want) {
    Document doc = load(file);
    if (doc.kind != want)
        usage_error("'" + file + "': expected a " + kind_name(want) + " document, found '" +
                    kind_name(doc.kind) + "'");
    Fdfa out = want == DocKind::dba   ? dba_to_fdfa(std::get<Dba>(doc.body))
               : want == DocKind::dca ? dca_to_fdfa(std::get<Dca>(doc.body))
                                      : dpa_to_fdfa(std::get<Dpa>(doc.body));
    std::cout << serialize(make_document(std::move(out)));
    return 0;
}

int cmd_gen_ln(std::size_t n) {
    std::cout << serialize(make_document(gen_ln(n).family));
    return 0;
}

const std::vector<std::pair<std::string, Fdfa (*)()>>& fixture_table() {
    static const std::vector<std::pair<std::string, Fdfa (*)()>> table = {
        {"unsaturated", unsaturated_example},
        {"eventually-constant", eventually_constant_family},
    };
    return table;
}

int cmd_fixtures(const std::string& name, bool json) {
    if (name.empty()) {
        if (json) {
            ordered_json j = ordered_json::object();
            j["command"] = "fixtures";
            ordered_json names = ordered_json::array();
            for (const auto& [fixture_name, make] : fixture_table())
                names.push_back(fixture_name);
            j["names"] = std::move(names);
            emit_json(j);
        } else {
            for (const auto& [fixture_name, make] : fixture_table())
                std::cout << fixture_name << "\n";
        }
        return 0;
    }
    for (const auto& [fixture_name, make] : fixture_table()) {
        if (fixture_name == name) {
            std::cout << serialize(make_document(make()));
            return 0;
        }
    }
    usage_error("unknown fixture '" + name + "'");
}

int cmd_canonical(const std::string& alphabet_text, const std::string& u_text,
                  const std::string& v_text, bool json) {
    std::vector<std::string> names;
    std::size_t start = 0;
    while (start <= alphabet_text.size()) {
        const std::size_t comma = alphabet_text.find(',', start);
        const std::size_t end = comma == std::string::npos ? alphabet_text.size() : comma;
        names.push_back(alphabet_text.substr(start, end - start));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    std::unique_ptr<Alphabet> a;
    try {
        a = std::make_unique<Alphabet>(std::move(names));
    } catch (const std::invalid_argument& e) {
        usage_error(std::string("--alphabet: ") + e.what());
    }
    Word u = parse_flag_word(*a, u_text, "--u");
    Word v = parse_flag_word(*a, v_text, "--v");
    if (v.empty())
        usage_error("--v must name a nonempty period");
    UpWord c = canonicalize(UpWord{std::move(u), std::move(v)});
    if (json) {
        ordered_json j = ordered_json::object();
        j["command"] = "canonical";
        j["prefix"] = format_word(*a, c.prefix);
        j["period"] = format_word(*a, c.period);
        emit_json(j);
    } else {
        std::cout << "canonical: " << show_pair(*a, c.prefix, c.period) << "\n";
    }
    return 0;
}

int cmd_validate(const std::string& file, bool json) {
    load(file);
    if (json) {
        ordered_json j = ordered_json::object();
        j["command"] = "validate";
        j["ok"] = true;
        emit_json(j);
    } else {
        std::cout << "ok\n";
    }
    return 0;
}

int cmd_nba_member(const WordPairArgs& args, bool json) {
    Document doc = load(args.file);
    if (doc.kind != DocKind::nba)
        usage_error("'" + args.file + "': expected an nba document, found '" +
                    kind_name(doc.kind) + "'");
    const Nba& b = std::get<Nba>(doc.body);
    auto [u, v] = parse_pair(b.automaton.alphabet(), args);
    const bool accepted = nba_accepts_up(b, u, v);
    if (json) {
        ordered_json j = ordered_json::object();
        j["command"] = "nba-member";
        j["accepted"] = accepted;
        emit_json(j);
    } else {
        std::cout << (accepted ? "accepted" : "rejected") << "\n";
    }
    return accepted ? 0 : 1;
}

int cmd_size(const std::string& file, bool json) {
    Fdfa f = load_fdfa(file);
    FdfaSize s = size(f);
    if (json) {
        ordered_json j = ordered_json::object();
        j["command"] = "size";
        j["leading"] = s.leading_states;
        j["progress"] = s.max_progress_states;
        emit_json(j);
    } else {
        std::cout << "(" << s.leading_states << ", " << s.max_progress_states << ")\n";
    }
    return 0;
}

int run(int argc, char** argv) {
    CLI::App app{"families of DFAs denoting languages of infinite words"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "machine-readable reports");
    int code = 0;

    auto add = [&](const char* name, const char* help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        return sub;
    };
    auto add_pair_flags = [](CLI::App* sub, std::shared_ptr<WordPairArgs> args) {
        sub->add_option("file", args->file, "input document, '-' for stdin");
        sub->add_option("--u", args->u, "finite prefix (may be empty)");
        sub->add_option("--v", args->v, "nonempty period");
    };

    {
        auto args = std::make_shared<WordPairArgs>();
        CLI::App* sub = add("normalize", "rewrite (u, v) so the period loops on a leading state");
        add_pair_flags(sub, args);
        sub->callback([&, args] { code = cmd_normalize(*args, json); });
    }
    {
        auto args = std::make_shared<WordPairArgs>();
        CLI::App* sub = add("member", "does the family accept the word u v v v ...");
        add_pair_flags(sub, args);
        sub->callback([&, args] { code = cmd_member(*args, json); });
    }
    {
        auto file = std::make_shared<std::string>("-");
        CLI::App* sub = add("complement", "flip every progress acceptance set");
        sub->add_option("file", *file, "fdfa document, '-' for stdin");
        sub->callback([&, file] { code = cmd_complement(*file); });
    }
    for (const char* name : {"union", "intersect"}) {
        const bool unite_them = std::string(name) == "union";
        auto args = std::make_shared<TwoFileArgs>();
        CLI::App* sub = add(name, unite_them ? "pairwise union of two families"
                                             : "pairwise intersection of two families");
        sub->add_option("first", args->first, "fdfa document")->required();
        sub->add_option("second", args->second, "fdfa document")->required();
        sub->add_flag("--full", args->full, "materialize the full product, not just the reachable part");
        sub->callback([&, args, unite_them] { code = cmd_combine(*args, unite_them); });
    }
    {
        auto file = std::make_shared<std::string>("-");
        CLI::App* sub = add("empty", "is no pair accepted");
        sub->add_option("file", *file, "fdfa document, '-' for stdin");
        sub->callback([&, file] { code = cmd_empty(*file, json); });
    }
    {
        auto file = std::make_shared<std::string>("-");
        CLI::App* sub = add("universal", "is every pair accepted");
        sub->add_option("file", *file, "fdfa document, '-' for stdin");
        sub->callback([&, file] { code = cmd_universal(*file, json); });
    }
    {
        auto args = std::make_shared<TwoFileArgs>();
        CLI::App* sub = add("contains", "does the first language include the second");
        sub->add_option("first", args->first, "fdfa document")->required();
        sub->add_option("second", args->second, "fdfa document")->required();
        sub->callback([&, args] { code = cmd_contains(*args, json); });
    }
    {
        auto args = std::make_shared<TwoFileArgs>();
        CLI::App* sub = add("equal", "do both families denote the same language");
        sub->add_option("first", args->first, "fdfa document")->required();
        sub->add_option("second", args->second, "fdfa document")->required();
        sub->callback([&, args] { code = cmd_equal(*args, json); });
    }
    {
        auto args = std::make_shared<SaturationArgs>();
        CLI::App* sub = add("saturated", "does acceptance depend only on the infinite word");
        sub->add_option("file", args->file, "fdfa document, '-' for stdin");
        sub->add_flag("--exact", args->exact, "decide exactly instead of scanning bounded pairs");
        sub->add_option("--max-u", args->max_u, "prefix length bound for the scan");
        sub->add_option("--max-v", args->max_v, "period length bound for the scan");
        sub->add_option("--budget", args->budget, "class-pair budget for --exact");
        sub->callback([&, args] { code = cmd_saturated(*args, json); });
    }
    {
        auto file = std::make_shared<std::string>("-");
        CLI::App* sub = add("to-nba", "Buchi automaton for the family's language");
        sub->add_option("file", *file, "fdfa document, '-' for stdin");
        sub->callback([&, file] { code = cmd_to_nba(*file); });
    }
    for (const char* name : {"from-dba", "from-dca", "from-dpa"}) {
        const DocKind want = std::string(name) == "from-dba"   ? DocKind::dba
                             : std::string(name) == "from-dca" ? DocKind::dca
                                                               : DocKind::dpa;
        auto file = std::make_shared<std::string>("-");
        CLI::App* sub = add(name, "equivalent family for a deterministic acceptor");
        sub->add_option("file", *file, "input document, '-' for stdin");
        sub->callback([&, file, want] { code = cmd_from(*file, want); });
    }
    {
        auto file = std::make_shared<std::string>("-");
        CLI::App* sub = add("from-nba", "not available");
        sub->add_option("file", *file, "input document, '-' for stdin");
        sub->callback([&, file] {
            (void)file;
            usage_error("unsupported: building a family from a Buchi automaton requires"
                        " determinization, which is out of scope for this tool");
        });
    }
    {
        auto n = std::make_shared<std::size_t>(0);
        CLI::App* sub = add("gen-ln", "generated family over {1..N} with odd infinite-letter count");
        sub->add_option("n", *n, "positive letter count")->required();
        sub->callback([&, n] { code = cmd_gen_ln(*n); });
    }
    {
        auto name = std::make_shared<std::string>();
        CLI::App* sub = add("fixtures", "list built-in families, or print one by name");
        sub->add_option("name", *name, "fixture name");
        sub->callback([&, name] { code = cmd_fixtures(*name, json); });
    }
    {
        auto args = std::make_shared<std::vector<std::string>>(3);
        CLI::App* sub = add("canonical", "shortest spelling of the infinite word u v v v ...");
        sub->add_option("--alphabet", (*args)[0], "comma-separated symbol names")->required();
        sub->add_option("--u", (*args)[1], "finite prefix (may be empty)");
        sub->add_option("--v", (*args)[2], "nonempty period");
        sub->callback([&, args] { code = cmd_canonical((*args)[0], (*args)[1], (*args)[2], json); });
    }
    {
        auto file = std::make_shared<std::string>("-");
        CLI::App* sub = add("validate", "parse a document and check its invariants");
        sub->add_option("file", *file, "input document, '-' for stdin");
        sub->callback([&, file] { code = cmd_validate(*file, json); });
    }
    {
        auto args = std::make_shared<WordPairArgs>();
        CLI::App* sub = add("nba-member", "does the Buchi automaton accept u v v v ...");
        add_pair_flags(sub, args);
        sub->callback([&, args] { code = cmd_nba_member(*args, json); });
    }
    {
        auto file = std::make_shared<std::string>("-");
        CLI::App* sub = add("size", "(leading states, largest progress automaton)");
        sub->add_option("file", *file, "fdfa document, '-' for stdin");
        sub->callback([&, file] { code = cmd_size(*file, json); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int parse_code = app.exit(e);
        return parse_code == 0 ? 0 : 2;
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
