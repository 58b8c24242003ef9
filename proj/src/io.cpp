#include "fdfa/io.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"

namespace fdfa {
namespace {

using nlohmann::ordered_json;

struct KindEntry {
    DocKind kind;
    const char* name;
};
constexpr KindEntry kKinds[] = {
    {DocKind::fdfa, "fdfa"}, {DocKind::dfa, "dfa"}, {DocKind::dba, "dba"},
    {DocKind::dca, "dca"},   {DocKind::dpa, "dpa"}, {DocKind::nba, "nba"},
};

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError(where.empty() ? what : where + ": " + what);
}

const ordered_json& field(const ordered_json& obj, const std::string& where, const char* key) {
    if (!obj.is_object())
        fail(where, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end())
        fail(where, std::string("missing field '") + key + "'");
    return *it;
}

std::size_t state_number(const ordered_json& j, const std::string& where, std::size_t states) {
    if (!j.is_number_unsigned() || j.get<std::size_t>() >= states)
        fail(where, "expected a state index below " + std::to_string(states));
    return j.get<std::size_t>();
}

Alphabet parse_alphabet(const ordered_json& j, const std::string& where) {
    if (!j.is_array())
        fail(where, "expected a list of symbol names");
    std::vector<std::string> names;
    names.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_string())
            fail(where + "[" + std::to_string(i) + "]", "expected a string");
        names.push_back(j[i].get<std::string>());
    }
    try {
        return Alphabet(std::move(names));
    } catch (const std::invalid_argument& e) {
        fail(where, e.what());
    }
}

Automaton parse_automaton(const ordered_json& j, const Alphabet& alpha, const std::string& where) {
    if (!j.is_object())
        fail(where, "expected an object");
    const auto& states_j = field(j, where, "states");
    if (!states_j.is_number_unsigned() || states_j.get<std::size_t>() == 0)
        fail(where + ".states", "expected a positive state count");
    const std::size_t states = states_j.get<std::size_t>();
    const State initial = state_number(field(j, where, "initial"), where + ".initial", states);

    Automaton a(alpha, states, initial);
    const auto& rows = field(j, where, "transitions");
    if (!rows.is_array())
        fail(where + ".transitions", "expected a list of [from, symbol, to...] rows");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::string rw = where + ".transitions[" + std::to_string(i) + "]";
        const auto& row = rows[i];
        if (!row.is_array() || row.size() < 3)
            fail(rw, "expected [from, symbol, to...] with at least one target");
        const State from = state_number(row[0], rw, states);
        if (!row[1].is_string())
            fail(rw, "expected a symbol name in position 1");
        const std::string sym_name = row[1].get<std::string>();
        const auto sym = alpha.index_of(sym_name);
        if (!sym)
            fail(rw, "unknown symbol '" + sym_name + "'");
        for (std::size_t t = 2; t < row.size(); ++t)
            a.add_edge(from, *sym, state_number(row[t], rw, states));
    }
    return a;
}

std::set<State> parse_state_set(const ordered_json& j, const std::string& where, std::size_t states) {
    if (!j.is_array())
        fail(where, "expected a list of states");
    std::set<State> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.insert(state_number(j[i], where + "[" + std::to_string(i) + "]", states));
    return out;
}

void require_det_complete(const Automaton& a, const std::string& where) {
    for (State s = 0; s < a.state_count(); ++s) {
        for (Symbol sig = 0; sig < a.alphabet().size(); ++sig) {
            const std::size_t count = a.successors(s, sig).size();
            if (count > 1)
                fail(where, "nondeterministic transition from state " + std::to_string(s) +
                                " on symbol '" + a.alphabet().name(sig) + "'");
            if (count == 0)
                fail(where, "missing transition from state " + std::to_string(s) +
                                " on symbol '" + a.alphabet().name(sig) + "'");
        }
    }
}

Document parse_fdfa(const ordered_json& j, const Alphabet& alpha) {
    Automaton leading = parse_automaton(field(j, "", "leading"), alpha, "leading");
    require_det_complete(leading, "leading");

    const auto& progress_j = field(j, "", "progress");
    if (!progress_j.is_array())
        fail("progress", "expected a list of automata");
    if (progress_j.size() != leading.state_count())
        fail("progress", "expected " + std::to_string(leading.state_count()) +
                             " automata, one per leading state, found " +
                             std::to_string(progress_j.size()));
    std::vector<Dfa> progress;
    progress.reserve(progress_j.size());
    for (std::size_t i = 0; i < progress_j.size(); ++i) {
        const std::string where = "progress[" + std::to_string(i) + "]";
        Automaton a = parse_automaton(progress_j[i], alpha, where);
        require_det_complete(a, where);
        auto acc = parse_state_set(field(progress_j[i], where, "accepting"),
                                   where + ".accepting", a.state_count());
        progress.push_back(Dfa{std::move(a), std::move(acc)});
    }

    Fdfa f{std::move(leading), std::move(progress)};
    const auto problems = validate(f);
    if (!problems.empty())
        fail("", problems.front());
    return Document{DocKind::fdfa, std::move(f)};
}

ordered_json automaton_json(const Automaton& a) {
    ordered_json j = ordered_json::object();
    j["states"] = a.state_count();
    j["initial"] = a.initial();
    ordered_json rows = ordered_json::array();
    for (State s = 0; s < a.state_count(); ++s) {
        for (Symbol sig = 0; sig < a.alphabet().size(); ++sig) {
            const auto& succ = a.successors(s, sig);
            if (succ.empty())
                continue;
            ordered_json row = ordered_json::array();
            row.push_back(s);
            row.push_back(a.alphabet().name(sig));
            for (State t : succ)
                row.push_back(t);
            rows.push_back(std::move(row));
        }
    }
    j["transitions"] = std::move(rows);
    return j;
}

ordered_json set_json(const std::set<State>& states) {
    ordered_json out = ordered_json::array();
    for (State s : states)
        out.push_back(s);
    return out;
}

ordered_json alphabet_json(const Alphabet& a) {
    ordered_json out = ordered_json::array();
    for (std::size_t i = 0; i < a.size(); ++i)
        out.push_back(a.name(i));
    return out;
}

void merge_automaton(ordered_json& doc, const Automaton& a) {
    ordered_json body = automaton_json(a);
    doc["states"] = body["states"];
    doc["initial"] = body["initial"];
    doc["transitions"] = std::move(body["transitions"]);
}

}  // namespace

const char* kind_name(DocKind kind) {
    for (const auto& entry : kKinds)
        if (entry.kind == kind)
            return entry.name;
    throw std::invalid_argument("unknown document kind");
}

Document parse_document(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("syntax error: ") + e.what());
    }
    if (!j.is_object())
        fail("", "expected a document object");
    const auto& kind_j = field(j, "", "kind");
    if (!kind_j.is_string())
        fail("kind", "expected a string");
    const std::string kind_text = kind_j.get<std::string>();
    const KindEntry* entry = nullptr;
    for (const auto& k : kKinds)
        if (kind_text == k.name)
            entry = &k;
    if (entry == nullptr)
        fail("kind", "unknown kind '" + kind_text + "'");

    Alphabet alpha = parse_alphabet(field(j, "", "alphabet"), "alphabet");
    if (entry->kind == DocKind::fdfa)
        return parse_fdfa(j, alpha);

    Automaton a = parse_automaton(j, alpha, "");
    if (entry->kind != DocKind::nba)
        require_det_complete(a, "");

    switch (entry->kind) {
        case DocKind::dfa: {
            auto acc = parse_state_set(field(j, "", "accepting"), "accepting", a.state_count());
            return Document{DocKind::dfa, Dfa{std::move(a), std::move(acc)}};
        }
        case DocKind::dba: {
            auto acc = parse_state_set(field(j, "", "accepting"), "accepting", a.state_count());
            return Document{DocKind::dba, Dba{std::move(a), std::move(acc)}};
        }
        case DocKind::dca: {
            auto acc = parse_state_set(field(j, "", "accepting"), "accepting", a.state_count());
            return Document{DocKind::dca, Dca{std::move(a), std::move(acc)}};
        }
        case DocKind::dpa: {
            const auto& colors_j = field(j, "", "colors");
            if (!colors_j.is_array() || colors_j.size() != a.state_count())
                fail("colors", "expected one color per state");
            ParityColors colors;
            for (std::size_t i = 0; i < colors_j.size(); ++i) {
                const std::string where = "colors[" + std::to_string(i) + "]";
                if (!colors_j[i].is_number_integer() || colors_j[i].get<int>() < 1)
                    fail(where, "expected a color of at least 1");
                colors.colors.push_back(colors_j[i].get<int>());
            }
            return Document{DocKind::dpa, Dpa{std::move(a), std::move(colors)}};
        }
        case DocKind::nba: {
            auto acc = parse_state_set(field(j, "", "accepting"), "accepting", a.state_count());
            return Document{DocKind::nba, Nba{std::move(a), std::move(acc)}};
        }
        default:
            fail("kind", "unknown document kind");
    }
}

Document parse_document(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str());
}

std::string serialize(const Document& doc) {
    ordered_json j = ordered_json::object();
    j["kind"] = kind_name(doc.kind);

    std::visit(
        [&](const auto& body) {
            using T = std::decay_t<decltype(body)>;
            if constexpr (std::is_same_v<T, Fdfa>) {
                j["alphabet"] = alphabet_json(body.leading.alphabet());
                j["leading"] = automaton_json(body.leading);
                ordered_json progress = ordered_json::array();
                for (const Dfa& p : body.progress) {
                    ordered_json pj = automaton_json(p.automaton);
                    pj["accepting"] = set_json(p.accepting);
                    progress.push_back(std::move(pj));
                }
                j["progress"] = std::move(progress);
            } else if constexpr (std::is_same_v<T, Dpa>) {
                j["alphabet"] = alphabet_json(body.automaton.alphabet());
                merge_automaton(j, body.automaton);
                j["colors"] = body.colors.colors;
            } else {
                j["alphabet"] = alphabet_json(body.automaton.alphabet());
                merge_automaton(j, body.automaton);
                j["accepting"] = set_json(body.accepting);
            }
        },
        doc.body);

    return j.dump(2) + "\n";
}

Document make_document(Fdfa f) { return Document{DocKind::fdfa, std::move(f)}; }
Document make_document(Dfa d) { return Document{DocKind::dfa, std::move(d)}; }
Document make_document(Dba d) { return Document{DocKind::dba, std::move(d)}; }
Document make_document(Dca d) { return Document{DocKind::dca, std::move(d)}; }
Document make_document(Dpa d) { return Document{DocKind::dpa, std::move(d)}; }
Document make_document(Nba b) { return Document{DocKind::nba, std::move(b)}; }

Word parse_word(const Alphabet& a, const std::string& text) {
    Word out;
    if (text.empty())
        return out;
    if (text.find(',') != std::string::npos) {
        std::size_t start = 0;
        while (start <= text.size()) {
            const std::size_t comma = text.find(',', start);
            const std::size_t end = comma == std::string::npos ? text.size() : comma;
            const std::string token = text.substr(start, end - start);
            if (token.empty())
                throw ParseError("empty symbol in word '" + text + "'");
            const auto sym = a.index_of(token);
            if (!sym)
                throw ParseError("unknown symbol '" + token + "' in word '" + text + "'");
            out.push_back(*sym);
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
        return out;
    }
    if (const auto whole = a.index_of(text)) {
        out.push_back(*whole);
        return out;
    }
    for (char c : text) {
        const auto sym = a.index_of(std::string(1, c));
        if (!sym)
            throw ParseError("unknown symbol '" + std::string(1, c) + "' in word '" + text + "'");
        out.push_back(*sym);
    }
    return out;
}

std::string format_word(const Alphabet& a, const Word& w) {
    bool single = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.name(i).size() != 1) {
            single = false;
            break;
        }
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] >= a.size())
            throw std::invalid_argument("symbol out of range");
        if (!single && i != 0)
            out += ',';
        out += a.name(w[i]);
    }
    return out;
}

}  // namespace fdfa
