#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>

#include "fdfa/automaton.hpp"
#include "fdfa/fdfa.hpp"

namespace fdfa {

enum class DocKind { fdfa, dfa, dba, dca, dpa, nba };

const char* kind_name(DocKind kind);

// Self-describing container for everything the tools read and write. The
// serialized form is JSON with fields kind, alphabet, states, initial,
// transitions ([from, symbol, to...] rows), and the acceptance field of the
// kind ("accepting", or "colors" for parity); the fdfa kind instead nests
// "leading" and a "progress" list ordered by leading state.
struct Document {
    DocKind kind;
    std::variant<Fdfa, Dfa, Dba, Dca, Dpa, Nba> body;
};

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Parsing validates everything: deterministic and complete automata for all
// kinds except nba, colors covering every state, symbols known by name.
// Errors carry the offending field.
Document parse_document(const std::string& text);
Document parse_document(std::istream& in);

// Deterministic layout: two-space indent, fixed key order, sorted transition
// rows, trailing newline. parse(serialize(x)) is the identity and
// serialize(parse(t)) is byte-stable.
std::string serialize(const Document& doc);

Document make_document(Fdfa f);
Document make_document(Dfa d);
Document make_document(Dba d);
Document make_document(Dca d);
Document make_document(Dpa d);
Document make_document(Nba b);

// Word syntax in flags and reports: single-character symbol names are
// concatenated ("abba"), anything else is comma-separated ("2,3,3,1" also
// works for single characters). Empty text is the empty word.
Word parse_word(const Alphabet& a, const std::string& text);
std::string format_word(const Alphabet& a, const Word& w);

}  // namespace fdfa
