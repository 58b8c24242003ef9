#include "fdfa/alphabet.hpp"

#include <stdexcept>
#include <unordered_set>

namespace fdfa {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty())
        throw std::invalid_argument("alphabet must contain at least one symbol");
    std::unordered_set<std::string_view> seen;
    for (const auto& n : names_) {
        if (n.empty())
            throw std::invalid_argument("alphabet symbol names must be nonempty");
        if (!seen.insert(n).second)
            throw std::invalid_argument("duplicate alphabet symbol '" + n + "'");
    }
}

const std::string& Alphabet::name(Symbol s) const {
    if (s >= names_.size())
        throw std::invalid_argument("symbol index " + std::to_string(s) +
                                    " outside alphabet of size " + std::to_string(names_.size()));
    return names_[s];
}

std::optional<Symbol> Alphabet::index_of(std::string_view name) const {
    for (Symbol i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

}  // namespace fdfa
