#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fdfa {

using Symbol = std::size_t;
using State = std::size_t;
using Word = std::vector<Symbol>;

// Ordered list of distinct printable symbol names. Words and transition
// tables refer to symbols by their dense index into this list.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> names);

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(Symbol s) const;
    std::optional<Symbol> index_of(std::string_view name) const;
    const std::vector<std::string>& names() const noexcept { return names_; }

    bool operator==(const Alphabet&) const = default;

private:
    std::vector<std::string> names_;
};

}  // namespace fdfa
