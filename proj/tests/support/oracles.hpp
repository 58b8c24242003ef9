#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "fdfa/fdfa.hpp"

namespace testsupport {

// Enumeration twins of the decision procedures. Everything here is driven by
// accepts() on explicit word pairs, so a bug in the product or witness-search
// machinery cannot hide in these as well.

// All words of length <= max_len over symbols [0, alphabet_size), shortest
// first, words of equal length in symbol order.
std::vector<fdfa::Word> words_up_to(std::size_t alphabet_size, std::size_t max_len,
                                    bool include_empty);

// Calls fn(u, v) for every |u| <= max_u (empty included) and 1 <= |v| <= max_v,
// in the enumeration order of words_up_to.
void for_each_pair(std::size_t alphabet_size, std::size_t max_u, std::size_t max_v,
                   const std::function<void(const fdfa::Word&, const fdfa::Word&)>& fn);

// First accepted pair in enumeration order, if any.
std::optional<fdfa::UpWord> oracle_accepted_pair(const fdfa::Fdfa& f, std::size_t max_u,
                                                 std::size_t max_v);

bool oracle_empty(const fdfa::Fdfa& f, std::size_t max_u, std::size_t max_v);
bool oracle_universal(const fdfa::Fdfa& f, std::size_t max_u, std::size_t max_v);
bool oracle_contained(const fdfa::Fdfa& f1, const fdfa::Fdfa& f2, std::size_t max_u,
                      std::size_t max_v);

// Bounds that make the enumeration exhaustive for emptiness questions about
// f: reaching any leading state takes at most n letters, and closing an
// accepting loop takes at most n * k letters because the loop search walks a
// product with n * k states.
std::size_t emptiness_u_bound(const fdfa::Fdfa& f);
std::size_t emptiness_v_bound(const fdfa::Fdfa& f);

}  // namespace testsupport
