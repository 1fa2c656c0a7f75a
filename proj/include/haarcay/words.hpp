#pragma once

#include <string_view>

#include "haarcay/group.hpp"

namespace haarcay {

/// Evaluates a word in the named generators of `h`.
///
/// Accepted forms: "1" (identity), letters optionally followed by an
/// exponent ("a", "a-1", "a^-1", "ab2", "ab^3"), and uppercase letters for
/// inverses ("A" = a^-1). Multi-character labels are not supported.
/// Throws PreconditionError on unknown letters or malformed input.
Element evaluate_word(const GroupTable& h, std::string_view word);

/// Comma-separated list of words, e.g. "1,a,a-1,b,ab".
ElementSet parse_word_set(const GroupTable& h, std::string_view words);

/// Shortest word for x in the generators (breadth-first over the Cayley
/// graph with generators and their inverses); "1" for the identity.
std::string word_for(const GroupTable& h, Element x);

}  // namespace haarcay
