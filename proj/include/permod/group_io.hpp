#pragma once

#include <string>

#include "permod/group_action.hpp"

namespace permod {

/// A parsed group file: the action plus named elements given as words in
/// the generators.
struct GroupFile {
    PermutationAction action;
    std::vector<std::pair<std::string, std::string>> elements;   // name -> word

    /// Resolve a named element or a word such as "r*t^-1". The identity is
    /// written "1". The right factor of a product acts first.
    Perm resolve(const std::string& name_or_word) const;
};

/// Load a group document (JSON): keys x, generators, elements (optional).
GroupFile load_group(const std::string& text);
GroupFile load_group_file(const std::string& path);

/// Parse a word in the generators of `action` ("r*t", "r^-2", "1").
Perm parse_group_word(const PermutationAction& action, const std::string& word);

} // namespace permod
