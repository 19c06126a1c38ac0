#pragma once

#include <vector>

#include "permod/anyon_model.hpp"

namespace permod {

/// All left-canonical fusion trees for a word of simple labels with a fixed
/// total charge. A tree is the sequence of internal charges E1..E_{k-1}
/// (E_{k-1} equals the total), listed in lexicographic order of label
/// indices. For a single-strand word the tree list holds one empty tree
/// when word[0] == total.
struct FusionTreeBasis {
    std::vector<int> word;
    int total = 0;
    std::vector<std::vector<int>> trees;

    int dim() const { return static_cast<int>(trees.size()); }
};

FusionTreeBasis tree_basis(const AnyonModel& model, const std::vector<int>& word, int total);

/// Index of a tree in the (sorted) basis, or -1.
int tree_index(const FusionTreeBasis& basis, const std::vector<int>& tree);

/// Total charges with a non-empty tree basis, ascending.
std::vector<int> sectors(const AnyonModel& model, const std::vector<int>& word);

} // namespace permod
