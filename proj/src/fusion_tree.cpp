#include "permod/fusion_tree.hpp"

#include <algorithm>

namespace permod {

FusionTreeBasis tree_basis(const AnyonModel& model, const std::vector<int>& word, int total) {
    if (word.empty()) throw Error("tree_basis: empty word");
    for (int a : word)
        if (a < 0 || a >= model.n_labels()) throw Error("tree_basis: label out of range");
    if (total < 0 || total >= model.n_labels())
        throw Error("tree_basis: total charge out of range");
    FusionTreeBasis basis;
    basis.word = word;
    basis.total = total;
    const int k = static_cast<int>(word.size());
    if (k == 1) {
        if (word[0] == total) basis.trees.push_back({});
        return basis;
    }
    // Depth-first over E1..E_{k-1}; channels() lists labels ascending, so
    // the output is lexicographically sorted.
    std::vector<int> tree(k - 1);
    auto rec = [&](auto&& self, int pos, int prev) -> void {
        if (pos == k - 1) {
            if (prev == total) basis.trees.push_back(tree);
            return;
        }
        for (int e : model.channels(prev, word[pos + 1])) {
            if (pos == k - 2 && e != total) continue;
            tree[pos] = e;
            self(self, pos + 1, e);
        }
    };
    rec(rec, 0, word[0]);
    return basis;
}

int tree_index(const FusionTreeBasis& basis, const std::vector<int>& tree) {
    auto it = std::lower_bound(basis.trees.begin(), basis.trees.end(), tree);
    if (it == basis.trees.end() || *it != tree) return -1;
    return static_cast<int>(it - basis.trees.begin());
}

std::vector<int> sectors(const AnyonModel& model, const std::vector<int>& word) {
    std::vector<int> result;
    for (int c = 0; c < model.n_labels(); ++c)
        if (tree_basis(model, word, c).dim() > 0) result.push_back(c);
    return result;
}

} // namespace permod
