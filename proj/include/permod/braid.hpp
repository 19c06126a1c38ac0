#pragma once

#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "permod/anyon_model.hpp"
#include "permod/fusion_tree.hpp"

namespace permod {

/// A parallel bundle of strands. Each strand is a named slot to be assigned
/// a simple label; cables may be empty (zero strands).
struct Cable {
    std::string name;
    std::vector<std::string> slots;

    int strands() const { return static_cast<int>(slots.size()); }
};

/// Crossing of adjacent cables pos and pos+1. Positive sign: the left cable
/// passes over the right one (the braiding c, with R-data as given);
/// negative: the left cable passes under (the inverse braiding).
struct CableCrossing {
    int pos = 0;
    int sign = +1;
};

/// A morphism between two orderings of a word of cables, as a sequence of
/// cable crossings read left to right in application order.
struct CabledBraidWord {
    std::vector<Cable> cables;
    std::vector<CableCrossing> crossings;

    /// Checks positions stay in range while tracking the cable permutation.
    void validate() const;
    /// Cable order after all crossings, as indices into `cables`.
    std::vector<int> final_cable_order() const;
};

using Assignment = std::map<std::string, int>;

/// Cable crossings expanded to elementary strand crossings. An m-strand
/// cable passing an n-strand cable yields m*n crossings of the same sign.
struct ElementaryWord {
    std::vector<int> word;                  // strand labels, source order
    std::vector<CableCrossing> crossings;   // strand-level
};

ElementaryWord expand(const CabledBraidWord& word, const Assignment& assignment);

/// Numeric realization of a braid morphism: one complex block per
/// total-charge sector, mapping source tree coordinates to target tree
/// coordinates.
struct SectorMatrix {
    std::vector<int> source_word;
    std::vector<int> target_word;
    std::map<int, Eigen::MatrixXcd> blocks;

    /// nxt applied after this; requires target_word == nxt.source_word.
    SectorMatrix then(const SectorMatrix& nxt) const;
    bool is_identity(double tol = kDefaultTol) const;
    double max_unitarity_defect() const;
    double min_singular_value() const;
};

SectorMatrix sector_identity(const AnyonModel& model, const std::vector<int>& word);

/// Largest entrywise difference across sectors; throws on shape mismatch.
double max_abs_diff(const SectorMatrix& a, const SectorMatrix& b);

/// The elementary braiding of strands i and i+1 (0-based, 0 <= i <= k-2) on
/// a word of simple labels, in the left-canonical tree bases: the standard
/// F^-1 R F move. Sign -1 gives the inverse crossing.
SectorMatrix braid_generator(const AnyonModel& model, const std::vector<int>& word, int i,
                             int sign);

/// braid_generator restricted to one total charge.
Eigen::MatrixXcd braid_generator_block(const AnyonModel& model, const std::vector<int>& word,
                                       int i, int sign, int total);

/// Evaluate a cabled braid word under an assignment of labels to slots.
SectorMatrix evaluate(const AnyonModel& model, const CabledBraidWord& word,
                      const Assignment& assignment);

/// Incrementally builds a CabledBraidWord, tracking the current cable order
/// so crossings can be requested by cable name.
class WordBuilder {
public:
    explicit WordBuilder(std::vector<Cable> cables);

    int position_of(const std::string& cable_name) const;
    /// Crossing of the named cables, which must be adjacent in that order.
    void cross(const std::string& left, const std::string& right, int sign);
    /// Block crossing: the contiguous left group passes the contiguous
    /// right group, strand by strand.
    void cross_groups(const std::vector<std::string>& left, const std::vector<std::string>& right,
                      int sign);
    /// Names in current order.
    std::vector<std::string> current_order() const;

    CabledBraidWord take();

private:
    CabledBraidWord word_;
    std::vector<int> order_;
    void check_contiguous(const std::vector<std::string>& group) const;
};

} // namespace permod
