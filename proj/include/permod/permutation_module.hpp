#pragma once

#include <string>
#include <vector>

#include "permod/anyon_model.hpp"
#include "permod/braid.hpp"
#include "permod/group_action.hpp"

namespace permod {

/// The module action word of one <g>-orbit: factors ordered by decreasing
/// powers of g applied to the base point, followed by the module slot M.
struct ActionWord {
    Orbit orbit;
    std::vector<int> factor_order;   // [x0, g^-1 x0, ..., g^{-n+1} x0]
};

ActionWord action_word(const PermutationAction& action, const Perm& g, const Orbit& orbit);

/// The shuffle associator psi for an orbit of size n, as a braid word on the
/// 2n+1 slots A0 B0 A1 B1 ... M (Ak, Bk standing for the factors at
/// g^-k x0). Moves every B over the A with larger exponent: for l from n-2
/// down to 0 and k from l+1 to n-1, one positive crossing of B_l past A_k.
struct ShuffleAssociator {
    int n = 0;
    CabledBraidWord word;
};

ShuffleAssociator associator(int n);

/// Slot-name helpers shared by the psi / gamma word constructors.
std::vector<std::string> slot_names(const std::string& prefix, int n);

/// Emit psi's crossings into `b`: every b-group passes over every a-group
/// with larger index. Groups are lists of cable names treated as one block.
void emit_shuffle(WordBuilder& b, const std::vector<std::vector<std::string>>& a_groups,
                  const std::vector<std::vector<std::string>>& b_groups);

/// Word-level inverse of emit_shuffle.
void emit_unshuffle(WordBuilder& b, const std::vector<std::vector<std::string>>& a_groups,
                    const std::vector<std::vector<std::string>>& b_groups);

/// Componentwise braiding of C^X: for each l, u_groups[l] crosses
/// v_groups[l] (positive: u over v; negative: the inverse braiding).
void emit_componentwise(WordBuilder& b, const std::vector<std::vector<std::string>>& u_groups,
                        const std::vector<std::vector<std::string>>& v_groups, int sign);

/// Mixed pentagon residual for orbit size n: compares
/// (id_A (x) psi_{B,C,M}) o psi_{A,B(x)C,M} against
/// psi_{A,B,C(x)M} o psi_{A(x)B,C,M} on the given simple assignment.
/// a,b,c have n entries each.
double module_pentagon_check(const AnyonModel& model, int n, const std::vector<int>& a,
                             const std::vector<int>& b, const std::vector<int>& c, int m);

/// Wrapper that validates the orbit against g before checking.
double module_pentagon_check(const AnyonModel& model, const PermutationAction& action,
                             const Perm& g, const Orbit& orbit, const std::vector<int>& a,
                             const std::vector<int>& b, const std::vector<int>& c, int m);

/// psi with one family of slots set to the unit label must evaluate to the
/// identity. `others` has n entries for the remaining family.
double unit_check(const AnyonModel& model, int n, bool a_slots_unit,
                  const std::vector<int>& others, int m);

/// Checks of the neutral component: the factor permutation action squares
/// to the identity on multi-indices, and braiding of multi-index objects is
/// the product of componentwise R-data.
CheckReport neutral_structure_check(const AnyonModel& model, const PermutationAction& action);

} // namespace permod
