#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "permod/error.hpp"

namespace permod {

/// A permutation of {0..n-1}, stored as the image array: p[x] is where x goes.
using Perm = std::vector<int>;

Perm identity_perm(int n);
bool is_permutation(const Perm& p);

/// Product g1*g2 applies g2 first, then g1 (function composition).
/// This convention is fixed globally; cover boundaries and Z depend on it.
Perm compose(const Perm& g1, const Perm& g2);
Perm inverse(const Perm& p);
Perm perm_power(const Perm& p, long long k);

/// An ordered finite set X together with named generating permutations.
/// The order of x_labels is the total order on X and never changes.
struct PermutationAction {
    std::vector<std::string> x_labels;
    std::vector<std::pair<std::string, Perm>> generators;

    int size() const { return static_cast<int>(x_labels.size()); }
    const Perm* find_generator(const std::string& name) const;
    void validate() const;
};

/// An orbit of a subgroup acting on X. elements.front() is the base point,
/// always the smallest member. For a single generator g the traversal order
/// is x0, g^-1 x0, g^-2 x0, ... so that module action words read off directly.
struct Orbit {
    std::vector<int> elements;

    int base_point() const { return elements.front(); }
    int size() const { return static_cast<int>(elements.size()); }
    bool contains(int x) const;
};

/// One connected component of the cover of the three-holed sphere with
/// boundary monodromies g1, g2 and (g1*g2)^-1, identified with a
/// <g1,g2>-orbit. boundaries_k lists the cyclic-subgroup orbits lying over
/// the k-th boundary circle.
struct CoverComponent {
    Orbit orbit;
    int sheets = 0;
    std::vector<Orbit> boundaries_1;
    std::vector<Orbit> boundaries_2;
    std::vector<Orbit> boundaries_3;
    int genus = 0;

    int boundary_count() const {
        return static_cast<int>(boundaries_1.size() + boundaries_2.size() + boundaries_3.size());
    }
};

/// Closure of the generators in the symmetric group on X, sorted
/// lexicographically. Throws once more than `cap` elements are produced.
std::vector<Perm> enumerate_group(const PermutationAction& action, std::size_t cap = 1000000);

/// Partition of {0..n_points-1} into orbits of the group generated by `gens`,
/// sorted by base point.
std::vector<Orbit> orbits(int n_points, const std::vector<Perm>& gens);
std::vector<Orbit> orbits(const PermutationAction& action, const std::vector<Perm>& gens);

/// Components of the cover E_{g1;g2} with sheet, boundary and genus data.
/// Genus comes from the Euler characteristic: chi = -sheets for a cover of
/// the three-holed sphere, and chi = 2 - 2 genus - #boundaries.
std::vector<CoverComponent> cover_components(const PermutationAction& action,
                                             const Perm& g1, const Perm& g2);

/// Summary of the explicitly built CW-complex for one component (see
/// cw_cover_summary below). Kept separate from CoverComponent so the two
/// computations share no code.
struct CwSummary {
    int sheets = 0;
    int vertices = 0;
    int edges = 0;
    int faces = 0;
    int boundary_circles_1 = 0;
    int boundary_circles_2 = 0;
    int boundary_circles_3 = 0;
    int genus = 0;
};

/// Independent check of cover_components: cut the three-holed sphere along
/// two arcs, lift the resulting polygon sheet-by-sheet, glue the cut edges
/// with the monodromies, walk the boundary circles, cap them with disks and
/// count cells of the closed surface.
CwSummary cw_cover_summary(const PermutationAction& action, const Perm& g1, const Perm& g2,
                           const Orbit& orbit);

/// Genus of the closed-up component, from the CW construction.
int genus_oracle(const PermutationAction& action, const Perm& g1, const Perm& g2,
                 const Orbit& orbit);

/// Number of connected components of the full CW complex over all of X.
int cw_component_count(const PermutationAction& action, const Perm& g1, const Perm& g2);

} // namespace permod
