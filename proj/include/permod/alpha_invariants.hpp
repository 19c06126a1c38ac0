#pragma once

#include <vector>

#include "permod/anyon_model.hpp"
#include "permod/braid.hpp"
#include "permod/group_action.hpp"
#include "permod/permutation_module.hpp"

namespace permod {

/// Module functor constraint gamma^{U,+-}_{V,M} of alpha-induction:
/// psi_{V,U,M} o (c^{+-1}_{U,V} (x) id_M) o psi^{-1}_{U,V,M}, as a braid
/// word on the slots U0..U_{n-1} V0..V_{n-1} M.
struct ModuleFunctorConstraint {
    int kind = +1;                 // +1 for gamma^+, -1 for gamma^-
    std::vector<int> u_labels;
    std::vector<int> v_labels;
    CabledBraidWord word;
};

ModuleFunctorConstraint gamma_constraint(const AnyonModel& model, int n, int kind,
                                         const std::vector<int>& u,
                                         const std::vector<int>& v);
ModuleFunctorConstraint gamma_constraint(const AnyonModel& model,
                                         const PermutationAction& action, const Perm& g,
                                         const Orbit& orbit, int kind,
                                         const std::vector<int>& u, const std::vector<int>& v);

SectorMatrix evaluate_gamma_constraint(const AnyonModel& model,
                                       const ModuleFunctorConstraint& gc, int m);

/// The natural transformation Gamma_M : alpha^+(U)(M) -> alpha^-(gU)(M):
/// cable U0 crosses the remaining U-cable, then takes a full monodromy with
/// M. Slots U0..U_{n-1} M.
struct GammaTransform {
    int n = 0;
    std::vector<int> u_labels;
    CabledBraidWord word;
};

GammaTransform gamma_transform(int n, const std::vector<int>& u);
GammaTransform gamma_transform(const AnyonModel& model, const PermutationAction& action,
                               const Perm& g, const Orbit& orbit, const std::vector<int>& u);

SectorMatrix evaluate_gamma_transform(const AnyonModel& model, const GammaTransform& gt, int m);

/// Residual of the naturality equation tying Gamma to the module functor
/// constraints: [id_V (x) Gamma_M] o gamma^{U,+}_{V,M} against
/// gamma^{gU,-}_{V,M} o Gamma_{V (x) M}, evaluated on simple labels.
double check_gamma_naturality(const AnyonModel& model, int n, const std::vector<int>& u,
                              const std::vector<int>& v, int m);
double check_gamma_naturality(const AnyonModel& model, const PermutationAction& action,
                              const Perm& g, const Orbit& orbit, const std::vector<int>& u,
                              const std::vector<int>& v, int m);

/// Smallest singular value of Gamma over all sectors (invertibility of the
/// natural transformation).
double gamma_min_singular(const AnyonModel& model, int n, const std::vector<int>& u, int m);

/// The regrouping endomorphism F of the induction step: conjugated
/// monodromy of U^-2 with V^-1, with V^0 and the U-tail moved aside.
/// Requires n >= 3. Slots U0..U_{n-1} V0..V_{n-1} M.
CabledBraidWord induction_f_word(int n);

/// Residuals of L^n o F against the merged-cable L^{n-1}, and likewise for
/// R^n; returns the larger of the two.
double induction_step_check(const AnyonModel& model, int n, const std::vector<int>& u,
                            const std::vector<int>& v, int m);

/// The permutation modular invariant: Z_{i,j} = 1 iff the multi-index j
/// equals i permuted by g, with (g i)_x = i_{g^-1 x}.
struct ZMatrix {
    int x_size = 0;
    int n_labels = 0;
    std::vector<long long> perm;     // row rank -> the column holding the 1

    long long dim() const { return static_cast<long long>(perm.size()); }
    int entry(long long i, long long j) const { return perm[i] == j ? 1 : 0; }
    Eigen::MatrixXcd dense() const;
};

ZMatrix z_matrix(const PermutationAction& action, const Perm& g, int n_labels);

/// Z composed with a labelwise permutation of I; the negative control for
/// the modular invariance check.
ZMatrix compose_label_permutation(const ZMatrix& z, const std::vector<int>& label_perm);

struct ModularInvarianceReport {
    double s_commutator = 0.0;
    double t_commutator = 0.0;
    bool vacuum_ok = false;

    double residual() const { return std::max(s_commutator, t_commutator); }
};

/// Commutators of Z with the Kronecker powers of S and T, plus the vacuum
/// coupling Z_{1,1} = 1.
ModularInvarianceReport check_modular_invariance(const AnyonModel& model, const ZMatrix& z);

/// Rank of a multi-index (most significant digit first) and its inverse.
long long multi_index_rank(const std::vector<int>& digits, int base);
std::vector<int> multi_index_digits(long long rank, int length, int base);

} // namespace permod
