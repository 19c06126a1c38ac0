#include "permod/alpha_invariants.hpp"

#include <algorithm>

namespace permod {

namespace {

std::vector<std::vector<std::string>> singleton_groups(const std::vector<std::string>& names) {
    std::vector<std::vector<std::string>> groups;
    for (const std::string& s : names) groups.push_back({s});
    return groups;
}

Assignment uv_assignment(int n, const std::vector<int>& u, const std::vector<int>& v, int m) {
    Assignment asg;
    for (int l = 0; l < n; ++l) {
        asg["U" + std::to_string(l)] = u[l];
        asg["V" + std::to_string(l)] = v[l];
    }
    asg["M"] = m;
    return asg;
}

void check_multi(const AnyonModel& model, const std::vector<int>& labels, int n,
                 const char* what) {
    if (static_cast<int>(labels.size()) != n)
        throw Error(std::string(what) + ": multi-index has wrong length");
    for (int a : labels)
        if (a < 0 || a >= model.n_labels())
            throw Error(std::string(what) + ": label out of range");
}

/// Gamma's crossings: the front cable passes the remaining u-cables, then a
/// full monodromy with the m-group.
void emit_gamma(WordBuilder& b, const std::vector<std::string>& u_cables,
                const std::vector<std::string>& m_group) {
    const std::string& head = u_cables.front();
    for (std::size_t k = 1; k < u_cables.size(); ++k) b.cross(head, u_cables[k], +1);
    b.cross_groups({head}, m_group, +1);
    b.cross_groups(m_group, {head}, +1);
}

/// Cable names of the merged variant: U0, U12 (two strands), U3, ...
struct SlotPlan {
    std::vector<Cable> cables;                       // U-cables, V-cables, M
    std::vector<std::string> u_names, v_names;       // per-cable, word order
    std::vector<std::vector<std::string>> u_groups, v_groups;
};

SlotPlan make_plan(int n, bool merged) {
    SlotPlan plan;
    auto add = [&](const std::string& prefix, std::vector<std::string>& names) {
        if (!merged) {
            for (const std::string& s : slot_names(prefix, n)) {
                plan.cables.push_back({s, {s}});
                names.push_back(s);
            }
            return;
        }
        plan.cables.push_back({prefix + "0", {prefix + "0"}});
        names.push_back(prefix + "0");
        plan.cables.push_back({prefix + "12", {prefix + "1", prefix + "2"}});
        names.push_back(prefix + "12");
        for (int l = 3; l < n; ++l) {
            const std::string s = prefix + std::to_string(l);
            plan.cables.push_back({s, {s}});
            names.push_back(s);
        }
    };
    add("U", plan.u_names);
    add("V", plan.v_names);
    plan.cables.push_back({"M", {"M"}});
    plan.u_groups = singleton_groups(plan.u_names);
    plan.v_groups = singleton_groups(plan.v_names);
    return plan;
}

/// The twisted word gU lists the cables as U^-1 ... U^-n+1 U^0.
std::vector<std::string> twist_names(const std::vector<std::string>& names) {
    std::vector<std::string> t(names.begin() + 1, names.end());
    t.push_back(names.front());
    return t;
}

/// Left side of the naturality equation, as one braid word.
CabledBraidWord build_l_word(int n, bool merged) {
    SlotPlan plan = make_plan(n, merged);
    WordBuilder b(plan.cables);
    emit_unshuffle(b, plan.u_groups, plan.v_groups);
    emit_componentwise(b, plan.u_groups, plan.v_groups, +1);
    emit_shuffle(b, plan.v_groups, plan.u_groups);
    emit_gamma(b, plan.u_names, {"M"});
    return b.take();
}

/// Right side of the naturality equation.
CabledBraidWord build_r_word(int n, bool merged) {
    SlotPlan plan = make_plan(n, merged);
    WordBuilder b(plan.cables);
    std::vector<std::string> vm = plan.v_names;
    vm.push_back("M");
    emit_gamma(b, plan.u_names, vm);
    const std::vector<std::string> gu = twist_names(plan.u_names);
    const std::vector<std::vector<std::string>> gu_groups = singleton_groups(gu);
    emit_unshuffle(b, gu_groups, plan.v_groups);
    emit_componentwise(b, gu_groups, plan.v_groups, -1);
    emit_shuffle(b, plan.v_groups, gu_groups);
    return b.take();
}

} // namespace

ModuleFunctorConstraint gamma_constraint(const AnyonModel& model, int n, int kind,
                                         const std::vector<int>& u, const std::vector<int>& v) {
    if (kind != 1 && kind != -1) throw Error("gamma_constraint: kind must be +1 or -1");
    check_multi(model, u, n, "gamma_constraint");
    check_multi(model, v, n, "gamma_constraint");
    SlotPlan plan = make_plan(n, false);
    WordBuilder b(plan.cables);
    emit_unshuffle(b, plan.u_groups, plan.v_groups);
    emit_componentwise(b, plan.u_groups, plan.v_groups, kind);
    emit_shuffle(b, plan.v_groups, plan.u_groups);
    return {kind, u, v, b.take()};
}

ModuleFunctorConstraint gamma_constraint(const AnyonModel& model,
                                         const PermutationAction& action, const Perm& g,
                                         const Orbit& orbit, int kind,
                                         const std::vector<int>& u, const std::vector<int>& v) {
    action_word(action, g, orbit);
    return gamma_constraint(model, orbit.size(), kind, u, v);
}

SectorMatrix evaluate_gamma_constraint(const AnyonModel& model,
                                       const ModuleFunctorConstraint& gc, int m) {
    const int n = static_cast<int>(gc.u_labels.size());
    return evaluate(model, gc.word, uv_assignment(n, gc.u_labels, gc.v_labels, m));
}

GammaTransform gamma_transform(int n, const std::vector<int>& u) {
    if (n < 1) throw Error("gamma_transform: n must be positive");
    if (static_cast<int>(u.size()) != n)
        throw Error("gamma_transform: multi-index has wrong length");
    std::vector<Cable> cables;
    const std::vector<std::string> names = slot_names("U", n);
    for (const std::string& s : names) cables.push_back({s, {s}});
    cables.push_back({"M", {"M"}});
    WordBuilder b(std::move(cables));
    emit_gamma(b, names, {"M"});
    return {n, u, b.take()};
}

GammaTransform gamma_transform(const AnyonModel& model, const PermutationAction& action,
                               const Perm& g, const Orbit& orbit, const std::vector<int>& u) {
    (void)model;
    action_word(action, g, orbit);
    return gamma_transform(orbit.size(), u);
}

SectorMatrix evaluate_gamma_transform(const AnyonModel& model, const GammaTransform& gt, int m) {
    Assignment asg;
    for (int l = 0; l < gt.n; ++l) asg["U" + std::to_string(l)] = gt.u_labels[l];
    asg["M"] = m;
    return evaluate(model, gt.word, asg);
}

double check_gamma_naturality(const AnyonModel& model, int n, const std::vector<int>& u,
                              const std::vector<int>& v, int m) {
    check_multi(model, u, n, "check_gamma_naturality");
    check_multi(model, v, n, "check_gamma_naturality");
    const Assignment asg = uv_assignment(n, u, v, m);
    const SectorMatrix lhs = evaluate(model, build_l_word(n, false), asg);
    const SectorMatrix rhs = evaluate(model, build_r_word(n, false), asg);
    return max_abs_diff(lhs, rhs);
}

double check_gamma_naturality(const AnyonModel& model, const PermutationAction& action,
                              const Perm& g, const Orbit& orbit, const std::vector<int>& u,
                              const std::vector<int>& v, int m) {
    action_word(action, g, orbit);
    return check_gamma_naturality(model, orbit.size(), u, v, m);
}

double gamma_min_singular(const AnyonModel& model, int n, const std::vector<int>& u, int m) {
    const GammaTransform gt = gamma_transform(n, u);
    return evaluate_gamma_transform(model, gt, m).min_singular_value();
}

CabledBraidWord induction_f_word(int n) {
    if (n < 3) throw Error("induction_f_word: n must be at least 3");
    SlotPlan plan = make_plan(n, false);
    WordBuilder b(plan.cables);
    std::vector<std::string> tail;   // U3 ... U_{n-1}
    for (int k = 3; k < n; ++k) tail.push_back("U" + std::to_string(k));

    for (int k = n - 1; k >= 1; --k) b.cross("U" + std::to_string(k), "V0", -1);
    b.cross_groups(tail, {"V1"}, -1);
    b.cross("U2", "V1", +1);
    b.cross("V1", "U2", +1);
    b.cross_groups({"V1"}, tail, +1);
    std::vector<std::string> after;   // U1 ... U_{n-1}
    for (int k = 1; k < n; ++k) after.push_back("U" + std::to_string(k));
    b.cross_groups({"V0"}, after, +1);
    return b.take();
}

double induction_step_check(const AnyonModel& model, int n, const std::vector<int>& u,
                            const std::vector<int>& v, int m) {
    if (n < 3) throw Error("induction_step_check: n must be at least 3");
    check_multi(model, u, n, "induction_step_check");
    check_multi(model, v, n, "induction_step_check");
    const Assignment asg = uv_assignment(n, u, v, m);

    const SectorMatrix f = evaluate(model, induction_f_word(n), asg);
    const SectorMatrix ln = evaluate(model, build_l_word(n, false), asg);
    const SectorMatrix lm = evaluate(model, build_l_word(n, true), asg);
    const SectorMatrix rn = evaluate(model, build_r_word(n, false), asg);
    const SectorMatrix rm = evaluate(model, build_r_word(n, true), asg);

    const double dl = max_abs_diff(f.then(ln), lm);
    const double dr = max_abs_diff(f.then(rn), rm);
    return std::max(dl, dr);
}

Eigen::MatrixXcd ZMatrix::dense() const {
    Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(dim(), dim());
    for (long long i = 0; i < dim(); ++i) z(i, perm[i]) = 1.0;
    return z;
}

long long multi_index_rank(const std::vector<int>& digits, int base) {
    long long r = 0;
    for (int d : digits) r = r * base + d;
    return r;
}

std::vector<int> multi_index_digits(long long rank, int length, int base) {
    std::vector<int> digits(length);
    for (int i = length - 1; i >= 0; --i) {
        digits[i] = static_cast<int>(rank % base);
        rank /= base;
    }
    return digits;
}

ZMatrix z_matrix(const PermutationAction& action, const Perm& g, int n_labels) {
    action.validate();
    if (static_cast<int>(g.size()) != action.size())
        throw Error("z_matrix: permutation does not act on X");
    ZMatrix z;
    z.x_size = action.size();
    z.n_labels = n_labels;
    long long dim = 1;
    for (int i = 0; i < z.x_size; ++i) {
        dim *= n_labels;
        if (dim > (1LL << 30)) throw Error("z_matrix: index space too large");
    }
    const Perm ginv = inverse(g);
    z.perm.resize(dim);
    std::vector<int> permuted(z.x_size);
    for (long long i = 0; i < dim; ++i) {
        const std::vector<int> digits = multi_index_digits(i, z.x_size, n_labels);
        for (int x = 0; x < z.x_size; ++x) permuted[x] = digits[ginv[x]];
        z.perm[i] = multi_index_rank(permuted, n_labels);
    }
    return z;
}

ZMatrix compose_label_permutation(const ZMatrix& z, const std::vector<int>& label_perm) {
    if (static_cast<int>(label_perm.size()) != z.n_labels || !is_permutation(label_perm))
        throw Error("compose_label_permutation: not a permutation of the labels");
    ZMatrix out = z;
    for (long long i = 0; i < z.dim(); ++i) {
        std::vector<int> digits = multi_index_digits(z.perm[i], z.x_size, z.n_labels);
        for (int& d : digits) d = label_perm[d];
        out.perm[i] = multi_index_rank(digits, z.n_labels);
    }
    return out;
}

namespace {

Eigen::MatrixXcd kron_power(const Eigen::MatrixXcd& m, int power) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Ones(1, 1);
    for (int i = 0; i < power; ++i) {
        Eigen::MatrixXcd next(out.rows() * m.rows(), out.cols() * m.cols());
        for (Eigen::Index r = 0; r < out.rows(); ++r)
            for (Eigen::Index c = 0; c < out.cols(); ++c)
                next.block(r * m.rows(), c * m.cols(), m.rows(), m.cols()) = out(r, c) * m;
        out = std::move(next);
    }
    return out;
}

double commutator_with_permutation(const Eigen::MatrixXcd& k, const ZMatrix& z) {
    std::vector<long long> inv(z.dim());
    for (long long i = 0; i < z.dim(); ++i) inv[z.perm[i]] = i;
    double worst = 0.0;
    for (long long i = 0; i < z.dim(); ++i)
        for (long long j = 0; j < z.dim(); ++j)
            worst = std::max(worst, std::abs(k(i, inv[j]) - k(z.perm[i], j)));
    return worst;
}

} // namespace

ModularInvarianceReport check_modular_invariance(const AnyonModel& model, const ZMatrix& z) {
    if (z.n_labels != model.n_labels())
        throw Error("check_modular_invariance: label count mismatch");
    ModularInvarianceReport rep;
    rep.s_commutator = commutator_with_permutation(kron_power(model.s_matrix, z.x_size), z);
    rep.t_commutator = commutator_with_permutation(kron_power(model.t_matrix, z.x_size), z);
    const long long vacuum =
        multi_index_rank(std::vector<int>(z.x_size, model.unit), z.n_labels);
    rep.vacuum_ok = z.perm[vacuum] == vacuum;
    return rep;
}

} // namespace permod
