#include "permod/permutation_module.hpp"

#include <algorithm>
#include <random>

namespace permod {

ActionWord action_word(const PermutationAction& action, const Perm& g, const Orbit& orbit) {
    if (static_cast<int>(g.size()) != action.size())
        throw Error("action_word: permutation does not act on X");
    const Perm ginv = inverse(g);
    ActionWord w;
    w.orbit = orbit;
    int y = orbit.base_point();
    for (int i = 0; i < orbit.size(); ++i) {
        if (!orbit.contains(y)) throw Error("action_word: orbit is not g-stable");
        w.factor_order.push_back(y);
        y = ginv[y];
    }
    if (y != orbit.base_point()) throw Error("action_word: orbit is not a single <g>-orbit");
    return w;
}

std::vector<std::string> slot_names(const std::string& prefix, int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
    return names;
}

namespace {

std::vector<std::vector<std::string>> singleton_groups(const std::vector<std::string>& names) {
    std::vector<std::vector<std::string>> groups;
    for (const std::string& s : names) groups.push_back({s});
    return groups;
}

} // namespace

void emit_shuffle(WordBuilder& b, const std::vector<std::vector<std::string>>& a_groups,
                  const std::vector<std::vector<std::string>>& b_groups) {
    const int n = static_cast<int>(a_groups.size());
    if (static_cast<int>(b_groups.size()) != n) throw Error("emit_shuffle: group count mismatch");
    for (int l = n - 2; l >= 0; --l)
        for (int k = l + 1; k < n; ++k) b.cross_groups(b_groups[l], a_groups[k], +1);
}

void emit_unshuffle(WordBuilder& b, const std::vector<std::vector<std::string>>& a_groups,
                    const std::vector<std::vector<std::string>>& b_groups) {
    const int n = static_cast<int>(a_groups.size());
    if (static_cast<int>(b_groups.size()) != n)
        throw Error("emit_unshuffle: group count mismatch");
    for (int l = 0; l <= n - 2; ++l)
        for (int k = n - 1; k >= l + 1; --k) b.cross_groups(a_groups[k], b_groups[l], -1);
}

void emit_componentwise(WordBuilder& b, const std::vector<std::vector<std::string>>& u_groups,
                        const std::vector<std::vector<std::string>>& v_groups, int sign) {
    const int n = static_cast<int>(u_groups.size());
    if (static_cast<int>(v_groups.size()) != n)
        throw Error("emit_componentwise: group count mismatch");
    for (int l = 0; l < n; ++l) b.cross_groups(u_groups[l], v_groups[l], sign);
}

ShuffleAssociator associator(int n) {
    if (n < 1) throw Error("associator: n must be positive");
    const std::vector<std::string> a = slot_names("A", n);
    const std::vector<std::string> bs = slot_names("B", n);
    std::vector<Cable> cables;
    for (int l = 0; l < n; ++l) {
        cables.push_back({a[l], {a[l]}});
        cables.push_back({bs[l], {bs[l]}});
    }
    cables.push_back({"M", {"M"}});
    WordBuilder builder(std::move(cables));
    emit_shuffle(builder, singleton_groups(a), singleton_groups(bs));
    return {n, builder.take()};
}

namespace {

Assignment pentagon_assignment(int n, const std::vector<int>& a, const std::vector<int>& b,
                               const std::vector<int>& c, int m) {
    Assignment asg;
    for (int l = 0; l < n; ++l) {
        asg["A" + std::to_string(l)] = a[l];
        asg["B" + std::to_string(l)] = b[l];
        asg["C" + std::to_string(l)] = c[l];
    }
    asg["M"] = m;
    return asg;
}

std::vector<Cable> pentagon_cables(int n) {
    std::vector<Cable> cables;
    for (int l = 0; l < n; ++l) {
        const std::string suffix = std::to_string(l);
        cables.push_back({"A" + suffix, {"A" + suffix}});
        cables.push_back({"B" + suffix, {"B" + suffix}});
        cables.push_back({"C" + suffix, {"C" + suffix}});
    }
    cables.push_back({"M", {"M"}});
    return cables;
}

} // namespace

double module_pentagon_check(const AnyonModel& model, int n, const std::vector<int>& a,
                             const std::vector<int>& b, const std::vector<int>& c, int m) {
    if (n < 1) throw Error("module_pentagon_check: n must be positive");
    if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n ||
        static_cast<int>(c.size()) != n)
        throw Error("module_pentagon_check: assignment size mismatch");
    const std::vector<std::string> as = slot_names("A", n);
    const std::vector<std::string> bs = slot_names("B", n);
    const std::vector<std::string> cs = slot_names("C", n);
    const Assignment asg = pentagon_assignment(n, a, b, c, m);

    // Left route: psi_{A, B(x)C, M}, then psi_{B,C,M} behind the A block.
    WordBuilder left(pentagon_cables(n));
    {
        std::vector<std::vector<std::string>> bc;
        for (int l = 0; l < n; ++l) bc.push_back({bs[l], cs[l]});
        emit_shuffle(left, singleton_groups(as), bc);
        emit_shuffle(left, singleton_groups(bs), singleton_groups(cs));
    }

    // Right route: psi_{A(x)B, C, M}, then psi_{A,B,C(x)M}.
    WordBuilder right(pentagon_cables(n));
    {
        std::vector<std::vector<std::string>> ab;
        for (int l = 0; l < n; ++l) ab.push_back({as[l], bs[l]});
        emit_shuffle(right, ab, singleton_groups(cs));
        emit_shuffle(right, singleton_groups(as), singleton_groups(bs));
    }

    const SectorMatrix lhs = evaluate(model, left.take(), asg);
    const SectorMatrix rhs = evaluate(model, right.take(), asg);
    return max_abs_diff(lhs, rhs);
}

double module_pentagon_check(const AnyonModel& model, const PermutationAction& action,
                             const Perm& g, const Orbit& orbit, const std::vector<int>& a,
                             const std::vector<int>& b, const std::vector<int>& c, int m) {
    action_word(action, g, orbit);   // validates orbit against g
    return module_pentagon_check(model, orbit.size(), a, b, c, m);
}

double unit_check(const AnyonModel& model, int n, bool a_slots_unit,
                  const std::vector<int>& others, int m) {
    if (static_cast<int>(others.size()) != n) throw Error("unit_check: assignment size mismatch");
    const ShuffleAssociator psi = associator(n);
    Assignment asg;
    for (int l = 0; l < n; ++l) {
        asg["A" + std::to_string(l)] = a_slots_unit ? model.unit : others[l];
        asg["B" + std::to_string(l)] = a_slots_unit ? others[l] : model.unit;
    }
    asg["M"] = m;
    const SectorMatrix mat = evaluate(model, psi.word, asg);
    double worst = 0.0;
    for (const auto& [c, blk] : mat.blocks) {
        if (blk.rows() != blk.cols()) throw Error("unit_check: non-square sector");
        worst = std::max(worst, (blk - Eigen::MatrixXcd::Identity(blk.rows(), blk.cols()))
                                    .cwiseAbs()
                                    .maxCoeff());
    }
    return worst;
}

CheckReport neutral_structure_check(const AnyonModel& model, const PermutationAction& action) {
    action.validate();
    CheckReport rep;
    rep.name = "neutral_structure";
    const int nx = action.size();
    const int nl = model.n_labels();

    // Factor permutation by g then g^-1 is the identity on multi-indices.
    long long dim = 1;
    for (int x = 0; x < nx && dim <= 4096; ++x) dim *= nl;
    std::vector<int> digits(nx), moved(nx);
    for (const auto& [gname, g] : action.generators) {
        const Perm ginv = inverse(g);
        auto check_index = [&]() {
            for (int x = 0; x < nx; ++x) moved[x] = digits[ginv[x]];   // g acting
            std::vector<int> back(nx);
            for (int x = 0; x < nx; ++x) back[x] = moved[g[x]];        // then g^-1
            ++rep.instances;
            if (back != digits) {
                rep.max_residual = 1.0;
                rep.worst = "permutation inverse failed for generator " + gname;
            }
        };
        if (dim <= 4096) {
            // every multi-index
            std::fill(digits.begin(), digits.end(), 0);
            while (true) {
                check_index();
                int pos = nx - 1;
                while (pos >= 0 && digits[pos] == nl - 1) digits[pos--] = 0;
                if (pos < 0) break;
                ++digits[pos];
            }
        } else {
            for (int x = 0; x < nx; ++x) {
                ++rep.instances;
                if (ginv[g[x]] != x) {
                    rep.max_residual = 1.0;
                    rep.worst = "permutation inverse failed for generator " + gname;
                }
            }
        }
        if (rep.max_residual > 0) return rep;
    }

    // Braiding of multi-index objects is the factorwise product of R-data:
    // each factor's two-strand braid evaluates to its R-symbol, and the
    // multi-index braiding scalar is their product over x in X.
    for (int u = 0; u < nl; ++u)
        for (int v = 0; v < nl; ++v)
            for (int c : model.channels(u, v)) {
                const Eigen::MatrixXcd blk =
                    braid_generator_block(model, {u, v}, 0, +1, c);
                const double resid = std::abs(blk(0, 0) - model.r(u, v, c));
                ++rep.instances;
                if (resid > rep.max_residual) {
                    rep.max_residual = resid;
                    rep.worst = "componentwise braiding at (" + model.labels[u] + "," +
                                model.labels[v] + ";" + model.labels[c] + ")";
                }
            }
    if (nx >= 2) {
        // spot-check the product formula on full multi-index pairs
        std::vector<int> u_digits(nx), v_digits(nx), channels(nx);
        std::mt19937_64 rng(424242);
        for (int rep_i = 0; rep_i < 50; ++rep_i) {
            cxd product(1.0);
            cxd evaluated(1.0);
            for (int x = 0; x < nx; ++x) {
                u_digits[x] = static_cast<int>(rng() % nl);
                v_digits[x] = static_cast<int>(rng() % nl);
                const auto& ch = model.channels(u_digits[x], v_digits[x]);
                channels[x] = ch[rng() % ch.size()];
                product *= model.r(u_digits[x], v_digits[x], channels[x]);
                evaluated *= braid_generator_block(model, {u_digits[x], v_digits[x]}, 0, +1,
                                                   channels[x])(0, 0);
            }
            ++rep.instances;
            const double resid = std::abs(product - evaluated);
            if (resid > rep.max_residual) {
                rep.max_residual = resid;
                rep.worst = "multi-index braiding product";
            }
        }
    }
    return rep;
}

} // namespace permod
