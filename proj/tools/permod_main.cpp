#include <cstdint>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "permod/alpha_invariants.hpp"
#include "permod/group_io.hpp"
#include "permod/model_io.hpp"
#include "permod/permutation_module.hpp"
#include "permod/report.hpp"
#include "permod/sweeps.hpp"

namespace {

using namespace permod;

struct RunConfig {
    std::string model;
    std::string group;
    std::string g;
    std::string g1;
    std::string g2;
    double tol = kDefaultTol;
    std::string format = "text";
    std::uint64_t seed = 0;
    bool exhaustive = false;
    int samples = 200;
};

void add_common_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--tol", cfg.tol, "numeric tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--format", cfg.format, "output format: text|structured")
        ->check(CLI::IsMember({"text", "structured"}));
    cmd->add_option("--seed", cfg.seed, "seed for randomized sweeps");
}

int emit(const Report& rep, const RunConfig& cfg) {
    if (cfg.format == "structured")
        std::cout << rep.to_structured();
    else
        std::cout << rep.to_text();
    return rep.pass() ? 0 : 1;
}

void echo_common(Report& rep, const RunConfig& cfg) {
    if (!cfg.model.empty()) rep.inputs.emplace_back("model", cfg.model);
    if (!cfg.group.empty()) rep.inputs.emplace_back("group", cfg.group);
    if (!cfg.g.empty()) rep.inputs.emplace_back("g", cfg.g);
    if (!cfg.g1.empty()) rep.inputs.emplace_back("g1", cfg.g1);
    if (!cfg.g2.empty()) rep.inputs.emplace_back("g2", cfg.g2);
    std::ostringstream tol;
    tol << cfg.tol;
    rep.inputs.emplace_back("tol", tol.str());
    rep.inputs.emplace_back("seed", std::to_string(cfg.seed));
    rep.inputs.emplace_back("exhaustive", cfg.exhaustive ? "true" : "false");
    rep.tolerance = cfg.tol;
}

/// Distinct orbit sizes of <g> on X, ascending.
std::vector<int> distinct_orbit_sizes(const GroupFile& gf, const Perm& g) {
    std::set<int> sizes;
    for (const Orbit& o : orbits(gf.action, {g})) sizes.insert(o.size());
    return {sizes.begin(), sizes.end()};
}

int cmd_verify_category(const RunConfig& cfg) {
    Report rep;
    rep.command = "verify-category";
    echo_common(rep, cfg);
    AnyonModel model = resolve_model(cfg.model, /*verify=*/false);
    const CheckReport p = model.verify_pentagon();
    const CheckReport h = model.verify_hexagon();
    rep.add("pentagon", p.max_residual, p.instances, p.worst);
    rep.add("hexagon", h.max_residual, h.instances, h.worst);
    return emit(rep, cfg);
}

int cmd_covers(const RunConfig& cfg) {
    Report rep;
    rep.command = "covers";
    echo_common(rep, cfg);
    const GroupFile gf = load_group_file(cfg.group);
    const Perm g1 = gf.resolve(cfg.g1);
    const Perm g2 = gf.resolve(cfg.g2);
    const std::vector<CoverComponent> comps = cover_components(gf.action, g1, g2);

    double mismatch = 0.0;
    rep.lines.push_back("  component  sheets  b1  b2  b3  genus");
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const CoverComponent& c = comps[i];
        const CwSummary s = cw_cover_summary(gf.action, g1, g2, c.orbit);
        if (s.genus != c.genus || s.sheets != c.sheets ||
            s.boundary_circles_1 != static_cast<int>(c.boundaries_1.size()) ||
            s.boundary_circles_2 != static_cast<int>(c.boundaries_2.size()) ||
            s.boundary_circles_3 != static_cast<int>(c.boundaries_3.size()))
            mismatch = 1.0;
        std::ostringstream line;
        line << "  " << i << "  {";
        for (std::size_t j = 0; j < c.orbit.elements.size(); ++j) {
            if (j) line << ",";
            line << gf.action.x_labels[c.orbit.elements[j]];
        }
        line << "}  " << c.sheets << "  " << c.boundaries_1.size() << "  "
             << c.boundaries_2.size() << "  " << c.boundaries_3.size() << "  " << c.genus;
        rep.lines.push_back(line.str());
    }
    rep.add("oracle_mismatch", mismatch, static_cast<long long>(comps.size()),
            "CW-complex cross-check");
    return emit(rep, cfg);
}

int cmd_action(const RunConfig& cfg) {
    Report rep;
    rep.command = "action";
    echo_common(rep, cfg);
    const GroupFile gf = load_group_file(cfg.group);
    const Perm g = gf.resolve(cfg.g);
    long long count = 0;
    for (const Orbit& o : orbits(gf.action, {g})) {
        const ActionWord w = action_word(gf.action, g, o);
        std::ostringstream line;
        line << "  orbit base " << gf.action.x_labels[o.base_point()] << ": ";
        for (int x : w.factor_order) line << "A[" << gf.action.x_labels[x] << "] ";
        line << "M";
        rep.lines.push_back(line.str());
        ++count;
    }
    rep.add("action_word", 0.0, count, "module action words per orbit");
    return emit(rep, cfg);
}

int cmd_associator(const RunConfig& cfg) {
    Report rep;
    rep.command = "associator";
    echo_common(rep, cfg);
    const GroupFile gf = load_group_file(cfg.group);
    const Perm g = gf.resolve(cfg.g);
    long long total_crossings = 0;
    for (int n : distinct_orbit_sizes(gf, g)) {
        const ShuffleAssociator psi = associator(n);
        std::ostringstream line;
        line << "  n=" << n << ": " << psi.word.crossings.size() << " crossings:";
        // replay the word to name the cables at each crossing
        std::vector<int> order;
        for (std::size_t i = 0; i < psi.word.cables.size(); ++i)
            order.push_back(static_cast<int>(i));
        for (const CableCrossing& c : psi.word.crossings) {
            line << " " << psi.word.cables[order[c.pos]].name << (c.sign > 0 ? " over " : " under ")
                 << psi.word.cables[order[c.pos + 1]].name << ";";
            std::swap(order[c.pos], order[c.pos + 1]);
        }
        rep.lines.push_back(line.str());
        total_crossings += static_cast<long long>(psi.word.crossings.size());
        const long long expect = static_cast<long long>(n) * (n - 1) / 2;
        rep.add("crossing_count_n" + std::to_string(n),
                static_cast<long long>(psi.word.crossings.size()) == expect ? 0.0 : 1.0, 1,
                "n(n-1)/2 = " + std::to_string(expect));
    }
    (void)total_crossings;
    return emit(rep, cfg);
}

int cmd_pentagon(const RunConfig& cfg) {
    Report rep;
    rep.command = "pentagon";
    echo_common(rep, cfg);
    const AnyonModel model = resolve_model(cfg.model);
    const GroupFile gf = load_group_file(cfg.group);
    const Perm g = gf.resolve(cfg.g);
    const CheckReport neutral = neutral_structure_check(model, gf.action);
    rep.add("neutral_structure", neutral.max_residual, neutral.instances, neutral.worst);
    for (int n : distinct_orbit_sizes(gf, g)) {
        const SweepResult res =
            pentagon_sweep(model, n, cfg.exhaustive, cfg.samples, cfg.seed);
        rep.add("pentagon_n" + std::to_string(n), res.max_residual, res.instances, res.worst);
    }
    return emit(rep, cfg);
}

int cmd_gamma(const RunConfig& cfg) {
    Report rep;
    rep.command = "gamma";
    echo_common(rep, cfg);
    const AnyonModel model = resolve_model(cfg.model);
    const GroupFile gf = load_group_file(cfg.group);
    const Perm g = gf.resolve(cfg.g);
    for (int n : distinct_orbit_sizes(gf, g)) {
        const SweepResult res = gamma_sweep(model, n, cfg.exhaustive, cfg.samples, cfg.seed);
        rep.add("gamma_naturality_n" + std::to_string(n), res.max_residual, res.instances,
                res.worst);
        std::ostringstream note;
        note << "min singular value " << res.min_singular;
        rep.add("gamma_invertibility_n" + std::to_string(n),
                res.min_singular > 1e-6 ? 0.0 : 1.0, res.instances, note.str());
    }
    return emit(rep, cfg);
}

int cmd_induction(const RunConfig& cfg) {
    Report rep;
    rep.command = "induction";
    echo_common(rep, cfg);
    const AnyonModel model = resolve_model(cfg.model);
    const GroupFile gf = load_group_file(cfg.group);
    const Perm g = gf.resolve(cfg.g);
    bool any = false;
    for (int n : distinct_orbit_sizes(gf, g)) {
        if (n < 3) continue;
        any = true;
        const SweepResult res =
            induction_sweep(model, n, cfg.exhaustive, cfg.samples, cfg.seed);
        rep.add("induction_n" + std::to_string(n), res.max_residual, res.instances, res.worst);
    }
    if (!any) rep.lines.push_back("  no orbit of size >= 3; nothing to check");
    return emit(rep, cfg);
}

int cmd_zmatrix(const RunConfig& cfg) {
    Report rep;
    rep.command = "zmatrix";
    echo_common(rep, cfg);
    const AnyonModel model = resolve_model(cfg.model);
    const GroupFile gf = load_group_file(cfg.group);
    const Perm g = gf.resolve(cfg.g);
    const ZMatrix z = z_matrix(gf.action, g, model.n_labels());

    // Row/column sums: exactly one 1 per row and per column.
    std::vector<int> col_hits(z.dim(), 0);
    for (long long i = 0; i < z.dim(); ++i) ++col_hits[z.perm[i]];
    bool perm_ok = true;
    for (long long j = 0; j < z.dim(); ++j) perm_ok = perm_ok && col_hits[j] == 1;

    const ModularInvarianceReport mi = check_modular_invariance(model, z);
    rep.add("s_commutator", mi.s_commutator, z.dim());
    rep.add("t_commutator", mi.t_commutator, z.dim());
    rep.add("vacuum_coupling", mi.vacuum_ok ? 0.0 : 1.0, 1, "Z at the vacuum pair is 1");
    rep.add("permutation_matrix", perm_ok ? 0.0 : 1.0, z.dim(),
            "one 1 per row and per column");

    if (z.dim() <= 32) {
        for (long long i = 0; i < z.dim(); ++i) {
            std::string line = "  ";
            for (long long j = 0; j < z.dim(); ++j) line += z.perm[i] == j ? "1 " : "0 ";
            rep.lines.push_back(line);
        }
    } else {
        for (long long i = 0; i < z.dim(); ++i)
            rep.lines.push_back("  Z[" + std::to_string(i) + "] = " + std::to_string(z.perm[i]));
    }
    return emit(rep, cfg);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"permod: permutation-orbifold module category checks"};
    app.require_subcommand(1);
    RunConfig cfg;

    CLI::App* verify = app.add_subcommand("verify-category", "pentagon and hexagon equations");
    verify->add_option("--model", cfg.model, "built-in name or model file")->required();
    add_common_flags(verify, cfg);

    CLI::App* covers = app.add_subcommand("covers", "cover components of the three-holed sphere");
    covers->add_option("--group", cfg.group, "group file")->required();
    covers->add_option("--g1", cfg.g1, "first monodromy")->required();
    covers->add_option("--g2", cfg.g2, "second monodromy")->required();
    add_common_flags(covers, cfg);

    CLI::App* action = app.add_subcommand("action", "module action words per orbit");
    action->add_option("--group", cfg.group, "group file")->required();
    action->add_option("--g", cfg.g, "group element")->required();
    add_common_flags(action, cfg);

    CLI::App* assoc = app.add_subcommand("associator", "shuffle associator braid words");
    assoc->add_option("--group", cfg.group, "group file")->required();
    assoc->add_option("--g", cfg.g, "group element")->required();
    add_common_flags(assoc, cfg);

    CLI::App* pentagon = app.add_subcommand("pentagon", "mixed pentagon sweep");
    pentagon->add_option("--model", cfg.model, "built-in name or model file")->required();
    pentagon->add_option("--group", cfg.group, "group file")->required();
    pentagon->add_option("--g", cfg.g, "group element")->required();
    pentagon->add_flag("--exhaustive", cfg.exhaustive, "sweep all simple assignments");
    add_common_flags(pentagon, cfg);

    CLI::App* gamma = app.add_subcommand("gamma", "naturality of the induction transform");
    gamma->add_option("--model", cfg.model, "built-in name or model file")->required();
    gamma->add_option("--group", cfg.group, "group file")->required();
    gamma->add_option("--g", cfg.g, "group element")->required();
    gamma->add_flag("--exhaustive", cfg.exhaustive, "sweep all simple assignments");
    add_common_flags(gamma, cfg);

    CLI::App* induction = app.add_subcommand("induction", "cable-merge induction step");
    induction->add_option("--model", cfg.model, "built-in name or model file")->required();
    induction->add_option("--group", cfg.group, "group file")->required();
    induction->add_option("--g", cfg.g, "group element")->required();
    induction->add_flag("--exhaustive", cfg.exhaustive, "sweep all simple assignments");
    add_common_flags(induction, cfg);

    CLI::App* zmatrix = app.add_subcommand("zmatrix", "permutation modular invariant");
    zmatrix->add_option("--model", cfg.model, "built-in name or model file")->required();
    zmatrix->add_option("--group", cfg.group, "group file")->required();
    zmatrix->add_option("--g", cfg.g, "group element")->required();
    add_common_flags(zmatrix, cfg);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify_category(cfg);
        if (covers->parsed()) return cmd_covers(cfg);
        if (action->parsed()) return cmd_action(cfg);
        if (assoc->parsed()) return cmd_associator(cfg);
        if (pentagon->parsed()) return cmd_pentagon(cfg);
        if (gamma->parsed()) return cmd_gamma(cfg);
        if (induction->parsed()) return cmd_induction(cfg);
        if (zmatrix->parsed()) return cmd_zmatrix(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "error: no subcommand\n";
    return 2;
}
