#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "permod/alpha_invariants.hpp"
#include "permod/sweeps.hpp"

using namespace permod;

namespace {

PermutationAction make_action(int n) {
    PermutationAction a;
    for (int i = 0; i < n; ++i) a.x_labels.push_back("x" + std::to_string(i));
    return a;
}

} // namespace

TEST_CASE("gamma_constraint") {
    const AnyonModel fib = fibonacci();
    const int tau = 1;
    SUBCASE("n=1 reduces to the braiding tensored with the identity on M") {
        const ModuleFunctorConstraint gc = gamma_constraint(fib, 1, +1, {tau}, {tau});
        REQUIRE(gc.word.crossings.size() == 1);
        CHECK(gc.word.crossings[0].sign == +1);
        const SectorMatrix m = evaluate_gamma_constraint(fib, gc, tau);
        const SectorMatrix direct = braid_generator(fib, {tau, tau, tau}, 0, +1);
        CHECK(max_abs_diff(m, direct) < 1e-12);
    }
    SUBCASE("plus and minus words cancel after role swap") {
        const int n = 2;
        const std::vector<int> u{tau, 0}, v{tau, tau};
        const ModuleFunctorConstraint plus = gamma_constraint(fib, n, +1, u, v);
        const ModuleFunctorConstraint minus = gamma_constraint(fib, n, -1, v, u);
        Assignment asg;
        for (int l = 0; l < n; ++l) {
            asg["U" + std::to_string(l)] = u[l];
            asg["V" + std::to_string(l)] = v[l];
        }
        asg["M"] = tau;
        const SectorMatrix mp = evaluate(fib, plus.word, asg);
        // re-evaluate the minus word with U and V exchanged so it composes
        Assignment swapped;
        for (int l = 0; l < n; ++l) {
            swapped["U" + std::to_string(l)] = v[l];
            swapped["V" + std::to_string(l)] = u[l];
        }
        swapped["M"] = tau;
        const SectorMatrix mm = evaluate(fib, minus.word, swapped);
        CHECK(mp.then(mm).is_identity(1e-12));
    }
    SUBCASE("evaluated gamma is unitary for unitary models") {
        const ModuleFunctorConstraint gc = gamma_constraint(fib, 2, +1, {tau, tau}, {tau, tau});
        CHECK(evaluate_gamma_constraint(fib, gc, tau).max_unitarity_defect() < 1e-9);
    }
}

TEST_CASE("gamma_transform") {
    const AnyonModel fib = fibonacci();
    const int tau = 1;
    SUBCASE("n=1 is the pure monodromy") {
        const GammaTransform gt = gamma_transform(1, {tau});
        CHECK(gt.word.crossings.size() == 2);
        const AnyonModel z5 = vec_zn(5);
        for (int a = 1; a < 5; ++a)
            for (int b = 1; b < 5; ++b) {
                const GammaTransform g = gamma_transform(1, {a});
                const SectorMatrix m = evaluate_gamma_transform(z5, g, b);
                const cxd expect = z5.r(a, b, (a + b) % 5) * z5.r(b, a, (a + b) % 5);
                REQUIRE(m.blocks.size() == 1);
                CHECK(std::abs(m.blocks.begin()->second(0, 0) - expect) < 1e-12);
            }
    }
    SUBCASE("word permutation cycles the front cable to before M") {
        const GammaTransform gt = gamma_transform(3, {tau, tau, tau});
        const std::vector<int> order = gt.word.final_cable_order();
        std::vector<std::string> names;
        for (int idx : order) names.push_back(gt.word.cables[idx].name);
        CHECK(names == std::vector<std::string>{"U1", "U2", "U0", "M"});
    }
    SUBCASE("invertible in every sector") {
        const GammaTransform gt = gamma_transform(2, {tau, tau});
        const SectorMatrix m = evaluate_gamma_transform(fib, gt, tau);
        CHECK(m.min_singular_value() > 1e-6);
        CHECK(gamma_min_singular(fib, 2, {tau, 0}, 0) > 1e-6);
    }
}

TEST_CASE("gamma naturality") {
    const AnyonModel fib = fibonacci();
    const AnyonModel z5 = vec_zn(5);
    const int tau = 1;
    SUBCASE("n=1 pointed: both sides are equal phases") {
        for (int u = 0; u < 5; ++u)
            for (int v = 0; v < 5; ++v)
                for (int m = 0; m < 5; ++m)
                    CHECK(check_gamma_naturality(z5, 1, {u}, {v}, m) < 1e-12);
    }
    SUBCASE("n=2 exhaustive on fibonacci") {
        const SweepResult res = gamma_sweep(fib, 2, true, 0, 0);
        CHECK(res.instances == 32);
        CHECK(res.max_residual < 1e-9);
        CHECK(res.min_singular > 1e-6);
    }
    SUBCASE("n=3 sampled on fibonacci") {
        const SweepResult res = gamma_sweep(fib, 3, false, 20, 11);
        CHECK(res.max_residual < 1e-9);
    }
    SUBCASE("n=2 exhaustive on the remaining built-ins") {
        for (const char* name : {"ising", "vec_z2", "vec_z3", "vec_z4"}) {
            CAPTURE(name);
            const SweepResult res = gamma_sweep(builtin_model(name), 2, true, 0, 0);
            CHECK(res.max_residual < 1e-9);
            CHECK(res.min_singular > 1e-6);
        }
    }
    SUBCASE("gamma word permutation is the U/V block transposition") {
        const ModuleFunctorConstraint gc = gamma_constraint(fib, 3, +1, {1, 1, 0}, {1, 0, 1});
        const std::vector<int> order = gc.word.final_cable_order();
        std::vector<std::string> names;
        for (int idx : order) names.push_back(gc.word.cables[idx].name);
        CHECK(names ==
              std::vector<std::string>{"V0", "V1", "V2", "U0", "U1", "U2", "M"});
    }
    SUBCASE("wrapped signature validates the orbit") {
        const auto a = make_action(2);
        const Perm g{1, 0};
        const Orbit o = orbits(2, {g})[0];
        CHECK(check_gamma_naturality(fib, a, g, o, {tau, tau}, {tau, 0}, tau) < 1e-9);
    }
}

TEST_CASE("induction step") {
    const AnyonModel fib = fibonacci();
    const AnyonModel z3 = vec_zn(3);
    const int tau = 1;
    SUBCASE("n=3 all tau") {
        CHECK(induction_step_check(fib, 3, {tau, tau, tau}, {tau, tau, tau}, tau) < 1e-9);
    }
    SUBCASE("n=3 pointed phases agree exactly") {
        CHECK(induction_step_check(z3, 3, {1, 2, 1}, {2, 2, 0}, 1) < 1e-12);
    }
    SUBCASE("F is invertible") {
        std::mt19937_64 rng(8);
        for (int rep = 0; rep < 10; ++rep) {
            std::vector<int> u(3), v(3);
            for (int& x : u) x = static_cast<int>(rng() % 2);
            for (int& x : v) x = static_cast<int>(rng() % 2);
            Assignment asg;
            for (int l = 0; l < 3; ++l) {
                asg["U" + std::to_string(l)] = u[l];
                asg["V" + std::to_string(l)] = v[l];
            }
            asg["M"] = static_cast<int>(rng() % 2);
            const SectorMatrix f = evaluate(fib, induction_f_word(3), asg);
            CHECK(f.min_singular_value() > 1e-6);
            CHECK(f.source_word == f.target_word);
        }
    }
    SUBCASE("n >= 4 keeps the regrouping local to the merged slots") {
        CHECK(induction_step_check(fib, 4, {tau, tau, 0, tau}, {tau, 0, tau, tau}, tau) <
              1e-9);
    }
    SUBCASE("n < 3 is rejected") {
        CHECK_THROWS_AS(induction_step_check(fib, 2, {tau, tau}, {tau, tau}, tau), Error);
    }
}

TEST_CASE("z_matrix") {
    const AnyonModel fib = fibonacci();
    SUBCASE("identity gives the identity matrix") {
        const auto a = make_action(3);
        const ZMatrix z = z_matrix(a, identity_perm(3), 2);
        for (long long i = 0; i < z.dim(); ++i) CHECK(z.perm[i] == i);
    }
    SUBCASE("swap on two factors transposes multi-indices") {
        const auto a = make_action(2);
        const ZMatrix z = z_matrix(a, Perm{1, 0}, 2);
        REQUIRE(z.dim() == 4);
        // ones exactly at ((i,j),(j,i))
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                CHECK(z.perm[multi_index_rank({i, j}, 2)] == multi_index_rank({j, i}, 2));
    }
    SUBCASE("three-cycle on ising multi-indices has order three") {
        const auto a = make_action(3);
        const Perm g{1, 2, 0};
        const ZMatrix z = z_matrix(a, g, 3);
        CHECK(z.dim() == 27);
        for (long long i = 0; i < z.dim(); ++i) {
            CHECK(z.perm[z.perm[z.perm[i]]] == i);   // order divides 3
        }
        // not the identity
        bool moved = false;
        for (long long i = 0; i < z.dim(); ++i) moved = moved || z.perm[i] != i;
        CHECK(moved);
    }
    SUBCASE("composition: Z(g) Z(h) = Z(hg)") {
        const auto a = make_action(3);
        const Perm g{1, 2, 0};
        const Perm h{1, 0, 2};
        const ZMatrix zg = z_matrix(a, g, 2);
        const ZMatrix zh = z_matrix(a, h, 2);
        const ZMatrix zhg = z_matrix(a, compose(h, g), 2);
        for (long long i = 0; i < zg.dim(); ++i) CHECK(zh.perm[zg.perm[i]] == zhg.perm[i]);
    }
    SUBCASE("entries are a permutation matrix") {
        const auto a = make_action(2);
        const ZMatrix z = z_matrix(a, Perm{1, 0}, fib.n_labels());
        std::vector<int> col_count(z.dim(), 0);
        for (long long i = 0; i < z.dim(); ++i) {
            int row_sum = 0;
            for (long long j = 0; j < z.dim(); ++j) row_sum += z.entry(i, j);
            CHECK(row_sum == 1);
            ++col_count[z.perm[i]];
        }
        for (int c : col_count) CHECK(c == 1);
    }
}

TEST_CASE("modular invariance") {
    const AnyonModel fib = fibonacci();
    const AnyonModel is = ising();
    SUBCASE("identity Z commutes exactly") {
        const auto a = make_action(2);
        const ZMatrix z = z_matrix(a, identity_perm(2), fib.n_labels());
        const ModularInvarianceReport rep = check_modular_invariance(fib, z);
        CHECK(rep.residual() == 0.0);
        CHECK(rep.vacuum_ok);
    }
    SUBCASE("swap on fibonacci passes") {
        const auto a = make_action(2);
        const ZMatrix z = z_matrix(a, Perm{1, 0}, fib.n_labels());
        const ModularInvarianceReport rep = check_modular_invariance(fib, z);
        CHECK(rep.residual() < 1e-9);
        CHECK(rep.vacuum_ok);
    }
    SUBCASE("label permutation is a negative control") {
        const auto a = make_action(2);
        const ZMatrix z = z_matrix(a, Perm{1, 0}, is.n_labels());
        const ZMatrix wrong = compose_label_permutation(z, {1, 0, 2});
        const ModularInvarianceReport rep = check_modular_invariance(is, wrong);
        CHECK(rep.residual() >= 1e-3);
    }
    SUBCASE("dimension mismatch is an error") {
        const auto a = make_action(2);
        const ZMatrix z = z_matrix(a, Perm{1, 0}, 2);
        CHECK_THROWS_AS(check_modular_invariance(is, z), Error);
    }
    SUBCASE("permutation-indexed commutator agrees with dense algebra") {
        const auto a = make_action(2);
        const ZMatrix z = z_matrix(a, Perm{1, 0}, is.n_labels());
        const ZMatrix wrong = compose_label_permutation(z, {1, 0, 2});
        for (const ZMatrix* zz : {&z, &wrong}) {
            Eigen::MatrixXcd k(9, 9);
            for (int i = 0; i < 9; ++i)
                for (int j = 0; j < 9; ++j)
                    k(i, j) = is.s_matrix(i / 3, j / 3) * is.s_matrix(i % 3, j % 3);
            const Eigen::MatrixXcd zd = zz->dense();
            const double dense_resid = (k * zd - zd * k).cwiseAbs().maxCoeff();
            const ModularInvarianceReport rep = check_modular_invariance(is, *zz);
            CHECK(std::abs(dense_resid - rep.s_commutator) < 1e-12);
        }
    }
}
