#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "permod/anyon_model.hpp"
#include "permod/fusion_tree.hpp"

using namespace permod;

TEST_CASE("built-ins verify at load") {
    for (const char* name : {"fibonacci", "ising", "vec_z2", "vec_z3", "vec_z4", "vec_z5"}) {
        CAPTURE(name);
        const AnyonModel m = builtin_model(name);
        const CheckReport p = m.verify_pentagon();
        const CheckReport h = m.verify_hexagon();
        CHECK(p.instances > 0);
        CHECK(h.instances > 0);
        CHECK(p.max_residual < 1e-9);
        CHECK(h.max_residual < 1e-9);
    }
}

TEST_CASE("fibonacci data") {
    const AnyonModel m = fibonacci();
    CHECK(m.n_labels() == 2);
    const int tau = m.label_index("tau");
    CHECK(m.fusion_ok(tau, tau, m.unit));
    CHECK(m.fusion_ok(tau, tau, tau));
    // twist from the ribbon relation theta_a = sum_c (d_c/d_a) R^{aa}_c
    const cxd theta =
        (m.qdims[0] / m.qdims[1]) * m.r(tau, tau, 0) + m.r(tau, tau, tau);
    CHECK(std::abs(theta - m.twists[tau]) < 1e-12);
    // S is unitary and symmetric
    const Eigen::MatrixXcd ss = m.s_matrix * m.s_matrix.adjoint();
    CHECK((ss - Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("ising twist relation") {
    const AnyonModel m = ising();
    const int sg = m.label_index("sigma");
    const cxd theta = (1.0 / m.qdims[sg]) * (m.r(sg, sg, 0) + m.r(sg, sg, 2));
    CHECK(std::abs(theta - m.twists[sg]) < 1e-12);
}

TEST_CASE("vec_zn") {
    SUBCASE("N=2 is pointed with one-dimensional tree spaces") {
        const AnyonModel m = vec_zn(2);
        CHECK(m.n_labels() == 2);
        for (int total = 0; total < 2; ++total) {
            const FusionTreeBasis b = tree_basis(m, {1, 1, 1, 1}, total);
            CHECK(b.dim() <= 1);
        }
        CHECK(std::abs(m.twists[1] - cxd(0.0, 1.0)) < 1e-12);   // semion
    }
    SUBCASE("parameter constraints") {
        CHECK_THROWS_AS(vec_zn(3, 3), Error);   // gcd(q,N) != 1
        CHECK_THROWS_AS(vec_zn(3, 1), Error);   // q*N odd
        CHECK_NOTHROW(vec_zn(4, 3));
        CHECK_NOTHROW(vec_zn(5, 4));
    }
    SUBCASE("duals are negation mod N") {
        const AnyonModel m = vec_zn(5);
        for (int a = 0; a < 5; ++a) CHECK(m.dual[a] == (5 - a) % 5);
    }
}

TEST_CASE("perturbed F-symbols are caught") {
    AnyonModel m = fibonacci();
    const int tau = 1;
    const cxd orig = m.f(tau, tau, tau, tau, 0, 0);
    m.set_f_symbol(tau, tau, tau, tau, 0, 0, orig + 1e-3);
    const CheckReport p = m.verify_pentagon();
    const CheckReport h = m.verify_hexagon();
    CHECK(p.max_residual >= 1e-4);
    CHECK(h.max_residual >= 1e-4);
}

TEST_CASE("malformed fusion is a multiplicity error") {
    AnyonModel m;
    m.labels = {"1", "a"};
    m.unit = 0;
    m.dual = {0, 1};
    m.fusion[{0, 0, 0}] = 1;
    m.fusion[{0, 1, 1}] = 1;
    m.fusion[{1, 0, 1}] = 1;
    m.fusion[{1, 1, 0}] = 2;   // N = 2
    m.twists = {cxd(1.0), cxd(1.0)};
    m.qdims = {1.0, 1.0};
    m.s_matrix = Eigen::MatrixXcd::Identity(2, 2);
    m.t_matrix = Eigen::MatrixXcd::Identity(2, 2);
    CHECK_THROWS_WITH_AS(m.finalize(), doctest::Contains("multiplicity"), Error);
}

TEST_CASE("tree_basis") {
    const AnyonModel fib = fibonacci();
    const int tau = 1;
    SUBCASE("two taus fuse to the unit in one way") {
        CHECK(tree_basis(fib, {tau, tau}, 0).dim() == 1);
    }
    SUBCASE("three taus to tau in two ways") {
        const FusionTreeBasis b = tree_basis(fib, {tau, tau, tau}, tau);
        REQUIRE(b.dim() == 2);
        // lexicographic in internal labels: (1,tau) before (tau,tau)
        CHECK(b.trees[0] == std::vector<int>{0, tau});
        CHECK(b.trees[1] == std::vector<int>{tau, tau});
    }
    SUBCASE("unit word only reaches the unit charge") {
        CHECK(tree_basis(fib, {0, 0, 0}, tau).dim() == 0);
        CHECK(tree_basis(fib, {0, 0, 0}, 0).dim() == 1);
    }
    SUBCASE("single-strand word") {
        CHECK(tree_basis(fib, {tau}, tau).dim() == 1);
        CHECK(tree_basis(fib, {tau}, 0).dim() == 0);
    }
    SUBCASE("sector list") {
        CHECK(sectors(fib, {tau, tau}) == std::vector<int>{0, 1});
    }
}
