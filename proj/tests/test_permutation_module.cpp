#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "permod/permutation_module.hpp"
#include "permod/sweeps.hpp"

using namespace permod;

namespace {

PermutationAction make_action(int n) {
    PermutationAction a;
    for (int i = 0; i < n; ++i) a.x_labels.push_back("x" + std::to_string(i));
    return a;
}

// Crossing positions of the shuffle, recovered as (B-exponent, A-exponent)
// pairs by replaying the word on named slots.
std::vector<std::pair<int, int>> crossing_pairs(const ShuffleAssociator& psi) {
    std::vector<int> order;   // cable indices
    for (std::size_t i = 0; i < psi.word.cables.size(); ++i) order.push_back(static_cast<int>(i));
    std::vector<std::pair<int, int>> pairs;
    for (const CableCrossing& c : psi.word.crossings) {
        const std::string left = psi.word.cables[order[c.pos]].name;
        const std::string right = psi.word.cables[order[c.pos + 1]].name;
        REQUIRE(left[0] == 'B');
        REQUIRE(right[0] == 'A');
        REQUIRE(c.sign == +1);
        pairs.emplace_back(std::stoi(left.substr(1)), std::stoi(right.substr(1)));
        std::swap(order[c.pos], order[c.pos + 1]);
    }
    return pairs;
}

} // namespace

TEST_CASE("action_word") {
    SUBCASE("Z/4 rotation lists decreasing powers") {
        const auto a = make_action(4);
        const Perm g{1, 2, 3, 0};   // x -> x+1
        const Orbit o = orbits(4, {g})[0];
        const ActionWord w = action_word(a, g, o);
        CHECK(w.factor_order == std::vector<int>{0, 3, 2, 1});
    }
    SUBCASE("fixed point gives a single factor") {
        const auto a = make_action(3);
        const Perm g{0, 2, 1};
        const auto os = orbits(3, {g});
        const ActionWord w = action_word(a, g, os[0]);
        CHECK(w.factor_order == std::vector<int>{0});
    }
    SUBCASE("two-element swap") {
        const auto a = make_action(2);
        const Perm g{1, 0};
        const ActionWord w = action_word(a, g, orbits(2, {g})[0]);
        CHECK(w.factor_order == std::vector<int>{0, 1});
    }
    SUBCASE("orbit must be g-stable") {
        const auto a = make_action(4);
        const Perm g{1, 2, 3, 0};
        Orbit bad;
        bad.elements = {0, 1};
        CHECK_THROWS_AS(action_word(a, g, bad), Error);
    }
}

TEST_CASE("associator") {
    SUBCASE("n=1 is the empty word") {
        CHECK(associator(1).word.crossings.empty());
    }
    SUBCASE("n=2 is the single crossing B0 past A1") {
        const auto pairs = crossing_pairs(associator(2));
        REQUIRE(pairs.size() == 1);
        CHECK(pairs[0] == std::pair<int, int>{0, 1});
    }
    SUBCASE("n=3 unrolls to three crossings in schedule order") {
        const auto pairs = crossing_pairs(associator(3));
        const std::vector<std::pair<int, int>> expect{{1, 2}, {0, 1}, {0, 2}};
        CHECK(pairs == expect);
    }
    SUBCASE("crossing count and riffle permutation up to n=8") {
        for (int n = 1; n <= 8; ++n) {
            const ShuffleAssociator psi = associator(n);
            CHECK(static_cast<int>(psi.word.crossings.size()) == n * (n - 1) / 2);
            for (const auto& [b_exp, a_exp] : crossing_pairs(psi)) CHECK(a_exp > b_exp);
            // cables end in the order A0..A_{n-1} B0..B_{n-1} M
            const std::vector<int> order = psi.word.final_cable_order();
            for (int l = 0; l < n; ++l) {
                CHECK(psi.word.cables[order[l]].name == "A" + std::to_string(l));
                CHECK(psi.word.cables[order[n + l]].name == "B" + std::to_string(l));
            }
            CHECK(psi.word.cables[order[2 * n]].name == "M");
        }
    }
}

TEST_CASE("module pentagon") {
    const AnyonModel fib = fibonacci();
    const AnyonModel is = ising();
    const int tau = 1, sg = 1;

    SUBCASE("n=1 is exactly zero") {
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                for (int c = 0; c < 2; ++c)
                    for (int m = 0; m < 2; ++m)
                        CHECK(module_pentagon_check(fib, 1, {a}, {b}, {c}, m) == 0.0);
    }
    SUBCASE("fibonacci n=2 all tau") {
        CHECK(module_pentagon_check(fib, 2, {tau, tau}, {tau, tau}, {tau, tau}, tau) < 1e-9);
    }
    SUBCASE("ising n=3 all sigma") {
        CHECK(module_pentagon_check(is, 3, {sg, sg, sg}, {sg, sg, sg}, {sg, sg, sg}, sg) <
              1e-9);
    }
    SUBCASE("exhaustive n=2 on fibonacci") {
        const SweepResult res = pentagon_sweep(fib, 2, true, 0, 0);
        CHECK(res.instances == 128);
        CHECK(res.max_residual < 1e-9);
    }
    SUBCASE("sampled n=3 on ising") {
        const SweepResult res = pentagon_sweep(is, 3, false, 25, 42);
        CHECK(res.instances == 25);
        CHECK(res.max_residual < 1e-9);
    }
    SUBCASE("oversized exhaustive sweeps are rejected") {
        CHECK(exhaustive_size(3, 10) == 59049);
        CHECK(exhaustive_size(5, 16) == -1);
        CHECK_THROWS_AS(pentagon_sweep(vec_zn(5), 5, true, 0, 0), Error);
    }
    SUBCASE("exhaustive n=2 on the pointed models") {
        for (int N : {2, 3, 4}) {
            CAPTURE(N);
            const SweepResult res = pentagon_sweep(vec_zn(N), 2, true, 0, 0);
            CHECK(res.max_residual < 1e-12);
        }
    }
    SUBCASE("evaluated shuffle is unitary and invertible per sector") {
        std::mt19937_64 rng(17);
        for (int rep = 0; rep < 10; ++rep) {
            const int n = 2 + static_cast<int>(rng() % 2);
            const ShuffleAssociator psi = associator(n);
            Assignment asg;
            for (int l = 0; l < n; ++l) {
                asg["A" + std::to_string(l)] = static_cast<int>(rng() % 2);
                asg["B" + std::to_string(l)] = static_cast<int>(rng() % 2);
            }
            asg["M"] = static_cast<int>(rng() % 2);
            const SectorMatrix m = evaluate(fib, psi.word, asg);
            CHECK(m.max_unitarity_defect() < 1e-9);
            CHECK(m.min_singular_value() > 1e-6);
        }
    }
    SUBCASE("wrapped signature validates the orbit") {
        const auto a = make_action(2);
        const Perm g{1, 0};
        const Orbit o = orbits(2, {g})[0];
        CHECK(module_pentagon_check(fib, a, g, o, {tau, tau}, {tau, tau}, {0, tau}, tau) <
              1e-9);
    }
}

TEST_CASE("unit slots act trivially") {
    const AnyonModel fib = fibonacci();
    const AnyonModel is = ising();
    const int tau = 1;
    SUBCASE("n=2 unit A-slots") {
        CHECK(unit_check(fib, 2, true, {tau, tau}, tau) < 1e-12);
        CHECK(unit_check(is, 2, true, {1, 2}, 1) < 1e-12);
    }
    SUBCASE("n=3 unit B-slots") {
        CHECK(unit_check(fib, 3, false, {tau, 0, tau}, tau) < 1e-12);
        CHECK(unit_check(is, 3, false, {1, 1, 2}, 0) < 1e-12);
    }
    SUBCASE("unit M leaves the shuffle unchanged") {
        // evaluate psi with M = 1 against the same word with the M cable
        // dropped; the blocks must agree sector by sector.
        const ShuffleAssociator psi = associator(2);
        Assignment with_m{{"A0", tau}, {"A1", tau}, {"B0", tau}, {"B1", tau}, {"M", 0}};
        const SectorMatrix a = evaluate(fib, psi.word, with_m);
        CabledBraidWord no_m = psi.word;
        no_m.cables.pop_back();
        Assignment without_m = with_m;
        without_m.erase("M");
        const SectorMatrix b = evaluate(fib, no_m, without_m);
        CHECK(a.max_unitarity_defect() < 1e-12);
        REQUIRE(a.blocks.size() == b.blocks.size());
        for (const auto& [c, blk] : a.blocks)
            CHECK((blk - b.blocks.at(c)).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("size-one orbits degenerate to the plain tensor product") {
    const AnyonModel fib = fibonacci();
    const ShuffleAssociator psi = associator(1);
    CHECK(psi.word.crossings.empty());
    const Assignment asg{{"A0", 1}, {"B0", 1}, {"M", 1}};
    CHECK(evaluate(fib, psi.word, asg).is_identity(0.0));
}

TEST_CASE("neutral structure") {
    const AnyonModel fib = fibonacci();
    SUBCASE("identity generator") {
        PermutationAction a = make_action(3);
        a.generators = {{"e", identity_perm(3)}};
        const CheckReport rep = neutral_structure_check(fib, a);
        CHECK(rep.max_residual < 1e-12);
    }
    SUBCASE("swap applied twice and componentwise braiding") {
        PermutationAction a = make_action(2);
        a.generators = {{"t", {1, 0}}};
        const CheckReport rep = neutral_structure_check(fib, a);
        CHECK(rep.max_residual < 1e-12);
        CHECK(rep.instances > 0);
    }
    SUBCASE("componentwise product for a mixed multi-index") {
        // braiding scalar of (tau,1) (x) (1,tau) factors as the product of
        // the two componentwise R-scalars, which are both 1
        const int tau = 1;
        const Eigen::MatrixXcd b1 = braid_generator_block(fib, {tau, 0}, 0, +1, tau);
        const Eigen::MatrixXcd b2 = braid_generator_block(fib, {0, tau}, 0, +1, tau);
        CHECK(std::abs(b1(0, 0) * b2(0, 0) - cxd(1.0)) < 1e-12);
    }
}
