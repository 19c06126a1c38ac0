#include "permod/sweeps.hpp"

#include <random>

#include "permod/alpha_invariants.hpp"
#include "permod/permutation_module.hpp"

namespace permod {

namespace {

std::string describe(const AnyonModel& model, const std::vector<int>& labels) {
    std::string s = "(";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i > 0) s += ",";
        s += model.labels[labels[i]];
    }
    return s + ")";
}

/// Runs fn over every assignment (exhaustive) or `samples` seeded draws.
template <typename Fn>
void for_each_assignment(int n_labels, int slots, bool exhaustive, int samples,
                         std::uint64_t seed, Fn&& fn) {
    if (exhaustive) {
        std::vector<int> a(slots, 0);
        while (true) {
            fn(a);
            int pos = slots - 1;
            while (pos >= 0 && a[pos] == n_labels - 1) a[pos--] = 0;
            if (pos < 0) break;
            ++a[pos];
        }
        return;
    }
    std::mt19937_64 rng(seed);
    std::vector<int> a(slots);
    for (int s = 0; s < samples; ++s) {
        for (int& v : a) v = static_cast<int>(rng() % n_labels);
        fn(a);
    }
}

} // namespace

long long exhaustive_size(int n_labels, int slots, long long cap) {
    long long total = 1;
    for (int i = 0; i < slots; ++i) {
        total *= n_labels;
        if (total > cap) return -1;
    }
    return total;
}

namespace {

void guard_exhaustive(const AnyonModel& model, int slots, bool exhaustive) {
    if (exhaustive && exhaustive_size(model.n_labels(), slots) < 0)
        throw Error("exhaustive sweep over " + std::to_string(slots) +
                    " slots is too large; use a sampled sweep");
}

} // namespace

SweepResult pentagon_sweep(const AnyonModel& model, int n, bool exhaustive, int samples,
                           std::uint64_t seed) {
    SweepResult res;
    const int slots = 3 * n + 1;
    guard_exhaustive(model, slots, exhaustive);
    for_each_assignment(model.n_labels(), slots, exhaustive, samples, seed,
                        [&](const std::vector<int>& asg) {
        const std::vector<int> a(asg.begin(), asg.begin() + n);
        const std::vector<int> b(asg.begin() + n, asg.begin() + 2 * n);
        const std::vector<int> c(asg.begin() + 2 * n, asg.begin() + 3 * n);
        const int m = asg[3 * n];
        const double resid = module_pentagon_check(model, n, a, b, c, m);
        ++res.instances;
        if (resid > res.max_residual) {
            res.max_residual = resid;
            res.worst = "pentagon n=" + std::to_string(n) + " at A=" + describe(model, a) +
                        " B=" + describe(model, b) + " C=" + describe(model, c) +
                        " M=" + model.labels[m];
        }
    });
    return res;
}

SweepResult gamma_sweep(const AnyonModel& model, int n, bool exhaustive, int samples,
                        std::uint64_t seed) {
    SweepResult res;
    const int slots = 2 * n + 1;
    guard_exhaustive(model, slots, exhaustive);
    for_each_assignment(model.n_labels(), slots, exhaustive, samples, seed,
                        [&](const std::vector<int>& asg) {
        const std::vector<int> u(asg.begin(), asg.begin() + n);
        const std::vector<int> v(asg.begin() + n, asg.begin() + 2 * n);
        const int m = asg[2 * n];
        const double resid = check_gamma_naturality(model, n, u, v, m);
        res.min_singular = std::min(res.min_singular, gamma_min_singular(model, n, u, m));
        ++res.instances;
        if (resid > res.max_residual) {
            res.max_residual = resid;
            res.worst = "naturality n=" + std::to_string(n) + " at U=" + describe(model, u) +
                        " V=" + describe(model, v) + " M=" + model.labels[m];
        }
    });
    return res;
}

SweepResult induction_sweep(const AnyonModel& model, int n, bool exhaustive, int samples,
                            std::uint64_t seed) {
    SweepResult res;
    const int slots = 2 * n + 1;
    guard_exhaustive(model, slots, exhaustive);
    for_each_assignment(model.n_labels(), slots, exhaustive, samples, seed,
                        [&](const std::vector<int>& asg) {
        const std::vector<int> u(asg.begin(), asg.begin() + n);
        const std::vector<int> v(asg.begin() + n, asg.begin() + 2 * n);
        const int m = asg[2 * n];
        const double resid = induction_step_check(model, n, u, v, m);
        ++res.instances;
        if (resid > res.max_residual) {
            res.max_residual = resid;
            res.worst = "induction n=" + std::to_string(n) + " at U=" + describe(model, u) +
                        " V=" + describe(model, v) + " M=" + model.labels[m];
        }
    });
    return res;
}

} // namespace permod
