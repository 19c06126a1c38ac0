#include <cmath>
#include <numbers>
#include <numeric>

#include "permod/anyon_model.hpp"

namespace permod {

namespace {

constexpr double kPi = std::numbers::pi;

/// Insert every admissible F-symbol with value 1 and every admissible
/// R-symbol with value 1; specific entries are overridden afterwards.
void fill_trivial_symbols(AnyonModel& m) {
    const int n = m.n_labels();
    auto ok = [&](int a, int b, int c) { return m.fusion.count({a, b, c}) != 0; };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (ok(a, b, c)) m.r_symbols[{a, b, c}] = cxd(1.0);
                for (int d = 0; d < n; ++d)
                    for (int e = 0; e < n; ++e)
                        for (int f = 0; f < n; ++f)
                            if (ok(a, b, e) && ok(e, c, d) && ok(b, c, f) && ok(a, f, d))
                                m.f_symbols[{a, b, c, d, e, f}] = cxd(1.0);
            }
}

cxd phase(double arg) { return std::polar(1.0, arg); }

} // namespace

AnyonModel fibonacci() {
    AnyonModel m;
    m.labels = {"1", "tau"};
    m.unit = 0;
    m.dual = {0, 1};
    const int I = 0, T = 1;
    for (int a = 0; a < 2; ++a) {
        m.fusion[{I, a, a}] = 1;
        m.fusion[{a, I, a}] = 1;
    }
    m.fusion[{T, T, I}] = 1;
    m.fusion[{T, T, T}] = 1;
    fill_trivial_symbols(m);

    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    m.f_symbols[{T, T, T, T, I, I}] = 1.0 / phi;
    m.f_symbols[{T, T, T, T, I, T}] = 1.0 / std::sqrt(phi);
    m.f_symbols[{T, T, T, T, T, I}] = 1.0 / std::sqrt(phi);
    m.f_symbols[{T, T, T, T, T, T}] = -1.0 / phi;

    m.r_symbols[{T, T, I}] = phase(-4.0 * kPi / 5.0);
    m.r_symbols[{T, T, T}] = phase(3.0 * kPi / 5.0);

    m.twists = {cxd(1.0), phase(4.0 * kPi / 5.0)};
    m.qdims = {1.0, phi};

    const double D = std::sqrt(phi + 2.0);
    m.s_matrix.resize(2, 2);
    m.s_matrix << 1.0 / D, phi / D, phi / D, -1.0 / D;
    m.t_matrix = Eigen::MatrixXcd::Zero(2, 2);
    m.t_matrix(0, 0) = m.twists[0];
    m.t_matrix(1, 1) = m.twists[1];

    m.finalize();
    return m;
}

AnyonModel ising() {
    AnyonModel m;
    m.labels = {"1", "sigma", "psi"};
    m.unit = 0;
    m.dual = {0, 1, 2};
    const int I = 0, S = 1, P = 2;
    for (int a = 0; a < 3; ++a) {
        m.fusion[{I, a, a}] = 1;
        m.fusion[{a, I, a}] = 1;
    }
    m.fusion[{S, S, I}] = 1;
    m.fusion[{S, S, P}] = 1;
    m.fusion[{S, P, S}] = 1;
    m.fusion[{P, S, S}] = 1;
    m.fusion[{P, P, I}] = 1;
    fill_trivial_symbols(m);

    const double s = 1.0 / std::sqrt(2.0);
    m.f_symbols[{S, S, S, S, I, I}] = s;
    m.f_symbols[{S, S, S, S, I, P}] = s;
    m.f_symbols[{S, S, S, S, P, I}] = s;
    m.f_symbols[{S, S, S, S, P, P}] = -s;
    m.f_symbols[{S, P, S, P, S, S}] = -1.0;
    m.f_symbols[{P, S, P, S, S, S}] = -1.0;

    m.r_symbols[{S, S, I}] = phase(-kPi / 8.0);
    m.r_symbols[{S, S, P}] = phase(3.0 * kPi / 8.0);
    m.r_symbols[{P, P, I}] = -1.0;
    m.r_symbols[{S, P, S}] = cxd(0.0, -1.0);
    m.r_symbols[{P, S, S}] = cxd(0.0, -1.0);

    m.twists = {cxd(1.0), phase(kPi / 8.0), cxd(-1.0)};
    m.qdims = {1.0, std::sqrt(2.0), 1.0};

    m.s_matrix.resize(3, 3);
    const double r2 = std::sqrt(2.0);
    m.s_matrix << 0.5, r2 / 2.0, 0.5, r2 / 2.0, 0.0, -r2 / 2.0, 0.5, -r2 / 2.0, 0.5;
    m.t_matrix = Eigen::MatrixXcd::Zero(3, 3);
    for (int a = 0; a < 3; ++a) m.t_matrix(a, a) = m.twists[a];

    m.finalize();
    return m;
}

AnyonModel vec_zn(int N, int q) {
    if (N < 1) throw Error("vec_zn: N must be positive");
    if (q == 0) q = (N % 2 == 0) ? 1 : 2;
    if ((static_cast<long long>(q) * N) % 2 != 0)
        throw Error("vec_zn: q*N must be even for a consistent associator");
    if (std::gcd(q, N) != 1)
        throw Error("vec_zn: gcd(q,N) must be 1 for a modular S matrix");

    AnyonModel m;
    for (int a = 0; a < N; ++a) m.labels.push_back(std::to_string(a));
    m.unit = 0;
    m.dual.resize(N);
    for (int a = 0; a < N; ++a) m.dual[a] = (N - a) % N;
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) m.fusion[{a, b, (a + b) % N}] = 1;

    // Associator from the quadratic form theta_a = exp(i pi q a^2 / N):
    // F(a,b,c) = (-1)^(q a carry(b,c)), R(a,b) = exp(i pi q a b / N).
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            const int ab = (a + b) % N;
            m.r_symbols[{a, b, ab}] = phase(kPi * q * a * b / N);
            for (int c = 0; c < N; ++c) {
                const int carry = (b + c) / N;
                const double sign = (q * a * carry) % 2 == 0 ? 1.0 : -1.0;
                m.f_symbols[{a, b, c, (a + b + c) % N, ab, (b + c) % N}] = sign;
            }
        }

    m.twists.resize(N);
    m.qdims.assign(N, 1.0);
    for (int a = 0; a < N; ++a) m.twists[a] = phase(kPi * q * a * a / N);

    m.s_matrix.resize(N, N);
    m.t_matrix = Eigen::MatrixXcd::Zero(N, N);
    const double root = std::sqrt(static_cast<double>(N));
    for (int a = 0; a < N; ++a) {
        m.t_matrix(a, a) = m.twists[a];
        for (int b = 0; b < N; ++b)
            m.s_matrix(a, b) = phase(-2.0 * kPi * q * a * b / N) / root;
    }

    m.finalize();
    return m;
}

bool is_builtin_name(const std::string& name) {
    return name == "fibonacci" || name == "ising" || name.rfind("vec_z", 0) == 0;
}

AnyonModel builtin_model(const std::string& name) {
    if (name == "fibonacci") return fibonacci();
    if (name == "ising") return ising();
    if (name.rfind("vec_z", 0) == 0) {
        const std::string rest = name.substr(5);
        const auto qpos = rest.find("_q");
        try {
            if (qpos == std::string::npos) return vec_zn(std::stoi(rest));
            return vec_zn(std::stoi(rest.substr(0, qpos)), std::stoi(rest.substr(qpos + 2)));
        } catch (const std::invalid_argument&) {
            throw Error("unknown built-in model '" + name + "'");
        } catch (const std::out_of_range&) {
            throw Error("unknown built-in model '" + name + "'");
        }
    }
    throw Error("unknown built-in model '" + name + "'");
}

} // namespace permod
