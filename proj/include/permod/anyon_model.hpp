#pragma once

#include <array>
#include <complex>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "permod/error.hpp"

namespace permod {

using cxd = std::complex<double>;

constexpr double kDefaultTol = 1e-9;

/// Result of one verification pass: the largest residual seen, how many
/// identity instances were checked, and which instance was worst.
struct CheckReport {
    std::string name;
    double max_residual = 0.0;
    long long instances = 0;
    std::string worst;

    bool pass(double tol = kDefaultTol) const { return max_residual <= tol; }
};

/// One F-matrix block [F^{abc}_d]: rows indexed by the channel e of a*b,
/// columns by the channel f of b*c, restricted to trees with total d.
struct FBlock {
    std::vector<int> rows_e;
    std::vector<int> cols_f;
    Eigen::MatrixXcd mat;
    Eigen::MatrixXcd inv;

    int row_index(int e) const;
    int col_index(int f) const;
};

/// Numeric data of a multiplicity-free modular tensor category in a fixed
/// skeletal gauge. Conventions (fixed globally, documented in the README):
///
///   - trees are left canonical, ((a1 a2) a3) ... ;
///   - [F^{abc}_d]_{ef} is the coefficient of the right tree (a(bc))_f in
///     the left tree ((ab)c)_e;
///   - R^{ab}_c is the eigenvalue of the braiding c_{a,b} : ab -> ba on the
///     fusion channel c;
///   - unit-normalized gauge: every F with a unit argument and every R with
///     a unit argument equals 1.
///
/// Immutable after finalize(); all queries are const and thread-safe.
class AnyonModel {
public:
    std::vector<std::string> labels;
    int unit = 0;
    std::vector<int> dual;
    std::map<std::array<int, 3>, char> fusion;          // (a,b,c) -> N in {0,1}
    std::map<std::array<int, 6>, cxd> f_symbols;        // (a,b,c,d,e,f)
    std::map<std::array<int, 3>, cxd> r_symbols;        // (a,b,c)
    std::vector<cxd> twists;
    std::vector<double> qdims;
    Eigen::MatrixXcd s_matrix;
    Eigen::MatrixXcd t_matrix;

    int n_labels() const { return static_cast<int>(labels.size()); }
    int label_index(const std::string& name) const;

    bool fusion_ok(int a, int b, int c) const { return n_table_[nidx(a, b, c)] != 0; }
    const std::vector<int>& channels(int a, int b) const { return products_[a * n_ + b]; }

    cxd f(int a, int b, int c, int d, int e, int ff) const;
    cxd r(int a, int b, int c) const;
    const FBlock& f_block(int a, int b, int c, int d) const;

    /// Build tables and validate structure. With verify=true also runs the
    /// pentagon and hexagon checks and throws on the first failure.
    void finalize(bool verify = true, double tol = kDefaultTol);

    CheckReport verify_pentagon() const;
    CheckReport verify_hexagon() const;

    /// Replace one F-symbol (used by perturbation tests); re-derives the
    /// cached blocks but does not re-verify.
    void set_f_symbol(int a, int b, int c, int d, int e, int ff, cxd value);

private:
    int n_ = 0;
    std::vector<char> n_table_;
    std::vector<std::vector<int>> products_;
    std::unordered_map<std::uint64_t, FBlock> f_blocks_;

    std::size_t nidx(int a, int b, int c) const {
        return (static_cast<std::size_t>(a) * n_ + b) * n_ + c;
    }
    static std::uint64_t fkey(int a, int b, int c, int d);
    void build_tables();
    void build_f_blocks();
    void validate_structure(double tol) const;
};

/// Built-in models. vec_zn takes the quadratic form exponent q with twists
/// theta_a = exp(i pi q a^2 / N); q*N must be even and gcd(q,N)=1.
/// q=0 selects the default (2 for odd N, 1 for even N).
AnyonModel fibonacci();
AnyonModel ising();
AnyonModel vec_zn(int N, int q = 0);

/// Resolve "fibonacci", "ising", "vec_z<N>" or "vec_z<N>_q<Q>".
/// Returns false if the name does not look like a built-in.
bool is_builtin_name(const std::string& name);
AnyonModel builtin_model(const std::string& name);

} // namespace permod
