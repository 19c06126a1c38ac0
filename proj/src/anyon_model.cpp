#include "permod/anyon_model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace permod {

namespace {

std::string tuple_str(const AnyonModel& m, std::initializer_list<int> idx) {
    std::string s = "(";
    bool first = true;
    for (int i : idx) {
        if (!first) s += ",";
        s += m.labels[i];
        first = false;
    }
    return s + ")";
}

} // namespace

int FBlock::row_index(int e) const {
    for (std::size_t i = 0; i < rows_e.size(); ++i)
        if (rows_e[i] == e) return static_cast<int>(i);
    return -1;
}

int FBlock::col_index(int f) const {
    for (std::size_t i = 0; i < cols_f.size(); ++i)
        if (cols_f[i] == f) return static_cast<int>(i);
    return -1;
}

int AnyonModel::label_index(const std::string& name) const {
    for (int i = 0; i < n_labels(); ++i)
        if (labels[i] == name) return i;
    throw Error("unknown label '" + name + "'");
}

cxd AnyonModel::f(int a, int b, int c, int d, int e, int ff) const {
    auto it = f_symbols.find({a, b, c, d, e, ff});
    return it == f_symbols.end() ? cxd(0.0) : it->second;
}

cxd AnyonModel::r(int a, int b, int c) const {
    auto it = r_symbols.find({a, b, c});
    if (it == r_symbols.end())
        throw Error("missing R-symbol at " + tuple_str(*this, {a, b, c}));
    return it->second;
}

std::uint64_t AnyonModel::fkey(int a, int b, int c, int d) {
    return (((static_cast<std::uint64_t>(a) << 16 | b) << 16 | c) << 16) | d;
}

const FBlock& AnyonModel::f_block(int a, int b, int c, int d) const {
    auto it = f_blocks_.find(fkey(a, b, c, d));
    if (it == f_blocks_.end())
        throw Error("no F-block at " + tuple_str(*this, {a, b, c, d}));
    return it->second;
}

void AnyonModel::build_tables() {
    n_ = n_labels();
    if (n_ <= 0) throw Error("model has no labels");
    if (n_ > 255) throw Error("model has too many labels");
    n_table_.assign(static_cast<std::size_t>(n_) * n_ * n_, 0);
    for (const auto& [key, mult] : fusion) {
        auto [a, b, c] = key;
        if (a < 0 || a >= n_ || b < 0 || b >= n_ || c < 0 || c >= n_)
            throw Error("fusion rule out of range");
        if (mult != 0 && mult != 1)
            throw Error("multiplicity error: N" + tuple_str(*this, {a, b, c}) + " = " +
                        std::to_string(static_cast<int>(mult)) + " (only N <= 1 supported)");
        n_table_[nidx(a, b, c)] = mult;
    }
    products_.assign(static_cast<std::size_t>(n_) * n_, {});
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c)
                if (fusion_ok(a, b, c)) products_[a * n_ + b].push_back(c);
}

void AnyonModel::build_f_blocks() {
    f_blocks_.clear();
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c)
                for (int d = 0; d < n_; ++d) {
                    FBlock blk;
                    for (int e : channels(a, b))
                        if (fusion_ok(e, c, d)) blk.rows_e.push_back(e);
                    for (int ff : channels(b, c))
                        if (fusion_ok(a, ff, d)) blk.cols_f.push_back(ff);
                    if (blk.rows_e.empty() && blk.cols_f.empty()) continue;
                    if (blk.rows_e.size() != blk.cols_f.size())
                        throw Error("F-block at " + tuple_str(*this, {a, b, c, d}) +
                                    " is not square; fusion rules are inconsistent");
                    const int dim = static_cast<int>(blk.rows_e.size());
                    blk.mat.resize(dim, dim);
                    for (int i = 0; i < dim; ++i)
                        for (int j = 0; j < dim; ++j) {
                            auto it = f_symbols.find({a, b, c, d, blk.rows_e[i], blk.cols_f[j]});
                            if (it == f_symbols.end())
                                throw Error("missing F-symbol at " +
                                            tuple_str(*this, {a, b, c, d, blk.rows_e[i],
                                                              blk.cols_f[j]}));
                            blk.mat(i, j) = it->second;
                        }
                    Eigen::FullPivLU<Eigen::MatrixXcd> lu(blk.mat);
                    if (!lu.isInvertible())
                        throw Error("singular F-block at " + tuple_str(*this, {a, b, c, d}));
                    blk.inv = lu.inverse();
                    f_blocks_.emplace(fkey(a, b, c, d), std::move(blk));
                }

    // Reject stray F-symbols outside the admissible set.
    for (const auto& [key, val] : f_symbols) {
        auto [a, b, c, d, e, ff] = key;
        if (!(fusion_ok(a, b, e) && fusion_ok(e, c, d) && fusion_ok(b, c, ff) &&
              fusion_ok(a, ff, d)))
            throw Error("F-symbol at inadmissible tuple " + tuple_str(*this, {a, b, c, d, e, ff}));
    }
}

void AnyonModel::validate_structure(double tol) const {
    if (unit < 0 || unit >= n_) throw Error("unit label out of range");
    if (static_cast<int>(dual.size()) != n_) throw Error("dual map has wrong size");
    for (int a = 0; a < n_; ++a) {
        if (dual[a] < 0 || dual[a] >= n_ || dual[dual[a]] != a)
            throw Error("dual is not an involution at label " + labels[a]);
    }
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            if (fusion_ok(unit, a, b) != (a == b))
                throw Error("unit constraint N(1,a,b) = delta_ab violated at " +
                            tuple_str(*this, {a, b}));
            if (fusion_ok(a, unit, b) != (a == b))
                throw Error("unit constraint N(a,1,b) = delta_ab violated at " +
                            tuple_str(*this, {a, b}));
            for (int c = 0; c < n_; ++c)
                if (fusion_ok(a, b, c) != fusion_ok(b, a, c))
                    throw Error("fusion rules are not commutative at " +
                                tuple_str(*this, {a, b, c}));
        }
    for (int a = 0; a < n_; ++a) {
        int duals = 0;
        for (int b = 0; b < n_; ++b)
            if (fusion_ok(a, b, unit)) {
                ++duals;
                if (b != dual[a])
                    throw Error("dual map disagrees with fusion at label " + labels[a]);
            }
        if (duals != 1) throw Error("label " + labels[a] + " does not have a unique dual");
    }

    if (static_cast<int>(twists.size()) != n_) throw Error("twist list has wrong size");
    for (int a = 0; a < n_; ++a)
        if (std::abs(std::abs(twists[a]) - 1.0) > 1e-6)
            throw Error("twist of " + labels[a] + " is not a phase");
    if (static_cast<int>(qdims.size()) != n_) throw Error("qdim list has wrong size");
    for (int a = 0; a < n_; ++a)
        if (!(qdims[a] > 0)) throw Error("qdim of " + labels[a] + " is not positive");
    // Quantum dimensions must be a character of the fusion ring.
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            double sum = 0;
            for (int c : channels(a, b)) sum += qdims[c];
            if (std::abs(sum - qdims[a] * qdims[b]) > 1e-6)
                throw Error("qdims are not multiplicative at " + tuple_str(*this, {a, b}));
        }

    if (s_matrix.rows() != n_ || s_matrix.cols() != n_) throw Error("S matrix has wrong shape");
    if (t_matrix.rows() != n_ || t_matrix.cols() != n_) throw Error("T matrix has wrong shape");
    if ((s_matrix - s_matrix.transpose()).cwiseAbs().maxCoeff() > tol)
        throw Error("S matrix is not symmetric");
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(s_matrix);
    if (!lu.isInvertible()) throw Error("S matrix is singular");
    // T diagonal with entries theta_a up to one global phase.
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (a != b && std::abs(t_matrix(a, b)) > tol)
                throw Error("T matrix is not diagonal");
    const cxd anomaly = t_matrix(0, 0) / twists[0];
    if (std::abs(std::abs(anomaly) - 1.0) > 1e-6)
        throw Error("T matrix diagonal is not a phase times the twists");
    for (int a = 0; a < n_; ++a)
        if (std::abs(t_matrix(a, a) - anomaly * twists[a]) > 1e-6)
            throw Error("T matrix diagonal disagrees with the twist of " + labels[a]);

    // R-symbols exactly on admissible channels.
    for (const auto& [key, val] : r_symbols) {
        auto [a, b, c] = key;
        if (!fusion_ok(a, b, c))
            throw Error("R-symbol at inadmissible tuple " + tuple_str(*this, {a, b, c}));
        if (std::abs(val) < 1e-12)
            throw Error("R-symbol at " + tuple_str(*this, {a, b, c}) + " is zero");
    }
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c : channels(a, b))
                if (!r_symbols.count({a, b, c}))
                    throw Error("missing R-symbol at " + tuple_str(*this, {a, b, c}));

    // Unit-normalized gauge: F and R with unit arguments are 1. The braid
    // evaluation treats unit strands as strict, so this is load-bearing.
    for (const auto& [key, val] : f_symbols) {
        auto [a, b, c, d, e, ff] = key;
        if ((a == unit || b == unit || c == unit) && std::abs(val - cxd(1.0)) > tol)
            throw Error("F-symbol with unit argument differs from 1 at " +
                        tuple_str(*this, {a, b, c, d, e, ff}));
    }
    for (const auto& [key, val] : r_symbols) {
        auto [a, b, c] = key;
        if ((a == unit || b == unit) && std::abs(val - cxd(1.0)) > tol)
            throw Error("R-symbol with unit argument differs from 1 at " +
                        tuple_str(*this, {a, b, c}));
    }
}

void AnyonModel::finalize(bool verify, double tol) {
    build_tables();
    build_f_blocks();
    validate_structure(tol);
    if (verify) {
        CheckReport p = verify_pentagon();
        if (!p.pass(tol))
            throw Error("pentagon identity violated: " + p.worst + " residual " +
                        std::to_string(p.max_residual));
        CheckReport h = verify_hexagon();
        if (!h.pass(tol))
            throw Error("hexagon identity violated: " + h.worst + " residual " +
                        std::to_string(h.max_residual));
    }
}

void AnyonModel::set_f_symbol(int a, int b, int c, int d, int e, int ff, cxd value) {
    auto it = f_symbols.find({a, b, c, d, e, ff});
    if (it == f_symbols.end())
        throw Error("set_f_symbol: no F-symbol at " + tuple_str(*this, {a, b, c, d, e, ff}));
    it->second = value;
    build_f_blocks();
}

CheckReport AnyonModel::verify_pentagon() const {
    CheckReport rep;
    rep.name = "pentagon";
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c)
                for (int d = 0; d < n_; ++d)
                    for (int ff : channels(a, b))
                        for (int g : channels(ff, c))
                            for (int e : channels(g, d))
                                for (int h : channels(c, d))
                                    for (int k : channels(b, h)) {
                                        if (!fusion_ok(a, k, e)) continue;
                                        const cxd lhs =
                                            f(ff, c, d, e, g, h) * f(a, b, h, e, ff, k);
                                        cxd rhs(0.0);
                                        for (int hp : channels(b, c))
                                            rhs += f(a, b, c, g, ff, hp) *
                                                   f(a, hp, d, e, g, k) *
                                                   f(b, c, d, k, hp, h);
                                        const double resid = std::abs(lhs - rhs);
                                        ++rep.instances;
                                        if (resid > rep.max_residual) {
                                            rep.max_residual = resid;
                                            rep.worst = "pentagon at (a,b,c,d,e)=" +
                                                        tuple_str(*this, {a, b, c, d, e});
                                        }
                                    }
    return rep;
}

CheckReport AnyonModel::verify_hexagon() const {
    CheckReport rep;
    rep.name = "hexagon";
    for (int sign : {+1, -1})
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                for (int c = 0; c < n_; ++c)
                    for (int d = 0; d < n_; ++d)
                        for (int e : channels(a, c)) {
                            if (!fusion_ok(e, b, d)) continue;
                            for (int g : channels(c, b)) {
                                if (!fusion_ok(a, g, d)) continue;
                                const cxd r1 = sign > 0 ? r(c, a, e) : cxd(1.0) / r(a, c, e);
                                const cxd r2 = sign > 0 ? r(c, b, g) : cxd(1.0) / r(b, c, g);
                                const cxd lhs = r1 * f(a, c, b, d, e, g) * r2;
                                cxd rhs(0.0);
                                for (int ff : channels(a, b)) {
                                    if (!fusion_ok(c, ff, d)) continue;
                                    const cxd rm =
                                        sign > 0 ? r(c, ff, d) : cxd(1.0) / r(ff, c, d);
                                    rhs += f(c, a, b, d, e, ff) * rm * f(a, b, c, d, ff, g);
                                }
                                const double resid = std::abs(lhs - rhs);
                                ++rep.instances;
                                if (resid > rep.max_residual) {
                                    rep.max_residual = resid;
                                    rep.worst = std::string("hexagon(") +
                                                (sign > 0 ? "+" : "-") + ") at (a,b,c,d)=" +
                                                tuple_str(*this, {a, b, c, d});
                                }
                            }
                        }
    return rep;
}

} // namespace permod
