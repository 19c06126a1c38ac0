#include "permod/braid.hpp"

#include <Eigen/SVD>
#include <algorithm>

namespace permod {

namespace {

void check_sign(int sign) {
    if (sign != 1 && sign != -1) throw Error("crossing sign must be +1 or -1");
}

/// Strand-level schedule for a positive block crossing at strand offset p:
/// each of the m left strands, rightmost first, passes right over all n
/// right strands.
std::vector<int> positive_schedule(int p, int m, int n) {
    std::vector<int> sched;
    sched.reserve(static_cast<std::size_t>(m) * n);
    for (int i = m - 1; i >= 0; --i)
        for (int j = 0; j < n; ++j) sched.push_back(p + i + j);
    return sched;
}

} // namespace

void CabledBraidWord::validate() const {
    (void)final_cable_order();
}

std::vector<int> CabledBraidWord::final_cable_order() const {
    std::vector<int> order(cables.size());
    for (std::size_t i = 0; i < cables.size(); ++i) order[i] = static_cast<int>(i);
    for (const CableCrossing& c : crossings) {
        check_sign(c.sign);
        if (c.pos < 0 || c.pos + 1 >= static_cast<int>(order.size()))
            throw Error("cable crossing position out of range");
        std::swap(order[c.pos], order[c.pos + 1]);
    }
    return order;
}

ElementaryWord expand(const CabledBraidWord& word, const Assignment& assignment) {
    ElementaryWord out;
    std::vector<int> sizes;   // per cable in current order
    for (const Cable& c : word.cables) {
        sizes.push_back(c.strands());
        for (const std::string& slot : c.slots) {
            auto it = assignment.find(slot);
            if (it == assignment.end()) throw Error("no label assigned to slot '" + slot + "'");
            out.word.push_back(it->second);
        }
    }
    for (const CableCrossing& cr : word.crossings) {
        check_sign(cr.sign);
        if (cr.pos < 0 || cr.pos + 1 >= static_cast<int>(sizes.size()))
            throw Error("cable crossing position out of range");
        int offset = 0;
        for (int i = 0; i < cr.pos; ++i) offset += sizes[i];
        const int m = sizes[cr.pos], n = sizes[cr.pos + 1];
        std::vector<int> sched;
        if (cr.sign > 0) {
            sched = positive_schedule(offset, m, n);
        } else {
            // Inverse of the positive crossing that would have produced this
            // configuration: reversed schedule, all crossings negative.
            sched = positive_schedule(offset, n, m);
            std::reverse(sched.begin(), sched.end());
        }
        for (int p : sched) out.crossings.push_back({p, cr.sign});
        std::swap(sizes[cr.pos], sizes[cr.pos + 1]);
    }
    return out;
}

SectorMatrix SectorMatrix::then(const SectorMatrix& nxt) const {
    if (target_word != nxt.source_word)
        throw Error("SectorMatrix::then: words do not compose");
    if (blocks.size() != nxt.blocks.size()) throw Error("SectorMatrix::then: sector mismatch");
    SectorMatrix out;
    out.source_word = source_word;
    out.target_word = nxt.target_word;
    for (const auto& [c, m] : blocks) {
        auto it = nxt.blocks.find(c);
        if (it == nxt.blocks.end()) throw Error("SectorMatrix::then: sector mismatch");
        out.blocks[c] = it->second * m;
    }
    return out;
}

bool SectorMatrix::is_identity(double tol) const {
    for (const auto& [c, m] : blocks) {
        if (m.rows() != m.cols()) return false;
        if ((m - Eigen::MatrixXcd::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() > tol)
            return false;
    }
    return true;
}

double SectorMatrix::max_unitarity_defect() const {
    double worst = 0.0;
    for (const auto& [c, m] : blocks) {
        const Eigen::MatrixXcd g = m.adjoint() * m;
        worst = std::max(worst,
                         (g - Eigen::MatrixXcd::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff());
    }
    return worst;
}

double SectorMatrix::min_singular_value() const {
    double smallest = std::numeric_limits<double>::infinity();
    for (const auto& [c, m] : blocks) {
        if (m.size() == 0) continue;
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
        smallest = std::min(smallest, svd.singularValues().minCoeff());
    }
    return smallest;
}

SectorMatrix sector_identity(const AnyonModel& model, const std::vector<int>& word) {
    SectorMatrix out;
    out.source_word = word;
    out.target_word = word;
    for (int c : sectors(model, word)) {
        const int d = tree_basis(model, word, c).dim();
        out.blocks[c] = Eigen::MatrixXcd::Identity(d, d);
    }
    return out;
}

double max_abs_diff(const SectorMatrix& a, const SectorMatrix& b) {
    if (a.source_word != b.source_word || a.target_word != b.target_word)
        throw Error("max_abs_diff: words differ");
    if (a.blocks.size() != b.blocks.size()) throw Error("max_abs_diff: sector sets differ");
    double worst = 0.0;
    for (const auto& [c, m] : a.blocks) {
        auto it = b.blocks.find(c);
        if (it == b.blocks.end()) throw Error("max_abs_diff: sector sets differ");
        if (m.rows() != it->second.rows() || m.cols() != it->second.cols())
            throw Error("max_abs_diff: block shapes differ");
        if (m.size() > 0) worst = std::max(worst, (m - it->second).cwiseAbs().maxCoeff());
    }
    return worst;
}

namespace {

/// One elementary crossing applied to every tree of `src`: returns the block
/// of the move and the target basis.
Eigen::MatrixXcd crossing_block(const AnyonModel& model, const FusionTreeBasis& src,
                                const FusionTreeBasis& dst, int i, int sign) {
    const int k = static_cast<int>(src.word.size());
    const int a = src.word[i], b = src.word[i + 1];
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dst.dim(), src.dim());
    for (int col = 0; col < src.dim(); ++col) {
        const std::vector<int>& t = src.trees[col];
        auto internal = [&](int j) { return j == 0 ? src.word[0] : t[j - 1]; };
        if (i == 0) {
            // The first two strands attach directly: a scalar R on E1.
            const int e1 = k == 2 ? src.total : t[0];
            const cxd scalar = sign > 0 ? model.r(a, b, e1) : cxd(1.0) / model.r(b, a, e1);
            const int row = tree_index(dst, t);
            if (row < 0) throw Error("crossing_block: missing target tree");
            out(row, col) += scalar;
            continue;
        }
        const int x = internal(i - 1);
        const int y = (i + 1 == k - 1) ? src.total : t[i];
        const int e = t[i - 1];
        const FBlock& fw = model.f_block(x, a, b, y);
        const FBlock& bw = model.f_block(x, b, a, y);
        const int erow = fw.row_index(e);
        if (erow < 0) throw Error("crossing_block: inadmissible source tree");
        std::vector<int> target_tree = t;
        for (std::size_t j = 0; j < bw.rows_e.size(); ++j) {
            const int ep = bw.rows_e[j];
            cxd sum(0.0);
            for (std::size_t fi = 0; fi < fw.cols_f.size(); ++fi) {
                const int f = fw.cols_f[fi];
                const cxd rf = sign > 0 ? model.r(a, b, f) : cxd(1.0) / model.r(b, a, f);
                const int fcol = bw.col_index(f);
                if (fcol < 0) continue;
                sum += fw.mat(erow, fi) * rf * bw.inv(fcol, j);
            }
            if (std::abs(sum) == 0.0) continue;
            target_tree[i - 1] = ep;
            const int row = tree_index(dst, target_tree);
            if (row < 0) throw Error("crossing_block: missing target tree");
            out(row, col) += sum;
        }
    }
    return out;
}

} // namespace

Eigen::MatrixXcd braid_generator_block(const AnyonModel& model, const std::vector<int>& word,
                                       int i, int sign, int total) {
    if (i < 0 || i + 1 >= static_cast<int>(word.size()))
        throw Error("braid_generator: index out of range");
    check_sign(sign);
    std::vector<int> swapped = word;
    std::swap(swapped[i], swapped[i + 1]);
    const FusionTreeBasis src = tree_basis(model, word, total);
    const FusionTreeBasis dst = tree_basis(model, swapped, total);
    return crossing_block(model, src, dst, i, sign);
}

SectorMatrix braid_generator(const AnyonModel& model, const std::vector<int>& word, int i,
                             int sign) {
    if (i < 0 || i + 1 >= static_cast<int>(word.size()))
        throw Error("braid_generator: index out of range");
    check_sign(sign);
    SectorMatrix out;
    out.source_word = word;
    out.target_word = word;
    std::swap(out.target_word[i], out.target_word[i + 1]);
    for (int c : sectors(model, word))
        out.blocks[c] = braid_generator_block(model, word, i, sign, c);
    return out;
}

SectorMatrix evaluate(const AnyonModel& model, const CabledBraidWord& word,
                      const Assignment& assignment) {
    const ElementaryWord ew = expand(word, assignment);
    if (ew.word.empty()) throw Error("evaluate: word has no strands");

    SectorMatrix out;
    out.source_word = ew.word;
    out.target_word = ew.word;

    std::vector<int> current = ew.word;
    std::vector<FusionTreeBasis> bases;
    const std::vector<int> secs = sectors(model, ew.word);
    for (int c : secs) {
        const FusionTreeBasis b = tree_basis(model, ew.word, c);
        out.blocks[c] = Eigen::MatrixXcd::Identity(b.dim(), b.dim());
        bases.push_back(b);
    }
    for (const CableCrossing& cr : ew.crossings) {
        if (cr.pos < 0 || cr.pos + 1 >= static_cast<int>(current.size()))
            throw Error("evaluate: strand crossing out of range");
        std::vector<int> next = current;
        std::swap(next[cr.pos], next[cr.pos + 1]);
        for (std::size_t s = 0; s < secs.size(); ++s) {
            FusionTreeBasis dst = tree_basis(model, next, secs[s]);
            if (dst.dim() != bases[s].dim())
                throw Error("evaluate: sector dimension changed under a permutation");
            out.blocks[secs[s]] =
                crossing_block(model, bases[s], dst, cr.pos, cr.sign) * out.blocks[secs[s]];
            bases[s] = std::move(dst);
        }
        current = std::move(next);
    }
    out.target_word = current;
    return out;
}

WordBuilder::WordBuilder(std::vector<Cable> cables) {
    word_.cables = std::move(cables);
    order_.resize(word_.cables.size());
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = static_cast<int>(i);
    // Names must be unique so crossings can be requested by name.
    for (std::size_t i = 0; i < word_.cables.size(); ++i)
        for (std::size_t j = i + 1; j < word_.cables.size(); ++j)
            if (word_.cables[i].name == word_.cables[j].name)
                throw Error("duplicate cable name '" + word_.cables[i].name + "'");
}

int WordBuilder::position_of(const std::string& cable_name) const {
    for (std::size_t p = 0; p < order_.size(); ++p)
        if (word_.cables[order_[p]].name == cable_name) return static_cast<int>(p);
    throw Error("no cable named '" + cable_name + "'");
}

void WordBuilder::cross(const std::string& left, const std::string& right, int sign) {
    check_sign(sign);
    const int p = position_of(left);
    if (p + 1 >= static_cast<int>(order_.size()) ||
        word_.cables[order_[p + 1]].name != right)
        throw Error("cables '" + left + "' and '" + right + "' are not adjacent");
    word_.crossings.push_back({p, sign});
    std::swap(order_[p], order_[p + 1]);
}

void WordBuilder::check_contiguous(const std::vector<std::string>& group) const {
    if (group.empty()) return;
    const int p = position_of(group.front());
    for (std::size_t i = 1; i < group.size(); ++i)
        if (position_of(group[i]) != p + static_cast<int>(i))
            throw Error("group is not contiguous at cable '" + group[i] + "'");
}

void WordBuilder::cross_groups(const std::vector<std::string>& left,
                               const std::vector<std::string>& right, int sign) {
    check_sign(sign);
    check_contiguous(left);
    check_contiguous(right);
    if (left.empty() || right.empty()) return;
    if (sign > 0) {
        for (int i = static_cast<int>(left.size()) - 1; i >= 0; --i)
            for (std::size_t j = 0; j < right.size(); ++j) cross(left[i], right[j], sign);
    } else {
        for (std::size_t j = 0; j < right.size(); ++j)
            for (int i = static_cast<int>(left.size()) - 1; i >= 0; --i)
                cross(left[i], right[j], sign);
    }
}

std::vector<std::string> WordBuilder::current_order() const {
    std::vector<std::string> names;
    for (int idx : order_) names.push_back(word_.cables[idx].name);
    return names;
}

CabledBraidWord WordBuilder::take() { return std::move(word_); }

} // namespace permod
