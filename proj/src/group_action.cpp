#include "permod/group_action.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace permod {

Perm identity_perm(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

bool is_permutation(const Perm& p) {
    const int n = static_cast<int>(p.size());
    std::vector<char> seen(n, 0);
    for (int v : p) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

Perm compose(const Perm& g1, const Perm& g2) {
    if (g1.size() != g2.size()) throw Error("compose: size mismatch");
    Perm r(g1.size());
    for (std::size_t x = 0; x < g2.size(); ++x) r[x] = g1[g2[x]];
    return r;
}

Perm inverse(const Perm& p) {
    Perm r(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) r[p[x]] = static_cast<int>(x);
    return r;
}

Perm perm_power(const Perm& p, long long k) {
    const int n = static_cast<int>(p.size());
    Perm base = k < 0 ? inverse(p) : p;
    long long m = k < 0 ? -k : k;
    Perm r = identity_perm(n);
    while (m > 0) {
        if (m & 1) r = compose(base, r);
        base = compose(base, base);
        m >>= 1;
    }
    return r;
}

const Perm* PermutationAction::find_generator(const std::string& name) const {
    for (const auto& [gname, p] : generators)
        if (gname == name) return &p;
    return nullptr;
}

void PermutationAction::validate() const {
    if (x_labels.empty()) throw Error("action: X must be non-empty");
    std::set<std::string> names(x_labels.begin(), x_labels.end());
    if (names.size() != x_labels.size()) throw Error("action: duplicate element names in X");
    for (const auto& [gname, p] : generators) {
        if (static_cast<int>(p.size()) != size())
            throw Error("action: generator '" + gname + "' has wrong length");
        if (!is_permutation(p))
            throw Error("action: generator '" + gname + "' is not a bijection");
    }
}

bool Orbit::contains(int x) const {
    return std::find(elements.begin(), elements.end(), x) != elements.end();
}

std::vector<Perm> enumerate_group(const PermutationAction& action, std::size_t cap) {
    action.validate();
    const int n = action.size();
    std::set<Perm> elements;
    elements.insert(identity_perm(n));
    std::vector<Perm> frontier(elements.begin(), elements.end());
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& g : frontier) {
            for (const auto& [gname, s] : action.generators) {
                Perm h = compose(s, g);
                if (elements.insert(h).second) {
                    if (elements.size() > cap)
                        throw Error("enumerate_group: element cap (" + std::to_string(cap) +
                                    ") exceeded");
                    next.push_back(std::move(h));
                }
            }
        }
        frontier = std::move(next);
    }
    return {elements.begin(), elements.end()};
}

std::vector<Orbit> orbits(int n_points, const std::vector<Perm>& gens) {
    for (const Perm& g : gens) {
        if (static_cast<int>(g.size()) != n_points || !is_permutation(g))
            throw Error("orbits: generator does not act on X");
    }
    std::vector<char> visited(n_points, 0);
    std::vector<Orbit> result;

    if (gens.size() == 1) {
        // Single generator: list each orbit as x0, g^-1 x0, g^-2 x0, ...
        const Perm ginv = inverse(gens[0]);
        for (int x0 = 0; x0 < n_points; ++x0) {
            if (visited[x0]) continue;
            Orbit o;
            int y = x0;
            do {
                visited[y] = 1;
                o.elements.push_back(y);
                y = ginv[y];
            } while (y != x0);
            result.push_back(std::move(o));
        }
        return result;
    }

    for (int x0 = 0; x0 < n_points; ++x0) {
        if (visited[x0]) continue;
        std::vector<int> stack{x0};
        visited[x0] = 1;
        std::vector<int> members{x0};
        while (!stack.empty()) {
            int y = stack.back();
            stack.pop_back();
            for (const Perm& g : gens) {
                for (int z : {g[y], inverse(g)[y]}) {
                    if (!visited[z]) {
                        visited[z] = 1;
                        members.push_back(z);
                        stack.push_back(z);
                    }
                }
            }
        }
        std::sort(members.begin(), members.end());
        result.push_back(Orbit{std::move(members)});
    }
    return result;
}

std::vector<Orbit> orbits(const PermutationAction& action, const std::vector<Perm>& gens) {
    return orbits(action.size(), gens);
}

std::vector<CoverComponent> cover_components(const PermutationAction& action,
                                             const Perm& g1, const Perm& g2) {
    const int n = action.size();
    if (static_cast<int>(g1.size()) != n || static_cast<int>(g2.size()) != n)
        throw Error("cover_components: permutations must act on X");

    const std::vector<Orbit> comps = orbits(n, {g1, g2});
    const std::vector<Orbit> b1 = orbits(n, {g1});
    const std::vector<Orbit> b2 = orbits(n, {g2});
    const std::vector<Orbit> b3 = orbits(n, {compose(g1, g2)});

    std::vector<CoverComponent> result;
    for (const Orbit& o : comps) {
        CoverComponent c;
        c.orbit = o;
        c.sheets = o.size();
        for (const Orbit& b : b1)
            if (o.contains(b.base_point())) c.boundaries_1.push_back(b);
        for (const Orbit& b : b2)
            if (o.contains(b.base_point())) c.boundaries_2.push_back(b);
        for (const Orbit& b : b3)
            if (o.contains(b.base_point())) c.boundaries_3.push_back(b);

        // chi = -sheets, chi = 2 - 2 genus - boundaries
        const int two_genus = 2 + c.sheets - c.boundary_count();
        if (two_genus < 0 || two_genus % 2 != 0)
            throw Error("cover_components: non-integral or negative genus (internal error)");
        c.genus = two_genus / 2;
        result.push_back(std::move(c));
    }
    return result;
}

namespace {

// Edge of the lifted cell complex, by kind and sheet. Cutting the pair of
// pants along an arc from each inner boundary to the outer one leaves a
// disk; the cover is n copies of that disk glued along the lifted cut arcs.
//
// Per sheet x the polygon boundary reads
//   o1_x : Q1[r1^-1 x] -> Q2[x]     (outer boundary, first piece)
//   a2_x : Q2[x] -> P2[x]           (cut arc at hole 2, right bank in x)
//   h2_x : P2[x] -> P2[r2^-1 x]     (hole-2 boundary piece)
//   a2_{r2^-1 x} reversed           (left bank)
//   o2_x : Q2[r2^-1 x] -> Q1[x]     (outer boundary, second piece)
//   a1_x : Q1[x] -> P1[x]
//   h1_x : P1[x] -> P1[r1^-1 x]
//   a1_{r1^-1 x} reversed
// with r1, r2 the monodromies of the two cut arcs.
struct CwComplex {
    int n = 0;
    std::vector<int> sheet_index;   // X -> local sheet id, -1 outside
    std::vector<int> r1, r2;        // local monodromies
    std::vector<int> r1inv, r2inv;

    int vertices() const { return 4 * n; }
    int edges() const { return 6 * n; }
    int faces() const { return n; }
};

CwComplex build_complex(int n_points, const Perm& g1, const Perm& g2,
                        const std::vector<int>& sheets) {
    CwComplex c;
    c.n = static_cast<int>(sheets.size());
    c.sheet_index.assign(n_points, -1);
    for (int i = 0; i < c.n; ++i) c.sheet_index[sheets[i]] = i;
    c.r1.resize(c.n);
    c.r2.resize(c.n);
    for (int i = 0; i < c.n; ++i) {
        const int x = sheets[i];
        if (c.sheet_index[g1[x]] < 0 || c.sheet_index[g2[x]] < 0)
            throw Error("cw_cover_summary: orbit is not <g1,g2>-stable");
        c.r1[i] = c.sheet_index[g1[x]];
        c.r2[i] = c.sheet_index[g2[x]];
    }
    c.r1inv.resize(c.n);
    c.r2inv.resize(c.n);
    for (int i = 0; i < c.n; ++i) {
        c.r1inv[c.r1[i]] = i;
        c.r2inv[c.r2[i]] = i;
    }
    // The sheets must form a single <g1,g2>-orbit, or the closed-up Euler
    // count would mix several components.
    std::vector<char> reached(c.n, 0);
    std::vector<int> stack{0};
    reached[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int i = stack.back();
        stack.pop_back();
        for (int j : {c.r1[i], c.r2[i], c.r1inv[i], c.r2inv[i]}) {
            if (!reached[j]) {
                reached[j] = 1;
                ++count;
                stack.push_back(j);
            }
        }
    }
    if (count != c.n) throw Error("cw_cover_summary: sheets are not a single orbit");
    return c;
}

// Walk the boundary circles made of h1-edges (hole 1). Successive edges lie
// in sheets related by r1^-1.
int walk_cycles(const std::vector<int>& successor) {
    const int n = static_cast<int>(successor.size());
    std::vector<char> used(n, 0);
    int cycles = 0;
    for (int e = 0; e < n; ++e) {
        if (used[e]) continue;
        ++cycles;
        int cur = e;
        while (!used[cur]) {
            used[cur] = 1;
            cur = successor[cur];
        }
    }
    return cycles;
}

} // namespace

CwSummary cw_cover_summary(const PermutationAction& action, const Perm& g1, const Perm& g2,
                           const Orbit& orbit) {
    const int n_points = action.size();
    if (static_cast<int>(g1.size()) != n_points || static_cast<int>(g2.size()) != n_points)
        throw Error("cw_cover_summary: permutations must act on X");
    const CwComplex c = build_complex(n_points, g1, g2, orbit.elements);

    CwSummary s;
    s.sheets = c.n;
    s.vertices = c.vertices();
    s.edges = c.edges();
    s.faces = c.faces();

    // Boundary circles over hole 1: after h1_x the walk continues with
    // h1_{r1^-1 x}; likewise for hole 2.
    std::vector<int> succ1(c.n), succ2(c.n);
    for (int x = 0; x < c.n; ++x) {
        succ1[x] = c.r1inv[x];
        succ2[x] = c.r2inv[x];
    }
    s.boundary_circles_1 = walk_cycles(succ1);
    s.boundary_circles_2 = walk_cycles(succ2);

    // Outer boundary alternates o1 and o2 edges: o1_x is followed by
    // o2_{r2 x}, which is followed by o1_{r1 r2 x}. Walking o1-edges only,
    // the successor is r1 r2.
    std::vector<int> succ3(c.n);
    for (int x = 0; x < c.n; ++x) succ3[x] = c.r1[c.r2[x]];
    s.boundary_circles_3 = walk_cycles(succ3);

    const int chi_open = s.vertices - s.edges + s.faces;
    const int caps = s.boundary_circles_1 + s.boundary_circles_2 + s.boundary_circles_3;
    const int chi_closed = chi_open + caps;
    const int two_genus = 2 - chi_closed;
    if (two_genus < 0 || two_genus % 2 != 0)
        throw Error("cw_cover_summary: non-integral or negative genus (internal error)");
    s.genus = two_genus / 2;
    return s;
}

int genus_oracle(const PermutationAction& action, const Perm& g1, const Perm& g2,
                 const Orbit& orbit) {
    return cw_cover_summary(action, g1, g2, orbit).genus;
}

int cw_component_count(const PermutationAction& action, const Perm& g1, const Perm& g2) {
    const int n = action.size();
    // Union-find over the 4n vertices; edges merge their endpoints.
    std::vector<int> parent(4 * n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

    const Perm r1inv = inverse(g1);
    const Perm r2inv = inverse(g2);
    // Vertex ids: Q1_x = x, P1_x = n+x, Q2_x = 2n+x, P2_x = 3n+x.
    for (int x = 0; x < n; ++x) {
        unite(x, n + x);                     // a1_x
        unite(2 * n + x, 3 * n + x);         // a2_x
        unite(n + x, n + r1inv[x]);          // h1_x
        unite(3 * n + x, 3 * n + r2inv[x]);  // h2_x
        unite(r1inv[x], 2 * n + x);          // o1_x
        unite(2 * n + r2inv[x], x);          // o2_x
    }
    std::set<int> roots;
    for (int v = 0; v < 4 * n; ++v) roots.insert(find(v));
    return static_cast<int>(roots.size());
}

} // namespace permod
