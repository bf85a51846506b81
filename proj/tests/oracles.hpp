#pragma once

// Brute-force reference implementations used only by tests. These deliberately
// avoid the library's main code paths so they can serve as independent
// oracles.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "bisets/abelian.hpp"
#include "bisets/biset.hpp"
#include "bisets/category.hpp"
#include "bisets/group.hpp"

namespace oracles {

using namespace bisets;

// All subsets of G that are subgroups, found by filtering every subset.
// Only usable for |G| <= 16.
inline std::set<std::vector<int>> all_subgroup_subsets(const FiniteGroup& g) {
    std::set<std::vector<int>> out;
    const int n = g.order;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        if (!(mask >> g.identity & 1)) continue;
        std::vector<int> elems;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) elems.push_back(i);
        bool closed = true;
        for (int a : elems) {
            if (!(mask >> g.inv(a) & 1)) {
                closed = false;
                break;
            }
            for (int b : elems)
                if (!(mask >> g.mul(a, b) & 1)) {
                    closed = false;
                    break;
                }
            if (!closed) break;
        }
        if (closed) out.insert(elems);
    }
    return out;
}

inline bool associative_bruteforce(const FiniteGroup& g) {
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            for (int c = 0; c < g.order; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
    return true;
}

// tau of an explicit biset: same points, actions reversed through inverses.
inline ExplicitBiset explicit_transpose(const ExplicitBiset& x) {
    const FiniteGroup& g = *x.left_group.group;
    ExplicitBiset t;
    t.left_group = x.right_group;
    t.right_group = x.left_group;
    t.size = x.size;
    t.left_action.assign(t.left_group.size(), std::vector<int>(x.size));
    t.right_action.assign(x.size, std::vector<int>(t.right_group.size()));
    for (int q = 0; q < t.left_group.size(); ++q)
        for (int p = 0; p < x.size; ++p)
            t.left_action[q][p] = x.act_right(p, g.inv(t.left_group.elements[q]));
    for (int p = 0; p < x.size; ++p)
        for (int q = 0; q < t.right_group.size(); ++q)
            t.right_action[p][q] = x.act_left(g.inv(t.right_group.elements[q]), p);
    return t;
}

// Backtracking biset isomorphism search (equivariant bijection).
inline bool bisets_isomorphic(const ExplicitBiset& x, const ExplicitBiset& y) {
    if (x.left_group != y.left_group || x.right_group != y.right_group) return false;
    if (x.size != y.size) return false;
    if (x.size == 0) return true;
    std::vector<int> map(x.size, -1), used(y.size, 0);

    // Propagating a single seed across its component by equivariance.
    auto try_extend = [&](std::vector<int>& m, std::vector<int>& u, int seed_x, int seed_y) {
        std::vector<std::pair<int, int>> stack{{seed_x, seed_y}};
        if (m[seed_x] == seed_y) return true;
        if (m[seed_x] != -1 || u[seed_y]) return false;
        m[seed_x] = seed_y;
        u[seed_y] = 1;
        while (!stack.empty()) {
            auto [a, b] = stack.back();
            stack.pop_back();
            for (int h : x.left_group.elements) {
                int a2 = x.act_left(h, a), b2 = y.act_left(h, b);
                if (m[a2] == -1 && !u[b2]) {
                    m[a2] = b2;
                    u[b2] = 1;
                    stack.emplace_back(a2, b2);
                } else if (m[a2] != b2) {
                    return false;
                }
            }
            for (int h : x.right_group.elements) {
                int a2 = x.act_right(a, h), b2 = y.act_right(b, h);
                if (m[a2] == -1 && !u[b2]) {
                    m[a2] = b2;
                    u[b2] = 1;
                    stack.emplace_back(a2, b2);
                } else if (m[a2] != b2) {
                    return false;
                }
            }
        }
        return true;
    };

    auto rec = [&](auto&& self, std::vector<int> m, std::vector<int> u) -> bool {
        int seed = -1;
        for (int p = 0; p < x.size; ++p)
            if (m[p] == -1) {
                seed = p;
                break;
            }
        if (seed == -1) return true;
        for (int q = 0; q < y.size; ++q) {
            if (u[q]) continue;
            std::vector<int> m2 = m, u2 = u;
            if (try_extend(m2, u2, seed, q) && self(self, m2, u2)) return true;
        }
        return false;
    };
    return rec(rec, map, used);
}

// The point of the identity coset in a coset table: the one whose stabilizer
// is exactly H.
inline int point_of_identity(const GSetTable& c, const Subgroup& h) {
    for (int p = 0; p < c.size; ++p) {
        int stab = 0;
        bool fixed_by_h = true;
        for (int e : h.elements) fixed_by_h = fixed_by_h && c.action[e][p] == p;
        if (!fixed_by_h) continue;
        for (int x = 0; x < c.group->order; ++x)
            if (c.action[x][p] == p) ++stab;
        if (stab == h.size()) return p;
    }
    return -1;
}

// Pullback of G/H1 -> G/K <- G/H2 (witnesses g1, g2) as an explicit pair set.
inline GSetTable pullback_bruteforce(const Subgroup& h1, int g1, const Subgroup& h2, int g2,
                                     const Subgroup& k) {
    const FiniteGroup& g = *k.group;
    GSetTable c1 = coset_table(h1), c2 = coset_table(h2), ck = coset_table(k);
    auto coset_points = [&](const Subgroup& h, const GSetTable& c) {
        std::vector<int> pt(g.order, -1);
        int base = point_of_identity(c, h);
        for (int x = 0; x < g.order; ++x) pt[x] = c.action[x][base];
        return pt;
    };
    std::vector<int> p1 = coset_points(h1, c1), p2 = coset_points(h2, c2), pk = coset_points(k, ck);
    std::vector<std::pair<int, int>> pts;
    std::map<std::pair<int, int>, int> index;
    for (int a = 0; a < c1.size; ++a)
        for (int b = 0; b < c2.size; ++b) {
            int ra = -1, rb = -1;
            for (int x = 0; x < g.order && (ra < 0 || rb < 0); ++x) {
                if (ra < 0 && p1[x] == a) ra = x;
                if (rb < 0 && p2[x] == b) rb = x;
            }
            if (pk[g.mul(ra, g1)] == pk[g.mul(rb, g2)]) {
                index[{a, b}] = static_cast<int>(pts.size());
                pts.emplace_back(a, b);
            }
        }
    GSetTable out;
    out.group = &g;
    out.size = static_cast<int>(pts.size());
    out.action.assign(g.order, std::vector<int>(out.size));
    for (int x = 0; x < g.order; ++x)
        for (int p = 0; p < out.size; ++p)
            out.action[x][p] = index.at({c1.action[x][pts[p].first], c2.action[x][pts[p].second]});
    return out;
}

// Canonical representative of a subgroup's conjugacy class in G.
inline std::vector<int> conjugacy_class_rep(const Subgroup& h) {
    const FiniteGroup& g = *h.group;
    std::vector<int> best = h.elements;
    for (int x = 0; x < g.order; ++x) best = std::min(best, conjugate_subgroup(h, x).elements);
    return best;
}

// Orbit-size/stabilizer-class multiset of a pointed G-set.
inline std::multiset<std::pair<int, std::vector<int>>> orbit_stab_multiset(
    const PointedGSet& s) {
    std::multiset<std::pair<int, std::vector<int>>> out;
    for (const Subgroup& h : s.orbits)
        out.insert({h.group->order / h.size(), conjugacy_class_rep(h)});
    return out;
}

inline FgAbelianGroup random_fg_group(std::mt19937& rng) {
    static const long long choices[] = {0, 2, 3, 4, 6, 9};
    std::uniform_int_distribution<int> rank_dist(0, 3), pick(0, 5);
    FgAbelianGroup g;
    int r = rank_dist(rng);
    for (int i = 0; i < r; ++i) g.factors.push_back(choices[pick(rng)]);
    return g;
}

inline AbHom random_ab_hom(const FgAbelianGroup& dom, const FgAbelianGroup& cod,
                           std::mt19937& rng) {
    std::uniform_int_distribution<long long> coeff(-6, 6);
    AbHom f = ab_zero(dom, cod);
    for (int i = 0; i < cod.rank(); ++i)
        for (int j = 0; j < dom.rank(); ++j) {
            long long di = cod.factors[i], dj = dom.factors[j];
            long long v = coeff(rng);
            if (dj == 0) {
                f.matrix[i][j] = v;  // no constraint
            } else if (di == 0) {
                f.matrix[i][j] = 0;  // must kill torsion
            } else {
                long long gcd = std::__gcd(di, dj);
                f.matrix[i][j] = v * (di / gcd);
            }
        }
    ab_normalize(f);
    return f;
}

}  // namespace oracles
