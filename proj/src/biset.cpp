#include "bisets/biset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace bisets {

void validate_biset(const ExplicitBiset& x) {
    const FiniteGroup& g = *x.left_group.group;
    if (x.right_group.group != &g) throw std::invalid_argument("biset: mixed parent groups");
    const int n2 = x.left_group.size(), n1 = x.right_group.size();
    if (static_cast<int>(x.left_action.size()) != n2)
        throw std::invalid_argument("biset: left action shape");
    if (static_cast<int>(x.right_action.size()) != x.size)
        throw std::invalid_argument("biset: right action shape");
    for (const auto& row : x.left_action)
        if (static_cast<int>(row.size()) != x.size) throw std::invalid_argument("biset: left action shape");
    for (const auto& row : x.right_action)
        if (static_cast<int>(row.size()) != n1) throw std::invalid_argument("biset: right action shape");
    const int e = g.identity;
    for (int p = 0; p < x.size; ++p) {
        if (x.act_left(e, p) != p || x.act_right(p, e) != p)
            throw std::invalid_argument("biset: action not unital");
    }
    for (int a : x.left_group.elements)
        for (int b : x.left_group.elements)
            for (int p = 0; p < x.size; ++p)
                if (x.act_left(g.mul(a, b), p) != x.act_left(a, x.act_left(b, p)))
                    throw std::invalid_argument("biset: left action not associative");
    for (int a : x.right_group.elements)
        for (int b : x.right_group.elements)
            for (int p = 0; p < x.size; ++p)
                if (x.act_right(p, g.mul(a, b)) != x.act_right(x.act_right(p, a), b))
                    throw std::invalid_argument("biset: right action not associative");
    for (int a : x.left_group.elements)
        for (int b : x.right_group.elements)
            for (int p = 0; p < x.size; ++p)
                if (x.act_left(a, x.act_right(p, b)) != x.act_right(x.act_left(a, p), b))
                    throw std::invalid_argument("biset: actions do not commute");
    for (int a : x.left_group.elements)
        if (a != e)
            for (int p = 0; p < x.size; ++p)
                if (x.act_left(a, p) == p) throw std::invalid_argument("biset: left action not free");
    for (int b : x.right_group.elements)
        if (b != e)
            for (int p = 0; p < x.size; ++p)
                if (x.act_right(p, b) == p) throw std::invalid_argument("biset: right action not free");
}

void validate_rep(const StandardRep& rep) {
    if (rep.H2.group == nullptr || rep.H2.group != rep.H1.group)
        throw std::invalid_argument("standard rep: ambient pair must share a parent group");
    if (!is_subgroup_of(rep.L, rep.H2)) throw std::invalid_argument("standard rep: L not in H2");
    if (!is_subgroup_of(rep.K, rep.H1)) throw std::invalid_argument("standard rep: K not in H1");
    if (rep.gamma.domain != rep.L || rep.gamma.codomain != rep.K)
        throw std::invalid_argument("standard rep: gamma endpoints mismatch");
    if (!is_isomorphism_onto(rep.gamma))
        throw std::invalid_argument("standard rep: gamma is not an isomorphism onto K");
}

StandardRep identity_rep(const Subgroup& h) { return StandardRep{h, h, h, h, identity_hom(h)}; }

int rep_size(const StandardRep& rep) { return rep.H2.size() * rep.H1.size() / rep.L.size(); }

bool reps_equal(const StandardRep& a, const StandardRep& b) {
    return a.H2 == b.H2 && a.H1 == b.H1 && a.L == b.L && a.K == b.K &&
           a.gamma.images == b.gamma.images;
}

bool CanonicalKey::operator<(const CanonicalKey& o) const {
    return std::tie(H2, H1, L, K, gamma) < std::tie(o.H2, o.H1, o.L, o.K, o.gamma);
}

RealizedBiset realize_with_points(const StandardRep& rep) {
    validate_rep(rep);
    const FiniteGroup& g = *rep.H2.group;
    const int n2 = rep.H2.size(), n1 = rep.H1.size();
    const int npairs = n2 * n1;

    // Points are classes of (a, b) in H2 x H1 under (a, b) ~ (a l^-1, gamma(l) b);
    // the class representative is the minimal pair id.
    std::vector<int> cls(npairs, -1);
    for (int pa = 0; pa < n2; ++pa) {
        for (int pb = 0; pb < n1; ++pb) {
            int id = pa * n1 + pb;
            if (cls[id] >= 0) continue;
            int a = rep.H2.elements[pa], b = rep.H1.elements[pb];
            std::vector<int> orbit;
            int best = npairs;
            for (int l : rep.L.elements) {
                int a2 = g.mul(a, g.inv(l));
                int b2 = g.mul(rep.gamma.apply(l), b);
                int oid = rep.H2.pos(a2) * n1 + rep.H1.pos(b2);
                orbit.push_back(oid);
                best = std::min(best, oid);
            }
            for (int oid : orbit) cls[oid] = best;
        }
    }
    std::vector<int> reps_sorted;
    for (int id = 0; id < npairs; ++id)
        if (cls[id] == id) reps_sorted.push_back(id);
    std::vector<int> point_index(npairs, -1);
    for (size_t i = 0; i < reps_sorted.size(); ++i) point_index[reps_sorted[i]] = static_cast<int>(i);

    RealizedBiset out;
    out.biset.left_group = rep.H2;
    out.biset.right_group = rep.H1;
    out.biset.size = static_cast<int>(reps_sorted.size());
    out.biset.left_action.assign(n2, std::vector<int>(out.biset.size));
    out.biset.right_action.assign(out.biset.size, std::vector<int>(n1));
    for (int p = 0; p < out.biset.size; ++p) {
        int pa = reps_sorted[p] / n1, pb = reps_sorted[p] % n1;
        int a = rep.H2.elements[pa], b = rep.H1.elements[pb];
        for (int qa = 0; qa < n2; ++qa) {
            int a2 = g.mul(rep.H2.elements[qa], a);
            out.biset.left_action[qa][p] = point_index[cls[rep.H2.pos(a2) * n1 + pb]];
        }
        for (int qb = 0; qb < n1; ++qb) {
            int b2 = g.mul(b, rep.H1.elements[qb]);
            out.biset.right_action[p][qb] = point_index[cls[pa * n1 + rep.H1.pos(b2)]];
        }
    }
    out.point_of_pair.assign(npairs, -1);
    for (int id = 0; id < npairs; ++id) out.point_of_pair[id] = point_index[cls[id]];
    out.basepoint = out.point_of_pair[rep.H2.pos(g.identity) * n1 + rep.H1.pos(g.identity)];
    return out;
}

ExplicitBiset realize(const StandardRep& rep) { return realize_with_points(rep).biset; }

StandardRep standard_rep_at(const ExplicitBiset& x, int point) {
    if (point < 0 || point >= x.size) throw std::invalid_argument("standard_rep_at: bad point");
    const FiniteGroup& g = *x.left_group.group;
    std::vector<int> from_right(x.size, -1);
    for (int h1 : x.right_group.elements) {
        int y = x.act_right(point, h1);
        if (from_right[y] != -1)
            throw std::invalid_argument("standard_rep_at: right action not free at point");
        from_right[y] = h1;
    }
    std::vector<int> lelems, images;
    for (int h2 : x.left_group.elements) {
        int y = x.act_left(h2, point);
        if (from_right[y] == -1) continue;
        if (y == point && h2 != g.identity)
            throw std::invalid_argument("standard_rep_at: left action not free at point");
        lelems.push_back(h2);
        images.push_back(from_right[y]);
    }
    StandardRep rep;
    rep.H2 = x.left_group;
    rep.H1 = x.right_group;
    rep.L = subgroup_from_elements(g, lelems);
    {
        auto kelems = images;
        std::sort(kelems.begin(), kelems.end());
        rep.K = subgroup_from_elements(g, kelems);
    }
    rep.gamma = GroupHom{rep.L, rep.K, images};
    validate_rep(rep);
    return rep;
}

std::vector<std::pair<StandardRep, int>> components(const ExplicitBiset& x) {
    std::vector<std::pair<StandardRep, int>> out;
    std::vector<char> seen(x.size, 0);
    for (int p = 0; p < x.size; ++p) {
        if (seen[p]) continue;
        std::vector<int> stack{p};
        seen[p] = 1;
        while (!stack.empty()) {
            int q = stack.back();
            stack.pop_back();
            for (int h2 : x.left_group.elements) {
                int r = x.act_left(h2, q);
                if (!seen[r]) {
                    seen[r] = 1;
                    stack.push_back(r);
                }
            }
            for (int h1 : x.right_group.elements) {
                int r = x.act_right(q, h1);
                if (!seen[r]) {
                    seen[r] = 1;
                    stack.push_back(r);
                }
            }
        }
        out.emplace_back(standard_rep_at(x, p), p);
    }
    return out;
}

StandardRep change_base_point(const StandardRep& rep, int h2, int h1) {
    if (!rep.H2.contains(h2)) throw std::invalid_argument("change_base_point: h2 not in H2");
    if (!rep.H1.contains(h1)) throw std::invalid_argument("change_base_point: h1 not in H1");
    const FiniteGroup& g = *rep.H2.group;
    StandardRep out;
    out.H2 = rep.H2;
    out.H1 = rep.H1;
    out.L = conjugate_subgroup(rep.L, g.inv(h2));
    out.K = conjugate_subgroup(rep.K, h1);
    std::vector<int> images;
    images.reserve(out.L.size());
    for (int u : out.L.elements) images.push_back(g.conj(rep.gamma.apply(g.conj(u, h2)), h1));
    out.gamma = GroupHom{out.L, out.K, images};
    return out;
}

CanonicalKey canonical_key(const StandardRep& rep) {
    validate_rep(rep);
    bool have = false;
    std::vector<int> best_l, best_k;
    std::vector<std::pair<int, int>> best_gamma;
    for (int h2 : rep.H2.elements) {
        for (int h1 : rep.H1.elements) {
            StandardRep moved = change_base_point(rep, h2, h1);
            std::vector<std::pair<int, int>> pairs;
            pairs.reserve(moved.L.size());
            for (int i = 0; i < moved.L.size(); ++i)
                pairs.emplace_back(moved.L.elements[i], moved.gamma.images[i]);
            if (!have ||
                std::tie(moved.L.elements, moved.K.elements, pairs) <
                    std::tie(best_l, best_k, best_gamma)) {
                have = true;
                best_l = moved.L.elements;
                best_k = moved.K.elements;
                best_gamma = std::move(pairs);
            }
        }
    }
    return CanonicalKey{rep.H2.elements, rep.H1.elements, best_l, best_k, best_gamma};
}

StandardRep rep_of_key(const CanonicalKey& key, const FiniteGroup& g) {
    StandardRep rep;
    rep.H2 = subgroup_from_elements(g, key.H2);
    rep.H1 = subgroup_from_elements(g, key.H1);
    rep.L = subgroup_from_elements(g, key.L);
    rep.K = subgroup_from_elements(g, key.K);
    std::vector<int> images(rep.L.size(), -1);
    for (const auto& [l, k] : key.gamma) {
        if (!rep.L.contains(l)) throw std::invalid_argument("key: gamma pair outside L");
        images[rep.L.pos(l)] = k;
    }
    rep.gamma = GroupHom{rep.L, rep.K, images};
    validate_rep(rep);
    return rep;
}

StandardRep transpose(const StandardRep& rep) {
    StandardRep out;
    out.H2 = rep.H1;
    out.H1 = rep.H2;
    out.L = rep.K;
    out.K = rep.L;
    out.gamma = inverse_hom(rep.gamma);
    return out;
}

std::vector<StandardRep> compose_formula_at(const StandardRep& rep2, const StandardRep& rep1,
                                            const std::vector<int>& middle_reps) {
    if (rep2.H1 != rep1.H2)
        throw std::invalid_argument("compose: middle ambient groups do not match");
    const FiniteGroup& g = *rep2.H2.group;
    std::vector<StandardRep> out;
    out.reserve(middle_reps.size());
    for (int h : middle_reps) {
        std::vector<int> lelems, images;
        for (int l2 : rep2.L.elements) {
            int mid = g.conj(rep2.gamma.apply(l2), h);  // c_h(gamma2(l2))
            if (rep1.L.contains(mid)) {
                lelems.push_back(l2);
                images.push_back(rep1.gamma.apply(mid));
            }
        }
        StandardRep comp;
        comp.H2 = rep2.H2;
        comp.H1 = rep1.H1;
        comp.L = subgroup_from_elements(g, lelems);
        {
            auto kelems = images;
            std::sort(kelems.begin(), kelems.end());
            comp.K = subgroup_from_elements(g, kelems);
        }
        comp.gamma = GroupHom{comp.L, comp.K, images};
        validate_rep(comp);
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<StandardRep> compose_formula(const StandardRep& rep2, const StandardRep& rep1) {
    if (rep2.H1 != rep1.H2)
        throw std::invalid_argument("compose: middle ambient groups do not match");
    auto dc = double_cosets(rep2.H1, rep2.K, rep1.L);
    return compose_formula_at(rep2, rep1, dc.representatives);
}

ExplicitBiset empty_biset(const Subgroup& h2, const Subgroup& h1) {
    ExplicitBiset x;
    x.left_group = h2;
    x.right_group = h1;
    x.size = 0;
    x.left_action.assign(h2.size(), {});
    return x;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

ExplicitBiset compose_bruteforce(const ExplicitBiset& x2, const ExplicitBiset& x1) {
    if (x2.right_group != x1.left_group)
        throw std::invalid_argument("compose_bruteforce: middle groups do not match");
    const Subgroup& mid = x2.right_group;
    const int n1 = x1.size;
    const int npairs = x2.size * x1.size;
    if (npairs == 0) return empty_biset(x2.left_group, x1.right_group);

    UnionFind uf(npairs);
    for (int a = 0; a < x2.size; ++a)
        for (int b = 0; b < n1; ++b)
            for (int h : mid.elements)
                uf.unite(a * n1 + b,
                         x2.act_right(a, h) * n1 + x1.act_left(mid.group->inv(h), b));

    std::vector<int> root_min(npairs, -1);
    for (int id = 0; id < npairs; ++id) {
        int r = uf.find(id);
        if (root_min[r] == -1) root_min[r] = id;  // ids ascend, first hit is minimal
    }
    std::vector<int> class_reps;
    for (int id = 0; id < npairs; ++id)
        if (root_min[uf.find(id)] == id) class_reps.push_back(id);
    std::vector<int> point_index(npairs, -1);
    for (size_t i = 0; i < class_reps.size(); ++i) point_index[class_reps[i]] = static_cast<int>(i);
    auto point_of = [&](int id) { return point_index[root_min[uf.find(id)]]; };

    ExplicitBiset out;
    out.left_group = x2.left_group;
    out.right_group = x1.right_group;
    out.size = static_cast<int>(class_reps.size());
    out.left_action.assign(out.left_group.size(), std::vector<int>(out.size));
    out.right_action.assign(out.size, std::vector<int>(out.right_group.size()));
    for (int p = 0; p < out.size; ++p) {
        int a = class_reps[p] / n1, b = class_reps[p] % n1;
        for (int q = 0; q < out.left_group.size(); ++q)
            out.left_action[q][p] = point_of(x2.act_left(out.left_group.elements[q], a) * n1 + b);
        for (int q = 0; q < out.right_group.size(); ++q)
            out.right_action[p][q] = point_of(a * n1 + x1.act_right(b, out.right_group.elements[q]));
    }
    return out;
}

ExplicitBiset disjoint_union(const ExplicitBiset& a, const ExplicitBiset& b) {
    if (a.left_group != b.left_group || a.right_group != b.right_group)
        throw std::invalid_argument("disjoint_union: ambient pair mismatch");
    ExplicitBiset out;
    out.left_group = a.left_group;
    out.right_group = a.right_group;
    out.size = a.size + b.size;
    out.left_action.assign(a.left_group.size(), std::vector<int>(out.size));
    out.right_action.assign(out.size, std::vector<int>(a.right_group.size()));
    for (int q = 0; q < a.left_group.size(); ++q) {
        for (int p = 0; p < a.size; ++p) out.left_action[q][p] = a.left_action[q][p];
        for (int p = 0; p < b.size; ++p) out.left_action[q][a.size + p] = a.size + b.left_action[q][p];
    }
    for (int p = 0; p < a.size; ++p) out.right_action[p] = a.right_action[p];
    for (int p = 0; p < b.size; ++p) {
        out.right_action[a.size + p] = b.right_action[p];
        for (auto& v : out.right_action[a.size + p]) v += a.size;
    }
    return out;
}

BisetClass classify(const StandardRep& rep) {
    validate_rep(rep);
    BisetClass c;
    c.restriction = rep.L == rep.H2;
    c.induction = rep.K == rep.H1;
    c.isomorphism = c.restriction && c.induction;
    c.conjugation = conjugation_realizing(rep.gamma).has_value();
    return c;
}

Factorization factorize(const StandardRep& rep) {
    validate_rep(rep);
    Factorization f;
    f.ind = StandardRep{rep.H2, rep.L, rep.L, rep.L, identity_hom(rep.L)};
    f.iso = StandardRep{rep.L, rep.K, rep.L, rep.K, rep.gamma};
    f.res = StandardRep{rep.K, rep.H1, rep.K, rep.K, identity_hom(rep.K)};
    f.realizing = conjugation_realizing(rep.gamma);
    return f;
}

std::vector<StandardRep> enumerate_indecomposables(const Subgroup& h2, const Subgroup& h1,
                                                   const std::vector<Subgroup>& all_subgroups) {
    std::vector<StandardRep> out;
    for (const Subgroup& l : all_subgroups) {
        if (!is_subgroup_of(l, h2)) continue;
        for (const Subgroup& k : all_subgroups) {
            if (k.size() != l.size() || !is_subgroup_of(k, h1)) continue;
            for (GroupHom& gamma : enumerate_isomorphisms(l, k))
                out.push_back(StandardRep{h2, h1, l, k, std::move(gamma)});
        }
    }
    return out;
}

std::vector<StandardRep> enumerate_conjugation_reps(const Subgroup& h2, const Subgroup& h1,
                                                    const std::vector<Subgroup>& all_subgroups) {
    const FiniteGroup& g = *h2.group;
    std::vector<StandardRep> out;
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;  // (L, gamma images)
    for (const Subgroup& l : all_subgroups) {
        if (!is_subgroup_of(l, h2)) continue;
        for (int c = 0; c < g.order; ++c) {
            Subgroup k = conjugate_subgroup(l, c);
            if (!is_subgroup_of(k, h1)) continue;
            GroupHom gamma = conjugation_hom(l, c);
            if (!seen.emplace(l.elements, gamma.images).second) continue;
            out.push_back(StandardRep{h2, h1, l, std::move(k), std::move(gamma)});
        }
    }
    return out;
}

std::vector<CanonicalKey> conjugation_keys(const Subgroup& h2, const Subgroup& h1,
                                           const std::vector<Subgroup>& all_subgroups) {
    std::set<CanonicalKey> keys;
    for (const StandardRep& rep : enumerate_conjugation_reps(h2, h1, all_subgroups))
        keys.insert(canonical_key(rep));
    return std::vector<CanonicalKey>(keys.begin(), keys.end());
}

}  // namespace bisets
