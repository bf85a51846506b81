#include "bisets/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace bisets {

int FiniteGroup::element_order(int a) const {
    int x = a, n = 1;
    while (x != identity) {
        x = mul(x, a);
        ++n;
    }
    return n;
}

namespace {

void check_index_range(const std::vector<std::vector<int>>& table, int n) {
    if (static_cast<int>(table.size()) != n)
        throw std::invalid_argument("group table must be square");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("group table must be square");
        for (int v : row)
            if (v < 0 || v >= n) throw std::invalid_argument("group table entry out of range");
    }
}

int find_identity(const std::vector<std::vector<int>>& table, int n) {
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            if (table[e][a] != a || table[a][e] != a) ok = false;
        if (ok) return e;
    }
    throw std::invalid_argument("group table has no identity");
}

std::vector<int> find_inverses(const std::vector<std::vector<int>>& table, int n, int e) {
    std::vector<int> inv(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (table[a][b] == e && table[b][a] == e) {
                inv[a] = b;
                break;
            }
        }
        if (inv[a] == -1) throw std::invalid_argument("group table element without inverse");
    }
    return inv;
}

}  // namespace

void validate_group(const FiniteGroup& g) {
    const int n = g.order;
    if (n <= 0) throw std::invalid_argument("group order must be positive");
    check_index_range(g.table, n);
    // Latin square
    for (int a = 0; a < n; ++a) {
        std::vector<char> seen_row(n, 0), seen_col(n, 0);
        for (int b = 0; b < n; ++b) {
            if (seen_row[g.table[a][b]]++) throw std::invalid_argument("table row is not a permutation");
            if (seen_col[g.table[b][a]]++) throw std::invalid_argument("table column is not a permutation");
        }
    }
    if (g.identity < 0 || g.identity >= n) throw std::invalid_argument("identity out of range");
    for (int a = 0; a < n; ++a)
        if (g.table[g.identity][a] != a || g.table[a][g.identity] != a)
            throw std::invalid_argument("identity law fails");
    if (static_cast<int>(g.inverse.size()) != n) throw std::invalid_argument("inverse table size");
    for (int a = 0; a < n; ++a) {
        int b = g.inverse[a];
        if (b < 0 || b >= n || g.table[a][b] != g.identity || g.table[b][a] != g.identity)
            throw std::invalid_argument("inverse law fails");
    }
    // Associativity via Light's test: enough to check a(gb) = (ag)b for g in a
    // generating set.
    std::vector<char> closed(n, 0);
    closed[g.identity] = 1;
    int reached = 1;
    std::vector<int> gens;
    while (reached < n) {
        int pick = -1;
        for (int x = 0; x < n; ++x)
            if (!closed[x]) {
                pick = x;
                break;
            }
        gens.push_back(pick);
        std::vector<int> queue{pick};
        closed[pick] = 1;
        ++reached;
        while (!queue.empty()) {
            int x = queue.back();
            queue.pop_back();
            for (int y = 0; y < n; ++y) {
                if (!closed[y]) continue;
                for (int z : {g.table[x][y], g.table[y][x]}) {
                    if (!closed[z]) {
                        closed[z] = 1;
                        ++reached;
                        queue.push_back(z);
                    }
                }
            }
        }
    }
    for (int gen : gens)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (g.table[g.table[a][gen]][b] != g.table[a][g.table[gen][b]])
                    throw std::invalid_argument("table is not associative");
}

FiniteGroup make_from_table(std::vector<std::vector<int>> table, std::string label) {
    FiniteGroup g;
    g.order = static_cast<int>(table.size());
    if (g.order == 0) throw std::invalid_argument("empty group table");
    check_index_range(table, g.order);
    g.table = std::move(table);
    g.identity = find_identity(g.table, g.order);
    g.inverse = find_inverses(g.table, g.order, g.identity);
    g.label = std::move(label);
    validate_group(g);
    return g;
}

FiniteGroup make_cyclic(int n) {
    if (n <= 0) throw std::invalid_argument("cyclic group order must be positive");
    FiniteGroup g;
    g.order = n;
    g.table.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
    g.identity = 0;
    g.inverse.resize(n);
    for (int a = 0; a < n; ++a) g.inverse[a] = (n - a) % n;
    g.label = "C" + std::to_string(n);
    return g;
}

FiniteGroup make_dihedral(int n) {
    if (n <= 0) throw std::invalid_argument("dihedral parameter must be positive");
    const int m = 2 * n;
    auto rot = [n](int x) { return x % n; };
    auto is_ref = [n](int x) { return x >= n; };
    FiniteGroup g;
    g.order = m;
    g.table.assign(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            int ar = rot(a), br = rot(b);
            int v;
            if (!is_ref(a) && !is_ref(b)) v = (ar + br) % n;                 // r^a r^b
            else if (!is_ref(a) && is_ref(b)) v = n + (ar + br) % n;         // r^a (r^b s)
            else if (is_ref(a) && !is_ref(b)) v = n + ((ar - br) % n + n) % n;  // (r^a s) r^b
            else v = ((ar - br) % n + n) % n;                                // (r^a s)(r^b s)
            g.table[a][b] = v;
        }
    }
    g.identity = 0;
    g.inverse.resize(m);
    for (int a = 0; a < m; ++a) g.inverse[a] = is_ref(a) ? a : (n - rot(a)) % n;
    g.label = "D" + std::to_string(n);
    return g;
}

namespace {

std::vector<int> compose_perm(const std::vector<int>& p, const std::vector<int>& q) {
    // (p*q)(i) = p(q(i)): q applied first
    std::vector<int> r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
    return r;
}

FiniteGroup group_from_permutations(std::vector<std::vector<int>> perms, std::string label) {
    const int n = static_cast<int>(perms.size());
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < n; ++i) index[perms[i]] = i;
    FiniteGroup g;
    g.order = n;
    g.table.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto it = index.find(compose_perm(perms[a], perms[b]));
            if (it == index.end()) throw std::invalid_argument("permutation set not closed");
            g.table[a][b] = it->second;
        }
    g.identity = find_identity(g.table, n);
    g.inverse = find_inverses(g.table, n, g.identity);
    g.label = std::move(label);
    return g;
}

}  // namespace

FiniteGroup make_symmetric(int n) {
    if (n <= 0) throw std::invalid_argument("symmetric group parameter must be positive");
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::vector<int>> perms;
    std::vector<int> p = id;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return group_from_permutations(std::move(perms), "S" + std::to_string(n));
}

FiniteGroup make_permutation_group(int degree, const std::vector<std::vector<int>>& generators,
                                   int order_cap) {
    if (degree <= 0) throw std::invalid_argument("permutation degree must be positive");
    for (const auto& gen : generators) {
        if (static_cast<int>(gen.size()) != degree)
            throw std::invalid_argument("generator degree mismatch");
        std::vector<char> seen(degree, 0);
        for (int v : gen) {
            if (v < 0 || v >= degree || seen[v]) throw std::invalid_argument("generator is not a permutation");
            seen[v] = 1;
        }
    }
    std::vector<int> id(degree);
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::vector<int>> perms{id};
    std::map<std::vector<int>, int> index{{id, 0}};
    // Breadth-first closure, right multiplication by generators in listed order.
    for (size_t head = 0; head < perms.size(); ++head) {
        for (const auto& gen : generators) {
            auto next = compose_perm(perms[head], gen);
            if (index.emplace(next, static_cast<int>(perms.size())).second) {
                perms.push_back(std::move(next));
                if (static_cast<int>(perms.size()) > order_cap)
                    throw std::invalid_argument("generated group exceeds order cap");
            }
        }
    }
    return group_from_permutations(std::move(perms), "perm" + std::to_string(degree));
}

FiniteGroup make_quaternion() {
    // basis products with sign: b1*b2 = sign * basis, bases 0:1 1:i 2:j 3:k
    static const int basis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    FiniteGroup g;
    g.order = 8;
    g.table.assign(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int sa = a / 4, ba = a % 4, sb = b / 4, bb = b % 4;
            int s = (sa + sb) % 2;
            if (sign[ba][bb] < 0) s ^= 1;
            g.table[a][b] = s * 4 + basis[ba][bb];
        }
    g.identity = 0;
    g.inverse = find_inverses(g.table, 8, 0);
    g.label = "Q8";
    return g;
}

FiniteGroup make_klein4() {
    FiniteGroup g;
    g.order = 4;
    g.table.assign(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) g.table[a][b] = a ^ b;
    g.identity = 0;
    g.inverse = {0, 1, 2, 3};
    g.label = "V4";
    return g;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    FiniteGroup g;
    g.order = a.order * b.order;
    g.table.assign(g.order, std::vector<int>(g.order));
    auto id = [&](int x, int y) { return x * b.order + y; };
    for (int x1 = 0; x1 < a.order; ++x1)
        for (int y1 = 0; y1 < b.order; ++y1)
            for (int x2 = 0; x2 < a.order; ++x2)
                for (int y2 = 0; y2 < b.order; ++y2)
                    g.table[id(x1, y1)][id(x2, y2)] = id(a.mul(x1, x2), b.mul(y1, y2));
    g.identity = id(a.identity, b.identity);
    g.inverse.resize(g.order);
    for (int x = 0; x < a.order; ++x)
        for (int y = 0; y < b.order; ++y) g.inverse[id(x, y)] = id(a.inv(x), b.inv(y));
    g.label = a.label + "x" + b.label;
    return g;
}

FiniteGroup build_group(const GroupSpec& spec, int order_cap) {
    FiniteGroup g;
    switch (spec.kind) {
        case GroupSpec::Kind::table:
            g = make_from_table(spec.table);
            break;
        case GroupSpec::Kind::perm:
            g = make_permutation_group(spec.degree, spec.generators, order_cap);
            break;
        case GroupSpec::Kind::cyclic:
            g = make_cyclic(spec.n);
            break;
        case GroupSpec::Kind::dihedral:
            g = make_dihedral(spec.n);
            break;
        case GroupSpec::Kind::symmetric:
            g = make_symmetric(spec.n);
            break;
        case GroupSpec::Kind::quaternion:
            g = make_quaternion();
            break;
        case GroupSpec::Kind::klein4:
            g = make_klein4();
            break;
        case GroupSpec::Kind::product: {
            if (spec.factors.empty()) throw std::invalid_argument("product of no factors");
            g = build_group(spec.factors[0], order_cap);
            for (size_t i = 1; i < spec.factors.size(); ++i) {
                FiniteGroup next = build_group(spec.factors[i], order_cap);
                if (g.order > order_cap / std::max(1, next.order))
                    throw std::invalid_argument("product group exceeds order cap");
                g = direct_product(g, next);
            }
            break;
        }
    }
    if (g.order > order_cap) throw std::invalid_argument("group exceeds order cap");
    return g;
}

Subgroup subgroup_from_elements(const FiniteGroup& g, std::vector<int> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    Subgroup h;
    h.group = &g;
    h.position.assign(g.order, -1);
    for (size_t i = 0; i < elements.size(); ++i) {
        int e = elements[i];
        if (e < 0 || e >= g.order) throw std::invalid_argument("subgroup element out of range");
        h.position[e] = static_cast<int>(i);
    }
    h.elements = std::move(elements);
    if (!h.contains(g.identity)) throw std::invalid_argument("subgroup must contain identity");
    for (int a : h.elements) {
        if (!h.contains(g.inv(a))) throw std::invalid_argument("subgroup not closed under inverse");
        for (int b : h.elements)
            if (!h.contains(g.mul(a, b))) throw std::invalid_argument("subgroup not closed under product");
    }
    return h;
}

Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<int>& generators) {
    std::vector<char> in(g.order, 0);
    std::vector<int> elems{g.identity};
    in[g.identity] = 1;
    for (int x : generators) {
        if (x < 0 || x >= g.order) throw std::invalid_argument("generator out of range");
        if (!in[x]) {
            in[x] = 1;
            elems.push_back(x);
        }
    }
    for (size_t head = 0; head < elems.size(); ++head) {
        for (size_t j = 0; j < elems.size(); ++j) {
            for (int z : {g.mul(elems[head], elems[j]), g.mul(elems[j], elems[head])}) {
                if (!in[z]) {
                    in[z] = 1;
                    elems.push_back(z);
                }
            }
        }
    }
    return subgroup_from_elements(g, std::move(elems));
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return subgroup_from_elements(g, {g.identity}); }

Subgroup full_subgroup(const FiniteGroup& g) {
    std::vector<int> all(g.order);
    std::iota(all.begin(), all.end(), 0);
    return subgroup_from_elements(g, std::move(all));
}

bool is_subgroup_of(const Subgroup& h, const Subgroup& k) {
    if (h.group != k.group) return false;
    for (int e : h.elements)
        if (!k.contains(e)) return false;
    return true;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    if (a.group != b.group) throw std::invalid_argument("intersect: different parent groups");
    std::vector<int> common;
    for (int e : a.elements)
        if (b.contains(e)) common.push_back(e);
    return subgroup_from_elements(*a.group, std::move(common));
}

std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g) {
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> work;
    work.push_back(trivial_subgroup(g).elements);
    seen.insert(work[0]);
    for (size_t head = 0; head < work.size(); ++head) {
        const std::vector<int> base = work[head];
        std::vector<char> in(g.order, 0);
        for (int e : base) in[e] = 1;
        for (int x = 0; x < g.order; ++x) {
            if (in[x]) continue;
            auto gens = base;
            gens.push_back(x);
            auto closed = subgroup_generated(g, gens).elements;
            if (seen.insert(closed).second) work.push_back(std::move(closed));
        }
    }
    std::vector<Subgroup> out;
    out.reserve(work.size());
    for (auto& elems : seen) out.push_back(subgroup_from_elements(g, elems));
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.elements < b.elements;
    });
    return out;
}

Subgroup conjugate_subgroup(const Subgroup& h, int g) {
    const FiniteGroup& gg = *h.group;
    if (g < 0 || g >= gg.order) throw std::invalid_argument("conjugating element out of range");
    std::vector<int> elems;
    elems.reserve(h.elements.size());
    for (int e : h.elements) elems.push_back(gg.conj(e, g));
    return subgroup_from_elements(gg, std::move(elems));
}

Subgroup centralizer(const FiniteGroup& g, const Subgroup& h) {
    std::vector<int> elems;
    for (int z = 0; z < g.order; ++z) {
        bool ok = true;
        for (int e : h.elements)
            if (g.mul(z, e) != g.mul(e, z)) {
                ok = false;
                break;
            }
        if (ok) elems.push_back(z);
    }
    return subgroup_from_elements(g, std::move(elems));
}

std::vector<int> left_coset_reps(const Subgroup& k, const Subgroup& h) {
    if (!is_subgroup_of(h, k)) throw std::invalid_argument("coset reps: not a subgroup");
    const FiniteGroup& g = *k.group;
    std::vector<char> covered(g.order, 0);
    std::vector<int> reps;
    for (int x : k.elements) {
        if (covered[x]) continue;
        reps.push_back(x);
        for (int e : h.elements) covered[g.mul(x, e)] = 1;
    }
    return reps;
}

int normalize_coset_rep(int g, const Subgroup& k) {
    const FiniteGroup& gg = *k.group;
    int best = gg.mul(g, k.elements[0]);
    for (int e : k.elements) best = std::min(best, gg.mul(g, e));
    return best;
}

GroupHom identity_hom(const Subgroup& h) { return GroupHom{h, h, h.elements}; }

GroupHom conjugation_hom(const Subgroup& h, int g) {
    GroupHom f;
    f.domain = h;
    f.codomain = conjugate_subgroup(h, g);
    f.images.reserve(h.elements.size());
    for (int e : h.elements) f.images.push_back(h.group->conj(e, g));
    return f;
}

GroupHom inverse_hom(const GroupHom& f) {
    if (!is_isomorphism_onto(f)) throw std::invalid_argument("inverse of a non-isomorphism");
    GroupHom r;
    r.domain = f.codomain;
    r.codomain = f.domain;
    r.images.assign(f.codomain.size(), -1);
    for (size_t i = 0; i < f.images.size(); ++i)
        r.images[f.codomain.pos(f.images[i])] = f.domain.elements[i];
    return r;
}

GroupHom compose_homs(const GroupHom& second, const GroupHom& first) {
    GroupHom r;
    r.domain = first.domain;
    r.codomain = second.codomain;
    r.images.reserve(first.images.size());
    for (int v : first.images) {
        if (!second.domain.contains(v))
            throw std::invalid_argument("hom composition: image not in next domain");
        r.images.push_back(second.apply(v));
    }
    return r;
}

bool is_multiplicative(const GroupHom& f) {
    const FiniteGroup& g = *f.domain.group;
    for (int a : f.domain.elements) {
        if (!f.codomain.contains(f.apply(a))) return false;
        for (int b : f.domain.elements)
            if (f.apply(g.mul(a, b)) != g.mul(f.apply(a), f.apply(b))) return false;
    }
    return true;
}

bool is_isomorphism_onto(const GroupHom& f) {
    if (f.domain.size() != f.codomain.size()) return false;
    std::vector<char> hit(f.codomain.size(), 0);
    for (int v : f.images) {
        if (!f.codomain.contains(v)) return false;
        if (hit[f.codomain.pos(v)]++) return false;
    }
    return is_multiplicative(f);
}

bool homs_equal(const GroupHom& a, const GroupHom& b) {
    return a.domain == b.domain && a.codomain == b.codomain && a.images == b.images;
}

std::vector<GroupHom> enumerate_isomorphisms(const Subgroup& from, const Subgroup& to) {
    std::vector<GroupHom> out;
    if (from.size() != to.size()) return out;
    const FiniteGroup& g = *from.group;

    // Greedy generating sequence of `from`.
    std::vector<int> gens;
    {
        std::vector<char> in(g.order, 0);
        in[g.identity] = 1;
        int reached = 1;
        while (reached < from.size()) {
            int pick = -1;
            for (int e : from.elements)
                if (!in[e]) {
                    pick = e;
                    break;
                }
            gens.push_back(pick);
            auto closed = subgroup_generated(g, gens).elements;
            std::fill(in.begin(), in.end(), 0);
            for (int e : closed) in[e] = 1;
            reached = static_cast<int>(closed.size());
        }
    }

    std::vector<int> img(from.size(), -1);
    img[from.pos(g.identity)] = g.identity;

    // Propagate multiplicative closure from the currently assigned elements;
    // returns false on conflict.
    auto propagate = [&](std::vector<int>& m) -> bool {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int a : from.elements) {
                if (m[from.pos(a)] < 0) continue;
                for (int b : from.elements) {
                    if (m[from.pos(b)] < 0) continue;
                    int c = g.mul(a, b);
                    int v = g.mul(m[from.pos(a)], m[from.pos(b)]);
                    int& slot = m[from.pos(c)];
                    if (slot < 0) {
                        slot = v;
                        changed = true;
                    } else if (slot != v) {
                        return false;
                    }
                }
            }
        }
        return true;
    };

    std::vector<int> gen_orders;
    for (int e : gens) gen_orders.push_back(g.element_order(e));

    std::vector<GroupHom> result;
    auto rec = [&](auto&& self, size_t gi, const std::vector<int>& m) -> void {
        if (gi == gens.size()) {
            GroupHom f{from, to, m};
            if (is_isomorphism_onto(f)) result.push_back(std::move(f));
            return;
        }
        for (int y : to.elements) {
            if (g.element_order(y) != gen_orders[gi]) continue;
            std::vector<int> next = m;
            int& slot = next[from.pos(gens[gi])];
            if (slot >= 0 && slot != y) continue;
            slot = y;
            if (propagate(next)) self(self, gi + 1, next);
        }
    };
    rec(rec, 0, img);
    return result;
}

std::optional<int> conjugation_realizing(const GroupHom& gamma) {
    if (!is_isomorphism_onto(gamma))
        throw std::invalid_argument("conjugation_realizing: not an isomorphism onto its codomain");
    const FiniteGroup& g = *gamma.domain.group;
    for (int cand = 0; cand < g.order; ++cand) {
        bool ok = true;
        for (size_t i = 0; i < gamma.images.size(); ++i) {
            if (g.conj(gamma.domain.elements[i], cand) != gamma.images[i]) {
                ok = false;
                break;
            }
        }
        if (ok) return cand;
    }
    return std::nullopt;
}

DoubleCosetDecomposition double_cosets(const Subgroup& ambient, const Subgroup& left,
                                       const Subgroup& right) {
    if (!is_subgroup_of(left, ambient) || !is_subgroup_of(right, ambient))
        throw std::invalid_argument("double_cosets: factor not contained in ambient");
    const FiniteGroup& g = *ambient.group;
    DoubleCosetDecomposition dc{ambient, left, right, {}, std::vector<int>(ambient.size(), -1)};
    for (int i = 0; i < ambient.size(); ++i) {
        if (dc.coset_of[i] >= 0) continue;
        int rep = ambient.elements[i];
        int idx = static_cast<int>(dc.representatives.size());
        dc.representatives.push_back(rep);
        for (int l : left.elements)
            for (int r : right.elements) dc.coset_of[ambient.pos(g.mul(g.mul(l, rep), r))] = idx;
    }
    return dc;
}

}  // namespace bisets
