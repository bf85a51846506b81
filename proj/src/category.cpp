#include "bisets/category.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bisets {

BisetMorphism zero_morphism(const Subgroup& source, const Subgroup& target) {
    return BisetMorphism{source, target, {}};
}

BisetMorphism identity_morphism(const Subgroup& h) {
    return morphism_from_rep(identity_rep(h));
}

BisetMorphism morphism_from_rep(const StandardRep& rep, long long coeff) {
    BisetMorphism m{rep.H1, rep.H2, {}};
    if (coeff != 0) m.terms[canonical_key(rep)] = coeff;
    return m;
}

BisetMorphism hom_add(const BisetMorphism& a, const BisetMorphism& b) {
    if (a.source != b.source || a.target != b.target)
        throw std::invalid_argument("hom_add: endpoint mismatch");
    BisetMorphism out = a;
    for (const auto& [key, c] : b.terms) {
        long long v = (out.terms[key] += c);
        if (v == 0) out.terms.erase(key);
    }
    return out;
}

BisetMorphism hom_scale(const BisetMorphism& a, long long c) {
    BisetMorphism out{a.source, a.target, {}};
    if (c == 0) return out;
    for (const auto& [key, v] : a.terms) out.terms[key] = v * c;
    return out;
}

BisetMorphism hom_compose(const BisetMorphism& b, const BisetMorphism& a) {
    if (b.source != a.target) throw std::invalid_argument("hom_compose: endpoint mismatch");
    const FiniteGroup& g = *a.source.group;
    BisetMorphism out{a.source, b.target, {}};
    for (const auto& [k2, c2] : b.terms) {
        StandardRep rep2 = rep_of_key(k2, g);
        for (const auto& [k1, c1] : a.terms) {
            StandardRep rep1 = rep_of_key(k1, g);
            for (const StandardRep& comp : compose_formula(rep2, rep1)) {
                CanonicalKey key = canonical_key(comp);
                long long v = (out.terms[key] += c2 * c1);
                if (v == 0) out.terms.erase(key);
            }
        }
    }
    return out;
}

BisetMorphism tau_morphism(const BisetMorphism& a) {
    const FiniteGroup* g = a.source.group;
    BisetMorphism out{a.target, a.source, {}};
    for (const auto& [key, c] : a.terms)
        out.terms[canonical_key(transpose(rep_of_key(key, *g)))] += c;
    return out;
}

bool morphism_equal(const BisetMorphism& a, const BisetMorphism& b) {
    return a.source == b.source && a.target == b.target && a.terms == b.terms;
}

bool is_in_B(const BisetMorphism& a) {
    const FiniteGroup* g = a.source.group;
    for (const auto& [key, c] : a.terms) {
        (void)c;
        if (!classify(rep_of_key(key, *g)).conjugation) return false;
    }
    return true;
}

MatrixMorphism zero_matrix(const std::vector<Subgroup>& source_tuple,
                           const std::vector<Subgroup>& target_tuple) {
    MatrixMorphism m{source_tuple, target_tuple, {}};
    m.entries.resize(target_tuple.size());
    for (size_t i = 0; i < target_tuple.size(); ++i)
        for (size_t j = 0; j < source_tuple.size(); ++j)
            m.entries[i].push_back(zero_morphism(source_tuple[j], target_tuple[i]));
    return m;
}

MatrixMorphism identity_matrix_morphism(const std::vector<Subgroup>& tuple) {
    MatrixMorphism m = zero_matrix(tuple, tuple);
    for (size_t i = 0; i < tuple.size(); ++i) m.entries[i][i] = identity_morphism(tuple[i]);
    return m;
}

MatrixMorphism matrix_compose(const MatrixMorphism& b, const MatrixMorphism& a) {
    if (b.source_tuple.size() != a.target_tuple.size())
        throw std::invalid_argument("matrix_compose: tuple mismatch");
    for (size_t i = 0; i < b.source_tuple.size(); ++i)
        if (b.source_tuple[i] != a.target_tuple[i])
            throw std::invalid_argument("matrix_compose: tuple mismatch");
    MatrixMorphism out = zero_matrix(a.source_tuple, b.target_tuple);
    for (size_t i = 0; i < b.target_tuple.size(); ++i)
        for (size_t j = 0; j < a.source_tuple.size(); ++j)
            for (size_t k = 0; k < b.source_tuple.size(); ++k)
                out.entries[i][j] =
                    hom_add(out.entries[i][j], hom_compose(b.entries[i][k], a.entries[k][j]));
    return out;
}

MatrixMorphism tau_matrix(const MatrixMorphism& m) {
    MatrixMorphism out{m.target_tuple, m.source_tuple, {}};
    out.entries.resize(m.source_tuple.size());
    for (size_t j = 0; j < m.source_tuple.size(); ++j)
        for (size_t i = 0; i < m.target_tuple.size(); ++i)
            out.entries[j].push_back(tau_morphism(m.entries[i][j]));
    return out;
}

bool matrix_equal(const MatrixMorphism& a, const MatrixMorphism& b) {
    if (a.source_tuple.size() != b.source_tuple.size() ||
        a.target_tuple.size() != b.target_tuple.size())
        return false;
    for (size_t j = 0; j < a.source_tuple.size(); ++j)
        if (a.source_tuple[j] != b.source_tuple[j]) return false;
    for (size_t i = 0; i < a.target_tuple.size(); ++i)
        if (a.target_tuple[i] != b.target_tuple[i]) return false;
    for (size_t i = 0; i < a.target_tuple.size(); ++i)
        for (size_t j = 0; j < a.source_tuple.size(); ++j)
            if (!morphism_equal(a.entries[i][j], b.entries[i][j])) return false;
    return true;
}

bool matrix_in_B(const MatrixMorphism& m) {
    for (const auto& row : m.entries)
        for (const auto& entry : row)
            if (!is_in_B(entry)) return false;
    return true;
}

GMap make_gmap(PointedGSet source, PointedGSet target, std::vector<int> orbit_map,
               std::vector<int> witnesses) {
    if (orbit_map.size() != source.orbits.size() || witnesses.size() != source.orbits.size())
        throw std::invalid_argument("gmap: sizes do not match source orbits");
    for (size_t i = 0; i < orbit_map.size(); ++i) {
        int j = orbit_map[i];
        if (j < 0 || j >= static_cast<int>(target.orbits.size()))
            throw std::invalid_argument("gmap: orbit map out of range");
        const Subgroup& h = source.orbits[i];
        const Subgroup& k = target.orbits[j];
        if (!is_subgroup_of(conjugate_subgroup(h, witnesses[i]), k))
            throw std::invalid_argument("gmap: witness containment fails");
        witnesses[i] = normalize_coset_rep(witnesses[i], k);
    }
    return GMap{std::move(source), std::move(target), std::move(orbit_map), std::move(witnesses)};
}

GMap single_orbit_gmap(const Subgroup& h, const Subgroup& k, int witness) {
    return make_gmap(PointedGSet{{h}}, PointedGSet{{k}}, {0}, {witness});
}

GMap identity_gmap(const PointedGSet& s) {
    std::vector<int> f(s.orbits.size()), w(s.orbits.size());
    for (size_t i = 0; i < s.orbits.size(); ++i) {
        f[i] = static_cast<int>(i);
        w[i] = s.orbits[i].group->identity;
    }
    return make_gmap(s, s, std::move(f), std::move(w));
}

GMap compose_gmaps(const GMap& second, const GMap& first) {
    if (first.target.orbits.size() != second.source.orbits.size())
        throw std::invalid_argument("gmap composition: middle object mismatch");
    for (size_t i = 0; i < first.target.orbits.size(); ++i)
        if (first.target.orbits[i] != second.source.orbits[i])
            throw std::invalid_argument("gmap composition: middle object mismatch");
    const FiniteGroup& g = first.source.orbits.empty() ? *second.target.orbits[0].group
                                                       : *first.source.orbits[0].group;
    std::vector<int> f(first.source.orbits.size()), w(first.source.orbits.size());
    for (size_t i = 0; i < f.size(); ++i) {
        int mid = first.orbit_map[i];
        f[i] = second.orbit_map[mid];
        w[i] = g.mul(first.witnesses[i], second.witnesses[mid]);
    }
    return make_gmap(first.source, second.target, std::move(f), std::move(w));
}

bool gmap_equal(const GMap& a, const GMap& b) {
    if (a.source.orbits.size() != b.source.orbits.size() ||
        a.target.orbits.size() != b.target.orbits.size())
        return false;
    for (size_t i = 0; i < a.source.orbits.size(); ++i)
        if (a.source.orbits[i] != b.source.orbits[i]) return false;
    for (size_t i = 0; i < a.target.orbits.size(); ++i)
        if (a.target.orbits[i] != b.target.orbits[i]) return false;
    return a.orbit_map == b.orbit_map && a.witnesses == b.witnesses;
}

void validate_gset(const GSetTable& x) {
    const FiniteGroup& g = *x.group;
    if (static_cast<int>(x.action.size()) != g.order)
        throw std::invalid_argument("gset: action table must have one row per group element");
    for (const auto& row : x.action) {
        if (static_cast<int>(row.size()) != x.size) throw std::invalid_argument("gset: row size");
        for (int v : row)
            if (v < 0 || v >= x.size) throw std::invalid_argument("gset: point out of range");
    }
    for (int p = 0; p < x.size; ++p)
        if (x.action[g.identity][p] != p) throw std::invalid_argument("gset: identity must act trivially");
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            for (int p = 0; p < x.size; ++p)
                if (x.action[g.mul(a, b)][p] != x.action[a][x.action[b][p]])
                    throw std::invalid_argument("gset: action law fails");
}

GSetTable coset_table(const Subgroup& h) {
    const FiniteGroup& g = *h.group;
    Subgroup full = full_subgroup(g);
    std::vector<int> reps = left_coset_reps(full, h);
    std::vector<int> point_of(g.order, -1);
    for (size_t i = 0; i < reps.size(); ++i)
        for (int e : h.elements) point_of[g.mul(reps[i], e)] = static_cast<int>(i);
    GSetTable x;
    x.group = &g;
    x.size = static_cast<int>(reps.size());
    x.action.assign(g.order, std::vector<int>(x.size));
    for (int a = 0; a < g.order; ++a)
        for (int p = 0; p < x.size; ++p) x.action[a][p] = point_of[g.mul(a, reps[p])];
    return x;
}

GSetTable gset_disjoint_union(const GSetTable& a, const GSetTable& b) {
    if (a.group != b.group) throw std::invalid_argument("gset union: different groups");
    GSetTable out;
    out.group = a.group;
    out.size = a.size + b.size;
    out.action.assign(a.group->order, std::vector<int>(out.size));
    for (int g = 0; g < a.group->order; ++g) {
        for (int p = 0; p < a.size; ++p) out.action[g][p] = a.action[g][p];
        for (int p = 0; p < b.size; ++p) out.action[g][a.size + p] = a.size + b.action[g][p];
    }
    return out;
}

PointedDecomposition decompose_pointed(const GSetTable& x) {
    validate_gset(x);
    const FiniteGroup& g = *x.group;
    PointedDecomposition out;
    out.orbit_of.assign(x.size, -1);
    for (int p = 0; p < x.size; ++p) {
        if (out.orbit_of[p] >= 0) continue;
        int orbit = static_cast<int>(out.basepoints.size());
        std::vector<int> stab;
        for (int a = 0; a < g.order; ++a) {
            out.orbit_of[x.action[a][p]] = orbit;
            if (x.action[a][p] == p) stab.push_back(a);
        }
        out.basepoints.push_back(p);
        out.pointed.orbits.push_back(subgroup_from_elements(g, stab));
    }
    return out;
}

MatrixMorphism functor_j_lower(const GMap& f) {
    MatrixMorphism m = zero_matrix(f.source.orbits, f.target.orbits);
    for (size_t i = 0; i < f.source.orbits.size(); ++i) {
        const Subgroup& h = f.source.orbits[i];
        const Subgroup& k = f.target.orbits[f.orbit_map[i]];
        const FiniteGroup& g = *h.group;
        int w = f.witnesses[i];
        Subgroup l = conjugate_subgroup(h, w);  // H^g <= K
        StandardRep rep{k, h, l, h, conjugation_hom(l, g.inv(w))};
        m.entries[f.orbit_map[i]][i] = morphism_from_rep(rep);
    }
    return m;
}

MatrixMorphism functor_j_upper(const GMap& f) { return tau_matrix(functor_j_lower(f)); }

PullbackResult pullback(const GMap& psi, const GMap& phi) {
    if (psi.source.orbits.size() != 1 || phi.source.orbits.size() != 1 ||
        psi.target.orbits.size() != 1 || phi.target.orbits.size() != 1)
        throw std::invalid_argument("pullback: expects single-orbit maps");
    if (psi.target.orbits[0] != phi.target.orbits[0])
        throw std::invalid_argument("pullback: targets do not match");
    const Subgroup& k = psi.target.orbits[0];
    const FiniteGroup& g = *k.group;
    const Subgroup& h1 = psi.source.orbits[0];
    const Subgroup& h2 = phi.source.orbits[0];
    int g1 = psi.witnesses[0], g2 = phi.witnesses[0];
    // Reduce to subgroups of K along the conjugation isomorphisms
    // G/H_i -> G/H_i^{g_i}, then transport the projections back.
    Subgroup h1p = conjugate_subgroup(h1, g1);
    Subgroup h2p = conjugate_subgroup(h2, g2);
    auto dc = double_cosets(k, h2p, h1p);

    PullbackResult out;
    std::vector<int> f1, w1, f2, w2;
    for (int x : dc.representatives) {
        Subgroup stab = intersect(h2p, conjugate_subgroup(h1p, g.inv(x)));
        out.object.orbits.push_back(stab);
        f1.push_back(0);
        w1.push_back(g.mul(x, g.inv(g1)));
        f2.push_back(0);
        w2.push_back(g.inv(g2));
    }
    out.proj1 = make_gmap(out.object, psi.source, std::move(f1), std::move(w1));
    out.proj2 = make_gmap(out.object, phi.source, std::move(f2), std::move(w2));
    return out;
}

std::vector<GMap> enumerate_orbit_maps(const Subgroup& h, const Subgroup& k) {
    const FiniteGroup& g = *h.group;
    std::set<int> reps;
    for (int cand = 0; cand < g.order; ++cand)
        if (is_subgroup_of(conjugate_subgroup(h, cand), k)) reps.insert(normalize_coset_rep(cand, k));
    std::vector<GMap> out;
    for (int w : reps) out.push_back(single_orbit_gmap(h, k, w));
    return out;
}

}  // namespace bisets
