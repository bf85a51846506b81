#include "bisets/mackey.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bisets {

namespace {

std::string elems_str(const std::vector<int>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

std::string hom_str(const AbHom& f) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < f.codomain.rank(); ++i) {
        if (i) os << "; ";
        for (int j = 0; j < f.domain.rank(); ++j) {
            if (j) os << " ";
            os << f.matrix[i][j];
        }
    }
    os << "]";
    return os.str();
}

void fail(CheckReport& rep, std::string axiom, std::string instance, std::string left,
          std::string right) {
    rep.pass = false;
    rep.failures.push_back({std::move(axiom), std::move(instance), std::move(left), std::move(right)});
}

}  // namespace

int MackeyData::index_of(const std::vector<int>& elements) const {
    for (size_t i = 0; i < subgroups.size(); ++i)
        if (subgroups[i].elements == elements) return static_cast<int>(i);
    throw std::invalid_argument("MackeyData: unknown subgroup " + elems_str(elements));
}

const AbHom& MackeyData::res(int h, int k) const {
    auto it = res_map.find({h, k});
    if (it == res_map.end()) throw std::invalid_argument("MackeyData: missing res map");
    return it->second;
}

const AbHom& MackeyData::ind(int h, int k) const {
    auto it = ind_map.find({h, k});
    if (it == ind_map.end()) throw std::invalid_argument("MackeyData: missing ind map");
    return it->second;
}

const AbHom& MackeyData::con(int g, int h) const {
    auto it = con_map.find({g, h});
    if (it == con_map.end()) throw std::invalid_argument("MackeyData: missing con map");
    return it->second;
}

CheckReport validate_structure(const MackeyData& d) {
    CheckReport rep;
    const FiniteGroup& g = *d.group;
    const int ns = static_cast<int>(d.subgroups.size());
    std::vector<std::vector<char>> leq(ns, std::vector<char>(ns, 0));
    for (int h = 0; h < ns; ++h)
        for (int k = 0; k < ns; ++k) leq[h][k] = is_subgroup_of(d.subgroups[h], d.subgroups[k]);

    for (int h = 0; h < ns; ++h) {
        if (!ab_equal(d.res(h, h), ab_identity(d.values[h])))
            fail(rep, "res-identity", "H=" + elems_str(d.subgroups[h].elements),
                 hom_str(d.res(h, h)), "id");
        if (!ab_equal(d.ind(h, h), ab_identity(d.values[h])))
            fail(rep, "ind-identity", "H=" + elems_str(d.subgroups[h].elements),
                 hom_str(d.ind(h, h)), "id");
    }
    for (int h = 0; h < ns; ++h)
        for (int k = 0; k < ns; ++k) {
            if (!leq[h][k]) continue;
            for (int l = 0; l < ns; ++l) {
                if (!leq[k][l]) continue;
                std::string inst = "H=" + elems_str(d.subgroups[h].elements) +
                                   " K=" + elems_str(d.subgroups[k].elements) +
                                   " L=" + elems_str(d.subgroups[l].elements);
                AbHom lhs = ab_compose(d.res(h, k), d.res(k, l));
                if (!ab_equal(lhs, d.res(h, l)))
                    fail(rep, "res-transitivity", inst, hom_str(lhs), hom_str(d.res(h, l)));
                AbHom lhs2 = ab_compose(d.ind(k, l), d.ind(h, k));
                if (!ab_equal(lhs2, d.ind(h, l)))
                    fail(rep, "ind-transitivity", inst, hom_str(lhs2), hom_str(d.ind(h, l)));
            }
        }
    for (int h = 0; h < ns; ++h) {
        const Subgroup& sub = d.subgroups[h];
        if (!ab_equal(d.con(g.identity, h), ab_identity(d.values[h])))
            fail(rep, "con-identity", "H=" + elems_str(sub.elements),
                 hom_str(d.con(g.identity, h)), "id");
        for (int e : sub.elements)
            if (!ab_equal(d.con(e, h), ab_identity(d.values[h])))
                fail(rep, "con-inner", "H=" + elems_str(sub.elements) + " h=" + std::to_string(e),
                     hom_str(d.con(e, h)), "id");
        for (int g1 = 0; g1 < g.order; ++g1) {
            int h_g1 = d.index_of(conjugate_subgroup(sub, g1));
            for (int g2 = 0; g2 < g.order; ++g2) {
                AbHom lhs = ab_compose(d.con(g2, h_g1), d.con(g1, h));
                AbHom rhs = d.con(g.mul(g1, g2), h);
                if (!ab_equal(lhs, rhs))
                    fail(rep, "con-cocycle",
                         "H=" + elems_str(sub.elements) + " g1=" + std::to_string(g1) +
                             " g2=" + std::to_string(g2),
                         hom_str(lhs), hom_str(rhs));
            }
        }
    }
    for (int h = 0; h < ns; ++h)
        for (int k = 0; k < ns; ++k) {
            if (!leq[h][k]) continue;
            for (int g1 = 0; g1 < g.order; ++g1) {
                int h_g = d.index_of(conjugate_subgroup(d.subgroups[h], g1));
                int k_g = d.index_of(conjugate_subgroup(d.subgroups[k], g1));
                std::string inst = "H=" + elems_str(d.subgroups[h].elements) +
                                   " K=" + elems_str(d.subgroups[k].elements) +
                                   " g=" + std::to_string(g1);
                AbHom lhs = ab_compose(d.con(g1, h), d.res(h, k));
                AbHom rhs = ab_compose(d.res(h_g, k_g), d.con(g1, k));
                if (!ab_equal(lhs, rhs)) fail(rep, "con-res", inst, hom_str(lhs), hom_str(rhs));
                AbHom lhs2 = ab_compose(d.con(g1, k), d.ind(h, k));
                AbHom rhs2 = ab_compose(d.ind(h_g, k_g), d.con(g1, h));
                if (!ab_equal(lhs2, rhs2)) fail(rep, "con-ind", inst, hom_str(lhs2), hom_str(rhs2));
            }
        }
    return rep;
}

AbHom covariant(const MackeyData& d, const Subgroup& h, const Subgroup& k, int witness) {
    Subgroup hg = conjugate_subgroup(h, witness);
    if (!is_subgroup_of(hg, k)) throw std::invalid_argument("covariant: invalid witness");
    return ab_compose(d.ind(d.index_of(hg), d.index_of(k)), d.con(witness, d.index_of(h)));
}

AbHom contravariant(const MackeyData& d, const Subgroup& h, const Subgroup& k, int witness) {
    const FiniteGroup& g = *d.group;
    Subgroup hg = conjugate_subgroup(h, witness);
    if (!is_subgroup_of(hg, k)) throw std::invalid_argument("contravariant: invalid witness");
    return ab_compose(d.con(g.inv(witness), d.index_of(hg)),
                      d.res(d.index_of(hg), d.index_of(k)));
}

FgAbelianGroup mackey_value(const MackeyData& d, const PointedGSet& s) {
    std::vector<FgAbelianGroup> parts;
    for (const Subgroup& h : s.orbits) parts.push_back(d.values[d.index_of(h)]);
    return direct_sum(parts);
}

AbHom covariant_matrix(const MackeyData& d, const GMap& f) {
    std::vector<FgAbelianGroup> dom_parts, cod_parts;
    for (const Subgroup& h : f.source.orbits) dom_parts.push_back(d.values[d.index_of(h)]);
    for (const Subgroup& k : f.target.orbits) cod_parts.push_back(d.values[d.index_of(k)]);
    std::vector<std::vector<AbHom>> blocks(cod_parts.size());
    for (size_t i = 0; i < cod_parts.size(); ++i)
        for (size_t j = 0; j < dom_parts.size(); ++j)
            blocks[i].push_back(ab_zero(dom_parts[j], cod_parts[i]));
    for (size_t j = 0; j < f.source.orbits.size(); ++j)
        blocks[f.orbit_map[j]][j] =
            covariant(d, f.source.orbits[j], f.target.orbits[f.orbit_map[j]], f.witnesses[j]);
    return assemble_blocks(dom_parts, cod_parts, blocks);
}

AbHom contravariant_matrix(const MackeyData& d, const GMap& f) {
    std::vector<FgAbelianGroup> dom_parts, cod_parts;
    for (const Subgroup& k : f.target.orbits) dom_parts.push_back(d.values[d.index_of(k)]);
    for (const Subgroup& h : f.source.orbits) cod_parts.push_back(d.values[d.index_of(h)]);
    std::vector<std::vector<AbHom>> blocks(cod_parts.size());
    for (size_t i = 0; i < cod_parts.size(); ++i)
        for (size_t j = 0; j < dom_parts.size(); ++j)
            blocks[i].push_back(ab_zero(dom_parts[j], cod_parts[i]));
    for (size_t i = 0; i < f.source.orbits.size(); ++i)
        blocks[i][f.orbit_map[i]] =
            contravariant(d, f.source.orbits[i], f.target.orbits[f.orbit_map[i]], f.witnesses[i]);
    return assemble_blocks(dom_parts, cod_parts, blocks);
}

namespace {

// Right-hand side of the Mackey axiom in generator form, as one summand per
// double coset representative x: ind . con(x^-1) . res.
AbHom m1_double_coset_sum(const MackeyData& d, int h1, int h2, int k) {
    const FiniteGroup& g = *d.group;
    const Subgroup& H1 = d.subgroups[h1];
    const Subgroup& H2 = d.subgroups[h2];
    AbHom rhs = ab_zero(d.values[h1], d.values[h2]);
    auto dc = double_cosets(d.subgroups[k], H2, H1);
    for (int x : dc.representatives) {
        Subgroup a = intersect(H2, conjugate_subgroup(H1, g.inv(x)));  // H2 n H1^{x^-1}
        Subgroup b = intersect(H1, conjugate_subgroup(H2, x));         // H1 n H2^{x}
        int ia = d.index_of(a), ib = d.index_of(b);
        AbHom term = ab_compose(d.ind(ia, h2), ab_compose(d.con(g.inv(x), ib), d.res(ib, h1)));
        rhs = ab_add(rhs, term);
    }
    return rhs;
}

}  // namespace

CheckReport check_M1(const MackeyData& d) {
    CheckReport structural = validate_structure(d);
    if (!structural.pass) return structural;
    CheckReport rep;
    const FiniteGroup& g = *d.group;
    const int ns = static_cast<int>(d.subgroups.size());
    for (int k = 0; k < ns; ++k) {
        for (int h1 = 0; h1 < ns; ++h1) {
            if (!is_subgroup_of(d.subgroups[h1], d.subgroups[k])) continue;
            for (int h2 = 0; h2 < ns; ++h2) {
                if (!is_subgroup_of(d.subgroups[h2], d.subgroups[k])) continue;
                AbHom lhs = ab_compose(d.res(h2, k), d.ind(h1, k));
                AbHom rhs = m1_double_coset_sum(d, h1, h2, k);
                if (!ab_equal(lhs, rhs))
                    fail(rep, "M1",
                         "H1=" + elems_str(d.subgroups[h1].elements) +
                             " H2=" + elems_str(d.subgroups[h2].elements) +
                             " K=" + elems_str(d.subgroups[k].elements),
                         hom_str(lhs), hom_str(rhs));
            }
        }
    }
    // Full axiom on pullback squares with non-subgroup witnesses.
    for (int k = 0; k < ns; ++k) {
        for (int h1 = 0; h1 < ns; ++h1) {
            for (int h2 = 0; h2 < ns; ++h2) {
                for (int g1 : {g.identity, g.order - 1}) {
                    for (int g2 : {g.identity, g.order / 2}) {
                        if (!is_subgroup_of(conjugate_subgroup(d.subgroups[h1], g1), d.subgroups[k]))
                            continue;
                        if (!is_subgroup_of(conjugate_subgroup(d.subgroups[h2], g2), d.subgroups[k]))
                            continue;
                        GMap psi = single_orbit_gmap(d.subgroups[h1], d.subgroups[k], g1);
                        GMap phi = single_orbit_gmap(d.subgroups[h2], d.subgroups[k], g2);
                        PullbackResult pb = pullback(psi, phi);
                        AbHom lhs = ab_compose(contravariant_matrix(d, phi), covariant_matrix(d, psi));
                        AbHom rhs = ab_compose(covariant_matrix(d, pb.proj2),
                                               contravariant_matrix(d, pb.proj1));
                        if (!ab_equal(lhs, rhs))
                            fail(rep, "M1-square",
                                 "H1=" + elems_str(d.subgroups[h1].elements) + " g1=" +
                                     std::to_string(g1) + " H2=" +
                                     elems_str(d.subgroups[h2].elements) + " g2=" +
                                     std::to_string(g2) + " K=" + elems_str(d.subgroups[k].elements),
                                 hom_str(lhs), hom_str(rhs));
                    }
                }
            }
        }
    }
    return rep;
}

CheckReport check_M2(const MackeyData& d) {
    CheckReport rep;
    const int ns = static_cast<int>(d.subgroups.size());
    auto identity_blocks = [&](const std::vector<Subgroup>& orbits, const std::string& inst) {
        PointedGSet total{orbits};
        for (size_t i = 0; i < orbits.size(); ++i) {
            GMap incl_i = make_gmap(PointedGSet{{orbits[i]}}, total, {static_cast<int>(i)},
                                    {d.group->identity});
            for (size_t j = 0; j < orbits.size(); ++j) {
                GMap incl_j = make_gmap(PointedGSet{{orbits[j]}}, total, {static_cast<int>(j)},
                                        {d.group->identity});
                AbHom comp = ab_compose(contravariant_matrix(d, incl_j), covariant_matrix(d, incl_i));
                AbHom expect = i == j ? ab_identity(d.values[d.index_of(orbits[i])])
                                      : ab_zero(d.values[d.index_of(orbits[i])],
                                                d.values[d.index_of(orbits[j])]);
                if (!ab_equal(comp, expect))
                    fail(rep, "M2", inst + " i=" + std::to_string(i) + " j=" + std::to_string(j),
                         hom_str(comp), hom_str(expect));
            }
        }
    };
    for (int h = 0; h < ns; ++h) {
        identity_blocks({d.subgroups[h]}, "single H=" + elems_str(d.subgroups[h].elements));
        identity_blocks({d.subgroups[h], d.subgroups[h]},
                        "double H=" + elems_str(d.subgroups[h].elements));
    }
    std::vector<Subgroup> mixed;
    for (int h = 0; h < std::min(ns, 3); ++h) mixed.push_back(d.subgroups[h]);
    identity_blocks(mixed, "mixed sample");
    return rep;
}

CheckReport check_conjugation_invariance(const MackeyData& d) {
    CheckReport rep;
    const FiniteGroup& g = *d.group;
    const int ns = static_cast<int>(d.subgroups.size());
    for (int h = 0; h < ns; ++h) {
        Subgroup c = centralizer(g, d.subgroups[h]);
        for (int z : c.elements) {
            if (!ab_equal(d.con(z, h), ab_identity(d.values[h])))
                fail(rep, "conjugation-invariance",
                     "H=" + elems_str(d.subgroups[h].elements) + " z=" + std::to_string(z),
                     hom_str(d.con(z, h)), "id");
        }
    }
    if (!rep.pass) return rep;
    // Orbit-category morphisms with the same conjugation class must induce the
    // same maps: phi_1 = phi_2 . phi_z for z = g1 h2 g2^-1 centralizing H1.
    for (int h1 = 0; h1 < ns; ++h1) {
        for (int h2 = 0; h2 < ns; ++h2) {
            auto maps = enumerate_orbit_maps(d.subgroups[h1], d.subgroups[h2]);
            Subgroup c = centralizer(g, d.subgroups[h1]);
            for (size_t a = 0; a < maps.size(); ++a) {
                for (size_t b = a + 1; b < maps.size(); ++b) {
                    int ga = maps[a].witnesses[0], gb = maps[b].witnesses[0];
                    bool same_class = false;
                    for (int e : d.subgroups[h2].elements)
                        if (c.contains(g.mul(g.mul(ga, e), g.inv(gb)))) {
                            same_class = true;
                            break;
                        }
                    if (!same_class) continue;
                    AbHom ca = covariant(d, d.subgroups[h1], d.subgroups[h2], ga);
                    AbHom cb = covariant(d, d.subgroups[h1], d.subgroups[h2], gb);
                    if (!ab_equal(ca, cb))
                        fail(rep, "conjugation-class-covariant",
                             "H1=" + elems_str(d.subgroups[h1].elements) + " g1=" +
                                 std::to_string(ga) + " g2=" + std::to_string(gb),
                             hom_str(ca), hom_str(cb));
                    AbHom ra = contravariant(d, d.subgroups[h1], d.subgroups[h2], ga);
                    AbHom rb = contravariant(d, d.subgroups[h1], d.subgroups[h2], gb);
                    if (!ab_equal(ra, rb))
                        fail(rep, "conjugation-class-contravariant",
                             "H1=" + elems_str(d.subgroups[h1].elements) + " g1=" +
                                 std::to_string(ga) + " g2=" + std::to_string(gb),
                             hom_str(ra), hom_str(rb));
                }
            }
        }
    }
    return rep;
}

const AbHom& FactorFunctor::key_value(const CanonicalKey& key) const {
    auto it = table.find(key);
    if (it == table.end())
        throw std::invalid_argument("factor functor: key is not a conjugation biset of this group");
    return it->second;
}

AbHom FactorFunctor::apply(const BisetMorphism& m) const {
    AbHom out = ab_zero(data->values[data->index_of(m.source)],
                        data->values[data->index_of(m.target)]);
    for (const auto& [key, coeff] : m.terms) out = ab_add(out, ab_scale(key_value(key), coeff));
    return out;
}

AbHom FactorFunctor::apply_matrix(const MatrixMorphism& m) const {
    std::vector<FgAbelianGroup> dom_parts, cod_parts;
    for (const Subgroup& h : m.source_tuple) dom_parts.push_back(data->values[data->index_of(h)]);
    for (const Subgroup& k : m.target_tuple) cod_parts.push_back(data->values[data->index_of(k)]);
    std::vector<std::vector<AbHom>> blocks(cod_parts.size());
    for (size_t i = 0; i < cod_parts.size(); ++i)
        for (size_t j = 0; j < dom_parts.size(); ++j) blocks[i].push_back(apply(m.entries[i][j]));
    return assemble_blocks(dom_parts, cod_parts, blocks);
}

BuildFResult build_F(const MackeyData& d) {
    BuildFResult out;
    out.refusal = check_conjugation_invariance(d);
    if (!out.refusal.pass) return out;

    const FiniteGroup& g = *d.group;
    out.functor.data = &d;
    const int ns = static_cast<int>(d.subgroups.size());
    for (int h2 = 0; h2 < ns; ++h2) {
        for (int h1 = 0; h1 < ns; ++h1) {
            auto& keys = out.functor.keys_by_pair[{h2, h1}];
            for (const StandardRep& rep :
                 enumerate_conjugation_reps(d.subgroups[h2], d.subgroups[h1], d.subgroups)) {
                CanonicalKey key = canonical_key(rep);
                int l = d.index_of(rep.L), k = d.index_of(rep.K);
                // Evaluate through every realizing element; independence is a
                // consequence of conjugation invariance, asserted here.
                AbHom value = ab_zero(d.values[h1], d.values[h2]);
                bool first = true;
                for (int cand = 0; cand < g.order; ++cand) {
                    bool realizes = true;
                    for (int i = 0; i < rep.L.size(); ++i)
                        if (g.conj(rep.L.elements[i], cand) != rep.gamma.images[i]) {
                            realizes = false;
                            break;
                        }
                    if (!realizes) continue;
                    AbHom candidate = ab_compose(
                        d.ind(l, h2), ab_compose(d.con(g.inv(cand), k), d.res(k, h1)));
                    if (first) {
                        value = candidate;
                        first = false;
                    } else if (!ab_equal(value, candidate)) {
                        throw std::logic_error("factor functor: realizing element dependence");
                    }
                }
                if (first) throw std::logic_error("factor functor: conjugation rep with no witness");
                auto it = out.functor.table.find(key);
                if (it == out.functor.table.end()) {
                    out.functor.table.emplace(key, std::move(value));
                    keys.push_back(key);
                } else if (!ab_equal(it->second, value)) {
                    throw std::logic_error("factor functor: base point dependence");
                }
            }
        }
    }
    out.ok = true;
    return out;
}

CheckReport verify_functoriality(const FactorFunctor& f, const MackeyData& d) {
    CheckReport rep;
    const FiniteGroup& g = *d.group;
    const int ns = static_cast<int>(d.subgroups.size());
    for (int h3 = 0; h3 < ns; ++h3)
        for (int h2 = 0; h2 < ns; ++h2) {
            const auto& keys2 = f.keys_by_pair.at({h3, h2});
            if (keys2.empty()) continue;
            for (int h1 = 0; h1 < ns; ++h1) {
                const auto& keys1 = f.keys_by_pair.at({h2, h1});
                for (const CanonicalKey& k2 : keys2) {
                    BisetMorphism m2 = morphism_from_rep(rep_of_key(k2, g));
                    for (const CanonicalKey& k1 : keys1) {
                        BisetMorphism m1 = morphism_from_rep(rep_of_key(k1, g));
                        BisetMorphism comp = hom_compose(m2, m1);
                        AbHom lhs = f.apply(comp);
                        AbHom rhs = ab_compose(f.key_value(k2), f.key_value(k1));
                        if (!ab_equal(lhs, rhs))
                            fail(rep, "functoriality",
                                 "pair over H3=" + elems_str(d.subgroups[h3].elements) + " H2=" +
                                     elems_str(d.subgroups[h2].elements) + " H1=" +
                                     elems_str(d.subgroups[h1].elements) + " components=" +
                                     std::to_string(comp.terms.size()),
                                 hom_str(lhs), hom_str(rhs));
                    }
                }
            }
        }
    return rep;
}

CheckReport check_factorization_agreement(const FactorFunctor& f, const MackeyData& d) {
    CheckReport rep;
    const int ns = static_cast<int>(d.subgroups.size());
    for (int h = 0; h < ns; ++h)
        for (int k = 0; k < ns; ++k)
            for (const GMap& map : enumerate_orbit_maps(d.subgroups[h], d.subgroups[k])) {
                std::string inst = "G/" + elems_str(d.subgroups[h].elements) + " -> G/" +
                                   elems_str(d.subgroups[k].elements) + " g=" +
                                   std::to_string(map.witnesses[0]);
                AbHom lhs = f.apply_matrix(functor_j_lower(map));
                AbHom rhs = covariant(d, d.subgroups[h], d.subgroups[k], map.witnesses[0]);
                rhs.domain = lhs.domain;  // identical factor lists
                rhs.codomain = lhs.codomain;
                if (!ab_equal(lhs, rhs))
                    fail(rep, "Fj-covariant", inst, hom_str(lhs), hom_str(rhs));
                AbHom lhs2 = f.apply_matrix(functor_j_upper(map));
                AbHom rhs2 = contravariant(d, d.subgroups[h], d.subgroups[k], map.witnesses[0]);
                rhs2.domain = lhs2.domain;
                rhs2.codomain = lhs2.codomain;
                if (!ab_equal(lhs2, rhs2))
                    fail(rep, "Fj-contravariant", inst, hom_str(lhs2), hom_str(rhs2));
            }
    return rep;
}

CheckReport check_Fj_mackey(const FactorFunctor& f, const MackeyData& d) {
    CheckReport rep;
    const int ns = static_cast<int>(d.subgroups.size());
    for (int k = 0; k < ns; ++k) {
        std::vector<GMap> maps_in;
        for (int h = 0; h < ns; ++h) {
            auto more = enumerate_orbit_maps(d.subgroups[h], d.subgroups[k]);
            maps_in.insert(maps_in.end(), more.begin(), more.end());
        }
        for (const GMap& psi : maps_in)
            for (const GMap& phi : maps_in) {
                PullbackResult pb = pullback(psi, phi);
                AbHom lhs = ab_compose(f.apply_matrix(functor_j_upper(phi)),
                                       f.apply_matrix(functor_j_lower(psi)));
                AbHom rhs = ab_compose(f.apply_matrix(functor_j_lower(pb.proj2)),
                                       f.apply_matrix(functor_j_upper(pb.proj1)));
                if (!ab_equal(lhs, rhs))
                    fail(rep, "Fj-M1",
                         "H1=" + elems_str(psi.source.orbits[0].elements) + " g1=" +
                             std::to_string(psi.witnesses[0]) + " H2=" +
                             elems_str(phi.source.orbits[0].elements) + " g2=" +
                             std::to_string(phi.witnesses[0]) + " K=" +
                             elems_str(d.subgroups[k].elements),
                         hom_str(lhs), hom_str(rhs));
            }
    }
    return rep;
}

// ---- examples ----

MackeyData burnside_example(const FiniteGroup& g) {
    MackeyData d;
    d.group = &g;
    d.subgroups = enumerate_subgroups(g);
    const int ns = static_cast<int>(d.subgroups.size());

    std::map<std::vector<int>, int> global_index;
    for (int i = 0; i < ns; ++i) global_index[d.subgroups[i].elements] = i;

    // Per subgroup H: its H-conjugacy classes of subgroups, each keyed by the
    // minimal conjugate element list; class reps sorted by (order, elements).
    struct Classes {
        std::vector<std::vector<int>> reps;            // canonical rep element lists
        std::map<std::vector<int>, int> class_of;      // member elements -> class position
    };
    std::vector<Classes> cls(ns);
    for (int h = 0; h < ns; ++h) {
        const Subgroup& sub = d.subgroups[h];
        std::set<std::vector<int>> done;
        for (int s = 0; s < ns; ++s) {
            if (!is_subgroup_of(d.subgroups[s], sub)) continue;
            if (done.count(d.subgroups[s].elements)) continue;
            std::set<std::vector<int>> orbit;
            for (int x : sub.elements) orbit.insert(conjugate_subgroup(d.subgroups[s], x).elements);
            const std::vector<int>& canon = *orbit.begin();
            int pos = static_cast<int>(cls[h].reps.size());
            cls[h].reps.push_back(canon);
            for (const auto& member : orbit) {
                cls[h].class_of[member] = pos;
                done.insert(member);
            }
        }
        // reps are discovered in (order, elements) order because the global
        // subgroup list is sorted and the minimal conjugate has equal order
        std::vector<int> perm(cls[h].reps.size());
        for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
        std::sort(perm.begin(), perm.end(), [&](int a, int b) {
            const auto& ra = cls[h].reps[a];
            const auto& rb = cls[h].reps[b];
            if (ra.size() != rb.size()) return ra.size() < rb.size();
            return ra < rb;
        });
        std::vector<std::vector<int>> sorted_reps;
        std::vector<int> where(perm.size());
        for (size_t i = 0; i < perm.size(); ++i) {
            sorted_reps.push_back(cls[h].reps[perm[i]]);
            where[perm[i]] = static_cast<int>(i);
        }
        cls[h].reps = std::move(sorted_reps);
        for (auto& [elems, pos] : cls[h].class_of) pos = where[pos];
        d.values.push_back(FgAbelianGroup{
            std::vector<long long>(cls[h].reps.size(), 0)});
    }

    for (int h = 0; h < ns; ++h)
        for (int k = 0; k < ns; ++k) {
            if (!is_subgroup_of(d.subgroups[h], d.subgroups[k])) continue;
            const Subgroup& H = d.subgroups[h];
            const Subgroup& K = d.subgroups[k];
            AbHom res = ab_zero(d.values[k], d.values[h]);
            for (size_t col = 0; col < cls[k].reps.size(); ++col) {
                Subgroup L = d.subgroups[global_index.at(cls[k].reps[col])];
                auto dc = double_cosets(K, H, L);
                for (int x : dc.representatives) {
                    Subgroup t = intersect(H, conjugate_subgroup(L, g.inv(x)));
                    res.matrix[cls[h].class_of.at(t.elements)][col] += 1;
                }
            }
            d.res_map.emplace(std::make_pair(h, k), std::move(res));
            AbHom ind = ab_zero(d.values[h], d.values[k]);
            for (size_t col = 0; col < cls[h].reps.size(); ++col)
                ind.matrix[cls[k].class_of.at(cls[h].reps[col])][col] += 1;
            d.ind_map.emplace(std::make_pair(h, k), std::move(ind));
        }
    for (int h = 0; h < ns; ++h)
        for (int x = 0; x < g.order; ++x) {
            int hg = global_index.at(conjugate_subgroup(d.subgroups[h], x).elements);
            AbHom con = ab_zero(d.values[h], d.values[hg]);
            for (size_t col = 0; col < cls[h].reps.size(); ++col) {
                Subgroup L = d.subgroups[global_index.at(cls[h].reps[col])];
                con.matrix[cls[hg].class_of.at(conjugate_subgroup(L, x).elements)][col] += 1;
            }
            d.con_map.emplace(std::make_pair(x, h), std::move(con));
        }
    return d;
}

namespace {

// Fixed-point lattice data for one subgroup: the sublattice V = {v : rho(h)v = v
// mod N} in a basis adapted to the quotient V / relations(N).
struct FixedValue {
    IntMatrix basis;             // dim x s, columns: adapted basis of V
    SmithDecomposition solve;    // of basis, for expressing vectors of V
    std::vector<long long> factors_full;  // quotient invariant factors, length s
    std::vector<int> kept;                // coordinates with factor != 1
    FgAbelianGroup value;
};

FixedValue fixed_value(const FgAbelianGroup& n, const std::vector<IntMatrix>& action,
                       const Subgroup& h) {
    const int dim = n.rank();
    FixedValue out;

    // Solution lattice of (rho(x) - I) v = 0 mod N over all x in H, with one
    // slack unknown per modular row.
    std::vector<std::vector<long long>> rows;
    std::vector<long long> moduli;
    for (int x : h.elements) {
        if (x == h.group->identity) continue;
        for (int i = 0; i < dim; ++i) {
            std::vector<long long> row(dim);
            for (int j = 0; j < dim; ++j) row[j] = action[x][i][j] - (i == j ? 1 : 0);
            rows.push_back(std::move(row));
            moduli.push_back(n.factors[i]);
        }
    }
    int slack = 0;
    for (long long m : moduli)
        if (m > 0) ++slack;
    IntMatrix sys(rows.size(), std::vector<long long>(dim + slack, 0));
    int si = 0;
    for (size_t r = 0; r < rows.size(); ++r) {
        for (int j = 0; j < dim; ++j) sys[r][j] = rows[r][j];
        if (moduli[r] > 0) sys[r][dim + si++] = moduli[r];
    }
    std::vector<std::vector<long long>> gens;  // columns spanning V
    if (rows.empty()) {
        for (int j = 0; j < dim; ++j) {
            std::vector<long long> e(dim, 0);
            e[j] = 1;
            gens.push_back(std::move(e));
        }
    } else {
        for (const auto& kvec : kernel_basis(sys, static_cast<int>(rows.size()), dim + slack))
            gens.push_back(std::vector<long long>(kvec.begin(), kvec.begin() + dim));
        for (int j = 0; j < dim; ++j) {  // relations of N are always solutions
            if (n.factors[j] == 0) continue;
            std::vector<long long> e(dim, 0);
            e[j] = n.factors[j];
            gens.push_back(std::move(e));
        }
    }
    IntMatrix genmat(dim, std::vector<long long>(gens.size()));
    for (size_t c = 0; c < gens.size(); ++c)
        for (int r = 0; r < dim; ++r) genmat[r][c] = gens[c][r];
    auto basis_cols = lattice_basis(genmat, dim);
    const int s = static_cast<int>(basis_cols.size());
    IntMatrix basis(dim, std::vector<long long>(s, 0));
    for (int c = 0; c < s; ++c)
        for (int r = 0; r < dim; ++r) basis[r][c] = basis_cols[c][r];

    // Quotient by the relations of N expressed in the V basis.
    std::vector<std::vector<long long>> lam_cols;
    for (int j = 0; j < dim; ++j) {
        if (n.factors[j] == 0) continue;
        std::vector<long long> e(dim, 0);
        e[j] = n.factors[j];
        lam_cols.push_back(std::move(e));
    }
    const int m = static_cast<int>(lam_cols.size());
    SmithDecomposition bsolve = smith_normal_form(basis, dim, s);
    IntMatrix x(s, std::vector<long long>(m, 0));
    for (int c = 0; c < m; ++c) {
        auto y = solve_linear(bsolve, lam_cols[c]);
        if (!y) throw std::logic_error("fixed points: relation outside solution lattice");
        for (int r = 0; r < s; ++r) x[r][c] = (*y)[r];
    }
    SmithDecomposition xs = smith_normal_form(x, s, m);
    out.basis = mat_mul(basis, xs.u_inv);  // adapted basis
    out.factors_full.assign(s, 0);
    for (int i = 0; i < std::min(s, m); ++i) out.factors_full[i] = xs.d[i][i];
    for (int i = 0; i < s; ++i)
        if (out.factors_full[i] != 1) out.kept.push_back(i);
    for (int i : out.kept) out.value.factors.push_back(out.factors_full[i]);
    out.solve = smith_normal_form(out.basis, dim, s);
    return out;
}

std::vector<long long> fixed_basis_vector(const FgAbelianGroup& n, const FixedValue& fv, int j) {
    const int dim = n.rank();
    std::vector<long long> v(dim);
    for (int r = 0; r < dim; ++r) {
        v[r] = fv.basis[r][fv.kept[j]];
        if (n.factors[r] > 0) v[r] = ((v[r] % n.factors[r]) + n.factors[r]) % n.factors[r];
    }
    return v;
}

std::vector<long long> fixed_coords(const FixedValue& fv, const std::vector<long long>& w) {
    auto y = solve_linear(fv.solve, w);
    if (!y) throw std::logic_error("fixed points: vector outside the fixed lattice");
    std::vector<long long> out;
    for (size_t j = 0; j < fv.kept.size(); ++j) {
        long long c = (*y)[fv.kept[j]];
        long long m = fv.factors_full[fv.kept[j]];
        if (m > 0) c = ((c % m) + m) % m;
        out.push_back(c);
    }
    return out;
}

}  // namespace

MackeyData fixed_point_example(const FiniteGroup& g, const FgAbelianGroup& n,
                               const std::vector<IntMatrix>& action) {
    if (static_cast<int>(action.size()) != g.order)
        throw std::invalid_argument("fixed points: one matrix per group element required");
    for (int x = 0; x < g.order; ++x) {
        AbHom f{n, n, action[x]};
        if (!ab_well_defined(f)) throw std::invalid_argument("fixed points: action matrix not well defined");
    }
    {
        AbHom id{n, n, action[g.identity]};
        if (!ab_equal(id, ab_identity(n)))
            throw std::invalid_argument("fixed points: identity must act trivially");
        for (int a = 0; a < g.order; ++a)
            for (int b = 0; b < g.order; ++b) {
                AbHom lhs{n, n, mat_mul(action[a], action[b])};
                AbHom rhs{n, n, action[g.mul(a, b)]};
                ab_normalize(lhs);
                ab_normalize(rhs);
                if (!ab_equal(lhs, rhs))
                    throw std::invalid_argument("fixed points: action is not a homomorphism");
            }
    }

    MackeyData d;
    d.group = &g;
    d.subgroups = enumerate_subgroups(g);
    const int ns = static_cast<int>(d.subgroups.size());
    std::vector<FixedValue> fv;
    for (int h = 0; h < ns; ++h) {
        fv.push_back(fixed_value(n, action, d.subgroups[h]));
        d.values.push_back(fv.back().value);
    }
    std::map<std::vector<int>, int> global_index;
    for (int i = 0; i < ns; ++i) global_index[d.subgroups[i].elements] = i;

    for (int h = 0; h < ns; ++h)
        for (int k = 0; k < ns; ++k) {
            if (!is_subgroup_of(d.subgroups[h], d.subgroups[k])) continue;
            // res: inclusion of fixed lattices
            AbHom res = ab_zero(d.values[k], d.values[h]);
            for (int j = 0; j < d.values[k].rank(); ++j) {
                auto coords = fixed_coords(fv[h], fixed_basis_vector(n, fv[k], j));
                for (int i = 0; i < d.values[h].rank(); ++i) res.matrix[i][j] = coords[i];
            }
            ab_normalize(res);
            d.res_map.emplace(std::make_pair(h, k), std::move(res));
            // ind: transfer over coset representatives
            AbHom ind = ab_zero(d.values[h], d.values[k]);
            auto reps = left_coset_reps(d.subgroups[k], d.subgroups[h]);
            for (int j = 0; j < d.values[h].rank(); ++j) {
                auto v = fixed_basis_vector(n, fv[h], j);
                std::vector<long long> t(n.rank(), 0);
                for (int r : reps) {
                    auto rv = mat_apply(action[r], v);
                    for (int i = 0; i < n.rank(); ++i) t[i] += rv[i];
                }
                for (int i = 0; i < n.rank(); ++i)
                    if (n.factors[i] > 0) t[i] = ((t[i] % n.factors[i]) + n.factors[i]) % n.factors[i];
                auto coords = fixed_coords(fv[k], t);
                for (int i = 0; i < d.values[k].rank(); ++i) ind.matrix[i][j] = coords[i];
            }
            ab_normalize(ind);
            d.ind_map.emplace(std::make_pair(h, k), std::move(ind));
        }
    for (int h = 0; h < ns; ++h)
        for (int x = 0; x < g.order; ++x) {
            int hg = global_index.at(conjugate_subgroup(d.subgroups[h], x).elements);
            AbHom con = ab_zero(d.values[h], d.values[hg]);
            for (int j = 0; j < d.values[h].rank(); ++j) {
                auto v = fixed_basis_vector(n, fv[h], j);
                auto t = mat_apply(action[g.inv(x)], v);
                for (int i = 0; i < n.rank(); ++i)
                    if (n.factors[i] > 0) t[i] = ((t[i] % n.factors[i]) + n.factors[i]) % n.factors[i];
                auto coords = fixed_coords(fv[hg], t);
                for (int i = 0; i < d.values[hg].rank(); ++i) con.matrix[i][j] = coords[i];
            }
            ab_normalize(con);
            d.con_map.emplace(std::make_pair(x, h), std::move(con));
        }
    return d;
}

}  // namespace bisets
