#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "bisets/biset.hpp"
#include "oracles.hpp"
#include "testgroups.hpp"

using namespace bisets;

namespace {

std::multiset<CanonicalKey> key_multiset(const std::vector<StandardRep>& reps) {
    std::multiset<CanonicalKey> out;
    for (const auto& r : reps) out.insert(canonical_key(r));
    return out;
}

std::multiset<CanonicalKey> component_keys(const ExplicitBiset& x) {
    std::multiset<CanonicalKey> out;
    for (const auto& [rep, bp] : components(x)) out.insert(canonical_key(rep));
    return out;
}

// The right-multiplication biset _{H2}(G)_{H1} for subgroups acting on all of G.
ExplicitBiset group_as_biset(const Subgroup& h2, const Subgroup& h1) {
    const FiniteGroup& g = *h2.group;
    ExplicitBiset x;
    x.left_group = h2;
    x.right_group = h1;
    x.size = g.order;
    x.left_action.assign(h2.size(), std::vector<int>(g.order));
    x.right_action.assign(g.order, std::vector<int>(h1.size()));
    for (int q = 0; q < h2.size(); ++q)
        for (int p = 0; p < g.order; ++p) x.left_action[q][p] = g.mul(h2.elements[q], p);
    for (int p = 0; p < g.order; ++p)
        for (int q = 0; q < h1.size(); ++q) x.right_action[p][q] = g.mul(p, h1.elements[q]);
    return x;
}

}  // namespace

TEST_CASE("realize sizes and validity") {
    FiniteGroup s3 = make_symmetric(3);
    Subgroup full = full_subgroup(s3);
    Subgroup c2 = subgroup_generated(s3, {1});
    Subgroup triv = trivial_subgroup(s3);

    ExplicitBiset id6 = realize(identity_rep(full));
    CHECK(id6.size == 6);
    CHECK_NOTHROW(validate_biset(id6));

    StandardRep free_rep{full, full, triv, triv, identity_hom(triv)};
    ExplicitBiset fr = realize(free_rep);
    CHECK(fr.size == 36);
    CHECK_NOTHROW(validate_biset(fr));

    StandardRep r{full, full, c2, c2, identity_hom(c2)};
    ExplicitBiset x = realize(r);
    CHECK(x.size == 18);
    CHECK_NOTHROW(validate_biset(x));
    CHECK(rep_size(r) == 18);
}

TEST_CASE("standard_rep_at recovers the representation at the base point") {
    FiniteGroup s3 = make_symmetric(3);
    Subgroup full = full_subgroup(s3);
    Subgroup c2 = subgroup_generated(s3, {1});

    // identity biset at the identity coset
    auto rid = realize_with_points(identity_rep(full));
    StandardRep back = standard_rep_at(rid.biset, rid.basepoint);
    CHECK(reps_equal(back, identity_rep(full)));

    // round-trip for an assortment of representations
    auto subs = enumerate_subgroups(s3);
    for (const auto& rep : enumerate_indecomposables(full, c2, subs)) {
        auto rz = realize_with_points(rep);
        CHECK(reps_equal(standard_rep_at(rz.biset, rz.basepoint), rep));
    }

    // the group itself as an (S3, C2)-biset: standard rep at e is [C2, id, C2]
    ExplicitBiset whole = group_as_biset(full, c2);
    StandardRep at_e = standard_rep_at(whole, s3.identity);
    CHECK(at_e.L == c2);
    CHECK(at_e.K == c2);
    CHECK(at_e.gamma.images == c2.elements);
}

TEST_CASE("components") {
    FiniteGroup s3 = make_symmetric(3);
    Subgroup full = full_subgroup(s3);
    Subgroup c2 = subgroup_generated(s3, {1});

    StandardRep r{full, c2, c2, c2, identity_hom(c2)};
    ExplicitBiset x = realize(r);
    CHECK(components(x).size() == 1);

    ExplicitBiset two = disjoint_union(x, x);
    auto comps = components(two);
    CHECK(comps.size() == 2);
    CHECK(comps[0].second < comps[1].second);
    int total = 0;
    for (const auto& [rep, bp] : comps) total += rep_size(rep);
    CHECK(total == two.size);

    // _{C2}(S3)_{C2} splits into [C2,id,C2] and [{e},id,{e}]
    ExplicitBiset mid = group_as_biset(c2, c2);
    auto keys = component_keys(mid);
    CHECK(keys.size() == 2);
    Subgroup triv = trivial_subgroup(s3);
    std::multiset<CanonicalKey> expect{
        canonical_key(StandardRep{c2, c2, c2, c2, identity_hom(c2)}),
        canonical_key(StandardRep{c2, c2, triv, triv, identity_hom(triv)})};
    CHECK(keys == expect);
    CHECK(keys.size() == double_cosets(full, c2, c2).representatives.size());

    CHECK(components(empty_biset(c2, c2)).empty());
}

TEST_CASE("change_base_point against the realized oracle") {
    FiniteGroup s3 = make_symmetric(3);
    Subgroup full = full_subgroup(s3);
    Subgroup c2 = subgroup_generated(s3, {1});
    auto subs = enumerate_subgroups(s3);

    std::vector<StandardRep> reps;
    auto add = [&](std::vector<StandardRep> more) {
        for (auto& r : more) reps.push_back(std::move(r));
    };
    add(enumerate_indecomposables(full, full, subs));
    add(enumerate_indecomposables(full, c2, subs));

    for (const auto& rep : reps) {
        CHECK(reps_equal(change_base_point(rep, s3.identity, s3.identity), rep));
        auto rz = realize_with_points(rep);
        for (int h2 : rep.H2.elements) {
            for (int h1 : rep.H1.elements) {
                StandardRep moved = change_base_point(rep, h2, h1);
                int pt = rz.biset.act_right(rz.biset.act_left(h2, rz.basepoint), h1);
                CHECK(reps_equal(moved, standard_rep_at(rz.biset, pt)));
            }
        }
    }

    // moving inside L twists gamma by an inner map
    StandardRep r{full, full, c2, c2, identity_hom(c2)};
    StandardRep twisted = change_base_point(r, 1, s3.identity);  // 1 lies in L
    CHECK(twisted.L == c2);
    CHECK(twisted.K == c2);

    // moving by a 3-cycle conjugates L
    StandardRep moved = change_base_point(r, 3, s3.identity);
    CHECK(moved.L == conjugate_subgroup(c2, s3.inv(3)));

    CHECK_THROWS_AS(change_base_point(StandardRep{c2, c2, c2, c2, identity_hom(c2)}, 3, 0),
                    std::invalid_argument);
}

TEST_CASE("canonical_key is a complete isomorphism invariant") {
    FiniteGroup s3 = make_symmetric(3);
    Subgroup full = full_subgroup(s3);
    auto subs = enumerate_subgroups(s3);

    auto reps = enumerate_indecomposables(full, full, subs);
    // invariance under base-point moves
    for (const auto& rep : reps) {
        CanonicalKey key = canonical_key(rep);
        for (int h2 : rep.H2.elements)
            for (int h1 : rep.H1.elements)
                CHECK(canonical_key(change_base_point(rep, h2, h1)) == key);
    }
    // sizes distinguish
    Subgroup triv = trivial_subgroup(s3);
    CHECK(canonical_key(identity_rep(full)) !=
          canonical_key(StandardRep{full, full, triv, triv, identity_hom(triv)}));

    // keys agree exactly when realized bisets are isomorphic (backtracking oracle)
    for (size_t i = 0; i < reps.size(); ++i)
        for (size_t j = i; j < reps.size(); ++j) {
            bool same_key = canonical_key(reps[i]) == canonical_key(reps[j]);
            bool iso = oracles::bisets_isomorphic(realize(reps[i]), realize(reps[j]));
            CHECK(same_key == iso);
        }
}

TEST_CASE("transpose") {
    FiniteGroup s3 = make_symmetric(3);
    Subgroup full = full_subgroup(s3);
    Subgroup c2a = subgroup_generated(s3, {1});
    Subgroup c2b = subgroup_generated(s3, {2});
    auto subs = enumerate_subgroups(s3);

    CHECK(reps_equal(transpose(identity_rep(full)), identity_rep(full)));

    GroupHom gamma{c2a, c2b, {0, 2}};
    StandardRep r{full, full, c2a, c2b, gamma};
    StandardRep t = transpose(r);
    CHECK(t.L == c2b);
    CHECK(t.K == c2a);
    CHECK(reps_equal(transpose(t), r));

    // realize(transpose) is the explicit transpose, up to isomorphism
    for (const auto& rep : enumerate_indecomposables(full, c2a, subs)) {
        ExplicitBiset direct = oracles::explicit_transpose(realize(rep));
        CHECK(oracles::bisets_isomorphic(realize(transpose(rep)), direct));
    }
}

TEST_CASE("compose_formula examples") {
    FiniteGroup s3 = make_symmetric(3);
    Subgroup full = full_subgroup(s3);
    Subgroup c2 = subgroup_generated(s3, {1});
    Subgroup triv = trivial_subgroup(s3);
    auto subs = enumerate_subgroups(s3);

    // identity acts as a unit
    for (const auto& rep : enumerate_indecomposables(full, c2, subs)) {
        auto left = compose_formula(identity_rep(full), rep);
        REQUIRE(left.size() == 1);
        CHECK(canonical_key(left[0]) == canonical_key(rep));
        auto right = compose_formula(rep, identity_rep(c2));
        REQUIRE(right.size() == 1);
        CHECK(canonical_key(right[0]) == canonical_key(rep));
    }

    // restriction then induction along C2 <= S3: two components
    StandardRep res_rep{c2, full, c2, c2, identity_hom(c2)};
    StandardRep ind_rep{full, c2, c2, c2, identity_hom(c2)};
    auto comps = compose_formula(res_rep, ind_rep);
    auto keys = key_multiset(comps);
    std::multiset<CanonicalKey> expect{
        canonical_key(StandardRep{c2, c2, c2, c2, identity_hom(c2)}),
        canonical_key(StandardRep{c2, c2, triv, triv, identity_hom(triv)})};
    CHECK(keys == expect);

    // induction after restriction composes to a single component with
    // gamma1 . gamma2
    StandardRep restr{c2, full, c2, c2, identity_hom(c2)};   // restriction: L = ambient H2
    StandardRep induc{full, c2, c2, c2, identity_hom(c2)};   // induction: K = ambient H1
    auto one = compose_formula(induc, restr);
    REQUIRE(one.size() == 1);
    CHECK(one[0].L == c2);
    CHECK(one[0].K == c2);

    CHECK_THROWS_AS(compose_formula(res_rep, res_rep), std::invalid_argument);
}

TEST_CASE("compose_bruteforce basics") {
    FiniteGroup s3 = make_symmetric(3);
    Subgroup full = full_subgroup(s3);
    Subgroup c2 = subgroup_generated(s3, {1});

    StandardRep r{full, c2, c2, c2, identity_hom(c2)};
    ExplicitBiset x = realize(r);
    ExplicitBiset ident = realize(identity_rep(c2));
    ExplicitBiset comp = compose_bruteforce(x, ident);
    CHECK(oracles::bisets_isomorphic(comp, x));
    CHECK(comp.size == x.size * ident.size / c2.size());

    ExplicitBiset nothing = compose_bruteforce(x, empty_biset(c2, c2));
    CHECK(nothing.size == 0);
    CHECK(nothing.left_group == full);
    CHECK(nothing.right_group == c2);
}

TEST_CASE("formula equals brute force exhaustively over S3") {
    FiniteGroup s3 = make_symmetric(3);
    auto subs = enumerate_subgroups(s3);
    int checked = 0;
    for (const auto& h3 : subs)
        for (const auto& h2 : subs)
            for (const auto& h1 : subs) {
                auto reps2 = enumerate_indecomposables(h3, h2, subs);
                auto reps1 = enumerate_indecomposables(h2, h1, subs);
                for (const auto& r2 : reps2)
                    for (const auto& r1 : reps1) {
                        auto formula = key_multiset(compose_formula(r2, r1));
                        auto brute =
                            component_keys(compose_bruteforce(realize(r2), realize(r1)));
                        REQUIRE(formula == brute);
                        ++checked;
                    }
            }
    CHECK(checked > 1000);
}

TEST_CASE("formula equals brute force, sampled at order 16") {
    FiniteGroup d8 = make_dihedral(8);
    auto subs = enumerate_subgroups(d8);
    std::mt19937 rng(1616);
    int done = 0;
    while (done < 150) {
        const Subgroup& h3 = subs[rng() % subs.size()];
        const Subgroup& h2 = subs[rng() % subs.size()];
        const Subgroup& h1 = subs[rng() % subs.size()];
        auto reps2 = enumerate_indecomposables(h3, h2, subs);
        auto reps1 = enumerate_indecomposables(h2, h1, subs);
        if (reps2.empty() || reps1.empty()) continue;
        const auto& r2 = reps2[rng() % reps2.size()];
        const auto& r1 = reps1[rng() % reps1.size()];
        REQUIRE(key_multiset(compose_formula(r2, r1)) ==
                component_keys(compose_bruteforce(realize(r2), realize(r1))));
        ++done;
    }
}

TEST_CASE("formula equals brute force on the largest S4 bisets") {
    FiniteGroup s4 = testgroups::make_s4();
    auto subs = enumerate_subgroups(s4);
    Subgroup full = full_subgroup(s4);
    Subgroup triv = trivial_subgroup(s4);
    Subgroup s3sub, d4sub;
    for (const auto& h : subs)
        if (h.size() == 6) {
            s3sub = h;
            break;
        }
    for (const auto& h : subs)
        if (h.size() == 8) {
            d4sub = h;
            break;
        }
    StandardRep big{full, full, triv, triv, identity_hom(triv)};      // 576 points
    StandardRep mid{full, full, d4sub, d4sub, identity_hom(d4sub)};   // 72 points
    StandardRep mid2{full, full, s3sub, s3sub, identity_hom(s3sub)};  // 96 points
    for (const auto& r2 : {big, mid, mid2})
        for (const auto& r1 : {big, mid, mid2})
            REQUIRE(key_multiset(compose_formula(r2, r1)) ==
                    component_keys(compose_bruteforce(realize(r2), realize(r1))));
}

TEST_CASE("representative independence of compose_formula") {
    FiniteGroup d4 = make_dihedral(4);
    auto subs = enumerate_subgroups(d4);
    std::mt19937 rng(12345);
    Subgroup full = full_subgroup(d4);
    auto reps2 = enumerate_indecomposables(full, full, subs);
    int trials = 0;
    for (size_t a = 0; a < reps2.size(); a += 7)
        for (size_t b = 0; b < reps2.size(); b += 5) {
            const auto& r2 = reps2[a];
            const auto& r1 = reps2[b];
            auto dc = double_cosets(r2.H1, r2.K, r1.L);
            std::vector<int> randomized;
            for (size_t c = 0; c < dc.representatives.size(); ++c) {
                std::vector<int> members;
                for (int x : r2.H1.elements)
                    if (dc.coset_of[r2.H1.pos(x)] == static_cast<int>(c)) members.push_back(x);
                randomized.push_back(members[rng() % members.size()]);
            }
            CHECK(key_multiset(compose_formula_at(r2, r1, randomized)) ==
                  key_multiset(compose_formula(r2, r1)));
            ++trials;
        }
    CHECK(trials > 20);
}

TEST_CASE("tau laws on compositions") {
    FiniteGroup s3 = make_symmetric(3);
    auto subs = enumerate_subgroups(s3);
    Subgroup full = full_subgroup(s3);
    Subgroup c2 = subgroup_generated(s3, {1});
    auto reps2 = enumerate_indecomposables(full, c2, subs);
    auto reps1 = enumerate_indecomposables(c2, full, subs);
    for (size_t a = 0; a < reps2.size(); ++a)
        for (size_t b = 0; b < reps1.size(); ++b) {
            std::multiset<CanonicalKey> lhs;
            for (const auto& comp : compose_formula(reps2[a], reps1[b]))
                lhs.insert(canonical_key(transpose(comp)));
            auto rhs =
                key_multiset(compose_formula(transpose(reps1[b]), transpose(reps2[a])));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("size bookkeeping") {
    FiniteGroup d4 = make_dihedral(4);
    auto subs = enumerate_subgroups(d4);
    Subgroup full = full_subgroup(d4);
    for (const auto& l : subs) {
        for (const auto& rep : enumerate_indecomposables(full, full, subs)) {
            if (rep.L != l) continue;
            CHECK(realize(rep).size == full.size() * full.size() / l.size());
            break;
        }
    }
    Subgroup c4 = subgroup_generated(d4, {1});
    StandardRep r2{full, c4, c4, c4, identity_hom(c4)};
    StandardRep r1{c4, full, c4, c4, identity_hom(c4)};
    ExplicitBiset x2 = realize(r2), x1 = realize(r1);
    CHECK(compose_bruteforce(x2, x1).size == x2.size * x1.size / c4.size());
}

TEST_CASE("classify") {
    FiniteGroup s3 = make_symmetric(3);
    FiniteGroup v4 = make_klein4();
    Subgroup fulls3 = full_subgroup(s3);
    Subgroup c2 = subgroup_generated(s3, {1});

    BisetClass iso = classify(identity_rep(fulls3));
    CHECK(iso.restriction);
    CHECK(iso.induction);
    CHECK(iso.isomorphism);
    CHECK(iso.conjugation);

    // standard induction with L proper: induction but not restriction
    StandardRep ind{fulls3, c2, c2, c2, identity_hom(c2)};
    BisetClass ci = classify(ind);
    CHECK(ci.induction);
    CHECK(!ci.restriction);
    CHECK(ci.conjugation);

    StandardRep res{c2, fulls3, c2, c2, identity_hom(c2)};
    BisetClass cr = classify(res);
    CHECK(cr.restriction);
    CHECK(!cr.induction);

    // Klein four swap is an isomorphism but not a conjugation
    Subgroup a = subgroup_generated(v4, {1});
    Subgroup b = subgroup_generated(v4, {2});
    StandardRep swap{full_subgroup(v4), full_subgroup(v4), a, b, GroupHom{a, b, {0, 2}}};
    BisetClass cs = classify(swap);
    CHECK(!cs.conjugation);
    CHECK(!cs.restriction);

    // restriction composed with restriction stays a restriction; same for inductions
    auto subs = enumerate_subgroups(s3);
    for (const auto& h : subs) {
        StandardRep res2{h, fulls3, h, h, identity_hom(h)};
        for (const auto& l : subs) {
            if (!is_subgroup_of(l, h)) continue;
            StandardRep res1{l, h, l, l, identity_hom(l)};
            for (const auto& comp : compose_formula(res1, res2)) {
                CHECK(classify(comp).restriction);
            }
            StandardRep ind1{h, l, l, l, identity_hom(l)};
            StandardRep ind2{fulls3, h, h, h, identity_hom(h)};
            for (const auto& comp : compose_formula(ind2, ind1)) {
                CHECK(classify(comp).induction);
            }
        }
    }
}

TEST_CASE("conjugation closure under composition") {
    FiniteGroup d4 = make_dihedral(4);
    auto subs = enumerate_subgroups(d4);
    Subgroup full = full_subgroup(d4);
    auto creps = enumerate_conjugation_reps(full, full, subs);
    for (size_t a = 0; a < creps.size(); a += 3)
        for (size_t b = 0; b < creps.size(); b += 3)
            for (const auto& comp : compose_formula(creps[a], creps[b]))
                CHECK(classify(comp).conjugation);
}

TEST_CASE("factorize") {
    FiniteGroup s3 = make_symmetric(3);
    Subgroup full = full_subgroup(s3);
    Subgroup c2a = subgroup_generated(s3, {1});
    Subgroup c2b = subgroup_generated(s3, {2});
    auto subs = enumerate_subgroups(s3);

    Factorization fid = factorize(identity_rep(full));
    CHECK(reps_equal(fid.ind, identity_rep(full)));
    CHECK(reps_equal(fid.iso, identity_rep(full)));
    CHECK(reps_equal(fid.res, identity_rep(full)));

    // a restriction factors with identity induction
    StandardRep res{c2a, full, c2a, c2a, identity_hom(c2a)};
    Factorization fr = factorize(res);
    CHECK(reps_equal(fr.ind, identity_rep(c2a)));

    // conjugation representation over S3
    GroupHom gamma{c2a, c2b, {0, 2}};
    StandardRep rep{full, full, c2a, c2b, gamma};
    Factorization f = factorize(rep);
    CHECK(f.ind.H2 == full);
    CHECK(f.ind.H1 == c2a);
    CHECK(f.iso.H2 == c2a);
    CHECK(f.iso.H1 == c2b);
    CHECK(f.res.H2 == c2b);
    CHECK(f.res.H1 == full);
    REQUIRE(f.realizing.has_value());
    CHECK(classify(f.ind).conjugation);
    CHECK(classify(f.res).conjugation);

    // recomposition returns exactly the original key, for every indecomposable
    for (const auto& r : enumerate_indecomposables(full, full, subs)) {
        Factorization fac = factorize(r);
        auto inner = compose_formula(fac.iso, fac.res);
        REQUIRE(inner.size() == 1);
        auto outer = compose_formula(fac.ind, inner[0]);
        REQUIRE(outer.size() == 1);
        CHECK(canonical_key(outer[0]) == canonical_key(r));
        // oracle: brute-force composition of the realized factors
        ExplicitBiset brute = compose_bruteforce(
            realize(fac.ind), compose_bruteforce(realize(fac.iso), realize(fac.res)));
        CHECK(component_keys(brute) == std::multiset<CanonicalKey>{canonical_key(r)});
    }
}

TEST_CASE("Grothendieck soundness: component keys determine bisets") {
    FiniteGroup s3 = make_symmetric(3);
    Subgroup full = full_subgroup(s3);
    Subgroup c2 = subgroup_generated(s3, {1});
    auto subs = enumerate_subgroups(s3);
    auto reps = enumerate_indecomposables(full, c2, subs);
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const auto& a1 = reps[rng() % reps.size()];
        const auto& a2 = reps[rng() % reps.size()];
        const auto& b1 = reps[rng() % reps.size()];
        const auto& b2 = reps[rng() % reps.size()];
        ExplicitBiset x = disjoint_union(realize(a1), realize(a2));
        ExplicitBiset y = disjoint_union(realize(b1), realize(b2));
        if (x.size > 72 || y.size > 72) continue;
        CHECK((component_keys(x) == component_keys(y)) == oracles::bisets_isomorphic(x, y));
    }
}
