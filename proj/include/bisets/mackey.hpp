#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bisets/abelian.hpp"
#include "bisets/category.hpp"

namespace bisets {

// Mackey-functor data over a finite group: one f.g. abelian group per
// subgroup plus restriction, induction and conjugation generator maps. The
// conjugation convention is c_g(h) = g^-1 h g, with con(g, H) : M(H) -> M(H^g)
// covariant over it. All map tables are complete: res/ind for every nested
// pair, con for every (g, H).
struct MackeyData {
    const FiniteGroup* group = nullptr;
    std::vector<Subgroup> subgroups;  // enumerate_subgroups order
    std::vector<FgAbelianGroup> values;
    std::map<std::pair<int, int>, AbHom> res_map;  // (h, k), H <= K : M(K) -> M(H)
    std::map<std::pair<int, int>, AbHom> ind_map;  // (h, k), H <= K : M(H) -> M(K)
    std::map<std::pair<int, int>, AbHom> con_map;  // (g, h) : M(H) -> M(H^g)

    int index_of(const std::vector<int>& elements) const;
    int index_of(const Subgroup& h) const { return index_of(h.elements); }
    const AbHom& res(int h, int k) const;
    const AbHom& ind(int h, int k) const;
    const AbHom& con(int g, int h) const;
};

struct CheckFailure {
    std::string axiom;
    std::string instance;
    std::string left, right;
};

struct CheckReport {
    bool pass = true;
    std::vector<CheckFailure> failures;
};

// Exhaustive check of the structural invariants: res/ind transitivity and
// identity, con functoriality, con(h, H) = id for h in H, and compatibility
// of con with res and ind along conjugated inclusions.
CheckReport validate_structure(const MackeyData& d);

// Mackey axiom in generator form: for all H1, H2 <= K,
//   res^K_H2 . ind^K_H1 = sum over x in H2\K/H1 of
//   ind^{H2}_{H2 n H1^{x^-1}} . con(x^-1, H1 n H2^x) . res^{H1}_{H1 n H2^x},
// plus sampled pullback squares with non-trivial witnesses.
CheckReport check_M1(const MackeyData& d);

// Additivity: inclusion/projection blocks of disjoint unions compose to
// identity matrices on sampled tuples.
CheckReport check_M2(const MackeyData& d);

// con(z, H) = id for every z centralizing H, and equality of induced maps for
// orbit-category morphisms with the same conjugation class.
CheckReport check_conjugation_invariance(const MackeyData& d);

// Covariant/contravariant maps induced by a G-map G/H -> G/K with witness g:
// covariant = ind^K_{H^g} . con(g, H), contravariant = con(g^-1, H^g) . res^K_{H^g}.
AbHom covariant(const MackeyData& d, const Subgroup& h, const Subgroup& k, int witness);
AbHom contravariant(const MackeyData& d, const Subgroup& h, const Subgroup& k, int witness);

FgAbelianGroup mackey_value(const MackeyData& d, const PointedGSet& s);
AbHom covariant_matrix(const MackeyData& d, const GMap& f);      // M(source) -> M(target)
AbHom contravariant_matrix(const MackeyData& d, const GMap& f);  // M(target) -> M(source)

// The additive functor of the factorization theorem: on a conjugation key
// [L, c_g, K] over (H2, H1) it is ind^{H2}_L . con(g^-1, K) . res^{H1}_K,
// independent of the realizing element and of the base point.
struct FactorFunctor {
    const MackeyData* data = nullptr;
    std::map<CanonicalKey, AbHom> table;
    std::map<std::pair<int, int>, std::vector<CanonicalKey>> keys_by_pair;  // (h2, h1)

    const AbHom& key_value(const CanonicalKey& key) const;  // throws on non-conjugation keys
    AbHom apply(const BisetMorphism& m) const;
    AbHom apply_matrix(const MatrixMorphism& m) const;
};

struct BuildFResult {
    bool ok = false;
    FactorFunctor functor;
    CheckReport refusal;  // conjugation-invariance counterexamples when !ok
};

// Refuses data that is not conjugation invariant; otherwise tabulates F on
// every conjugation key over every ordered subgroup pair, asserting both
// realizing-element and base-point independence along the way.
BuildFResult build_F(const MackeyData& d);

// F(b . a) = F(b) . F(a) over all composable pairs of conjugation keys.
CheckReport verify_functoriality(const FactorFunctor& f, const MackeyData& d);

// F applied to the functor images of orbit maps agrees with the covariant and
// contravariant maps of the input data.
CheckReport check_factorization_agreement(const FactorFunctor& f, const MackeyData& d);

// Full Mackey axiom for the composite functor given by the matrix extension
// of F over pullback squares of transitive G-sets (all witness pairs).
CheckReport check_Fj_mackey(const FactorFunctor& f, const MackeyData& d);

// Burnside-ring functor: M(H) is free abelian on H-conjugacy classes of
// subgroups of H with the classical res/ind/con on transitive H-sets.
MackeyData burnside_example(const FiniteGroup& g);

// Fixed points of an integer representation: M(H) = N^H with inclusion
// restrictions, transfer inductions and con(g, H) acting by g^-1. The action
// table maps each group element to a well-defined endomorphism matrix of N.
MackeyData fixed_point_example(const FiniteGroup& g, const FgAbelianGroup& n,
                               const std::vector<IntMatrix>& action);

}  // namespace bisets
