#pragma once

#include <map>
#include <vector>

#include "bisets/biset.hpp"
#include "bisets/group.hpp"

namespace bisets {

// Element of Hom(H1, H2) in the Burnside category: an integer combination of
// canonical keys of indecomposable bifree (H2,H1)-bisets. The zero morphism is
// the empty term map (the class of the empty biset).
struct BisetMorphism {
    Subgroup source;  // H1
    Subgroup target;  // H2
    std::map<CanonicalKey, long long> terms;
};

BisetMorphism zero_morphism(const Subgroup& source, const Subgroup& target);
BisetMorphism identity_morphism(const Subgroup& h);
BisetMorphism morphism_from_rep(const StandardRep& rep, long long coeff = 1);
BisetMorphism hom_add(const BisetMorphism& a, const BisetMorphism& b);
BisetMorphism hom_scale(const BisetMorphism& a, long long c);
// Bilinear extension of the double coset formula; b: H2 -> H3, a: H1 -> H2.
BisetMorphism hom_compose(const BisetMorphism& b, const BisetMorphism& a);
BisetMorphism tau_morphism(const BisetMorphism& a);
bool morphism_equal(const BisetMorphism& a, const BisetMorphism& b);
// True iff every term is a conjugation biset.
bool is_in_B(const BisetMorphism& a);

// Morphism of the additive completion: a target x source matrix of morphisms
// between ordered tuples of subgroups.
struct MatrixMorphism {
    std::vector<Subgroup> source_tuple;
    std::vector<Subgroup> target_tuple;
    std::vector<std::vector<BisetMorphism>> entries;  // [target i][source j]
};

MatrixMorphism zero_matrix(const std::vector<Subgroup>& source_tuple,
                           const std::vector<Subgroup>& target_tuple);
MatrixMorphism identity_matrix_morphism(const std::vector<Subgroup>& tuple);
MatrixMorphism matrix_compose(const MatrixMorphism& b, const MatrixMorphism& a);
// Conjugate transpose: tau on each entry, then transpose the grid.
MatrixMorphism tau_matrix(const MatrixMorphism& m);
bool matrix_equal(const MatrixMorphism& a, const MatrixMorphism& b);
bool matrix_in_B(const MatrixMorphism& m);

// Finite pointed G-set recorded orbitwise: orbit i is G/H_i for the stabilizer
// H_i of its chosen base point. The empty list is the empty G-set.
struct PointedGSet {
    std::vector<Subgroup> orbits;
};

// G-map between pointed G-sets: orbit i of the source lands in orbit
// orbit_map[i] of the target, with base point sent to witness[i] * base point.
// Witnesses are normalized to the minimal element of their coset.
struct GMap {
    PointedGSet source, target;
    std::vector<int> orbit_map;
    std::vector<int> witnesses;
};

GMap make_gmap(PointedGSet source, PointedGSet target, std::vector<int> orbit_map,
               std::vector<int> witnesses);
GMap single_orbit_gmap(const Subgroup& h, const Subgroup& k, int witness);
GMap identity_gmap(const PointedGSet& s);
GMap compose_gmaps(const GMap& second, const GMap& first);
bool gmap_equal(const GMap& a, const GMap& b);

// Explicit finite G-set: action[g][x] is g * x.
struct GSetTable {
    const FiniteGroup* group = nullptr;
    int size = 0;
    std::vector<std::vector<int>> action;
};

void validate_gset(const GSetTable& x);
GSetTable coset_table(const Subgroup& h);  // G/H, points ordered by minimal coset element
GSetTable gset_disjoint_union(const GSetTable& a, const GSetTable& b);

struct PointedDecomposition {
    PointedGSet pointed;
    std::vector<int> basepoints;  // minimal point of each orbit, ascending
    std::vector<int> orbit_of;    // point -> orbit index
};

// Orbits ordered by minimal point index, so disjoint unions decompose
// concatenatively.
PointedDecomposition decompose_pointed(const GSetTable& x);

// Covariant functor into the conjugation subcategory: a G-map G/H -> G/K with
// witness g goes to the key of [H^g, c_{g^-1}, H] over (K, H); matrix entries
// follow the orbit map. The contravariant version is its conjugate transpose.
MatrixMorphism functor_j_lower(const GMap& f);
MatrixMorphism functor_j_upper(const GMap& f);

// Pullback of two single-orbit maps psi: G/H1 -> G/K and phi: G/H2 -> G/K,
// computed by reducing to the subgroup case along the conjugation
// isomorphisms given by the witnesses. Orbits are indexed by double cosets of
// K; proj1 and proj2 are the projections to G/H1 and G/H2.
struct PullbackResult {
    PointedGSet object;
    GMap proj1;
    GMap proj2;
};

PullbackResult pullback(const GMap& psi, const GMap& phi);

// All G-maps G/H -> G/K, one per valid coset witness, witnesses ascending.
std::vector<GMap> enumerate_orbit_maps(const Subgroup& h, const Subgroup& k);

}  // namespace bisets
