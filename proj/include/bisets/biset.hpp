#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bisets/group.hpp"

namespace bisets {

// Bifree (H2,H1)-biset in explicit form: a point set with commuting free left
// H2 and right H1 actions. The empty biset (size 0) is a valid value.
struct ExplicitBiset {
    Subgroup left_group;   // H2
    Subgroup right_group;  // H1
    int size = 0;
    std::vector<std::vector<int>> left_action;   // [H2 position][point]
    std::vector<std::vector<int>> right_action;  // [point][H1 position]

    int act_left(int h2, int x) const { return left_action[left_group.pos(h2)][x]; }
    int act_right(int x, int h1) const { return right_action[x][right_group.pos(h1)]; }
};

// Checks unital, associative and commuting actions plus bifreeness.
void validate_biset(const ExplicitBiset& x);

// [L, gamma, K] over the ambient pair (H2, H1): the indecomposable bifree
// biset modeled on the coset space of H2 x H1^op by the graph of gamma.
struct StandardRep {
    Subgroup H2, H1;
    Subgroup L, K;   // L <= H2, K <= H1
    GroupHom gamma;  // isomorphism L -> K
};

void validate_rep(const StandardRep& rep);
StandardRep identity_rep(const Subgroup& h);
int rep_size(const StandardRep& rep);  // |H2| * |H1| / |L|
bool reps_equal(const StandardRep& a, const StandardRep& b);

// Totally ordered encoding of a standard representation's isomorphism class:
// the lexicographically minimal (L, K, gamma) over all base-point moves.
struct CanonicalKey {
    std::vector<int> H2, H1, L, K;
    std::vector<std::pair<int, int>> gamma;

    bool operator==(const CanonicalKey&) const = default;
    bool operator<(const CanonicalKey& o) const;
};

struct RealizedBiset {
    ExplicitBiset biset;
    int basepoint = 0;                // point index of [e|e]
    std::vector<int> point_of_pair;   // (H2 pos * |H1| + H1 pos) -> point index
};

ExplicitBiset realize(const StandardRep& rep);
RealizedBiset realize_with_points(const StandardRep& rep);

// Standard representation of the component of `point`: L = {h2 | h2 x in x H1}
// with gamma(h2) the unique h1 satisfying h2 x = x h1.
StandardRep standard_rep_at(const ExplicitBiset& x, int point);

// One entry per (H2 x H1^op)-orbit, ordered by minimal point index; the second
// member of each pair is that base point.
std::vector<std::pair<StandardRep, int>> components(const ExplicitBiset& x);

// Standard representation of the same biset at the moved base point h2*x*h1:
// [L^{h2^-1}, h1^-1 gamma(h2^-1 . h2) h1, K^{h1}].
StandardRep change_base_point(const StandardRep& rep, int h2, int h1);

CanonicalKey canonical_key(const StandardRep& rep);
StandardRep rep_of_key(const CanonicalKey& key, const FiniteGroup& g);

// tau: [L, gamma, K] -> [K, gamma^-1, L] with the ambient pair swapped.
StandardRep transpose(const StandardRep& rep);

// Mackey double coset formula: one output component per double coset
// K_2 \ H2 / L_1 of the middle group, with
//   [gamma2^-1(K_2 n L_1^{h^-1}), gamma1 . c_h . gamma2, gamma1(K_2^h n L_1)].
std::vector<StandardRep> compose_formula(const StandardRep& rep2, const StandardRep& rep1);
// Same with caller-chosen double coset representatives (one per coset).
std::vector<StandardRep> compose_formula_at(const StandardRep& rep2, const StandardRep& rep1,
                                            const std::vector<int>& middle_reps);

// Balanced product X2 x_{H2} X1: the quotient of the product by
// (x2 h, x1) ~ (x2, h x1). Independent oracle for compose_formula.
ExplicitBiset compose_bruteforce(const ExplicitBiset& x2, const ExplicitBiset& x1);

ExplicitBiset disjoint_union(const ExplicitBiset& a, const ExplicitBiset& b);
ExplicitBiset empty_biset(const Subgroup& h2, const Subgroup& h1);

struct BisetClass {
    bool restriction = false;  // L = H2
    bool induction = false;    // K = H1
    bool isomorphism = false;
    bool conjugation = false;  // gamma realized by conjugation in the parent group
};
BisetClass classify(const StandardRep& rep);

// X ~ ind . iso . res with ind = [L,id,L] over (H2,L), iso = [L,gamma,K] over
// (L,K), res = [K,id,K] over (K,H1).
struct Factorization {
    StandardRep ind, iso, res;
    std::optional<int> realizing;  // minimal conjugating element for iso, when one exists
};
Factorization factorize(const StandardRep& rep);

// All indecomposable bifree standard representations over (h2, h1); the
// subgroup list is the parent group's full lattice.
std::vector<StandardRep> enumerate_indecomposables(const Subgroup& h2, const Subgroup& h1,
                                                   const std::vector<Subgroup>& all_subgroups);
std::vector<StandardRep> enumerate_conjugation_reps(const Subgroup& h2, const Subgroup& h1,
                                                    const std::vector<Subgroup>& all_subgroups);
std::vector<CanonicalKey> conjugation_keys(const Subgroup& h2, const Subgroup& h1,
                                           const std::vector<Subgroup>& all_subgroups);

}  // namespace bisets
