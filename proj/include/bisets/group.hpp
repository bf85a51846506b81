#pragma once

#include <optional>
#include <string>
#include <vector>

namespace bisets {

// Finite group given by a Cayley table over dense element indices 0..order-1.
// Immutable after construction; all other types hold non-owning pointers to it.
struct FiniteGroup {
    int order = 0;
    std::vector<std::vector<int>> table;  // table[a][b] = a*b
    int identity = 0;
    std::vector<int> inverse;
    std::string label;

    int mul(int a, int b) const { return table[a][b]; }
    int inv(int a) const { return inverse[a]; }
    // c_g(h) = g^{-1} h g
    int conj(int h, int g) const { return mul(mul(inv(g), h), g); }
    int element_order(int a) const;
};

// Throws std::invalid_argument if the data is not a group (Latin square,
// identity, inverses, associativity via Light's test on a generating set).
void validate_group(const FiniteGroup& g);

struct GroupSpec {
    enum class Kind { table, perm, cyclic, dihedral, symmetric, quaternion, klein4, product };
    Kind kind = Kind::cyclic;
    int n = 0;                                 // cyclic / dihedral / symmetric
    int degree = 0;                            // perm
    std::vector<std::vector<int>> table;       // table
    std::vector<std::vector<int>> generators;  // perm: images of 0..degree-1
    std::vector<GroupSpec> factors;            // product
};

// Element orderings are fixed per kind: tables as given; permutation groups by
// breadth-first closure from the identity with generators applied on the right
// in listed order; catalog groups by the enumerations in the make_* builders;
// products in mixed radix with the first factor most significant.
FiniteGroup build_group(const GroupSpec& spec, int order_cap = 10080);

FiniteGroup make_cyclic(int n);
FiniteGroup make_dihedral(int n);  // order 2n: 0..n-1 rotations r^i, n..2n-1 reflections r^i s
FiniteGroup make_symmetric(int n);  // elements are image tuples in lexicographic order
FiniteGroup make_quaternion();      // 0:+1 1:+i 2:+j 3:+k 4:-1 5:-i 6:-j 7:-k
FiniteGroup make_klein4();          // xor table on 0..3
FiniteGroup make_from_table(std::vector<std::vector<int>> table, std::string label = "table");
FiniteGroup make_permutation_group(int degree, const std::vector<std::vector<int>>& generators,
                                   int order_cap = 10080);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// Canonical form: strictly ascending element list. Two subgroups are equal iff
// their element lists (and parent group) are equal.
struct Subgroup {
    const FiniteGroup* group = nullptr;
    std::vector<int> elements;
    std::vector<int> position;  // element -> index into elements, -1 if absent

    int size() const { return static_cast<int>(elements.size()); }
    bool contains(int e) const { return position[e] >= 0; }
    int pos(int e) const { return position[e]; }
    bool operator==(const Subgroup& o) const {
        return group == o.group && elements == o.elements;
    }
    bool operator!=(const Subgroup& o) const { return !(*this == o); }
};

Subgroup subgroup_from_elements(const FiniteGroup& g, std::vector<int> elements);
Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<int>& generators);
Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup full_subgroup(const FiniteGroup& g);
bool is_subgroup_of(const Subgroup& h, const Subgroup& k);
Subgroup intersect(const Subgroup& a, const Subgroup& b);

// Every subgroup exactly once, sorted by (order, element list).
std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g);

// H^g = g^{-1} H g
Subgroup conjugate_subgroup(const Subgroup& h, int g);
Subgroup centralizer(const FiniteGroup& g, const Subgroup& h);

// Representatives of K/H for H <= K, minimal element per coset, ascending.
std::vector<int> left_coset_reps(const Subgroup& k, const Subgroup& h);
// Minimal element of the coset gK.
int normalize_coset_rep(int g, const Subgroup& k);

struct GroupHom {
    Subgroup domain;
    Subgroup codomain;
    std::vector<int> images;  // by domain position

    int apply(int e) const { return images[domain.pos(e)]; }
};

GroupHom identity_hom(const Subgroup& h);
GroupHom conjugation_hom(const Subgroup& h, int g);  // c_g : H -> H^g
GroupHom inverse_hom(const GroupHom& f);
GroupHom compose_homs(const GroupHom& second, const GroupHom& first);
bool is_multiplicative(const GroupHom& f);
bool is_isomorphism_onto(const GroupHom& f);
bool homs_equal(const GroupHom& a, const GroupHom& b);
std::vector<GroupHom> enumerate_isomorphisms(const Subgroup& from, const Subgroup& to);

// Minimal g with g^{-1} h g = gamma(h) for all h in the domain, if one exists.
// The set of valid g is a coset of the centralizer of the domain.
std::optional<int> conjugation_realizing(const GroupHom& gamma);

struct DoubleCosetDecomposition {
    Subgroup ambient, left, right;
    std::vector<int> representatives;  // minimal element per coset, ascending
    std::vector<int> coset_of;         // ambient position -> index into representatives
};

DoubleCosetDecomposition double_cosets(const Subgroup& ambient, const Subgroup& left,
                                       const Subgroup& right);

}  // namespace bisets
