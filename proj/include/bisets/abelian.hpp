#pragma once

#include <optional>
#include <vector>

namespace bisets {

// Finitely generated abelian group in invariant-factor coordinates; factor 0
// is an infinite cyclic summand. Elements are integer vectors with coordinate
// i reduced mod factors[i] when that is positive.
struct FgAbelianGroup {
    std::vector<long long> factors;

    int rank() const { return static_cast<int>(factors.size()); }
    bool operator==(const FgAbelianGroup&) const = default;
};

using IntMatrix = std::vector<std::vector<long long>>;

// Homomorphism as an integer matrix (codomain rank x domain rank); equality is
// entrywise congruence mod the codomain factors.
struct AbHom {
    FgAbelianGroup domain, codomain;
    IntMatrix matrix;
};

AbHom ab_identity(const FgAbelianGroup& g);
AbHom ab_zero(const FgAbelianGroup& dom, const FgAbelianGroup& cod);
void ab_normalize(AbHom& f);  // reduce row i mod codomain.factors[i]
bool ab_well_defined(const AbHom& f);
AbHom ab_compose(const AbHom& second, const AbHom& first);
AbHom ab_add(const AbHom& a, const AbHom& b);
AbHom ab_scale(const AbHom& a, long long c);
bool ab_equal(const AbHom& a, const AbHom& b);
std::vector<long long> ab_apply(const AbHom& f, const std::vector<long long>& v);
FgAbelianGroup direct_sum(const std::vector<FgAbelianGroup>& parts);
// Block matrix between direct sums; blocks[i][j] : parts_dom[j] -> parts_cod[i].
AbHom assemble_blocks(const std::vector<FgAbelianGroup>& parts_dom,
                      const std::vector<FgAbelianGroup>& parts_cod,
                      const std::vector<std::vector<AbHom>>& blocks);

// ---- exact integer linear algebra ----

IntMatrix identity_int_matrix(int n);
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
std::vector<long long> mat_apply(const IntMatrix& a, const std::vector<long long>& v);

// d = u * a * v with u, v unimodular; u_inv and v_inv are their inverses.
// Diagonal entries of d are non-negative and each divides the next.
struct SmithDecomposition {
    int rows = 0, cols = 0;
    IntMatrix d, u, v, u_inv, v_inv;
    int diag_rank() const;  // number of nonzero diagonal entries
};

SmithDecomposition smith_normal_form(IntMatrix a, int rows, int cols);

// Basis (as columns) of { x : a x = 0 }.
std::vector<std::vector<long long>> kernel_basis(const IntMatrix& a, int rows, int cols);
// Some integer solution of a y = b, if one exists.
std::optional<std::vector<long long>> solve_linear(const SmithDecomposition& s,
                                                   const std::vector<long long>& b);
// Basis (columns) of the lattice generated by the given columns.
std::vector<std::vector<long long>> lattice_basis(const IntMatrix& gens, int dim);

}  // namespace bisets
