#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "bisets/abelian.hpp"
#include "oracles.hpp"

using namespace bisets;

namespace {

IntMatrix random_matrix(std::mt19937& rng, int rows, int cols, int span) {
    std::uniform_int_distribution<long long> dist(-span, span);
    IntMatrix m(rows, std::vector<long long>(cols));
    for (auto& row : m)
        for (auto& v : row) v = dist(rng);
    return m;
}

long long det3(const IntMatrix& m, int n) {
    // expansion by minors, n <= 3 is enough for the unimodularity spot checks
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    long long d = 0;
    for (int c = 0; c < 3; ++c) {
        IntMatrix minor(2, std::vector<long long>(2));
        for (int i = 1; i < 3; ++i) {
            int cc = 0;
            for (int j = 0; j < 3; ++j) {
                if (j == c) continue;
                minor[i - 1][cc++] = m[i][j];
            }
        }
        d += (c % 2 ? -1 : 1) * m[0][c] * det3(minor, 2);
    }
    return d;
}

}  // namespace

TEST_CASE("smith normal form on known matrices") {
    SmithDecomposition s = smith_normal_form({{2, 4}, {6, 8}}, 2, 2);
    CHECK(s.d[0][0] == 2);
    CHECK(s.d[1][1] == 4);
    CHECK(s.d[0][1] == 0);
    CHECK(s.d[1][0] == 0);

    SmithDecomposition z = smith_normal_form({{0, 0}, {0, 0}}, 2, 2);
    CHECK(z.diag_rank() == 0);

    SmithDecomposition one = smith_normal_form({{3}}, 1, 1);
    CHECK(one.d[0][0] == 3);
}

TEST_CASE("smith normal form properties on random matrices") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        int rows = 1 + rng() % 3, cols = 1 + rng() % 3;
        IntMatrix a = random_matrix(rng, rows, cols, 9);
        SmithDecomposition s = smith_normal_form(a, rows, cols);
        CHECK(mat_mul(mat_mul(s.u, a), s.v) == s.d);
        CHECK(mat_mul(s.u, s.u_inv) == identity_int_matrix(rows));
        CHECK(mat_mul(s.v, s.v_inv) == identity_int_matrix(cols));
        long long du = det3(s.u, rows), dv = det3(s.v, cols);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        for (int i = 0; i + 1 < std::min(rows, cols); ++i) {
            CHECK(s.d[i][i] >= 0);
            if (s.d[i][i] != 0 && s.d[i + 1][i + 1] != 0)
                CHECK(s.d[i + 1][i + 1] % s.d[i][i] == 0);
            if (s.d[i][i] == 0) CHECK(s.d[i + 1][i + 1] == 0);
        }
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (i != j) CHECK(s.d[i][j] == 0);
    }
}

TEST_CASE("kernel and solve") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 200; ++trial) {
        int rows = 1 + rng() % 3, cols = 1 + rng() % 4;
        IntMatrix a = random_matrix(rng, rows, cols, 6);
        auto kernel = kernel_basis(a, rows, cols);
        for (const auto& k : kernel) {
            auto im = mat_apply(a, k);
            for (long long v : im) CHECK(v == 0);
        }
        // a * x = a * x0 always solvable with x0 recovered up to kernel
        std::vector<long long> x0(cols);
        for (auto& v : x0) v = static_cast<long long>(rng() % 7) - 3;
        SmithDecomposition s = smith_normal_form(a, rows, cols);
        auto sol = solve_linear(s, mat_apply(a, x0));
        REQUIRE(sol.has_value());
        auto residual = mat_apply(a, *sol);
        auto target = mat_apply(a, x0);
        CHECK(residual == target);
    }
    // unsolvable system
    SmithDecomposition s = smith_normal_form({{2}}, 1, 1);
    CHECK(!solve_linear(s, {3}).has_value());
}

TEST_CASE("lattice basis") {
    // columns (2,0) and (0,2) and (1,1): lattice has index 2 in Z^2
    IntMatrix gens = {{2, 0, 1}, {0, 2, 1}};
    auto basis = lattice_basis(gens, 2);
    REQUIRE(basis.size() == 2);
    long long det = basis[0][0] * basis[1][1] - basis[0][1] * basis[1][0];
    CHECK(std::abs(det) == 2);
    CHECK(lattice_basis(IntMatrix{{0}, {0}}, 2).empty());
}

TEST_CASE("ab hom well-definedness and normalization") {
    FgAbelianGroup z2{{2}}, z4{{4}}, z{{0}};
    AbHom bad{z2, z4, {{1}}};
    CHECK(!ab_well_defined(bad));
    AbHom good{z2, z4, {{2}}};
    CHECK(ab_well_defined(good));
    AbHom tozero{z2, z, {{1}}};
    CHECK(!ab_well_defined(tozero));
    AbHom fromz{z, z4, {{3}}};
    CHECK(ab_well_defined(fromz));

    AbHom f{z4, z4, {{5}}};
    ab_normalize(f);
    CHECK(f.matrix[0][0] == 1);
    CHECK(ab_equal(f, ab_identity(z4)));
}

TEST_CASE("ab hom arithmetic laws on random data") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 300; ++trial) {
        FgAbelianGroup a = oracles::random_fg_group(rng);
        FgAbelianGroup b = oracles::random_fg_group(rng);
        FgAbelianGroup c = oracles::random_fg_group(rng);
        FgAbelianGroup d = oracles::random_fg_group(rng);
        AbHom f = oracles::random_ab_hom(a, b, rng);
        AbHom g = oracles::random_ab_hom(b, c, rng);
        AbHom h = oracles::random_ab_hom(c, d, rng);
        CHECK(ab_well_defined(f));
        CHECK(ab_well_defined(g));
        CHECK(ab_well_defined(h));
        // associativity
        CHECK(ab_equal(ab_compose(h, ab_compose(g, f)), ab_compose(ab_compose(h, g), f)));
        // identity laws
        CHECK(ab_equal(ab_compose(ab_identity(b), f), f));
        CHECK(ab_equal(ab_compose(f, ab_identity(a)), f));
        // equality is a congruence: perturb g by its codomain moduli
        AbHom g2 = g;
        for (int i = 0; i < c.rank(); ++i)
            for (int j = 0; j < b.rank(); ++j)
                if (c.factors[i] > 0) g2.matrix[i][j] += c.factors[i] * ((rng() % 3) - 1);
        CHECK(ab_equal(g2, g));
        CHECK(ab_equal(ab_compose(g2, f), ab_compose(g, f)));
        CHECK(ab_equal(ab_compose(h, g2), ab_compose(h, g)));
        // composition is additive in the left argument
        AbHom g3 = oracles::random_ab_hom(b, c, rng);
        CHECK(ab_equal(ab_compose(ab_add(g, g3), f),
                       ab_add(ab_compose(g, f), ab_compose(g3, f))));
    }
}

TEST_CASE("direct sums and blocks") {
    FgAbelianGroup z2{{2}}, z3{{3}}, zero{{}};
    FgAbelianGroup sum = direct_sum({z2, zero, z3});
    CHECK(sum.factors == std::vector<long long>{2, 3});

    AbHom a = ab_identity(z2);
    AbHom b = ab_zero(z3, z2);
    AbHom c = ab_zero(z2, z3);
    AbHom d = ab_identity(z3);
    AbHom block = assemble_blocks({z2, z3}, {z2, z3}, {{a, b}, {c, d}});
    CHECK(ab_equal(block, ab_identity(sum)));

    // rank-zero groups compose cleanly
    AbHom through_zero = ab_compose(ab_zero(zero, z3), ab_zero(z2, zero));
    CHECK(ab_equal(through_zero, ab_zero(z2, z3)));
}
