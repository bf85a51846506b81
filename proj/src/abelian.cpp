#include "bisets/abelian.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace bisets {

namespace {

long long mods(long long v, long long m) {
    if (m <= 0) return v;
    long long r = v % m;
    return r < 0 ? r + m : r;
}

}  // namespace

AbHom ab_identity(const FgAbelianGroup& g) {
    AbHom f{g, g, IntMatrix(g.rank(), std::vector<long long>(g.rank(), 0))};
    for (int i = 0; i < g.rank(); ++i) f.matrix[i][i] = 1;
    ab_normalize(f);
    return f;
}

AbHom ab_zero(const FgAbelianGroup& dom, const FgAbelianGroup& cod) {
    return AbHom{dom, cod, IntMatrix(cod.rank(), std::vector<long long>(dom.rank(), 0))};
}

void ab_normalize(AbHom& f) {
    for (int i = 0; i < f.codomain.rank(); ++i)
        for (int j = 0; j < f.domain.rank(); ++j)
            f.matrix[i][j] = mods(f.matrix[i][j], f.codomain.factors[i]);
}

bool ab_well_defined(const AbHom& f) {
    if (static_cast<int>(f.matrix.size()) != f.codomain.rank()) return false;
    for (const auto& row : f.matrix)
        if (static_cast<int>(row.size()) != f.domain.rank()) return false;
    for (int j = 0; j < f.domain.rank(); ++j) {
        long long dj = f.domain.factors[j];
        if (dj == 0) continue;
        for (int i = 0; i < f.codomain.rank(); ++i) {
            long long di = f.codomain.factors[i];
            long long v = f.matrix[i][j] * dj;
            if (di == 0 ? v != 0 : v % di != 0) return false;
        }
    }
    return true;
}

AbHom ab_compose(const AbHom& second, const AbHom& first) {
    if (first.codomain != second.domain)
        throw std::invalid_argument("ab_compose: middle group mismatch");
    AbHom out{first.domain, second.codomain, {}};
    out.matrix.assign(out.codomain.rank(), std::vector<long long>(out.domain.rank(), 0));
    for (int i = 0; i < out.codomain.rank(); ++i)
        for (int t = 0; t < second.domain.rank(); ++t) {
            long long sv = second.matrix[i][t];
            if (sv == 0) continue;
            for (int j = 0; j < out.domain.rank(); ++j) out.matrix[i][j] += sv * first.matrix[t][j];
        }
    ab_normalize(out);
    return out;
}

AbHom ab_add(const AbHom& a, const AbHom& b) {
    if (a.domain != b.domain || a.codomain != b.codomain)
        throw std::invalid_argument("ab_add: endpoint mismatch");
    AbHom out = a;
    for (int i = 0; i < a.codomain.rank(); ++i)
        for (int j = 0; j < a.domain.rank(); ++j) out.matrix[i][j] += b.matrix[i][j];
    ab_normalize(out);
    return out;
}

AbHom ab_scale(const AbHom& a, long long c) {
    AbHom out = a;
    for (auto& row : out.matrix)
        for (auto& v : row) v *= c;
    ab_normalize(out);
    return out;
}

bool ab_equal(const AbHom& a, const AbHom& b) {
    if (a.domain != b.domain || a.codomain != b.codomain) return false;
    for (int i = 0; i < a.codomain.rank(); ++i)
        for (int j = 0; j < a.domain.rank(); ++j) {
            long long m = a.codomain.factors[i];
            if (mods(a.matrix[i][j], m) != mods(b.matrix[i][j], m)) return false;
            if (m == 0 && a.matrix[i][j] != b.matrix[i][j]) return false;
        }
    return true;
}

std::vector<long long> ab_apply(const AbHom& f, const std::vector<long long>& v) {
    std::vector<long long> out(f.codomain.rank(), 0);
    for (int i = 0; i < f.codomain.rank(); ++i) {
        for (int j = 0; j < f.domain.rank(); ++j) out[i] += f.matrix[i][j] * v[j];
        out[i] = mods(out[i], f.codomain.factors[i]);
    }
    return out;
}

FgAbelianGroup direct_sum(const std::vector<FgAbelianGroup>& parts) {
    FgAbelianGroup out;
    for (const auto& p : parts)
        out.factors.insert(out.factors.end(), p.factors.begin(), p.factors.end());
    return out;
}

AbHom assemble_blocks(const std::vector<FgAbelianGroup>& parts_dom,
                      const std::vector<FgAbelianGroup>& parts_cod,
                      const std::vector<std::vector<AbHom>>& blocks) {
    FgAbelianGroup dom = direct_sum(parts_dom), cod = direct_sum(parts_cod);
    AbHom out = ab_zero(dom, cod);
    int roff = 0;
    for (size_t i = 0; i < parts_cod.size(); ++i) {
        int coff = 0;
        for (size_t j = 0; j < parts_dom.size(); ++j) {
            const AbHom& blk = blocks[i][j];
            if (blk.domain != parts_dom[j] || blk.codomain != parts_cod[i])
                throw std::invalid_argument("assemble_blocks: block endpoints mismatch");
            for (int r = 0; r < blk.codomain.rank(); ++r)
                for (int c = 0; c < blk.domain.rank(); ++c)
                    out.matrix[roff + r][coff + c] = blk.matrix[r][c];
            coff += parts_dom[j].rank();
        }
        roff += parts_cod[i].rank();
    }
    ab_normalize(out);
    return out;
}

IntMatrix identity_int_matrix(int n) {
    IntMatrix m(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    int n = static_cast<int>(a.size());
    int k = n ? static_cast<int>(a[0].size()) : 0;
    int m = k ? static_cast<int>(b[0].size()) : (b.empty() ? 0 : static_cast<int>(b[0].size()));
    IntMatrix out(n, std::vector<long long>(m, 0));
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < k; ++t) {
            long long av = a[i][t];
            if (av == 0) continue;
            for (int j = 0; j < m; ++j) out[i][j] += av * b[t][j];
        }
    return out;
}

std::vector<long long> mat_apply(const IntMatrix& a, const std::vector<long long>& v) {
    std::vector<long long> out(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
    return out;
}

int SmithDecomposition::diag_rank() const {
    int r = 0;
    for (int i = 0; i < std::min(rows, cols); ++i)
        if (d[i][i] != 0) ++r;
    return r;
}

SmithDecomposition smith_normal_form(IntMatrix a, int rows, int cols) {
    SmithDecomposition s;
    s.rows = rows;
    s.cols = cols;
    if (static_cast<int>(a.size()) != rows) a.resize(rows, std::vector<long long>(cols, 0));
    for (auto& row : a) row.resize(cols, 0);
    s.d = std::move(a);
    s.u = identity_int_matrix(rows);
    s.u_inv = identity_int_matrix(rows);
    s.v = identity_int_matrix(cols);
    s.v_inv = identity_int_matrix(cols);

    auto row_add = [&](int dst, int src, long long c) {  // row dst += c * row src
        for (int j = 0; j < cols; ++j) s.d[dst][j] += c * s.d[src][j];
        for (int j = 0; j < rows; ++j) s.u[dst][j] += c * s.u[src][j];
        for (int i = 0; i < rows; ++i) s.u_inv[i][src] -= c * s.u_inv[i][dst];
    };
    auto row_swap = [&](int x, int y) {
        std::swap(s.d[x], s.d[y]);
        std::swap(s.u[x], s.u[y]);
        for (int i = 0; i < rows; ++i) std::swap(s.u_inv[i][x], s.u_inv[i][y]);
    };
    auto row_neg = [&](int x) {
        for (int j = 0; j < cols; ++j) s.d[x][j] = -s.d[x][j];
        for (int j = 0; j < rows; ++j) s.u[x][j] = -s.u[x][j];
        for (int i = 0; i < rows; ++i) s.u_inv[i][x] = -s.u_inv[i][x];
    };
    auto col_add = [&](int dst, int src, long long c) {  // col dst += c * col src
        for (int i = 0; i < rows; ++i) s.d[i][dst] += c * s.d[i][src];
        for (int i = 0; i < cols; ++i) s.v[i][dst] += c * s.v[i][src];
        for (int j = 0; j < cols; ++j) s.v_inv[src][j] -= c * s.v_inv[dst][j];
    };
    auto col_swap = [&](int x, int y) {
        for (int i = 0; i < rows; ++i) std::swap(s.d[i][x], s.d[i][y]);
        for (int i = 0; i < cols; ++i) std::swap(s.v[i][x], s.v[i][y]);
        std::swap(s.v_inv[x], s.v_inv[y]);
    };

    const int steps = std::min(rows, cols);
    for (int t = 0; t < steps; ++t) {
        // pivot: minimal |entry| in the trailing block
        int pi = -1, pj = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (s.d[i][j] != 0 &&
                    (pi == -1 || std::llabs(s.d[i][j]) < std::llabs(s.d[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi == -1) break;
        if (pi != t) row_swap(t, pi);
        if (pj != t) col_swap(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < rows; ++i) {
                if (s.d[i][t] == 0) continue;
                long long q = s.d[i][t] / s.d[t][t];
                row_add(i, t, -q);
                if (s.d[i][t] != 0) {
                    row_swap(t, i);
                    clean = false;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (s.d[t][j] == 0) continue;
                long long q = s.d[t][j] / s.d[t][t];
                col_add(j, t, -q);
                if (s.d[t][j] != 0) {
                    col_swap(t, j);
                    clean = false;
                }
            }
            if (clean) {
                // enforce divisibility of the trailing block by the pivot
                for (int i = t + 1; i < rows && clean; ++i)
                    for (int j = t + 1; j < cols && clean; ++j)
                        if (s.d[i][j] % s.d[t][t] != 0) {
                            row_add(t, i, 1);
                            clean = false;
                        }
            }
        }
        if (s.d[t][t] < 0) row_neg(t);
    }
    return s;
}

std::vector<std::vector<long long>> kernel_basis(const IntMatrix& a, int rows, int cols) {
    SmithDecomposition s = smith_normal_form(a, rows, cols);
    int r = s.diag_rank();
    std::vector<std::vector<long long>> basis;
    for (int j = r; j < cols; ++j) {
        std::vector<long long> col(cols);
        for (int i = 0; i < cols; ++i) col[i] = s.v[i][j];
        basis.push_back(std::move(col));
    }
    return basis;
}

std::optional<std::vector<long long>> solve_linear(const SmithDecomposition& s,
                                                   const std::vector<long long>& b) {
    std::vector<long long> c = mat_apply(s.u, b);
    std::vector<long long> z(s.cols, 0);
    int r = s.diag_rank();
    for (int i = 0; i < s.rows; ++i) {
        if (i < r) {
            if (c[i] % s.d[i][i] != 0) return std::nullopt;
            z[i] = c[i] / s.d[i][i];
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return mat_apply(s.v, z);
}

std::vector<std::vector<long long>> lattice_basis(const IntMatrix& gens, int dim) {
    int m = gens.empty() ? 0 : static_cast<int>(gens[0].size());
    if (m == 0) return {};
    SmithDecomposition s = smith_normal_form(gens, dim, m);
    std::vector<std::vector<long long>> basis;
    for (int i = 0; i < std::min(dim, m); ++i) {
        if (s.d[i][i] == 0) continue;
        std::vector<long long> col(dim);
        for (int r = 0; r < dim; ++r) col[r] = s.u_inv[r][i] * s.d[i][i];
        basis.push_back(std::move(col));
    }
    return basis;
}

}  // namespace bisets
