#include "bldg/linalg.hpp"

#include <algorithm>

#include "bldg/errors.hpp"

namespace bldg {

FqMat FqMat::identity(int n) {
  FqMat m;
  m.n = n;
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FqMat mat_mul(const FqField& F, const FqMat& A, const FqMat& B) {
  FqMat C;
  C.n = A.n;
  for (int i = 0; i < A.n; ++i)
    for (int j = 0; j < A.n; ++j) {
      fq s = 0;
      for (int k = 0; k < A.n; ++k) s = F.add(s, F.mul(A.at(i, k), B.at(k, j)));
      C.at(i, j) = s;
    }
  return C;
}

FqMat mat_pow(const FqField& F, FqMat A, long long k) {
  FqMat r = FqMat::identity(A.n);
  while (k > 0) {
    if (k & 1) r = mat_mul(F, r, A);
    A = mat_mul(F, A, A);
    k >>= 1;
  }
  return r;
}

fq mat_det(const FqField& F, FqMat A) {
  fq det = F.one();
  int n = A.n;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (A.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      for (int c = 0; c < n; ++c) std::swap(A.at(piv, c), A.at(col, c));
      det = F.neg(det);
    }
    det = F.mul(det, A.at(col, col));
    fq inv = F.inv(A.at(col, col));
    for (int r = col + 1; r < n; ++r) {
      fq f = F.mul(A.at(r, col), inv);
      if (f == 0) continue;
      for (int c = col; c < n; ++c) A.at(r, c) = F.sub(A.at(r, c), F.mul(f, A.at(col, c)));
    }
  }
  return det;
}

FqMat mat_inv(const FqField& F, const FqMat& A) {
  int n = A.n;
  FqMat M = A, I = FqMat::identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (M.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw PreconditionError("singular matrix");
    if (piv != col)
      for (int c = 0; c < n; ++c) {
        std::swap(M.at(piv, c), M.at(col, c));
        std::swap(I.at(piv, c), I.at(col, c));
      }
    fq inv = F.inv(M.at(col, col));
    for (int c = 0; c < n; ++c) {
      M.at(col, c) = F.mul(M.at(col, c), inv);
      I.at(col, c) = F.mul(I.at(col, c), inv);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || M.at(r, col) == 0) continue;
      fq f = M.at(r, col);
      for (int c = 0; c < n; ++c) {
        M.at(r, c) = F.sub(M.at(r, c), F.mul(f, M.at(col, c)));
        I.at(r, c) = F.sub(I.at(r, c), F.mul(f, I.at(col, c)));
      }
    }
  }
  return I;
}

FqMat mat_transpose(const FqMat& A) {
  FqMat T;
  T.n = A.n;
  for (int i = 0; i < A.n; ++i)
    for (int j = 0; j < A.n; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

FqMat transvection(int n, int i, int j, fq c) {
  FqMat M = FqMat::identity(n);
  M.at(i, j) = c;
  return M;
}

FqMat frobenius_entrywise(const FqField& F, const FqMat& A, int m) {
  FqMat B = A;
  for (int i = 0; i < A.n * A.n; ++i) B.a[i] = F.frobenius(A.a[i], m);
  return B;
}

bool is_scalar_matrix(const FqMat& A) {
  fq d = A.at(0, 0);
  if (d == 0) return false;
  for (int i = 0; i < A.n; ++i)
    for (int j = 0; j < A.n; ++j)
      if (A.at(i, j) != (i == j ? d : 0)) return false;
  return true;
}

std::vector<int> mat_to_ints(const FqMat& A) {
  std::vector<int> v(size_t(A.n) * A.n);
  for (size_t i = 0; i < v.size(); ++i) v[i] = A.a[i];
  return v;
}

FqMat mat_from_ints(const FqField& F, int n, const std::vector<int>& entries) {
  if (int(entries.size()) != n * n) throw PreconditionError("matrix needs n*n entries");
  FqMat A;
  A.n = n;
  for (int i = 0; i < n * n; ++i) {
    int e = entries[i];
    if (e < 0 || e >= F.order()) throw PreconditionError("matrix entry out of field range");
    A.a[i] = fq(e);
  }
  return A;
}

namespace {

// RREF of a list of row vectors of width n; returns the nonzero rows.
std::vector<std::array<fq, 4>> rref_rows(const FqField& F, int n, std::vector<std::array<fq, 4>> rows) {
  int lead = 0;
  size_t r = 0;
  while (r < rows.size() && lead < n) {
    size_t piv = r;
    while (piv < rows.size() && rows[piv][lead] == 0) ++piv;
    if (piv == rows.size()) {
      ++lead;
      continue;
    }
    std::swap(rows[r], rows[piv]);
    fq inv = F.inv(rows[r][lead]);
    for (int c = 0; c < n; ++c) rows[r][c] = F.mul(rows[r][c], inv);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][lead] == 0) continue;
      fq f = rows[i][lead];
      for (int c = 0; c < n; ++c) rows[i][c] = F.sub(rows[i][c], F.mul(f, rows[r][c]));
    }
    ++r;
    ++lead;
  }
  rows.resize(r);
  return rows;
}

}  // namespace

Subspace span_of(const FqField& F, int n, const std::vector<std::array<fq, 4>>& vecs) {
  auto rows = rref_rows(F, n, vecs);
  if (rows.size() > 3) throw PreconditionError("subspace dimension exceeds 3");
  Subspace S;
  S.n = n;
  S.dim = int(rows.size());
  for (int i = 0; i < S.dim; ++i) S.rows[i] = rows[i];
  return S;
}

bool subspace_contains(const FqField& F, const Subspace& S, const std::array<fq, 4>& v) {
  std::array<fq, 4> w = v;
  for (int r = 0; r < S.dim; ++r) {
    int lead = -1;
    for (int c = 0; c < S.n; ++c)
      if (S.rows[r][c] != 0) {
        lead = c;
        break;
      }
    if (lead < 0) continue;
    fq f = w[lead];
    if (f == 0) continue;
    for (int c = 0; c < S.n; ++c) w[c] = F.sub(w[c], F.mul(f, S.rows[r][c]));
  }
  for (int c = 0; c < S.n; ++c)
    if (w[c] != 0) return false;
  return true;
}

bool subspace_leq(const FqField& F, const Subspace& A, const Subspace& B) {
  if (A.dim > B.dim) return false;
  for (int r = 0; r < A.dim; ++r)
    if (!subspace_contains(F, B, A.rows[r])) return false;
  return true;
}

Subspace subspace_image(const FqField& F, const FqMat& M, const Subspace& S) {
  std::vector<std::array<fq, 4>> vecs;
  for (int r = 0; r < S.dim; ++r) {
    std::array<fq, 4> v{};
    for (int i = 0; i < S.n; ++i) {
      fq s = 0;
      for (int j = 0; j < S.n; ++j) s = F.add(s, F.mul(M.at(i, j), S.rows[r][j]));
      v[i] = s;
    }
    vecs.push_back(v);
  }
  return span_of(F, S.n, vecs);
}

Subspace annihilator(const FqField& F, const Subspace& S) {
  std::vector<std::vector<fq>> eqs;
  for (int r = 0; r < S.dim; ++r) eqs.push_back({S.rows[r].begin(), S.rows[r].begin() + S.n});
  auto basis = nullspace(F, eqs, S.n);
  std::vector<std::array<fq, 4>> vecs;
  for (auto& b : basis) {
    std::array<fq, 4> v{};
    std::copy(b.begin(), b.end(), v.begin());
    vecs.push_back(v);
  }
  return span_of(F, S.n, vecs);
}

Subspace frobenius_subspace(const FqField& F, const Subspace& S, int m) {
  std::vector<std::array<fq, 4>> vecs;
  for (int r = 0; r < S.dim; ++r) {
    std::array<fq, 4> v{};
    for (int c = 0; c < S.n; ++c) v[c] = F.frobenius(S.rows[r][c], m);
    vecs.push_back(v);
  }
  return span_of(F, S.n, vecs);
}

std::vector<std::vector<fq>> nullspace(const FqField& F, std::vector<std::vector<fq>> rows, int ncols) {
  int lead = 0;
  size_t r = 0;
  std::vector<int> pivot_col;
  while (r < rows.size() && lead < ncols) {
    size_t piv = r;
    while (piv < rows.size() && rows[piv][lead] == 0) ++piv;
    if (piv == rows.size()) {
      ++lead;
      continue;
    }
    std::swap(rows[r], rows[piv]);
    fq inv = F.inv(rows[r][lead]);
    for (int c = 0; c < ncols; ++c) rows[r][c] = F.mul(rows[r][c], inv);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][lead] == 0) continue;
      fq f = rows[i][lead];
      for (int c = 0; c < ncols; ++c) rows[i][c] = F.sub(rows[i][c], F.mul(f, rows[r][c]));
    }
    pivot_col.push_back(lead);
    ++r;
    ++lead;
  }
  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<fq>> basis;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<fq> v(ncols, 0);
    v[free] = F.one();
    for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = F.neg(rows[i][free]);
    basis.push_back(v);
  }
  return basis;
}

}  // namespace bldg
