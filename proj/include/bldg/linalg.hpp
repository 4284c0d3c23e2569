#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "bldg/fq.hpp"

namespace bldg {

// Square matrix over F_q, n <= 4, row-major. Entries fit in a nibble, so a
// matrix packs into a uint64_t key for hashing.
struct FqMat {
  int n = 0;
  std::array<fq, 16> a{};

  static FqMat identity(int n);

  fq& at(int r, int c) { return a[size_t(r) * n + c]; }
  fq at(int r, int c) const { return a[size_t(r) * n + c]; }

  std::uint64_t key() const {
    std::uint64_t k = 0;
    for (int i = n * n - 1; i >= 0; --i) k = (k << 4) | a[i];
    return k;
  }

  bool operator==(const FqMat& o) const { return n == o.n && a == o.a; }
};

FqMat mat_mul(const FqField& F, const FqMat& A, const FqMat& B);
FqMat mat_pow(const FqField& F, FqMat A, long long k);
fq mat_det(const FqField& F, FqMat A);
// Throws PreconditionError when singular.
FqMat mat_inv(const FqField& F, const FqMat& A);
FqMat mat_transpose(const FqMat& A);
// I + c E_{ij} (adds c times row j onto row i of a vector: e_j -> e_j + c e_i).
FqMat transvection(int n, int i, int j, fq c);
FqMat frobenius_entrywise(const FqField& F, const FqMat& A, int m);
bool is_scalar_matrix(const FqMat& A);

std::vector<int> mat_to_ints(const FqMat& A);
FqMat mat_from_ints(const FqField& F, int n, const std::vector<int>& entries);

// Row space in reduced row echelon form: the canonical representation of a
// d-dimensional subspace of F_q^n, 1 <= d <= 3, n <= 4.
struct Subspace {
  int n = 0;
  int dim = 0;
  std::array<std::array<fq, 4>, 3> rows{};

  std::uint64_t key() const {
    std::uint64_t k = dim;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 4; ++c) k = (k << 4) | rows[r][c];
    return k;
  }
  bool operator==(const Subspace& o) const { return n == o.n && dim == o.dim && rows == o.rows; }
};

// RREF span of the given row vectors; throws if the rank exceeds 3.
Subspace span_of(const FqField& F, int n, const std::vector<std::array<fq, 4>>& vecs);
bool subspace_contains(const FqField& F, const Subspace& S, const std::array<fq, 4>& v);
bool subspace_leq(const FqField& F, const Subspace& A, const Subspace& B);  // A <= B
Subspace subspace_image(const FqField& F, const FqMat& M, const Subspace& S);
// Orthogonal complement w.r.t. the standard dot product.
Subspace annihilator(const FqField& F, const Subspace& S);
Subspace frobenius_subspace(const FqField& F, const Subspace& S, int m);

// Basis of the solution space of A x = 0, rows = equations (general sizes).
std::vector<std::vector<fq>> nullspace(const FqField& F, std::vector<std::vector<fq>> rows, int ncols);

}  // namespace bldg
