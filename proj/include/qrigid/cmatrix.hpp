#ifndef QRIGID_CMATRIX_HPP
#define QRIGID_CMATRIX_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "qrigid/cyclo.hpp"

namespace qrigid {

// Dense matrix over Q(zeta), row-major, uniform level.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(int rows, int cols, int level);

  static CMatrix identity(int n, int level);
  static CMatrix zero(int rows, int cols, int level) { return CMatrix(rows, cols, level); }
  static CMatrix diagonal(const std::vector<Cyclotomic>& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int level() const { return level_; }

  const Cyclotomic& at(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }
  Cyclotomic& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }

  CMatrix operator+(const CMatrix& o) const;
  CMatrix operator-(const CMatrix& o) const;
  CMatrix operator*(const CMatrix& o) const;
  CMatrix operator*(const Cyclotomic& s) const;
  CMatrix transpose() const;

  // Entry-wise Galois conjugate, then transpose: the adjoint for the hermitian
  // pairing twisted by zeta -> zeta^(level-1).
  CMatrix conj_transpose() const;

  bool operator==(const CMatrix& o) const;
  bool operator!=(const CMatrix& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_identity() const;
  // Scalar multiple of the identity; returns the scalar if so.
  std::optional<Cyclotomic> scalar_of_identity() const;

  CMatrix inverse() const;  // throws if singular
  CMatrix pow(long e) const;

  Cyclotomic trace() const;
  Cyclotomic det() const;

  std::vector<std::complex<double>> embedded(const Embedding& e) const;  // row-major

 private:
  int rows_ = 0, cols_ = 0, level_ = 0;
  std::vector<Cyclotomic> entries_;
};

// Exact rank over the field. Forward pass follows the fraction-free Bareiss
// recurrence; all arithmetic stays in Q(zeta), no tolerances anywhere.
int rank(const CMatrix& m);

// Basis of the right kernel {v : M v = 0}, each vector a column, exact.
std::vector<std::vector<Cyclotomic>> kernel_basis(const CMatrix& m);

// One solution of M x = b, or nullopt when inconsistent.
std::optional<std::vector<Cyclotomic>> solve(const CMatrix& m,
                                             const std::vector<Cyclotomic>& b);

// Rank of the image of M under zeta -> (element of multiplicative order
// `level` mod p), for primes p = 1 mod level. Always <= rank(m); a cheap
// probabilistic pre-check, never used for certificates.
int rank_mod_p(const CMatrix& m, std::uint64_t p);

// Stack matrices vertically (same cols & level).
CMatrix vstack(const std::vector<CMatrix>& blocks);

// Kronecker product (row-major vec convention: vec(A X B) = (A (x) B^T) vec(X)).
CMatrix kron(const CMatrix& a, const CMatrix& b);

}  // namespace qrigid

#endif
