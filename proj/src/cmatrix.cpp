#include "qrigid/cmatrix.hpp"

#include <stdexcept>

namespace qrigid {

CMatrix::CMatrix(int rows, int cols, int level)
    : rows_(rows), cols_(cols), level_(level) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  entries_.assign(static_cast<size_t>(rows) * cols, Cyclotomic(level));
}

CMatrix CMatrix::identity(int n, int level) {
  CMatrix m(n, n, level);
  Cyclotomic one(level, Rational(1));
  for (int i = 0; i < n; ++i) m.at(i, i) = one;
  return m;
}

CMatrix CMatrix::diagonal(const std::vector<Cyclotomic>& d) {
  if (d.empty()) throw std::invalid_argument("empty diagonal");
  CMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()), d[0].level());
  for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

CMatrix CMatrix::operator+(const CMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dimension mismatch");
  CMatrix r = *this;
  for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] += o.entries_[i];
  return r;
}

CMatrix CMatrix::operator-(const CMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dimension mismatch");
  CMatrix r = *this;
  for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] -= o.entries_[i];
  return r;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch");
  CMatrix r(rows_, o.cols_, level_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Cyclotomic& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Cyclotomic& b = o.at(k, j);
        if (b.is_zero()) continue;
        r.at(i, j) += a * b;
      }
    }
  return r;
}

CMatrix CMatrix::operator*(const Cyclotomic& s) const {
  CMatrix r = *this;
  for (auto& e : r.entries_) e *= s;
  return r;
}

CMatrix CMatrix::transpose() const {
  CMatrix r(cols_, rows_, level_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

CMatrix CMatrix::conj_transpose() const {
  CMatrix r(cols_, rows_, level_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conj();
  return r;
}

bool CMatrix::operator==(const CMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && level_ == o.level_ && entries_ == o.entries_;
}

bool CMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool CMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  return true;
}

std::optional<Cyclotomic> CMatrix::scalar_of_identity() const {
  if (rows_ != cols_ || rows_ == 0) return std::nullopt;
  const Cyclotomic& s = at(0, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i == j ? at(i, j) != s : !at(i, j).is_zero()) return std::nullopt;
    }
  return s;
}

CMatrix CMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  const int n = rows_;
  CMatrix aug(n, 2 * n, level_);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, n + i) = Cyclotomic(level_, Rational(1));
  }
  int row = 0;
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int i = row; i < n; ++i)
      if (!aug.at(i, col).is_zero()) { p = i; break; }
    if (p < 0) throw std::invalid_argument("singular matrix");
    if (p != row)
      for (int j = 0; j < 2 * n; ++j) std::swap(aug.at(p, j), aug.at(row, j));
    Cyclotomic inv_p = aug.at(row, col).inv();
    for (int j = 0; j < 2 * n; ++j) aug.at(row, j) *= inv_p;
    for (int i = 0; i < n; ++i) {
      if (i == row || aug.at(i, col).is_zero()) continue;
      Cyclotomic f = aug.at(i, col);
      for (int j = col; j < 2 * n; ++j) aug.at(i, j) -= f * aug.at(row, j);
    }
    ++row;
  }
  CMatrix r(n, n, level_);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = aug.at(i, n + j);
  return r;
}

CMatrix CMatrix::pow(long e) const {
  if (rows_ != cols_) throw std::invalid_argument("power of non-square matrix");
  if (e < 0) return inverse().pow(-e);
  CMatrix acc = identity(rows_, level_);
  CMatrix base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Cyclotomic CMatrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
  Cyclotomic t(level_);
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

Cyclotomic CMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  const int n = rows_;
  CMatrix m = *this;
  Cyclotomic result(level_, Rational(1));
  int sign = 1;
  int row = 0;
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int i = row; i < n; ++i)
      if (!m.at(i, col).is_zero()) { p = i; break; }
    if (p < 0) return Cyclotomic(level_);
    if (p != row) {
      for (int j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(row, j));
      sign = -sign;
    }
    result *= m.at(row, col);
    Cyclotomic inv_p = m.at(row, col).inv();
    for (int i = row + 1; i < n; ++i) {
      if (m.at(i, col).is_zero()) continue;
      Cyclotomic f = m.at(i, col) * inv_p;
      for (int j = col; j < n; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    ++row;
  }
  if (sign < 0) result = -result;
  return result;
}

std::vector<std::complex<double>> CMatrix::embedded(const Embedding& e) const {
  std::vector<std::complex<double>> out;
  out.reserve(entries_.size());
  for (const auto& x : entries_) out.push_back(embed(x, e));
  return out;
}

namespace {

// Row echelon reduction with exact arithmetic. Returns pivot columns; `m` is
// left in reduced echelon form. Forward elimination uses the Bareiss
// fraction-free update (a_ij * p - a_ik * a_kj) / p_prev, which stays exact in
// the field and keeps intermediate entries tame.
std::vector<int> echelon(CMatrix& m) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<int> pivots;
  int row = 0;
  Cyclotomic prev(m.level(), Rational(1));
  for (int col = 0; col < cols && row < rows; ++col) {
    int p = -1;
    for (int i = row; i < rows; ++i)
      if (!m.at(i, col).is_zero()) { p = i; break; }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < cols; ++j) std::swap(m.at(p, j), m.at(row, j));
    const Cyclotomic pivot = m.at(row, col);
    Cyclotomic prev_inv = prev.inv();
    for (int i = row + 1; i < rows; ++i) {
      const Cyclotomic head = m.at(i, col);
      for (int j = col; j < cols; ++j)
        m.at(i, j) = (m.at(i, j) * pivot - head * m.at(row, j)) * prev_inv;
    }
    prev = pivot;
    pivots.push_back(col);
    ++row;
  }
  // Back substitution to reduced form.
  for (int r = static_cast<int>(pivots.size()) - 1; r >= 0; --r) {
    int col = pivots[r];
    Cyclotomic inv_p = m.at(r, col).inv();
    for (int j = col; j < cols; ++j) m.at(r, j) *= inv_p;
    for (int i = 0; i < r; ++i) {
      if (m.at(i, col).is_zero()) continue;
      Cyclotomic f = m.at(i, col);
      for (int j = col; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
  }
  return pivots;
}

}  // namespace

int rank(const CMatrix& m) {
  CMatrix work = m;
  return static_cast<int>(echelon(work).size());
}

std::vector<std::vector<Cyclotomic>> kernel_basis(const CMatrix& m) {
  CMatrix work = m;
  std::vector<int> pivots = echelon(work);
  const int cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Cyclotomic>> basis;
  for (int freec = 0; freec < cols; ++freec) {
    if (is_pivot[freec]) continue;
    std::vector<Cyclotomic> v(cols, Cyclotomic(m.level()));
    v[freec] = Cyclotomic(m.level(), Rational(1));
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -work.at(static_cast<int>(r), freec);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Cyclotomic>> solve(const CMatrix& m,
                                             const std::vector<Cyclotomic>& b) {
  if (static_cast<int>(b.size()) != m.rows())
    throw std::invalid_argument("dimension mismatch");
  CMatrix aug(m.rows(), m.cols() + 1, m.level());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  std::vector<int> pivots = echelon(aug);
  for (int c : pivots)
    if (c == m.cols()) return std::nullopt;  // pivot in the augmented column
  std::vector<Cyclotomic> x(m.cols(), Cyclotomic(m.level()));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), m.cols());
  return x;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

std::uint64_t order_ell_element(std::uint64_t p, int ell) {
  // Element of multiplicative order exactly ell in F_p, p = 1 mod ell.
  std::vector<int> prime_divs;
  int m = ell;
  for (int q = 2; q * q <= m; ++q) {
    if (m % q) continue;
    prime_divs.push_back(q);
    while (m % q == 0) m /= q;
  }
  if (m > 1) prime_divs.push_back(m);
  for (std::uint64_t a = 2; a < p; ++a) {
    std::uint64_t w = powmod(a, (p - 1) / ell, p);
    if (w == 1) continue;
    bool exact = true;
    for (int q : prime_divs)
      if (powmod(w, ell / q, p) == 1) { exact = false; break; }
    if (exact) return w;
  }
  throw std::logic_error("no element of the requested order");
}

}  // namespace

int rank_mod_p(const CMatrix& m, std::uint64_t p) {
  const int ell = m.level();
  if (p < 3 || (p - 1) % ell != 0)
    throw std::invalid_argument("prime must be 1 mod level");
  std::uint64_t w = order_ell_element(p, ell);
  // Powers of w, so zeta^i -> w^i.
  std::vector<std::uint64_t> wp(ell, 1);
  for (int i = 1; i < ell; ++i) wp[i] = mulmod(wp[i - 1], w, p);

  const CycloField& f = CycloField::get(ell);
  const int deg = f.degree;
  auto reduce_entry = [&](const Cyclotomic& c) -> std::uint64_t {
    std::uint64_t acc = 0;
    for (int i = 0; i < deg; ++i) {
      const Rational& q = c.coeffs()[i];
      if (q == 0) continue;
      mpz_class num = q.get_num(), den = q.get_den();
      mpz_class pz(static_cast<unsigned long>(p));
      if (mpz_divisible_p(den.get_mpz_t(), pz.get_mpz_t()))
        throw std::invalid_argument("denominator divisible by p");
      mpz_class nm = num % pz;
      if (nm < 0) nm += pz;
      mpz_class dm = den % pz;
      std::uint64_t nv = mpz_get_ui(nm.get_mpz_t());
      std::uint64_t dv = mpz_get_ui(dm.get_mpz_t());
      std::uint64_t val = mulmod(nv, invmod(dv, p), p);
      acc = (acc + mulmod(val, wp[i], p)) % p;
    }
    return acc;
  };

  std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) a[i][j] = reduce_entry(m.at(i, j));

  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int piv = -1;
    for (int i = rank; i < m.rows(); ++i)
      if (a[i][col] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    std::uint64_t inv_p = invmod(a[rank][col], p);
    for (int i = rank + 1; i < m.rows(); ++i) {
      if (a[i][col] == 0) continue;
      std::uint64_t f2 = mulmod(a[i][col], inv_p, p);
      for (int j = col; j < m.cols(); ++j) {
        std::uint64_t sub = mulmod(f2, a[rank][j], p);
        a[i][j] = (a[i][j] + p - sub) % p;
      }
    }
    ++rank;
  }
  return rank;
}

CMatrix vstack(const std::vector<CMatrix>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("vstack of nothing");
  int cols = blocks[0].cols(), level = blocks[0].level();
  int rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols || b.level() != level) throw std::invalid_argument("dimension mismatch");
    rows += b.rows();
  }
  CMatrix r(rows, cols, level);
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < cols; ++j) r.at(off + i, j) = b.at(i, j);
    off += b.rows();
  }
  return r;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix r(a.rows() * b.rows(), a.cols() * b.cols(), a.level());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) {
          if (b.at(k, l).is_zero()) continue;
          r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    }
  return r;
}

}  // namespace qrigid
