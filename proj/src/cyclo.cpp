#include "qrigid/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qrigid {

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  if (r.get_den() <= 0) throw std::invalid_argument("bad rational literal: " + s);
  return r;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

namespace {

// Dense integer polynomials, little-endian coefficients.
using ZPoly = std::vector<mpz_class>;

ZPoly zpoly_trim(ZPoly p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  return p;
}

// Exact division of monic-divisor polynomials over Z.
ZPoly zpoly_div_exact(const ZPoly& num, const ZPoly& den) {
  ZPoly rem = num;
  ZPoly quot(num.size() - den.size() + 1, mpz_class(0));
  for (long i = static_cast<long>(rem.size()) - 1;
       i >= static_cast<long>(den.size()) - 1; --i) {
    mpz_class c = rem[i] / den.back();
    long shift = i - (static_cast<long>(den.size()) - 1);
    quot[shift] = c;
    for (size_t j = 0; j < den.size(); ++j) rem[shift + j] -= c * den[j];
  }
  for (const auto& c : rem)
    if (c != 0) throw std::logic_error("inexact polynomial division");
  return zpoly_trim(quot);
}

ZPoly cyclotomic_poly(int n) {
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  ZPoly num(n + 1, mpz_class(0));
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = zpoly_div_exact(num, cyclotomic_poly(d));
  }
  return num;
}

int euler_phi(int n) {
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

bool is_prime_int(int n) {
  if (n < 2) return false;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

}  // namespace

const CycloField& CycloField::get(int level) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycloField>> cache;
  if (level < 5 || level % 2 == 0)
    throw std::invalid_argument("level must be an odd integer >= 5");
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(level);
  if (it != cache.end()) return *it->second;

  auto f = std::make_unique<CycloField>();
  f->level = level;
  f->prime = is_prime_int(level);
  f->cyclotomic = cyclotomic_poly(level);
  f->degree = static_cast<int>(f->cyclotomic.size()) - 1;
  if (f->degree != euler_phi(level))
    throw std::logic_error("cyclotomic degree mismatch");

  // zeta^i reduced mod Phi_level for all i < 2*degree (enough for products;
  // exponents are otherwise first reduced mod level since zeta^level = 1).
  const int deg = f->degree;
  int want = std::max(2 * deg, level);
  f->powers.assign(want, {});
  for (int i = 0; i < deg; ++i) {
    std::vector<Rational> v(deg, Rational(0));
    v[i] = 1;
    f->powers[i] = std::move(v);
  }
  for (int i = deg; i < want; ++i) {
    // zeta^i = zeta * zeta^(i-1); shifting may overflow into degree `deg`,
    // then subtract coeff * (Phi - x^deg).
    const auto& prev = f->powers[i - 1];
    std::vector<Rational> v(deg, Rational(0));
    Rational top = prev[deg - 1];
    for (int j = deg - 1; j >= 1; --j) v[j] = prev[j - 1];
    v[0] = 0;
    if (top != 0) {
      for (int j = 0; j < deg; ++j) {
        Rational adj = top * Rational(f->cyclotomic[j]);
        v[j] -= adj;
      }
    }
    f->powers[i] = std::move(v);
  }

  auto* raw = f.get();
  cache.emplace(level, std::move(f));
  return *raw;
}

Cyclotomic::Cyclotomic(int level)
    : field_(&CycloField::get(level)), coeffs_(field_->degree, Rational(0)) {}

Cyclotomic::Cyclotomic(int level, const Rational& constant) : Cyclotomic(level) {
  coeffs_[0] = constant;
}

Cyclotomic::Cyclotomic(int level, std::vector<Rational> coeffs)
    : field_(&CycloField::get(level)), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != field_->degree)
    throw std::invalid_argument("coefficient list has wrong length for level");
  for (auto& c : coeffs_) c.canonicalize();
}

Cyclotomic Cyclotomic::zeta(int level, long exponent) {
  const CycloField& f = CycloField::get(level);
  long e = exponent % level;
  if (e < 0) e += level;
  Cyclotomic z(level);
  z.coeffs_ = f.powers[e];
  return z;
}

Cyclotomic Cyclotomic::from_rational(int level, const Rational& r) {
  return Cyclotomic(level, r);
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_one() const {
  if (coeffs_.empty() || coeffs_[0] != 1) return false;
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_part() const {
  return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

void Cyclotomic::require_same(const Cyclotomic& o) const {
  if (!field_ || !o.field_) throw std::invalid_argument("uninitialized cyclotomic value");
  if (field_->level != o.field_->level)
    throw std::invalid_argument("level mismatch");
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  require_same(o);
  Cyclotomic r = *this;
  for (int i = 0; i < field_->degree; ++i) r.coeffs_[i] += o.coeffs_[i];
  return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  require_same(o);
  Cyclotomic r = *this;
  for (int i = 0; i < field_->degree; ++i) r.coeffs_[i] -= o.coeffs_[i];
  return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  require_same(o);
  const int deg = field_->degree;
  std::vector<Rational> conv(2 * deg - 1, Rational(0));
  for (int i = 0; i < deg; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; j < deg; ++j) {
      if (o.coeffs_[j] == 0) continue;
      conv[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  Cyclotomic r(field_->level);
  for (int k = 0; k < 2 * deg - 1; ++k) {
    if (conv[k] == 0) continue;
    const auto& red = field_->powers[k];
    for (int j = 0; j < deg; ++j)
      if (red[j] != 0) r.coeffs_[j] += conv[k] * red[j];
  }
  return r;
}

Cyclotomic Cyclotomic::operator*(const Rational& s) const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

Cyclotomic Cyclotomic::inv() const {
  if (is_zero()) throw std::invalid_argument("division by zero");
  const int deg = field_->degree;
  // Solve (this) * x = 1 through the multiplication matrix.
  // Columns: this * zeta^j expressed on the basis.
  std::vector<std::vector<Rational>> m(deg, std::vector<Rational>(deg + 1, Rational(0)));
  for (int j = 0; j < deg; ++j) {
    Cyclotomic col = *this * Cyclotomic::zeta(field_->level, j);
    for (int i = 0; i < deg; ++i) m[i][j] = col.coeffs_[i];
  }
  m[0][deg] = 1;
  // Gaussian elimination with exact division.
  int row = 0;
  std::vector<int> pivot_col(deg, -1);
  for (int col = 0; col < deg && row < deg; ++col) {
    int p = -1;
    for (int i = row; i < deg; ++i)
      if (m[i][col] != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(m[p], m[row]);
    Rational inv_p = 1 / m[row][col];
    for (int j = col; j <= deg; ++j) m[row][j] *= inv_p;
    for (int i = 0; i < deg; ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (int j = col; j <= deg; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_col[row] = col;
    ++row;
  }
  std::vector<Rational> x(deg, Rational(0));
  for (int i = 0; i < row; ++i) x[pivot_col[i]] = m[i][deg];
  Cyclotomic r(field_->level, x);
  if (!((*this) * r).is_one()) throw std::logic_error("inverse computation failed");
  return r;
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  Cyclotomic acc(field_->level, Rational(1));
  Cyclotomic base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (!field_ || !o.field_) return field_ == o.field_;
  if (field_->level != o.field_->level) return false;
  return coeffs_ == o.coeffs_;
}

Cyclotomic Cyclotomic::galois(long k) const {
  const int n = field_->level;
  long kk = k % n;
  if (kk < 0) kk += n;
  if (std::gcd(kk, static_cast<long>(n)) != 1)
    throw std::invalid_argument("galois exponent not coprime to level");
  Cyclotomic r(n);
  for (int i = 0; i < field_->degree; ++i) {
    if (coeffs_[i] == 0) continue;
    const auto& red = field_->powers[(static_cast<long>(i) * kk) % n];
    for (int j = 0; j < field_->degree; ++j)
      if (red[j] != 0) r.coeffs_[j] += coeffs_[i] * red[j];
  }
  return r;
}

bool Cyclotomic::is_root_of_unity() const {
  if (is_zero()) return false;
  return pow(2L * level()).is_one();
}

std::string Cyclotomic::str() const {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < degree(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) out << " + ";
    out << coeffs_[i].get_str();
    if (i > 0) out << "*z^" << i;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

Embedding::Embedding(int level_in, int k_in) : level(level_in), k(k_in) {
  CycloField::get(level);  // validates level
  if (k < 1 || k > level - 1 || std::gcd(k, level) != 1)
    throw std::invalid_argument("embedding exponent must satisfy 1 <= k <= level-1, gcd(k, level) = 1");
}

Embedding Embedding::distinguished(int level) {
  // Exponent k with exp(2*pi*i*(2k)/level) = exp(i*pi*(level-1)/level), i.e.
  // 4k = level-1 (mod 2*level). Solution: k = (level^2-1)/4 mod level.
  long k = (static_cast<long>(level) * level - 1) / 4 % level;
  return Embedding(level, static_cast<int>(k));
}

std::complex<double> Embedding::root() const {
  const double two_pi = 6.283185307179586476925286766559;
  return std::polar(1.0, two_pi * k / level);
}

std::complex<double> embed(const Cyclotomic& a, const Embedding& e) {
  if (a.level() != e.level) throw std::invalid_argument("level mismatch");
  const double two_pi = 6.283185307179586476925286766559;
  std::complex<double> acc(0.0, 0.0);
  for (int i = 0; i < a.degree(); ++i) {
    const Rational& c = a.coeffs()[i];
    if (c == 0) continue;
    double v = mpq_get_d(c.get_mpq_t());
    acc += v * std::polar(1.0, two_pi * e.k * i / a.level());
  }
  return acc;
}

}  // namespace qrigid
