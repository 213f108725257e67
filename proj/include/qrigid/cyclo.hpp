#ifndef QRIGID_CYCLO_HPP
#define QRIGID_CYCLO_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qrigid {

using Rational = mpq_class;

Rational rational_from_string(const std::string& s);
std::string rational_to_string(const Rational& r);

/*
 * Exact arithmetic in Q(zeta) where zeta is a primitive root of unity of odd
 * order `level` >= 5. Elements are stored on the power basis
 * {zeta^0, ..., zeta^(phi(level)-1)} and reduced modulo the level-th
 * cyclotomic polynomial, so equality is coefficient-wise comparison. For a
 * prime level the basis length is level-1.
 */
struct CycloField {
  int level = 0;
  int degree = 0;                               // phi(level)
  std::vector<mpz_class> cyclotomic;            // monic, degree+1 coefficients
  std::vector<std::vector<Rational>> powers;    // zeta^i reduced, i < 2*degree
  bool prime = false;

  static const CycloField& get(int level);
};

class Cyclotomic {
 public:
  Cyclotomic() = default;
  explicit Cyclotomic(int level);                       // zero
  Cyclotomic(int level, const Rational& constant);
  Cyclotomic(int level, std::vector<Rational> coeffs);  // must match degree

  static Cyclotomic zeta(int level, long exponent = 1); // zeta^exponent
  static Cyclotomic from_rational(int level, const Rational& r);

  int level() const { return field_ ? field_->level : 0; }
  int degree() const { return field_ ? field_->degree : 0; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;               // lies in Q
  Rational rational_part() const;         // coefficient of zeta^0

  Cyclotomic operator-() const;
  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  Cyclotomic operator*(const Rational& r) const;
  Cyclotomic inv() const;                 // throws on zero
  Cyclotomic pow(long e) const;           // e may be negative

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // Galois action zeta -> zeta^k, gcd(k, level) = 1. k = level-1 is complex
  // conjugation under every embedding.
  Cyclotomic galois(long k) const;
  Cyclotomic conj() const { return galois(level() - 1); }

  // True when fixed by conjugation (real at every embedding).
  bool is_real() const { return *this == conj(); }

  // Is this a root of unity? All of them in Q(zeta) are +-zeta^j for odd level.
  bool is_root_of_unity() const;

  std::string str() const;                // human-readable polynomial in zeta

 private:
  const CycloField* field_ = nullptr;
  std::vector<Rational> coeffs_;

  void require_same(const Cyclotomic& o) const;
};

// Embedding of Q(zeta) into C sending zeta to exp(2*pi*i*k/level).
struct Embedding {
  int level = 0;
  int k = 1;

  Embedding(int level, int k);

  // The exponent at which the invariant hermitian forms of the representation
  // layer come out positive definite (the square of zeta lands on
  // exp(+-i*pi*(level-1)/level) there). Returns the representative in
  // [1, level-1]; the conjugate exponent level-k is the other one.
  static Embedding distinguished(int level);

  std::complex<double> root() const;
};

std::complex<double> embed(const Cyclotomic& a, const Embedding& e);

}  // namespace qrigid

#endif
