#include "qrigid/fusion.hpp"

#include <algorithm>
#include <stdexcept>

namespace qrigid {

namespace {

bool is_prime_int(int n) {
  if (n < 2) return false;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

}  // namespace

Level::Level(int ell_in) : ell(ell_in), prime(is_prime_int(ell_in)) {
  if (ell < 5 || ell % 2 == 0)
    throw std::invalid_argument("level must be an odd integer >= 5");
}

std::vector<Color> colors(const Level& ell) {
  std::vector<Color> out;
  for (Color c = 0; c <= ell.ell - 3; c += 2) out.push_back(c);
  return out;
}

bool valid_color(Color c, const Level& ell) {
  return c >= 0 && c <= ell.ell - 3 && c % 2 == 0;
}

bool admissible(Color a, Color b, Color c, const Level& ell) {
  if (!valid_color(a, ell) || !valid_color(b, ell) || !valid_color(c, ell)) return false;
  if (std::abs(a - b) > c || c > a + b) return false;
  return a + b + c < 2 * ell.ell - 2;
}

Cyclotomic twist(Color c, const Level& ell) {
  if (!valid_color(c, ell)) throw std::invalid_argument("color out of range");
  return Cyclotomic::zeta(ell.ell, static_cast<long>(c) * (c + 2) % ell.ell);
}

Cyclotomic quantum_int(long n, const Level& ell) {
  // Sum form q^(n-1) + q^(n-3) + ... + q^(1-n) at q = zeta, no division.
  const int L = ell.ell;
  Cyclotomic acc(L);
  long m = n % L;
  if (m < 0) m += L;
  for (long j = 0; j < m; ++j) acc += Cyclotomic::zeta(L, m - 1 - 2 * j);
  return acc;
}

PropertiesReport check_properties(const Level& ell) {
  PropertiesReport rep;
  auto cs = colors(ell);
  rep.property_one = true;
  for (Color c : cs) {
    bool found = false;
    for (Color mu : cs)
      if (admissible(c, mu, mu, ell)) { found = true; break; }
    if (!found) { rep.property_one = false; break; }
  }
  rep.property_two = true;  // blocks of the three-holed sphere are 0- or 1-dimensional here
  rep.property_three = true;
  for (size_t i = 0; i < cs.size(); ++i)
    for (size_t j = i + 1; j < cs.size(); ++j)
      if (twist(cs[i], ell) == twist(cs[j], ell)) {
        rep.property_three = false;
        rep.twist_collisions.emplace_back(cs[i], cs[j]);
      }
  return rep;
}

std::shared_ptr<const FusionData> FusionData::get(int ell) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const FusionData>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(ell);
  if (it != cache.end()) return it->second;
  std::shared_ptr<const FusionData> f(new FusionData(ell));
  cache.emplace(ell, f);
  return f;
}

FusionData::FusionData(int ell)
    : level_(ell), colors_(colors(level_)), q_(Cyclotomic::zeta(ell, 2)) {}

Cyclotomic FusionData::qint(long n) const {
  const int L = level_.ell;
  long m = n % L;
  if (m < 0) m += L;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = qint_cache_.find(m);
    if (it != qint_cache_.end()) return it->second;
  }
  // q^(m-1) + q^(m-3) + ... + q^(1-m) at the ribbon parameter q = zeta^2.
  Cyclotomic acc(L);
  for (long j = 0; j < m; ++j) acc += Cyclotomic::zeta(L, 2 * (m - 1 - 2 * j));
  std::lock_guard<std::mutex> lock(mu_);
  qint_cache_.emplace(m, acc);
  return acc;
}

Cyclotomic FusionData::qfact(long n) const {
  if (n < 0) throw std::logic_error("negative quantum factorial");
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = qfact_cache_.find(n);
    if (it != qfact_cache_.end()) return it->second;
  }
  Cyclotomic acc(level_.ell, Rational(1));
  for (long m = 1; m <= n; ++m) acc *= qint(m);
  std::lock_guard<std::mutex> lock(mu_);
  qfact_cache_.emplace(n, acc);
  return acc;
}

Cyclotomic FusionData::loop(Color a) const {
  if (!valid_color(a, level_)) throw std::invalid_argument("color out of range");
  return qint(a + 1);
}

Cyclotomic FusionData::theta(Color a, Color b, Color c) const {
  if (!admissible(a, b, c, level_)) return Cyclotomic(level_.ell);
  long m = (a + b - c) / 2, n = (b + c - a) / 2, p = (c + a - b) / 2;
  Cyclotomic num = qfact(m + n + p + 1) * qfact(m) * qfact(n) * qfact(p);
  Cyclotomic den = qfact(m + n) * qfact(n + p) * qfact(p + m);
  Cyclotomic val = num * den.inv();
  if ((m + n + p) % 2 != 0) val = -val;
  return val;
}

Cyclotomic FusionData::tet(Color a, Color b, Color e, Color c, Color d, Color f) const {
  const int L = level_.ell;
  if (!admissible(a, b, e, level_) || !admissible(c, d, e, level_) ||
      !admissible(a, d, f, level_) || !admissible(b, c, f, level_))
    return Cyclotomic(L);
  std::array<int, 6> key{a, b, e, c, d, f};
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = tet_cache_.find(key);
    if (it != tet_cache_.end()) return it->second;
  }
  const long av[4] = {(a + b + e) / 2, (c + d + e) / 2, (a + d + f) / 2, (b + c + f) / 2};
  const long bv[3] = {(a + b + c + d) / 2, (b + d + e + f) / 2, (a + c + e + f) / 2};
  long lo = *std::max_element(av, av + 4);
  long hi = *std::min_element(bv, bv + 3);

  Cyclotomic sum(L);
  for (long s = lo; s <= hi; ++s) {
    Cyclotomic term = qfact(s + 1);
    if (term.is_zero()) continue;  // beyond the semisimple range
    Cyclotomic den(L, Rational(1));
    for (long x : av) den *= qfact(s - x);
    for (long x : bv) den *= qfact(x - s);
    term *= den.inv();
    if (s % 2 != 0) term = -term;
    sum += term;
  }
  Cyclotomic inner(L, Rational(1));
  for (long x : bv)
    for (long y : av) inner *= qfact(x - y);
  Cyclotomic outer = qfact(a) * qfact(b) * qfact(c) * qfact(d) * qfact(e) * qfact(f);
  Cyclotomic val = inner * outer.inv() * sum;
  std::lock_guard<std::mutex> lock(mu_);
  tet_cache_.emplace(key, val);
  return val;
}

Cyclotomic FusionData::fmove(Color p, Color q, Color r, Color s, Color e, Color f) const {
  if (!admissible(p, q, e, level_) || !admissible(r, s, e, level_) ||
      !admissible(q, r, f, level_) || !admissible(s, p, f, level_))
    return Cyclotomic(level_.ell);
  Cyclotomic num = tet(p, q, e, r, s, f) * loop(f);
  Cyclotomic den = theta(p, s, f) * theta(q, r, f);
  return num * den.inv();
}

Cyclotomic sixj(Color a, Color b, Color c, Color d, Color e, Color f, const Level& ell) {
  return FusionData::get(ell.ell)->tet(a, b, e, c, d, f);
}

Cyclotomic theta(Color a, Color b, Color c, const Level& ell) {
  return FusionData::get(ell.ell)->theta(a, b, c);
}

std::vector<Color> torus_colors(const Level& ell, Color boundary) {
  std::vector<Color> out;
  for (Color mu : colors(ell))
    if (admissible(mu, mu, boundary, ell)) out.push_back(mu);
  return out;
}

namespace {

// Rescale so that (S T)^3 = S^2 holds on the nose. The raw proportionality
// scalar is a Gauss sum whose modulus matches the global dimension, so after
// this the remaining relation scalars are roots of unity.
CMatrix normalize_s(const CMatrix& s_raw, const CMatrix& t) {
  CMatrix s2 = s_raw * s_raw;
  auto s2_scalar = s2.scalar_of_identity();
  if (!s2_scalar || s2_scalar->is_zero())
    throw std::logic_error("S^2 is not a nonzero scalar");
  CMatrix st3 = (s_raw * t).pow(3);
  Cyclotomic c = st3.at(0, 0) * s2.at(0, 0).inv();
  if ((s2 * c) != st3) throw std::logic_error("(ST)^3 not proportional to S^2");
  return s_raw * c.inv();
}

}  // namespace

CMatrix s_matrix(const Level& ell, Color boundary) {
  const int L = ell.ell;
  if (boundary == 0) {
    auto cs = colors(ell);
    const int n = static_cast<int>(cs.size());
    CMatrix s(n, n, L);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        // [(lambda+1)(mu+1)] at the ribbon parameter.
        long prod = static_cast<long>(cs[i] + 1) * (cs[j] + 1);
        long m = prod % L;
        Cyclotomic acc(L);
        for (long k = 0; k < m; ++k) acc += Cyclotomic::zeta(L, 2 * (m - 1 - 2 * k));
        s.at(i, j) = acc;
      }
    std::vector<Cyclotomic> tw;
    for (Color c : cs) tw.push_back(twist(c, ell));
    return normalize_s(s, CMatrix::diagonal(tw));
  }
  if (boundary != 2) throw std::invalid_argument("unsupported boundary color for the torus");

  auto mus = torus_colors(ell, 2);
  std::vector<Cyclotomic> tw;
  for (Color c : mus) tw.push_back(twist(c, ell));
  if (mus.size() == 1) {
    CMatrix s(1, 1, L);
    s.at(0, 0) = Cyclotomic(L, Rational(1));
    return normalize_s(s, CMatrix::diagonal(tw));
  }
  if (mus.size() != 2)
    throw std::invalid_argument("once-punctured torus with boundary 2 is supported at levels 5 and 7 only");

  // Two loop colors. The twist along the dual curve is the unique braid
  // partner of T = diag(r1, r2) with the same spectrum; the rotation is then
  // S = T U T. Entries stay in the field.
  Cyclotomic l1 = twist(mus[0], ell), l2 = twist(mus[1], ell);
  Cyclotomic dlt = l2 - l1;
  if (dlt.is_zero()) throw std::logic_error("coincident twist eigenvalues");
  Cyclotomic dinv = dlt.inv();
  CMatrix u(2, 2, L);
  u.at(0, 0) = l2 * l2 * dinv;
  u.at(0, 1) = l1 * (l2 * l2 - l1 * l2 + l1 * l1) * dinv;
  u.at(1, 0) = -(l2 * dinv);
  u.at(1, 1) = -(l1 * l1 * dinv);
  CMatrix t = CMatrix::diagonal({l1, l2});
  return normalize_s(t * u * t, t);
}

}  // namespace qrigid
