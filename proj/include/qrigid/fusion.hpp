#ifndef QRIGID_FUSION_HPP
#define QRIGID_FUSION_HPP

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "qrigid/cmatrix.hpp"
#include "qrigid/cyclo.hpp"

namespace qrigid {

struct Level {
  int ell = 0;
  bool prime = false;

  explicit Level(int ell_in);
};

// Colors are the even integers 0, 2, ..., ell-3.
using Color = int;

std::vector<Color> colors(const Level& ell);
bool valid_color(Color c, const Level& ell);

// Triangle inequalities plus the level cutoff a+b+c < 2*ell-2.
bool admissible(Color a, Color b, Color c, const Level& ell);

// Dehn twist eigenvalue r_c = zeta^(c(c+2) mod ell). twist(0) = 1.
Cyclotomic twist(Color c, const Level& ell);

// [n] = (zeta^n - zeta^-n) / (zeta - zeta^-1). Sign convention:
// [ell - n] = -[n].
Cyclotomic quantum_int(long n, const Level& ell);

struct PropertiesReport {
  bool property_one = false;    // every color pairs with some mu, (c, mu, mu) admissible
  bool property_two = false;    // three-holed-sphere blocks are 0- or 1-dimensional
  bool property_three = false;  // twist values pairwise distinct
  std::vector<std::pair<Color, Color>> twist_collisions;
};

PropertiesReport check_properties(const Level& ell);

/*
 * Recoupling data of the level-ell theory. Everything is expressed through
 * quantum integers at the square of the twist root (the ribbon parameter),
 * so all values are exact elements of Q(zeta_ell).
 *
 * Tables are append-only caches guarded by a mutex; queries are safe from
 * any number of threads.
 */
class FusionData {
 public:
  static std::shared_ptr<const FusionData> get(int ell);

  const Level& level() const { return level_; }
  const std::vector<Color>& color_set() const { return colors_; }

  // Loop value of a color, nonzero for every color in the set.
  Cyclotomic loop(Color a) const;

  // Theta-graph evaluation; exact zero on inadmissible triples.
  Cyclotomic theta(Color a, Color b, Color c) const;

  // Tetrahedral network with vertex triples (a,b,e), (c,d,e), (a,d,f),
  // (b,c,f). Fully symmetric under its tetrahedral symmetry group; exact
  // zero when any vertex triple is inadmissible.
  Cyclotomic tet(Color a, Color b, Color e, Color c, Color d, Color f) const;

  // Change-of-basis coefficient between the two pairings of a four-holed
  // sphere with boundary (p, q, r, s): old internal color e groups (p,q),
  // new color f groups (q,r). Involutive as a matrix in this normalization.
  Cyclotomic fmove(Color p, Color q, Color r, Color s, Color e, Color f) const;

 private:
  explicit FusionData(int ell);

  Cyclotomic qint(long n) const;        // [n] at the ribbon parameter
  Cyclotomic qfact(long n) const;       // [n]!

  Level level_;
  std::vector<Color> colors_;
  Cyclotomic q_;                         // zeta^2
  mutable std::mutex mu_;
  mutable std::map<long, Cyclotomic> qint_cache_;
  mutable std::map<long, Cyclotomic> qfact_cache_;
  mutable std::map<std::array<int, 6>, Cyclotomic> tet_cache_;
};

// The symmetric 6j value: tet with the standard vertex-triple layout.
Cyclotomic sixj(Color a, Color b, Color c, Color d, Color e, Color f, const Level& ell);
Cyclotomic theta(Color a, Color b, Color c, const Level& ell);

// Torus S-matrix. boundary 0: indexed by all colors, symmetric,
// S^2 = scalar * identity exactly. boundary 2: indexed by the colors mu with
// (mu, mu, 2) admissible; supported at ell = 5 and ell = 7.
CMatrix s_matrix(const Level& ell, Color boundary);

// Colors mu such that (mu, mu, boundary) is admissible, in increasing order.
std::vector<Color> torus_colors(const Level& ell, Color boundary);

}  // namespace qrigid

#endif
