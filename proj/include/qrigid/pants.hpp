#ifndef QRIGID_PANTS_HPP
#define QRIGID_PANTS_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "qrigid/fusion.hpp"

namespace qrigid {

/*
 * Combinatorial pants decompositions. A regular graph is trivalent: every
 * vertex carries an ordered triple of half-edges (the order encodes the
 * boundary cyclic order and is what makes flips deterministic), iota is an
 * involution whose 2-cycles are edges and whose fixed points are legs, and
 * each leg carries a color. Surfaces too small to admit a trivalent vertex
 * are carried as explicit exceptional kinds with their own counting rules.
 */
class TrivalentGraph {
 public:
  enum class Kind { Regular, Disk, Annulus, Sphere, Torus };

  static TrivalentGraph regular(int level,
                                std::vector<std::array<int, 3>> verts,
                                std::vector<int> iota,
                                std::map<int, Color> leg_colors);
  static TrivalentGraph disk(int level, Color boundary);
  static TrivalentGraph annulus(int level, Color b0, Color b1);
  static TrivalentGraph sphere(int level);
  static TrivalentGraph torus(int level);

  Kind kind() const { return kind_; }
  int level() const { return level_; }
  const Level& lev() const { return lev_; }

  int num_vertices() const { return static_cast<int>(verts_.size()); }
  int num_half_edges() const { return static_cast<int>(iota_.size()); }
  const std::vector<std::array<int, 3>>& vertices() const { return verts_; }
  const std::vector<int>& iota() const { return iota_; }
  const std::map<int, Color>& leg_colors() const { return leg_colors_; }
  const std::vector<Color>& small_colors() const { return small_colors_; }

  int attach(int half_edge) const;             // vertex of a half-edge
  bool is_leg(int half_edge) const;
  // Edges as (min half, max half), sorted by the min half. Colorings are
  // indexed against this order.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int edge_index(int half_edge) const;         // -1 for legs
  Color half_color(int half_edge, const std::vector<Color>& coloring) const;

  bool vertex_admissible(int v, const std::vector<Color>& coloring) const;

 private:
  Kind kind_ = Kind::Regular;
  int level_ = 5;
  Level lev_{5};
  std::vector<std::array<int, 3>> verts_;
  std::vector<int> iota_;
  std::map<int, Color> leg_colors_;
  std::vector<Color> small_colors_;
  std::vector<std::pair<int, int>> edges_;

  explicit TrivalentGraph(int level) : level_(level), lev_(level) {}
  void finish();
};

using Coloring = std::vector<Color>;  // one color per edge, in edge order

// Canonical graph for the surface of genus g with the given boundary colors:
// a caterpillar spine with g loop gadgets hung after the legs.
TrivalentGraph standard_graph(int genus, const std::vector<Color>& boundary, int level);

// All admissible colorings in lexicographic order (deterministic).
std::vector<Coloring> enumerate_colorings(const TrivalentGraph& g);
long count_colorings(const TrivalentGraph& g);

long dim_block(int genus, const std::vector<Color>& boundary, int level);

// Cap a 0-colored leg with a disk. Counting is preserved; the result may be
// an exceptional kind when no trivalent vertex is left.
TrivalentGraph cap_zero(const TrivalentGraph& g, int leg);

// Elementary move on an internal non-loop edge: regroups the four adjacent
// strands (h1 h2 | h3 h4) -> (h2 h3 | h4 h1). Edge and half-edge ids are
// stable, so colorings of the two graphs share their indexing.
TrivalentGraph flip(const TrivalentGraph& g, int edge);

// ---- Lagrangian / framing bookkeeping ------------------------------------

// Columns span a half-dimensional isotropic subspace of Q^(2g) with the
// symplectic form pairing e_i with e_(g+i).
struct Lagrangian {
  int genus = 0;
  std::vector<std::vector<Rational>> cols;  // 2g rows, g columns

  Lagrangian(int genus, std::vector<std::vector<Rational>> columns);
  static Lagrangian span(int genus, const std::vector<std::vector<Rational>>& columns);
};

// Signature of the pairing (u0, u1, u2) -> u0 . u1 on the kernel of the sum
// map L0 + L1 + L2 -> Q^(2g). Integer, antisymmetric in its arguments.
int maslov(const Lagrangian& l0, const Lagrangian& l1, const Lagrangian& l2);

struct FramedMapping {
  std::string label;
  long framing = 0;
};

// Composition framing: n1 + n2 - maslov(f1(L0), L1, f2^{-1}(L2)), with the
// Lagrangian images supplied by the caller.
FramedMapping compose_framed(const FramedMapping& m1, const FramedMapping& m2,
                             const Lagrangian& f1_l0, const Lagrangian& l1,
                             const Lagrangian& f2inv_l2);

}  // namespace qrigid

#endif
