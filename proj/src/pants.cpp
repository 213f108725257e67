#include "qrigid/pants.hpp"

#include <algorithm>
#include <stdexcept>

namespace qrigid {

TrivalentGraph TrivalentGraph::regular(int level, std::vector<std::array<int, 3>> verts,
                                       std::vector<int> iota,
                                       std::map<int, Color> leg_colors) {
  TrivalentGraph g(level);
  g.kind_ = Kind::Regular;
  g.verts_ = std::move(verts);
  g.iota_ = std::move(iota);
  g.leg_colors_ = std::move(leg_colors);
  g.finish();
  return g;
}

TrivalentGraph TrivalentGraph::disk(int level, Color boundary) {
  TrivalentGraph g(level);
  g.kind_ = Kind::Disk;
  g.small_colors_ = {boundary};
  return g;
}

TrivalentGraph TrivalentGraph::annulus(int level, Color b0, Color b1) {
  TrivalentGraph g(level);
  g.kind_ = Kind::Annulus;
  g.small_colors_ = {b0, b1};
  return g;
}

TrivalentGraph TrivalentGraph::sphere(int level) {
  TrivalentGraph g(level);
  g.kind_ = Kind::Sphere;
  return g;
}

TrivalentGraph TrivalentGraph::torus(int level) {
  TrivalentGraph g(level);
  g.kind_ = Kind::Torus;
  return g;
}

void TrivalentGraph::finish() {
  const int m = num_half_edges();
  if (static_cast<int>(verts_.size()) * 3 != m)
    throw std::invalid_argument("half-edge count must be three per vertex");
  std::vector<int> seen(m, 0);
  for (const auto& v : verts_)
    for (int h : v) {
      if (h < 0 || h >= m) throw std::invalid_argument("half-edge id out of range");
      if (seen[h]++) throw std::invalid_argument("half-edge attached twice");
    }
  for (int h = 0; h < m; ++h) {
    if (iota_[h] < 0 || iota_[h] >= m || iota_[iota_[h]] != h)
      throw std::invalid_argument("iota is not an involution");
    if (iota_[h] == h) {
      auto it = leg_colors_.find(h);
      if (it == leg_colors_.end()) throw std::invalid_argument("leg without color");
      if (!valid_color(it->second, lev_)) throw std::invalid_argument("invalid leg color");
    } else if (leg_colors_.count(h)) {
      throw std::invalid_argument("edge half carries a leg color");
    }
  }
  edges_.clear();
  for (int h = 0; h < m; ++h)
    if (iota_[h] > h) edges_.emplace_back(h, iota_[h]);
  std::sort(edges_.begin(), edges_.end());
}

int TrivalentGraph::attach(int half_edge) const {
  for (size_t v = 0; v < verts_.size(); ++v)
    for (int h : verts_[v])
      if (h == half_edge) return static_cast<int>(v);
  throw std::invalid_argument("unattached half-edge");
}

bool TrivalentGraph::is_leg(int half_edge) const { return iota_[half_edge] == half_edge; }

int TrivalentGraph::edge_index(int half_edge) const {
  for (size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].first == half_edge || edges_[i].second == half_edge)
      return static_cast<int>(i);
  return -1;
}

Color TrivalentGraph::half_color(int h, const Coloring& coloring) const {
  if (is_leg(h)) return leg_colors_.at(h);
  return coloring[edge_index(h)];
}

bool TrivalentGraph::vertex_admissible(int v, const Coloring& coloring) const {
  const auto& t = verts_[v];
  return admissible(half_color(t[0], coloring), half_color(t[1], coloring),
                    half_color(t[2], coloring), lev_);
}

namespace {

struct PendingBuild {
  std::vector<std::array<int, 3>> verts;
  std::vector<int> iota;
  std::map<int, Color> legs;
  int next_half = 0;

  int fresh() {
    iota.push_back(next_half);
    return next_half++;
  }
  int leg(Color c) {
    int h = fresh();
    legs[h] = c;
    return h;
  }
  std::pair<int, int> edge() {
    int a = fresh(), b = fresh();
    iota[a] = b;
    iota[b] = a;
    return {a, b};
  }
};

}  // namespace

TrivalentGraph standard_graph(int genus, const std::vector<Color>& boundary, int level) {
  Level lev(level);
  const int n = static_cast<int>(boundary.size());
  for (Color c : boundary)
    if (!valid_color(c, lev)) throw std::invalid_argument("invalid boundary color");
  if (genus < 0) throw std::invalid_argument("negative genus");

  if (genus == 0 && n == 0) return TrivalentGraph::sphere(level);
  if (genus == 0 && n == 1) return TrivalentGraph::disk(level, boundary[0]);
  if (genus == 0 && n == 2) return TrivalentGraph::annulus(level, boundary[0], boundary[1]);
  if (genus == 1 && n == 0) return TrivalentGraph::torus(level);

  PendingBuild b;
  // Pendants: one entry per boundary leg, then one per handle. Each handle is
  // a loop vertex joined to the spine by one edge.
  struct Pendant { bool loop; Color color; };
  std::vector<Pendant> pendants;
  for (Color c : boundary) pendants.push_back({false, c});
  for (int i = 0; i < genus; ++i) pendants.push_back({true, 0});
  const int p = static_cast<int>(pendants.size());

  auto attach_pendant = [&](const Pendant& pd) -> int {
    // Returns the half-edge to plug into a spine vertex.
    if (!pd.loop) return b.leg(pd.color);
    auto [cup, cdown] = b.edge();
    auto [la, lb] = b.edge();
    b.verts.push_back({la, lb, cdown});
    return cup;
  };

  if (p == 1) {
    throw std::invalid_argument("unrealizable surface");  // handled above for g<=1
  }
  if (p == 2) {
    if (genus == 1) {
      // One vertex: loop plus one pendant (leg or second loop handled below).
      auto [la, lb] = b.edge();
      int h = attach_pendant(pendants[0]);
      b.verts.push_back({h, la, lb});
      return TrivalentGraph::regular(level, b.verts, b.iota, b.legs);
    }
    if (genus == 2) {
      auto [c1, c2] = b.edge();
      auto [la, lb] = b.edge();
      auto [lc, ld] = b.edge();
      b.verts.push_back({la, lb, c1});
      b.verts.push_back({lc, ld, c2});
      return TrivalentGraph::regular(level, b.verts, b.iota, b.legs);
    }
    throw std::invalid_argument("unrealizable surface");
  }

  // Caterpillar spine with p - 2 vertices.
  std::vector<int> plugs;
  for (const auto& pd : pendants) plugs.push_back(attach_pendant(pd));
  std::vector<std::pair<int, int>> spine;
  for (int i = 0; i + 3 < p; ++i) spine.push_back(b.edge());
  const int k = p - 2;
  for (int i = 0; i < k; ++i) {
    std::array<int, 3> tri{};
    int slot = 0;
    if (i == 0) tri[slot++] = plugs[0];
    if (i > 0) tri[slot++] = spine[i - 1].second;
    tri[slot++] = plugs[i + 1];
    if (i + 1 < k) tri[slot++] = spine[i].first;
    else tri[slot++] = plugs[p - 1];
    b.verts.push_back(tri);
  }
  return TrivalentGraph::regular(level, b.verts, b.iota, b.legs);
}

namespace {

void color_dfs(const TrivalentGraph& g, Coloring& partial, size_t next,
               const std::vector<std::vector<int>>& vertex_ready,
               const std::vector<Color>& palette, std::vector<Coloring>* out,
               long* count) {
  if (next == g.edges().size()) {
    if (out) out->push_back(partial);
    ++*count;
    return;
  }
  for (Color c : palette) {
    partial[next] = c;
    bool ok = true;
    for (int v : vertex_ready[next])
      if (!g.vertex_admissible(v, partial)) { ok = false; break; }
    if (ok) color_dfs(g, partial, next + 1, vertex_ready, palette, out, count);
  }
  partial[next] = -1;
}

long enumerate_impl(const TrivalentGraph& g, std::vector<Coloring>* out) {
  switch (g.kind()) {
    case TrivalentGraph::Kind::Sphere:
      if (out) out->push_back({});
      return 1;
    case TrivalentGraph::Kind::Disk:
      if (g.small_colors()[0] == 0) { if (out) out->push_back({}); return 1; }
      return 0;
    case TrivalentGraph::Kind::Annulus:
      if (g.small_colors()[0] == g.small_colors()[1]) { if (out) out->push_back({}); return 1; }
      return 0;
    case TrivalentGraph::Kind::Torus: {
      // Loop colorings (mu, mu, 0), all admissible.
      long n = 0;
      for (Color mu : colors(g.lev())) {
        if (out) out->push_back({mu});
        ++n;
      }
      return n;
    }
    case TrivalentGraph::Kind::Regular:
      break;
  }
  // A vertex can be checked once all its incident edge colors are assigned.
  const size_t ne = g.edges().size();
  std::vector<std::vector<int>> vertex_ready(std::max<size_t>(ne, 1));
  for (int v = 0; v < g.num_vertices(); ++v) {
    int last = -1;
    for (int h : g.vertices()[v]) {
      int e = g.is_leg(h) ? -1 : g.edge_index(h);
      last = std::max(last, e);
    }
    if (last < 0) {
      // All legs: constant admissibility.
      Coloring empty;
      if (!g.vertex_admissible(v, empty)) return 0;
    } else {
      vertex_ready[last].push_back(v);
    }
  }
  if (ne == 0) {
    if (out) out->push_back({});
    return 1;
  }
  Coloring partial(ne, -1);
  long count = 0;
  color_dfs(g, partial, 0, vertex_ready, colors(g.lev()), out, &count);
  return count;
}

}  // namespace

std::vector<Coloring> enumerate_colorings(const TrivalentGraph& g) {
  std::vector<Coloring> out;
  enumerate_impl(g, &out);
  return out;
}

long count_colorings(const TrivalentGraph& g) { return enumerate_impl(g, nullptr); }

long dim_block(int genus, const std::vector<Color>& boundary, int level) {
  return count_colorings(standard_graph(genus, boundary, level));
}

TrivalentGraph cap_zero(const TrivalentGraph& g, int leg) {
  if (g.kind() == TrivalentGraph::Kind::Disk) {
    if (g.small_colors()[0] != 0) throw std::invalid_argument("leg not colored 0");
    return TrivalentGraph::sphere(g.level());
  }
  if (g.kind() == TrivalentGraph::Kind::Annulus) {
    if (g.small_colors()[0] == 0) return TrivalentGraph::disk(g.level(), g.small_colors()[1]);
    if (g.small_colors()[1] == 0) return TrivalentGraph::disk(g.level(), g.small_colors()[0]);
    throw std::invalid_argument("leg not colored 0");
  }
  if (g.kind() != TrivalentGraph::Kind::Regular)
    throw std::invalid_argument("no leg to cap");
  if (!g.is_leg(leg) || g.leg_colors().at(leg) != 0)
    throw std::invalid_argument("leg not colored 0");

  const int v = g.attach(leg);
  std::array<int, 3> tri = g.vertices()[v];
  std::vector<int> others;
  for (int h : tri)
    if (h != leg) others.push_back(h);
  int x = others[0], y = others[1];

  const bool x_leg = g.is_leg(x), y_leg = g.is_leg(y);
  if (x_leg && y_leg)
    return TrivalentGraph::annulus(g.level(), g.leg_colors().at(x), g.leg_colors().at(y));
  if (!x_leg && g.iota()[x] == y)
    return TrivalentGraph::torus(g.level());

  // Rebuild without vertex v. The pair (x, y) is spliced: leg color moves
  // across, or two edges join into one.
  std::vector<std::array<int, 3>> verts;
  std::vector<int> iota = g.iota();
  std::map<int, Color> legs = g.leg_colors();
  legs.erase(leg);

  auto splice = [&](int a, int other) {
    // a = half at v, other = its remaining partner data
    (void)a; (void)other;
  };
  (void)splice;

  if (x_leg || y_leg) {
    int the_leg = x_leg ? x : y;
    int the_edge_half = x_leg ? y : x;
    int far = iota[the_edge_half];
    legs[far] = legs.at(the_leg);
    legs.erase(the_leg);
    iota[far] = far;
  } else {
    int fx = iota[x], fy = iota[y];
    iota[fx] = fy;
    iota[fy] = fx;
  }

  for (int w = 0; w < g.num_vertices(); ++w)
    if (w != v) verts.push_back(g.vertices()[w]);

  // Compact half-edge ids.
  std::vector<int> old_ids;
  for (const auto& t : verts)
    for (int h : t) old_ids.push_back(h);
  std::sort(old_ids.begin(), old_ids.end());
  std::map<int, int> renumber;
  for (size_t i = 0; i < old_ids.size(); ++i) renumber[old_ids[i]] = static_cast<int>(i);

  std::vector<std::array<int, 3>> verts2;
  for (const auto& t : verts)
    verts2.push_back({renumber.at(t[0]), renumber.at(t[1]), renumber.at(t[2])});
  std::vector<int> iota2(old_ids.size());
  std::map<int, Color> legs2;
  for (int h : old_ids) iota2[renumber.at(h)] = renumber.at(iota[h]);
  for (auto [h, c] : legs) legs2[renumber.at(h)] = c;
  return TrivalentGraph::regular(g.level(), verts2, iota2, legs2);
}

TrivalentGraph flip(const TrivalentGraph& g, int edge) {
  if (g.kind() != TrivalentGraph::Kind::Regular)
    throw std::invalid_argument("non-flippable edge");
  if (edge < 0 || edge >= static_cast<int>(g.edges().size()))
    throw std::invalid_argument("unknown edge");
  auto [ha, hb] = g.edges()[edge];
  int u = g.attach(ha), v = g.attach(hb);
  if (u == v) throw std::invalid_argument("non-flippable edge");

  auto rotate_last = [](std::array<int, 3> t, int h) {
    while (t[2] != h) t = {t[1], t[2], t[0]};
    return t;
  };
  auto rotate_first = [](std::array<int, 3> t, int h) {
    while (t[0] != h) t = {t[1], t[2], t[0]};
    return t;
  };
  std::array<int, 3> tu = rotate_last(g.vertices()[u], ha);   // (h1, h2, ha)
  std::array<int, 3> tv = rotate_first(g.vertices()[v], hb);  // (hb, h3, h4)
  int h1 = tu[0], h2 = tu[1], h3 = tv[1], h4 = tv[2];

  std::vector<std::array<int, 3>> verts = g.vertices();
  verts[u] = {h2, h3, ha};
  verts[v] = {h4, h1, hb};
  return TrivalentGraph::regular(g.level(), verts, g.iota(), g.leg_colors());
}

// ---- rational linear algebra for the Maslov form ---------------------------

namespace {

using QMat = std::vector<std::vector<Rational>>;

int qrank(QMat m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int p = -1;
    for (int i = rank; i < rows; ++i)
      if (m[i][col] != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(m[p], m[rank]);
    Rational inv = 1 / m[rank][col];
    for (int j = col; j < cols; ++j) m[rank][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == rank || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (int j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Rational>> qkernel(QMat m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  std::vector<int> pivots;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int p = -1;
    for (int i = rank; i < rows; ++i)
      if (m[i][col] != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(m[p], m[rank]);
    Rational inv = 1 / m[rank][col];
    for (int j = col; j < cols; ++j) m[rank][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == rank || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (int j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    pivots.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (int fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[fc] = 1;
    for (int r = 0; r < rank; ++r) v[pivots[r]] = -m[r][fc];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Symplectic pairing on Q^(2g): <e_i, e_(g+i)> = 1.
Rational symp(const std::vector<Rational>& a, const std::vector<Rational>& b, int genus) {
  Rational acc(0);
  for (int i = 0; i < genus; ++i)
    acc += a[i] * b[genus + i] - a[genus + i] * b[i];
  return acc;
}

}  // namespace

Lagrangian::Lagrangian(int genus_in, std::vector<std::vector<Rational>> columns)
    : genus(genus_in), cols(std::move(columns)) {
  if (genus <= 0) throw std::invalid_argument("genus must be positive");
  if (static_cast<int>(cols.size()) != 2 * genus)
    throw std::invalid_argument("lagrangian matrix must have 2g rows");
  for (const auto& row : cols)
    if (static_cast<int>(row.size()) != genus)
      throw std::invalid_argument("lagrangian matrix must have g columns");
  // Columns independent and pairwise symplectically orthogonal.
  QMat m(2 * genus, std::vector<Rational>(genus));
  for (int i = 0; i < 2 * genus; ++i)
    for (int j = 0; j < genus; ++j) m[i][j] = cols[i][j];
  if (qrank(m) != genus) throw std::invalid_argument("lagrangian columns dependent");
  auto column = [&](int j) {
    std::vector<Rational> c(2 * genus);
    for (int i = 0; i < 2 * genus; ++i) c[i] = cols[i][j];
    return c;
  };
  for (int i = 0; i < genus; ++i)
    for (int j = i + 1; j < genus; ++j)
      if (symp(column(i), column(j), genus) != 0)
        throw std::invalid_argument("intersection form does not vanish on the span");
}

Lagrangian Lagrangian::span(int genus, const std::vector<std::vector<Rational>>& columns) {
  // columns given as vectors of length 2g
  std::vector<std::vector<Rational>> m(2 * genus, std::vector<Rational>(columns.size()));
  for (size_t j = 0; j < columns.size(); ++j) {
    if (static_cast<int>(columns[j].size()) != 2 * genus)
      throw std::invalid_argument("column has wrong length");
    for (int i = 0; i < 2 * genus; ++i) m[i][j] = columns[j][i];
  }
  return Lagrangian(genus, std::move(m));
}

int maslov(const Lagrangian& l0, const Lagrangian& l1, const Lagrangian& l2) {
  const int g = l0.genus;
  if (l1.genus != g || l2.genus != g) throw std::invalid_argument("dimension mismatch");
  // Kernel of [L0 L1 L2] : Q^(3g) -> Q^(2g).
  QMat m(2 * g, std::vector<Rational>(3 * g));
  const Lagrangian* ls[3] = {&l0, &l1, &l2};
  for (int blk = 0; blk < 3; ++blk)
    for (int i = 0; i < 2 * g; ++i)
      for (int j = 0; j < g; ++j) m[i][blk * g + j] = ls[blk]->cols[i][j];
  auto kernel = qkernel(std::move(m));
  const int k = static_cast<int>(kernel.size());
  if (k == 0) return 0;

  auto image_part = [&](const std::vector<Rational>& v, int blk) {
    std::vector<Rational> u(2 * g, Rational(0));
    for (int i = 0; i < 2 * g; ++i)
      for (int j = 0; j < g; ++j) u[i] += ls[blk]->cols[i][j] * v[blk * g + j];
    return u;
  };

  // Symmetrized form B(u, v) = (q(u+v) - q(u) - q(v)) / 2 with q(u) = u0 . u1.
  QMat b(k, std::vector<Rational>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      auto u0 = image_part(kernel[i], 0);
      auto v1 = image_part(kernel[j], 1);
      auto v0 = image_part(kernel[j], 0);
      auto u1 = image_part(kernel[i], 1);
      b[i][j] = (symp(u0, v1, g) + symp(v0, u1, g)) / 2;
    }

  // Symmetric Gaussian diagonalization over Q; signature from the diagonal.
  int pos = 0, neg = 0;
  QMat s = b;
  int n = k;
  for (int i = 0; i < n; ++i) {
    if (s[i][i] == 0) {
      int p = -1;
      for (int j = i + 1; j < n; ++j)
        if (s[j][i] != 0) { p = j; break; }
      if (p < 0) continue;  // zero row/column pair in the remaining block
      // Add row/column p into i to create a nonzero diagonal entry.
      for (int j = 0; j < n; ++j) s[i][j] += s[p][j];
      for (int j = 0; j < n; ++j) s[j][i] += s[j][p];
    }
    if (s[i][i] == 0) continue;
    Rational d = s[i][i];
    if (d > 0) ++pos; else ++neg;
    for (int j = i + 1; j < n; ++j) {
      if (s[j][i] == 0) continue;
      Rational f = s[j][i] / d;
      for (int l = 0; l < n; ++l) s[j][l] -= f * s[i][l];
      for (int l = 0; l < n; ++l) s[l][j] -= f * s[l][i];
    }
  }
  return pos - neg;
}

FramedMapping compose_framed(const FramedMapping& m1, const FramedMapping& m2,
                             const Lagrangian& f1_l0, const Lagrangian& l1,
                             const Lagrangian& f2inv_l2) {
  FramedMapping out;
  out.label = m2.label + "*" + m1.label;
  out.framing = m1.framing + m2.framing - maslov(f1_l0, l1, f2inv_l2);
  return out;
}

}  // namespace qrigid
