#include "heegaard/diagram.hpp"

namespace heegaard {

// Handles are built on a flat torus with the alpha curve along (1,0) and the
// beta curve along (1,n): n crossings, n parallelogram faces, of which one is
// donated to the shared base region. A 0-entry handle carries a disjoint
// parallel pair instead. Extra marked points sit inside concentric
// alpha/beta circle pairs drawn in the base region.
Diagram block_diagram(const std::vector<int>& ks, int extra_points) {
  const int g = static_cast<int>(ks.size());
  require(extra_points >= 0, Code::Precondition, "extra_points must be nonnegative");
  for (int n : ks) require(n >= 0, Code::Precondition, "crossing counts must be nonnegative");

  Diagram d;
  d.genus = g;
  const int per_family = g + extra_points;
  for (int i = 0; i < per_family; ++i) {
    d.curves[i] = {i, Family::Alpha, i};
    d.curves[per_family + i] = {per_family + i, Family::Beta, i};
  }

  Region base;
  base.id = 0;
  base.genus = 0;
  int next_vertex = 0, next_arc = 0, next_region = 1;

  for (int i = 0; i < g; ++i) {
    const int n = ks[i];
    const int ac = i, bc = per_family + i;
    if (n == 0) {
      int x = next_arc++, y = next_arc++;
      d.arcs[x] = {x, ac, true, -1, -1};
      d.arcs[y] = {y, bc, true, -1, -1};
      int annulus = next_region++;
      d.regions[annulus] = {annulus, 0, {{pos(x)}, {neg(y)}}};
      base.cycles.push_back({neg(x)});
      base.cycles.push_back({pos(y)});
      continue;
    }
    int v0 = next_vertex;
    next_vertex += n;
    int a0 = next_arc;
    next_arc += n;
    int b0 = next_arc;
    next_arc += n;
    for (int j = 0; j < n; ++j) {
      d.vertices[v0 + j] = {v0 + j, ac, bc};
      d.arcs[a0 + j] = {a0 + j, ac, false, v0 + j, v0 + (j + 1) % n};
      d.arcs[b0 + j] = {b0 + j, bc, false, v0 + j, v0 + (j + 1) % n};
    }
    auto face = [&](int j) -> Cycle {
      return {pos(a0 + j), pos(b0 + (j + 1) % n), neg(a0 + (j + 1) % n), neg(b0 + j)};
    };
    for (int j = 0; j + 1 < n; ++j) {
      int f = next_region++;
      d.regions[f] = {f, 0, {face(j)}};
    }
    base.cycles.push_back(face(n - 1));
  }

  for (int e = 0; e < extra_points; ++e) {
    const int ac = g + e, bc = per_family + g + e;
    int x = next_arc++, y = next_arc++;
    d.arcs[x] = {x, ac, true, -1, -1};
    d.arcs[y] = {y, bc, true, -1, -1};
    int annulus = next_region++;
    int disk = next_region++;
    d.regions[annulus] = {annulus, 0, {{neg(y)}, {pos(x)}}};
    d.regions[disk] = {disk, 0, {{pos(y)}}};
    base.cycles.push_back({neg(x)});
    d.points[1 + e] = {1 + e, disk};
  }

  d.regions[0] = std::move(base);
  d.points[0] = {0, 0};
  return d;
}

Diagram standard_diagram(int genus) {
  require(genus >= 0, Code::Precondition, "genus must be nonnegative");
  return block_diagram(std::vector<int>(genus, 1), 0);
}

}  // namespace heegaard
