#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "heegaard/exact.hpp"

namespace heegaard {

enum class Family { Alpha, Beta };

inline Family other(Family f) { return f == Family::Alpha ? Family::Beta : Family::Alpha; }
const char* family_name(Family f);

struct Curve {
  int id = -1;
  Family family = Family::Alpha;
  int index = 0;  // position within its family
};

// A transverse intersection point of one alpha-curve and one beta-curve.
struct Vertex {
  int id = -1;
  int alpha_curve = -1;
  int beta_curve = -1;
};

// Oriented curve piece. A segment arc runs vertex-to-vertex; a closed arc is a
// whole embedded circle (a curve disjoint from the other family).
struct Arc {
  int id = -1;
  int curve = -1;
  bool closed = false;
  int from = -1, to = -1;  // vertex ids; -1 when closed
};

struct SignedArc {
  int arc = -1;
  bool positive = true;
  friend bool operator==(const SignedArc&, const SignedArc&) = default;
  friend auto operator<=>(const SignedArc&, const SignedArc&) = default;
};

inline SignedArc pos(int arc) { return {arc, true}; }
inline SignedArc neg(int arc) { return {arc, false}; }
inline SignedArc operator-(SignedArc s) { return {s.arc, !s.positive}; }

// Boundary circle of a region, as the cyclic sequence of signed arcs walked
// with the region on the left. A closed arc always forms a singleton cycle.
using Cycle = std::vector<SignedArc>;

struct Region {
  int id = -1;
  int genus = 0;
  std::vector<Cycle> cycles;
};

struct MarkedPoint {
  int id = -1;
  int region = -1;
};

struct Diagram {
  int genus = 0;
  std::map<int, Curve> curves;
  std::map<int, Vertex> vertices;
  std::map<int, Arc> arcs;
  std::map<int, Region> regions;
  std::map<int, MarkedPoint> points;

  const Curve& curve(int id) const;
  const Vertex& vertex(int id) const;
  const Arc& arc(int id) const;
  const Region& region(int id) const;

  int curve_of_vertex(int vertex_id, Family f) const;
  std::vector<int> arcs_of_curve(int curve_id) const;            // by arc id
  std::vector<int> curves_of_family(Family f) const;             // by index
  int num_points() const { return static_cast<int>(points.size()); }

  int fresh_curve_id() const;
  int fresh_vertex_id() const;
  int fresh_arc_id() const;
  int fresh_region_id() const;
  int fresh_point_id() const;
};

// Rays at a vertex, indexed by the arc-end germ they follow: In points back
// along the arc entering the vertex, Out points forward along the arc leaving.
enum Germ : int { AlphaIn = 0, AlphaOut = 1, BetaIn = 2, BetaOut = 3 };

// succ[g] is the next ray counterclockwise after g; corner_region[g] is the
// region filling the wedge between g and succ[g].
struct Rotation {
  std::array<int, 4> succ{-1, -1, -1, -1};
  std::array<int, 4> corner_region{-1, -1, -1, -1};
};

// Per-vertex arc incidences: slot[family][0] = arc entering, [1] = leaving.
struct VertexArcs {
  std::array<std::array<int, 2>, 2> slot{{{-1, -1}, {-1, -1}}};
  int in_arc(Family f) const { return slot[f == Family::Alpha ? 0 : 1][0]; }
  int out_arc(Family f) const { return slot[f == Family::Alpha ? 0 : 1][1]; }
};

// Built by scanning arcs; throws SlotUse if some vertex slot is not used
// exactly once or an arc's curve disagrees with the vertex's curve.
std::map<int, VertexArcs> vertex_arcs(const Diagram& d);

// Derives the counterclockwise rotation at every vertex from the region
// corners; throws Corner when the corners do not assemble.
std::map<int, Rotation> vertex_rotations(const Diagram& d);

// +1 when the beta-out ray immediately follows the alpha-out ray in the
// counterclockwise rotation.
int crossing_sign(const Rotation& rot);

struct OccurrenceRef {
  int region = -1;
  int cycle = -1;
  int position = -1;
};

// Locates the unique +a and -a occurrence of every arc across region cycles.
struct OccurrenceIndex {
  std::map<int, OccurrenceRef> of_positive, of_negative;
  const OccurrenceRef& find(SignedArc s) const;
  int region_of(SignedArc s) const { return find(s).region; }
};

OccurrenceIndex occurrence_index(const Diagram& d);

struct IntersectionStats {
  int total = 0;                       // number of crossings k
  int zero_alpha = 0, zero_beta = 0;   // curves of each family missing crossings
  int min_alpha = 0;                   // smallest per-alpha-curve count, 0 without alphas
  std::vector<int> alpha_counts, beta_counts;  // by family index
  std::map<int, int> per_curve;                // curve id -> crossings
};

IntersectionStats intersection_stats(const Diagram& d);

// ---- validation ----

struct Violation {
  Code code;
  std::string message;
};

struct CutComponent {
  std::vector<int> regions;    // sorted region ids
  int boundary_circles = 0;    // curve sides glued to this component
  int genus = 0;
  std::vector<int> points;     // marked point ids inside
};

struct ValidationReport {
  bool ok = false;
  std::vector<Violation> violations;
  int chi = 0;
  int computed_genus = 0;
  std::vector<CutComponent> alpha_cut, beta_cut;  // present when ok
};

ValidationReport validate(const Diagram& d);

// Throws the first violation.
void require_valid(const Diagram& d);

// ---- text format ----

Diagram parse_diagram(std::istream& in);
Diagram parse_diagram_text(const std::string& text);
Diagram load_diagram(const std::string& path);

std::string serialize_diagram(const Diagram& d);
void save_diagram(const Diagram& d, const std::string& path);

// Renumbers every id into a breadth-first canonical order, so isomorphic
// labellings serialize identically.
Diagram canonicalize(const Diagram& d);

// ---- builders ----

// Genus-g diagram with one crossing per handle (every k_i = 1), one point.
Diagram standard_diagram(int genus);

// One handle per entry of ks: entry n >= 1 gives an alpha/beta pair crossing
// n times; entry 0 gives a disjoint parallel pair. extra_points adds that many
// further marked points, each inside its own closed alpha/beta pair.
Diagram block_diagram(const std::vector<int>& ks, int extra_points = 0);

// Applies move_budget random finger moves to `d`; the result is canonicalized.
// Finger moves leave the algebraic intersection matrix alone, so homology is
// preserved.
Diagram scramble_diagram(Diagram d, int move_budget, std::uint64_t seed);

// Applies move_budget random finger moves to the standard diagram; the result
// is canonicalized. points >= 1.
Diagram random_diagram(int genus, int points, int move_budget, std::uint64_t seed);

}  // namespace heegaard
