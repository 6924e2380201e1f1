#include "heegaard/winding.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "heegaard/moves.hpp"
#include "heegaard/presentation.hpp"

namespace heegaard {

namespace {

// Routing complex: the diagram's regions refined by the corridors of already
// routed dual curves. Walls are arc pieces (id space shared with corridor
// walls, which carry wall_arc -1 and are never crossed again); chambers hold
// boundary cycles of wall tokens exactly like regions hold arcs.
struct Chamber {
  std::vector<Cycle> cycles;
};

struct Router {
  const Diagram* d = nullptr;
  std::map<int, Chamber> chambers;
  std::map<int, std::array<int, 2>> wall_side;  // chamber holding +w, holding -w
  std::map<int, int> wall_arc;                  // wall -> original arc; -1 for corridors
  std::map<int, int> chamber_region;            // chamber -> original region
  std::map<int, std::vector<int>> arc_pieces;   // pieces in order along each arc
  std::map<int, std::vector<int>> arc_cuts;     // cut ids in order along each arc
  std::map<int, std::array<int, 2>> cut_walls;  // cut -> {piece before, piece after}
  int next_wall = 0, next_chamber = 0, next_cut = 0;

  bool crossable(int wall) const {
    int a = wall_arc.at(wall);
    return a >= 0 && d->curve(d->arc(a).curve).family == Family::Beta;
  }
};

Router make_router(const Diagram& d) {
  Router rt;
  rt.d = &d;
  for (const auto& [rid, r] : d.regions) {
    rt.chambers[rid] = {r.cycles};
    rt.chamber_region[rid] = rid;
  }
  for (const auto& [aid, a] : d.arcs) {
    (void)a;
    rt.wall_arc[aid] = aid;
    rt.arc_pieces[aid] = {aid};
    rt.arc_cuts[aid] = {};
  }
  for (const auto& [cid, ch] : rt.chambers)
    for (const Cycle& cyc : ch.cycles)
      for (SignedArc s : cyc) rt.wall_side[s.arc][s.positive ? 0 : 1] = cid;
  rt.next_wall = d.fresh_arc_id();
  rt.next_chamber = d.fresh_region_id();
  return rt;
}

// Replaces the unique occurrence of `tok` in chamber `ch` by `repl` in place.
void rewrite_token(Router& rt, int ch, SignedArc tok, const std::vector<SignedArc>& repl) {
  for (Cycle& cyc : rt.chambers.at(ch).cycles)
    for (size_t i = 0; i < cyc.size(); ++i)
      if (cyc[i] == tok) {
        cyc.erase(cyc.begin() + i);
        cyc.insert(cyc.begin() + i, repl.begin(), repl.end());
        return;
      }
  fail(Code::Internal, "router lost a wall token");
}

// Splits wall `w` at a new transverse cut point; maintains the ordered piece
// and cut lists of the underlying arc.
void cut_wall(Router& rt, int w, int cut_id) {
  int orig = rt.wall_arc.at(w);
  require(orig >= 0, Code::Internal, "cannot cut a corridor wall");
  std::array<int, 2> sides = rt.wall_side.at(w);
  bool virgin_closed = rt.d->arc(orig).closed && rt.arc_cuts.at(orig).empty();
  if (virgin_closed) {
    // The closed wall opens into a single piece with both endpoints at the cut.
    int w2 = rt.next_wall++;
    rewrite_token(rt, sides[0], pos(w), {pos(w2)});
    rewrite_token(rt, sides[1], neg(w), {neg(w2)});
    rt.wall_side[w2] = sides;
    rt.wall_side.erase(w);
    rt.wall_arc[w2] = orig;
    rt.wall_arc.erase(w);
    rt.arc_pieces[orig] = {w2};
    rt.arc_cuts[orig] = {cut_id};
    rt.cut_walls[cut_id] = {w2, w2};
    return;
  }
  int pre = rt.next_wall++, post = rt.next_wall++;
  rewrite_token(rt, sides[0], pos(w), {pos(pre), pos(post)});
  rewrite_token(rt, sides[1], neg(w), {neg(post), neg(pre)});
  rt.wall_side[pre] = sides;
  rt.wall_side[post] = sides;
  rt.wall_side.erase(w);
  rt.wall_arc[pre] = orig;
  rt.wall_arc[post] = orig;
  rt.wall_arc.erase(w);
  std::vector<int>& pieces = rt.arc_pieces.at(orig);
  auto it = std::find(pieces.begin(), pieces.end(), w);
  require(it != pieces.end(), Code::Internal, "wall missing from its arc's piece list");
  int t = static_cast<int>(it - pieces.begin());
  pieces[t] = pre;
  pieces.insert(pieces.begin() + t + 1, post);
  std::vector<int>& cuts = rt.arc_cuts.at(orig);
  // Open arcs: cuts[i] sits between pieces[i] and pieces[i+1]. Closed arcs:
  // pieces[i] sits between cuts[i] and cuts[i+1 mod n].
  int at = rt.d->arc(orig).closed ? t + 1 : t;
  cuts.insert(cuts.begin() + at, cut_id);
  rt.cut_walls[cut_id] = {pre, post};
}

struct Gap {
  int cycle = -1, index = -1;  // gap sits before token `index`
};

// The boundary gap of chamber `ch` at `cut`, on the given side of the wall.
Gap find_gap(const Router& rt, int ch, int cut, int side) {
  auto [preW, postW] = rt.cut_walls.at(cut);
  const Chamber& c = rt.chambers.at(ch);
  if (preW == postW) {
    SignedArc tok{preW, side > 0};
    for (int ci = 0; ci < static_cast<int>(c.cycles.size()); ++ci)
      if (c.cycles[ci].size() == 1 && c.cycles[ci][0] == tok) return {ci, 0};
    fail(Code::Internal, "opened closed wall is not a whole chamber boundary");
  }
  SignedArc needle = side > 0 ? pos(postW) : neg(preW);
  SignedArc prev = side > 0 ? pos(preW) : neg(postW);
  for (int ci = 0; ci < static_cast<int>(c.cycles.size()); ++ci) {
    const Cycle& cyc = c.cycles[ci];
    int n = static_cast<int>(cyc.size());
    for (int i = 0; i < n; ++i)
      if (cyc[i] == needle) {
        require(cyc[(i + n - 1) % n] == prev, Code::Internal, "cut pieces separated at their gap");
        return {ci, i};
      }
  }
  fail(Code::Internal, "cut gap missing from the chamber boundary");
}

// Slits chamber `ch` along the routed corridor from `entry` to `exit`. A slit
// within one cycle detaches a collar disk holding the entry-to-exit span; a
// slit between two cycles merges them without splitting the chamber.
void slit_chamber(Router& rt, int ch, Gap entry, Gap exit) {
  int t = rt.next_wall++;
  rt.wall_arc[t] = -1;
  Chamber& c = rt.chambers.at(ch);
  if (entry.cycle == exit.cycle) {
    const Cycle cyc = c.cycles[entry.cycle];
    int n = static_cast<int>(cyc.size());
    require(entry.index != exit.index, Code::Internal, "slit endpoints share a gap");
    Cycle s1, s2;
    for (int k = entry.index; k != exit.index; k = (k + 1) % n) s1.push_back(cyc[k]);
    for (int k = exit.index; k != entry.index; k = (k + 1) % n) s2.push_back(cyc[k]);
    Cycle collar = s1;
    collar.push_back(pos(t));
    s2.push_back(neg(t));
    c.cycles[entry.cycle] = std::move(s2);
    int disk = rt.next_chamber++;
    rt.chamber_region[disk] = rt.chamber_region.at(ch);
    for (SignedArc s : s1) rt.wall_side.at(s.arc)[s.positive ? 0 : 1] = disk;
    rt.wall_side[t] = {disk, ch};
    rt.chambers[disk] = {{std::move(collar)}};
  } else {
    const Cycle a = c.cycles[entry.cycle];
    const Cycle b = c.cycles[exit.cycle];
    Cycle merged;
    for (int k = 0; k < static_cast<int>(a.size()); ++k)
      merged.push_back(a[(entry.index + k) % a.size()]);
    merged.push_back(pos(t));
    for (int k = 0; k < static_cast<int>(b.size()); ++k)
      merged.push_back(b[(exit.index + k) % b.size()]);
    merged.push_back(neg(t));
    int hi = std::max(entry.cycle, exit.cycle), lo = std::min(entry.cycle, exit.cycle);
    c.cycles.erase(c.cycles.begin() + hi);
    c.cycles.erase(c.cycles.begin() + lo);
    c.cycles.push_back(std::move(merged));
    rt.wall_side[t] = {ch, ch};
  }
}

// Routes the dual of alpha curve `curve_id` through the current chamber
// complex and slits the chambers it visits. `s` is the curve's position in
// the routing order; each earlier corridor at most doubles the route.
void route_dual(Router& rt, const Diagram& d, DualCurveSystem& out, int curve_id, int s,
                Int kbeta) {
  std::vector<int> arcs = d.arcs_of_curve(curve_id);
  require(!arcs.empty(), Code::Internal, "alpha curve without arcs survived validation");
  int astar = arcs.front();
  require(rt.arc_cuts.at(astar).empty(), Code::Internal, "dual curve hit a cut alpha arc");
  int A = rt.wall_side.at(astar)[0], B = rt.wall_side.at(astar)[1];

  // Shortest chamber path from A to B crossing only beta pieces.
  std::vector<int> walls_path;
  if (A != B) {
    std::map<int, std::pair<int, int>> parent;  // chamber -> (previous, wall)
    std::deque<int> queue{A};
    std::set<int> seen{A};
    bool found = false;
    while (!queue.empty() && !found) {
      int x = queue.front();
      queue.pop_front();
      std::vector<std::pair<int, int>> adj;
      for (const Cycle& cyc : rt.chambers.at(x).cycles)
        for (SignedArc tok : cyc)
          if (rt.crossable(tok.arc))
            adj.push_back({tok.arc, rt.wall_side.at(tok.arc)[tok.positive ? 1 : 0]});
      std::sort(adj.begin(), adj.end());
      for (auto [w, nb] : adj) {
        if (seen.count(nb)) continue;
        seen.insert(nb);
        parent[nb] = {x, w};
        if (nb == B) {
          found = true;
          break;
        }
        queue.push_back(nb);
      }
    }
    require(found, Code::Internal, "no beta corridor joins the two sides of an alpha arc");
    for (int x = B; x != A; x = parent.at(x).first) walls_path.push_back(parent.at(x).second);
    std::reverse(walls_path.begin(), walls_path.end());
  }
  int m = static_cast<int>(walls_path.size());
  require(Int(m) <= kbeta << s, Code::Internal, "dual curve exceeded its crossing bound");

  // Chamber visit sequence and entry signs along the path.
  std::vector<int> visits{A};
  std::vector<int> sigma;
  for (int w : walls_path) {
    int prev = visits.back();
    int sp = rt.wall_side.at(w)[0] == prev ? +1 : -1;
    sigma.push_back(sp);
    visits.push_back(rt.wall_side.at(w)[sp > 0 ? 1 : 0]);
  }
  require(visits.back() == B, Code::Internal, "dual path reconstruction went astray");

  DualCurve gamma;
  int cstar = rt.next_cut++;
  out.cuts[cstar] = {cstar, astar, s, -1};
  gamma.alpha_cut = cstar;
  cut_wall(rt, astar, cstar);
  for (int j = 0; j < m; ++j) {
    int c = rt.next_cut++;
    out.cuts[c] = {c, rt.wall_arc.at(walls_path[j]), s, sigma[j]};
    gamma.beta_cuts.push_back(c);
    cut_wall(rt, walls_path[j], c);
  }
  for (int x : visits) gamma.regions.push_back(rt.chamber_region.at(x));

  // Slit every visited chamber from its entry gap to its exit gap.
  for (int j = 0; j <= m; ++j) {
    int entry_cut = j == 0 ? cstar : gamma.beta_cuts[j - 1];
    int entry_sign = j == 0 ? -1 : sigma[j - 1];
    int exit_cut = j == m ? cstar : gamma.beta_cuts[j];
    int exit_sign = j == m ? -1 : sigma[j];
    Gap ge = find_gap(rt, visits[j], entry_cut, -entry_sign);
    Gap gx = find_gap(rt, visits[j], exit_cut, exit_sign);
    slit_chamber(rt, visits[j], ge, gx);
  }

  out.crossingCounts.push_back(m);
  out.curves.push_back(std::move(gamma));
}

Int beta_arc_count(const Diagram& d) {
  Int k = 0;
  for (const auto& [aid, a] : d.arcs) {
    (void)aid;
    if (d.curve(a.curve).family == Family::Beta) ++k;
  }
  return k;
}

}  // namespace

DualCurveSystem dual_curves(const Diagram& d) {
  require_valid(d);
  DualCurveSystem out;
  Router rt = make_router(d);
  Int kbeta = beta_arc_count(d);
  std::vector<int> alphas = d.curves_of_family(Family::Alpha);
  for (int s = 0; s < static_cast<int>(alphas.size()); ++s)
    route_dual(rt, d, out, alphas[s], s, kbeta);
  for (const auto& [aid, cuts] : rt.arc_cuts)
    if (!cuts.empty()) out.cuts_on_arc[aid] = cuts;
  return out;
}

namespace {

bool next_combination(std::vector<int>& c, int n) {
  int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i)
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  return false;
}

IntMat submatrix(const IntMat& a, const std::vector<int>& rows, const std::vector<int>& cols) {
  IntMat s(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (int i = 0; i < s.rows(); ++i)
    for (int j = 0; j < s.cols(); ++j) s.at(i, j) = a.at(rows[i], cols[j]);
  return s;
}

}  // namespace

MonotoneBlock monotone_block(const IntMat& a) {
  const int m = a.rows(), n = a.cols();
  const int r = rank_of(a);
  const int b = n - r;
  MonotoneBlock out;
  out.kernel = IntMat(n, b);
  out.relabeling.resize(n);
  std::iota(out.relabeling.begin(), out.relabeling.end(), 0);
  out.witness.detQ = 1;
  if (r == 0) {
    for (int i = 0; i < b; ++i) out.kernel.at(i, i) = 1;
    return out;
  }

  std::vector<int> best_rows, best_cols;
  Int best = 0;
  std::vector<int> rows(r);
  std::iota(rows.begin(), rows.end(), 0);
  do {
    std::vector<int> cols(r);
    std::iota(cols.begin(), cols.end(), 0);
    do {
      Int det = abs(determinant(submatrix(a, rows, cols)));
      if (det > best) {
        best = det;
        best_rows = rows;
        best_cols = cols;
      }
    } while (next_combination(cols, n));
  } while (next_combination(rows, m));
  require(best > 0, Code::Internal, "no invertible block of the computed rank");

  if (b == 0) {
    out.R = best;
    out.witness = {best_rows, best_cols, determinant(submatrix(a, best_rows, best_cols))};
    return out;
  }

  std::vector<int> rest;
  for (int j = 0, t = 0; j < n; ++j) {
    if (t < r && best_cols[t] == j)
      ++t;
    else
      rest.push_back(j);
  }
  IntMat q = submatrix(a, best_rows, best_cols);
  IntMat p = submatrix(a, best_rows, rest);
  Int detQ = determinant(q);
  IntMat adj_p = mul(adjugate(q), p);
  for (int i = 0; i < b; ++i) {
    out.kernel.at(rest[i], i) = detQ;
    for (int u = 0; u < r; ++u) out.kernel.at(best_cols[u], i) = -adj_p.at(u, i);
  }
  require(mul(a, out.kernel).is_zero(), Code::Internal,
          "monotone kernel is not annihilated by the matrix");

  out.R = abs(detQ);
  Int total = 0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) total += abs(a.at(i, j));
  Int rr = 1, kk = 1;
  for (int t = 0; t < r; ++t) {
    rr *= r;
    kk *= total;
  }
  require(out.R * rr <= kk, Code::Internal, "maximal minor exceeds its entry-sum bound");
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < n; ++j)
      require(abs(out.kernel.at(j, i)) <= out.R, Code::Internal,
              "kernel entry exceeds the maximal minor");

  out.relabeling = rest;
  out.relabeling.insert(out.relabeling.end(), best_cols.begin(), best_cols.end());
  out.witness = {best_rows, best_cols, detQ};
  return out;
}

MonotoneBasis monotone_periodic_basis(const Diagram& d) {
  require_valid(d);
  require(d.num_points() == 1, Code::Precondition, "monotone basis needs exactly one marked point");
  IntMat a = intersection_matrix(d);
  MonotoneBlock blk = monotone_block(a);
  const int g = a.cols(), b = blk.kernel.cols();

  MonotoneBasis out;
  out.R = blk.R;
  out.relabeling = blk.relabeling;
  out.blockWitness = blk.witness;
  if (b == 0) return out;

  std::vector<Domain> lattice = periodic_domain_lattice(d);
  require(static_cast<int>(lattice.size()) == b, Code::Internal,
          "periodic lattice rank disagrees with the kernel rank");
  IntMat u(g, b);
  for (int t = 0; t < b; ++t) {
    BoundaryDecomposition bd = boundary_decomposition(d, lattice[t]);
    require(bd.isPeriodic, Code::Internal, "lattice basis domain is not periodic");
    for (int j = 0; j < g; ++j) u.at(j, t) = bd.alphaCoeffs[j];
  }
  for (int i = 0; i < b; ++i) {
    std::vector<Rat> rhs(g);
    for (int j = 0; j < g; ++j) rhs[j] = Rat(blk.kernel.at(j, i));
    auto sol = solve_rational(u, rhs);
    require(sol.has_value(), Code::Internal, "kernel vector unreachable by periodic domains");
    Domain p;
    for (int t = 0; t < b; ++t) {
      require(denominator((*sol)[t]) == 1, Code::Internal,
              "kernel vector needs a fractional periodic combination");
      p = p + numerator((*sol)[t]) * lattice[t];
    }
    BoundaryDecomposition bd = boundary_decomposition(d, p);
    require(bd.isPeriodic, Code::Internal, "monotone domain is not periodic");
    for (int j = 0; j < g; ++j)
      require(bd.alphaCoeffs[j] == blk.kernel.at(j, i), Code::Internal,
              "monotone domain boundary disagrees with its kernel vector");
    out.domains.push_back(std::move(p));
  }
  return out;
}

WindingResult wind(const Diagram& d0) {
  require_valid(d0);
  require(d0.num_points() == 1, Code::Precondition, "winding needs exactly one marked point");
  IntersectionStats st = intersection_stats(d0);
  MonotoneBasis basis = monotone_periodic_basis(d0);
  const int g = static_cast<int>(d0.curves_of_family(Family::Alpha).size());
  const int b = static_cast<int>(basis.domains.size());
  const long long K = static_cast<long long>(st.total + st.zero_alpha) * b;
  const long long budget =
      b == 0 ? 0
             : static_cast<long long>(st.total + st.zero_alpha) * (st.total + st.zero_beta) * b *
                   (1LL << (b + 1));

  Diagram d = d0;
  {
    std::vector<int> alphas = d0.curves_of_family(Family::Alpha);
    for (int ni = 0; ni < g; ++ni) d.curves.at(alphas[basis.relabeling[ni]]).index = ni;
  }
  const Diagram start = d;

  WindingReport rep;
  rep.K = K;
  rep.newIntersectionBound = budget;
  rep.perCurveNewIntersections.assign(g, 0);

  DualCurveSystem duals = dual_curves(d);
  std::map<int, int> point_piece;
  std::map<int, std::vector<int>> piece_cuts = duals.cuts_on_arc;
  for (const auto& [cid, cut] : duals.cuts) point_piece[cid] = cut.arc;
  std::map<int, int> last_north, last_south;

  auto enter_pos = [&](int c) { return duals.cuts.at(c).enter_sign > 0; };

  // After the round-1 split of the piece holding cut c, redistribute the cuts
  // of that piece onto the remnants. The winding copy passes the crossed piece
  // immediately beside c, on the side fixed by the approach direction.
  auto reassign = [&](int c, const SplitPieces& sp, bool north) {
    bool eta = enter_pos(c);
    int old_piece = point_piece.at(c);
    std::vector<int> list = piece_cuts.at(old_piece);
    piece_cuts.erase(old_piece);
    int sz = static_cast<int>(list.size());
    auto it = std::find(list.begin(), list.end(), c);
    require(it != list.end(), Code::Internal, "cut missing from its piece's ledger");
    int at = static_cast<int>(it - list.begin());
    if (sp.before == sp.after) {
      // Closed piece: the remainder is one open piece; relink the cyclic order
      // starting beside c.
      std::vector<int> rot;
      for (int k = 1; k < sz; ++k) rot.push_back(list[(at + k) % sz]);
      std::vector<int> order;
      if (north != eta) {
        order.push_back(c);
        order.insert(order.end(), rot.begin(), rot.end());
      } else {
        order = rot;
        order.push_back(c);
      }
      for (int x : order) point_piece[x] = sp.before;
      piece_cuts[sp.before] = std::move(order);
    } else {
      std::vector<int> before(list.begin(), list.begin() + at);
      std::vector<int> after(list.begin() + at + 1, list.end());
      if (north == eta)
        before.push_back(c);
      else
        after.insert(after.begin(), c);
      for (int x : before) point_piece[x] = sp.before;
      for (int x : after) point_piece[x] = sp.after;
      if (!before.empty()) piece_cuts[sp.before] = std::move(before);
      if (!after.empty()) piece_cuts[sp.after] = std::move(after);
    }
  };

  for (int i = 0; i < b; ++i) {
    const DualCurve& gamma = duals.curves[i];
    const int n = static_cast<int>(gamma.beta_cuts.size());
    require(n >= 1, Code::Internal, "basis curve's dual corridor crosses no beta arcs");
    const int astar = duals.cuts.at(gamma.alpha_cut).arc;
    const int fresh_base = d.fresh_arc_id();

    // North copy: forward along the dual curve, K rounds.
    SignedArc launch{astar, true};
    int rem_from = -1, rem_to = -1;
    for (long long round = 1; round <= K; ++round)
      for (int j = 0; j < n; ++j) {
        int c = gamma.beta_cuts[j];
        SignedArc target{round == 1 ? point_piece.at(c) : last_north.at(c), enter_pos(c)};
        FingerOutcome out = apply_finger(d, {launch, target});
        d = std::move(out.diagram);
        if (round == 1) {
          reassign(c, out.target, true);
          if (j == 0) {
            rem_from = out.launch.before;
            rem_to = out.launch.after;
          }
        }
        last_north[c] = out.target.middle;
        launch = out.next_launch;
      }

    // South copy: backward, launched from the alpha remnant that reaches the
    // first backward target across freshly laid walls only, so the second
    // corridor hugs the first instead of fencing off old boundary.
    {
      int e = gamma.beta_cuts[n - 1];
      SignedArc first_target{point_piece.at(e), !enter_pos(e)};
      OccurrenceIndex idx = occurrence_index(d);
      int picked = -1;
      bool hugged = false;
      for (int cand : {rem_from, rem_to}) {
        if (cand == picked) continue;
        int rid = idx.region_of(neg(cand));
        if (rid != idx.region_of(first_target)) continue;
        bool hug = false;
        for (const Cycle& cyc : d.regions.at(rid).cycles) {
          int len = static_cast<int>(cyc.size());
          int at = -1;
          for (int p = 0; p < len; ++p)
            if (cyc[p] == neg(cand)) at = p;
          if (at < 0) continue;
          bool fresh = true;
          for (int p = (at + 1) % len; cyc[p] != first_target; p = (p + 1) % len) {
            if (p == at || cyc[p].arc < fresh_base) {
              fresh = false;
              break;
            }
          }
          hug = fresh;
        }
        if (picked < 0 || (hug && !hugged)) {
          picked = cand;
          hugged = hug;
        }
      }
      require(picked >= 0, Code::Internal, "south winding found no adjacent alpha remnant");
      SignedArc slaunch{picked, false};
      for (long long round = 1; round <= K; ++round)
        for (int j = n - 1; j >= 0; --j) {
          int c = gamma.beta_cuts[j];
          SignedArc target{round == 1 ? point_piece.at(c) : last_south.at(c), !enter_pos(c)};
          FingerOutcome out = apply_finger(d, {slaunch, target});
          d = std::move(out.diagram);
          if (round == 1) reassign(c, out.target, false);
          last_south[c] = out.target.middle;
          slaunch = out.next_launch;
        }
    }

    rep.perCurveNewIntersections[i] = 4 * K * n;
    require(rep.perCurveNewIntersections[i] <= budget, Code::Internal,
            "winding exceeded its new-intersection budget");
  }
  for (long long v : rep.perCurveNewIntersections) rep.totalNew += v;

  require_valid(d);
  require(static_cast<long long>(d.vertices.size()) -
                  static_cast<long long>(d0.vertices.size()) ==
              rep.totalNew,
          Code::Internal, "new crossing tally disagrees with the vertex count");
  for (const auto& [vid, v] : d0.vertices) {
    (void)v;
    require(d.vertices.count(vid) == 1, Code::Internal, "winding lost an original crossing");
  }
  {
    std::vector<int> alphas = d.curves_of_family(Family::Alpha);
    for (int i = b; i < g; ++i) {
      std::vector<int> now = d.arcs_of_curve(alphas[i]);
      std::vector<int> was = start.arcs_of_curve(alphas[i]);
      require(now == was, Code::Internal, "winding disturbed an unwound alpha curve");
      for (int aid : now) {
        const Arc &na = d.arc(aid), &wa = start.arc(aid);
        require(na.closed == wa.closed && na.from == wa.from && na.to == wa.to &&
                    na.curve == wa.curve,
                Code::Internal, "winding disturbed an unwound alpha arc");
      }
    }
  }
  AdmissibilityVerdict verdict = check_weak_admissibility(d);
  if (!verdict.admissible) {
    std::string msg = "winding failed to reach admissibility; witness domain:";
    for (const auto& [rid, v] : verdict.witness->coeff)
      msg += " " + std::to_string(rid) + ":" + v.str();
    fail(Code::Internal, msg);
  }
  rep.verifiedAdmissible = true;
  return {std::move(d), std::move(rep)};
}

}  // namespace heegaard
