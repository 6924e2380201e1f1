#include "heegaard/domains.hpp"

#include <algorithm>
#include <set>

namespace heegaard {

Int Domain::at(int region) const {
  auto it = coeff.find(region);
  return it == coeff.end() ? Int(0) : it->second;
}

void Domain::set(int region, Int v) {
  if (v == 0) coeff.erase(region);
  else coeff[region] = std::move(v);
}

bool Domain::is_zero() const { return coeff.empty(); }

Domain operator+(const Domain& a, const Domain& b) {
  Domain r = a;
  for (const auto& [reg, v] : b.coeff) r.set(reg, r.at(reg) + v);
  return r;
}

Domain operator-(const Domain& a, const Domain& b) {
  Domain r = a;
  for (const auto& [reg, v] : b.coeff) r.set(reg, r.at(reg) - v);
  return r;
}

Domain operator*(const Int& s, const Domain& a) {
  Domain r;
  if (s != 0)
    for (const auto& [reg, v] : a.coeff) r.coeff[reg] = s * v;
  return r;
}

namespace {

std::vector<int> region_order(const Diagram& d) {
  std::vector<int> ids;
  ids.reserve(d.regions.size());
  for (const auto& [rid, _] : d.regions) ids.push_back(rid);
  return ids;
}

// delta(a) = n_{region of +a} - n_{region of -a}, as a row over region columns.
void add_arc_row(IntMat& m, int row, const OccurrenceIndex& occ, const std::map<int, int>& col,
                 int arc, const Int& scale) {
  m.at(row, col.at(occ.region_of(pos(arc)))) += scale;
  m.at(row, col.at(occ.region_of(neg(arc)))) -= scale;
}

}  // namespace

std::vector<Domain> periodic_domain_lattice(const Diagram& d) {
  require(d.num_points() >= 1, Code::Precondition, "periodic_domain_lattice needs a marked diagram");
  auto occ = occurrence_index(d);
  auto ids = region_order(d);
  std::map<int, int> col;
  for (size_t i = 0; i < ids.size(); ++i) col[ids[i]] = static_cast<int>(i);

  int rows = 0;
  for (const auto& [cid, _] : d.curves)
    rows += std::max<int>(0, static_cast<int>(d.arcs_of_curve(cid).size()) - 1);
  IntMat m(rows + 1, static_cast<int>(ids.size()));
  int r = 0;
  for (const auto& [cid, _] : d.curves) {
    auto arcs = d.arcs_of_curve(cid);
    for (size_t j = 1; j < arcs.size(); ++j, ++r) {
      add_arc_row(m, r, occ, col, arcs[j], 1);
      add_arc_row(m, r, occ, col, arcs[0], -1);
    }
  }
  int z_region = d.points.begin()->second.region;
  m.at(r, col.at(z_region)) = 1;

  std::vector<Domain> basis;
  for (const auto& v : kernel_basis(m)) {
    Domain dom;
    for (size_t i = 0; i < ids.size(); ++i) dom.set(ids[i], v[i]);
    basis.push_back(std::move(dom));
  }
  return basis;
}

BoundaryDecomposition boundary_decomposition(const Diagram& d, const Domain& dom) {
  for (const auto& [reg, _] : dom.coeff)
    require(d.regions.count(reg), Code::BadReference, "domain indexes unknown region");
  auto occ = occurrence_index(d);
  BoundaryDecomposition out;
  out.alphaCoeffs.assign(d.curves_of_family(Family::Alpha).size(), 0);
  out.betaCoeffs.assign(d.curves_of_family(Family::Beta).size(), 0);
  for (const auto& [cid, c] : d.curves) {
    auto arcs = d.arcs_of_curve(cid);
    Int common;
    for (size_t j = 0; j < arcs.size(); ++j) {
      Int delta = dom.at(occ.region_of(pos(arcs[j]))) - dom.at(occ.region_of(neg(arcs[j])));
      if (j == 0) common = delta;
      else if (delta != common) {
        out.isPeriodic = false;
        out.offending_arc = arcs[j];
        return out;
      }
    }
    auto& coeffs = c.family == Family::Alpha ? out.alphaCoeffs : out.betaCoeffs;
    coeffs[c.index] = common;
  }
  out.isPeriodic = true;
  return out;
}

DomainNorms domain_norms(const Diagram& d, const Domain& dom) {
  BoundaryDecomposition b = boundary_decomposition(d, dom);
  require(b.isPeriodic, Code::Precondition,
          "boundary norms need a periodic domain (arc " + std::to_string(b.offending_arc) +
              " has unequal sides)");
  DomainNorms n{0, 0, 0};
  for (const auto& [reg, v] : dom.coeff) n.domain = std::max(n.domain, Int(abs(v)));
  for (const Int& x : b.alphaCoeffs) n.alpha = std::max(n.alpha, Int(abs(x)));
  for (const Int& y : b.betaCoeffs) n.beta = std::max(n.beta, Int(abs(y)));
  return n;
}

AdmissibilityVerdict check_weak_admissibility(const Diagram& d) {
  auto basis = periodic_domain_lattice(d);
  if (basis.empty()) return {true, std::nullopt};

  auto ids = region_order(d);
  std::set<int> marked;
  for (const auto& [pid, p] : d.points) marked.insert(p.region);

  // Variables: u_j, v_j (lattice coefficients c = u - v), s_r (slack = domain
  // coefficient) for unmarked regions. Equations: per region, B_r (u - v)
  // equals s_r (unmarked) or 0 (marked); sum of slacks = 1.
  int nb = static_cast<int>(basis.size());
  std::vector<int> unmarked;
  for (int i = 0; i < static_cast<int>(ids.size()); ++i)
    if (!marked.count(ids[i])) unmarked.push_back(i);
  int cols = 2 * nb + static_cast<int>(unmarked.size());
  std::vector<std::vector<Rat>> e(ids.size() + 1, std::vector<Rat>(cols, Rat(0)));
  std::vector<Rat> f(ids.size() + 1, Rat(0));
  std::map<int, int> slack_col;
  for (size_t t = 0; t < unmarked.size(); ++t) slack_col[unmarked[t]] = 2 * nb + static_cast<int>(t);
  for (size_t r = 0; r < ids.size(); ++r) {
    for (int j = 0; j < nb; ++j) {
      Rat c(basis[j].at(ids[r]));
      e[r][j] = c;
      e[r][nb + j] = -c;
    }
    if (auto it = slack_col.find(static_cast<int>(r)); it != slack_col.end())
      e[r][it->second] = Rat(-1);
  }
  for (const auto& [_, c] : slack_col) e[ids.size()][c] = Rat(1);
  f[ids.size()] = Rat(1);

  auto sol = feasible_point(e, f);
  if (!sol) return {true, std::nullopt};

  Int denom = 1;
  std::vector<Rat> coeffs(nb);
  for (int j = 0; j < nb; ++j) {
    coeffs[j] = (*sol)[j] - (*sol)[nb + j];
    denom = lcm(denom, denominator(coeffs[j]));
  }
  Domain witness;
  for (int j = 0; j < nb; ++j) {
    Rat scaled = coeffs[j] * denom;
    require(denominator(scaled) == 1, Code::Internal, "witness clearing failed");
    witness = witness + Int(numerator(scaled)) * basis[j];
  }
  bool nonzero = !witness.is_zero();
  bool nonneg = true;
  for (const auto& [reg, v] : witness.coeff) nonneg = nonneg && v >= 0;
  bool marked_zero = true;
  for (int reg : marked) marked_zero = marked_zero && witness.at(reg) == 0;
  require(nonzero && nonneg && marked_zero && boundary_decomposition(d, witness).isPeriodic,
          Code::Internal, "admissibility witness failed verification");
  return {false, std::move(witness)};
}

}  // namespace heegaard
