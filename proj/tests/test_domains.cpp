#include "doctest.h"

#include <vector>

#include "heegaard/diagram.hpp"
#include "heegaard/domains.hpp"
#include "support.hpp"

namespace hg = heegaard;
using hg::Int;
using hg::Rat;

TEST_CASE("domain arithmetic drops zeros") {
  hg::Domain a, b;
  a.set(0, 2);
  a.set(1, -1);
  b.set(1, 1);
  b.set(2, 4);
  auto sum = a + b;
  CHECK(sum.at(0) == 2);
  CHECK(sum.at(1) == 0);
  CHECK(sum.coeff.count(1) == 0);
  CHECK(sum.at(2) == 4);
  auto diff = a - a;
  CHECK(diff.is_zero());
  auto scaled = Int(-3) * a;
  CHECK(scaled.at(0) == -6);
  CHECK((Int(0) * a).is_zero());
}

TEST_CASE("lens space diagrams have no periodic domains") {
  for (int k : {1, 2, 3}) {
    auto d = hg::block_diagram({k});
    CHECK(hg::periodic_domain_lattice(d).empty());
    auto verdict = hg::check_weak_admissibility(d);
    CHECK(verdict.admissible);
    CHECK_FALSE(verdict.witness.has_value());
  }
}

TEST_CASE("disjoint handle pair is inadmissible with an annular witness") {
  auto d = hg::block_diagram({0});
  auto basis = hg::periodic_domain_lattice(d);
  REQUIRE(basis.size() == 1);
  // Basis coefficient is zero on the marked base region.
  CHECK(basis[0].at(0) == 0);

  auto verdict = hg::check_weak_admissibility(d);
  REQUIRE_FALSE(verdict.admissible);
  REQUIRE(verdict.witness.has_value());
  const hg::Domain& w = *verdict.witness;
  CHECK_FALSE(w.is_zero());
  CHECK(w.at(0) == 0);
  for (const auto& [rid, c] : w.coeff) {
    (void)rid;
    CHECK(c >= 0);
  }

  auto bd = hg::boundary_decomposition(d, w);
  REQUIRE(bd.isPeriodic);
  REQUIRE(bd.alphaCoeffs.size() == 1);
  REQUIRE(bd.betaCoeffs.size() == 1);
  // The annulus is bounded by one alpha side and one beta side with opposite
  // occurrence signs.
  CHECK(bd.alphaCoeffs[0] != 0);
  CHECK(bd.betaCoeffs[0] != 0);

  auto norms = hg::domain_norms(d, w);
  CHECK(norms.domain >= 1);
  CHECK(norms.alpha == abs(bd.alphaCoeffs[0]));
  CHECK(norms.beta == abs(bd.betaCoeffs[0]));
}

TEST_CASE("boundary decomposition flags non-periodic domains") {
  auto d = hg::block_diagram({2});
  hg::Domain dom;
  dom.set(1, 1);  // a single face is never periodic here
  auto bd = hg::boundary_decomposition(d, dom);
  CHECK_FALSE(bd.isPeriodic);
  CHECK(d.arcs.count(bd.offending_arc) == 1);
  auto code = support::error_code_of([&] { hg::domain_norms(d, dom); });
  REQUIRE(code.has_value());
  CHECK(*code == hg::Code::Precondition);
}

TEST_CASE("extra marked points add lattice rank but keep verdicts honest") {
  auto d = hg::block_diagram({3}, 1);
  auto basis = hg::periodic_domain_lattice(d);
  // b1 = 0 and two points: rank 0 + 2(2-1) = 2.
  CHECK(basis.size() == 2);
  for (const auto& dom : basis) {
    auto bd = hg::boundary_decomposition(d, dom);
    CHECK(bd.isPeriodic);
  }
  // The annulus around the extra point is a nonnegative periodic domain
  // missing both marked regions, so the diagram is inadmissible.
  auto verdict = hg::check_weak_admissibility(d);
  REQUIRE_FALSE(verdict.admissible);
  REQUIRE(verdict.witness.has_value());
  CHECK(verdict.witness->at(0) == 0);

  auto two_pts = hg::block_diagram({0}, 1);
  CHECK(hg::periodic_domain_lattice(two_pts).size() == 1 + 2);
  CHECK_FALSE(hg::check_weak_admissibility(two_pts).admissible);
}

TEST_CASE("lattice requires a marked point") {
  hg::Diagram d = hg::block_diagram({2});
  d.points.clear();
  auto code = support::error_code_of([&] { hg::periodic_domain_lattice(d); });
  REQUIRE(code.has_value());
  CHECK(*code == hg::Code::Precondition);
}

TEST_CASE("feasible point solves small exact programs") {
  using Row = std::vector<Rat>;
  SUBCASE("strictly positive solution") {
    auto x = hg::feasible_point({Row{1, 1}}, {Rat(3)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] + (*x)[1] == Rat(3));
    CHECK((*x)[0] >= 0);
    CHECK((*x)[1] >= 0);
  }
  SUBCASE("negativity makes it infeasible") {
    CHECK_FALSE(hg::feasible_point({Row{0}}, {Rat(1)}).has_value());
    CHECK_FALSE(hg::feasible_point({Row{1}, Row{1}}, {Rat(1), Rat(2)}).has_value());
    CHECK_FALSE(hg::feasible_point({Row{-1}}, {Rat(1)}).has_value());
  }
  SUBCASE("exact rationals survive pivoting") {
    auto x = hg::feasible_point({Row{2, 0}, Row{0, 3}}, {Rat(1, 3), Rat(1, 7)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rat(1, 6));
    CHECK((*x)[1] == Rat(1, 21));
  }
  SUBCASE("redundant rows stay consistent") {
    auto x = hg::feasible_point({Row{1, 2}, Row{2, 4}}, {Rat(2), Rat(4)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] + 2 * (*x)[1] == Rat(2));
  }
}

TEST_CASE("solver verdicts agree with exhaustive search") {
  int checked = 0;
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    for (const auto& ks : {std::vector<int>{0}, std::vector<int>{2}, std::vector<int>{0, 2},
                           std::vector<int>{1, 1}, std::vector<int>{0, 0}}) {
      for (int budget : {0, 3, 6}) {
        auto d = hg::scramble_diagram(hg::block_diagram(ks), budget, seed);
        bool exact = hg::check_weak_admissibility(d).admissible;
        CHECK(exact == support::oracle_admissible_box(d));
        if (hg::periodic_domain_lattice(d).size() <= 3)
          CHECK(exact == support::oracle_admissible_rays(d));
        ++checked;
      }
    }
  }
  CHECK(checked == 45);
}
