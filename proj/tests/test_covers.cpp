#include "doctest.h"

#include <vector>

#include "heegaard/covers.hpp"
#include "heegaard/diagram.hpp"
#include "heegaard/domains.hpp"
#include "heegaard/presentation.hpp"
#include "support.hpp"

namespace hg = heegaard;
using hg::Int;

TEST_CASE("cohomology basis") {
  CHECK(hg::cohomology_basis(hg::block_diagram({3})).empty());

  auto b0 = hg::cohomology_basis(hg::block_diagram({0}));
  REQUIRE(b0.size() == 1);
  CHECK(b0[0].weights == std::vector<Int>{1});

  auto b02 = hg::cohomology_basis(hg::block_diagram({0, 2}));
  REQUIRE(b02.size() == 1);
  CHECK(b02[0].weights == std::vector<Int>{1, 0});

  auto b00 = hg::cohomology_basis(hg::block_diagram({0, 0}));
  CHECK(b00.size() == 2);
  for (const auto& c : b00) {
    REQUIRE(c.weights.size() == 2);
    // Normalization: first nonzero weight positive.
    for (const Int& w : c.weights) {
      if (w != 0) {
        CHECK(w > 0);
        break;
      }
    }
  }

  // Null-homotopic point circles add classes beyond betti: rank b1 + (l-1).
  CHECK(hg::cohomology_basis(hg::block_diagram({0}, 1)).size() == 2);
}

TEST_CASE("cyclic covers of the disjoint pair") {
  auto d = hg::block_diagram({0});
  hg::CocycleClass one{{Int(1)}};
  for (int m : {2, 3, 5}) {
    auto res = hg::cyclic_cover(d, one, m);
    REQUIRE(hg::validate(res.diagram).ok);
    CHECK(res.report.sheets == m);
    // Cover genus m*g - m + 1.
    CHECK(res.report.coverGenus == 1);
    CHECK(res.diagram.genus == 1);
    CHECK(res.report.liftedPointCount == m);
    // Crossings only shift sheets transversally, so every curve lifts to m
    // disjoint circles.
    CHECK(res.report.liftedCurveCounts == std::map<int, int>{{0, m}, {1, m}});
    CHECK(res.report.admissibilityPreserved);
    CHECK(res.diagram.num_points() == m);
  }
}

TEST_CASE("cyclic covers of a genus-two base") {
  auto d = hg::block_diagram({0, 2});
  auto basis = hg::cohomology_basis(d);
  REQUIRE(basis.size() == 1);
  for (int m : {2, 3}) {
    auto res = hg::cyclic_cover(d, basis[0], m);
    REQUIRE(hg::validate(res.diagram).ok);
    CHECK(res.report.coverGenus == 2 * m - m + 1);
    CHECK(res.report.liftedPointCount == m);
    CHECK(res.report.admissibilityPreserved);
    // The weight-0 pair lifts to m copies per curve.
    CHECK(res.report.liftedCurveCounts.at(2) == m);
  }
}

TEST_CASE("cover rejections") {
  auto d = hg::block_diagram({0});
  SUBCASE("weights must generate the deck group") {
    hg::CocycleClass two{{Int(2)}};
    auto code = support::error_code_of([&] { hg::cyclic_cover(d, two, 2); });
    REQUIRE(code.has_value());
    CHECK(*code == hg::Code::DisconnectedCover);
  }
  SUBCASE("weight vector length") {
    hg::CocycleClass wrong{{Int(1), Int(2)}};
    auto code = support::error_code_of([&] { hg::cyclic_cover(d, wrong, 2); });
    REQUIRE(code.has_value());
    CHECK(*code == hg::Code::BadClass);
  }
  SUBCASE("class must annihilate the intersection matrix") {
    hg::CocycleClass bad{{Int(1)}};
    auto code = support::error_code_of([&] { hg::cyclic_cover(hg::block_diagram({3}), bad, 2); });
    REQUIRE(code.has_value());
    CHECK(*code == hg::Code::BadClass);
  }
  SUBCASE("sheet count") {
    auto code = support::error_code_of([&] { hg::cyclic_cover(d, hg::CocycleClass{{Int(1)}}, 0); });
    REQUIRE(code.has_value());
    CHECK(*code == hg::Code::Precondition);
  }
}

TEST_CASE("domain transfer under the cover id scheme") {
  hg::Domain dom;
  dom.set(0, 2);
  dom.set(3, -1);
  int m = 3;
  auto up = hg::pullback_domain(dom, m);
  CHECK(up.at(0) == 2);
  CHECK(up.at(1) == 2);
  CHECK(up.at(2) == 2);
  CHECK(up.at(9) == -1);
  CHECK(up.at(11) == -1);
  CHECK(up.coeff.size() == 6);
  CHECK(hg::pushforward_domain(up, m) == Int(m) * dom);
}

TEST_CASE("reduction to one marked point") {
  auto d = hg::block_diagram({3}, 1);
  auto reduced = hg::reduce_to_pointed(d);
  REQUIRE(hg::validate(reduced).ok);
  CHECK(reduced.num_points() == 1);
  CHECK(reduced.genus == 1);
  CHECK(hg::first_homology(reduced) == hg::HomologySummary{{Int(3)}, 0});

  // Pointed input comes back byte-identical.
  auto pointed = hg::block_diagram({2});
  CHECK(hg::serialize_diagram(hg::reduce_to_pointed(pointed)) == hg::serialize_diagram(pointed));

  // Covers come back multi-pointed; reduction restores the pointed setting.
  auto cover = hg::cyclic_cover(hg::block_diagram({0}), hg::CocycleClass{{Int(1)}}, 3);
  auto creduced = hg::reduce_to_pointed(cover.diagram);
  REQUIRE(hg::validate(creduced).ok);
  CHECK(creduced.num_points() == 1);
  CHECK(creduced.genus == cover.diagram.genus);
}

TEST_CASE("generator enumeration") {
  CHECK(hg::enumerate_generators(hg::block_diagram({3})).count == 3);
  CHECK(hg::enumerate_generators(hg::block_diagram({2, 3})).count == 6);
  CHECK(hg::enumerate_generators(hg::block_diagram({0, 2})).count == 0);

  auto mat = hg::enumerate_generators(hg::block_diagram({2, 2}), true);
  CHECK(mat.count == 4);
  REQUIRE(mat.generators.has_value());
  std::vector<std::vector<int>> expect = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  CHECK(*mat.generators == expect);

  // Counting never needs the listing.
  CHECK_FALSE(hg::enumerate_generators(hg::block_diagram({2, 2})).generators.has_value());
}

TEST_CASE("generator counts match the permanent") {
  for (const auto& ks : {std::vector<int>{2, 2}, std::vector<int>{1, 3}, std::vector<int>{0, 2},
                         std::vector<int>{2, 1, 2}}) {
    for (std::uint64_t seed : {1u, 4u}) {
      auto d = hg::scramble_diagram(hg::block_diagram(ks), 4, seed);
      auto counted = hg::enumerate_generators(d).count;
      CHECK(counted == support::ryser_permanent(support::multiplicity_matrix(d)));
      Int cap = 1;
      for (int k : hg::intersection_stats(d).alpha_counts) cap *= k;
      CHECK(counted <= cap);
    }
  }
}

TEST_CASE("generator enumeration caps the curve count") {
  auto d = hg::block_diagram(std::vector<int>(65, 1));
  auto code = support::error_code_of([&] { hg::enumerate_generators(d); });
  REQUIRE(code.has_value());
  CHECK(*code == hg::Code::Precondition);
}
