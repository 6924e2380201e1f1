#include "doctest.h"

#include <string>
#include <vector>

#include "heegaard/diagram.hpp"
#include "heegaard/domains.hpp"
#include "heegaard/presentation.hpp"
#include "support.hpp"

namespace hg = heegaard;
using hg::Int;

TEST_CASE("fixtures are the pinned builder outputs") {
  struct Pin {
    const char* file;
    std::vector<int> ks;
    int extra;
  };
  for (const Pin& pin : {Pin{"s3.hd", {1}, 0}, Pin{"rp3.hd", {2}, 0}, Pin{"l31.hd", {3}, 0},
                         Pin{"s1s2.hd", {0}, 0}, Pin{"s3_2pt.hd", {1}, 1}}) {
    auto loaded = hg::load_diagram(support::fixture(pin.file));
    CAPTURE(pin.file);
    CHECK(hg::serialize_diagram(loaded) ==
          hg::serialize_diagram(hg::block_diagram(pin.ks, pin.extra)));
    CHECK(hg::validate(loaded).ok);
  }
}

TEST_CASE("fixture invariants") {
  auto s3 = hg::load_diagram(support::fixture("s3.hd"));
  CHECK(hg::presentation_length(hg::u_beta_presentation(s3)) == 0);
  CHECK(hg::first_homology(s3) == hg::HomologySummary{{}, 0});

  auto rp3 = hg::load_diagram(support::fixture("rp3.hd"));
  CHECK(hg::presentation_length(hg::u_beta_presentation(rp3)) == 0);
  CHECK(hg::first_homology(rp3) == hg::HomologySummary{{Int(2)}, 0});

  auto l31 = hg::load_diagram(support::fixture("l31.hd"));
  CHECK(hg::presentation_length(hg::u_beta_presentation(l31)) == 1);
  CHECK(hg::first_homology(l31) == hg::HomologySummary{{Int(3)}, 0});

  auto s1s2 = hg::load_diagram(support::fixture("s1s2.hd"));
  CHECK(hg::presentation_length(hg::u_beta_presentation(s1s2)) == 0);
  CHECK(hg::first_homology(s1s2) == hg::HomologySummary{{}, 1});
  CHECK_FALSE(hg::check_weak_admissibility(s1s2).admissible);

  auto two = hg::load_diagram(support::fixture("s3_2pt.hd"));
  CHECK(two.num_points() == 2);
  CHECK(hg::first_homology(two) == hg::HomologySummary{{}, 0});
}
