#include <catch2/catch_amalgamated.hpp>

#include "encon/io.hpp"
#include "encon/multigraph.hpp"
#include "encon/set_system.hpp"

using namespace encon;

TEST_CASE("multigraph pair from a set of sets") {
  const SetSystem g(std::vector<Cell>{{1, 2, 3}, {1, 2}, {2, 3}, {1}, {3}});
  const auto [mm, pp] = multigraphs_from(g);
  REQUIRE(mm.mult(0, 0) == Int(5));
  REQUIRE(mm.mult(0, 1) == Int(2));
  REQUIRE(pp.mult(3, 3) == Int(3));
  REQUIRE(pp.mult(0, 0) == Int(1));
  REQUIRE(charpoly_exact(mm.mult) == charpoly_exact(pp.mult));

  const SetSystem one(std::vector<Cell>{{1}});
  const auto [m1, p1] = multigraphs_from(one);
  REQUIRE(m1.mult(0, 0) == Int(1));  // a single loop
}

TEST_CASE("dot export is stable and renders loops") {
  const SetSystem komma(std::vector<Cell>{{1}, {1, 2}});
  const auto [mm, pp] = multigraphs_from(komma);
  const std::string dot = export_dot(mm, "Gmm");
  REQUIRE(dot == "graph Gmm {\n"
                 "  \"s{1}\";\n"
                 "  \"s{1,2}\";\n"
                 "  \"s{1}\" -- \"s{1}\";\n"
                 "  \"s{1}\" -- \"s{1,2}\";\n"
                 "  \"s{1,2}\" -- \"s{1,2}\";\n"
                 "  \"s{1,2}\" -- \"s{1,2}\";\n"
                 "}\n");
}

TEST_CASE("multigraph json round trip") {
  const SetSystem g(std::vector<Cell>{{1, 2, 3}, {1, 2}, {2, 3}, {1}, {3}});
  const auto [mm, pp] = multigraphs_from(g);
  const Multigraph back = multigraph_from_json(json::parse(multigraph_to_json(mm).dump()));
  REQUIRE(back.nodes == mm.nodes);
  REQUIRE(back.mult == mm.mult);
}

TEST_CASE("walk counts agree between the isospectral pair") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const SetSystem s = random_set_of_sets(5, 7, seed);
    if (s.size() == 0) continue;
    const auto [mm, pp] = multigraphs_from(s);
    REQUIRE(closed_walk_counts(mm, 12) == closed_walk_counts(pp, 12));
    REQUIRE(path_symmetry_check(mm).all_passed());
  }
  const SetSystem komma(std::vector<Cell>{{1}, {1, 2}});
  const auto [mm, pp] = multigraphs_from(komma);
  REQUIRE(closed_walk_counts(mm, 1) == std::vector<Int>{Int(3)});
}

TEST_CASE("dual transport swaps the pair") {
  const SetSystem s(std::vector<Cell>{{1}, {2, 3}, {1, 3}, {1, 2, 3}});
  const auto [mm, pp] = multigraphs_from(s);
  const auto [dmm, dpp] = multigraphs_from(boolean_dual(s));
  REQUIRE(dmm.mult == pp.mult);
  REQUIRE(dpp.mult == mm.mult);
}

TEST_CASE("negative multiplicities are rejected") {
  const SetSystem s = complete_complex(2);
  REQUIRE_THROWS_AS(multigraphs_from(s, omega_energy<Int>(s)), std::invalid_argument);
  REQUIRE_NOTHROW(multigraphs_from(s));
}
