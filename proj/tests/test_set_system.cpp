#include <catch2/catch_amalgamated.hpp>

#include "encon/set_system.hpp"

using namespace encon;

TEST_CASE("cells normalize and compare") {
  Cell c{3, 1, 2, 1};
  REQUIRE(c.atoms() == std::vector<int>{1, 2, 3});
  REQUIRE(c.cardinality() == 3);
  REQUIRE(c.dimension() == 2);
  REQUIRE(c.omega() == 1);
  REQUIRE(Cell{1, 2}.omega() == -1);
  REQUIRE(Cell{}.omega() == -1);
  REQUIRE(canonical_less(Cell{2}, Cell{1, 3}));
  REQUIRE(canonical_less(Cell{1, 2}, Cell{1, 5}));
  REQUIRE(Cell{1}.subset_of(Cell{1, 2}));
  REQUIRE_FALSE(Cell{1, 3}.subset_of(Cell{1, 2}));
  REQUIRE(intersect(Cell{1, 2}, Cell{2, 3}) == Cell{2});
  REQUIRE(cell_union(Cell{1}, Cell{3}) == Cell{1, 3});
  REQUIRE_THROWS_AS(Cell{-1}, std::invalid_argument);
}

TEST_CASE("downward closure of one edge") {
  const SetSystem s = downward_closure({Cell{1, 2}});
  REQUIRE(s.cells() == std::vector<Cell>{{1}, {2}, {1, 2}});
  REQUIRE(s.simplicial());
  REQUIRE(s.canonically_ordered());
}

TEST_CASE("downward closure of the two-edge path") {
  const SetSystem s = downward_closure({Cell{1, 2}, Cell{2, 3}});
  REQUIRE(s.cells() == std::vector<Cell>{{1}, {2}, {3}, {1, 2}, {2, 3}});
}

TEST_CASE("closure rejects empty generators and is idempotent") {
  REQUIRE_THROWS_AS(downward_closure({Cell{}}), std::invalid_argument);
  const SetSystem s = downward_closure({Cell{1, 2, 3}, Cell{3, 4}});
  const SetSystem again = downward_closure(s.cells());
  REQUIRE(s.cells() == again.cells());
  REQUIRE(s.simplicial());
}

TEST_CASE("canonical order sorts by cardinality then lexicographically") {
  const SetSystem s(std::vector<Cell>{{1, 2}, {1}});
  REQUIRE(canonical_order(s).cells() == std::vector<Cell>{{1}, {1, 2}});
  const SetSystem t(std::vector<Cell>{{1, 2, 3}, {1, 2}, {2, 3}, {1}, {3}});
  REQUIRE(canonical_order(t).cells() == std::vector<Cell>{{1}, {3}, {1, 2}, {2, 3}, {1, 2, 3}});
  REQUIRE(canonical_order(canonical_order(t)).cells() == canonical_order(t).cells());
  REQUIRE_FALSE(t.canonically_ordered());
}

TEST_CASE("duplicate cells are rejected") {
  REQUIRE_THROWS_AS(SetSystem(std::vector<Cell>{{1}, {1}}), std::invalid_argument);
}

TEST_CASE("star and core") {
  const SetSystem s = downward_closure({Cell{1, 2}});
  REQUIRE(star(s, Cell{1}) == std::vector<Cell>{{1}, {1, 2}});
  REQUIRE(core(s, Cell{1, 2}) == std::vector<Cell>{{1}, {2}, {1, 2}});
  REQUIRE(star(s, Cell{1, 2}) == std::vector<Cell>{{1, 2}});
  REQUIRE_THROWS_AS(star(s, Cell{7}), std::invalid_argument);
  REQUIRE_THROWS_AS(core(s, Cell{7}), std::invalid_argument);
}

TEST_CASE("boolean dual complements within the ground set") {
  const SetSystem s(std::vector<Cell>{{1}, {2, 3}, {1, 3}, {1, 2, 3}});
  const SetSystem d = boolean_dual(s);
  REQUIRE(d.cells() == std::vector<Cell>{{2, 3}, {1}, {2}, {}});
  REQUIRE(d.has_empty_cell());
  REQUIRE(boolean_dual(d).cells() == s.cells());

  const SetSystem one(std::vector<Cell>{{1, 2, 3}});
  REQUIRE(boolean_dual(one).cells() == std::vector<Cell>{{}});
}

TEST_CASE("dual exchanges subset and superset order") {
  const SetSystem s = random_set_of_sets(5, 8, 99);
  const SetSystem d = boolean_dual(s);
  for (int i = 0; i < s.size(); ++i)
    for (int j = 0; j < s.size(); ++j)
      REQUIRE(s.cell(i).subset_of(s.cell(j)) == d.cell(j).subset_of(d.cell(i)));
}

TEST_CASE("f-vector and f-polynomial") {
  const SetSystem s = downward_closure({Cell{1, 2}, Cell{2, 3}});
  REQUIRE(f_vector(s) == std::vector<long>{3, 2});
  REQUIRE(f_poly_eval(s, Rat(1)) == Rat(1 + s.size()));
  // 1 + 3t + 2t^2 at t = -1 gives 0, so chi = 1 - f(-1) = 1.
  REQUIRE(f_poly_eval(s, Rat(-1)) == Rat(0));
  REQUIRE(f_poly_eval(SetSystem{}, Rat(5)) == Rat(1));
  REQUIRE(f_poly_eval(SetSystem(std::vector<Cell>{Cell{}}), Rat(5)) == Rat(1));
}

TEST_CASE("atoms are the minimal non-empty cells") {
  REQUIRE(atoms(downward_closure({Cell{1, 2}, Cell{2, 3}})) ==
          std::vector<Cell>{{1}, {2}, {3}});
  REQUIRE(atoms(SetSystem(std::vector<Cell>{{1}, {1, 2}})) == std::vector<Cell>{{1}});
  REQUIRE(atoms(SetSystem(std::vector<Cell>{{1, 2}, {3, 4}})) ==
          std::vector<Cell>{{1, 2}, {3, 4}});
}

TEST_CASE("named generators") {
  REQUIRE(complete_complex(2).size() == 3);
  REQUIRE(complete_complex(3).size() == 7);
  REQUIRE(complete_complex(3).cells()[6] == Cell{1, 2, 3});
  REQUIRE_THROWS_AS(complete_complex(0), std::invalid_argument);

  const SetSystem c5 = cycle_complex(5);
  REQUIRE(c5.size() == 10);
  REQUIRE(c5.simplicial());
  REQUIRE_THROWS_AS(cycle_complex(2), std::invalid_argument);

  const SetSystem g = grid_whitney(7, 7);
  REQUIRE(g.size() == 49 + 84);
  REQUIRE_THROWS_AS(grid_whitney(1, 5), std::invalid_argument);

  const SetSystem r = random_sets(6, 9, 42);
  REQUIRE(r.simplicial());
  REQUIRE(r.cells() == random_sets(6, 9, 42).cells());  // deterministic in the seed
  REQUIRE_FALSE(random_sets(6, 9, 43).cells() == r.cells());

  const SetSystem p = decorated_path({1, 0, 1});
  REQUIRE(p.simplicial());
  // path 1-2-3 plus dangles at 1 and 3: 5 vertices, 4 edges
  REQUIRE(p.size() == 9);
}

TEST_CASE("canonical order is a linear extension of inclusion") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const SetSystem s = random_set_of_sets(6, 10, seed);
    for (int i = 0; i < s.size(); ++i)
      for (int j = 0; j < s.size(); ++j)
        if (i != j && s.cell(i).subset_of(s.cell(j))) REQUIRE(i < j);
  }
}

TEST_CASE("core of a simplicial cell has 2^|x|-1 cells") {
  const SetSystem s = complete_complex(4);
  for (const Cell& x : s.cells())
    REQUIRE(static_cast<long>(core(s, x).size()) == (1L << x.cardinality()) - 1);
}

TEST_CASE("f_poly(1) = 1 + number of cells on random systems") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SetSystem s = random_sets(5, 4, seed);
    REQUIRE(f_poly_eval(s, Rat(1)) == Rat(1 + s.size()));
  }
}
