#include <random>
#include "doctest.h"
#include "oddgraceful/constructor.hpp"
#include "oddgraceful/search.hpp"
#include "oddgraceful/verifier.hpp"
#include "oracles.hpp"

using namespace oddgraceful;

namespace {

GraphTopology cycle(int m) { return build_free_graph(oracle::cycle_edges(m, 1)); }

oracle::EdgeList zero_based(const GraphTopology& g) {
  oracle::EdgeList out;
  for (const Edge& e : g.edges()) out.emplace_back(static_cast<int>(*g.position(e.first)), static_cast<int>(*g.position(e.second)));
  return out;
}

bool brute_force_exists(const GraphTopology& g) {
  return oracle::enumerate_odd_graceful(static_cast<int>(g.order()), zero_based(g),
                                        [](const std::vector<Label>&) { return false; }) > 0;
}

}  // namespace

TEST_CASE("brute-force reference values") {
  // C4 with labels (0, 7, 2, 3): edges 7, 5, 1, 3.
  CHECK(oracle::is_odd_graceful(4, oracle::cycle_edges(4), {0, 7, 2, 3}));
  CHECK(brute_force_exists(cycle(4)));
  CHECK_FALSE(brute_force_exists(cycle(3)));
  CHECK_FALSE(brute_force_exists(cycle(5)));
  CHECK(brute_force_exists(build_union_graph(4, 3)));
}

TEST_CASE("search finds or refutes small cycles") {
  const SearchOutcome c4 = exhaustive_search(cycle(4));
  CHECK(c4.status == SearchStatus::Found);
  REQUIRE(c4.labeling.has_value());
  CHECK(verify_odd_graceful(cycle(4), *c4.labeling).is_odd_graceful);

  CHECK(exhaustive_search(cycle(3)).status == SearchStatus::ExhaustedNone);
  CHECK_FALSE(exhaustive_search(cycle(3)).labeling.has_value());
  CHECK(exhaustive_search(cycle(5)).status == SearchStatus::ExhaustedNone);
  CHECK(exhaustive_search(cycle(7)).status == SearchStatus::ExhaustedNone);
  CHECK(exhaustive_search(cycle(6)).status == SearchStatus::Found);
}

TEST_CASE("search on unions") {
  for (auto [m, n] : {std::pair{4, 3}, std::pair{6, 3}, std::pair{4, 1}, std::pair{4, 2}}) {
    const GraphTopology g = build_union_graph(m, n);
    const SearchOutcome out = exhaustive_search(g);
    CAPTURE(m);
    CAPTURE(n);
    REQUIRE(out.status == SearchStatus::Found);
    CHECK(verify_odd_graceful(g, *out.labeling).is_odd_graceful);
  }
}

TEST_CASE("status matches brute force on random small graphs") {
  std::mt19937_64 rng(3);
  int checked = 0;
  while (checked < 150) {
    const int vertices = 3 + static_cast<int>(rng() % 3);
    std::vector<std::pair<int, int>> edges;
    for (int a = 1; a <= vertices; ++a)
      for (int b = a + 1; b <= vertices; ++b)
        if (rng() % 3 == 0) edges.emplace_back(a, b);
    if (edges.empty() || edges.size() > 5) continue;
    const GraphTopology g = build_free_graph(edges);
    const bool exists = brute_force_exists(g);
    const SearchOutcome with = exhaustive_search(g, {}, SymmetryBreaking::Complement);
    const SearchOutcome without = exhaustive_search(g, {}, SymmetryBreaking::None);
    CHECK((with.status == SearchStatus::Found) == exists);
    CHECK(with.status == without.status);
    if (with.labeling) CHECK(verify_odd_graceful(g, *with.labeling).is_odd_graceful);
    ++checked;
  }
}

TEST_CASE("budget and determinism") {
  SearchBudget tiny;
  tiny.max_nodes = 3;
  const SearchOutcome cut = exhaustive_search(cycle(7), tiny);
  CHECK(cut.status == SearchStatus::BudgetExhausted);
  CHECK(cut.stats.nodes_expanded <= 3);

  const SearchOutcome a = exhaustive_search(build_union_graph(4, 3));
  const SearchOutcome b = exhaustive_search(build_union_graph(4, 3));
  CHECK(a.stats == b.stats);
  CHECK(*a.labeling == *b.labeling);

  SearchBudget zero;
  zero.max_nodes = 0;
  CHECK_THROWS(exhaustive_search(cycle(4), zero));

  SearchBudget timed;
  timed.timeout_ms = 60'000;
  CHECK(exhaustive_search(cycle(5), timed).status == SearchStatus::ExhaustedNone);
}

TEST_CASE("complement restriction bounds the first label") {
  const SearchOutcome out = exhaustive_search(cycle(4));
  REQUIRE(out.labeling);
  CHECK(*out.labeling->get(VertexId::free(1)) <= 3);
}
