#include <random>

#include "doctest.h"
#include "oddgraceful/constructor.hpp"
#include "oddgraceful/verifier.hpp"
#include "oracles.hpp"

using namespace oddgraceful;

namespace {

const std::vector<std::pair<int, int>> kTriangle{{1, 2}, {2, 3}, {3, 1}};

Labeling free_labels(std::initializer_list<Label> values) {
  Labeling f;
  int i = 1;
  for (Label v : values) f.set(VertexId::free(i++), v);
  return f;
}

}  // namespace

TEST_CASE("edge_labels") {
  const GraphTopology g = build_union_graph(4, 3);
  const EdgeLabelMap map = edge_labels(g, closed_form_labeling(validate_params(4, 3)));
  std::vector<Label> got;
  for (const auto& el : map) got.push_back(el.value);
  CHECK(got == std::vector<Label>{11, 9, 5, 7, 3, 1});
  CHECK(map[3].edge == Edge{VertexId::cycle(1), VertexId::cycle(4)});

  Labeling constant;
  for (VertexId v : g.vertices()) constant.set(v, 5);
  for (const auto& el : edge_labels(g, constant)) CHECK(el.value == 0);

  const std::vector<std::pair<int, int>> single{{1, 2}};
  const GraphTopology e = build_free_graph(single);
  CHECK(edge_labels(e, free_labels({0, 1}))[0].value == 1);

  Labeling partial;
  partial.set(VertexId::free(1), 0);
  CHECK_THROWS_AS(edge_labels(e, partial), MissingVertexLabel);
  CHECK_THROWS_AS(verify_odd_graceful(e, partial), MissingVertexLabel);
}

TEST_CASE("isolated vertices must be labeled") {
  const std::vector<std::pair<int, int>> single{{1, 2}};
  const std::vector<int> extra{3};
  const GraphTopology g = build_free_graph(single, extra);
  CHECK_THROWS_AS(verify_odd_graceful(g, free_labels({0, 1})), MissingVertexLabel);
  // Only labels 0 and 1 exist for q = 1, so three vertices cannot be injective.
  const VerificationReport r = verify_odd_graceful(g, free_labels({0, 1, 1}));
  CHECK(r.has(ViolationKind::DuplicateVertexLabel));
}

TEST_CASE("triangle (0, 1, 2)") {
  const GraphTopology t = build_free_graph(kTriangle);
  const VerificationReport r = verify_odd_graceful(t, free_labels({0, 1, 2}));
  CHECK_FALSE(r.is_odd_graceful);
  // edges: x1-x2 = 1, x2-x3 = 1, x1-x3 = 2
  REQUIRE(r.violations.size() == 3);
  CHECK(r.violations[0] == Violation{ViolationKind::EdgeLabelEven, {}, {2}, {2}});
  CHECK(r.violations[1] == Violation{ViolationKind::DuplicateEdgeLabel, {}, {0, 1}, {1}});
  CHECK(r.violations[2] == Violation{ViolationKind::EdgeLabelSetIncomplete, {}, {}, {3, 5}});
  CHECK(describe(r.violations[1], t) == "DuplicateEdgeLabel: label 1 on x1-x2 x2-x3");
}

TEST_CASE("range and duplicate vertex labels") {
  const std::vector<std::pair<int, int>> p3{{1, 2}, {2, 3}};
  const GraphTopology g = build_free_graph(p3);
  const VerificationReport r = verify_odd_graceful(g, free_labels({-1, 2, 2}));
  REQUIRE(r.violations.size() >= 2);
  CHECK(r.violations[0] == Violation{ViolationKind::VertexLabelOutOfRange, {VertexId::free(1)}, {}, {-1}});
  CHECK(r.violations[1] ==
        Violation{ViolationKind::DuplicateVertexLabel, {VertexId::free(2), VertexId::free(3)}, {}, {2}});
  CHECK(r.has(ViolationKind::EdgeLabelEven));  // |2 - 2| = 0

  CHECK(verify_odd_graceful(g, free_labels({0, 3, 2})).is_odd_graceful);
  CHECK(verify_odd_graceful(g, free_labels({0, 3, 4})).has(ViolationKind::VertexLabelOutOfRange));
}

TEST_CASE("C8 + P12 passes") {
  const GraphTopology g = build_union_graph(8, 12);
  CHECK(g.size() == 19);
  CHECK(verify_odd_graceful(g, closed_form_labeling(validate_params(8, 12))).is_odd_graceful);
}

TEST_CASE("verdict agrees with the set-based oracle on random labelings") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const int vertices = 3 + static_cast<int>(rng() % 4);
    std::vector<std::pair<int, int>> edges;
    for (int a = 1; a <= vertices; ++a) {
      for (int b = a + 1; b <= vertices; ++b) {
        if (rng() % 2) edges.emplace_back(a, b);
      }
    }
    if (edges.empty()) continue;
    std::vector<int> all(static_cast<std::size_t>(vertices));
    for (int i = 0; i < vertices; ++i) all[i] = i + 1;
    const GraphTopology g = build_free_graph(edges, all);
    const Label q = static_cast<Label>(g.size());

    std::vector<Label> f(static_cast<std::size_t>(vertices));
    Labeling labeling;
    for (int i = 0; i < vertices; ++i) {
      f[i] = static_cast<Label>(rng() % static_cast<std::uint64_t>(2 * q + 1)) - (rng() % 8 == 0 ? 1 : 0);
      labeling.set(VertexId::free(i + 1), f[i]);
    }
    oracle::EdgeList zero_based;
    for (const Edge& e : g.edges()) zero_based.emplace_back(e.first.index - 1, e.second.index - 1);
    const VerificationReport r = verify_odd_graceful(g, labeling);
    CHECK(r.is_odd_graceful == oracle::is_odd_graceful(vertices, zero_based, f));
    CHECK(r.is_odd_graceful == r.violations.empty());
  }
}

TEST_CASE("odd cycles never pass") {
  // Around a cycle the signed differences sum to 0, so the labels sum to an
  // even number; m odd labels cannot all be odd.
  std::mt19937_64 rng(11);
  for (int m : {3, 5, 7}) {
    for (int trial = 0; trial < 500; ++trial) {
      const GraphTopology g = build_free_graph(oracle::cycle_edges(m, 1));
      std::vector<Label> pool(static_cast<std::size_t>(2 * m));
      for (int i = 0; i < 2 * m; ++i) pool[i] = i;
      std::shuffle(pool.begin(), pool.end(), rng);
      Labeling f;
      for (int i = 1; i <= m; ++i) f.set(VertexId::free(i), pool[i - 1]);
      CHECK_FALSE(verify_odd_graceful(g, f).is_odd_graceful);
    }
  }
}

TEST_CASE("complement labeling") {
  const GraphTopology g = build_union_graph(6, 5);
  const Labeling f = closed_form_labeling(validate_params(6, 5));
  const Labeling c = complement_labeling(g, f);
  CHECK(*c.get(VertexId::cycle(1)) == 2 * 10 - 1);
  CHECK(verify_odd_graceful(g, c).is_odd_graceful);
  CHECK(complement_labeling(g, c) == f);
}
