#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "homcx/projectivity.hpp"

using namespace homcx;

TEST_CASE("perspectivity basics") {
  auto p = perspectivity({1, 2, 3}, {1, 2, 4});
  CHECK(p.apply(1) == 1);
  CHECK(p.apply(2) == 2);
  CHECK(p.apply(3) == 4);

  auto id = perspectivity({0, 1}, {0, 1});
  CHECK(id.is_identity());

  CHECK_THROWS_AS(perspectivity({0, 1}, {2, 3}), HypothesisError);
  CHECK_THROWS_AS(perspectivity({0, 1}, {1, 2, 3}), HypothesisError);
}

TEST_CASE("composition and inverse") {
  auto p = perspectivity({1, 2, 3}, {1, 2, 4});
  auto pinv = inverse_projectivity(p);
  CHECK(compose_projectivity(p, pinv).is_identity());
  CHECK(compose_projectivity(pinv, p).is_identity());

  auto loop = projectivity_along({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {1, 2, 3}});
  CHECK(loop.source == Simplex{1, 2, 3});
  CHECK(loop.target == Simplex{1, 2, 3});
  CHECK(loop.apply(1) == 1);
  CHECK(loop.apply(2) == 3);
  CHECK(loop.apply(3) == 2);

  // Walking an odd cycle once around flips the base edge.
  auto flip =
      projectivity_along({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 1}});
  CHECK(flip.apply(0) == 1);
  CHECK(flip.apply(1) == 0);

  CHECK_THROWS(compose_projectivity(p, p));
}

TEST_CASE("dual graphs") {
  auto dg5 = dual_graph(cycle_complex(5), 1);
  CHECK(dg5.nodes.size() == 5);
  CHECK(dg5.edges.size() == 5);

  auto dgt = dual_graph(boundary_simplex(4), 2);
  CHECK(dgt.nodes.size() == 4);
  CHECK(dgt.edges.size() == 6);
  for (const auto& [i, j, face] : dgt.edges) {
    Simplex inter;
    std::set_intersection(dgt.nodes[i].begin(), dgt.nodes[i].end(),
                          dgt.nodes[j].begin(), dgt.nodes[j].end(),
                          std::back_inserter(inter));
    CHECK(inter == face);
    CHECK(face.size() == 2);
  }
}

TEST_CASE("holonomy of odd cycles has order 2") {
  for (int r = 1; r <= 3; ++r) {
    auto g = holonomy_group(cycle_complex(2 * r + 1), {0, 1});
    CHECK(g.order == 2);
    CHECK(g.label == "Z2");
    const auto* flip = g.find({1, 0});
    REQUIRE(flip != nullptr);
    // The stored path replays to the same bijection.
    auto replay = projectivity_along(flip->path);
    CHECK(replay.image == flip->image);
  }
}

TEST_CASE("holonomy of the tetrahedron boundary is S3") {
  auto g = holonomy_group(boundary_simplex(4), {0, 1, 2});
  CHECK(g.order == 6);
  CHECK(g.label == "S3");

  // Independent oracle: every closed dual-graph walk of length <= 6.
  auto dg = dual_graph(boundary_simplex(4), 2);
  int base = 0;
  while (dg.nodes[base] != Simplex{0, 1, 2}) ++base;
  std::set<std::vector<int>> seen;
  std::vector<Simplex> walk{dg.nodes[base]};
  std::function<void(int, int)> go = [&](int node, int depth) {
    if (node == base && walk.size() > 1)
      seen.insert(projectivity_along(walk).image);
    if (depth == 6) return;
    for (auto [nbr, e] : dg.adj[node]) {
      walk.push_back(dg.nodes[nbr]);
      go(nbr, depth + 1);
      walk.pop_back();
    }
  };
  seen.insert({0, 1, 2});
  go(base, 0);

  std::set<std::vector<int>> closure;
  for (const auto& el : g.elements) {
    closure.insert(el.image);
    auto replay = projectivity_along(el.path);
    CHECK(replay.image == el.image);
  }
  CHECK(closure == seen);
  CHECK(seen.size() == 6);
}

TEST_CASE("holonomy of a single simplex is trivial") {
  auto g = holonomy_group(simplex_complex(4), {0, 1, 2, 3});
  CHECK(g.order == 1);
  CHECK(g.label == "trivial");
}

TEST_CASE("group labels") {
  CHECK(label_group({{0, 1}}, 2) == "trivial");
  CHECK(label_group({{0, 1}, {1, 0}}, 2) == "Z2");
  std::vector<std::vector<int>> s3;
  std::vector<int> p{0, 1, 2};
  do s3.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  CHECK(label_group(s3, 3) == "S3");
}

TEST_CASE("transport along the identity and the flip") {
  auto fib = deleted_product(complete_graph(3), 2);
  auto idp = identity_projectivity({0, 1});
  auto idt = transport_map(fib, idp, fib);
  for (int i = 0; i < fib.num_cells(); ++i) {
    CHECK(idt.image[i] == i);
    CHECK(idt.coeff[i] == 1);
  }

  auto g = holonomy_group(cycle_complex(3), {0, 1});
  const auto* flip = g.find({1, 0});
  REQUIRE(flip != nullptr);
  auto tr = transport_map(fib, *flip, fib);
  VertexMap flipmap{fib.source(), fib.source(), {1, 0}};
  auto pre = induced_precompose(fib, flipmap, fib);
  CHECK(tr.image == pre.image);
  CHECK(tr.coeff == pre.coeff);
  // Transport is a dimension-preserving cell bijection.
  std::set<int> img(tr.image.begin(), tr.image.end());
  CHECK(static_cast<int>(img.size()) == fib.num_cells());
  for (int i = 0; i < fib.num_cells(); ++i) {
    CHECK(fib.dim_index(tr.image[i]).first == fib.dim_index(i).first);
    CHECK(tr.coeff[i] != 0);
  }
}

TEST_CASE("transport functoriality and path independence") {
  auto K = boundary_simplex(4);
  auto L = complete_graph(4);
  auto p = perspectivity({0, 1, 2}, {0, 1, 3});
  auto q = perspectivity({0, 1, 3}, {0, 2, 3});
  auto pq = compose_projectivity(p, q);

  auto fib0 = deleted_product(L, 3);  // all fibres share one realization
  auto t_q = transport_map(fib0, q, fib0);
  auto t_p = transport_map(fib0, p, fib0);
  auto t_pq = transport_map(fib0, pq, fib0);
  auto composed = compose_cellular(t_q, t_p);
  CHECK(t_pq.image == composed.image);
  CHECK(t_pq.coeff == composed.coeff);

  // Two different closed paths realizing the same bijection transport
  // identically.
  auto a = projectivity_along({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {0, 1, 2}});
  auto b = projectivity_along({{0, 1, 2}, {1, 2, 3}, {0, 2, 3}, {0, 1, 3},
                               {0, 1, 2}});
  if (a.image == b.image) {
    auto ta = transport_map(fib0, a, fib0);
    auto tb = transport_map(fib0, b, fib0);
    CHECK(ta.image == tb.image);
    CHECK(ta.coeff == tb.coeff);
  }
  // And a path equal to the identity transports to the identity.
  auto c = compose_projectivity(a, inverse_projectivity(a));
  REQUIRE(c.is_identity());
  auto tc = transport_map(fib0, c, fib0);
  for (int i = 0; i < fib0.num_cells(); ++i) {
    CHECK(tc.image[i] == i);
    CHECK(tc.coeff[i] == 1);
  }
}
