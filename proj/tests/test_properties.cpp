#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "homcx/chain.hpp"
#include "homcx/chromatic.hpp"
#include "homcx/projectivity.hpp"

using namespace homcx;

namespace {

SimplicialComplex random_graph(std::mt19937& rng, int n, double p) {
  std::vector<Simplex> facets;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < p) facets.push_back({u, v});
  if (facets.empty()) facets.push_back({0, n > 1 ? 1 : 0});
  return SimplicialComplex::from_facets(n, facets);
}

SimplicialComplex random_complex(std::mt19937& rng) {
  int n = 4 + static_cast<int>(rng() % 3);
  std::vector<Simplex> facets;
  int tries = 3 + static_cast<int>(rng() % 5);
  for (int t = 0; t < tries; ++t) {
    int sz = 2 + static_cast<int>(rng() % 3);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Simplex f(perm.begin(), perm.begin() + std::min(sz, n));
    std::sort(f.begin(), f.end());
    facets.push_back(f);
  }
  return SimplicialComplex::from_facets(n, facets);
}

// A pure 2-complex with a connected facet adjacency structure.
SimplicialComplex random_pure2(std::mt19937& rng) {
  int n = 5 + static_cast<int>(rng() % 2);
  std::vector<Simplex> facets = {{0, 1, 2}};
  int extra = 2 + static_cast<int>(rng() % 3);
  for (int t = 0; t < extra; ++t) {
    const auto& base = facets[rng() % facets.size()];
    int drop = static_cast<int>(rng() % 3);
    int add = static_cast<int>(rng() % n);
    Simplex f;
    for (int i = 0; i < 3; ++i)
      if (i != drop) f.push_back(base[i]);
    if (std::binary_search(f.begin(), f.end(), add)) continue;
    f.push_back(add);
    std::sort(f.begin(), f.end());
    facets.push_back(f);
  }
  return SimplicialComplex::from_facets(n, facets);
}

}  // namespace

TEST_CASE("boundary composes to zero on random Hom complexes") {
  // chains_of checks the identity internally and throws on failure.
  std::mt19937 rng(2024);
  int built = 0;
  for (int t = 0; t < 60 && built < 30; ++t) {
    auto k = random_graph(rng, 3 + static_cast<int>(rng() % 2), 0.7);
    auto l = random_graph(rng, 4 + static_cast<int>(rng() % 2), 0.7);
    HomComplex h;
    try {
      h = build_hom(k, l, 200000);
    } catch (const CapExceeded&) {
      continue;
    }
    if (h.num_cells() == 0) continue;
    CHECK_NOTHROW(chains_of(h));
    ++built;
  }
  CHECK(built >= 20);
}

TEST_CASE("induced chain maps commute with boundaries on random instances") {
  // chain_map_of throws on a commutation failure.
  std::mt19937 rng(4096);
  int checked = 0;
  for (int t = 0; t < 40 && checked < 15; ++t) {
    int nl = 4 + static_cast<int>(rng() % 2);
    auto l = random_graph(rng, nl, 0.8);
    auto lp = complete_graph(nl);
    auto h = build_hom(complete_graph(2), l, 100000);
    if (h.num_cells() == 0) continue;
    auto hp = build_hom(complete_graph(2), lp, 100000);
    auto c = chains_of(h);
    auto cp = chains_of(hp);

    VertexMap incl{l, lp, {}};
    for (int v = 0; v < nl; ++v) incl.image.push_back(v);
    CHECK_NOTHROW(chain_map_of(induced_postcompose(h, incl, hp), c, cp));

    VertexMap flip{complete_graph(2), complete_graph(2), {1, 0}};
    CHECK_NOTHROW(chain_map_of(induced_precompose(h, flip, h), c, c));
    ++checked;
  }
  CHECK(checked >= 10);
}

TEST_CASE("transport functoriality and path independence, 50 instances") {
  std::mt19937 rng(31337);
  int done = 0;
  while (done < 50) {
    auto K = random_pure2(rng);
    auto dg = dual_graph(K, 2);
    if (dg.edges.empty()) continue;
    auto L = (rng() % 2) ? complete_graph(4) : complete_graph(5);
    auto fib = deleted_product(L, 3);

    // Random path of three hops.
    std::vector<Simplex> walk;
    int node = static_cast<int>(rng() % dg.nodes.size());
    walk.push_back(dg.nodes[node]);
    for (int s = 0; s < 3; ++s) {
      const auto& nb = dg.adj[node];
      if (nb.empty()) break;
      node = nb[rng() % nb.size()].first;
      walk.push_back(dg.nodes[node]);
    }
    if (walk.size() < 3) continue;

    // Functoriality: transporting along the whole walk equals composing
    // the one-hop transports back to front.
    auto whole = projectivity_along(walk);
    auto t_whole = transport_map(fib, whole, fib);
    CellularMap acc = identity_cellular(fib);
    for (std::size_t i = walk.size() - 1; i >= 1; --i) {
      auto hop = perspectivity(walk[i - 1], walk[i]);
      acc = compose_cellular(acc, transport_map(fib, hop, fib));
    }
    CHECK(t_whole.image == acc.image);
    CHECK(t_whole.coeff == acc.coeff);

    // Path independence: the walk followed by its reverse gives the
    // identity projectivity and must transport to the identity map.
    std::vector<Simplex> there_and_back = walk;
    for (auto it = walk.rbegin() + 1; it != walk.rend(); ++it)
      there_and_back.push_back(*it);
    auto round = projectivity_along(there_and_back);
    REQUIRE(round.is_identity());
    auto t_round = transport_map(fib, round, fib);
    auto ident = identity_cellular(fib);
    CHECK(t_round.image == ident.image);
    CHECK(t_round.coeff == ident.coeff);
    ++done;
  }
}

TEST_CASE("chromatic number equals the 1-skeleton chromatic number, 20 complexes") {
  std::mt19937 rng(555);
  for (int t = 0; t < 20; ++t) {
    auto k = random_complex(rng);
    auto [chi, witness] = chromatic_number(k);

    // Independent route 1: color the vertex-edge graph.
    auto [chi_g, wg] = chromatic_number(vertex_edge_graph(k));
    CHECK(chi == chi_g);

    // Independent route 2: smallest simplex admitting a non-degenerate map.
    int chi_map = 0;
    for (int m = 1; m <= k.n_vertices(); ++m)
      if (exists_nondegenerate_map(k, simplex_complex(m)).has_value()) {
        chi_map = m;
        break;
      }
    CHECK(chi == chi_map);
  }
}
