#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "homcx/simplicial.hpp"

using namespace homcx;

namespace {

// Independent d-simplex count: enumerate every subset of every facet.
long brute_count_dim(const SimplicialComplex& k, int d) {
  std::set<Simplex> seen;
  for (const auto& f : k.facets()) {
    int m = static_cast<int>(f.size());
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      if (__builtin_popcount(mask) != d + 1) continue;
      Simplex s;
      for (int i = 0; i < m; ++i)
        if (mask & (1u << i)) s.push_back(f[i]);
      seen.insert(s);
    }
  }
  return static_cast<long>(seen.size());
}

}  // namespace

TEST_CASE("from_facets basic shapes") {
  auto c3 = SimplicialComplex::from_facets(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(c3.n_vertices() == 3);
  CHECK(c3.facets().size() == 3);
  CHECK(c3.dim() == 1);

  auto tet = SimplicialComplex::from_facets(4, {{0, 1, 2, 3}});
  CHECK(tet.facets() == std::vector<Simplex>{{0, 1, 2, 3}});
  CHECK(tet.dim() == 3);
}

TEST_CASE("from_facets keeps only inclusion-maximal faces") {
  auto k = SimplicialComplex::from_facets(3, {{0, 1, 2}, {0, 1}});
  CHECK(k.facets() == std::vector<Simplex>{{0, 1, 2}});

  auto dup = SimplicialComplex::from_facets(3, {{1, 0}, {0, 1}, {2}});
  CHECK(dup.facets() == std::vector<Simplex>{{0, 1}, {2}});
}

TEST_CASE("from_facets rejects bad ids") {
  CHECK_THROWS(SimplicialComplex::from_facets(2, {{0, 2}}));
  CHECK_THROWS(SimplicialComplex::from_facets(3, {{0, 0}}));
  CHECK_THROWS(SimplicialComplex::from_facets(3, {{}}));
  CHECK_THROWS(SimplicialComplex::from_facets(2, {{-1, 0}}));
}

TEST_CASE("simplices_of_dim fixed examples") {
  auto c3 = cycle_complex(3);
  CHECK(c3.simplices_of_dim(1) ==
        std::vector<Simplex>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(simplex_complex(4).simplices_of_dim(2).size() == 4);
  CHECK(cycle_complex(5).simplices_of_dim(0).size() == 5);
  CHECK(cycle_complex(5).simplices_of_dim(2).empty());
}

TEST_CASE("simplices_of_dim matches brute-force subset count") {
  std::vector<SimplicialComplex> ks = {
      cycle_complex(6), boundary_simplex(4), simplex_complex(5),
      SimplicialComplex::from_facets(6, {{0, 1, 2}, {2, 3}, {3, 4, 5}, {0, 5}}),
  };
  for (const auto& k : ks)
    for (int d = 0; d <= k.dim() + 1; ++d)
      CHECK(static_cast<long>(k.simplices_of_dim(d).size()) ==
            brute_count_dim(k, d));
}

TEST_CASE("standard complexes") {
  auto c5 = cycle_complex(5);
  CHECK(c5.facets() ==
        std::vector<Simplex>{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(complete_graph(3).facets() == cycle_complex(3).facets());
  auto bd = boundary_simplex(4);
  CHECK(bd.facets().size() == 4);
  CHECK(bd.dim() == 2);
  CHECK(path_complex(3).facets() == std::vector<Simplex>{{0, 1}, {1, 2}});
  CHECK(standard_complex(StandardKind::simplex, 3).facets() ==
        std::vector<Simplex>{{0, 1, 2}});
  CHECK_THROWS(cycle_complex(2));
  CHECK_THROWS(simplex_complex(0));
}

TEST_CASE("clique_complex") {
  CHECK(clique_complex(complete_graph(3)).facets() ==
        std::vector<Simplex>{{0, 1, 2}});
  CHECK(clique_complex(complete_graph(4)).facets() ==
        std::vector<Simplex>{{0, 1, 2, 3}});
  CHECK(clique_complex(cycle_complex(5)).facets() == cycle_complex(5).facets());
  CHECK_THROWS(clique_complex(boundary_simplex(4)));
}

TEST_CASE("vertex_edge_graph") {
  CHECK(vertex_edge_graph(simplex_complex(4)).facets() ==
        complete_graph(4).facets());
  CHECK(vertex_edge_graph(boundary_simplex(4)).facets() ==
        complete_graph(4).facets());
  CHECK(vertex_edge_graph(cycle_complex(5)).facets() ==
        cycle_complex(5).facets());
}

TEST_CASE("vertex_edge_graph of clique_complex recovers the graph") {
  std::vector<SimplicialComplex> graphs = {
      cycle_complex(4), cycle_complex(7), complete_graph(5), path_complex(4),
      SimplicialComplex::from_facets(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {4}}),
  };
  for (const auto& g : graphs) {
    auto back = vertex_edge_graph(clique_complex(g));
    CHECK(back.n_vertices() == g.n_vertices());
    CHECK(back.facets() == g.facets());
  }
}

TEST_CASE("membership is downward closed") {
  auto k = SimplicialComplex::from_facets(5, {{0, 1, 2, 3}, {3, 4}});
  for (const auto& f : k.facets()) {
    int m = static_cast<int>(f.size());
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      Simplex s;
      for (int i = 0; i < m; ++i)
        if (mask & (1u << i)) s.push_back(f[i]);
      CHECK(k.has_simplex(s));
    }
  }
  CHECK_FALSE(k.has_simplex({0, 4}));
  CHECK_FALSE(k.has_simplex({1, 4}));
}

TEST_CASE("is_nondegenerate") {
  CHECK(is_nondegenerate(identity_map(cycle_complex(5))));

  VertexMap collapse{simplex_complex(2), simplex_complex(1), {0, 0}};
  CHECK(is_simplicial(collapse));
  CHECK_FALSE(is_nondegenerate(collapse));

  // Fold of two triangles glued along an edge onto one of them.
  auto sigma = SimplicialComplex::from_facets(4, {{0, 1, 2}, {0, 1, 3}});
  auto tri = simplex_complex(3);
  VertexMap fold{sigma, tri, {0, 1, 2, 2}};
  CHECK(is_simplicial(fold));
  CHECK(is_nondegenerate(fold));
}

TEST_CASE("vertex map composition") {
  VertexMap f{path_complex(3), cycle_complex(5), {0, 1, 2}};
  VertexMap g{cycle_complex(5), cycle_complex(5), {1, 2, 3, 4, 0}};
  auto h = compose(f, g);
  CHECK(h.image == std::vector<int>{1, 2, 3});
  CHECK(is_simplicial(h));
}

TEST_CASE("json round trip") {
  auto k = SimplicialComplex::from_facets(4, {{0, 1, 2}, {2, 3}}, {"a", "b", "c", "d"});
  auto j = k.to_json();
  auto back = SimplicialComplex::from_json(j);
  CHECK(back.n_vertices() == k.n_vertices());
  CHECK(back.facets() == k.facets());
  CHECK(back.labels() == k.labels());
  CHECK(back.to_json() == j);

  auto unsorted = nlohmann::json::parse(R"({"n":3,"facets":[[2,1],[0,1]]})");
  auto u = SimplicialComplex::from_json(unsorted);
  CHECK(u.facets() == std::vector<Simplex>{{0, 1}, {1, 2}});
}
