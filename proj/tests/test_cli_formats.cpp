#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "helpers.hpp"
#include "homcx/chain.hpp"
#include "homcx/hom.hpp"

using namespace homcx;
using homcx::test::load_json;

TEST_CASE("shipped complexes parse and round trip") {
  for (const char* name :
       {"c5.json", "k4.json", "k5.json", "boundary-tetra.json",
        "phi2-annuli.json", "phi2-moebius.json"}) {
    auto j = load_json(name);
    auto k = SimplicialComplex::from_json(j);
    CHECK(k.n_vertices() > 0);
    auto back = SimplicialComplex::from_json(k.to_json());
    CHECK(back.facets() == k.facets());
    CHECK(back.n_vertices() == k.n_vertices());
  }
}

TEST_CASE("shipped complexes match the standard constructions") {
  CHECK(SimplicialComplex::from_json(load_json("c5.json")).facets() ==
        cycle_complex(5).facets());
  CHECK(SimplicialComplex::from_json(load_json("k4.json")).facets() ==
        complete_graph(4).facets());
  CHECK(SimplicialComplex::from_json(load_json("k5.json")).facets() ==
        complete_graph(5).facets());
  CHECK(SimplicialComplex::from_json(load_json("boundary-tetra.json")).facets() ==
        boundary_simplex(4).facets());
}

TEST_CASE("phi2 data files carry valid involutions") {
  for (const char* name : {"phi2-annuli.json", "phi2-moebius.json"}) {
    auto j = load_json(name);
    auto gamma = SimplicialComplex::from_json(j);
    auto omega = j.at("involution").get<std::vector<int>>();
    REQUIRE(static_cast<int>(omega.size()) == gamma.n_vertices());
    VertexMap w{gamma, gamma, omega};
    CHECK(is_simplicial(w));
    CHECK(is_nondegenerate(w));
    for (int v = 0; v < gamma.n_vertices(); ++v)
      CHECK(omega[static_cast<std::size_t>(omega[v])] == v);
    CHECK(gamma.has_simplex(j.at("sigma").get<Simplex>()));
    CHECK(gamma.is_pure());
    CHECK(gamma.dim() == 2);
  }
}

TEST_CASE("hexagon golden file equals the freshly built complex") {
  auto golden = HomComplex::from_json(load_json("hexagon.json"));
  auto fresh = build_hom(complete_graph(2), complete_graph(3));
  CHECK(golden.cells() == fresh.cells());
  CHECK(golden.to_json() == fresh.to_json());
  auto hg = homology(chains_of(golden), false);
  CHECK(hg.at(0).betti == 1);
  CHECK(hg.at(1).betti == 1);
}

TEST_CASE("serialization is deterministic") {
  auto h = build_hom(complete_graph(2), complete_graph(4));
  auto a = h.to_json().dump();
  auto b = HomComplex::from_json(h.to_json()).to_json().dump();
  CHECK(a == b);
}
