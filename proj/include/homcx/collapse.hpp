#ifndef HOMCX_COLLAPSE_HPP
#define HOMCX_COLLAPSE_HPP

#include <optional>
#include <string>
#include <vector>

#include "homcx/chain.hpp"
#include "homcx/hom.hpp"

namespace homcx {

/// Shelling of a pure complex: each facet after the first meets the union
/// of its predecessors in a pure codimension-1 subcomplex. restriction[j]
/// is the minimal new face added by facet j; type[j] its dimension (-1
/// for the first facet).
struct ShellingOrder {
  std::vector<Simplex> order;
  std::vector<Simplex> restrictions;
  std::vector<int> types;
};

enum class SearchStatus { found, impossible, budget_exhausted };

struct ShellingSearch {
  SearchStatus status = SearchStatus::impossible;
  ShellingOrder order;     // meaningful only when found
  long long nodes = 0;
};

/// Backtracking over facet orders; distinguishes a completed exhaustive
/// search (impossible) from running out of budget.
ShellingSearch find_shelling(const SimplicialComplex& K,
                             long long budget = 1'000'000);

/// Recomputes restrictions and validates the shelling condition.
bool validate_shelling(const SimplicialComplex& K, const ShellingOrder& s);

/// One elementary vertex collapse: facet `removed` meets the rest of the
/// complex exactly in its codimension-1 face `retained`; `free_vertex` is
/// the vertex dropped, `witness` = retained + apex shows `retained` is
/// not maximal in the rest.
struct CollapseStep {
  Simplex removed;
  Simplex retained;
  Simplex witness;
  int free_vertex = -1;
  int apex = -1;
};

struct CollapseSequence {
  std::vector<CollapseStep> steps;
  Simplex final_facet;  // the single facet left at the end
};

struct TreeLikeSearch {
  SearchStatus status = SearchStatus::impossible;
  CollapseSequence sequence;
  long long nodes = 0;
};

/// Peels facets glued along a single codimension-1 face, greedily in
/// lexicographic order with backtracking, until one facet remains.
TreeLikeSearch is_tree_like(const SimplicialComplex& K,
                            long long budget = 1'000'000);

/// The collapse order read backwards is a shelling whose restriction
/// faces are all single vertices.
ShellingOrder shelling_from_collapse(const CollapseSequence& c);

/// K with vertex v deleted and ids above v shifted down by one.
SimplicialComplex remove_vertex(const SimplicialComplex& K, int v);

/// The retraction K -> remove_vertex(K, v) sending v to u and everything
/// else to itself (compacted). Throws HypothesisError when some facet
/// through v does not fold onto a simplex avoiding v.
VertexMap fold_map(const SimplicialComplex& K, int v, int u);

/// The inclusion remove_vertex(K, v) -> K.
VertexMap unfold_inclusion(const SimplicialComplex& K, int v);

struct CollapseReport {
  bool step_valid = false;
  bool gamma_rho_identity = false;  // exact cell-level identity
  bool homology_inverse = false;    // mutually inverse isos in every degree
  HomologyGroups h_before, h_after;
  std::string detail;
};

/// Builds Hom(K,L) and Hom(K',L) for the collapsed complex K', forms the
/// two precomposition maps, and checks that their composite is the
/// identity on the nose and that both induce inverse homology
/// isomorphisms.
CollapseReport verify_collapse_equivalence(const SimplicialComplex& K,
                                           const CollapseStep& step,
                                           const SimplicialComplex& L,
                                           long long cap = kDefaultCellCap);

}  // namespace homcx

#endif
