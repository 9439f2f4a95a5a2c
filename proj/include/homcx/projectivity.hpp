#ifndef HOMCX_PROJECTIVITY_HPP
#define HOMCX_PROJECTIVITY_HPP

#include <string>
#include <tuple>
#include <vector>

#include "homcx/hom.hpp"

namespace homcx {

/// A vertex bijection between two k-simplices obtained by composing
/// perspectivities along a path of adjacent k-simplices. Composition is
/// written left to right: (p * q) first applies p, then q.
struct Projectivity {
  Simplex source, target;    // sorted vertex lists
  std::vector<int> image;    // image[i] = target vertex for source[i]
  std::vector<Simplex> path; // simplices visited, endpoints included

  int apply(int v) const;    // image of a source vertex
  bool is_identity() const { return source == target && sorted_image() == target; }
  Simplex sorted_image() const;
};

Projectivity identity_projectivity(const Simplex& s);

/// The unique bijection fixing the shared codimension-1 face pointwise.
/// Throws HypothesisError unless the simplices are equal or adjacent.
Projectivity perspectivity(const Simplex& s0, const Simplex& s1);

/// p * q: first p, then q (requires p.target == q.source).
Projectivity compose_projectivity(const Projectivity& p, const Projectivity& q);
Projectivity inverse_projectivity(const Projectivity& p);

/// Composite of consecutive perspectivities along a node path.
Projectivity projectivity_along(const std::vector<Simplex>& path);

/// Adjacency structure of the k-simplices of K: nodes are k-simplices,
/// edges join pairs sharing a (k-1)-face, labeled by that face.
struct DualGraph {
  int k = 0;
  std::vector<Simplex> nodes;
  std::vector<std::tuple<int, int, Simplex>> edges;      // (i, j, shared face)
  std::vector<std::vector<std::pair<int, int>>> adj;     // node -> (nbr, edge)
};

DualGraph dual_graph(const SimplicialComplex& K, int k);

/// The group of projectivities from sigma to itself, with one realizing
/// closed path stored per element.
struct HolonomyGroup {
  Simplex base;
  std::vector<Projectivity> generators;  // spanning-tree fundamental cycles
  std::vector<Projectivity> elements;    // full closure, identity included
  long order = 0;
  std::string label;
  bool component_only = false;  // dual graph disconnected at this dimension

  /// Element with the given vertex bijection on the base; null if absent.
  const Projectivity* find(const std::vector<int>& image) const;
};

HolonomyGroup holonomy_group(const SimplicialComplex& K, const Simplex& sigma);

/// Isomorphism-type heuristics for small permutation groups; falls back
/// to "order N".
std::string label_group(const std::vector<std::vector<int>>& perms, int degree);

/// Parallel transport along p as a cellular map between fibres. Both
/// fibres are Hom(simplex, L) realized as deleted products, position i
/// standing for the i-th smallest vertex of the respective simplex; the
/// map sends eta to eta o p. `fibre_target` realizes Hom(p.target, L),
/// `fibre_source` realizes Hom(p.source, L).
CellularMap transport_map(const HomComplex& fibre_target, const Projectivity& p,
                          const HomComplex& fibre_source);

}  // namespace homcx

#endif
