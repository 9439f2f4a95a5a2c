#ifndef HOMCX_SIMPLICIAL_HPP
#define HOMCX_SIMPLICIAL_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace homcx {

// A simplex is a strictly increasing list of vertex ids.
using Simplex = std::vector<int>;

struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

struct HypothesisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapExceeded : std::runtime_error {
  long long count;
  explicit CapExceeded(long long reached)
      : std::runtime_error("cell cap exceeded at " + std::to_string(reached)),
        count(reached) {}
};

/// Finite abstract simplicial complex stored by inclusion-maximal facets.
/// Vertices are dense ids 0..n-1; immutable after construction.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Builds from arbitrary facet lists: deduplicates, sorts, and keeps
  /// only inclusion-maximal faces. Throws on out-of-range or repeated ids.
  static SimplicialComplex from_facets(int n_vertices,
                                       std::vector<Simplex> facets,
                                       std::vector<std::string> labels = {});

  int n_vertices() const { return n_; }
  const std::vector<Simplex>& facets() const { return facets_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Dimension; -1 for a complex with no facets.
  int dim() const;
  bool is_pure() const;
  /// 1-dimensional pure complex (no isolated facet vertices of other dims).
  bool is_graph() const { return dim() == 1 && is_pure(); }

  /// Membership: a nonempty sorted vertex set is a simplex iff it is a
  /// subset of some facet.
  bool has_simplex(const Simplex& s) const;

  /// All d-simplices, deduplicated, lexicographic order.
  std::vector<Simplex> simplices_of_dim(int d) const;

  /// Edges {u,v} of the 1-skeleton as an adjacency matrix.
  std::vector<std::vector<bool>> adjacency() const;

  static SimplicialComplex from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

 private:
  int n_ = 0;
  std::vector<Simplex> facets_;
  std::vector<std::string> labels_;
};

enum class StandardKind { simplex, cycle, complete, path, boundary_simplex };

/// Named standard complexes. simplex m = Delta^[m] (m vertices, one facet);
/// cycle n = C_n; complete n = K_n (1-dimensional); path m = L_m (m
/// vertices); boundary_simplex m = boundary of Delta^[m].
SimplicialComplex standard_complex(StandardKind kind, int param);

SimplicialComplex simplex_complex(int m);
SimplicialComplex cycle_complex(int n);
SimplicialComplex complete_graph(int n);
SimplicialComplex path_complex(int m);
SimplicialComplex boundary_simplex(int m);

/// Complex of all cliques of a graph.
SimplicialComplex clique_complex(const SimplicialComplex& g);

/// The 1-skeleton as a 1-dimensional complex (vertex-edge graph).
SimplicialComplex vertex_edge_graph(const SimplicialComplex& k);

/// A vertex map between complexes; simpliciality/non-degeneracy are
/// queried, not enforced at construction.
struct VertexMap {
  SimplicialComplex source;
  SimplicialComplex target;
  std::vector<int> image;  // image[v] = target vertex for source vertex v
};

bool is_simplicial(const VertexMap& f);
/// Injective on every simplex (equivalently on every facet).
bool is_nondegenerate(const VertexMap& f);

VertexMap identity_map(const SimplicialComplex& k);
VertexMap compose(const VertexMap& f, const VertexMap& g);  // g after f

}  // namespace homcx

#endif
