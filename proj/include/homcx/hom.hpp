#ifndef HOMCX_HOM_HPP
#define HOMCX_HOM_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "homcx/simplicial.hpp"

namespace homcx {

/// A cell of Hom(K,L): one nonempty sorted vertex subset of L per vertex
/// of K. Adjacent vertices of K get disjoint subsets, and over every facet
/// of K the join of the assigned sets is a subcomplex of L (every
/// transversal picking one vertex per set is a simplex of L).
struct MultiHom {
  std::vector<std::vector<int>> assign;

  int dim() const {
    int d = 0;
    for (const auto& s : assign) d += static_cast<int>(s.size()) - 1;
    return d;
  }
  bool operator==(const MultiHom& o) const { return assign == o.assign; }
  bool operator<(const MultiHom& o) const {
    if (dim() != o.dim()) return dim() < o.dim();
    return assign < o.assign;
  }
};

inline constexpr long long kDefaultCellCap = 2'000'000;

/// The prodsimplicial cell complex Hom(K,L), cells grouped by dimension.
class HomComplex {
 public:
  HomComplex() = default;
  HomComplex(SimplicialComplex source, SimplicialComplex target,
             std::vector<MultiHom> cells);

  const SimplicialComplex& source() const { return source_; }
  const SimplicialComplex& target() const { return target_; }
  const std::vector<MultiHom>& cells() const { return cells_; }
  int num_cells() const { return static_cast<int>(cells_.size()); }
  /// Top cell dimension; -1 when empty.
  int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
  /// Global indices of the cells of dimension d (ordered lexicographically).
  const std::vector<int>& cells_of_dim(int d) const;
  int cells_in_dim(int d) const;
  /// Global index of a cell; -1 if absent.
  int index_of(const MultiHom& c) const;
  /// (dimension, position within that dimension) of a global cell index.
  std::pair<int, int> dim_index(int global) const { return dim_index_[global]; }

  nlohmann::json to_json() const;
  static HomComplex from_json(const nlohmann::json& j);

 private:
  SimplicialComplex source_, target_;
  std::vector<MultiHom> cells_;  // sorted by (dim, assignment)
  std::vector<std::vector<int>> by_dim_;
  std::vector<std::pair<int, int>> dim_index_;
  std::map<std::vector<std::vector<int>>, int> index_;
};

/// Enumerates all cells of Hom(K,L) by depth-first assignment with
/// pruning. Throws CapExceeded past `cap` cells.
HomComplex build_hom(const SimplicialComplex& K, const SimplicialComplex& L,
                     long long cap = kDefaultCellCap);

/// The k-fold deleted product of L, realized as Hom(Delta^[k], L).
HomComplex deleted_product(const SimplicialComplex& L, int k,
                           long long cap = kDefaultCellCap);

/// Codimension-1 faces of a cell with product-orientation signs: deleting
/// vertex x (position j in assign[v]) carries sign (-1)^(offset+j) where
/// offset is the sum of factor dimensions before v.
std::vector<std::pair<MultiHom, int>> cell_facets(const HomComplex& h,
                                                  const MultiHom& cell);

/// A cellular map between Hom complexes: per source cell, the image cell
/// and the chain-level coefficient (0 when the cell maps degenerately).
struct CellularMap {
  const HomComplex* source = nullptr;
  const HomComplex* target = nullptr;
  std::vector<int> image;          // global target index per source cell
  std::vector<int> coeff;          // -1, 0, +1
};

/// eta |-> eta o f for non-degenerate f : K -> K'; maps Hom(K',L) (= h)
/// into `target` = Hom(K,L).
CellularMap induced_precompose(const HomComplex& h, const VertexMap& f,
                               const HomComplex& target);

/// eta |-> g o eta for non-degenerate g : L -> L'; maps Hom(K,L) (= h)
/// into `target` = Hom(K,L').
CellularMap induced_postcompose(const HomComplex& h, const VertexMap& g,
                                const HomComplex& target);

CellularMap identity_cellular(const HomComplex& h);
/// b after a (requires a.target == b.source).
CellularMap compose_cellular(const CellularMap& a, const CellularMap& b);

/// Koszul sign of permuting graded factors: output slot i receives input
/// factor perm[i] of dimension dims[perm[i]].
int koszul_sign(const std::vector<int>& perm, const std::vector<int>& dims);

}  // namespace homcx

#endif
