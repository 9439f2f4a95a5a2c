#ifndef HOMCX_CHAIN_HPP
#define HOMCX_CHAIN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "homcx/hom.hpp"

namespace homcx {

using Z = boost::multiprecision::cpp_int;

/// Column-major sparse integer matrix; entries per column sorted by row.
struct SparseMat {
  int rows = 0, cols = 0;
  std::vector<std::vector<std::pair<int, std::int64_t>>> col;

  SparseMat() = default;
  SparseMat(int r, int c) : rows(r), cols(c), col(c) {}
};

/// Dense arbitrary-precision matrix, row-major.
struct ZMat {
  int rows = 0, cols = 0;
  std::vector<Z> a;

  ZMat() = default;
  ZMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  Z& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Z& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
  static ZMat identity(int n);
  bool operator==(const ZMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

ZMat mul(const ZMat& a, const ZMat& b);
std::vector<Z> mul(const ZMat& a, const std::vector<Z>& v);
ZMat to_dense(const SparseMat& m);

/// Integer cellular chain complex: per-dimension ranks and boundaries.
/// boundary[d] maps dimension-d chains to dimension-(d-1) chains (d >= 1);
/// boundary[0] is the zero map out of dimension 0.
struct ChainComplex {
  std::vector<int> ranks;
  std::vector<SparseMat> boundary;

  int top_dim() const { return static_cast<int>(ranks.size()) - 1; }
  bool empty() const { return ranks.empty(); }
};

/// Assembles the chain complex of a Hom complex from cell_facets signs and
/// verifies that consecutive boundaries compose to zero.
ChainComplex chains_of(const HomComplex& h);

/// Simplicial chain complex of K with the standard alternating-sign
/// boundary on lexicographically ordered simplices.
ChainComplex simplicial_chains(const SimplicialComplex& k);

struct ChainMap {
  const ChainComplex* source = nullptr;
  const ChainComplex* target = nullptr;
  std::vector<SparseMat> mats;  // mats[d]: target.ranks[d] x source.ranks[d]
};

/// Chain-level matrices of a cellular map; verifies commutation with the
/// boundaries and throws InternalError on failure.
ChainMap chain_map_of(const CellularMap& m, const ChainComplex& src,
                      const ChainComplex& tgt);
ChainMap compose_chain(const ChainMap& a, const ChainMap& b);  // b after a

/// Chain map of eta |-> eta o f for an arbitrary non-degenerate simplicial
/// f : K -> K', from Hom(K',L) (= h) into `target` = Hom(K,L). When f
/// identifies vertices the duplicated factor is expanded by the iterated
/// front-face/back-face diagonal, so the result commutes with boundaries
/// even though the point map is not cellular. Agrees with
/// chain_map_of(induced_precompose(...)) when f is injective.
ChainMap precompose_chain(const HomComplex& h, const VertexMap& f,
                          const HomComplex& target, const ChainComplex& src,
                          const ChainComplex& tgt);

bool chain_maps_equal(const ChainMap& a, const ChainMap& b);
ChainMap identity_chain(const ChainComplex& c);

struct HomologyGroups {
  struct Group {
    long betti = 0;
    std::vector<Z> torsion;  // invariant factors > 1, divisibility chain
    bool operator==(const Group& o) const { return betti == o.betti && torsion == o.torsion; }
  };
  std::vector<Group> dims;
  bool reduced = false;
  bool empty_complex = false;

  const Group& at(int d) const;
  std::string to_string() const;
};

/// Betti numbers and torsion via Smith normal form; sparse unit-pivot
/// elimination with a dense arbitrary-precision core for the remainder.
HomologyGroups homology(const ChainComplex& c, bool reduced);

/// Invariant factors (nonzero diagonal of the Smith normal form).
std::vector<Z> smith_invariants(const SparseMat& m);

/// Dense Smith decomposition with unimodular transforms: U * A * V = D,
/// nonzero diagonal entries first, divisibility chain enforced.
struct SmithDecomposition {
  ZMat d, u, u_inv, v, v_inv;
  int rank = 0;
};
SmithDecomposition smith_decompose(const ZMat& a);

/// Per-dimension homology data with enough basis information to push
/// cycles to homology classes and compute induced maps.
struct HomologyBasisDim {
  int chain_rank = 0;
  int boundary_rank = 0;          // rank of d_d
  int kernel_rank = 0;            // chain_rank - boundary_rank
  ZMat v_inv;                     // from SNF of d_d (chain_rank x chain_rank)
  ZMat kernel_basis;              // chain_rank x kernel_rank
  ZMat up, up_inv;                // from SNF of the image-in-kernel matrix
  std::vector<Z> sigma;           // its diagonal (kernel_rank entries, zeros padded)
  int image_rank = 0;             // number of nonzero sigma
  long betti = 0;
  std::vector<Z> torsion;

  /// Coordinates of a cycle's homology class: torsion coordinates (mod
  /// the matching invariant factor) followed by free coordinates.
  std::vector<Z> torsion_coords(const std::vector<Z>& cycle) const;
  std::vector<Z> free_coords(const std::vector<Z>& cycle) const;
  /// Chain representative of the i-th free homology generator.
  std::vector<Z> free_generator(int i) const;
};

struct HomologyBasisData {
  std::vector<HomologyBasisDim> dims;
  HomologyGroups groups(bool reduced) const;
};

HomologyBasisData homology_with_basis(const ChainComplex& c);

/// Matrix of the induced map on the free part of H_d in the SNF bases:
/// betti(target) x betti(source). Torsion classes are handled by
/// torsion_coords on demand.
ZMat induced_on_homology(const ChainMap& f, const HomologyBasisData& src,
                         const HomologyBasisData& tgt, int d);

struct ConnectivityEstimate {
  int k = -2;  // -2: empty space, -1: nonvanishing reduced H_0
  enum class Level { homology, homology_pi1 } level = Level::homology;
};

/// Largest k with reduced H_i = 0 for all i <= k. With attempt_pi1, runs a
/// bounded edge-path-group simplification on the 2-skeleton of h and
/// upgrades the certificate only if the presentation trivializes.
ConnectivityEstimate connectivity_estimate(const HomologyGroups& hg,
                                           bool attempt_pi1 = false,
                                           const HomComplex* h = nullptr);

}  // namespace homcx

#endif
