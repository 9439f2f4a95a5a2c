#ifndef HOMCX_CHROMATIC_HPP
#define HOMCX_CHROMATIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "homcx/chain.hpp"
#include "homcx/collapse.hpp"
#include "homcx/projectivity.hpp"

namespace homcx {

/// A proper coloring of the 1-skeleton, equivalently a non-degenerate
/// simplicial map into a simplex.
struct Coloring {
  int m = 0;                // number of colors
  std::vector<int> colors;  // per vertex, in [0, m)

  VertexMap as_map(const SimplicialComplex& k) const;
};

/// Exact chromatic number with a witness: greedy upper bound, clique
/// lower bound, branch and bound in between.
std::pair<int, Coloring> chromatic_number(const SimplicialComplex& K);

/// Backtracking search for a non-degenerate simplicial map K -> T.
std::optional<VertexMap> exists_nondegenerate_map(const SimplicialComplex& K,
                                                  const SimplicialComplex& T);

struct WeightedTarget {
  SimplicialComplex complex;
  double weight = 0;
  std::string name;
};

struct GeneralizedChromatic {
  double value = 0;       // +infinity encoded by attained == false
  bool attained = false;
  std::vector<std::pair<std::size_t, VertexMap>> witnesses;  // (family idx, map)
};

/// Infimum of weights over family members admitting a non-degenerate map
/// from K.
GeneralizedChromatic generalized_chromatic(const SimplicialComplex& K,
                                           const std::vector<WeightedTarget>& family);

enum class PhiFailure {
  none,
  not_involution,
  sigma_not_invariant,
  tau_trivial,
  tau_not_in_holonomy,
};

std::string to_string(PhiFailure f);

/// Certificate that (gamma, omega, sigma) is a Phi_d structure: omega is a
/// free-standing involution, sigma an invariant d-simplex, and the
/// restriction tau a nontrivial holonomy element realized by a stored
/// closed path.
struct PhiCertificate {
  SimplicialComplex gamma;
  VertexMap omega;
  Simplex sigma;                 // sorted
  std::vector<int> tau_image;    // tau applied to sigma, positionwise
  Projectivity membership_path;  // holonomy element equal to tau
  int d = 0;
};

struct PhiResult {
  PhiFailure failure = PhiFailure::none;
  std::optional<PhiCertificate> certificate;
};

PhiResult phi_d_certify(const SimplicialComplex& gamma, const VertexMap& omega,
                        const Simplex& sigma);

struct InvolutionReport {
  CellularMap map;        // precompose with omega on Hom(gamma, K)
  bool involution = false;
  bool free_action = false;  // no cell fixed setwise; vacuous when empty
  bool empty = false;
};

InvolutionReport induced_involution(const PhiCertificate& cert,
                                    const HomComplex& hom_gamma_k);

struct BoundReport {
  bool hom_empty = false;
  int connectivity_k = -2;
  std::string certificate_level;  // "homology" or "homology+pi1"
  std::string parity_note;
  bool bound_claimed = false;
  int claimed_bound = 0;          // k + d + 3 when claimed
  int chromatic = 0;              // independently computed chi(K)
  bool free_involution = false;
};

/// Connectivity-based lower bound on chi(K) from a certified Phi_d
/// structure; the bound is only claimed when the odd-k parity hypothesis
/// holds, and is always cross-checked against the true chromatic number
/// (a violation throws, since it would mean a computation bug).
BoundReport lovasz_bound_report(const PhiCertificate& cert,
                                const SimplicialComplex& K,
                                long long cap = kDefaultCellCap,
                                bool attempt_pi1 = false);

struct TwoIotaReport {
  bool hom_empty = false;
  bool parity_applies = false;       // n even
  bool beta_commutes = false;        // H_*(beta o iota) == H_*(iota), all dims
  bool iota_zero_on_top = false;     // free part of H_{n-2}
  Z beta_degree_on_sphere = 0;       // degree of the flip on H_{n-2}(Hom(K2,Kn))
};

/// Checks the homology-level consequences of walking an odd cycle once
/// around: the flip absorbs into the restriction map, and for even n the
/// restriction vanishes on the top free homology.
TwoIotaReport two_iota_star_check(int r, int n, long long cap = kDefaultCellCap);

}  // namespace homcx

#endif
