#ifndef HOMCX_PI1_HPP
#define HOMCX_PI1_HPP

#include "homcx/hom.hpp"

namespace homcx {

/// Edge-path group presentation read off the 2-skeleton of a Hom complex:
/// generators are the 1-cells off a spanning tree, relators the boundary
/// words of the 2-cells (triangles and squares).
struct GroupPresentation {
  int n_generators = 0;
  std::vector<std::vector<int>> relators;  // letters g+1 / -(g+1)
};

GroupPresentation edge_path_presentation(const HomComplex& h);

/// Bounded Tietze simplification. Returns true only when the presentation
/// provably trivializes within the budget; false is inconclusive.
bool presentation_trivializes(GroupPresentation p, long long budget = 200000);

bool fundamental_group_trivial(const HomComplex& h, long long budget = 200000);

}  // namespace homcx

#endif
