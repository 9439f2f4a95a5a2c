#include "homcx/collapse.hpp"

#include <algorithm>
#include <set>

namespace homcx {

namespace {

bool subset_of_any(const Simplex& s, const std::vector<Simplex>& facets,
                   const Simplex* skip = nullptr) {
  for (const auto& f : facets) {
    if (skip && &f == skip) continue;
    if (f.size() < s.size()) continue;
    if (std::includes(f.begin(), f.end(), s.begin(), s.end())) return true;
  }
  return false;
}

Simplex erase_vertex(const Simplex& s, int v) {
  Simplex out;
  for (int x : s)
    if (x != v) out.push_back(x);
  return out;
}

Simplex insert_vertex(const Simplex& s, int v) {
  Simplex out = s;
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

// minimal new face of F over the union of `prev`: the vertices of F whose
// opposite codimension-1 face already lies in that union
Simplex restriction_face(const Simplex& f, const std::vector<Simplex>& prev) {
  Simplex r;
  for (int v : f)
    if (subset_of_any(erase_vertex(f, v), prev)) r.push_back(v);
  return r;
}

// shelling condition: F meets the union of prev in a nonempty pure
// codimension-1 subcomplex of F
bool shelling_ok(const Simplex& f, const std::vector<Simplex>& prev) {
  std::vector<Simplex> inters;
  for (const auto& g : prev) {
    Simplex c;
    std::set_intersection(f.begin(), f.end(), g.begin(), g.end(),
                          std::back_inserter(c));
    if (!c.empty()) inters.push_back(std::move(c));
  }
  if (inters.empty()) return false;
  for (const auto& c : inters) {
    bool maximal = true;
    for (const auto& d : inters)
      if (&d != &c && d.size() > c.size() &&
          std::includes(d.begin(), d.end(), c.begin(), c.end()))
        maximal = false;
    if (maximal && c.size() != f.size() - 1) return false;
  }
  return true;
}

}  // namespace

ShellingSearch find_shelling(const SimplicialComplex& K, long long budget) {
  if (!K.is_pure()) throw HypothesisError("shelling needs a pure complex");
  const auto& facets = K.facets();
  const int m = static_cast<int>(facets.size());
  ShellingSearch res;
  res.status = SearchStatus::impossible;
  if (m == 0) return res;

  std::set<std::vector<bool>> dead;  // used-sets proven unextendable
  std::vector<int> chosen;
  std::vector<bool> used(m, false);
  long long nodes = 0;
  bool out_of_budget = false;

  auto dfs = [&](auto&& self) -> bool {
    if (static_cast<int>(chosen.size()) == m) return true;
    if (++nodes > budget) {
      out_of_budget = true;
      return false;
    }
    if (dead.count(used)) return false;
    std::vector<Simplex> prev;
    for (int i : chosen) prev.push_back(facets[i]);
    for (int i = 0; i < m; ++i) {
      if (used[i]) continue;
      if (!chosen.empty() && !shelling_ok(facets[i], prev)) continue;
      used[i] = true;
      chosen.push_back(i);
      if (self(self)) return true;
      chosen.pop_back();
      used[i] = false;
      if (out_of_budget) return false;
    }
    dead.insert(used);
    return false;
  };

  if (dfs(dfs)) {
    res.status = SearchStatus::found;
    std::vector<Simplex> prev;
    for (int i : chosen) {
      res.order.order.push_back(facets[i]);
      Simplex r = prev.empty() ? Simplex{} : restriction_face(facets[i], prev);
      res.order.types.push_back(static_cast<int>(r.size()) - 1);
      res.order.restrictions.push_back(std::move(r));
      prev.push_back(facets[i]);
    }
  } else if (out_of_budget) {
    res.status = SearchStatus::budget_exhausted;
  }
  res.nodes = nodes;
  return res;
}

bool validate_shelling(const SimplicialComplex& K, const ShellingOrder& s) {
  std::vector<Simplex> sorted_order = s.order;
  std::sort(sorted_order.begin(), sorted_order.end());
  if (sorted_order != K.facets()) return false;
  if (s.restrictions.size() != s.order.size() ||
      s.types.size() != s.order.size())
    return false;
  std::vector<Simplex> prev;
  for (std::size_t j = 0; j < s.order.size(); ++j) {
    if (j > 0 && !shelling_ok(s.order[j], prev)) return false;
    Simplex r = j == 0 ? Simplex{} : restriction_face(s.order[j], prev);
    if (r != s.restrictions[j]) return false;
    if (s.types[j] != static_cast<int>(r.size()) - 1) return false;
    prev.push_back(s.order[j]);
  }
  return true;
}

TreeLikeSearch is_tree_like(const SimplicialComplex& K, long long budget) {
  if (!K.is_pure()) throw HypothesisError("tree-like test needs a pure complex");
  TreeLikeSearch res;
  if (K.facets().empty()) return res;

  std::set<std::vector<Simplex>> dead;
  std::vector<CollapseStep> steps;
  long long nodes = 0;
  bool out_of_budget = false;

  auto dfs = [&](auto&& self, std::vector<Simplex> facets) -> bool {
    if (facets.size() == 1) {
      res.sequence.final_facet = facets[0];
      return true;
    }
    if (++nodes > budget) {
      out_of_budget = true;
      return false;
    }
    if (dead.count(facets)) return false;
    for (const auto& f : facets) {
      // a peelable facet meets the rest exactly in one codim-1 face
      int free_v = -1;
      for (int v : f) {
        bool elsewhere = false;
        for (const auto& g : facets)
          if (&g != &f && std::binary_search(g.begin(), g.end(), v))
            elsewhere = true;
        if (elsewhere) continue;
        if (subset_of_any(erase_vertex(f, v), facets, &f)) {
          free_v = v;
          break;
        }
      }
      if (free_v < 0) continue;
      CollapseStep st;
      st.removed = f;
      st.free_vertex = free_v;
      st.retained = erase_vertex(f, free_v);
      for (const auto& g : facets) {
        if (&g == &f || !std::includes(g.begin(), g.end(), st.retained.begin(),
                                       st.retained.end()))
          continue;
        for (int u : g)
          if (!std::binary_search(f.begin(), f.end(), u)) {
            if (st.apex < 0 || u < st.apex) st.apex = u;
          }
      }
      if (st.apex < 0) continue;  // retained face maximal in the rest
      st.witness = insert_vertex(st.retained, st.apex);
      std::vector<Simplex> rest;
      for (const auto& g : facets)
        if (g != f) rest.push_back(g);
      steps.push_back(st);
      if (self(self, std::move(rest))) return true;
      steps.pop_back();
      if (out_of_budget) return false;
    }
    dead.insert(std::move(facets));
    return false;
  };

  if (dfs(dfs, K.facets())) {
    res.status = SearchStatus::found;
    res.sequence.steps = steps;
  } else if (out_of_budget) {
    res.status = SearchStatus::budget_exhausted;
  }
  res.nodes = nodes;
  return res;
}

ShellingOrder shelling_from_collapse(const CollapseSequence& c) {
  ShellingOrder s;
  s.order.push_back(c.final_facet);
  s.restrictions.push_back({});
  s.types.push_back(-1);
  for (auto it = c.steps.rbegin(); it != c.steps.rend(); ++it) {
    s.order.push_back(it->removed);
    s.restrictions.push_back({it->free_vertex});
    s.types.push_back(0);
  }
  return s;
}

SimplicialComplex remove_vertex(const SimplicialComplex& K, int v) {
  if (v < 0 || v >= K.n_vertices()) throw std::invalid_argument("bad vertex");
  std::vector<Simplex> facets;
  for (const auto& f : K.facets()) {
    if (std::binary_search(f.begin(), f.end(), v)) continue;
    Simplex g;
    for (int x : f) g.push_back(x > v ? x - 1 : x);
    facets.push_back(std::move(g));
  }
  std::vector<std::string> labels;
  if (!K.labels().empty()) {
    labels = K.labels();
    labels.erase(labels.begin() + v);
  }
  return SimplicialComplex::from_facets(K.n_vertices() - 1, std::move(facets),
                                        std::move(labels));
}

VertexMap fold_map(const SimplicialComplex& K, int v, int u) {
  if (v == u) throw HypothesisError("fold needs distinct vertices");
  if (v < 0 || v >= K.n_vertices() || u < 0 || u >= K.n_vertices())
    throw std::invalid_argument("bad vertex");
  for (const auto& f : K.facets()) {
    if (!std::binary_search(f.begin(), f.end(), v)) continue;
    if (std::binary_search(f.begin(), f.end(), u))
      throw HypothesisError("fold target lies in a facet through the vertex");
    if (!K.has_simplex(insert_vertex(erase_vertex(f, v), u)))
      throw HypothesisError("folded facet is not a simplex");
  }
  VertexMap m{K, remove_vertex(K, v), {}};
  m.image.resize(K.n_vertices());
  for (int x = 0; x < K.n_vertices(); ++x) {
    int y = x == v ? u : x;
    m.image[x] = y > v ? y - 1 : y;
  }
  if (!is_nondegenerate(m)) throw InternalError("fold map is degenerate");
  return m;
}

VertexMap unfold_inclusion(const SimplicialComplex& K, int v) {
  VertexMap m{remove_vertex(K, v), K, {}};
  for (int x = 0; x + 1 < K.n_vertices(); ++x)
    m.image.push_back(x >= v ? x + 1 : x);
  return m;
}

CollapseReport verify_collapse_equivalence(const SimplicialComplex& K,
                                           const CollapseStep& step,
                                           const SimplicialComplex& L,
                                           long long cap) {
  CollapseReport rep;
  // replay the step against K
  const int v = step.free_vertex;
  const auto& facets = K.facets();
  if (std::find(facets.begin(), facets.end(), step.removed) == facets.end()) {
    rep.detail = "removed facet absent";
    return rep;
  }
  for (const auto& g : facets)
    if (g != step.removed && std::binary_search(g.begin(), g.end(), v)) {
      rep.detail = "free vertex appears outside the removed facet";
      return rep;
    }
  std::vector<Simplex> rest;
  for (const auto& g : facets)
    if (g != step.removed) rest.push_back(g);
  if (!subset_of_any(step.retained, rest) ||
      !subset_of_any(step.witness, rest)) {
    rep.detail = "retained face or witness missing from the rest";
    return rep;
  }
  rep.step_valid = true;

  SimplicialComplex Kp = remove_vertex(
      SimplicialComplex::from_facets(K.n_vertices(), rest), v);
  VertexMap rho = fold_map(K, v, step.apex);
  rho.target = Kp;
  VertexMap gamma{Kp, K, {}};
  for (int x = 0; x < Kp.n_vertices(); ++x)
    gamma.image.push_back(x >= v ? x + 1 : x);

  HomComplex hk = build_hom(K, L, cap);
  HomComplex hkp = build_hom(Kp, L, cap);

  ChainComplex ck = chains_of(hk);
  ChainComplex ckp = chains_of(hkp);
  rep.h_before = homology(ck, false);
  rep.h_after = homology(ckp, false);
  if (hk.num_cells() == 0 && hkp.num_cells() == 0) {
    rep.gamma_rho_identity = true;
    rep.homology_inverse = true;
    return rep;
  }
  if (hk.num_cells() == 0 || hkp.num_cells() == 0) {
    rep.detail = "one side is empty";
    return rep;
  }
  CellularMap gamma_hat = induced_precompose(hk, gamma, hkp);
  ChainMap g_chain = chain_map_of(gamma_hat, ck, ckp);
  // the fold duplicates a factor, so its chain map needs the diagonal
  // expansion and is built directly at chain level
  ChainMap r_chain = precompose_chain(hkp, rho, hk, ckp, ck);

  rep.gamma_rho_identity =
      chain_maps_equal(compose_chain(r_chain, g_chain), identity_chain(ckp));
  if (!rep.gamma_rho_identity) rep.detail = "round trip is not the identity";

  HomologyBasisData bk = homology_with_basis(ck);
  HomologyBasisData bkp = homology_with_basis(ckp);
  rep.homology_inverse = true;
  const int top = std::max(ck.top_dim(), ckp.top_dim());
  for (int d = 0; d <= top; ++d) {
    if (rep.h_before.at(d).betti != rep.h_after.at(d).betti ||
        rep.h_before.at(d).torsion != rep.h_after.at(d).torsion) {
      rep.homology_inverse = false;
      rep.detail = "homology groups differ in dim " + std::to_string(d);
      break;
    }
    if (d > ck.top_dim() || d > ckp.top_dim()) continue;
    ZMat mg = induced_on_homology(g_chain, bk, bkp, d);
    ZMat mr = induced_on_homology(r_chain, bkp, bk, d);
    if (mul(mg, mr) != ZMat::identity(mg.rows) ||
        mul(mr, mg) != ZMat::identity(mr.rows)) {
      rep.homology_inverse = false;
      rep.detail = "induced maps not inverse in dim " + std::to_string(d);
      break;
    }
  }
  return rep;
}

}  // namespace homcx
