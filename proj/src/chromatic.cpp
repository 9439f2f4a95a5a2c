#include "homcx/chromatic.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace homcx {

VertexMap Coloring::as_map(const SimplicialComplex& k) const {
  return VertexMap{k, simplex_complex(m), colors};
}

namespace {

// vertices ordered by degree, then id; helps both greedy and exact search
std::vector<int> degree_order(const std::vector<std::vector<bool>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> deg(n, 0), order(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (adj[i][j]) ++deg[i];
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return deg[a] != deg[b] ? deg[a] > deg[b] : a < b;
  });
  return order;
}

int greedy_colors(const std::vector<std::vector<bool>>& adj,
                  const std::vector<int>& order) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> color(n, -1);
  int used = 0;
  for (int v : order) {
    std::vector<bool> taken(n + 1, false);
    for (int w = 0; w < n; ++w)
      if (adj[v][w] && color[w] >= 0) taken[color[w]] = true;
    int c = 0;
    while (taken[c]) ++c;
    color[v] = c;
    used = std::max(used, c + 1);
  }
  return used;
}

int clique_lower_bound(const std::vector<std::vector<bool>>& adj) {
  const int n = static_cast<int>(adj.size());
  int best = n > 0 ? 1 : 0;
  std::vector<int> cur;
  auto dfs = [&](auto&& self, int start) -> void {
    best = std::max(best, static_cast<int>(cur.size()));
    for (int v = start; v < n; ++v) {
      bool ok = true;
      for (int u : cur)
        if (!adj[u][v]) { ok = false; break; }
      if (!ok) continue;
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  dfs(dfs, 0);
  return best;
}

std::optional<std::vector<int>> try_k_coloring(
    const std::vector<std::vector<bool>>& adj, const std::vector<int>& order,
    int k) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> color(n, -1);
  auto dfs = [&](auto&& self, std::size_t pos, int used) -> bool {
    if (pos == order.size()) return true;
    const int v = order[pos];
    const int limit = std::min(k, used + 1);  // break color symmetry
    for (int c = 0; c < limit; ++c) {
      bool ok = true;
      for (int w = 0; w < n; ++w)
        if (adj[v][w] && color[w] == c) { ok = false; break; }
      if (!ok) continue;
      color[v] = c;
      if (self(self, pos + 1, std::max(used, c + 1))) return true;
      color[v] = -1;
    }
    return false;
  };
  if (dfs(dfs, 0, 0)) return color;
  return std::nullopt;
}

}  // namespace

std::pair<int, Coloring> chromatic_number(const SimplicialComplex& K) {
  if (K.facets().empty()) throw HypothesisError("chromatic number of an empty complex");
  const auto adj = K.adjacency();
  const auto order = degree_order(adj);
  int hi = std::max(1, greedy_colors(adj, order));
  int lo = std::max(1, clique_lower_bound(adj));
  std::vector<int> witness;
  for (int k = lo; k <= hi; ++k) {
    if (auto c = try_k_coloring(adj, order, k)) {
      witness = *c;
      hi = k;
      break;
    }
  }
  Coloring col;
  col.m = hi;
  col.colors = witness;
  return {hi, col};
}

std::optional<VertexMap> exists_nondegenerate_map(const SimplicialComplex& K,
                                                  const SimplicialComplex& T) {
  const int n = K.n_vertices();
  const int nt = T.n_vertices();
  // facets touching each vertex, for incremental pruning
  std::vector<std::vector<const Simplex*>> touching(n);
  for (const auto& f : K.facets())
    for (int v : f) touching[v].push_back(&f);
  std::vector<int> img(n, -1);
  auto consistent = [&](int v) {
    for (const Simplex* f : touching[v]) {
      Simplex partial;
      for (int w : *f)
        if (img[w] >= 0) partial.push_back(img[w]);
      std::sort(partial.begin(), partial.end());
      if (std::adjacent_find(partial.begin(), partial.end()) != partial.end())
        return false;  // degenerate on this facet
      if (!T.has_simplex(partial)) return false;
    }
    return true;
  };
  auto dfs = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int t = 0; t < nt; ++t) {
      img[v] = t;
      if (consistent(v) && self(self, v + 1)) return true;
    }
    img[v] = -1;
    return false;
  };
  if (!dfs(dfs, 0)) return std::nullopt;
  VertexMap m{K, T, img};
  if (!is_nondegenerate(m))
    throw InternalError("search returned a degenerate map");
  return m;
}

GeneralizedChromatic generalized_chromatic(
    const SimplicialComplex& K, const std::vector<WeightedTarget>& family) {
  GeneralizedChromatic out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    auto w = exists_nondegenerate_map(K, family[i].complex);
    if (!w) continue;
    if (!out.attained || family[i].weight < out.value) out.value = family[i].weight;
    out.attained = true;
    out.witnesses.push_back({i, std::move(*w)});
  }
  return out;
}

std::string to_string(PhiFailure f) {
  switch (f) {
    case PhiFailure::none: return "ok";
    case PhiFailure::not_involution: return "omega is not a non-degenerate simplicial involution";
    case PhiFailure::sigma_not_invariant: return "sigma is not setwise invariant under omega";
    case PhiFailure::tau_trivial: return "restriction of omega to sigma is the identity";
    case PhiFailure::tau_not_in_holonomy: return "restriction of omega to sigma is not a holonomy element";
  }
  return "?";
}

PhiResult phi_d_certify(const SimplicialComplex& gamma, const VertexMap& omega,
                        const Simplex& sigma) {
  if (!gamma.is_pure()) throw HypothesisError("Phi_d needs a pure complex");
  Simplex s = sigma;
  std::sort(s.begin(), s.end());
  if (!gamma.has_simplex(s) ||
      static_cast<int>(s.size()) != gamma.dim() + 1)
    throw HypothesisError("sigma is not a top-dimensional simplex");

  PhiResult res;
  if (static_cast<int>(omega.image.size()) != gamma.n_vertices() ||
      !is_nondegenerate(omega)) {
    res.failure = PhiFailure::not_involution;
    return res;
  }
  for (int v = 0; v < gamma.n_vertices(); ++v)
    if (omega.image[omega.image[v]] != v) {
      res.failure = PhiFailure::not_involution;
      return res;
    }
  std::vector<int> tau;
  Simplex image_sorted;
  for (int v : s) tau.push_back(omega.image[v]);
  image_sorted = tau;
  std::sort(image_sorted.begin(), image_sorted.end());
  if (image_sorted != s) {
    res.failure = PhiFailure::sigma_not_invariant;
    return res;
  }
  if (tau == s) {
    res.failure = PhiFailure::tau_trivial;
    return res;
  }
  HolonomyGroup h = holonomy_group(gamma, s);
  const Projectivity* elem = h.find(tau);
  if (!elem) {
    res.failure = PhiFailure::tau_not_in_holonomy;
    return res;
  }
  PhiCertificate cert;
  cert.gamma = gamma;
  cert.omega = omega;
  cert.sigma = s;
  cert.tau_image = tau;
  cert.membership_path = *elem;
  cert.d = static_cast<int>(s.size()) - 1;
  res.certificate = std::move(cert);
  return res;
}

InvolutionReport induced_involution(const PhiCertificate& cert,
                                    const HomComplex& hom_gamma_k) {
  InvolutionReport rep;
  rep.empty = hom_gamma_k.num_cells() == 0;
  rep.map = induced_precompose(hom_gamma_k, cert.omega, hom_gamma_k);
  CellularMap sq = compose_cellular(rep.map, rep.map);
  rep.involution = true;
  rep.free_action = true;
  for (int i = 0; i < hom_gamma_k.num_cells(); ++i) {
    if (sq.image[i] != i || sq.coeff[i] != 1) rep.involution = false;
    if (rep.map.image[i] == i) rep.free_action = false;
  }
  return rep;
}

BoundReport lovasz_bound_report(const PhiCertificate& cert,
                                const SimplicialComplex& K, long long cap,
                                bool attempt_pi1) {
  BoundReport rep;
  rep.chromatic = chromatic_number(K).first;
  HomComplex h = build_hom(cert.gamma, K, cap);
  if (h.num_cells() == 0) {
    rep.hom_empty = true;
    rep.parity_note = "no bound derivable from an empty complex";
    return rep;
  }
  InvolutionReport inv = induced_involution(cert, h);
  rep.free_involution = inv.involution && inv.free_action;
  ChainComplex cc = chains_of(h);
  HomologyGroups hg = homology(cc, true);
  ConnectivityEstimate est = connectivity_estimate(hg, attempt_pi1, &h);
  rep.connectivity_k = est.k;
  rep.certificate_level =
      est.level == ConnectivityEstimate::Level::homology_pi1 ? "homology+pi1"
                                                             : "homology";
  const int k = est.k;
  if (k % 2 == 0) {
    rep.parity_note = "k even: the odd-k hypothesis fails, no bound claimed";
  } else if (!rep.free_involution) {
    rep.parity_note = "induced involution not free: no bound claimed";
  } else {
    rep.parity_note = "k odd";
    rep.bound_claimed = true;
    rep.claimed_bound = k + cert.d + 3;
    if (rep.claimed_bound > rep.chromatic)
      throw InternalError("claimed lower bound " +
                          std::to_string(rep.claimed_bound) +
                          " exceeds the chromatic number " +
                          std::to_string(rep.chromatic));
  }
  return rep;
}

TwoIotaReport two_iota_star_check(int r, int n, long long cap) {
  if (r < 1 || n < 1) throw std::invalid_argument("bad parameters");
  TwoIotaReport rep;
  rep.parity_applies = n % 2 == 0;
  const int m = 2 * r + 1;
  SimplicialComplex cyc = cycle_complex(m);
  SimplicialComplex kn = complete_graph(n);
  SimplicialComplex k2 = complete_graph(2);
  HomComplex hom_c = build_hom(cyc, kn, cap);
  HomComplex hom_e = build_hom(k2, kn, cap);
  if (hom_c.num_cells() == 0) {
    rep.hom_empty = true;
    rep.beta_commutes = true;
    rep.iota_zero_on_top = true;
    return rep;
  }
  // restriction to the base edge
  VertexMap iota{k2, cyc, {0, 1}};
  CellularMap iota_hat = induced_precompose(hom_c, iota, hom_e);
  // transport once around the cycle; the composite swaps the endpoints
  std::vector<Simplex> loop;
  for (int i = 0; i <= m; ++i) {
    Simplex e{i % m, (i + 1) % m};
    std::sort(e.begin(), e.end());
    loop.push_back(e);
  }
  Projectivity beta = projectivity_along(loop);
  if (beta.image != std::vector<int>{1, 0})
    throw InternalError("cycle transport is not the flip");
  CellularMap beta_hat = transport_map(hom_e, beta, hom_e);
  CellularMap beta_iota = compose_cellular(iota_hat, beta_hat);

  ChainComplex cc = chains_of(hom_c);
  ChainComplex ce = chains_of(hom_e);
  HomologyBasisData bc = homology_with_basis(cc);
  HomologyBasisData be = homology_with_basis(ce);
  ChainMap f_iota = chain_map_of(iota_hat, cc, ce);
  ChainMap f_beta_iota = chain_map_of(beta_iota, cc, ce);
  ChainMap f_beta = chain_map_of(beta_hat, ce, ce);

  rep.beta_commutes = true;
  for (int d = 0; d <= cc.top_dim(); ++d)
    if (!(induced_on_homology(f_iota, bc, be, d) ==
          induced_on_homology(f_beta_iota, bc, be, d)))
      rep.beta_commutes = false;

  const int top = n - 2;
  if (top >= 0 && top < static_cast<int>(be.dims.size())) {
    ZMat deg = induced_on_homology(f_beta, be, be, top);
    if (deg.rows == 1 && deg.cols == 1) rep.beta_degree_on_sphere = deg.at(0, 0);
  }
  if (rep.parity_applies) {
    rep.iota_zero_on_top = true;
    if (top >= 0 && top <= cc.top_dim()) {
      ZMat mi = induced_on_homology(f_iota, bc, be, top);
      for (const Z& x : mi.a)
        if (x != 0) rep.iota_zero_on_top = false;
    }
  }
  return rep;
}

}  // namespace homcx
