#include "homcx/projectivity.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace homcx {

int Projectivity::apply(int v) const {
  auto it = std::lower_bound(source.begin(), source.end(), v);
  if (it == source.end() || *it != v)
    throw std::invalid_argument("vertex not in projectivity source");
  return image[it - source.begin()];
}

Simplex Projectivity::sorted_image() const {
  Simplex s = image;
  std::sort(s.begin(), s.end());
  return s;
}

Projectivity identity_projectivity(const Simplex& s) {
  Projectivity p;
  p.source = p.target = s;
  p.image = s;
  p.path = {s};
  return p;
}

Projectivity perspectivity(const Simplex& s0, const Simplex& s1) {
  if (s0.size() != s1.size())
    throw HypothesisError("perspectivity needs equal-dimensional simplices");
  if (s0 == s1) return identity_projectivity(s0);
  Simplex common;
  std::set_intersection(s0.begin(), s0.end(), s1.begin(), s1.end(),
                        std::back_inserter(common));
  if (common.size() + 1 != s0.size())
    throw HypothesisError("simplices do not share a codimension-1 face");
  Projectivity p;
  p.source = s0;
  p.target = s1;
  p.path = {s0, s1};
  int extra = -1;
  for (int v : s1)
    if (!std::binary_search(common.begin(), common.end(), v)) extra = v;
  for (int v : s0)
    p.image.push_back(std::binary_search(common.begin(), common.end(), v) ? v
                                                                          : extra);
  return p;
}

Projectivity compose_projectivity(const Projectivity& p, const Projectivity& q) {
  if (p.target != q.source)
    throw std::invalid_argument("projectivity endpoints do not match");
  Projectivity r;
  r.source = p.source;
  r.target = q.target;
  for (int v : p.image) r.image.push_back(q.apply(v));
  r.path = p.path;
  if (!q.path.empty())
    r.path.insert(r.path.end(), q.path.begin() + (r.path.empty() ? 0 : 1),
                  q.path.end());
  return r;
}

Projectivity inverse_projectivity(const Projectivity& p) {
  Projectivity r;
  r.source = p.target;
  r.target = p.source;
  r.image.resize(p.source.size());
  // invert: p maps source[i] to image[i]
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < p.source.size(); ++i)
    pairs.push_back({p.image[i], p.source[i]});
  std::sort(pairs.begin(), pairs.end());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].first != p.target[i])
      throw InternalError("projectivity image is not the target simplex");
    r.image[i] = pairs[i].second;
  }
  r.path = p.path;
  std::reverse(r.path.begin(), r.path.end());
  return r;
}

Projectivity projectivity_along(const std::vector<Simplex>& path) {
  if (path.empty()) throw std::invalid_argument("empty path");
  Projectivity p = identity_projectivity(path[0]);
  for (std::size_t i = 1; i < path.size(); ++i)
    p = compose_projectivity(p, perspectivity(path[i - 1], path[i]));
  return p;
}

DualGraph dual_graph(const SimplicialComplex& K, int k) {
  DualGraph g;
  g.k = k;
  g.nodes = K.simplices_of_dim(k);
  g.adj.resize(g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    for (std::size_t j = i + 1; j < g.nodes.size(); ++j) {
      Simplex common;
      std::set_intersection(g.nodes[i].begin(), g.nodes[i].end(),
                            g.nodes[j].begin(), g.nodes[j].end(),
                            std::back_inserter(common));
      if (static_cast<int>(common.size()) == k) {
        const int e = static_cast<int>(g.edges.size());
        g.edges.push_back({static_cast<int>(i), static_cast<int>(j), common});
        g.adj[i].push_back({static_cast<int>(j), e});
        g.adj[j].push_back({static_cast<int>(i), e});
      }
    }
  return g;
}

std::string label_group(const std::vector<std::vector<int>>& perms, int degree) {
  const long n = static_cast<long>(perms.size());
  if (n == 1) return "trivial";
  auto perm_order = [&](std::vector<int> p) {
    std::vector<int> id(p.size());
    std::iota(id.begin(), id.end(), 0);
    std::vector<int> cur = p;
    int o = 1;
    while (cur != id) {
      std::vector<int> nxt(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) nxt[i] = p[cur[i]];
      cur = nxt;
      ++o;
      if (o > 10000) throw InternalError("permutation order runaway");
    }
    return o;
  };
  int max_order = 1;
  for (const auto& p : perms) max_order = std::max(max_order, perm_order(p));
  auto compose2 = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
    return c;
  };
  bool abelian = true;
  for (std::size_t i = 0; i < perms.size() && abelian; ++i)
    for (std::size_t j = i + 1; j < perms.size() && abelian; ++j)
      if (compose2(perms[i], perms[j]) != compose2(perms[j], perms[i]))
        abelian = false;
  if (max_order == n) return "Z" + std::to_string(n);  // cyclic
  long fact = 1;
  for (int i = 2; i <= degree; ++i) fact *= i;
  if (n == fact) return "S" + std::to_string(degree);
  if (2 * n == fact) {
    bool all_even = true;
    for (const auto& p : perms) {
      int inversions = 0;
      for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
          if (p[i] > p[j]) ++inversions;
      if (inversions % 2) { all_even = false; break; }
    }
    if (all_even) return "A" + std::to_string(degree);
  }
  if (n == 4 && abelian) return "Z2xZ2";
  if (n == 6 && !abelian) return "S3";
  if (n == 8 && !abelian) {
    int twos = 0;
    for (const auto& p : perms)
      if (perm_order(p) == 2) ++twos;
    return twos == 5 ? "D4" : "Q8";
  }
  return "order " + std::to_string(n);
}

HolonomyGroup holonomy_group(const SimplicialComplex& K, const Simplex& sigma) {
  Simplex base = sigma;
  std::sort(base.begin(), base.end());
  if (!K.has_simplex(base))
    throw HypothesisError("base is not a simplex of the complex");
  const int k = static_cast<int>(base.size()) - 1;
  DualGraph g = dual_graph(K, k);
  int root = -1;
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    if (g.nodes[i] == base) root = static_cast<int>(i);
  if (root < 0) throw InternalError("base simplex missing from dual graph");

  // BFS spanning tree; to_node[i] = projectivity base -> node i
  std::vector<Projectivity> to_node(g.nodes.size());
  std::vector<bool> seen(g.nodes.size(), false);
  std::vector<bool> tree_edge(g.edges.size(), false);
  to_node[root] = identity_projectivity(base);
  seen[root] = true;
  std::queue<int> q;
  q.push(root);
  while (!q.empty()) {
    int a = q.front();
    q.pop();
    for (auto [b, e] : g.adj[a]) {
      if (seen[b]) continue;
      seen[b] = true;
      tree_edge[e] = true;
      to_node[b] = compose_projectivity(to_node[a],
                                        perspectivity(g.nodes[a], g.nodes[b]));
      q.push(b);
    }
  }

  HolonomyGroup h;
  h.base = base;
  h.component_only =
      std::count(seen.begin(), seen.end(), true) !=
      static_cast<long>(seen.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (tree_edge[e]) continue;
    auto [a, b, face] = g.edges[e];
    if (!seen[a] || !seen[b]) continue;
    Projectivity gen = compose_projectivity(
        compose_projectivity(to_node[a], perspectivity(g.nodes[a], g.nodes[b])),
        inverse_projectivity(to_node[b]));
    h.generators.push_back(std::move(gen));
  }

  // closure under composition, shortest realizing path kept per element
  std::map<std::vector<int>, Projectivity> closure;
  Projectivity id = identity_projectivity(base);
  closure[id.image] = id;
  std::queue<Projectivity> work;
  work.push(id);
  while (!work.empty()) {
    Projectivity cur = work.front();
    work.pop();
    for (const auto& gen : h.generators) {
      Projectivity nxt = compose_projectivity(cur, gen);
      if (closure.count(nxt.image)) continue;
      closure[nxt.image] = nxt;
      work.push(nxt);
    }
  }
  std::vector<std::vector<int>> perms;
  for (auto& [img, p] : closure) {
    h.elements.push_back(p);
    // permutation in position form relative to the sorted base
    std::vector<int> perm;
    for (int v : img)
      perm.push_back(static_cast<int>(
          std::lower_bound(base.begin(), base.end(), v) - base.begin()));
    perms.push_back(std::move(perm));
  }
  h.order = static_cast<long>(h.elements.size());
  h.label = label_group(perms, static_cast<int>(base.size()));
  return h;
}

const Projectivity* HolonomyGroup::find(const std::vector<int>& image) const {
  for (const auto& e : elements)
    if (e.image == image) return &e;
  return nullptr;
}

CellularMap transport_map(const HomComplex& fibre_target, const Projectivity& p,
                          const HomComplex& fibre_source) {
  const std::size_t k1 = p.source.size();
  if (fibre_target.source().n_vertices() != static_cast<int>(k1) ||
      fibre_source.source().n_vertices() != static_cast<int>(k1))
    throw std::invalid_argument("fibre arity does not match the projectivity");
  // position permutation: output slot i (i-th vertex of p.source) reads the
  // factor at the position of its image in p.target
  std::vector<int> perm(k1);
  for (std::size_t i = 0; i < k1; ++i) {
    const int w = p.image[i];
    perm[i] = static_cast<int>(
        std::lower_bound(p.target.begin(), p.target.end(), w) -
        p.target.begin());
  }
  CellularMap m;
  m.source = &fibre_target;
  m.target = &fibre_source;
  m.image.resize(fibre_target.num_cells());
  m.coeff.resize(fibre_target.num_cells());
  for (int c = 0; c < fibre_target.num_cells(); ++c) {
    const MultiHom& cell = fibre_target.cells()[c];
    MultiHom out;
    out.assign.resize(k1);
    std::vector<int> dims(k1);
    for (std::size_t i = 0; i < k1; ++i) {
      out.assign[i] = cell.assign[perm[i]];
      dims[i] = static_cast<int>(cell.assign[i].size()) - 1;
    }
    const int idx = fibre_source.index_of(out);
    if (idx < 0) throw InternalError("transport image cell missing");
    m.image[c] = idx;
    m.coeff[c] = koszul_sign(perm, dims);
  }
  return m;
}

}  // namespace homcx
