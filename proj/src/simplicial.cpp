#include "homcx/simplicial.hpp"

#include <algorithm>
#include <set>

namespace homcx {

SimplicialComplex SimplicialComplex::from_facets(int n_vertices,
                                                 std::vector<Simplex> facets,
                                                 std::vector<std::string> labels) {
  if (n_vertices < 0) throw std::invalid_argument("negative vertex count");
  if (!labels.empty() && static_cast<int>(labels.size()) != n_vertices)
    throw std::invalid_argument("label list length does not match n");
  for (auto& f : facets) {
    if (f.empty()) throw std::invalid_argument("empty facet");
    std::sort(f.begin(), f.end());
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] < 0 || f[i] >= n_vertices)
        throw std::invalid_argument("vertex id out of range: " + std::to_string(f[i]));
      if (i > 0 && f[i] == f[i - 1])
        throw std::invalid_argument("repeated vertex in facet");
    }
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  // keep inclusion-maximal facets only
  std::vector<Simplex> maximal;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    bool contained = false;
    for (std::size_t j = 0; j < facets.size() && !contained; ++j) {
      if (i == j || facets[j].size() < facets[i].size()) continue;
      if (i != j && facets[i] == facets[j]) continue;
      contained = std::includes(facets[j].begin(), facets[j].end(),
                                facets[i].begin(), facets[i].end()) &&
                  facets[i] != facets[j];
    }
    if (!contained) maximal.push_back(facets[i]);
  }
  SimplicialComplex k;
  k.n_ = n_vertices;
  k.facets_ = std::move(maximal);
  k.labels_ = std::move(labels);
  return k;
}

int SimplicialComplex::dim() const {
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

bool SimplicialComplex::is_pure() const {
  if (facets_.empty()) return true;
  const std::size_t s = facets_.front().size();
  for (const auto& f : facets_)
    if (f.size() != s) return false;
  return true;
}

bool SimplicialComplex::has_simplex(const Simplex& s) const {
  if (s.empty()) return false;
  for (const auto& f : facets_) {
    if (f.size() < s.size()) continue;
    if (std::includes(f.begin(), f.end(), s.begin(), s.end())) return true;
  }
  return false;
}

std::vector<Simplex> SimplicialComplex::simplices_of_dim(int d) const {
  if (d < 0) throw std::invalid_argument("negative dimension");
  std::set<Simplex> out;
  const std::size_t want = static_cast<std::size_t>(d) + 1;
  for (const auto& f : facets_) {
    if (f.size() < want) continue;
    // enumerate all d-subsets of f
    std::vector<int> idx(want);
    for (std::size_t i = 0; i < want; ++i) idx[i] = static_cast<int>(i);
    while (true) {
      Simplex s(want);
      for (std::size_t i = 0; i < want; ++i) s[i] = f[idx[i]];
      out.insert(std::move(s));
      int i = static_cast<int>(want) - 1;
      while (i >= 0 && idx[i] == static_cast<int>(f.size() - want + i)) --i;
      if (i < 0) break;
      ++idx[i];
      for (std::size_t j = i + 1; j < want; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return {out.begin(), out.end()};
}

std::vector<std::vector<bool>> SimplicialComplex::adjacency() const {
  std::vector<std::vector<bool>> a(n_, std::vector<bool>(n_, false));
  for (const auto& f : facets_)
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = i + 1; j < f.size(); ++j)
        a[f[i]][f[j]] = a[f[j]][f[i]] = true;
  return a;
}

SimplicialComplex SimplicialComplex::from_json(const nlohmann::json& j) {
  int n = j.at("n").get<int>();
  std::vector<Simplex> facets;
  for (const auto& f : j.at("facets")) facets.push_back(f.get<Simplex>());
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return from_facets(n, std::move(facets), std::move(labels));
}

nlohmann::json SimplicialComplex::to_json() const {
  nlohmann::json j;
  j["n"] = n_;
  j["facets"] = facets_;
  if (!labels_.empty()) j["labels"] = labels_;
  return j;
}

SimplicialComplex simplex_complex(int m) {
  if (m < 1) throw std::invalid_argument("simplex needs >= 1 vertex");
  Simplex all(m);
  for (int i = 0; i < m; ++i) all[i] = i;
  return SimplicialComplex::from_facets(m, {all});
}

SimplicialComplex cycle_complex(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs >= 3 vertices");
  std::vector<Simplex> f;
  for (int i = 0; i < n; ++i) f.push_back({i, (i + 1) % n});
  return SimplicialComplex::from_facets(n, std::move(f));
}

SimplicialComplex complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs >= 1 vertex");
  std::vector<Simplex> f;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) f.push_back({i, j});
  if (f.empty()) f.push_back({0});  // K_1 is a single vertex
  return SimplicialComplex::from_facets(n, std::move(f));
}

SimplicialComplex path_complex(int m) {
  if (m < 1) throw std::invalid_argument("path needs >= 1 vertex");
  std::vector<Simplex> f;
  for (int i = 0; i + 1 < m; ++i) f.push_back({i, i + 1});
  if (f.empty()) f.push_back({0});
  return SimplicialComplex::from_facets(m, std::move(f));
}

SimplicialComplex boundary_simplex(int m) {
  if (m < 2) throw std::invalid_argument("boundary simplex needs >= 2 vertices");
  std::vector<Simplex> f;
  for (int skip = 0; skip < m; ++skip) {
    Simplex s;
    for (int i = 0; i < m; ++i)
      if (i != skip) s.push_back(i);
    f.push_back(std::move(s));
  }
  return SimplicialComplex::from_facets(m, std::move(f));
}

SimplicialComplex standard_complex(StandardKind kind, int param) {
  switch (kind) {
    case StandardKind::simplex: return simplex_complex(param);
    case StandardKind::cycle: return cycle_complex(param);
    case StandardKind::complete: return complete_graph(param);
    case StandardKind::path: return path_complex(param);
    case StandardKind::boundary_simplex: return boundary_simplex(param);
  }
  throw std::invalid_argument("unknown standard complex");
}

SimplicialComplex clique_complex(const SimplicialComplex& g) {
  if (g.dim() > 1) throw std::invalid_argument("clique_complex expects a graph");
  const auto adj = g.adjacency();
  const int n = g.n_vertices();
  std::vector<bool> present(n, false);
  for (const auto& f : g.facets())
    for (int v : f) present[v] = true;
  // grow maximal cliques by backtracking (n is tiny)
  std::vector<Simplex> cliques;
  std::vector<int> cur;
  auto extend = [&](auto&& self, int start) -> void {
    bool maximal = true;
    for (int v = 0; v < n; ++v) {
      if (!present[v]) continue;
      bool ok = true;
      for (int u : cur)
        if (u == v || !adj[u][v]) { ok = false; break; }
      if (!ok) continue;
      maximal = false;
      if (v >= start) {
        cur.push_back(v);
        self(self, v + 1);
        cur.pop_back();
      }
    }
    if (maximal && !cur.empty()) cliques.push_back(cur);
  };
  extend(extend, 0);
  return SimplicialComplex::from_facets(n, std::move(cliques));
}

SimplicialComplex vertex_edge_graph(const SimplicialComplex& k) {
  std::vector<Simplex> f = k.simplices_of_dim(1);
  std::vector<bool> covered(k.n_vertices(), false);
  for (const auto& e : f) covered[e[0]] = covered[e[1]] = true;
  for (const auto& v : k.simplices_of_dim(0))
    if (!covered[v[0]]) f.push_back(v);
  return SimplicialComplex::from_facets(k.n_vertices(), std::move(f));
}

bool is_simplicial(const VertexMap& f) {
  if (static_cast<int>(f.image.size()) != f.source.n_vertices()) return false;
  for (int v : f.image)
    if (v < 0 || v >= f.target.n_vertices()) return false;
  for (const auto& fac : f.source.facets()) {
    Simplex img;
    for (int v : fac) img.push_back(f.image[v]);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    if (!f.target.has_simplex(img)) return false;
  }
  return true;
}

bool is_nondegenerate(const VertexMap& f) {
  if (!is_simplicial(f)) return false;
  for (const auto& fac : f.source.facets()) {
    Simplex img;
    for (int v : fac) img.push_back(f.image[v]);
    std::sort(img.begin(), img.end());
    if (std::adjacent_find(img.begin(), img.end()) != img.end()) return false;
  }
  return true;
}

VertexMap identity_map(const SimplicialComplex& k) {
  VertexMap f{k, k, {}};
  f.image.resize(k.n_vertices());
  for (int i = 0; i < k.n_vertices(); ++i) f.image[i] = i;
  return f;
}

VertexMap compose(const VertexMap& f, const VertexMap& g) {
  VertexMap h{f.source, g.target, {}};
  h.image.resize(f.image.size());
  for (std::size_t v = 0; v < f.image.size(); ++v) h.image[v] = g.image[f.image[v]];
  return h;
}

}  // namespace homcx
