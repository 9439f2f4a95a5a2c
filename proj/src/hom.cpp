#include "homcx/hom.hpp"

#include <algorithm>

namespace homcx {

HomComplex::HomComplex(SimplicialComplex source, SimplicialComplex target,
                       std::vector<MultiHom> cells)
    : source_(std::move(source)), target_(std::move(target)),
      cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  dim_index_.resize(cells_.size());
  for (int i = 0; i < static_cast<int>(cells_.size()); ++i) {
    const int d = cells_[i].dim();
    if (d >= static_cast<int>(by_dim_.size())) by_dim_.resize(d + 1);
    dim_index_[i] = {d, static_cast<int>(by_dim_[d].size())};
    by_dim_[d].push_back(i);
    index_.emplace(cells_[i].assign, i);
  }
}

const std::vector<int>& HomComplex::cells_of_dim(int d) const {
  static const std::vector<int> empty;
  if (d < 0 || d >= static_cast<int>(by_dim_.size())) return empty;
  return by_dim_[d];
}

int HomComplex::cells_in_dim(int d) const {
  return static_cast<int>(cells_of_dim(d).size());
}

int HomComplex::index_of(const MultiHom& c) const {
  auto it = index_.find(c.assign);
  return it == index_.end() ? -1 : it->second;
}

nlohmann::json HomComplex::to_json() const {
  nlohmann::json j;
  j["source"] = source_.to_json();
  j["target"] = target_.to_json();
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : cells_) cells.push_back({c.dim(), c.assign});
  j["cells"] = std::move(cells);
  return j;
}

HomComplex HomComplex::from_json(const nlohmann::json& j) {
  auto src = SimplicialComplex::from_json(j.at("source"));
  auto tgt = SimplicialComplex::from_json(j.at("target"));
  std::vector<MultiHom> cells;
  for (const auto& c : j.at("cells")) {
    MultiHom m;
    m.assign = c.at(1).get<std::vector<std::vector<int>>>();
    for (auto& s : m.assign) std::sort(s.begin(), s.end());
    cells.push_back(std::move(m));
  }
  return HomComplex(std::move(src), std::move(tgt), std::move(cells));
}

namespace {

// All nonempty subsets of 0..n-1 as sorted vertex lists, by size then lex.
std::vector<std::vector<int>> nonempty_subsets(int n) {
  std::vector<std::vector<int>> out;
  if (n > 24) throw std::invalid_argument("target too large to enumerate subsets");
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) s.push_back(v);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j]) ++i; else ++j;
  }
  return true;
}

// Every transversal (one vertex per listed set) is a simplex of L.
// The sets are pairwise disjoint, so transversals have distinct entries.
bool transversals_ok(const std::vector<const std::vector<int>*>& sets,
                     const SimplicialComplex& L) {
  std::vector<std::size_t> pick(sets.size(), 0);
  while (true) {
    Simplex t;
    t.reserve(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) t.push_back((*sets[i])[pick[i]]);
    std::sort(t.begin(), t.end());
    if (!L.has_simplex(t)) return false;
    std::size_t i = 0;
    while (i < sets.size() && ++pick[i] == sets[i]->size()) pick[i++] = 0;
    if (i == sets.size()) break;
  }
  return true;
}

}  // namespace

HomComplex build_hom(const SimplicialComplex& K, const SimplicialComplex& L,
                     long long cap) {
  const int nk = K.n_vertices();
  if (nk == 0) throw std::invalid_argument("source complex has no vertices");

  std::vector<MultiHom> cells;
  if (L.n_vertices() == 0) return HomComplex(K, L, std::move(cells));

  // every vertex of an assigned set must itself be a 0-simplex of L
  std::vector<bool> l_vertex_ok(L.n_vertices(), false);
  for (const auto& f : L.facets())
    for (int x : f) l_vertex_ok[x] = true;
  auto all_candidates = nonempty_subsets(L.n_vertices());
  std::vector<std::vector<int>> candidates;
  for (auto& s : all_candidates) {
    bool ok = true;
    for (int x : s)
      if (!l_vertex_ok[x]) { ok = false; break; }
    if (ok) candidates.push_back(std::move(s));
  }
  const auto adj = K.adjacency();
  // facets of K touching each vertex
  std::vector<std::vector<const Simplex*>> facets_at(nk);
  for (const auto& f : K.facets())
    for (int v : f) facets_at[v].push_back(&f);

  std::vector<const std::vector<int>*> assign(nk, nullptr);
  long long count = 0;

  auto admissible = [&](int v, const std::vector<int>& s) {
    for (int u = 0; u < v; ++u)
      if (adj[u][v] && assign[u] && !disjoint(*assign[u], s)) return false;
    for (const Simplex* f : facets_at[v]) {
      std::vector<const std::vector<int>*> sets;
      for (int w : *f) {
        if (w == v) sets.push_back(&s);
        else if (assign[w]) sets.push_back(assign[w]);
      }
      if (sets.size() >= 2 && !transversals_ok(sets, L)) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, int v) -> void {
    if (v == nk) {
      if (++count > cap) throw CapExceeded(count);
      MultiHom m;
      m.assign.reserve(nk);
      for (int u = 0; u < nk; ++u) m.assign.push_back(*assign[u]);
      cells.push_back(std::move(m));
      return;
    }
    for (const auto& s : candidates) {
      if (!admissible(v, s)) continue;
      assign[v] = &s;
      self(self, v + 1);
      assign[v] = nullptr;
    }
  };
  rec(rec, 0);
  return HomComplex(K, L, std::move(cells));
}

HomComplex deleted_product(const SimplicialComplex& L, int k, long long cap) {
  if (k < 1) throw std::invalid_argument("deleted product needs k >= 1");
  return build_hom(simplex_complex(k), L, cap);
}

std::vector<std::pair<MultiHom, int>> cell_facets(const HomComplex& h,
                                                  const MultiHom& cell) {
  if (h.index_of(cell) < 0) throw std::invalid_argument("cell not in complex");
  if (cell.dim() < 1) throw std::invalid_argument("0-cell has no facets");
  std::vector<std::pair<MultiHom, int>> out;
  int offset = 0;
  for (std::size_t v = 0; v < cell.assign.size(); ++v) {
    const auto& s = cell.assign[v];
    if (s.size() >= 2) {
      for (std::size_t j = 0; j < s.size(); ++j) {
        MultiHom face = cell;
        face.assign[v].erase(face.assign[v].begin() + j);
        const int sign = ((offset + static_cast<int>(j)) % 2 == 0) ? 1 : -1;
        out.emplace_back(std::move(face), sign);
      }
    }
    offset += static_cast<int>(s.size()) - 1;
  }
  return out;
}

int koszul_sign(const std::vector<int>& perm, const std::vector<int>& dims) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j] && (dims[perm[i]] % 2) && (dims[perm[j]] % 2))
        sign = -sign;
  return sign;
}

namespace {

// Sign and inversion count of permuting positive-dimensional factors.
// in_pos: for each output positive-dim factor (in output order), the index
// of the input positive-dim factor it comes from; dims indexed likewise.
int factor_perm_sign(const std::vector<int>& in_pos, const std::vector<int>& dims) {
  return koszul_sign(in_pos, dims);
}

int sort_parity(std::vector<int> v) {
  int sign = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) sign = -sign;
  return sign;
}

}  // namespace

CellularMap induced_precompose(const HomComplex& h, const VertexMap& f,
                               const HomComplex& target) {
  if (!is_nondegenerate(f))
    throw std::invalid_argument("precompose requires a non-degenerate map");
  {
    // a vertex-identifying map duplicates a product factor and is not
    // cellular; its chain map lives in precompose_chain instead
    std::vector<int> img = f.image;
    std::sort(img.begin(), img.end());
    if (std::adjacent_find(img.begin(), img.end()) != img.end())
      throw std::invalid_argument(
          "precompose as a cellular map needs an injective vertex map");
  }
  CellularMap m;
  m.source = &h;
  m.target = &target;
  m.image.resize(h.num_cells());
  m.coeff.resize(h.num_cells());
  const int nk = f.source.n_vertices();
  for (int ci = 0; ci < h.num_cells(); ++ci) {
    const MultiHom& eta = h.cells()[ci];
    MultiHom img;
    img.assign.resize(nk);
    for (int v = 0; v < nk; ++v) img.assign[v] = eta.assign[f.image[v]];
    const int ti = target.index_of(img);
    if (ti < 0) throw InternalError("precompose image cell missing from target");
    m.image[ci] = ti;
    // chain coefficient: nonzero iff f restricts to a bijection between
    // positive-dimensional factors
    std::vector<int> pos_in;   // w in V(K') with |eta(w)| >= 2, in order
    std::vector<int> dims;
    for (std::size_t w = 0; w < eta.assign.size(); ++w)
      if (eta.assign[w].size() >= 2) {
        pos_in.push_back(static_cast<int>(w));
        dims.push_back(static_cast<int>(eta.assign[w].size()) - 1);
      }
    std::vector<int> perm;     // input factor index per output factor
    std::vector<bool> used(pos_in.size(), false);
    bool ok = true;
    for (int v = 0; v < nk && ok; ++v) {
      if (img.assign[v].size() < 2) continue;
      auto it = std::find(pos_in.begin(), pos_in.end(), f.image[v]);
      const auto idx = static_cast<std::size_t>(it - pos_in.begin());
      if (it == pos_in.end() || used[idx]) { ok = false; break; }
      used[idx] = true;
      perm.push_back(static_cast<int>(idx));
    }
    ok = ok && perm.size() == pos_in.size();
    m.coeff[ci] = ok ? factor_perm_sign(perm, dims) : 0;
  }
  return m;
}

CellularMap induced_postcompose(const HomComplex& h, const VertexMap& g,
                                const HomComplex& target) {
  if (!is_nondegenerate(g))
    throw std::invalid_argument("postcompose requires a non-degenerate map");
  CellularMap m;
  m.source = &h;
  m.target = &target;
  m.image.resize(h.num_cells());
  m.coeff.resize(h.num_cells());
  for (int ci = 0; ci < h.num_cells(); ++ci) {
    const MultiHom& eta = h.cells()[ci];
    MultiHom img;
    img.assign.resize(eta.assign.size());
    int sign = 1;
    for (std::size_t v = 0; v < eta.assign.size(); ++v) {
      std::vector<int> mapped;
      mapped.reserve(eta.assign[v].size());
      for (int x : eta.assign[v]) mapped.push_back(g.image[x]);
      sign *= sort_parity(mapped);
      std::sort(mapped.begin(), mapped.end());
      if (std::adjacent_find(mapped.begin(), mapped.end()) != mapped.end())
        throw std::invalid_argument("postcompose map degenerate on a cell factor");
      img.assign[v] = std::move(mapped);
    }
    const int ti = target.index_of(img);
    if (ti < 0)
      throw std::invalid_argument("postcompose image violates the cell conditions");
    m.image[ci] = ti;
    m.coeff[ci] = sign;
  }
  return m;
}

CellularMap identity_cellular(const HomComplex& h) {
  CellularMap m;
  m.source = &h;
  m.target = &h;
  m.image.resize(h.num_cells());
  m.coeff.assign(h.num_cells(), 1);
  for (int i = 0; i < h.num_cells(); ++i) m.image[i] = i;
  return m;
}

CellularMap compose_cellular(const CellularMap& a, const CellularMap& b) {
  if (a.target != b.source)
    throw std::invalid_argument("cellular maps not composable");
  CellularMap m;
  m.source = a.source;
  m.target = b.target;
  m.image.resize(a.image.size());
  m.coeff.resize(a.image.size());
  for (std::size_t i = 0; i < a.image.size(); ++i) {
    m.image[i] = b.image[a.image[i]];
    m.coeff[i] = a.coeff[i] * b.coeff[a.image[i]];
  }
  return m;
}

}  // namespace homcx
