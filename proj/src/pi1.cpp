#include "homcx/pi1.hpp"

#include <algorithm>
#include <map>

namespace homcx {

namespace {

// Free and cyclic reduction of a relator word.
std::vector<int> reduce_word(const std::vector<int>& w) {
  std::vector<int> out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  while (out.size() >= 2 && out.front() == -out.back()) {
    out.erase(out.begin());
    out.pop_back();
  }
  return out;
}

}  // namespace

GroupPresentation edge_path_presentation(const HomComplex& h) {
  GroupPresentation p;
  if (h.dim() < 0) return p;
  const int nv = h.cells_in_dim(0);
  const int ne = h.dim() >= 1 ? h.cells_in_dim(1) : 0;

  // oriented edges: tail is the 0-face with boundary sign -1
  std::vector<std::pair<int, int>> ends(ne);  // (tail, head) as 0-cell indices
  for (int e = 0; e < ne; ++e) {
    const int g = h.cells_of_dim(1)[e];
    int tail = -1, head = -1;
    for (const auto& [face, sign] : cell_facets(h, h.cells()[g])) {
      const int idx = h.dim_index(h.index_of(face)).second;
      (sign < 0 ? tail : head) = idx;
    }
    if (tail < 0 || head < 0) throw InternalError("edge with bad boundary");
    ends[e] = {tail, head};
  }

  // spanning forest: tree edges become trivial generators
  std::vector<int> comp(nv);
  for (int i = 0; i < nv; ++i) comp[i] = i;
  auto find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  std::vector<bool> tree(ne, false);
  for (int e = 0; e < ne; ++e) {
    int a = find(ends[e].first), b = find(ends[e].second);
    if (a != b) {
      comp[a] = b;
      tree[e] = true;
    }
  }
  std::vector<int> gen_of(ne, 0);  // 0 for tree edges, else generator id+1
  int ng = 0;
  for (int e = 0; e < ne; ++e)
    if (!tree[e]) gen_of[e] = ++ng;
  p.n_generators = ng;

  // boundary words of 2-cells: walk the 3- or 4-edge cycle
  if (h.dim() >= 2) {
    for (int c : h.cells_of_dim(2)) {
      std::vector<int> edges;
      for (const auto& [face, sign] : cell_facets(h, h.cells()[c]))
        edges.push_back(h.dim_index(h.index_of(face)).second);
      std::sort(edges.begin(), edges.end());
      edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
      std::vector<bool> used(edges.size(), false);
      std::vector<int> word;
      int at = ends[edges[0]].second;
      word.push_back(gen_of[edges[0]] == 0 ? 0 : gen_of[edges[0]]);
      used[0] = true;
      const int start = ends[edges[0]].first;
      while (at != start) {
        bool moved = false;
        for (std::size_t i = 0; i < edges.size() && !moved; ++i) {
          if (used[i]) continue;
          const auto [t, hd] = ends[edges[i]];
          if (t == at) {
            word.push_back(gen_of[edges[i]]);
            at = hd;
          } else if (hd == at) {
            word.push_back(-gen_of[edges[i]]);
            at = t;
          } else {
            continue;
          }
          used[i] = true;
          moved = true;
        }
        if (!moved) throw InternalError("2-cell boundary is not a cycle");
      }
      std::erase(word, 0);  // tree edges contribute nothing
      word = reduce_word(word);
      if (!word.empty()) p.relators.push_back(std::move(word));
    }
  }
  return p;
}

bool presentation_trivializes(GroupPresentation p, long long budget) {
  std::vector<bool> dead(p.n_generators + 1, false);
  long long steps = 0;
  bool changed = true;
  while (changed && steps < budget) {
    changed = false;
    std::vector<std::vector<int>> next;
    for (auto& r : p.relators) {
      std::erase_if(r, [&](int x) { return dead[std::abs(x)]; });
      r = reduce_word(r);
      ++steps;
      if (r.empty()) {
        changed = true;
        continue;
      }
      if (r.size() == 1) {
        dead[std::abs(r[0])] = true;
        changed = true;
        continue;
      }
      next.push_back(std::move(r));
    }
    p.relators = std::move(next);
    // relator g = w: substitute w for g everywhere when w omits g
    bool substituted = false;
    for (std::size_t ri = 0; ri < p.relators.size() && steps < budget; ++ri) {
      const auto& r = p.relators[ri];
      if (r.size() < 2) continue;
      for (std::size_t k = 0; k < r.size(); ++k) {
        const int g = std::abs(r[k]);
        int occurrences = 0;
        for (int x : r)
          if (std::abs(x) == g) ++occurrences;
        if (occurrences != 1) continue;
        // replacement word for g (inverse of the rest, rotated to k)
        std::vector<int> w;
        for (std::size_t t = 1; t < r.size(); ++t)
          w.push_back(r[(k + t) % r.size()]);
        std::reverse(w.begin(), w.end());
        for (int& x : w) x = -x;
        if (r[k] < 0) {
          std::reverse(w.begin(), w.end());
          for (int& x : w) x = -x;
        }
        for (std::size_t rj = 0; rj < p.relators.size(); ++rj) {
          if (rj == ri) continue;
          std::vector<int> out;
          for (int x : p.relators[rj]) {
            if (std::abs(x) != g) {
              out.push_back(x);
            } else if (x > 0) {
              out.insert(out.end(), w.begin(), w.end());
            } else {
              for (auto it = w.rbegin(); it != w.rend(); ++it)
                out.push_back(-*it);
            }
          }
          p.relators[rj] = reduce_word(out);
          ++steps;
        }
        dead[g] = true;
        p.relators.erase(p.relators.begin() + ri);
        changed = substituted = true;
        break;
      }
      if (substituted) break;
    }
  }
  if (!p.relators.empty()) return false;
  for (int g = 1; g <= p.n_generators; ++g)
    if (!dead[g]) return false;
  return true;
}

bool fundamental_group_trivial(const HomComplex& h, long long budget) {
  return presentation_trivializes(edge_path_presentation(h), budget);
}

}  // namespace homcx
