#include "homcx/chain.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include "homcx/pi1.hpp"

namespace homcx {

ZMat ZMat::identity(int n) {
  ZMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ZMat mul(const ZMat& a, const ZMat& b) {
  if (a.cols != b.rows) throw std::invalid_argument("ZMat shape mismatch");
  ZMat c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const Z& x = a.at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols; ++j)
        if (b.at(k, j) != 0) c.at(i, j) += x * b.at(k, j);
    }
  return c;
}

std::vector<Z> mul(const ZMat& a, const std::vector<Z>& v) {
  if (a.cols != static_cast<int>(v.size()))
    throw std::invalid_argument("ZMat/vector shape mismatch");
  std::vector<Z> out(a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j)
      if (a.at(i, j) != 0 && v[j] != 0) out[i] += a.at(i, j) * v[j];
  return out;
}

ZMat to_dense(const SparseMat& m) {
  ZMat d(m.rows, m.cols);
  for (int j = 0; j < m.cols; ++j)
    for (const auto& [i, v] : m.col[j]) d.at(i, j) = v;
  return d;
}

namespace {

// c = a * b for sparse matrices, columns kept sorted.
SparseMat spmul(const SparseMat& a, const SparseMat& b) {
  if (a.cols != b.rows) throw std::invalid_argument("sparse shape mismatch");
  SparseMat c(a.rows, b.cols);
  std::vector<Z> acc(a.rows, 0);
  std::vector<int> touched;
  for (int j = 0; j < b.cols; ++j) {
    for (const auto& [k, bv] : b.col[j]) {
      for (const auto& [i, av] : a.col[k]) {
        if (acc[i] == 0) touched.push_back(i);
        acc[i] += Z(av) * bv;
      }
    }
    std::sort(touched.begin(), touched.end());
    for (int i : touched) {
      if (acc[i] != 0) {
        if (acc[i] < std::numeric_limits<std::int64_t>::min() ||
            acc[i] > std::numeric_limits<std::int64_t>::max())
          throw InternalError("sparse product entry overflow");
        c.col[j].push_back({i, static_cast<std::int64_t>(acc[i])});
      }
      acc[i] = 0;
    }
    touched.clear();
  }
  return c;
}

bool sp_equal(const SparseMat& a, const SparseMat& b) {
  if (a.rows != b.rows || a.cols != b.cols) return false;
  return a.col == b.col;
}

bool sp_is_zero(const SparseMat& a) {
  for (const auto& c : a.col)
    if (!c.empty()) return false;
  return true;
}

std::vector<Z> sp_apply(const SparseMat& a, const std::vector<Z>& v) {
  if (a.cols != static_cast<int>(v.size()))
    throw std::invalid_argument("sparse/vector shape mismatch");
  std::vector<Z> out(a.rows);
  for (int j = 0; j < a.cols; ++j) {
    if (v[j] == 0) continue;
    for (const auto& [i, x] : a.col[j]) out[i] += Z(x) * v[j];
  }
  return out;
}

}  // namespace

ChainComplex chains_of(const HomComplex& h) {
  ChainComplex cc;
  const int top = h.dim();
  if (top < 0) return cc;
  cc.ranks.resize(top + 1);
  cc.boundary.resize(top + 1);
  for (int d = 0; d <= top; ++d) cc.ranks[d] = h.cells_in_dim(d);
  cc.boundary[0] = SparseMat(0, cc.ranks[0]);
  for (int d = 1; d <= top; ++d) {
    SparseMat m(cc.ranks[d - 1], cc.ranks[d]);
    const auto& idx = h.cells_of_dim(d);
    for (int p = 0; p < static_cast<int>(idx.size()); ++p) {
      std::map<int, std::int64_t> row;
      for (const auto& [face, sign] : cell_facets(h, h.cells()[idx[p]])) {
        const int g = h.index_of(face);
        if (g < 0) throw InternalError("boundary face missing from complex");
        row[h.dim_index(g).second] += sign;
      }
      for (const auto& [i, v] : row)
        if (v != 0) m.col[p].push_back({i, v});
    }
    cc.boundary[d] = std::move(m);
  }
  for (int d = 2; d <= top; ++d)
    if (!sp_is_zero(spmul(cc.boundary[d - 1], cc.boundary[d])))
      throw InternalError("boundary of boundary is nonzero in dim " +
                          std::to_string(d));
  return cc;
}

ChainComplex simplicial_chains(const SimplicialComplex& k) {
  ChainComplex cc;
  const int top = k.dim();
  if (top < 0) return cc;
  cc.ranks.resize(top + 1);
  cc.boundary.resize(top + 1);
  std::vector<std::vector<Simplex>> simp(top + 1);
  std::vector<std::map<Simplex, int>> pos(top + 1);
  for (int d = 0; d <= top; ++d) {
    simp[d] = k.simplices_of_dim(d);
    cc.ranks[d] = static_cast<int>(simp[d].size());
    for (int i = 0; i < cc.ranks[d]; ++i) pos[d][simp[d][i]] = i;
  }
  cc.boundary[0] = SparseMat(0, cc.ranks[0]);
  for (int d = 1; d <= top; ++d) {
    SparseMat m(cc.ranks[d - 1], cc.ranks[d]);
    for (int j = 0; j < cc.ranks[d]; ++j) {
      const Simplex& s = simp[d][j];
      std::map<int, std::int64_t> row;
      for (int drop = 0; drop <= d; ++drop) {
        Simplex f;
        for (int i = 0; i <= d; ++i)
          if (i != drop) f.push_back(s[i]);
        row[pos[d - 1].at(f)] += (drop % 2 == 0) ? 1 : -1;
      }
      for (const auto& [i, v] : row)
        if (v != 0) m.col[j].push_back({i, v});
    }
    cc.boundary[d] = std::move(m);
  }
  return cc;
}

ChainMap chain_map_of(const CellularMap& m, const ChainComplex& src,
                      const ChainComplex& tgt) {
  if (!m.source || !m.target) throw std::invalid_argument("null cellular map");
  ChainMap f;
  f.source = &src;
  f.target = &tgt;
  f.mats.resize(src.ranks.size());
  for (std::size_t d = 0; d < src.ranks.size(); ++d) {
    const int rows = d < tgt.ranks.size() ? tgt.ranks[d] : 0;
    f.mats[d] = SparseMat(rows, src.ranks[d]);
  }
  for (int i = 0; i < m.source->num_cells(); ++i) {
    if (m.coeff[i] == 0) continue;
    const auto [d, p] = m.source->dim_index(i);
    const auto [d2, q] = m.target->dim_index(m.image[i]);
    if (d2 != d)
      throw InternalError("nonzero coefficient on a dimension-changing cell");
    f.mats[d].col[p].push_back({q, m.coeff[i]});
  }
  for (auto& mat : f.mats)
    for (auto& c : mat.col) std::sort(c.begin(), c.end());
  // cellular maps must commute with the boundary
  for (std::size_t d = 1; d < src.ranks.size(); ++d) {
    SparseMat rhs = spmul(f.mats[d - 1], src.boundary[d]);
    if (f.mats[d].rows == 0) {
      if (!sp_is_zero(rhs))
        throw InternalError("chain map fails to commute with boundary");
      continue;
    }
    if (d < tgt.boundary.size()) {
      if (!sp_equal(spmul(tgt.boundary[d], f.mats[d]), rhs))
        throw InternalError("chain map fails to commute with boundary");
    } else if (!sp_is_zero(rhs)) {
      throw InternalError("chain map fails to commute with boundary");
    }
  }
  return f;
}

ChainMap precompose_chain(const HomComplex& h, const VertexMap& f,
                          const HomComplex& target, const ChainComplex& src,
                          const ChainComplex& tgt) {
  if (!is_nondegenerate(f))
    throw std::invalid_argument("precompose requires a non-degenerate map");
  const int nk = f.source.n_vertices();
  ChainMap out;
  out.source = &src;
  out.target = &tgt;
  out.mats.resize(src.ranks.size());
  for (std::size_t d = 0; d < src.ranks.size(); ++d)
    out.mats[d] = SparseMat(d < tgt.ranks.size() ? tgt.ranks[d] : 0,
                            src.ranks[d]);

  // preimage positions per vertex of K', ascending
  std::vector<std::vector<int>> pre(h.source().n_vertices());
  for (int v = 0; v < nk; ++v) pre[f.image[v]].push_back(v);

  for (int ci = 0; ci < h.num_cells(); ++ci) {
    const MultiHom& eta = h.cells()[ci];
    const auto [d, col] = h.dim_index(ci);
    // factors with no preimage are dropped; a dropped positive-dimensional
    // factor kills the whole generator (augmentation)
    bool dead = false;
    for (std::size_t w = 0; w < eta.assign.size(); ++w)
      if (pre[w].empty() && eta.assign[w].size() > 1) dead = true;
    if (dead) continue;

    // one cut vector per duplicated factor: 0 <= i_1 <= ... <= i_{m-1} <= p
    // splits [s_0..s_p] into m consecutive pieces whose dimensions sum to p
    std::vector<int> ws;  // factors that survive, ascending
    for (std::size_t w = 0; w < eta.assign.size(); ++w)
      if (!pre[w].empty()) ws.push_back(static_cast<int>(w));
    std::vector<std::vector<int>> cuts(ws.size());
    std::map<int, Z> column;  // accumulated coefficients by target row

    auto emit = [&]() {
      MultiHom img;
      img.assign.resize(nk);
      // pieces in source order (factor asc, copy asc), with dims and slots
      std::vector<int> piece_pos, piece_dim;
      for (std::size_t a = 0; a < ws.size(); ++a) {
        const auto& s = eta.assign[ws[a]];
        const auto& positions = pre[ws[a]];
        int lo = 0;
        for (std::size_t t = 0; t < positions.size(); ++t) {
          const int hi = t + 1 < positions.size()
                             ? cuts[a][t]
                             : static_cast<int>(s.size()) - 1;
          img.assign[positions[t]] = {s.begin() + lo, s.begin() + hi + 1};
          piece_pos.push_back(positions[t]);
          piece_dim.push_back(hi - lo);
          lo = hi;
        }
      }
      // reorder pieces into position order and pick up the Koszul sign
      std::vector<int> order(piece_pos.size());
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](int a, int b) { return piece_pos[a] < piece_pos[b]; });
      const int sign = koszul_sign(order, piece_dim);
      const int gi = target.index_of(img);
      if (gi < 0) throw InternalError("precompose image cell missing");
      const auto [gd, grow] = target.dim_index(gi);
      if (gd != d) throw InternalError("diagonal piece changed dimension");
      column[grow] += sign;
    };

    auto rec = [&](auto&& self, std::size_t a) -> void {
      if (a == ws.size()) {
        emit();
        return;
      }
      const int copies = static_cast<int>(pre[ws[a]].size());
      const int p = static_cast<int>(eta.assign[ws[a]].size()) - 1;
      cuts[a].assign(copies - 1, 0);
      if (copies == 1) {
        self(self, a + 1);
        return;
      }
      auto pick = [&](auto&& self2, int t, int lo) -> void {
        if (t == copies - 1) {
          self(self, a + 1);
          return;
        }
        for (int i = lo; i <= p; ++i) {
          cuts[a][t] = i;
          self2(self2, t + 1, i);
        }
      };
      pick(pick, 0, 0);
    };
    rec(rec, 0);

    for (const auto& [row, val] : column)
      if (val != 0) {
        if (val < std::numeric_limits<std::int64_t>::min() ||
            val > std::numeric_limits<std::int64_t>::max())
          throw InternalError("precompose coefficient overflow");
        out.mats[d].col[col].push_back({row, static_cast<std::int64_t>(val)});
      }
  }

  // same commutation guarantee as chain_map_of
  for (std::size_t d = 1; d < src.ranks.size(); ++d) {
    SparseMat rhs = spmul(out.mats[d - 1], src.boundary[d]);
    if (d < tgt.boundary.size() && out.mats[d].rows > 0) {
      if (!sp_equal(spmul(tgt.boundary[d], out.mats[d]), rhs))
        throw InternalError("diagonal precompose fails to commute");
    } else if (!sp_is_zero(rhs)) {
      throw InternalError("diagonal precompose fails to commute");
    }
  }
  return out;
}

bool chain_maps_equal(const ChainMap& a, const ChainMap& b) {
  if (a.mats.size() != b.mats.size()) return false;
  for (std::size_t d = 0; d < a.mats.size(); ++d)
    if (!sp_equal(a.mats[d], b.mats[d])) return false;
  return true;
}

ChainMap identity_chain(const ChainComplex& c) {
  ChainMap m;
  m.source = &c;
  m.target = &c;
  m.mats.resize(c.ranks.size());
  for (std::size_t d = 0; d < c.ranks.size(); ++d) {
    m.mats[d] = SparseMat(c.ranks[d], c.ranks[d]);
    for (int i = 0; i < c.ranks[d]; ++i) m.mats[d].col[i].push_back({i, 1});
  }
  return m;
}

ChainMap compose_chain(const ChainMap& a, const ChainMap& b) {
  if (a.target != b.source)
    throw std::invalid_argument("chain map composition mismatch");
  ChainMap c;
  c.source = a.source;
  c.target = b.target;
  c.mats.resize(a.mats.size());
  for (std::size_t d = 0; d < a.mats.size(); ++d) {
    if (d < b.mats.size())
      c.mats[d] = spmul(b.mats[d], a.mats[d]);
    else
      c.mats[d] = SparseMat(0, a.mats[d].cols);
  }
  return c;
}

const HomologyGroups::Group& HomologyGroups::at(int d) const {
  static const Group trivial{};
  if (d < 0 || d >= static_cast<int>(dims.size())) return trivial;
  return dims[d];
}

std::string HomologyGroups::to_string() const {
  if (empty_complex) return "(empty complex)";
  std::ostringstream os;
  for (std::size_t d = 0; d < dims.size(); ++d) {
    if (d) os << ", ";
    os << "H_" << d << "=";
    const auto& g = dims[d];
    bool first = true;
    if (g.betti > 0) {
      os << "Z";
      if (g.betti > 1) os << "^" << g.betti;
      first = false;
    }
    for (const auto& t : g.torsion) {
      if (!first) os << "+";
      os << "Z/" << t;
      first = false;
    }
    if (first) os << "0";
  }
  return os.str();
}

namespace {

// Dense Smith normal form. Transform arguments may be null; when given
// they satisfy u * a_original * v = d and u*u_inv = v*v_inv = identity.
int snf_core(ZMat& d, ZMat* u, ZMat* u_inv, ZMat* v, ZMat* v_inv) {
  const int m = d.rows, n = d.cols;
  auto row_add = [&](int i, int j, const Z& q) {  // R_i += q * R_j
    for (int c = 0; c < n; ++c) d.at(i, c) += q * d.at(j, c);
    if (u)
      for (int c = 0; c < u->cols; ++c) u->at(i, c) += q * u->at(j, c);
    if (u_inv)
      for (int r = 0; r < u_inv->rows; ++r)
        u_inv->at(r, j) -= q * u_inv->at(r, i);
  };
  auto col_add = [&](int j, int i, const Z& q) {  // C_j += q * C_i
    for (int r = 0; r < m; ++r) d.at(r, j) += q * d.at(r, i);
    if (v)
      for (int r = 0; r < v->rows; ++r) v->at(r, j) += q * v->at(r, i);
    if (v_inv)
      for (int c = 0; c < v_inv->cols; ++c)
        v_inv->at(i, c) -= q * v_inv->at(j, c);
  };
  auto row_swap = [&](int i, int j) {
    if (i == j) return;
    for (int c = 0; c < n; ++c) std::swap(d.at(i, c), d.at(j, c));
    if (u)
      for (int c = 0; c < u->cols; ++c) std::swap(u->at(i, c), u->at(j, c));
    if (u_inv)
      for (int r = 0; r < u_inv->rows; ++r)
        std::swap(u_inv->at(r, i), u_inv->at(r, j));
  };
  auto col_swap = [&](int i, int j) {
    if (i == j) return;
    for (int r = 0; r < m; ++r) std::swap(d.at(r, i), d.at(r, j));
    if (v)
      for (int r = 0; r < v->rows; ++r) std::swap(v->at(r, i), v->at(r, j));
    if (v_inv)
      for (int c = 0; c < v_inv->cols; ++c)
        std::swap(v_inv->at(i, c), v_inv->at(j, c));
  };
  auto row_negate = [&](int i) {
    for (int c = 0; c < n; ++c) d.at(i, c) = -d.at(i, c);
    if (u)
      for (int c = 0; c < u->cols; ++c) u->at(i, c) = -u->at(i, c);
    if (u_inv)
      for (int r = 0; r < u_inv->rows; ++r)
        u_inv->at(r, i) = -u_inv->at(r, i);
  };

  int t = 0;
  const int lim = std::min(m, n);
  while (t < lim) {
    // smallest-magnitude nonzero pivot in the trailing submatrix
    int pi = -1, pj = -1;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        const Z& x = d.at(i, j);
        if (x == 0) continue;
        if (pi < 0 || abs(x) < abs(d.at(pi, pj))) { pi = i; pj = j; }
      }
    if (pi < 0) break;
    row_swap(t, pi);
    col_swap(t, pj);
    bool dirty = false;
    for (int i = t + 1; i < m; ++i) {
      if (d.at(i, t) == 0) continue;
      Z q = d.at(i, t) / d.at(t, t);
      if (q != 0) row_add(i, t, -q);
      if (d.at(i, t) != 0) dirty = true;
    }
    for (int j = t + 1; j < n; ++j) {
      if (d.at(t, j) == 0) continue;
      Z q = d.at(t, j) / d.at(t, t);
      if (q != 0) col_add(j, t, -q);
      if (d.at(t, j) != 0) dirty = true;
    }
    if (dirty) continue;
    // divisibility: fold in any entry the pivot does not divide
    bool fixed = false;
    for (int i = t + 1; i < m && !fixed; ++i)
      for (int j = t + 1; j < n && !fixed; ++j)
        if (d.at(i, j) % d.at(t, t) != 0) {
          row_add(t, i, 1);
          fixed = true;
        }
    if (fixed) continue;
    if (d.at(t, t) < 0) row_negate(t);
    ++t;
  }
  return t;
}

}  // namespace

SmithDecomposition smith_decompose(const ZMat& a) {
  SmithDecomposition s;
  s.d = a;
  s.u = ZMat::identity(a.rows);
  s.u_inv = ZMat::identity(a.rows);
  s.v = ZMat::identity(a.cols);
  s.v_inv = ZMat::identity(a.cols);
  s.rank = snf_core(s.d, &s.u, &s.u_inv, &s.v, &s.v_inv);
  return s;
}

std::vector<Z> smith_invariants(const SparseMat& m) {
  // sparse phase: eliminate on unit pivots chosen by a Markowitz-style
  // fill estimate, then finish the small remainder densely
  std::vector<std::map<int, Z>> row(m.rows), col(m.cols);
  for (int j = 0; j < m.cols; ++j)
    for (const auto& [i, v] : m.col[j]) {
      row[i][j] = v;
      col[j][i] = v;
    }
  std::vector<bool> row_gone(m.rows, false), col_gone(m.cols, false);
  long long units = 0;
  while (true) {
    // smallest active column containing a +-1 entry
    int bc = -1;
    std::size_t best = 0;
    for (int j = 0; j < m.cols; ++j) {
      if (col_gone[j] || col[j].empty()) continue;
      if (bc >= 0 && col[j].size() >= best) continue;
      for (const auto& [i, v] : col[j])
        if (v == 1 || v == -1) {
          bc = j;
          best = col[j].size();
          break;
        }
    }
    if (bc < 0) break;
    int br = -1;
    std::size_t brsz = 0;
    for (const auto& [i, v] : col[bc])
      if ((v == 1 || v == -1) && (br < 0 || row[i].size() < brsz)) {
        br = i;
        brsz = row[i].size();
      }
    const Z p = col[bc].at(br);
    std::vector<std::pair<int, Z>> cents(col[bc].begin(), col[bc].end());
    std::vector<std::pair<int, Z>> rents(row[br].begin(), row[br].end());
    for (const auto& [i, a] : cents) {
      if (i == br) continue;
      for (const auto& [j, b] : rents) {
        if (j == bc) continue;
        Z& x = row[i][j];
        x -= a * b * p;  // p is +-1 so a*b/p = a*b*p
        if (x == 0) {
          row[i].erase(j);
          col[j].erase(i);
        } else {
          col[j][i] = x;
        }
      }
    }
    for (const auto& [i, a] : cents) row[i].erase(bc);
    for (const auto& [j, b] : rents) col[j].erase(br);
    row[br].clear();
    col[bc].clear();
    row_gone[br] = true;
    col_gone[bc] = true;
    ++units;
  }
  // dense remainder
  std::vector<int> rmap, cmap;
  std::vector<int> rpos(m.rows, -1), cpos(m.cols, -1);
  for (int i = 0; i < m.rows; ++i)
    if (!row_gone[i] && !row[i].empty()) {
      rpos[i] = static_cast<int>(rmap.size());
      rmap.push_back(i);
    }
  for (int j = 0; j < m.cols; ++j)
    if (!col_gone[j] && !col[j].empty()) {
      cpos[j] = static_cast<int>(cmap.size());
      cmap.push_back(j);
    }
  std::vector<Z> inv(units, Z(1));
  if (!rmap.empty() && !cmap.empty()) {
    ZMat rem(static_cast<int>(rmap.size()), static_cast<int>(cmap.size()));
    for (int i : rmap)
      for (const auto& [j, v] : row[i]) rem.at(rpos[i], cpos[j]) = v;
    int r = snf_core(rem, nullptr, nullptr, nullptr, nullptr);
    for (int t = 0; t < r; ++t) inv.push_back(rem.at(t, t));
  }
  return inv;
}

HomologyGroups homology(const ChainComplex& c, bool reduced) {
  HomologyGroups hg;
  hg.reduced = reduced;
  if (c.empty()) {
    hg.empty_complex = true;
    return hg;
  }
  const int top = c.top_dim();
  std::vector<std::vector<Z>> inv(top + 2);
  for (int d = 1; d <= top; ++d) inv[d] = smith_invariants(c.boundary[d]);
  hg.dims.resize(top + 1);
  for (int d = 0; d <= top; ++d) {
    const long rank_in = static_cast<long>(inv[d + 1].size());
    const long rank_out = d >= 1 ? static_cast<long>(inv[d].size()) : 0;
    hg.dims[d].betti = c.ranks[d] - rank_out - rank_in;
    for (const auto& t : inv[d + 1])
      if (t > 1) hg.dims[d].torsion.push_back(t);
  }
  if (reduced && c.ranks[0] > 0) hg.dims[0].betti -= 1;
  return hg;
}

HomologyBasisData homology_with_basis(const ChainComplex& c) {
  HomologyBasisData out;
  if (c.empty()) return out;
  const int top = c.top_dim();
  out.dims.resize(top + 1);
  for (int d = 0; d <= top; ++d) {
    HomologyBasisDim& b = out.dims[d];
    const int n = c.ranks[d];
    b.chain_rank = n;
    if (d == 0) {
      b.boundary_rank = 0;
      b.v_inv = ZMat::identity(n);
      b.kernel_basis = ZMat::identity(n);
    } else {
      SmithDecomposition s = smith_decompose(to_dense(c.boundary[d]));
      b.boundary_rank = s.rank;
      b.v_inv = std::move(s.v_inv);
      b.kernel_basis = ZMat(n, n - s.rank);
      for (int i = 0; i < n; ++i)
        for (int j = s.rank; j < n; ++j)
          b.kernel_basis.at(i, j - s.rank) = s.v.at(i, j);
    }
    b.kernel_rank = n - b.boundary_rank;
    // image of the next boundary, written in kernel coordinates
    ZMat x(b.kernel_rank, d < top ? c.ranks[d + 1] : 0);
    if (d < top) {
      ZMat w = mul(b.v_inv, to_dense(c.boundary[d + 1]));
      for (int i = 0; i < b.boundary_rank; ++i)
        for (int j = 0; j < w.cols; ++j)
          if (w.at(i, j) != 0)
            throw InternalError("image of boundary escapes the kernel");
      for (int i = 0; i < b.kernel_rank; ++i)
        for (int j = 0; j < w.cols; ++j)
          x.at(i, j) = w.at(b.boundary_rank + i, j);
    }
    SmithDecomposition sx = smith_decompose(x);
    b.up = std::move(sx.u);
    b.up_inv = std::move(sx.u_inv);
    b.image_rank = sx.rank;
    b.sigma.assign(b.kernel_rank, Z(0));
    for (int t = 0; t < sx.rank; ++t) b.sigma[t] = sx.d.at(t, t);
    b.betti = b.kernel_rank - b.image_rank;
    for (int t = 0; t < sx.rank; ++t)
      if (b.sigma[t] > 1) b.torsion.push_back(b.sigma[t]);
  }
  return out;
}

namespace {

std::vector<Z> class_coords(const HomologyBasisDim& b, const std::vector<Z>& cycle) {
  if (static_cast<int>(cycle.size()) != b.chain_rank)
    throw std::invalid_argument("cycle length mismatch");
  std::vector<Z> vc = mul(b.v_inv, cycle);
  for (int i = 0; i < b.boundary_rank; ++i)
    if (vc[i] != 0) throw std::invalid_argument("chain is not a cycle");
  std::vector<Z> w(vc.begin() + b.boundary_rank, vc.end());
  return mul(b.up, w);
}

}  // namespace

std::vector<Z> HomologyBasisDim::torsion_coords(const std::vector<Z>& cycle) const {
  std::vector<Z> u = class_coords(*this, cycle);
  std::vector<Z> out;
  for (int i = 0; i < image_rank; ++i) {
    if (sigma[i] <= 1) continue;
    Z r = u[i] % sigma[i];
    if (r < 0) r += sigma[i];
    out.push_back(r);
  }
  return out;
}

std::vector<Z> HomologyBasisDim::free_coords(const std::vector<Z>& cycle) const {
  std::vector<Z> u = class_coords(*this, cycle);
  return {u.begin() + image_rank, u.end()};
}

std::vector<Z> HomologyBasisDim::free_generator(int i) const {
  if (i < 0 || i >= betti) throw std::invalid_argument("generator index");
  std::vector<Z> e(kernel_rank, Z(0));
  e[image_rank + i] = 1;
  return mul(kernel_basis, mul(up_inv, e));
}

HomologyGroups HomologyBasisData::groups(bool reduced) const {
  HomologyGroups hg;
  hg.reduced = reduced;
  if (dims.empty()) {
    hg.empty_complex = true;
    return hg;
  }
  hg.dims.resize(dims.size());
  for (std::size_t d = 0; d < dims.size(); ++d) {
    hg.dims[d].betti = dims[d].betti;
    hg.dims[d].torsion = dims[d].torsion;
  }
  if (reduced && dims[0].chain_rank > 0) hg.dims[0].betti -= 1;
  return hg;
}

ZMat induced_on_homology(const ChainMap& f, const HomologyBasisData& src,
                         const HomologyBasisData& tgt, int d) {
  const long sb = d < static_cast<int>(src.dims.size()) ? src.dims[d].betti : 0;
  const long tb = d < static_cast<int>(tgt.dims.size()) ? tgt.dims[d].betti : 0;
  ZMat m(static_cast<int>(tb), static_cast<int>(sb));
  if (sb == 0 || tb == 0) return m;
  for (int j = 0; j < sb; ++j) {
    std::vector<Z> g = src.dims[d].free_generator(j);
    std::vector<Z> img = sp_apply(f.mats[d], g);
    std::vector<Z> fc = tgt.dims[d].free_coords(img);
    for (int i = 0; i < tb; ++i) m.at(i, j) = fc[i];
  }
  return m;
}

ConnectivityEstimate connectivity_estimate(const HomologyGroups& hg,
                                           bool attempt_pi1,
                                           const HomComplex* h) {
  ConnectivityEstimate est;
  if (hg.empty_complex) {
    est.k = -2;
    return est;
  }
  if (!hg.reduced)
    throw std::invalid_argument("connectivity needs reduced homology");
  int k = -1;
  while (k + 1 < static_cast<int>(hg.dims.size())) {
    const auto& g = hg.dims[k + 1];
    if (g.betti != 0 || !g.torsion.empty()) break;
    ++k;
  }
  est.k = k;
  if (attempt_pi1 && h && k >= 1 && fundamental_group_trivial(*h))
    est.level = ConnectivityEstimate::Level::homology_pi1;
  return est;
}

}  // namespace homcx
