#pragma once

// Homology of Leibniz algebras via the tensor-power chain complex
//
//   ... -> g^{(x)n} -d-> g^{(x)n-1} -> ... -> g -d-> K,
//
//   d(x_1 (x) ... (x) x_n) =
//     sum_{1<=i<j<=n} (-1)^j  x_1 (x) ... (x) [x_i,x_j]_i (x) ... ^x_j ... (x) x_n,
//
// plus the exterior-power complex for Lie algebras, the bullet square
// Coker(d_3), and the chain-level comparison map HL_2 -> H_2.
//
// Tensor (and wedge) power bases are ordered lexicographically in the basis
// indices; every matrix layout below depends on that choice.

#include <leibniz/algebra.hpp>

namespace leibniz {

inline long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) {
    r *= b;
    if (r > (1L << 40)) throw capacity_exceeded("tensor power too large");
  }
  return r;
}

struct HomologyOptions {
  int max_degree = 3;
  long max_chain_dim = 10000;  // keeps dim^4 <= 10^4 style budgets
};

template <ScalarType K>
struct ChainComplex {
  FieldSpec field;
  std::vector<int> dims;   // dims[i], degree 0..N
  std::vector<Mat<K>> d;   // d[i] : degree i -> degree i-1, i = 1..N (d[0] unused)

  void verify() const {
    for (std::size_t i = 2; i < d.size(); ++i)
      if (!(d[i - 1] * d[i]).is_zero())
        throw error("chain complex: d.d != 0 at degree " + std::to_string(i));
  }
};

// --- Loday complex ---------------------------------------------------------

template <ScalarType K>
Mat<K> loday_boundary(const LeibnizAlgebra<K>& g, int n,
                      const HomologyOptions& opts = {}) {
  if (n < 1) throw error("loday_boundary needs degree >= 1");
  const int dim = g.dim;
  if (n >= 2 && ipow(dim, n) > opts.max_chain_dim)
    throw capacity_exceeded("chain space dimension exceeds the configured cap");
  const long rows = n == 1 ? 1 : ipow(dim, n - 1);
  const long cols = ipow(dim, n);
  Mat<K> m(static_cast<int>(rows), static_cast<int>(cols), g.field);
  if (n == 1) return m;  // d(x) = 0 into the ground field

  std::vector<int> t(n);
  for (long col = 0; col < cols; ++col) {
    long rem = col;
    for (int s = n - 1; s >= 0; --s) {
      t[s] = static_cast<int>(rem % dim);
      rem /= dim;
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        // replace slot i by [t_i, t_j], delete slot j, sign (-1)^{j+1} for
        // 1-based j
        const bool negative = ((j + 1) % 2) != 0;
        for (int k = 0; k < dim; ++k) {
          const K& coeff = g.cijk(t[i], t[j], k);
          if (coeff.is_zero()) continue;
          long row = 0;
          for (int s = 0; s < n; ++s) {
            if (s == j) continue;
            row = row * dim + (s == i ? k : t[s]);
          }
          if (negative)
            m.at(static_cast<int>(row), static_cast<int>(col)) -= coeff;
          else
            m.at(static_cast<int>(row), static_cast<int>(col)) += coeff;
        }
      }
  }
  return m;
}

template <ScalarType K>
ChainComplex<K> loday_complex(const LeibnizAlgebra<K>& g, int top_degree,
                              const HomologyOptions& opts = {}) {
  ChainComplex<K> c;
  c.field = g.field;
  c.dims.push_back(1);  // degree 0 is the ground field
  c.d.emplace_back();
  for (int n = 1; n <= top_degree; ++n) {
    c.dims.push_back(static_cast<int>(ipow(g.dim, n)));
    c.d.push_back(loday_boundary(g, n, opts));
  }
  c.verify();
  return c;
}

// --- homology of a complex -------------------------------------------------

template <ScalarType K>
struct HomologyResult {
  int degree = 0;
  Subspace<K> cycles;       // ker d_n inside the chain space
  QuotientSpace<K> space;   // cycle coordinates modulo boundaries
  Mat<K> cycle_section;    // chain_dim x dim(H): cycle representatives

  int dim() const { return space.dim; }
};

template <ScalarType K>
HomologyResult<K> homology_at(const ChainComplex<K>& c, int n) {
  if (n < 0 || n + 1 > static_cast<int>(c.d.size()) - 1)
    throw error("homology_at: complex too short (need d at degree " +
                std::to_string(n + 1) + ")");
  HomologyResult<K> h;
  h.degree = n;
  if (n == 0)
    h.cycles = Subspace<K>::full(c.dims[0], c.field);
  else
    h.cycles = Subspace<K>{c.dims[n], c.field, nullspace(c.d[n])};

  // boundaries, expressed in cycle coordinates
  SpanBuilder<K> bnd(h.cycles.dim(), c.field);
  const Mat<K>& dn1 = c.d[n + 1];
  for (int j = 0; j < dn1.cols; ++j) {
    auto v = dn1.col(j);
    if (is_zero_vec(v)) continue;
    auto coords = h.cycles.coords_of(v);
    if (!coords) throw error("boundary is not a cycle; complex is broken");
    bnd.add(std::move(*coords));
  }
  h.space = QuotientSpace<K>::make(h.cycles.dim(),
                                   Subspace<K>::from_builder(bnd, c.field));
  // representatives: chain coords of the section basis
  h.cycle_section = Mat<K>(c.dims[n], h.space.dim, c.field);
  for (int t = 0; t < h.space.dim; ++t) {
    std::vector<K> e(h.space.dim);
    e[t] = scalar_of<K>(c.field, 1);
    auto cyc = h.space.section(e);
    std::vector<K> chain(c.dims[n]);
    for (int r = 0; r < h.cycles.dim(); ++r)
      axpy(chain, cyc[r], h.cycles.basis.row(r));
    for (int i = 0; i < c.dims[n]; ++i) h.cycle_section.at(i, t) = chain[i];
  }
  return h;
}

template <ScalarType K>
HomologyResult<K> leibniz_homology(const LeibnizAlgebra<K>& g, int n,
                                   const HomologyOptions& opts = {}) {
  if (n < 0 || n > opts.max_degree)
    throw capacity_exceeded("homology degree exceeds the configured bound");
  auto c = loday_complex(g, n + 1, opts);
  return homology_at(c, n);
}

// --- exterior powers and the Chevalley-Eilenberg complex -------------------

inline std::vector<std::vector<int>> sorted_tuples(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(k);
  for (int i = 0; i < k; ++i) t[i] = i;
  if (k > n) return out;
  while (true) {
    out.push_back(t);
    int i = k - 1;
    while (i >= 0 && t[i] == n - k + i) --i;
    if (i < 0) break;
    ++t[i];
    for (int j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
  }
  if (k == 0) out.assign(1, {});
  return out;
}

// index of a sorted tuple within sorted_tuples(n, k) order, with the sign of
// sorting; zero coefficient when indices repeat
struct WedgeLookup {
  int n = 0, k = 0;
  std::vector<std::vector<int>> tuples;
  // dense map from sorted tuple to its position
  long position(const std::vector<int>& t) const {
    long lo = 0, hi = static_cast<long>(tuples.size());
    while (lo < hi) {
      long mid = (lo + hi) / 2;
      if (tuples[mid] < t)
        lo = mid + 1;
      else
        hi = mid;
    }
    return lo;
  }
};

inline WedgeLookup wedge_lookup(int n, int k) {
  return {n, k, sorted_tuples(n, k)};
}

// d(x_1 ^ ... ^ x_n) = sum_{i<j} (-1)^{i+j} [x_i,x_j] ^ x_1 ... ^x_i ... ^x_j ... x_n
template <ScalarType K>
Mat<K> ce_boundary(const LeibnizAlgebra<K>& g, int n, const WedgeLookup& from,
                   const WedgeLookup& to) {
  Mat<K> m(static_cast<int>(to.tuples.size()),
           static_cast<int>(from.tuples.size()), g.field);
  if (n == 1) return m;  // d : g -> K is zero
  for (std::size_t col = 0; col < from.tuples.size(); ++col) {
    const auto& t = from.tuples[col];
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        // (-1)^{(i+1)+(j+1)} = (-1)^{i+j} with 0-based i, j
        const bool base_negative = ((i + j) % 2) != 0;
        std::vector<int> rest;
        for (int s = 0; s < n; ++s)
          if (s != i && s != j) rest.push_back(t[s]);
        for (int k = 0; k < g.dim; ++k) {
          const K& coeff = g.cijk(t[i], t[j], k);
          if (coeff.is_zero()) continue;
          // insert k in front: e_k ^ rest, then sort
          bool repeat = false;
          int pos = 0;
          for (int r : rest) {
            if (r == k) repeat = true;
            if (r < k) ++pos;
          }
          if (repeat) continue;
          std::vector<int> sorted = rest;
          sorted.insert(sorted.begin() + pos, k);
          bool negative = base_negative ^ ((pos % 2) != 0);
          long row = to.position(sorted);
          if (negative)
            m.at(static_cast<int>(row), static_cast<int>(col)) -= coeff;
          else
            m.at(static_cast<int>(row), static_cast<int>(col)) += coeff;
        }
      }
  }
  return m;
}

template <ScalarType K>
ChainComplex<K> ce_complex(const LeibnizAlgebra<K>& g, int top_degree) {
  if (!is_lie(g))
    throw error("Chevalley-Eilenberg complex needs a Lie algebra");
  ChainComplex<K> c;
  c.field = g.field;
  c.dims.push_back(1);
  c.d.emplace_back();
  WedgeLookup prev = wedge_lookup(g.dim, 0);
  for (int n = 1; n <= top_degree; ++n) {
    WedgeLookup cur = wedge_lookup(g.dim, n);
    c.dims.push_back(static_cast<int>(cur.tuples.size()));
    if (n == 1)
      c.d.push_back(Mat<K>(1, g.dim, g.field));
    else
      c.d.push_back(ce_boundary(g, n, cur, prev));
    prev = std::move(cur);
  }
  c.verify();
  return c;
}

template <ScalarType K>
HomologyResult<K> chevalley_eilenberg_homology(const LeibnizAlgebra<K>& g,
                                               int n) {
  if (n > 3) throw capacity_exceeded("CE homology implemented for n <= 3");
  auto c = ce_complex(g, n + 1);
  return homology_at(c, n);
}

// --- maps induced on homology ----------------------------------------------

template <ScalarType K>
Mat<K> tensor_power_matrix(const Mat<K>& f, int n) {
  long rows = ipow(f.rows, n), cols = ipow(f.cols, n);
  Mat<K> m(static_cast<int>(rows), static_cast<int>(cols), f.field);
  std::vector<int> t(n);
  for (long col = 0; col < cols; ++col) {
    long rem = col;
    for (int s = n - 1; s >= 0; --s) {
      t[s] = static_cast<int>(rem % f.cols);
      rem /= f.cols;
    }
    // expand the product of columns f.col(t[s])
    std::vector<std::pair<long, K>> acc = {{0, scalar_of<K>(f.field, 1)}};
    for (int s = 0; s < n; ++s) {
      std::vector<std::pair<long, K>> next;
      for (const auto& [idx, val] : acc)
        for (int r = 0; r < f.rows; ++r) {
          if (f.at(r, t[s]).is_zero()) continue;
          next.emplace_back(idx * f.rows + r, val * f.at(r, t[s]));
        }
      acc = std::move(next);
    }
    for (const auto& [idx, val] : acc)
      m.at(static_cast<int>(idx), static_cast<int>(col)) += val;
  }
  return m;
}

// Expresses "chain-level map respecting cycles and boundaries" as a map of
// homology coordinate spaces; the containment checks are the well-definedness
// guards.
template <ScalarType K>
LinearMap<K> descend_to_homology(const Mat<K>& chain_map,
                                 const HomologyResult<K>& from,
                                 const HomologyResult<K>& to,
                                 const std::string& what) {
  // boundaries to boundaries
  for (int r = 0; r < from.space.relations.dim(); ++r) {
    std::vector<K> chain(chain_map.cols);
    for (int i = 0; i < from.cycles.dim(); ++i)
      axpy(chain, from.space.relations.basis.at(r, i), from.cycles.basis.row(i));
    auto img = chain_map.apply(chain);
    auto coords = to.cycles.coords_of(img);
    if (!coords || !to.space.relations.contains(*coords))
      throw not_well_defined(what + ": boundaries are not preserved");
  }
  Mat<K> m(to.space.dim, from.space.dim, chain_map.field);
  for (int t = 0; t < from.space.dim; ++t) {
    auto img = chain_map.apply(from.cycle_section.col(t));
    auto coords = to.cycles.coords_of(img);
    if (!coords)
      throw not_well_defined(what + ": a cycle maps to a non-cycle");
    auto q = to.space.project(*coords);
    for (int i = 0; i < to.space.dim; ++i) m.at(i, t) = q[i];
  }
  return {QuotientSpace<K>::full(from.space.dim, chain_map.field),
          QuotientSpace<K>::full(to.space.dim, chain_map.field), m};
}

template <ScalarType K>
LinearMap<K> induced_homology_map(const AlgebraMorphism<K>& f, int n,
                                  const HomologyOptions& opts = {}) {
  auto hfrom = leibniz_homology(f.dom, n, opts);
  auto hto = leibniz_homology(f.cod, n, opts);
  auto chain = tensor_power_matrix(f.mat, n);
  return descend_to_homology(chain, hfrom, hto, "induced homology map");
}

// --- bullet square ----------------------------------------------------------

template <ScalarType K>
struct BulletSquare {
  QuotientSpace<K> space;   // g (x) g modulo im d_3
  std::vector<K> bracket;   // dim^3 tensor in quotient coordinates
  LinearMap<K> d_prime;     // induced by x (x) y -> [x, y]
};

// g . g = Coker(d_3) with [u, v] = d_2(u) (x) d_2(v); the bracket descends
// because d_2 kills boundaries (checked through induced_map anyway).
template <ScalarType K>
BulletSquare<K> bullet_square(const LeibnizAlgebra<K>& g,
                              const HomologyOptions& opts = {}) {
  auto d3 = loday_boundary(g, 3, opts);
  auto d2 = loday_boundary(g, 2, opts);
  BulletSquare<K> b;
  b.space = QuotientSpace<K>::make(
      d2.cols, Subspace<K>::span_rows(d3.transpose()));
  const int m = b.space.dim;
  b.bracket.assign(static_cast<std::size_t>(m) * m * m, K());
  for (int s = 0; s < m; ++s) {
    std::vector<K> es(m);
    es[s] = scalar_of<K>(g.field, 1);
    auto u = d2.apply(b.space.section(es));
    for (int t = 0; t < m; ++t) {
      std::vector<K> et(m);
      et[t] = scalar_of<K>(g.field, 1);
      auto v = d2.apply(b.space.section(et));
      // w = u (x) v in g (x) g, then project
      std::vector<K> w(static_cast<std::size_t>(g.dim) * g.dim);
      for (int i = 0; i < g.dim; ++i) {
        if (u[i].is_zero()) continue;
        for (int j = 0; j < g.dim; ++j) {
          if (v[j].is_zero()) continue;
          w[static_cast<std::size_t>(i) * g.dim + j] = u[i] * v[j];
        }
      }
      auto q = b.space.project(w);
      for (int k = 0; k < m; ++k)
        b.bracket[(static_cast<std::size_t>(s) * m + t) * m + k] = q[k];
    }
  }
  // descends: [im d_3, -] = 0 = [-, im d_3] since d_2 . d_3 = 0
  b.d_prime = induced_map(d2, b.space, QuotientSpace<K>::full(g.dim, g.field),
                          "bullet d'");
  return b;
}

// chain-level projection g^{(x)2} -> Lambda^2 g, x (x) y -> x ^ y
template <ScalarType K>
Mat<K> wedge_projection(const LeibnizAlgebra<K>& g) {
  auto w2 = wedge_lookup(g.dim, 2);
  Mat<K> p(static_cast<int>(w2.tuples.size()), g.dim * g.dim, g.field);
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j) {
      if (i == j) continue;
      long row = w2.position({std::min(i, j), std::max(i, j)});
      K one = scalar_of<K>(g.field, 1);
      p.at(static_cast<int>(row), i * g.dim + j) = (i < j) ? one : -one;
    }
  return p;
}

template <ScalarType K>
struct ComparisonT {
  HomologyResult<K> hl2, h2;
  LinearMap<K> t;  // HL_2(g) -> H_2(g), full coordinate spaces
};

// the epimorphism t_g : HL_2(g) -> H_2(g) induced by x (x) y -> x ^ y
template <ScalarType K>
ComparisonT<K> comparison_t(const LeibnizAlgebra<K>& g,
                            const HomologyOptions& opts = {}) {
  if (!is_lie(g)) throw error("comparison map needs a Lie algebra");
  ComparisonT<K> c{leibniz_homology(g, 2, opts),
                   chevalley_eilenberg_homology(g, 2),
                   {}};
  c.t = descend_to_homology(wedge_projection(g), c.hl2, c.h2, "t_g");
  if (image(c.t).dim() != c.h2.dim())
    throw error("t_g failed to be surjective");
  return c;
}

}  // namespace leibniz
