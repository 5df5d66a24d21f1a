#pragma once

// Finite-dimensional Leibniz algebras given by structure constants,
// their canonical ideals and quotients.  The bracket is [e_i, e_j] =
// sum_k c(i,j,k) e_k; constructors reject tensors violating the Leibniz
// identity [x,[y,z]] = [[x,y],z] - [[x,z],y].

#include <leibniz/linalg.hpp>

namespace leibniz {

template <ScalarType K>
struct LeibnizAlgebra {
  FieldSpec field;
  int dim = 0;
  std::vector<std::string> labels;
  std::vector<K> c;  // dim^3 structure constants

  LeibnizAlgebra() = default;
  LeibnizAlgebra(FieldSpec fs, int n, std::vector<K> structure,
                 std::vector<std::string> names = {})
      : field(fs), dim(n), labels(std::move(names)), c(std::move(structure)) {
    if (static_cast<std::size_t>(dim) * dim * dim != c.size())
      throw invalid_algebra("structure tensor must have dim^3 entries");
    if (labels.empty())
      for (int i = 1; i <= dim; ++i) labels.push_back("e" + std::to_string(i));
    if (static_cast<int>(labels.size()) != dim)
      throw invalid_algebra("label count must match the dimension");
    auto bad = leibniz_violations(*this);
    if (!bad.empty())
      throw invalid_algebra("Leibniz identity fails on " +
                                std::to_string(bad.size()) + " basis triple(s)",
                            bad);
  }

  static LeibnizAlgebra abelian(FieldSpec fs, int n) {
    return LeibnizAlgebra(fs, n,
                          std::vector<K>(static_cast<std::size_t>(n) * n * n));
  }

  const K& cijk(int i, int j, int k) const {
    return c[(static_cast<std::size_t>(i) * dim + j) * dim + k];
  }
  K& cijk(int i, int j, int k) {
    return c[(static_cast<std::size_t>(i) * dim + j) * dim + k];
  }

  std::vector<K> bracket_basis(int i, int j) const {
    std::vector<K> v(dim);
    for (int k = 0; k < dim; ++k) v[k] = cijk(i, j, k);
    return v;
  }

  std::vector<K> bracket(const std::vector<K>& u,
                         const std::vector<K>& v) const {
    std::vector<K> r(dim);
    for (int i = 0; i < dim; ++i) {
      if (u[i].is_zero()) continue;
      for (int j = 0; j < dim; ++j) {
        if (v[j].is_zero()) continue;
        K f = u[i] * v[j];
        for (int k = 0; k < dim; ++k) {
          if (cijk(i, j, k).is_zero()) continue;
          r[k] += f * cijk(i, j, k);
        }
      }
    }
    return r;
  }

  bool same_structure(const LeibnizAlgebra& o) const {
    return field == o.field && dim == o.dim && c == o.c;
  }
};

// Every basis triple (i,j,k), 1-based, where [e_i,[e_j,e_k]] differs from
// [[e_i,e_j],e_k] - [[e_i,e_k],e_j].  Multilinearity makes basis instances
// sufficient.
template <ScalarType K>
std::vector<std::array<int, 3>> leibniz_violations(
    const LeibnizAlgebra<K>& g) {
  std::vector<std::array<int, 3>> bad;
  const int n = g.dim;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        std::vector<K> lhs(n), rhs(n);
        for (int t = 0; t < n; ++t) {
          axpy(lhs, g.cijk(j, k, t), g.bracket_basis(i, t));
          axpy(rhs, g.cijk(i, j, t), g.bracket_basis(t, k));
          axpy(rhs, -g.cijk(i, k, t), g.bracket_basis(t, j));
        }
        for (int t = 0; t < n; ++t) lhs[t] -= rhs[t];
        if (!is_zero_vec(lhs)) bad.push_back({i + 1, j + 1, k + 1});
      }
  return bad;
}

// Report-valued check of a raw tensor (no construction attempted).
template <ScalarType K>
std::vector<std::array<int, 3>> validate_leibniz(FieldSpec fs, int n,
                                                 const std::vector<K>& c) {
  LeibnizAlgebra<K> g;
  g.field = fs;
  g.dim = n;
  g.c = c;
  if (static_cast<std::size_t>(n) * n * n != c.size())
    throw invalid_algebra("structure tensor must have dim^3 entries");
  return leibniz_violations(g);
}

template <ScalarType K>
struct AlgebraMorphism {
  LeibnizAlgebra<K> dom, cod;
  Mat<K> mat;  // cod.dim x dom.dim

  AlgebraMorphism() = default;
  AlgebraMorphism(LeibnizAlgebra<K> d, LeibnizAlgebra<K> c, Mat<K> m)
      : dom(std::move(d)), cod(std::move(c)), mat(std::move(m)) {
    if (mat.rows != cod.dim || mat.cols != dom.dim)
      throw error("morphism matrix shape mismatch");
    for (int i = 0; i < dom.dim; ++i)
      for (int j = 0; j < dom.dim; ++j) {
        auto lhs = mat.apply(dom.bracket_basis(i, j));
        auto rhs = cod.bracket(mat.col(i), mat.col(j));
        if (lhs != rhs)
          throw invalid_algebra("linear map does not preserve the bracket");
      }
  }

  static AlgebraMorphism identity(const LeibnizAlgebra<K>& g) {
    return AlgebraMorphism(g, g, Mat<K>::identity(g.dim, g.field));
  }

  std::vector<K> apply(const std::vector<K>& v) const { return mat.apply(v); }
};

template <ScalarType K>
struct Ideal {
  LeibnizAlgebra<K> parent;
  Subspace<K> space;

  Ideal() = default;
  Ideal(LeibnizAlgebra<K> g, Subspace<K> s)
      : parent(std::move(g)), space(std::move(s)) {
    if (space.ambient != parent.dim) throw error("ideal ambient mismatch");
    for (int r = 0; r < space.dim(); ++r) {
      auto a = space.basis.row(r);
      for (int i = 0; i < parent.dim; ++i) {
        std::vector<K> x(parent.dim);
        x[i] = scalar_of<K>(parent.field, 1);
        if (!space.contains(parent.bracket(a, x)) ||
            !space.contains(parent.bracket(x, a)))
          throw invalid_algebra("subspace is not a two-sided ideal");
      }
    }
  }

  int dim() const { return space.dim(); }
};

// span{[e_i, e_j]}; always an ideal.
template <ScalarType K>
Ideal<K> commutator_ideal(const LeibnizAlgebra<K>& g) {
  SpanBuilder<K> sb(g.dim, g.field);
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j) sb.add(g.bracket_basis(i, j));
  return Ideal<K>(g, Subspace<K>::from_builder(sb, g.field));
}

// C(g) = { c : [x,c] = 0 = [c,x] for all x }, as the kernel of a linear
// system over the basis.
template <ScalarType K>
Ideal<K> center(const LeibnizAlgebra<K>& g) {
  const int n = g.dim;
  Mat<K> sys(2 * n * n, n, g.field);
  int row = 0;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < n; ++j) {
        sys.at(row, j) = g.cijk(i, j, k);       // [e_i, c]_k
        sys.at(row + 1, j) = g.cijk(j, i, k);   // [c, e_i]_k
      }
      row += 2;
    }
  return Ideal<K>(g, Subspace<K>{n, g.field, nullspace(sys)});
}

// least ideal containing the seed; terminates since dimensions are bounded
template <ScalarType K>
Ideal<K> ideal_closure(const LeibnizAlgebra<K>& g, const Subspace<K>& seed) {
  SpanBuilder<K> sb(g.dim, g.field);
  for (int r = 0; r < seed.dim(); ++r) sb.add(seed.basis.row(r));
  bool grew = true;
  while (grew) {
    grew = false;
    auto basis = sb.basis();
    for (int r = 0; r < basis.rows; ++r) {
      auto v = basis.row(r);
      for (int i = 0; i < g.dim; ++i) {
        std::vector<K> x(g.dim);
        x[i] = scalar_of<K>(g.field, 1);
        grew |= sb.add(g.bracket(v, x));
        grew |= sb.add(g.bracket(x, v));
      }
    }
  }
  return Ideal<K>(g, Subspace<K>::from_builder(sb, g.field));
}

// g/a with the inherited bracket and the projection morphism.
template <ScalarType K>
std::pair<LeibnizAlgebra<K>, AlgebraMorphism<K>> quotient_algebra(
    const LeibnizAlgebra<K>& g, const Ideal<K>& a) {
  auto q = quotient(g.dim, a.space);
  const int m = q.dim;
  std::vector<K> c(static_cast<std::size_t>(m) * m * m);
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t) {
      std::vector<K> es(m), et(m);
      es[s] = scalar_of<K>(g.field, 1);
      et[t] = scalar_of<K>(g.field, 1);
      auto br = q.project(g.bracket(q.section(es), q.section(et)));
      for (int k = 0; k < m; ++k)
        c[(static_cast<std::size_t>(s) * m + t) * m + k] = br[k];
    }
  std::vector<std::string> names;
  for (int t = 0; t < m; ++t) names.push_back("q" + std::to_string(t + 1));
  LeibnizAlgebra<K> h(g.field, m, std::move(c), std::move(names));
  // well-definedness of the bracket on cosets, through the induced map check
  for (int i = 0; i < g.dim; ++i) {
    Mat<K> ad(g.dim, g.dim, g.field);
    Mat<K> ad_r(g.dim, g.dim, g.field);
    for (int j = 0; j < g.dim; ++j) {
      auto l = g.bracket_basis(i, j);
      auto r = g.bracket_basis(j, i);
      for (int k = 0; k < g.dim; ++k) {
        ad.at(k, j) = l[k];
        ad_r.at(k, j) = r[k];
      }
    }
    induced_map(ad, q, q, "quotient bracket");
    induced_map(ad_r, q, q, "quotient bracket");
  }
  AlgebraMorphism<K> proj(g, h, q.projection_matrix());
  return {std::move(h), std::move(proj)};
}

template <ScalarType K>
std::pair<LeibnizAlgebra<K>, AlgebraMorphism<K>> abelianization(
    const LeibnizAlgebra<K>& g) {
  return quotient_algebra(g, commutator_ideal(g));
}

// Lie means alternating here: [e_i,e_i] = 0 and antisymmetry, which is the
// correct notion in characteristic 2 as well.
template <ScalarType K>
bool is_lie(const LeibnizAlgebra<K>& g) {
  for (int i = 0; i < g.dim; ++i)
    for (int k = 0; k < g.dim; ++k) {
      if (!g.cijk(i, i, k).is_zero()) return false;
      for (int j = 0; j < g.dim; ++j)
        if (g.cijk(i, j, k) != -g.cijk(j, i, k)) return false;
    }
  return true;
}

template <ScalarType K>
bool is_perfect(const LeibnizAlgebra<K>& g) {
  return commutator_ideal(g).dim() == g.dim;
}

// Quotient by the ideal generated by all squares [x,x].  The span of the
// diagonal brackets [e_i,e_i] alone misses [x,x] for general x in
// characteristic 2, so the polarized elements [e_i,e_j] + [e_j,e_i] are
// always included (they are redundant away from characteristic 2).
template <ScalarType K>
std::pair<LeibnizAlgebra<K>, AlgebraMorphism<K>> liezation(
    const LeibnizAlgebra<K>& g) {
  SpanBuilder<K> sb(g.dim, g.field);
  for (int i = 0; i < g.dim; ++i) {
    sb.add(g.bracket_basis(i, i));
    for (int j = i + 1; j < g.dim; ++j) {
      auto v = g.bracket_basis(i, j);
      axpy(v, scalar_of<K>(g.field, 1), g.bracket_basis(j, i));
      sb.add(std::move(v));
    }
  }
  auto seed = Subspace<K>::from_builder(sb, g.field);
  return quotient_algebra(g, ideal_closure(g, seed));
}

template <ScalarType K>
LeibnizAlgebra<K> direct_sum(const LeibnizAlgebra<K>& g,
                             const LeibnizAlgebra<K>& h) {
  if (!(g.field == h.field)) throw error("direct sum: field mismatch");
  const int n = g.dim + h.dim;
  std::vector<K> c(static_cast<std::size_t>(n) * n * n);
  auto put = [&](int i, int j, int k, const K& v) {
    c[(static_cast<std::size_t>(i) * n + j) * n + k] = v;
  };
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j)
      for (int k = 0; k < g.dim; ++k) put(i, j, k, g.cijk(i, j, k));
  for (int i = 0; i < h.dim; ++i)
    for (int j = 0; j < h.dim; ++j)
      for (int k = 0; k < h.dim; ++k)
        put(g.dim + i, g.dim + j, g.dim + k, h.cijk(i, j, k));
  std::vector<std::string> names;
  for (const auto& s : g.labels) names.push_back(s + "'");
  for (const auto& s : h.labels) names.push_back(s + "''");
  return LeibnizAlgebra<K>(g.field, n, std::move(c), std::move(names));
}

// The subspace must be closed under the bracket; returns the algebra on the
// subspace basis together with the embedding morphism.
template <ScalarType K>
std::pair<LeibnizAlgebra<K>, AlgebraMorphism<K>> subalgebra_on(
    const LeibnizAlgebra<K>& g, const Subspace<K>& s,
    const std::string& what = "subalgebra") {
  const int m = s.dim();
  std::vector<K> c(static_cast<std::size_t>(m) * m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto br = g.bracket(s.basis.row(i), s.basis.row(j));
      auto coords = s.coords_of(br);
      if (!coords)
        throw invalid_algebra(what + ": subspace is not bracket-closed");
      for (int k = 0; k < m; ++k)
        c[(static_cast<std::size_t>(i) * m + j) * m + k] = (*coords)[k];
    }
  std::vector<std::string> names;
  for (int i = 1; i <= m; ++i) names.push_back("a" + std::to_string(i));
  LeibnizAlgebra<K> sub(g.field, m, std::move(c), std::move(names));
  AlgebraMorphism<K> emb(sub, g, s.basis.transpose());
  return {std::move(sub), std::move(emb)};
}

// Applies a basis permutation to the structure constants: new e_i = old
// e_{perm[i]}.  Used to check that verdicts are presentation-independent.
template <ScalarType K>
LeibnizAlgebra<K> permute_basis(const LeibnizAlgebra<K>& g,
                                const std::vector<int>& perm) {
  const int n = g.dim;
  std::vector<K> c(static_cast<std::size_t>(n) * n * n);
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = g.labels[perm[i]];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        c[(static_cast<std::size_t>(i) * n + j) * n + k] =
            g.cijk(perm[i], perm[j], perm[k]);
  return LeibnizAlgebra<K>(g.field, n, std::move(c), std::move(names));
}

}  // namespace leibniz
