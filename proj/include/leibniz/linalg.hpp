#pragma once

// Subspaces in canonical (RREF) form, quotient spaces with deterministic
// sections, linear maps between quotients, exactness checking, and the snake
// lemma connecting map.
//
// Conventions fixed here and relied on everywhere else:
//   * a Subspace basis is the unique RREF, so subspace equality is grid
//     equality of bases;
//   * a QuotientSpace section picks the coordinates indexed by the non-pivot
//     columns of the relation RREF, in increasing column order;
//   * a plain vector space is a quotient by the zero subspace.

#include <leibniz/matrix.hpp>
#include <leibniz/report.hpp>

namespace leibniz {

template <ScalarType K>
struct Subspace {
  int ambient = 0;
  FieldSpec field;
  Mat<K> basis;  // RREF rows, linearly independent

  static Subspace zero(int ambient, FieldSpec fs) {
    return {ambient, fs, Mat<K>(0, ambient, fs)};
  }
  static Subspace full(int ambient, FieldSpec fs) {
    return {ambient, fs, Mat<K>::identity(ambient, fs)};
  }
  static Subspace span_rows(const Mat<K>& rows) {
    return {rows.cols, rows.field, rref(rows).mat};
  }
  static Subspace from_builder(SpanBuilder<K>& sb, FieldSpec fs) {
    return {sb.ambient(), fs, sb.basis()};
  }

  int dim() const { return basis.rows; }

  std::vector<K> reduce(std::vector<K> v) const {
    for (int r = 0; r < basis.rows; ++r) {
      int p = pivot_col(r);
      if (v[p].is_zero()) continue;
      K f = -v[p];
      axpy(v, f, basis.row(r));
    }
    return v;
  }

  bool contains(const std::vector<K>& v) const {
    return is_zero_vec(reduce(v));
  }
  bool contains(const Subspace& o) const {
    for (int r = 0; r < o.basis.rows; ++r)
      if (!contains(o.basis.row(r))) return false;
    return true;
  }

  // coordinates of v in the basis rows, if v lies in the subspace
  std::optional<std::vector<K>> coords_of(const std::vector<K>& v) const {
    std::vector<K> c(basis.rows);
    std::vector<K> w = v;
    for (int r = 0; r < basis.rows; ++r) {
      int p = pivot_col(r);
      c[r] = w[p];
      if (!w[p].is_zero()) axpy(w, -c[r], basis.row(r));
    }
    if (!is_zero_vec(w)) return std::nullopt;
    return c;
  }

  Subspace sum(const Subspace& o) const {
    SpanBuilder<K> sb(ambient, field);
    for (int r = 0; r < basis.rows; ++r) sb.add(basis.row(r));
    for (int r = 0; r < o.basis.rows; ++r) sb.add(o.basis.row(r));
    return from_builder(sb, field);
  }

  Subspace intersect(const Subspace& o) const {
    // kernel of (u, v) |-> u A - v B gives the common combinations
    int k1 = dim(), k2 = o.dim();
    Mat<K> m(ambient, k1 + k2, field);
    for (int r = 0; r < k1; ++r)
      for (int j = 0; j < ambient; ++j) m.at(j, r) = basis.at(r, j);
    for (int r = 0; r < k2; ++r)
      for (int j = 0; j < ambient; ++j) m.at(j, k1 + r) = -o.basis.at(r, j);
    Mat<K> ker = nullspace(m);
    SpanBuilder<K> sb(ambient, field);
    for (int r = 0; r < ker.rows; ++r) {
      std::vector<K> v(ambient);
      for (int i = 0; i < k1; ++i) axpy(v, ker.at(r, i), basis.row(i));
      sb.add(std::move(v));
    }
    return from_builder(sb, field);
  }

  bool operator==(const Subspace& o) const {
    return ambient == o.ambient && basis == o.basis;
  }

 private:
  int pivot_col(int r) const {
    for (int j = 0; j < ambient; ++j)
      if (!basis.at(r, j).is_zero()) return j;
    throw error("zero row in subspace basis");
  }
};

template <ScalarType K>
struct QuotientSpace {
  int ambient = 0;
  FieldSpec field;
  Subspace<K> relations;
  int dim = 0;

  static QuotientSpace full(int n, FieldSpec fs) {
    QuotientSpace q;
    q.ambient = n;
    q.field = fs;
    q.relations = Subspace<K>::zero(n, fs);
    q.dim = n;
    return q;
  }

  static QuotientSpace make(int ambient, Subspace<K> rel) {
    if (rel.ambient != ambient) throw error("quotient: ambient mismatch");
    QuotientSpace q;
    q.ambient = ambient;
    q.field = rel.field;
    q.relations = std::move(rel);
    q.dim = ambient - q.relations.dim();
    if (!q.is_full()) {
      std::vector<bool> is_pivot(ambient, false);
      for (int r = 0; r < q.relations.dim(); ++r) {
        int p = 0;
        while (q.relations.basis.at(r, p).is_zero()) ++p;
        is_pivot[p] = true;
        q.pivot_cols_.push_back(p);
      }
      for (int j = 0; j < ambient; ++j)
        if (!is_pivot[j]) q.free_cols_.push_back(j);
    }
    return q;
  }

  bool is_full() const { return relations.dim() == 0; }

  // ambient -> quotient coordinates
  std::vector<K> project(std::vector<K> v) const {
    if (is_full()) return v;
    v = relations.reduce(std::move(v));
    std::vector<K> q(dim);
    for (int t = 0; t < dim; ++t) q[t] = v[free_cols_[t]];
    return q;
  }

  // quotient -> ambient representative (non-pivot coordinates, increasing)
  std::vector<K> section(const std::vector<K>& q) const {
    if (is_full()) return q;
    std::vector<K> v(ambient);
    for (int t = 0; t < dim; ++t) v[free_cols_[t]] = q[t];
    return v;
  }

  Mat<K> projection_matrix() const {
    if (is_full()) return Mat<K>::identity(ambient, field);
    Mat<K> p(dim, ambient, field);
    for (int t = 0; t < dim; ++t) {
      p.at(t, free_cols_[t]) = scalar_of<K>(field, 1);
      for (int r = 0; r < relations.dim(); ++r)
        p.at(t, pivot_cols_[r]) = -relations.basis.at(r, free_cols_[t]);
    }
    return p;
  }

  Mat<K> section_matrix() const {
    if (is_full()) return Mat<K>::identity(ambient, field);
    Mat<K> s(ambient, dim, field);
    for (int t = 0; t < dim; ++t)
      s.at(free_cols_[t], t) = scalar_of<K>(field, 1);
    return s;
  }

  // P * (f : ambient matrix with cols = dim of some source) applied columnwise
  Mat<K> project_mat(const Mat<K>& m) const {
    if (is_full()) return m;
    Mat<K> r(dim, m.cols, field);
    for (int j = 0; j < m.cols; ++j) {
      auto q = project(m.col(j));
      for (int i = 0; i < dim; ++i) r.at(i, j) = q[i];
    }
    return r;
  }

  bool same_presentation(const QuotientSpace& o) const {
    return ambient == o.ambient && relations == o.relations;
  }

 private:
  std::vector<int> free_cols_;
  std::vector<int> pivot_cols_;
};

template <ScalarType K>
struct LinearMap {
  QuotientSpace<K> dom, cod;
  Mat<K> mat;  // cod.dim x dom.dim, quotient coordinates

  static LinearMap identity(const QuotientSpace<K>& q) {
    return {q, q, Mat<K>::identity(q.dim, q.field)};
  }
  static LinearMap zero(const QuotientSpace<K>& d, const QuotientSpace<K>& c) {
    return {d, c, Mat<K>(c.dim, d.dim, d.field)};
  }

  std::vector<K> apply(const std::vector<K>& v) const { return mat.apply(v); }
};

template <ScalarType K>
LinearMap<K> compose(const LinearMap<K>& g, const LinearMap<K>& f) {
  if (!f.cod.same_presentation(g.dom))
    throw error("compose: middle spaces differ");
  return {f.dom, g.cod, g.mat * f.mat};
}

template <ScalarType K>
Subspace<K> kernel(const LinearMap<K>& f) {
  return {f.dom.dim, f.dom.field, nullspace(f.mat)};
}

template <ScalarType K>
Subspace<K> image(const LinearMap<K>& f) {
  return Subspace<K>::span_rows(f.mat.transpose());
}

template <ScalarType K>
QuotientSpace<K> quotient(int ambient_dim, const Subspace<K>& relations) {
  if (relations.ambient != ambient_dim)
    throw error("quotient: dimension mismatch");
  return QuotientSpace<K>::make(ambient_dim, relations);
}

// Map induced on quotients by an ambient-level matrix.  Fails with
// not_well_defined when f does not carry dom relations into cod relations.
template <ScalarType K>
LinearMap<K> induced_map(const Mat<K>& f_ambient, const QuotientSpace<K>& dom,
                         const QuotientSpace<K>& cod,
                         const std::string& what = "induced map") {
  if (f_ambient.cols != dom.ambient || f_ambient.rows != cod.ambient)
    throw error(what + ": ambient shape mismatch");
  for (int r = 0; r < dom.relations.dim(); ++r) {
    auto img = f_ambient.apply(dom.relations.basis.row(r));
    if (!cod.relations.contains(img))
      throw not_well_defined(what + ": relations are not preserved");
  }
  // matrix = P_cod . f . S_dom
  Mat<K> m(cod.dim, dom.dim, dom.field);
  for (int t = 0; t < dom.dim; ++t) {
    std::vector<K> e(dom.dim);
    e[t] = scalar_of<K>(dom.field, 1);
    auto img = cod.project(f_ambient.apply(dom.section(e)));
    for (int i = 0; i < cod.dim; ++i) m.at(i, t) = img[i];
  }
  return {dom, cod, m};
}

// Exactness at interior nodes of a composable chain of maps.
template <ScalarType K>
std::vector<SequenceNode> exactness_nodes(
    const std::vector<LinearMap<K>>& seq,
    const std::vector<std::string>& labels = {}) {
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (!seq[i].cod.same_presentation(seq[i + 1].dom))
      throw error("check_exact: sequence is not composable");
  std::vector<SequenceNode> nodes;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    SequenceNode n;
    n.label = i < labels.size() ? labels[i] : "node " + std::to_string(i + 1);
    auto im = image(seq[i]);
    auto ker = kernel(seq[i + 1]);
    n.dim_image_in = im.dim();
    n.dim_kernel_out = ker.dim();
    n.exact = (im == ker);
    n.composite_zero = (seq[i + 1].mat * seq[i].mat).is_zero();
    nodes.push_back(std::move(n));
  }
  return nodes;
}

template <ScalarType K>
SequenceReport check_exact(const std::vector<LinearMap<K>>& seq,
                           const std::string& name = "sequence",
                           const std::vector<std::string>& labels = {}) {
  SequenceReport rep;
  rep.name = name;
  rep.absorb_nodes(exactness_nodes(seq, labels));
  return rep;
}

// Two rows connected by vertical maps alpha, beta, gamma:
//
//        A1 --tl--> A2 --tr--> A3 --> 0     (exact at A2, tr onto)
//        |alpha     |beta      |gamma
//        v          v          v
//   0 -> B1 --bl--> B2 --br--> B3          (exact, bl injective)
template <ScalarType K>
struct SnakeLadder {
  LinearMap<K> top_left, top_right;
  LinearMap<K> bot_left, bot_right;
  LinearMap<K> alpha, beta, gamma;
};

template <ScalarType K>
struct SnakeResult {
  Subspace<K> ker_gamma;        // subspace of A3 coordinates
  QuotientSpace<K> coker_alpha; // B1 coordinates modulo image of alpha
  Mat<K> connecting;            // coker_alpha.dim x ker_gamma.dim()
};

// The connecting map ker(gamma) -> coker(alpha), computed through explicit
// preimage choices and re-derived under a second deterministic choice rule;
// a mismatch would mean the exactness hypotheses fail.
template <ScalarType K>
SnakeResult<K> snake_connecting(const SnakeLadder<K>& l) {
  const FieldSpec fs = l.beta.dom.field;
  // commuting squares
  if (!(compose(l.beta, l.top_left).mat == compose(l.bot_left, l.alpha).mat))
    throw non_commuting_square("snake: left square does not commute");
  if (!(compose(l.gamma, l.top_right).mat == compose(l.bot_right, l.beta).mat))
    throw non_commuting_square("snake: right square does not commute");
  // row hypotheses
  if (kernel(l.bot_left).dim() != 0)
    throw exactness_prereq_failed("snake: bottom-left map is not injective");
  if (!(image(l.bot_left) == kernel(l.bot_right)))
    throw exactness_prereq_failed("snake: bottom row is not exact");
  if (!(image(l.top_left) == kernel(l.top_right)))
    throw exactness_prereq_failed("snake: top row is not exact at the middle");
  if (image(l.top_right).dim() != l.top_right.cod.dim)
    throw exactness_prereq_failed("snake: top-right map is not surjective");

  SnakeResult<K> res;
  res.ker_gamma = kernel(l.gamma);
  res.coker_alpha =
      QuotientSpace<K>::make(l.alpha.cod.dim, image(l.alpha));
  const int k = res.ker_gamma.dim();
  res.connecting = Mat<K>(res.coker_alpha.dim, k, fs);

  auto chase = [&](const std::vector<K>& v, bool alt) -> std::vector<K> {
    auto u = solve(l.top_right.mat, v, alt);
    if (!u) throw exactness_prereq_failed("snake: no preimage in A2");
    auto w = l.beta.apply(*u);
    auto z = solve(l.bot_left.mat, w, alt);
    if (!z) throw exactness_prereq_failed("snake: chase left B1 preimage");
    return res.coker_alpha.project(*z);
  };

  for (int t = 0; t < k; ++t) {
    auto v = res.ker_gamma.basis.row(t);
    auto d1 = chase(v, false);
    auto d2 = chase(v, true);
    if (d1 != d2)
      throw exactness_prereq_failed(
          "snake: connecting map depends on the preimage choice");
    for (int i = 0; i < res.coker_alpha.dim; ++i)
      res.connecting.at(i, t) = d1[i];
  }
  return res;
}

}  // namespace leibniz
