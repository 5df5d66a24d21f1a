#pragma once

// The non-abelian tensor product m * n of a crossed-module pair, the central
// square subspace, the exterior product, theta maps, the delta comparison
// with the bullet square, and the Lie-algebra tensor/exterior squares.
//
// Generators live in the ambient space (m (x) n) (+) (n (x) m); the first
// block encodes symbols m*n, the second block symbols n*m.  Relation families
// are instanced over basis tuples (each family is multilinear), iterated in
// lexicographic order.  The bracket on generators is
//
//     [s, t] = tau_m(s) * tau_n(t)
//
// placed in the first block; the outer equalities of the compatibility
// relations make this consistent, and descent to the quotient is verified
// rather than assumed.

#include <leibniz/crossed.hpp>
#include <leibniz/homology.hpp>

#include <memory>

namespace leibniz {

template <ScalarType K>
struct NonAbelianProduct {
  enum class Kind { tensor, exterior };

  Kind kind = Kind::tensor;
  CrossedModule<K> cm_m, cm_n;
  int dm = 0, dn = 0;
  QuotientSpace<K> space;
  std::vector<K> bracket;   // quotient-coordinate structure tensor
  LinearMap<K> tau_m, tau_n;
  std::shared_ptr<const NonAbelianProduct> parent;  // set on exterior kind
  LinearMap<K> pi;                                  // tensor -> exterior

  int ambient_dim() const { return 2 * dm * dn; }
  int idx1(int i, int j) const { return i * dn + j; }            // m_i * n_j
  int idx2(int j, int i) const { return dm * dn + j * dm + i; }  // n_j * m_i

  std::string symbol_name(int amb) const {
    const char* op = kind == Kind::tensor ? "*" : "^";
    if (amb < dm * dn)
      return cm_m.m().labels[amb / dn] + op + cm_n.m().labels[amb % dn];
    amb -= dm * dn;
    return cm_n.m().labels[amb / dm] + op + cm_m.m().labels[amb % dm];
  }

  const K& bracket_entry(int s, int t, int k) const {
    return bracket[(static_cast<std::size_t>(s) * space.dim + t) * space.dim +
                   k];
  }

  std::vector<K> bracket_apply(const std::vector<K>& u,
                               const std::vector<K>& v) const {
    std::vector<K> r(space.dim);
    for (int s = 0; s < space.dim; ++s) {
      if (u[s].is_zero()) continue;
      for (int t = 0; t < space.dim; ++t) {
        if (v[t].is_zero()) continue;
        K f = u[s] * v[t];
        for (int k = 0; k < space.dim; ++k) {
          if (bracket_entry(s, t, k).is_zero()) continue;
          r[k] += f * bracket_entry(s, t, k);
        }
      }
    }
    return r;
  }

  // the product as a Leibniz algebra in its own right (validates the
  // Leibniz identity of the bracket)
  LeibnizAlgebra<K> as_algebra() const {
    std::vector<std::string> names;
    for (int t = 0; t < space.dim; ++t) names.push_back("w" + std::to_string(t + 1));
    return LeibnizAlgebra<K>(space.field, space.dim, bracket, names);
  }
};

namespace detail {

// mutual actions of m and n derived through eta and mu
template <ScalarType K>
struct MutualActions {
  int dm, dn;
  // vectors indexed [i][j]
  std::vector<std::vector<K>> mn_left;   // ^{m_i} n_j   in n coords
  std::vector<std::vector<K>> mn_right;  // n_j ^ {m_i}  in n coords (index j*dm+i)
  std::vector<std::vector<K>> nm_left;   // ^{n_j} m_i   in m coords (index j*dm+i)
  std::vector<std::vector<K>> nm_right;  // m_i ^ {n_j}  in m coords (index i*dn+j)

  MutualActions(const CrossedModule<K>& cm_m, const CrossedModule<K>& cm_n) {
    dm = cm_m.m().dim;
    dn = cm_n.m().dim;
    const FieldSpec fs = cm_m.m().field;
    auto unit = [&](int n, int i) {
      std::vector<K> v(n);
      v[i] = scalar_of<K>(fs, 1);
      return v;
    };
    mn_left.resize(static_cast<std::size_t>(dm) * dn);
    mn_right.resize(static_cast<std::size_t>(dn) * dm);
    nm_left.resize(static_cast<std::size_t>(dn) * dm);
    nm_right.resize(static_cast<std::size_t>(dm) * dn);
    for (int i = 0; i < dm; ++i) {
      auto gi = cm_m.eta.mat.col(i);
      for (int j = 0; j < dn; ++j) {
        mn_left[static_cast<std::size_t>(i) * dn + j] =
            cm_n.action.act_left(gi, unit(dn, j));
        mn_right[static_cast<std::size_t>(j) * dm + i] =
            cm_n.action.act_right(unit(dn, j), gi);
      }
    }
    for (int j = 0; j < dn; ++j) {
      auto gj = cm_n.eta.mat.col(j);
      for (int i = 0; i < dm; ++i) {
        nm_left[static_cast<std::size_t>(j) * dm + i] =
            cm_m.action.act_left(gj, unit(dm, i));
        nm_right[static_cast<std::size_t>(i) * dn + j] =
            cm_m.action.act_right(unit(dm, i), gj);
      }
    }
  }

  const std::vector<K>& mnl(int i, int j) const {
    return mn_left[static_cast<std::size_t>(i) * dn + j];
  }
  const std::vector<K>& mnr(int j, int i) const {
    return mn_right[static_cast<std::size_t>(j) * dm + i];
  }
  const std::vector<K>& nml(int j, int i) const {
    return nm_left[static_cast<std::size_t>(j) * dm + i];
  }
  const std::vector<K>& nmr(int i, int j) const {
    return nm_right[static_cast<std::size_t>(i) * dn + j];
  }
};

}  // namespace detail

template <ScalarType K>
void finish_product(NonAbelianProduct<K>& P, const Mat<K>& tau_m_amb,
                    const Mat<K>& tau_n_amb);

template <ScalarType K>
NonAbelianProduct<K> tensor_product(const CrossedModule<K>& cm_m,
                                    const CrossedModule<K>& cm_n) {
  if (!cm_m.g().same_structure(cm_n.g()))
    throw error("tensor product: crossed modules target different algebras");
  const auto& M = cm_m.m();
  const auto& N = cm_n.m();
  const int dm = M.dim, dn = N.dim;
  const FieldSpec fs = M.field;
  const int amb = 2 * dm * dn;
  detail::MutualActions<K> act(cm_m, cm_n);

  NonAbelianProduct<K> P;
  P.kind = NonAbelianProduct<K>::Kind::tensor;
  P.cm_m = cm_m;
  P.cm_n = cm_n;
  P.dm = dm;
  P.dn = dn;

  auto add1 = [&](std::vector<K>& row, const std::vector<K>& mv,
                  const std::vector<K>& nv, long coef) {
    K c = scalar_of<K>(fs, coef);
    for (int i = 0; i < dm; ++i) {
      if (mv[i].is_zero()) continue;
      for (int j = 0; j < dn; ++j) {
        if (nv[j].is_zero()) continue;
        row[P.idx1(i, j)] += c * mv[i] * nv[j];
      }
    }
  };
  auto add2 = [&](std::vector<K>& row, const std::vector<K>& nv,
                  const std::vector<K>& mv, long coef) {
    K c = scalar_of<K>(fs, coef);
    for (int j = 0; j < dn; ++j) {
      if (nv[j].is_zero()) continue;
      for (int i = 0; i < dm; ++i) {
        if (mv[i].is_zero()) continue;
        row[P.idx2(j, i)] += c * nv[j] * mv[i];
      }
    }
  };
  auto unit = [&](int n, int i) {
    std::vector<K> v(n);
    v[i] = scalar_of<K>(fs, 1);
    return v;
  };

  SpanBuilder<K> rel(amb, fs);
  auto push = [&](std::vector<K>&& row) { rel.add(std::move(row)); };

  // (3a) m*[n,n'] = m^n*n' - m^{n'}*n
  for (int i = 0; i < dm; ++i)
    for (int j = 0; j < dn; ++j)
      for (int k = 0; k < dn; ++k) {
        std::vector<K> row(amb);
        add1(row, unit(dm, i), N.bracket_basis(j, k), 1);
        add1(row, act.nmr(i, j), unit(dn, k), -1);
        add1(row, act.nmr(i, k), unit(dn, j), 1);
        push(std::move(row));
      }
  // (3b) n*[m,m'] = n^m*m' - n^{m'}*m
  for (int j = 0; j < dn; ++j)
    for (int i = 0; i < dm; ++i)
      for (int k = 0; k < dm; ++k) {
        std::vector<K> row(amb);
        add2(row, unit(dn, j), M.bracket_basis(i, k), 1);
        add2(row, act.mnr(j, i), unit(dm, k), -1);
        add2(row, act.mnr(j, k), unit(dm, i), 1);
        push(std::move(row));
      }
  // (3c) [m,m']*n = ^m n*m' - m*n^{m'}
  for (int i = 0; i < dm; ++i)
    for (int k = 0; k < dm; ++k)
      for (int j = 0; j < dn; ++j) {
        std::vector<K> row(amb);
        add1(row, M.bracket_basis(i, k), unit(dn, j), 1);
        add2(row, act.mnl(i, j), unit(dm, k), -1);
        add1(row, unit(dm, i), act.mnr(j, k), 1);
        push(std::move(row));
      }
  // (3d) [n,n']*m = ^n m*n' - n*m^{n'}
  for (int j = 0; j < dn; ++j)
    for (int k = 0; k < dn; ++k)
      for (int i = 0; i < dm; ++i) {
        std::vector<K> row(amb);
        add2(row, N.bracket_basis(j, k), unit(dm, i), 1);
        add1(row, act.nml(j, i), unit(dn, k), -1);
        add2(row, unit(dn, j), act.nmr(i, k), 1);
        push(std::move(row));
      }
  // (4a) m*^{m'}n = -m*n^{m'}
  for (int i = 0; i < dm; ++i)
    for (int k = 0; k < dm; ++k)
      for (int j = 0; j < dn; ++j) {
        std::vector<K> row(amb);
        add1(row, unit(dm, i), act.mnl(k, j), 1);
        add1(row, unit(dm, i), act.mnr(j, k), 1);
        push(std::move(row));
      }
  // (4b) n*^{n'}m = -n*m^{n'}
  for (int j = 0; j < dn; ++j)
    for (int k = 0; k < dn; ++k)
      for (int i = 0; i < dm; ++i) {
        std::vector<K> row(amb);
        add2(row, unit(dn, j), act.nml(k, i), 1);
        add2(row, unit(dn, j), act.nmr(i, k), 1);
        push(std::move(row));
      }
  // (5a)-(5d): outer equalities of the compatibility relations
  for (int i = 0; i < dm; ++i)
    for (int j = 0; j < dn; ++j)
      for (int k = 0; k < dm; ++k)
        for (int l = 0; l < dn; ++l) {
          {  // (5a) m^n * ^{m'}n' = ^m n * m'^{n'}
            std::vector<K> row(amb);
            add1(row, act.nmr(i, j), act.mnl(k, l), 1);
            add2(row, act.mnl(i, j), act.nmr(k, l), -1);
            push(std::move(row));
          }
          {  // (5b) ^n m * n'^{m'} = n^m * ^{n'}m'
            std::vector<K> row(amb);
            add1(row, act.nml(j, i), act.mnr(l, k), 1);
            add2(row, act.mnr(j, i), act.nml(l, k), -1);
            push(std::move(row));
          }
          {  // (5c) m^n * n'^{m'} = ^m n * ^{n'}m'
            std::vector<K> row(amb);
            add1(row, act.nmr(i, j), act.mnr(l, k), 1);
            add2(row, act.mnl(i, j), act.nml(l, k), -1);
            push(std::move(row));
          }
          {  // (5d) ^n m * ^{m'}n' = n^m * m'^{n'}
            std::vector<K> row(amb);
            add1(row, act.nml(j, i), act.mnl(k, l), 1);
            add2(row, act.mnr(j, i), act.nmr(k, l), -1);
            push(std::move(row));
          }
        }

  P.space = QuotientSpace<K>::make(amb, Subspace<K>::from_builder(rel, fs));

  // tau maps on the ambient: tau_m(m*n) = m^n, tau_m(n*m) = ^n m, and
  // symmetrically for tau_n
  Mat<K> tm(dm, amb, fs), tn(dn, amb, fs);
  for (int i = 0; i < dm; ++i)
    for (int j = 0; j < dn; ++j) {
      const auto& a = act.nmr(i, j);
      const auto& b = act.mnl(i, j);
      for (int k = 0; k < dm; ++k) tm.at(k, P.idx1(i, j)) = a[k];
      for (int k = 0; k < dn; ++k) tn.at(k, P.idx1(i, j)) = b[k];
      const auto& c = act.nml(j, i);
      const auto& d = act.mnr(j, i);
      for (int k = 0; k < dm; ++k) tm.at(k, P.idx2(j, i)) = c[k];
      for (int k = 0; k < dn; ++k) tn.at(k, P.idx2(j, i)) = d[k];
    }

  finish_product(P, tm, tn);
  return P;
}

// shared tail of the tensor/exterior builders: bracket tensor with descent
// checks, and the tau maps
template <ScalarType K>
void finish_product(NonAbelianProduct<K>& P, const Mat<K>& tau_m_amb,
                    const Mat<K>& tau_n_amb) {
  const FieldSpec fs = P.space.field;
  const int amb = P.ambient_dim();
  const int q = P.space.dim;

  // ambient bracket [u, v] = block1[ tau_m(u) (x) tau_n(v) ]
  auto bracket_amb = [&](const std::vector<K>& u, const std::vector<K>& v) {
    auto um = tau_m_amb.apply(u);
    auto vn = tau_n_amb.apply(v);
    std::vector<K> w(amb);
    for (int i = 0; i < P.dm; ++i) {
      if (um[i].is_zero()) continue;
      for (int j = 0; j < P.dn; ++j) {
        if (vn[j].is_zero()) continue;
        w[P.idx1(i, j)] = um[i] * vn[j];
      }
    }
    return w;
  };

  // descent: bracketing a relation with any generator stays in the relations
  const auto& rel = P.space.relations;
  for (int r = 0; r < rel.dim(); ++r) {
    auto rv = rel.basis.row(r);
    for (int s = 0; s < amb; ++s) {
      std::vector<K> e(amb);
      e[s] = scalar_of<K>(fs, 1);
      if (!rel.contains(bracket_amb(rv, e)) ||
          !rel.contains(bracket_amb(e, rv)))
        throw not_well_defined(
            "product bracket does not descend; invalid crossed module input");
    }
  }

  P.bracket.assign(static_cast<std::size_t>(q) * q * q, K());
  for (int s = 0; s < q; ++s) {
    std::vector<K> es(q);
    es[s] = scalar_of<K>(fs, 1);
    auto us = P.space.section(es);
    for (int t = 0; t < q; ++t) {
      std::vector<K> et(q);
      et[t] = scalar_of<K>(fs, 1);
      auto w = P.space.project(bracket_amb(us, P.space.section(et)));
      for (int k = 0; k < q; ++k)
        P.bracket[(static_cast<std::size_t>(s) * q + t) * q + k] = w[k];
    }
  }

  P.tau_m = induced_map(tau_m_amb, P.space,
                        QuotientSpace<K>::full(P.dm, fs), "tau_m");
  P.tau_n = induced_map(tau_n_amb, P.space,
                        QuotientSpace<K>::full(P.dn, fs), "tau_n");
}

template <ScalarType K>
struct SquareSubspace {
  Subspace<K> ambient_span;  // generators inside the tensor ambient
  Subspace<K> in_quotient;   // projected into tensor-product coordinates
};

// m [] n: spanned by m*n' - n*m' over basis pairs of the pullback
// { (m, n) : eta(m) = mu(n) }.  Centrality in m * n is verified.
template <ScalarType K>
SquareSubspace<K> square_subspace(const NonAbelianProduct<K>& T) {
  if (T.kind != NonAbelianProduct<K>::Kind::tensor)
    throw error("square subspace is built from a tensor product");
  const FieldSpec fs = T.space.field;
  auto pb = pullback(T.cm_m, T.cm_n);
  const int dm = T.dm, dn = T.dn, amb = T.ambient_dim();

  SpanBuilder<K> span(amb, fs);
  SpanBuilder<K> qspan(T.space.dim, fs);
  for (int r = 0; r < pb.space.dim(); ++r)
    for (int s = 0; s < pb.space.dim(); ++s) {
      auto pr = pb.space.basis.row(r);
      auto ps = pb.space.basis.row(s);
      // pr = (m, n), ps = (m', n'); generator m*n' - n*m'
      std::vector<K> row(amb);
      for (int i = 0; i < dm; ++i) {
        if (pr[i].is_zero()) continue;
        for (int j = 0; j < dn; ++j) {
          if (ps[dm + j].is_zero()) continue;
          row[T.idx1(i, j)] += pr[i] * ps[dm + j];
        }
      }
      for (int j = 0; j < dn; ++j) {
        if (pr[dm + j].is_zero()) continue;
        for (int i = 0; i < dm; ++i) {
          if (ps[i].is_zero()) continue;
          row[T.idx2(j, i)] -= pr[dm + j] * ps[i];
        }
      }
      qspan.add(T.space.project(row));
      span.add(std::move(row));
    }

  SquareSubspace<K> sq{Subspace<K>::from_builder(span, fs),
                       Subspace<K>::from_builder(qspan, fs)};

  // contained in the center of the tensor product
  for (int r = 0; r < sq.in_quotient.dim(); ++r) {
    auto v = sq.in_quotient.basis.row(r);
    for (int t = 0; t < T.space.dim; ++t) {
      std::vector<K> e(T.space.dim);
      e[t] = scalar_of<K>(fs, 1);
      if (!is_zero_vec(T.bracket_apply(v, e)) ||
          !is_zero_vec(T.bracket_apply(e, v)))
        throw error("square subspace is not central in the tensor product");
    }
  }
  return sq;
}

// m /\ n = (m * n) / (m [] n), with the projection pi recorded.
template <ScalarType K>
NonAbelianProduct<K> exterior_product(const CrossedModule<K>& cm_m,
                                      const CrossedModule<K>& cm_n) {
  auto T = std::make_shared<NonAbelianProduct<K>>(tensor_product(cm_m, cm_n));
  auto sq = square_subspace(*T);
  const FieldSpec fs = T->space.field;
  const int amb = T->ambient_dim();

  NonAbelianProduct<K> E;
  E.kind = NonAbelianProduct<K>::Kind::exterior;
  E.cm_m = cm_m;
  E.cm_n = cm_n;
  E.dm = T->dm;
  E.dn = T->dn;
  E.space = QuotientSpace<K>::make(
      amb, T->space.relations.sum(sq.ambient_span));

  // same ambient tau maps as the tensor product
  Mat<K> tm(E.dm, amb, fs), tn(E.dn, amb, fs);
  for (int t = 0; t < amb; ++t) {
    std::vector<K> e(amb);
    e[t] = scalar_of<K>(fs, 1);
    auto um = T->tau_m.mat.apply(T->space.project(e));
    auto un = T->tau_n.mat.apply(T->space.project(e));
    for (int k = 0; k < E.dm; ++k) tm.at(k, t) = um[k];
    for (int k = 0; k < E.dn; ++k) tn.at(k, t) = un[k];
  }
  finish_product(E, tm, tn);
  E.parent = T;
  E.pi = induced_map(Mat<K>::identity(amb, fs), T->space, E.space, "pi");
  return E;
}

// ideals wrapped as inclusion crossed modules, the intersection algebra, and
// theta : a /\ b -> a (cap) b on generators a ^ b -> [a, b]
template <ScalarType K>
struct ThetaData {
  NonAbelianProduct<K> wedge;   // a /\ b
  LeibnizAlgebra<K> inter;      // a cap b, as an algebra
  Mat<K> inter_embed;           // its basis inside g
  LinearMap<K> theta;
};

template <ScalarType K>
ThetaData<K> theta_map(const LeibnizAlgebra<K>& g, const Ideal<K>& a,
                       const Ideal<K>& b) {
  auto cma = inclusion_crossed_module(g, a);
  auto cmb = inclusion_crossed_module(g, b);
  auto wedge = exterior_product(cma, cmb);

  auto inter_space = a.space.intersect(b.space);
  auto [inter, emb] = subalgebra_on(g, inter_space, "intersection");

  const FieldSpec fs = g.field;
  const int amb = wedge.ambient_dim();
  Mat<K> th(inter.dim, amb, fs);
  for (int i = 0; i < wedge.dm; ++i)
    for (int j = 0; j < wedge.dn; ++j) {
      auto lb = inter_space.coords_of(
          g.bracket(a.space.basis.row(i), b.space.basis.row(j)));
      auto rb = inter_space.coords_of(
          g.bracket(b.space.basis.row(j), a.space.basis.row(i)));
      if (!lb || !rb)
        throw error("theta: bracket leaves the intersection of the ideals");
      for (int k = 0; k < inter.dim; ++k) {
        th.at(k, wedge.idx1(i, j)) = (*lb)[k];
        th.at(k, wedge.idx2(j, i)) = (*rb)[k];
      }
    }
  auto theta = induced_map(th, wedge.space,
                           QuotientSpace<K>::full(inter.dim, fs), "theta");

  // algebra morphism: theta([u,v]) = [theta u, theta v] on basis pairs
  for (int s = 0; s < wedge.space.dim; ++s)
    for (int t = 0; t < wedge.space.dim; ++t) {
      std::vector<K> es(wedge.space.dim), et(wedge.space.dim);
      es[s] = scalar_of<K>(fs, 1);
      et[t] = scalar_of<K>(fs, 1);
      auto lhs = theta.apply(wedge.bracket_apply(es, et));
      auto rhs = inter.bracket(theta.apply(es), theta.apply(et));
      if (lhs != rhs) throw error("theta is not an algebra morphism");
    }
  // the image is an ideal of the intersection
  Ideal<K>(inter, image(theta));

  return {std::move(wedge), std::move(inter), emb.mat, std::move(theta)};
}

template <ScalarType K>
struct DeltaIso {
  BulletSquare<K> bullet;
  NonAbelianProduct<K> wedge;  // g /\ g for the identity crossed modules
  LinearMap<K> delta;          // bullet -> wedge, x . y -> x ^ y
};

template <ScalarType K>
DeltaIso<K> delta_iso(const LeibnizAlgebra<K>& g,
                      const HomologyOptions& opts = {}) {
  DeltaIso<K> d{bullet_square(g, opts),
                exterior_product(identity_crossed_module(g),
                                 identity_crossed_module(g)),
                {}};
  const int n = g.dim;
  Mat<K> block1(d.wedge.ambient_dim(), n * n, g.field);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      block1.at(d.wedge.idx1(i, j), i * n + j) = scalar_of<K>(g.field, 1);
  d.delta = induced_map(block1, d.bullet.space, d.wedge.space, "delta");
  if (d.bullet.space.dim != d.wedge.space.dim ||
      rank_of(d.delta.mat) != d.bullet.space.dim)
    throw error("delta failed to be an isomorphism");
  return d;
}

// --- Lie-algebra squares ----------------------------------------------------

template <ScalarType K>
struct LieSquare {
  bool exterior = false;
  QuotientSpace<K> space;  // over g (x) g
  std::vector<K> bracket;  // [x(x)y, x'(x)y'] = [x,y] (x) [x',y']
  LinearMap<K> to_g;       // x (x) y -> [x, y]
};

template <ScalarType K>
LieSquare<K> lie_square(const LeibnizAlgebra<K>& g, bool exterior) {
  if (!is_lie(g)) throw error("Lie square needs a Lie algebra");
  const int n = g.dim;
  const FieldSpec fs = g.field;
  SpanBuilder<K> rel(n * n, fs);
  auto add = [&](std::vector<K>& row, const std::vector<K>& u,
                 const std::vector<K>& v, long coef) {
    K c = scalar_of<K>(fs, coef);
    for (int i = 0; i < n; ++i) {
      if (u[i].is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (v[j].is_zero()) continue;
        row[static_cast<std::size_t>(i) * n + j] += c * u[i] * v[j];
      }
    }
  };
  auto unit = [&](int i) {
    std::vector<K> v(n);
    v[i] = scalar_of<K>(fs, 1);
    return v;
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        {  // [x,x'] (x) y = x (x) [x',y] - x' (x) [x,y]
          std::vector<K> row(n * n);
          add(row, g.bracket_basis(x, y), unit(z), 1);
          add(row, unit(x), g.bracket_basis(y, z), -1);
          add(row, unit(y), g.bracket_basis(x, z), 1);
          rel.add(std::move(row));
        }
        {  // x (x) [y,y'] = [x,y] (x) y' - [x,y'] (x) y
          std::vector<K> row(n * n);
          add(row, unit(x), g.bracket_basis(y, z), 1);
          add(row, g.bracket_basis(x, y), unit(z), -1);
          add(row, g.bracket_basis(x, z), unit(y), 1);
          rel.add(std::move(row));
        }
      }
  if (exterior) {
    for (int i = 0; i < n; ++i) {
      std::vector<K> row(n * n);
      row[static_cast<std::size_t>(i) * n + i] = scalar_of<K>(fs, 1);
      rel.add(std::move(row));
      for (int j = i + 1; j < n; ++j) {
        std::vector<K> r2(n * n);
        r2[static_cast<std::size_t>(i) * n + j] = scalar_of<K>(fs, 1);
        r2[static_cast<std::size_t>(j) * n + i] = scalar_of<K>(fs, 1);
        rel.add(std::move(r2));
      }
    }
  }

  LieSquare<K> s;
  s.exterior = exterior;
  s.space = QuotientSpace<K>::make(n * n, Subspace<K>::from_builder(rel, fs));
  auto d2 = loday_boundary(g, 2);

  // bracket [u, v] = d2(u) (x) d2(v); relations die under d2
  const int q = s.space.dim;
  s.bracket.assign(static_cast<std::size_t>(q) * q * q, K());
  for (int a = 0; a < q; ++a) {
    std::vector<K> ea(q);
    ea[a] = scalar_of<K>(fs, 1);
    auto u = d2.apply(s.space.section(ea));
    for (int b = 0; b < q; ++b) {
      std::vector<K> eb(q);
      eb[b] = scalar_of<K>(fs, 1);
      auto v = d2.apply(s.space.section(eb));
      std::vector<K> w(n * n);
      for (int i = 0; i < n; ++i) {
        if (u[i].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
          if (v[j].is_zero()) continue;
          w[static_cast<std::size_t>(i) * n + j] = u[i] * v[j];
        }
      }
      auto pw = s.space.project(w);
      for (int k = 0; k < q; ++k)
        s.bracket[(static_cast<std::size_t>(a) * q + b) * q + k] = pw[k];
    }
  }
  s.to_g = induced_map(d2, s.space, QuotientSpace<K>::full(n, fs),
                       "lie square to g");
  return s;
}

template <ScalarType K>
LieSquare<K> lie_tensor_square(const LeibnizAlgebra<K>& g) {
  return lie_square(g, false);
}
template <ScalarType K>
LieSquare<K> lie_exterior_square(const LeibnizAlgebra<K>& g) {
  return lie_square(g, true);
}

// the natural symbol maps from the Leibniz squares of a Lie algebra onto the
// Ellis squares: i1(x)*i2(y) -> x (x) y and i2(y)*i1(x) -> y (x) x'
template <ScalarType K>
struct LieComparisonMaps {
  NonAbelianProduct<K> star;   // g * g  (identity crossed modules)
  NonAbelianProduct<K> wedge;  // g /\ g
  LieSquare<K> lie_star, lie_wedge;
  LinearMap<K> wedge_to_lie_star;
  LinearMap<K> wedge_to_lie_wedge;
  LinearMap<K> lambda;  // g * g -> lie tensor square
};

template <ScalarType K>
LieComparisonMaps<K> leibniz_to_lie_square_maps(const LeibnizAlgebra<K>& g) {
  if (!is_lie(g)) throw error("Lie comparison needs a Lie algebra");
  auto id = identity_crossed_module(g);
  LieComparisonMaps<K> r{tensor_product(id, id), exterior_product(id, id),
                         lie_tensor_square(g),   lie_exterior_square(g),
                         {},                     {},
                         {}};
  const int n = g.dim;
  Mat<K> sym(n * n, r.star.ambient_dim(), g.field);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      sym.at(i * n + j, r.star.idx1(i, j)) = scalar_of<K>(g.field, 1);
      sym.at(j * n + i, r.star.idx2(j, i)) = scalar_of<K>(g.field, 1);
    }
  r.wedge_to_lie_star =
      induced_map(sym, r.wedge.space, r.lie_star.space, "wedge -> lie star");
  r.wedge_to_lie_wedge =
      induced_map(sym, r.wedge.space, r.lie_wedge.space, "wedge -> lie wedge");
  r.lambda =
      induced_map(sym, r.star.space, r.lie_star.space, "lambda");
  for (const auto* m :
       {&r.wedge_to_lie_star, &r.wedge_to_lie_wedge, &r.lambda})
    if (image(*m).dim() != m->cod.dim)
      throw error("Lie comparison map failed to be surjective");
  return r;
}

}  // namespace leibniz
