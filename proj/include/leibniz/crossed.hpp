#pragma once

// Leibniz actions and crossed modules.  All axioms are multilinear, so they
// are verified on basis instances at construction time.

#include <leibniz/algebra.hpp>

namespace leibniz {

template <ScalarType K>
struct LeibnizAction {
  LeibnizAlgebra<K> actor;  // m
  LeibnizAlgebra<K> actee;  // n
  // left[(i*dn + j)*dn + k]:  ^{m_i} n_j = sum_k left(i,j,k) n_k
  // right[(j*dm + i)*dn + k]: n_j ^ m_i  = sum_k right(j,i,k) n_k
  std::vector<K> left, right;

  LeibnizAction() = default;
  LeibnizAction(LeibnizAlgebra<K> m, LeibnizAlgebra<K> n, std::vector<K> l,
                std::vector<K> r)
      : actor(std::move(m)), actee(std::move(n)), left(std::move(l)),
        right(std::move(r)) {
    const std::size_t dm = actor.dim, dn = actee.dim;
    if (left.size() != dm * dn * dn || right.size() != dn * dm * dn)
      throw error("action tensor shape mismatch");
    verify();
  }

  std::vector<K> left_basis(int i, int j) const {
    const int dn = actee.dim;
    std::vector<K> v(dn);
    for (int k = 0; k < dn; ++k)
      v[k] = left[(static_cast<std::size_t>(i) * dn + j) * dn + k];
    return v;
  }
  std::vector<K> right_basis(int j, int i) const {
    const int dn = actee.dim;
    std::vector<K> v(dn);
    for (int k = 0; k < dn; ++k)
      v[k] = right[(static_cast<std::size_t>(j) * actor.dim + i) * dn + k];
    return v;
  }

  // ^{mv} nv, bilinear
  std::vector<K> act_left(const std::vector<K>& mv,
                          const std::vector<K>& nv) const {
    std::vector<K> r(actee.dim);
    for (int i = 0; i < actor.dim; ++i) {
      if (mv[i].is_zero()) continue;
      for (int j = 0; j < actee.dim; ++j) {
        if (nv[j].is_zero()) continue;
        axpy(r, mv[i] * nv[j], left_basis(i, j));
      }
    }
    return r;
  }

  // nv ^ mv
  std::vector<K> act_right(const std::vector<K>& nv,
                           const std::vector<K>& mv) const {
    std::vector<K> r(actee.dim);
    for (int j = 0; j < actee.dim; ++j) {
      if (nv[j].is_zero()) continue;
      for (int i = 0; i < actor.dim; ++i) {
        if (mv[i].is_zero()) continue;
        axpy(r, nv[j] * mv[i], right_basis(j, i));
      }
    }
    return r;
  }

  // the bracket of m acting on n: the six compatibility axioms
  void verify() const {
    const int dm = actor.dim, dn = actee.dim;
    auto eq = [](const std::vector<K>& a, const std::vector<K>& b) {
      return a == b;
    };
    auto neg = [](std::vector<K> v) {
      for (auto& x : v) x = -x;
      return v;
    };
    for (int i = 0; i < dm; ++i)
      for (int j = 0; j < dm; ++j)
        for (int k = 0; k < dn; ++k) {
          std::vector<K> nk(dn);
          nk[k] = scalar_of<K>(actee.field, 1);
          // ^{[m,m']}n = ^m(^{m'}n) + (^m n)^{m'}
          auto lhs = act_left(actor.bracket_basis(i, j), nk);
          auto rhs = act_left(unit(dm, i), act_left(unit(dm, j), nk));
          axpy(rhs, scalar_of<K>(actee.field, 1),
               act_right(left_basis(i, k), unit(dm, j)));
          if (!eq(lhs, rhs))
            throw invalid_algebra("action axiom ^{[m,m']}n fails");
          // n^{[m,m']} = (n^m)^{m'} - (n^{m'})^m
          lhs = act_right(nk, actor.bracket_basis(i, j));
          rhs = act_right(right_basis(k, i), unit(dm, j));
          axpy(rhs, -scalar_of<K>(actee.field, 1),
               act_right(right_basis(k, j), unit(dm, i)));
          if (!eq(lhs, rhs))
            throw invalid_algebra("action axiom n^{[m,m']} fails");
          // ^m(^{m'}n) = -^m(n^{m'})
          lhs = act_left(unit(dm, i), left_basis(j, k));
          rhs = neg(act_left(unit(dm, i), right_basis(k, j)));
          if (!eq(lhs, rhs))
            throw invalid_algebra("action axiom ^m(^{m'}n) fails");
        }
    for (int i = 0; i < dm; ++i)
      for (int j = 0; j < dn; ++j)
        for (int k = 0; k < dn; ++k) {
          // ^m[n,n'] = [^m n, n'] - [^m n', n]
          auto lhs = act_left(unit(dm, i), actee.bracket_basis(j, k));
          auto rhs = actee.bracket(left_basis(i, j), unit(dn, k));
          axpy(rhs, -scalar_of<K>(actee.field, 1),
               actee.bracket(left_basis(i, k), unit(dn, j)));
          if (!eq(lhs, rhs))
            throw invalid_algebra("action axiom ^m[n,n'] fails");
          // [n,n']^m = [n^m, n'] + [n, n'^m]
          lhs = act_right(actee.bracket_basis(j, k), unit(dm, i));
          rhs = actee.bracket(right_basis(j, i), unit(dn, k));
          axpy(rhs, scalar_of<K>(actee.field, 1),
               actee.bracket(unit(dn, j), right_basis(k, i)));
          if (!eq(lhs, rhs))
            throw invalid_algebra("action axiom [n,n']^m fails");
          // [n, ^m n'] = -[n, n'^m]
          lhs = actee.bracket(unit(dn, j), left_basis(i, k));
          rhs = neg(actee.bracket(unit(dn, j), right_basis(k, i)));
          if (!eq(lhs, rhs))
            throw invalid_algebra("action axiom [n, ^m n'] fails");
        }
  }

 private:
  std::vector<K> unit(int n, int i) const {
    std::vector<K> v(n);
    v[i] = scalar_of<K>(actor.field, 1);
    return v;
  }
};

template <ScalarType K>
struct CrossedModule {
  AlgebraMorphism<K> eta;    // m -> g
  LeibnizAction<K> action;   // g acting on m

  CrossedModule() = default;
  CrossedModule(AlgebraMorphism<K> e, LeibnizAction<K> act)
      : eta(std::move(e)), action(std::move(act)) {
    const auto& m = eta.dom;
    const auto& g = eta.cod;
    if (!action.actor.same_structure(g) || !action.actee.same_structure(m))
      throw error("crossed module: action does not match eta");
    for (int x = 0; x < g.dim; ++x)
      for (int i = 0; i < m.dim; ++i) {
        // eta(^x m) = [x, eta(m)],  eta(m^x) = [eta(m), x]
        auto l = eta.apply(action.left_basis(x, i));
        std::vector<K> ex(g.dim);
        ex[x] = scalar_of<K>(g.field, 1);
        if (l != g.bracket(ex, eta.mat.col(i)))
          throw invalid_algebra("crossed module equivariance (left) fails");
        auto r = eta.apply(action.right_basis(i, x));
        if (r != g.bracket(eta.mat.col(i), ex))
          throw invalid_algebra("crossed module equivariance (right) fails");
      }
    for (int i = 0; i < m.dim; ++i)
      for (int j = 0; j < m.dim; ++j) {
        // ^{eta(m1)}m2 = [m1,m2] = m1^{eta(m2)}
        std::vector<K> mj(m.dim), mi(m.dim);
        mi[i] = scalar_of<K>(m.field, 1);
        mj[j] = scalar_of<K>(m.field, 1);
        auto br = m.bracket_basis(i, j);
        if (action.act_left(eta.mat.col(i), mj) != br ||
            action.act_right(mi, eta.mat.col(j)) != br)
          throw invalid_algebra("crossed module Peiffer identity fails");
      }
  }

  const LeibnizAlgebra<K>& m() const { return eta.dom; }
  const LeibnizAlgebra<K>& g() const { return eta.cod; }
};

// g acting on itself by its bracket; eta the identity.
template <ScalarType K>
CrossedModule<K> identity_crossed_module(const LeibnizAlgebra<K>& g) {
  const int n = g.dim;
  std::vector<K> left(static_cast<std::size_t>(n) * n * n),
      right(static_cast<std::size_t>(n) * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        left[(static_cast<std::size_t>(i) * n + j) * n + k] = g.cijk(i, j, k);
        right[(static_cast<std::size_t>(j) * n + i) * n + k] = g.cijk(j, i, k);
      }
  return CrossedModule<K>(AlgebraMorphism<K>::identity(g),
                          LeibnizAction<K>(g, g, std::move(left),
                                           std::move(right)));
}

// The inclusion a -> g of an ideal, with g acting by the bracket.
template <ScalarType K>
CrossedModule<K> inclusion_crossed_module(const LeibnizAlgebra<K>& g,
                                          const Ideal<K>& a) {
  auto [sub, emb] = subalgebra_on(g, a.space, "ideal");
  const int dm = sub.dim, dg = g.dim;
  std::vector<K> left(static_cast<std::size_t>(dg) * dm * dm),
      right(static_cast<std::size_t>(dm) * dg * dm);
  for (int x = 0; x < dg; ++x)
    for (int i = 0; i < dm; ++i) {
      std::vector<K> ex(dg);
      ex[x] = scalar_of<K>(g.field, 1);
      auto l = a.space.coords_of(g.bracket(ex, emb.mat.col(i)));
      auto r = a.space.coords_of(g.bracket(emb.mat.col(i), ex));
      if (!l || !r) throw invalid_algebra("ideal is not bracket-stable");
      for (int k = 0; k < dm; ++k) {
        left[(static_cast<std::size_t>(x) * dm + i) * dm + k] = (*l)[k];
        right[(static_cast<std::size_t>(i) * dg + x) * dm + k] = (*r)[k];
      }
    }
  return CrossedModule<K>(emb, LeibnizAction<K>(g, sub, std::move(left),
                                                std::move(right)));
}

template <ScalarType K>
struct Pullback {
  LeibnizAlgebra<K> algebra;   // subalgebra of m (+) n
  Subspace<K> space;           // inside K^{dm+dn}
  AlgebraMorphism<K> to_m, to_n;
};

// { (m, n) : eta(m) = mu(n) } with the componentwise bracket.
template <ScalarType K>
Pullback<K> pullback(const CrossedModule<K>& cm1, const CrossedModule<K>& cm2) {
  if (!cm1.g().same_structure(cm2.g()))
    throw error("pullback: crossed modules target different algebras");
  const auto& m = cm1.m();
  const auto& n = cm2.m();
  Mat<K> d(cm1.g().dim, m.dim + n.dim, m.field);
  for (int i = 0; i < cm1.g().dim; ++i) {
    for (int j = 0; j < m.dim; ++j) d.at(i, j) = cm1.eta.mat.at(i, j);
    for (int j = 0; j < n.dim; ++j) d.at(i, m.dim + j) = -cm2.eta.mat.at(i, j);
  }
  Subspace<K> p{m.dim + n.dim, m.field, nullspace(d)};
  auto sum = direct_sum(m, n);
  auto [alg, emb] = subalgebra_on(sum, p, "pullback");
  Mat<K> pm(m.dim, alg.dim, m.field), pn(n.dim, alg.dim, m.field);
  for (int t = 0; t < alg.dim; ++t) {
    for (int i = 0; i < m.dim; ++i) pm.at(i, t) = emb.mat.at(i, t);
    for (int i = 0; i < n.dim; ++i) pn.at(i, t) = emb.mat.at(m.dim + i, t);
  }
  AlgebraMorphism<K> to_m(alg, m, pm), to_n(alg, n, pn);
  return {std::move(alg), std::move(p), std::move(to_m), std::move(to_n)};
}

}  // namespace leibniz
