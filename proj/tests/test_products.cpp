#include <leibniz/products.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace leibniz;

namespace {

const FieldSpec QQ = FieldSpec::rationals();

LeibnizAlgebra<Rational> cyclic2() {
  std::vector<Rational> c(8);
  c[(0 * 2 + 0) * 2 + 1] = Rational(1);
  return LeibnizAlgebra<Rational>(QQ, 2, c);
}

LeibnizAlgebra<Rational> heis3() {
  std::vector<Rational> c(27);
  c[(0 * 3 + 1) * 3 + 2] = Rational(1);
  c[(1 * 3 + 0) * 3 + 2] = Rational(-1);
  return LeibnizAlgebra<Rational>(QQ, 3, c, {"x", "y", "z"});
}

LeibnizAlgebra<Rational> sl2() {
  std::vector<Rational> c(27);
  auto put = [&](int i, int j, int k, long v) {
    c[(static_cast<std::size_t>(i) * 3 + j) * 3 + k] = Rational(v);
  };
  put(0, 1, 1, 2);
  put(1, 0, 1, -2);
  put(0, 2, 2, -2);
  put(2, 0, 2, 2);
  put(1, 2, 0, 1);
  put(2, 1, 0, -1);
  return LeibnizAlgebra<Rational>(QQ, 3, c, {"h", "e", "f"});
}

NonAbelianProduct<Rational> square_of(const LeibnizAlgebra<Rational>& g,
                                      bool exterior) {
  auto id = identity_crossed_module(g);
  return exterior ? exterior_product(id, id) : tensor_product(id, id);
}

Ideal<Rational> full_ideal(const LeibnizAlgebra<Rational>& g) {
  return Ideal<Rational>(g, Subspace<Rational>::full(g.dim, QQ));
}

}  // namespace

TEST_CASE("tensor square of abelian algebras") {
  for (int n = 1; n <= 3; ++n) {
    auto g = LeibnizAlgebra<Rational>::abelian(QQ, n);
    auto t = square_of(g, false);
    CHECK(t.space.dim == 2 * n * n);
    CHECK(is_zero_vec(t.bracket));
  }
}

TEST_CASE("tensor square of sl2 collapses to dimension 3") {
  auto t = square_of(sl2(), false);
  CHECK(t.space.dim == 3);
  // independent oracle: regenerate all relation instances from a permuted
  // basis presentation; the rank must not depend on instancing order
  auto tp = square_of(permute_basis(sl2(), {2, 0, 1}), false);
  CHECK(tp.space.dim == 3);
  auto tq = square_of(permute_basis(sl2(), {1, 2, 0}), false);
  CHECK(tq.space.dim == 3);
}

TEST_CASE("tensor and exterior squares of the cyclic algebra") {
  auto g = cyclic2();
  auto t = square_of(g, false);
  CHECK(t.space.dim == 3);
  auto e = square_of(g, true);
  CHECK(e.space.dim == 2);
  CHECK_NOTHROW(t.as_algebra());
  CHECK_NOTHROW(e.as_algebra());
}

TEST_CASE("product brackets satisfy the Leibniz identity") {
  for (const auto& g : {LeibnizAlgebra<Rational>::abelian(QQ, 2), cyclic2(),
                        heis3(), sl2()}) {
    CHECK_NOTHROW(square_of(g, false).as_algebra());
    CHECK_NOTHROW(square_of(g, true).as_algebra());
  }
}

TEST_CASE("crossed modules over different algebras are rejected") {
  auto a = identity_crossed_module(heis3());
  auto b = identity_crossed_module(sl2());
  CHECK_THROWS_AS(tensor_product(a, b), error);
}

TEST_CASE("tau maps are algebra morphisms") {
  for (const auto& g : {cyclic2(), heis3(), sl2()}) {
    auto t = square_of(g, false);
    const int q = t.space.dim;
    for (int s = 0; s < q; ++s)
      for (int u = 0; u < q; ++u) {
        std::vector<Rational> es(q), eu(q);
        es[s] = Rational(1);
        eu[u] = Rational(1);
        auto br = t.bracket_apply(es, eu);
        CHECK(t.tau_m.apply(br) ==
              g.bracket(t.tau_m.apply(es), t.tau_m.apply(eu)));
        CHECK(t.tau_n.apply(br) ==
              g.bracket(t.tau_n.apply(es), t.tau_n.apply(eu)));
      }
  }
}

TEST_CASE("square subspace") {
  SECTION("trivial crossed modules over the zero algebra") {
    auto k1 = LeibnizAlgebra<Rational>::abelian(QQ, 1);
    auto zero = LeibnizAlgebra<Rational>::abelian(QQ, 0);
    AlgebraMorphism<Rational> eta(k1, zero, Mat<Rational>(0, 1, QQ));
    LeibnizAction<Rational> act(zero, k1, {}, {});
    CrossedModule<Rational> cm(eta, act);
    auto t = tensor_product(cm, cm);
    CHECK(t.space.dim == 2);
    auto sq = square_subspace(t);
    CHECK(sq.in_quotient.dim() == 2);  // pullback is all of K + K
  }

  SECTION("zero module gives the zero subspace") {
    auto g = heis3();
    auto zero_cm = inclusion_crossed_module(
        g, Ideal<Rational>(g, Subspace<Rational>::zero(3, QQ)));
    auto t = tensor_product(zero_cm, identity_crossed_module(g));
    CHECK(t.space.dim == 0);
    CHECK(square_subspace(t).in_quotient.dim() == 0);
  }

  SECTION("perfect identity modules have trivial square subspace") {
    auto t = square_of(sl2(), false);
    CHECK(square_subspace(t).in_quotient.dim() == 0);
  }
}

TEST_CASE("exterior square identifies the two generator copies") {
  for (int n = 1; n <= 3; ++n) {
    auto g = LeibnizAlgebra<Rational>::abelian(QQ, n);
    auto e = square_of(g, true);
    CHECK(e.space.dim == n * n);
    CHECK(image(e.pi).dim() == e.space.dim);  // pi onto
  }
  // for heis3 the dimension matches the bullet square through delta
  auto d = delta_iso(heis3());
  CHECK(d.wedge.space.dim == 6);
  CHECK(d.bullet.space.dim == 6);
}

TEST_CASE("theta maps") {
  SECTION("abelian: everything brackets to zero") {
    auto g = LeibnizAlgebra<Rational>::abelian(QQ, 2);
    auto th = theta_map(g, full_ideal(g), full_ideal(g));
    CHECK(th.theta.mat.is_zero());
  }

  SECTION("sl2: theta is an isomorphism onto the algebra") {
    auto th = theta_map(sl2(), full_ideal(sl2()), full_ideal(sl2()));
    CHECK(th.wedge.space.dim == 3);
    CHECK(kernel(th.theta).dim() == 0);
    CHECK(image(th.theta).dim() == 3);
  }

  SECTION("central ideal against the full algebra") {
    auto g = heis3();
    auto th = theta_map(g, center(g), full_ideal(g));
    CHECK(th.theta.mat.is_zero());
    CHECK(th.inter.dim == 1);
  }
}

TEST_CASE("delta is an isomorphism on small algebras") {
  for (const auto& g :
       {LeibnizAlgebra<Rational>::abelian(QQ, 1),
        LeibnizAlgebra<Rational>::abelian(QQ, 3), cyclic2(), heis3(), sl2()}) {
    auto d = delta_iso(g);
    CHECK(d.bullet.space.dim == d.wedge.space.dim);
  }
}

TEST_CASE("delta intertwines theta with the bullet bracket map") {
  // theta . delta = d' as maps out of the bullet square
  for (const auto& g : {cyclic2(), heis3(), sl2()}) {
    auto d = delta_iso(g);
    auto th = theta_map(g, full_ideal(g), full_ideal(g));
    // embeddings coincide: wedge spaces are built the same way
    REQUIRE(th.wedge.space.same_presentation(d.wedge.space));
    CHECK((th.theta.mat * d.delta.mat) == d.bullet.d_prime.mat);
  }
}

TEST_CASE("lie tensor and exterior squares") {
  for (int n = 1; n <= 3; ++n) {
    auto g = LeibnizAlgebra<Rational>::abelian(QQ, n);
    CHECK(lie_tensor_square(g).space.dim == n * n);
    CHECK(lie_exterior_square(g).space.dim == n * (n - 1) / 2);
  }

  auto ls = lie_exterior_square(sl2());
  CHECK(ls.space.dim == 3);
  CHECK(kernel(ls.to_g).dim() == 0);  // H_2(sl2) = 0

  // ker(lie exterior square -> g) recovers Chevalley-Eilenberg H_2
  auto lh = lie_exterior_square(heis3());
  CHECK(kernel(lh.to_g).dim() ==
        chevalley_eilenberg_homology(heis3(), 2).dim());
}

TEST_CASE("maps from the Leibniz squares onto the Lie squares") {
  SECTION("one-dimensional abelian") {
    auto g = LeibnizAlgebra<Rational>::abelian(QQ, 1);
    auto m = leibniz_to_lie_square_maps(g);
    CHECK(m.star.space.dim == 2);
    CHECK(m.lie_star.space.dim == 1);
    CHECK(m.wedge.space.dim == 1);
    CHECK(m.lie_wedge.space.dim == 0);
    CHECK(image(m.lambda).dim() == 1);
  }

  SECTION("sl2: the exterior comparison is an isomorphism") {
    auto m = leibniz_to_lie_square_maps(sl2());
    CHECK(m.wedge.space.dim == 3);
    CHECK(m.lie_wedge.space.dim == 3);
    CHECK(kernel(m.wedge_to_lie_wedge).dim() == 0);
  }

  SECTION("heisenberg: kernel dimensions") {
    auto m = leibniz_to_lie_square_maps(heis3());
    // ker(g /\ g -> lie exterior square) surjects onto Gamma(g^ab) later;
    // here the dimension bookkeeping: 6 -> 3 with kernel 3
    CHECK(m.wedge.space.dim == 6);
    CHECK(m.lie_wedge.space.dim == 3);
    CHECK(kernel(m.wedge_to_lie_wedge).dim() == 3);
    // lie tensor square = lie exterior + Gamma(K^2): 3 + 3
    CHECK(m.lie_star.space.dim == 6);
  }
}

TEST_CASE("products over F2") {
  auto f2 = FieldSpec::prime(2);
  auto g = LeibnizAlgebra<Fp>::abelian(f2, 2);
  auto id = identity_crossed_module(g);
  auto t = tensor_product(id, id);
  CHECK(t.space.dim == 8);
  auto e = exterior_product(id, id);
  CHECK(e.space.dim == 4);

  std::vector<Fp> c(27);
  c[(0 * 3 + 1) * 3 + 2] = Fp(1, 2);
  c[(1 * 3 + 0) * 3 + 2] = Fp(1, 2);
  LeibnizAlgebra<Fp> h(f2, 3, c);
  auto th = theta_map(h, Ideal<Fp>(h, Subspace<Fp>::full(3, f2)),
                      Ideal<Fp>(h, Subspace<Fp>::full(3, f2)));
  CHECK(kernel(th.theta).dim() == leibniz_homology(h, 2).dim());
}
