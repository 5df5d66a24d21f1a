#include <leibniz/linalg.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace leibniz;

namespace {

const FieldSpec QQ = FieldSpec::rationals();

Mat<Rational> qmat(const std::vector<std::vector<long>>& rows, int ncols) {
  Mat<Rational> m(static_cast<int>(rows.size()), ncols, QQ);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < ncols; ++j) m.at(i, j) = Rational(rows[i][j]);
  return m;
}

std::vector<Rational> qvec(const std::vector<long>& v) {
  std::vector<Rational> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
  return r;
}

LinearMap<Rational> map_between(const QuotientSpace<Rational>& d,
                                const QuotientSpace<Rational>& c,
                                const std::vector<std::vector<long>>& rows) {
  return {d, c, qmat(rows, d.dim)};
}

}  // namespace

TEST_CASE("kernel of coordinate projection and zero map") {
  auto q2 = QuotientSpace<Rational>::full(2, QQ);
  auto q1 = QuotientSpace<Rational>::full(1, QQ);
  auto f = map_between(q2, q1, {{1, 0}});
  CHECK(kernel(f) == Subspace<Rational>::span_rows(qmat({{0, 1}}, 2)));

  auto q3 = QuotientSpace<Rational>::full(3, QQ);
  auto z = LinearMap<Rational>::zero(q3, q1);
  CHECK(kernel(z) == Subspace<Rational>::full(3, QQ));

  // span{(-2,1)} in canonical form
  auto g = map_between(q2, q2, {{1, 2}, {2, 4}});
  Mat<Rational> expect(1, 2, QQ);
  expect.at(0, 0) = Rational(1);
  expect.at(0, 1) = Rational(1) / Rational(-2);
  CHECK(kernel(g).basis == expect);
}

TEST_CASE("image examples") {
  auto q2 = QuotientSpace<Rational>::full(2, QQ);
  auto q1 = QuotientSpace<Rational>::full(1, QQ);
  CHECK(image(LinearMap<Rational>::identity(q2)) ==
        Subspace<Rational>::full(2, QQ));
  CHECK(image(LinearMap<Rational>::zero(q2, q1)).dim() == 0);
  auto f = map_between(q1, q2, {{1}, {2}});
  CHECK(image(f) == Subspace<Rational>::span_rows(qmat({{1, 2}}, 2)));
}

TEST_CASE("quotient spaces") {
  auto r = Subspace<Rational>::span_rows(qmat({{1, 1}}, 2));
  auto q = quotient(2, r);
  CHECK(q.dim == 1);

  auto q3 = quotient(3, Subspace<Rational>::zero(3, QQ));
  CHECK(q3.dim == 3);
  CHECK(q3.project(qvec({1, 2, 3})) == qvec({1, 2, 3}));

  auto f2 = FieldSpec::prime(2);
  Mat<Fp> rel(2, 4, f2);
  rel.at(0, 0) = Fp(1, 2);
  rel.at(0, 1) = Fp(1, 2);
  rel.at(1, 2) = Fp(1, 2);
  auto qf = quotient(4, Subspace<Fp>::span_rows(rel));
  CHECK(qf.dim == 2);

  CHECK_THROWS_AS(quotient(3, r), error);  // dimension mismatch
}

TEST_CASE("quotient round trip") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> entry(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    Mat<Rational> rows(1 + static_cast<int>(rng() % 3), n, QQ);
    for (auto& x : rows.a) x = Rational(entry(rng));
    auto q = quotient(n, Subspace<Rational>::span_rows(rows));
    // projection . section = identity
    for (int t = 0; t < q.dim; ++t) {
      std::vector<Rational> e(q.dim);
      e[t] = Rational(1);
      CHECK(q.project(q.section(e)) == e);
    }
    // section . projection - identity lands in the relations
    for (int j = 0; j < n; ++j) {
      std::vector<Rational> v(n);
      v[j] = Rational(1);
      auto w = q.section(q.project(v));
      for (int i = 0; i < n; ++i) w[i] -= v[i];
      CHECK(q.relations.contains(w));
    }
  }
}

TEST_CASE("induced maps on quotients") {
  auto rel = Subspace<Rational>::span_rows(qmat({{1, 1}}, 2));
  auto q = quotient(2, rel);

  auto id = induced_map(Mat<Rational>::identity(2, QQ), q, q);
  CHECK(id.mat == Mat<Rational>::identity(1, QQ));

  // the swap (x,y) -> (y,x) negates the coset of (0,1) modulo span{(1,1)}
  auto swap = induced_map(qmat({{0, 1}, {1, 0}}, 2), q, q);
  Mat<Rational> minus_one(1, 1, QQ);
  minus_one.at(0, 0) = Rational(-1);
  CHECK(swap.mat == minus_one);

  // over F2 the same swap is the identity on the quotient
  auto f2 = FieldSpec::prime(2);
  Mat<Fp> rel2(1, 2, f2);
  rel2.at(0, 0) = Fp(1, 2);
  rel2.at(0, 1) = Fp(1, 2);
  auto qf = quotient(2, Subspace<Fp>::span_rows(rel2));
  Mat<Fp> swf(2, 2, f2);
  swf.at(0, 1) = Fp(1, 2);
  swf.at(1, 0) = Fp(1, 2);
  CHECK(induced_map(swf, qf, qf).mat == Mat<Fp>::identity(1, f2));

  // projection to a quotient with relations only in the codomain
  auto cod = quotient(2, Subspace<Rational>::span_rows(qmat({{0, 1}}, 2)));
  auto full2 = QuotientSpace<Rational>::full(2, QQ);
  auto pr = induced_map(qmat({{1, 0}, {0, 0}}, 2), full2, cod);
  CHECK(pr.mat == qmat({{1, 0}}, 2));

  // not well-defined: identity does not preserve span{(1,1)} -> span{(0,1)}
  CHECK_THROWS_AS(induced_map(Mat<Rational>::identity(2, QQ), q, cod),
                  not_well_defined);
}

TEST_CASE("exactness checking") {
  auto q0 = QuotientSpace<Rational>::full(0, QQ);
  auto q1 = QuotientSpace<Rational>::full(1, QQ);

  // 0 -> Q -> Q -> 0 with identity in the middle
  std::vector<LinearMap<Rational>> seq = {
      LinearMap<Rational>::zero(q0, q1), LinearMap<Rational>::identity(q1),
      LinearMap<Rational>::zero(q1, q0)};
  auto rep = check_exact(seq, "idseq");
  CHECK(rep.verdict);
  REQUIRE(rep.nodes.size() == 2);
  CHECK(rep.nodes[0].exact);
  CHECK(rep.nodes[1].exact);

  // Q ->0 Q ->0 Q is not exact at the middle node
  std::vector<LinearMap<Rational>> bad = {LinearMap<Rational>::zero(q1, q1),
                                          LinearMap<Rational>::zero(q1, q1)};
  auto rep2 = check_exact(bad, "zeros");
  CHECK_FALSE(rep2.verdict);
  CHECK(rep2.nodes[0].dim_kernel_out == 1);
  CHECK(rep2.nodes[0].dim_image_in == 0);

  // non-composable sequences are rejected
  auto q2 = QuotientSpace<Rational>::full(2, QQ);
  std::vector<LinearMap<Rational>> split = {LinearMap<Rational>::zero(q1, q1),
                                            LinearMap<Rational>::zero(q2, q1)};
  CHECK_THROWS_AS(check_exact(split), error);
}

namespace {

// rows 0 -> Q -> Q^2 -> Q -> 0 (inclusion, projection)
SnakeLadder<Rational> standard_ladder(const LinearMap<Rational>& alpha,
                                      const LinearMap<Rational>& beta,
                                      const LinearMap<Rational>& gamma) {
  auto q1 = QuotientSpace<Rational>::full(1, QQ);
  auto q2 = QuotientSpace<Rational>::full(2, QQ);
  auto incl = map_between(q1, q2, {{1}, {0}});
  auto proj = map_between(q2, q1, {{0, 1}});
  return {incl, proj, incl, proj, alpha, beta, gamma};
}

}  // namespace

TEST_CASE("snake connecting map") {
  auto q1 = QuotientSpace<Rational>::full(1, QQ);
  auto q2 = QuotientSpace<Rational>::full(2, QQ);

  SECTION("all vertical maps zero") {
    auto l = standard_ladder(LinearMap<Rational>::zero(q1, q1),
                             LinearMap<Rational>::zero(q2, q2),
                             LinearMap<Rational>::zero(q1, q1));
    auto s = snake_connecting(l);
    CHECK(s.ker_gamma.dim() == 1);
    CHECK(s.coker_alpha.dim == 1);
    CHECK(s.connecting.is_zero());
  }

  SECTION("identity verticals give trivial kernel") {
    auto l = standard_ladder(LinearMap<Rational>::identity(q1),
                             LinearMap<Rational>::identity(q2),
                             LinearMap<Rational>::identity(q1));
    auto s = snake_connecting(l);
    CHECK(s.ker_gamma.dim() == 0);
    CHECK(s.coker_alpha.dim == 0);
  }

  SECTION("nonzero connecting map") {
    // top: 0 -> Q = Q, bottom: Q = Q -> 0, beta = identity
    auto q0 = QuotientSpace<Rational>::full(0, QQ);
    SnakeLadder<Rational> l{
        LinearMap<Rational>::zero(q0, q1),   // top left
        LinearMap<Rational>::identity(q1),   // top right
        LinearMap<Rational>::identity(q1),   // bottom left
        LinearMap<Rational>::zero(q1, q0),   // bottom right
        LinearMap<Rational>::zero(q0, q1),   // alpha
        LinearMap<Rational>::identity(q1),   // beta
        LinearMap<Rational>::zero(q1, q0)};  // gamma
    auto s = snake_connecting(l);
    CHECK(s.ker_gamma.dim() == 1);
    CHECK(s.coker_alpha.dim == 1);
    CHECK(s.connecting == Mat<Rational>::identity(1, QQ));
  }

  SECTION("broken hypotheses are reported") {
    // bottom row not exact: bottom-right composed with bottom-left nonzero
    auto incl = map_between(q1, q2, {{1}, {0}});
    auto proj_bad = map_between(q2, q1, {{1, 0}});
    SnakeLadder<Rational> l{incl,
                            map_between(q2, q1, {{0, 1}}),
                            incl,
                            proj_bad,
                            LinearMap<Rational>::zero(q1, q1),
                            LinearMap<Rational>::zero(q2, q2),
                            LinearMap<Rational>::zero(q1, q1)};
    CHECK_THROWS_AS(snake_connecting(l), exactness_prereq_failed);
  }
}
