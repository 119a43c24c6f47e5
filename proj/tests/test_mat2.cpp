#include <doctest.h>

#include <cmath>
#include <limits>

#include "fricke/errors.hpp"
#include "fricke/mat2.hpp"
#include "fricke/rng.hpp"

using namespace fricke;

namespace {

const Mat2 kUnipotentUpper{1.0, 1.0, 0.0, 1.0};
const Mat2 kUnipotentLower{1.0, 0.0, 1.0, 1.0};

}  // namespace

TEST_CASE("basic matrix operations") {
  const Mat2 I = Mat2::identity();
  CHECK(I.trace() == Complex{2.0, 0.0});
  CHECK(I.det() == Complex{1.0, 0.0});

  // hand computation: xi*eta = [[2,1],[1,1]], eta*xi = [[1,1],[1,2]]
  const Mat2 L = commutator_bracket(kUnipotentUpper, kUnipotentLower);
  CHECK(distance(L, Mat2{1.0, 0.0, 0.0, -1.0}) == 0.0);

  Rng rng(91);
  for (int i = 0; i < 200; ++i) {
    const Mat2 m = random_sl2(rng);
    CHECK(distance(m * m.inverse(), Mat2::identity()) <=
          1e-12 * (1.0 + max_abs(m)));
  }
  CHECK_THROWS_AS((Mat2{1.0, 2.0, 2.0, 4.0}.inverse()), SingularMatrix);
}

TEST_CASE("evaluate_word") {
  Rng rng(92);
  const Mat2 xi = random_sl2(rng);
  {
    const Mat2 gens[2] = {xi, xi};
    const Mat2 v = evaluate_word(parse_word("XY^-1", 2), gens);
    CHECK(distance(v, Mat2::identity()) <= 1e-12 * (1.0 + max_abs(xi)));
  }
  {
    // hand computation: the commutator of the unipotent pair has trace 3,
    // matching kappa(2,2,3)
    const Mat2 gens[2] = {kUnipotentUpper, kUnipotentLower};
    const Mat2 comm = evaluate_word(parse_word("XYX^-1Y^-1", 2), gens);
    CHECK(std::abs(comm.trace() - Complex{3.0, 0.0}) <= 1e-12);
  }
  {
    const Mat2 gens[2] = {companion(3.0), Mat2::identity()};
    const Mat2 sq = evaluate_word(parse_word("X^2", 2), gens);
    CHECK(sq.trace() == Complex{7.0, 0.0});  // 3^2 - 2
  }
  {
    const Mat2 gens[2] = {xi, xi};
    CHECK(distance(evaluate_word(Word(2), gens), Mat2::identity()) == 0.0);
  }
}

TEST_CASE("tau and char8") {
  CHECK(tau(Mat2::identity(), Mat2::identity()).x == Complex{2.0, 0.0});

  const CharTriple t = tau(kUnipotentUpper, kUnipotentLower);
  CHECK(t.x == Complex{2.0, 0.0});
  CHECK(t.y == Complex{2.0, 0.0});
  CHECK(t.z == Complex{3.0, 0.0});

  // quaternion-type triple: diag(i,-i), [[0,1],[-1,0]], [[0,i],[i,0]]
  const Complex i{0.0, 1.0};
  const Mat2 q1{i, 0.0, 0.0, -i};
  const Mat2 q2{0.0, 1.0, -1.0, 0.0};
  const Mat2 q3{0.0, i, i, 0.0};
  const RankThreeChar c = char8(q1, q2, q3);
  CHECK(c.t1 == Complex{0.0, 0.0});
  CHECK(c.t2 == Complex{0.0, 0.0});
  CHECK(c.t3 == Complex{0.0, 0.0});
  CHECK(c.t12 == Complex{0.0, 0.0});
  CHECK(c.t23 == Complex{0.0, 0.0});
  CHECK(c.t13 == Complex{0.0, 0.0});
  CHECK(c.t123 == Complex{-2.0, 0.0});
  CHECK(c.t132 == Complex{2.0, 0.0});
}

TEST_CASE("random_sl2 is deterministic and unimodular") {
  {
    Rng a(12345), b(12345);
    const Mat2 ma = random_sl2(a);
    const Mat2 mb = random_sl2(b);
    CHECK(ma == mb);
  }
  {
    Rng a(1), b(2);
    CHECK(random_sl2(a) != random_sl2(b));
  }
  Rng rng(93);
  for (int i = 0; i < 10000; ++i) {
    const Mat2 m = random_sl2(rng);
    CHECK(std::abs(m.det() - 1.0) <= 1e-12);
  }
}

TEST_CASE("companion form") {
  CHECK(distance(companion(0.0), Mat2{0.0, -1.0, 1.0, 0.0}) == 0.0);
  Rng rng(94);
  for (int i = 0; i < 100; ++i) {
    const Complex t = rng.box();
    CHECK(companion(t).trace() == t);
    CHECK(companion(t).det() == Complex{1.0, 0.0});
  }
  // companion(2) has the single eigenvalue 1: (A - I)^2 = 0 by Cayley-Hamilton
  const Mat2 a = companion(2.0);
  const Mat2 ami = a - Mat2::identity();
  CHECK(max_abs(ami * ami) == 0.0);
  CHECK(distance(a, Mat2::identity()) > 0.5);
}

TEST_CASE("conjugate_to_companion") {
  {
    const Mat2 g = companion(5.0);
    const Mat2 h = conjugate_to_companion(g);
    CHECK(distance(h * g * h.inverse(), companion(5.0)) <= 1e-8);
  }
  {
    // diagonal g defeats e1 and e2; the e1+e2 candidate must kick in
    const Mat2 g{2.0, 0.0, 0.0, 0.5};
    const Mat2 h = conjugate_to_companion(g);
    CHECK(std::abs(h.det() - 1.0) <= 1e-12);
    CHECK(distance(h * g * h.inverse(), companion(2.5)) <= 1e-8);
  }
  CHECK_THROWS_AS(conjugate_to_companion(Mat2::identity()), CentralElement);
  CHECK_THROWS_AS(conjugate_to_companion(-Mat2::identity()), CentralElement);

  Rng rng(95);
  for (int i = 0; i < 300; ++i) {
    const Mat2 g = random_sl2(rng);
    const Mat2 h = conjugate_to_companion(g);
    const double scale = 1.0 + std::abs(g.trace());
    CHECK(distance(h * g * h.inverse(), companion(g.trace())) <=
          1e-8 * scale);
    CHECK(std::abs(h.det() - 1.0) <= 1e-9);
  }
}

TEST_CASE("det_pencil") {
  const Mat2 I = Mat2::identity();
  {
    const DetPencil p = det_pencil(I, Mat2{});
    CHECK(p.c0 == Complex{1.0, 0.0});
    CHECK(p.c1 == Complex{0.0, 0.0});
    CHECK(p.c2 == Complex{0.0, 0.0});
  }
  {
    const DetPencil p = det_pencil(I, I);
    CHECK(p.c0 == Complex{1.0, 0.0});
    CHECK(p.c1 == Complex{2.0, 0.0});
    CHECK(p.c2 == Complex{1.0, 0.0});
  }
  Rng rng(96);
  for (int i = 0; i < 300; ++i) {
    const Mat2 w0{rng.box(), rng.box(), rng.box(), rng.box()};
    const Mat2 k{rng.box(), rng.box(), rng.box(), rng.box()};
    const DetPencil p = det_pencil(w0, k);
    for (double s : {-1.0, 0.5, 2.0}) {
      const Complex direct = (w0 + Complex{s, 0.0} * k).det();
      CHECK(std::abs(p.eval({s, 0.0}) - direct) <=
            1e-10 * (1.0 + std::abs(direct)));
    }
  }
}

TEST_CASE("trace identities from Cayley-Hamilton") {
  Rng rng(97);
  for (int i = 0; i < 300; ++i) {
    const Mat2 xi = random_sl2(rng);
    const Mat2 eta = random_sl2(rng);
    const double m = std::max(max_abs(xi), max_abs(eta));

    const Mat2 ch = xi * xi - xi.trace() * xi + xi.det() * Mat2::identity();
    CHECK(max_abs(ch) <= 1e-10 * (1.0 + m * m));

    CHECK(distance(xi + xi.inverse(), xi.trace() * Mat2::identity()) <=
          1e-10 * (1.0 + m));

    CHECK(std::abs(xi.trace() - xi.inverse().trace()) <=
          1e-12 * (1.0 + std::abs(xi.trace())));

    const Complex basic = (xi * eta).trace() + (xi * eta.inverse()).trace() -
                          xi.trace() * eta.trace();
    CHECK(std::abs(basic) <= 1e-10 * (1.0 + m * m));
  }
}

TEST_CASE("finiteness is rejected at boundaries") {
  const double inf = std::numeric_limits<double>::infinity();
  const Mat2 bad{Complex{inf, 0.0}, 0.0, 0.0, 1.0};
  CHECK(!is_finite(bad));
  const Mat2 gens[2] = {bad, Mat2::identity()};
  CHECK_THROWS_AS(evaluate_word(parse_word("X", 2), gens), NonFiniteValue);
}
