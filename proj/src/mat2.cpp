#include "fricke/mat2.hpp"

#include <cmath>
#include <string>

#include "fricke/errors.hpp"

namespace fricke {

Mat2 Mat2::inverse() const {
  const Complex dv = det();
  if (std::abs(dv) <= 1e-300) {
    throw SingularMatrix("matrix determinant is zero");
  }
  const Complex inv = Complex{1.0, 0.0} / dv;
  return {inv * d, -inv * b, -inv * c, inv * a};
}

Mat2 commutator_bracket(const Mat2& A, const Mat2& B) {
  return A * B - B * A;
}

double max_abs(const Mat2& m) {
  return std::max(std::max(std::abs(m.a), std::abs(m.b)),
                  std::max(std::abs(m.c), std::abs(m.d)));
}

bool is_finite(const Mat2& m) {
  for (Complex v : {m.a, m.b, m.c, m.d}) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      return false;
    }
  }
  return true;
}

void require_finite(const Mat2& m, const char* what) {
  if (!is_finite(m)) {
    throw NonFiniteValue(std::string(what) + ": entries must be finite");
  }
}

bool is_sl2(const Mat2& m, double det_tol) {
  return is_finite(m) && std::abs(m.det() - Complex{1.0, 0.0}) <= det_tol;
}

void require_sl2(const Mat2& m, const char* what, double det_tol) {
  require_finite(m, what);
  if (!is_sl2(m, det_tol)) {
    throw NotSL2(std::string(what) + ": |det - 1| exceeds " +
                 std::to_string(det_tol));
  }
}

Mat2 evaluate_word(const Word& w, std::span<const Mat2> generators) {
  if (static_cast<std::size_t>(w.rank()) > generators.size()) {
    throw RankError("word rank exceeds the number of assigned matrices");
  }
  for (std::size_t i = 0; i < static_cast<std::size_t>(w.rank()); ++i) {
    require_finite(generators[i], "evaluate_word");
  }
  // inverses computed once per generator, on first use
  Mat2 inverses[3];
  bool have_inverse[3] = {false, false, false};
  Mat2 acc = Mat2::identity();
  for (const GenSymbol& s : w.symbols()) {
    const int g = static_cast<int>(s.gen);
    if (s.sign > 0) {
      acc = acc * generators[g];
    } else {
      if (!have_inverse[g]) {
        inverses[g] = generators[g].inverse();
        have_inverse[g] = true;
      }
      acc = acc * inverses[g];
    }
  }
  return acc;
}

CharTriple tau(const Mat2& xi, const Mat2& eta) {
  return {xi.trace(), eta.trace(), (xi * eta).trace()};
}

RankThreeChar char8(const Mat2& A1, const Mat2& A2, const Mat2& A3) {
  const Mat2 A12 = A1 * A2;
  return {A1.trace(),         A2.trace(),         A3.trace(),
          A12.trace(),        (A2 * A3).trace(),  (A1 * A3).trace(),
          (A12 * A3).trace(), (A1 * A3 * A2).trace()};
}

Mat2 companion(Complex t) { return {t, -1.0, 1.0, 0.0}; }

Mat2 conjugate_to_companion(const Mat2& g) {
  require_sl2(g, "conjugate_to_companion");
  const Mat2 I = Mat2::identity();
  if (distance(g, I) <= 1e-9 || distance(g, -I) <= 1e-9) {
    throw CentralElement("matrix is +/-identity; only +/-identity is reachable");
  }
  // Columns (g v | -v) satisfy B^-1 g B = companion(tr g) whenever v is not
  // an eigenvector. For g != +/-I at least one of e1, e2, e1+e2 works; take
  // the best-conditioned one.
  struct Col {
    Complex top, bot;
  };
  const Col candidates[3] = {{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}};
  Mat2 best{};
  double best_det = -1.0;
  for (const Col& v : candidates) {
    const Complex gv_top = g.a * v.top + g.b * v.bot;
    const Complex gv_bot = g.c * v.top + g.d * v.bot;
    const Mat2 basis{gv_top, -v.top, gv_bot, -v.bot};
    const double dm = std::abs(basis.det());
    if (dm > best_det) {
      best_det = dm;
      best = basis;
    }
  }
  if (best_det <= 1e-300) {
    throw CentralElement("matrix has no independent image vector");
  }
  const Complex scale = std::sqrt(Complex{1.0, 0.0} / best.det());
  return (scale * best).inverse();
}

DetPencil det_pencil(const Mat2& W0, const Mat2& K) {
  return {W0.det(), W0.trace() * K.trace() - (W0 * K).trace(), K.det()};
}

}  // namespace fricke
