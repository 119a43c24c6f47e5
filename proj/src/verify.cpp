#include "fricke/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "fricke/charvar.hpp"
#include "fricke/charvar3.hpp"
#include "fricke/errors.hpp"
#include "fricke/polynomial.hpp"
#include "fricke/rng.hpp"
#include "fricke/trace_calculus.hpp"

namespace fricke {

namespace {

using TrialFn = std::function<double(Rng&)>;

// Residual of one trial; a thrown domain error counts as an infinite
// residual so the check fails loudly instead of crashing the suite.
CheckResult run_check(const VerifyOptions& opt, std::string name,
                      std::uint64_t salt, double tol, std::size_t trials,
                      const TrialFn& fn) {
  double worst = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(mix64(opt.seed ^ mix64(salt)), t);
    double r;
    try {
      r = fn(rng);
    } catch (const Error&) {
      r = std::numeric_limits<double>::infinity();
    }
    if (!(r <= worst)) {
      worst = r;
    }
  }
  return {std::move(name), trials, worst, tol, worst <= tol};
}

double rel(double residual, double scale) { return residual / (1.0 + scale); }

double quartic(double m) { return m * m * m * m; }

Complex random_scaled(Rng& rng, double s) {
  const Complex b = rng.box();
  return {s * b.real(), s * b.imag()};
}

RepPair random_pair(Rng& rng) { return {random_sl2(rng), random_sl2(rng)}; }

RepPair random_irreducible_pair(Rng& rng, double irr_tol) {
  for (;;) {
    RepPair p = random_pair(rng);
    if (is_irreducible(p, irr_tol)) {
      return p;
    }
  }
}

// [[a, r], [0, 1/a]] with |a| kept away from zero
Mat2 random_upper_triangular(Rng& rng) {
  Complex a = rng.box();
  while (std::abs(a) < 0.1) {
    a = rng.box();
  }
  return {a, rng.box(), 0.0, 1.0 / a};
}

double max_trace_mag(const RankThreeChar& c) {
  double m = 0.0;
  for (Complex v : {c.t1, c.t2, c.t3, c.t12, c.t23, c.t13, c.t123, c.t132}) {
    m = std::max(m, std::abs(v));
  }
  return m;
}

TracePoly random_small_poly(Rng& rng) {
  TracePoly p;
  const std::size_t terms = 1 + rng.below(3);
  for (std::size_t i = 0; i < terms; ++i) {
    const long long coeff =
        static_cast<long long>(rng.below(19)) - 9;  // [-9, 9]
    TracePoly term(coeff);
    for (Var v : {Var::x, Var::y, Var::z}) {
      term *= TracePoly::variable(v, static_cast<std::uint16_t>(rng.below(3)));
    }
    p += term;
  }
  return p;
}

SixTuple random_six_tuple(Rng& rng) {
  return {random_scaled(rng, 3.0), random_scaled(rng, 3.0),
          random_scaled(rng, 3.0), random_scaled(rng, 3.0),
          random_scaled(rng, 3.0), random_scaled(rng, 3.0)};
}

double word_oracle_residual(TraceTable& table, const Word& w, Rng& rng,
                            int pairs) {
  const TracePoly f = table.trace_poly(w);
  double worst = 0.0;
  for (int k = 0; k < pairs; ++k) {
    const Mat2 xi = random_sl2(rng);
    const Mat2 eta = random_sl2(rng);
    const Mat2 generators[2] = {xi, eta};
    const Complex direct = evaluate_word(w, generators).trace();
    const CharTriple t = tau(xi, eta);
    const Complex via_poly =
        f.eval({{Var::x, t.x}, {Var::y, t.y}, {Var::z, t.z}});
    worst = std::max(worst, rel(std::abs(direct - via_poly),
                                std::abs(direct)));
  }
  return worst;
}

}  // namespace

bool all_pass(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

std::vector<CheckResult> run_basic_suite(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  const std::size_t n = opt.trials;

  out.push_back(run_check(opt, "cayley-hamilton", 1, 1e-10, n, [](Rng& rng) {
    const Mat2 m = random_sl2(rng);
    const Mat2 r = m * m - m.trace() * m + m.det() * Mat2::identity();
    return rel(max_abs(r), max_abs(m) * max_abs(m));
  }));

  out.push_back(run_check(opt, "sum-of-inverse", 2, 1e-10, n, [](Rng& rng) {
    const Mat2 m = random_sl2(rng);
    const Mat2 r = m + m.inverse() - m.trace() * Mat2::identity();
    return rel(max_abs(r), max_abs(m));
  }));

  out.push_back(run_check(opt, "trace-of-inverse", 3, 1e-12, n, [](Rng& rng) {
    const Mat2 m = random_sl2(rng);
    return rel(std::abs(m.trace() - m.inverse().trace()),
               std::abs(m.trace()));
  }));

  out.push_back(run_check(opt, "basic-identity", 4, 1e-10, n, [](Rng& rng) {
    const Mat2 xi = random_sl2(rng);
    const Mat2 eta = random_sl2(rng);
    const Complex lhs = (xi * eta).trace() + (xi * eta.inverse()).trace();
    const Complex rhs = xi.trace() * eta.trace();
    return rel(std::abs(lhs - rhs), std::abs(rhs));
  }));

  out.push_back(run_check(
      opt, "commutator-trace", 5, opt.oracle_tol, n, [](Rng& rng) {
        const RepPair p = random_pair(rng);
        const Mat2 comm = p.xi * p.eta * p.xi.inverse() * p.eta.inverse();
        const CharTriple t = tau(p.xi, p.eta);
        const double m = std::max(
            {std::abs(t.x), std::abs(t.y), std::abs(t.z)});
        return rel(std::abs(comm.trace() - kappa_value(t)), quartic(m));
      }));

  out.push_back(run_check(
      opt, "commutator-det", 6, opt.oracle_tol, n, [](Rng& rng) {
        const RepPair p = random_pair(rng);
        const Complex det_l = commutator_bracket(p.xi, p.eta).det();
        const CharTriple t = tau(p.xi, p.eta);
        const double m = std::max(
            {std::abs(t.x), std::abs(t.y), std::abs(t.z)});
        return rel(std::abs(det_l - (2.0 - kappa_value(t))), quartic(m));
      }));

  {
    TraceTable table;
    out.push_back(run_check(
        opt, "word-trace-oracle", 7, 1e-6, n, [&table](Rng& rng) {
          const Word w = random_word(rng, 2, 12);
          return word_oracle_residual(table, w, rng, 20);
        }));
  }

  {
    TraceTable table;
    out.push_back(run_check(
        opt, "symbolic-basic-identity", 8, 0.0, std::min<std::size_t>(n, 200),
        [&table](Rng& rng) {
          const Word u = random_word(rng, 2, 8);
          const Word v = random_word(rng, 2, 8);
          const TracePoly lhs = table.trace_poly(concat(u, v)) +
                                table.trace_poly(concat(u, invert(v)));
          const TracePoly rhs =
              table.trace_poly(u) * table.trace_poly(v);
          return lhs == rhs ? 0.0 : 1.0;
        }));
  }

  {
    TraceTable table;
    out.push_back(run_check(
        opt, "trace-key-invariance", 9, 0.0, std::min<std::size_t>(n, 200),
        [&table](Rng& rng) {
          const Word w = random_word(rng, 2, 10);
          const int idx = static_cast<int>(rng.below(4));
          const GenSymbol g{static_cast<Gen>(idx / 2),
                            static_cast<std::int8_t>(idx % 2 == 0 ? 1 : -1)};
          const Word gw(2, {g});
          const Word conj = concat(concat(gw, w), invert(gw));
          const TracePoly fw = table.trace_poly(w);
          return (fw == table.trace_poly(conj) &&
                  fw == table.trace_poly(invert(w)))
                     ? 0.0
                     : 1.0;
        }));
  }

  out.push_back(run_check(opt, "lift-round-trip", 10, 1e-9, n, [](Rng& rng) {
    const CharTriple c{random_scaled(rng, 3.0), random_scaled(rng, 3.0),
                       random_scaled(rng, 3.0)};
    const RepPair p = lift_char(c);
    const CharTriple back = tau(p.xi, p.eta);
    double worst = rel(std::abs(p.xi.det() - 1.0), 1.0);
    worst = std::max(worst, rel(std::abs(p.eta.det() - 1.0), 1.0));
    worst = std::max(worst, rel(std::abs(back.x - c.x), std::abs(c.x)));
    worst = std::max(worst, rel(std::abs(back.y - c.y), std::abs(c.y)));
    worst = std::max(worst, rel(std::abs(back.z - c.z), std::abs(c.z)));
    return worst;
  }));

  out.push_back(run_check(
      opt, "reducible-kappa", 11, 1e-10, n, [](Rng& rng) {
        const Mat2 xi = random_upper_triangular(rng);
        const Mat2 eta = random_upper_triangular(rng);
        const CharTriple t = tau(xi, eta);
        const double m = std::max(
            {std::abs(t.x), std::abs(t.y), std::abs(t.z)});
        return rel(std::abs(kappa_value(t) - 2.0), quartic(m));
      }));

  out.push_back(run_check(
      opt, "irreducible-classification", 12, 0.0, n, [&opt](Rng& rng) {
        for (;;) {
          const RepPair p = random_pair(rng);
          const Complex k = kappa_value(tau(p.xi, p.eta));
          if (std::abs(k - 2.0) > 0.1) {
            return is_irreducible(p, opt.irr_tol) ? 0.0 : 1.0;
          }
        }
      }));

  out.push_back(run_check(
      opt, "inverting-element", 13, opt.oracle_tol, n, [&opt](Rng& rng) {
        const RepPair p = random_irreducible_pair(rng, opt.irr_tol);
        const Mat2 g = inverting_element(p);
        const Mat2 gi = g.inverse();
        double worst = rel(std::abs(g.trace()), 1.0);
        worst = std::max(worst, rel(std::abs(g.det() - 1.0), 1.0));
        worst = std::max(
            worst, rel(max_abs(g * g + Mat2::identity()), max_abs(g)));
        const Mat2 xi_inv = p.xi.inverse();
        const Mat2 eta_inv = p.eta.inverse();
        worst = std::max(
            worst, rel(distance(g * p.xi * gi, xi_inv), max_abs(xi_inv)));
        worst = std::max(
            worst, rel(distance(g * p.eta * gi, eta_inv), max_abs(eta_inv)));
        return worst;
      }));

  out.push_back(run_check(
      opt, "conjugator-action", 14, 1e-7, n, [&opt](Rng& rng) {
        const RepPair p = random_irreducible_pair(rng, opt.irr_tol);
        const Mat2 h = random_sl2(rng);
        const Mat2 hi = h.inverse();
        const RepPair q{h * p.xi * hi, h * p.eta * hi};
        const Mat2 g = conjugator(p, q, opt.oracle_tol, 1e-7, opt.irr_tol);
        const Mat2 gi = g.inverse();
        const double res_xi =
            rel(distance(g * p.xi * gi, q.xi), max_abs(q.xi));
        const double res_eta =
            rel(distance(g * p.eta * gi, q.eta), max_abs(q.eta));
        return std::max(res_xi, res_eta);
      }));

  out.push_back(run_check(
      opt, "conjugator-uniqueness", 15, 1e-6, n, [&opt](Rng& rng) {
        const RepPair p = random_irreducible_pair(rng, opt.irr_tol);
        const Mat2 h = random_sl2(rng);
        const Mat2 hi = h.inverse();
        const RepPair q{h * p.xi * hi, h * p.eta * hi};
        const Mat2 g = conjugator(p, q, opt.oracle_tol, 1e-7, opt.irr_tol);
        const double match =
            std::min(distance(g, h), distance(g, -h));
        return rel(match, max_abs(h));
      }));

  out.push_back(run_check(opt, "det-pencil", 16, 1e-10, n, [](Rng& rng) {
    const Mat2 w0{rng.box(), rng.box(), rng.box(), rng.box()};
    const Mat2 k{rng.box(), rng.box(), rng.box(), rng.box()};
    const DetPencil pen = det_pencil(w0, k);
    double worst = 0.0;
    for (double s : {-1.0, 0.5, 2.0}) {
      const Complex direct = (w0 + Complex{s, 0.0} * k).det();
      worst = std::max(
          worst, rel(std::abs(pen.eval({s, 0.0}) - direct), std::abs(direct)));
    }
    return worst;
  }));

  out.push_back(run_check(
      opt, "laurent-symmetrize", 17, 1e-9, n, [](Rng& rng) {
        LaurentPoly f;
        const int top = 1 + static_cast<int>(rng.below(6));
        for (int e = 0; e <= top; ++e) {
          const TracePoly c = random_small_poly(rng);
          f += LaurentPoly::term(e, c);
          if (e > 0) {
            f += LaurentPoly::term(-e, c);
          }
        }
        const TracePoly h = symmetrize_laurent(f);
        Complex zeta = rng.box();
        while (std::abs(zeta) < 0.1) {
          zeta = rng.box();
        }
        const std::map<Var, Complex> base = {
            {Var::x, rng.box()}, {Var::y, rng.box()}, {Var::z, rng.box()}};
        const Complex direct = f.eval(zeta, base);
        std::map<Var, Complex> with_u = base;
        with_u[Var::u] = zeta + 1.0 / zeta;
        return rel(std::abs(direct - h.eval(with_u)), std::abs(direct));
      }));

  return out;
}

std::vector<CheckResult> run_fricke_suite(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  const std::size_t n = opt.trials;

  out.push_back(run_check(opt, "fricke-sum", 31, opt.oracle_tol, n,
                          [](Rng& rng) {
                            const Mat2 a = random_sl2(rng);
                            const Mat2 b = random_sl2(rng);
                            const Mat2 c = random_sl2(rng);
                            const RankThreeChar t = char8(a, b, c);
                            const FrickeResiduals r = verify_fricke(t);
                            return rel(std::abs(r.sum),
                                       quartic(max_trace_mag(t)));
                          }));

  out.push_back(run_check(opt, "fricke-product", 32, opt.oracle_tol, n,
                          [](Rng& rng) {
                            const Mat2 a = random_sl2(rng);
                            const Mat2 b = random_sl2(rng);
                            const Mat2 c = random_sl2(rng);
                            const RankThreeChar t = char8(a, b, c);
                            const FrickeResiduals r = verify_fricke(t);
                            return rel(std::abs(r.product),
                                       quartic(max_trace_mag(t)));
                          }));

  out.push_back(run_check(
      opt, "triple-identity-zxzy", 33, opt.oracle_tol, n, [](Rng& rng) {
        const Mat2 a = random_sl2(rng);  // X
        const Mat2 b = random_sl2(rng);  // Y
        const Mat2 c = random_sl2(rng);  // Z
        const Complex lhs = (c * a * c * b).trace();
        const Complex rhs = (c * a).trace() * (c * b).trace() -
                            (a * b.inverse()).trace();
        const double m =
            std::max({max_abs(a), max_abs(b), max_abs(c)});
        return rel(std::abs(lhs - rhs), quartic(m));
      }));

  out.push_back(run_check(
      opt, "triple-identity-xzxz", 34, opt.oracle_tol, n, [](Rng& rng) {
        const Mat2 a = random_sl2(rng);  // X
        const Mat2 c = random_sl2(rng);  // Z
        const Mat2 ci = c.inverse();
        const Complex lhs = (a * ci * a.inverse() * ci).trace();
        const Complex tzx = (c * a).trace();
        const Complex rhs = a.trace() * c.trace() * tzx - tzx * tzx -
                            a.trace() * a.trace() + 2.0;
        const double m = std::max(max_abs(a), max_abs(c));
        return rel(std::abs(lhs - rhs), quartic(m));
      }));

  out.push_back(run_check(
      opt, "triple-identity-xyzxzy", 35, opt.oracle_tol, n, [](Rng& rng) {
        const Mat2 a = random_sl2(rng);  // X
        const Mat2 b = random_sl2(rng);  // Y
        const Mat2 c = random_sl2(rng);  // Z
        const Complex lhs = (a * b * c * a * c * b).trace();
        const Complex ci_term =
            (a * c.inverse() * a.inverse() * c.inverse()).trace();
        const Complex rhs =
            (a * b).trace() * (c * a * c * b).trace() - ci_term;
        const double m =
            std::max({max_abs(a), max_abs(b), max_abs(c)});
        const double m2 = m * m;
        return rel(std::abs(lhs - rhs), m2 * m2 * m2);
      }));

  out.push_back(run_check(opt, "t123-vieta", 36, 1e-9, n, [](Rng& rng) {
    const SixTuple s = random_six_tuple(rng);
    const auto [r1, r2] = t123_roots(s);
    const Complex p = fricke_sum_value(s);
    const Complex q = fricke_product_value(s);
    const double sum_res = rel(std::abs(r1 + r2 - p), std::abs(p));
    const double prod_res = rel(std::abs(r1 * r2 - q), std::abs(q));
    return std::max(sum_res, prod_res);
  }));

  out.push_back(run_check(
      opt, "lift3-round-trip", 37, 1e-7, n, [&opt](Rng& rng) {
        SixTuple s = random_six_tuple(rng);
        const std::uint64_t kind = rng.below(10);
        if (kind == 0) {
          s.t12 = rng.below(2) == 0 ? 2.0 : -2.0;  // slice singularity
        } else if (kind == 1) {
          // force kappa(t1,t2,t12) = 2 through eigenvalue roots
          Complex a1 = rng.box(), a2 = rng.box();
          while (std::abs(a1) < 0.2) {
            a1 = rng.box();
          }
          while (std::abs(a2) < 0.2) {
            a2 = rng.box();
          }
          s.t1 = a1 + 1.0 / a1;
          s.t2 = a2 + 1.0 / a2;
          s.t12 = rng.below(2) == 0 ? a1 * a2 + 1.0 / (a1 * a2)
                                    : a1 / a2 + a2 / a1;
        }
        const Lift3Result lift = lift_char3(s, opt.irr_tol);
        const RankThreeChar back =
            char8(lift.triple.a1, lift.triple.a2, lift.triple.a3);
        double worst = 0.0;
        const Complex want[6] = {s.t1, s.t2, s.t3, s.t12, s.t23, s.t13};
        const Complex got[6] = {back.t1,  back.t2,  back.t3,
                                back.t12, back.t23, back.t13};
        for (int i = 0; i < 6; ++i) {
          worst = std::max(
              worst, rel(std::abs(got[i] - want[i]), std::abs(want[i])));
        }
        for (const Mat2& m :
             {lift.triple.a1, lift.triple.a2, lift.triple.a3}) {
          worst = std::max(worst, rel(std::abs(m.det() - 1.0), 1.0));
        }
        // t123 of the lift solves the quadratic
        const Complex p = fricke_sum_value(s);
        const Complex q = fricke_product_value(s);
        const Complex lam = back.t123;
        const double root_res =
            rel(std::abs(lam * lam - p * lam + q),
                std::abs(lam * lam) + std::abs(p * lam) + std::abs(q));
        return std::max(worst, root_res);
      }));

  return out;
}

}  // namespace fricke
