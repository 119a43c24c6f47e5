#pragma once

#include <cstddef>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "fricke/polynomial.hpp"
#include "fricke/words.hpp"

namespace fricke {

/// Memoized trace-polynomial calculator for rank-2 words.
///
/// trace_poly(w) is the unique integer polynomial f_w with
/// tr w(xi,eta) = f_w(tr xi, tr eta, tr xi*eta) for all xi,eta in SL(2,C).
/// The recursion eliminates inverse symbols first (rotate the first inverse
/// symbol to the end and apply tr(vS^-1) = tr(v)tr(S) - tr(vS)), then splits
/// positive words at the first repeated generator, X before Y, at its first
/// two occurrences (tr(u1 u2) = tr(u1)tr(u2) - tr(u1 u2^-1), cancelling at
/// the junction). Both rules descend in (length, inverse-symbol count), so
/// the recursion terminates; the fixed rotation/split choices make memo
/// contents reproducible.
///
/// Entries are keyed by canonical_trace_key, so conjugate and inverse words
/// share one entry. Lookups and inserts are individually locked; results are
/// value-deterministic, hence independent of interleaving.
class TraceTable {
 public:
  /// cap: maximum number of memo entries (insertions beyond it are dropped);
  /// 0 disables memoization entirely.
  explicit TraceTable(std::optional<std::size_t> cap = std::nullopt)
      : cap_(cap) {}

  TracePoly trace_poly(const Word& w);

  std::size_t size() const;

 private:
  TracePoly compute_word(const Word& w);
  TracePoly compute_core(const Word& core);

  std::optional<TracePoly> lookup(const std::string& key) const;
  void store(const std::string& key, const TracePoly& value);

  mutable std::mutex mutex_;
  std::optional<std::size_t> cap_;
  std::unordered_map<std::string, TracePoly> memo_;
};

/// One-shot convenience (fresh table per call).
TracePoly trace_poly(const Word& w);

/// kappa(x,y,z) = x^2 + y^2 + z^2 - x*y*z - 2, the commutator trace.
TracePoly kappa_poly();

/// Right-hand sides of the two rank-3 trace relations, in t1..t13:
///   t123 + t132 = t12*t3 + t23*t1 + t13*t2 - t1*t2*t3
///   t123 * t132 = (t1^2+t2^2+t3^2) + (t12^2+t23^2+t13^2)
///                 - (t1*t2*t12 + t2*t3*t23 + t3*t1*t13) + t12*t23*t13 - 4
/// Signs are pinned by the identity representation (all eight traces 2):
/// the sum must be 4 = 4+4+4-8 and the product 4 = 12+12-24+8-4 there.
TracePoly fricke_sum_rhs();
TracePoly fricke_product_rhs();

}  // namespace fricke
