#pragma once

#include <vector>

#include "diracsieve/rootdata.hpp"

namespace ds {

/// A K-type, identified with its dominant integral highest weight.
using KType = Weight;

/// Result of minimizing the spin norm along the Vogan pencil
/// P(delta) = { delta + n*beta : n in N }.
struct PencilReport {
  KType delta;
  Rational p_delta_sq;        // P_delta^2
  int argmin_n = 0;           // smallest n attaining the minimum
  std::vector<int> usmall_range;  // the n examined (initial u-small segment)
};

/// ||delta||_spin^2 = || {delta - rho} + rho ||^2. Throws NotDominantIntegral.
Rational spin_norm_sq(const KType& delta, const RootDatum& rd);

/// True iff delta lies in the convex hull of the W-orbit of 2*rho; for
/// dominant delta this is equivalent to 2*rho - delta being a nonnegative
/// rational combination of simple roots. Throws NotDominant.
bool is_u_small(const KType& delta, const RootDatum& rd);

/// Spin-norm minimum over the pencil, per the two-branch rule: if delta is
/// not u-small the minimum is at n = 0; otherwise minimize over the initial
/// u-small segment (the hull is convex, so the pencil never re-enters).
PencilReport pencil_min(const KType& delta, const RootDatum& rd);

namespace detail {
/// Scaled-integer spin norm: gram_denominator() * ||delta||_spin^2.
std::int64_t spin_norm_sq_scaled(const ICoords& delta, const RootDatum& rd);
/// Scaled-integer pencil minimum for dominant integral delta.
std::int64_t pencil_min_scaled(const ICoords& delta, const RootDatum& rd);
bool is_u_small_i(const ICoords& delta, const RootDatum& rd);
}  // namespace detail

}  // namespace ds
