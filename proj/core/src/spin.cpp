#include "diracsieve/spin.hpp"

#include <cassert>

namespace ds {

namespace {

ICoords require_dominant_integral(const KType& delta, const RootDatum& rd, const char* op) {
  if (static_cast<int>(delta.size()) != rd.rank())
    throw DimensionMismatch(std::string(op) + ": wrong weight length");
  auto iv = rd.to_icoords(delta);
  if (!iv) throw NotDominantIntegral(std::string(op) + ": " + weight_str(delta) + " is not integral");
  for (int i = 0; i < rd.rank(); ++i)
    if ((*iv)[i] < 0)
      throw NotDominantIntegral(std::string(op) + ": " + weight_str(delta) + " is not dominant");
  return *iv;
}

}  // namespace

namespace detail {

std::int64_t spin_norm_sq_scaled(const ICoords& delta, const RootDatum& rd) {
  ICoords v = delta;
  for (int i = 0; i < rd.rank(); ++i) v[i] -= 1;  // delta - rho
  rd.project_dominant_inplace(v);
  for (int i = 0; i < rd.rank(); ++i) v[i] += 1;  // {delta - rho} + rho
  return rd.scaled_inner(v, v);
}

bool is_u_small_i(const ICoords& delta, const RootDatum& rd) {
  ICoords diff{};
  for (int i = 0; i < rd.rank(); ++i) diff[i] = 2 - delta[i];  // 2*rho - delta
  ICoords rc = rd.root_coords_scaled(diff);                    // det(C) > 0
  for (int i = 0; i < rd.rank(); ++i)
    if (rc[i] < 0) return false;
  return true;
}

std::int64_t pencil_min_scaled(const ICoords& delta, const RootDatum& rd) {
  if (!is_u_small_i(delta, rd)) return spin_norm_sq_scaled(delta, rd);
  const ICoords& beta = rd.highest_root_i();
  // Defensive cap; the pencil leaves the (convex) u-small region before this.
  std::int64_t cap = 0;
  {
    ICoords rc = rd.root_coords_scaled(rd.rho_i());
    for (int i = 0; i < rd.rank(); ++i) cap += 2 * rc[i];
    cap = cap / rd.cartan_det() + 1;
  }
  ICoords v = delta;
  std::int64_t best = -1;
  for (std::int64_t n = 0; n <= cap; ++n) {
    if (!is_u_small_i(v, rd)) break;
    std::int64_t s = spin_norm_sq_scaled(v, rd);
    if (best < 0 || s < best) best = s;
    for (int i = 0; i < rd.rank(); ++i) v[i] += beta[i];
  }
  assert(best >= 0);
  return best;
}

}  // namespace detail

Rational spin_norm_sq(const KType& delta, const RootDatum& rd) {
  ICoords iv = require_dominant_integral(delta, rd, "spin_norm_sq");
  return make_ratio(detail::spin_norm_sq_scaled(iv, rd), rd.gram_denominator());
}

bool is_u_small(const KType& delta, const RootDatum& rd) {
  if (static_cast<int>(delta.size()) != rd.rank())
    throw DimensionMismatch("is_u_small: wrong weight length");
  if (!rd.is_dominant(delta))
    throw NotDominant("is_u_small: " + weight_str(delta) + " is not dominant");
  // Rational path (delta need not be integral here).
  Weight two_rho = Rational(2) * rd.rho();
  auto rc = rd.root_coords(two_rho - delta);
  for (const auto& c : rc)
    if (c < 0) return false;
  return true;
}

PencilReport pencil_min(const KType& delta, const RootDatum& rd) {
  ICoords iv = require_dominant_integral(delta, rd, "pencil_min");
  PencilReport rep;
  rep.delta = delta;
  const std::int64_t den = rd.gram_denominator();

  if (!detail::is_u_small_i(iv, rd)) {
    rep.p_delta_sq = make_ratio(detail::spin_norm_sq_scaled(iv, rd), den);
    rep.argmin_n = 0;
    rep.usmall_range = {0};
    return rep;
  }
  const ICoords& beta = rd.highest_root_i();
  ICoords v = iv;
  std::int64_t best = -1;
  int best_n = 0;
  std::int64_t cap = 0;
  {
    ICoords rc = rd.root_coords_scaled(rd.rho_i());
    for (int i = 0; i < rd.rank(); ++i) cap += 2 * rc[i];
    cap = cap / rd.cartan_det() + 1;
  }
  for (int n = 0; n <= cap; ++n) {
    if (!detail::is_u_small_i(v, rd)) break;
    rep.usmall_range.push_back(n);
    std::int64_t s = detail::spin_norm_sq_scaled(v, rd);
    if (best < 0 || s < best) {
      best = s;
      best_n = n;
    }
    for (int i = 0; i < rd.rank(); ++i) v[i] += beta[i];
  }
  rep.p_delta_sq = make_ratio(best, den);
  rep.argmin_n = best_n;
  return rep;
}

}  // namespace ds
