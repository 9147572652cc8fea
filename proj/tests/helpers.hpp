#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "diracsieve/catalog.hpp"
#include "diracsieve/weyl.hpp"

namespace ds::testing {

inline const RootDatum& datum(const std::string& label) {
  static std::map<std::string, RootDatum> cache;
  auto it = cache.find(label);
  if (it == cache.end()) it = cache.emplace(label, RootDatum(TypeLabel::parse(label))).first;
  return it->second;
}

inline const WeylGroup& group(const std::string& label) {
  static std::map<std::string, WeylGroup> cache;
  auto it = cache.find(label);
  if (it == cache.end())
    it = cache.emplace(label, WeylGroup::enumerate(datum(label))).first;
  return it->second;
}

inline Weight wt(const std::string& bracketed) { return parse_weight(bracketed); }

/// Random weight with integer coordinates in [-hi, hi].
inline Weight random_int_weight(const RootDatum& rd, std::mt19937_64& rng, int hi = 9) {
  std::uniform_int_distribution<int> d(-hi, hi);
  Weight v(rd.rank());
  for (auto& x : v) x = d(rng);
  return v;
}

/// Random weight with coordinates in (1/2)P up to hi/2.
inline Weight random_half_positive_weight(const RootDatum& rd, std::mt19937_64& rng, int hi = 8) {
  std::uniform_int_distribution<int> d(1, hi);
  Weight v(rd.rank());
  for (auto& x : v) x = make_ratio(d(rng), 2);
  return v;
}

// ---------------------------------------------------------------------------
// Exact-rational LP feasibility: is `target` a convex combination of `points`?
// Phase-1 simplex with Bland's rule; independent of the library's u-small test.
// ---------------------------------------------------------------------------
inline bool in_convex_hull(const std::vector<Weight>& points, const Weight& target) {
  const std::size_t m = target.size() + 1;  // equality rows: coordinates + sum = 1
  const std::size_t n = points.size();
  // tableau rows: [A | I_artificial | b], minimize sum of artificials
  std::vector<std::vector<Rational>> tab(m, std::vector<Rational>(n + m + 1, Rational(0)));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c)
      tab[r][c] = r + 1 == m ? Rational(1) : points[c][r];
    tab[r][n + r] = 1;
    tab[r][n + m] = r + 1 == m ? Rational(1) : target[r];
    if (tab[r][n + m] < 0)
      for (auto& x : tab[r]) x = -x;
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) basis[r] = n + r;
  // phase-1 objective w = sum of artificials, canonicalized against the
  // starting basis: reduced costs live on the original columns only
  std::vector<Rational> obj(n + m + 1, Rational(0));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) obj[c] += tab[r][c];
    obj[n + m] += tab[r][n + m];
  }

  for (;;) {
    std::size_t pivot_col = n + m;
    for (std::size_t c = 0; c < n + m; ++c)
      if (obj[c] > 0) {  // entering variable improves the phase-1 objective
        pivot_col = c;
        break;           // Bland: smallest index
      }
    if (pivot_col == n + m) break;
    std::size_t pivot_row = m;
    Rational best;
    for (std::size_t r = 0; r < m; ++r) {
      if (tab[r][pivot_col] <= 0) continue;
      Rational ratio = tab[r][n + m] / tab[r][pivot_col];
      if (pivot_row == m || ratio < best ||
          (ratio == best && basis[r] < basis[pivot_row])) {
        pivot_row = r;
        best = ratio;
      }
    }
    if (pivot_row == m) break;  // unbounded: cannot happen in phase 1
    Rational piv = tab[pivot_row][pivot_col];
    for (auto& x : tab[pivot_row]) x /= piv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == pivot_row || tab[r][pivot_col] == 0) continue;
      Rational f = tab[r][pivot_col];
      for (std::size_t c = 0; c <= n + m; ++c) tab[r][c] -= f * tab[pivot_row][c];
    }
    Rational fo = obj[pivot_col];
    for (std::size_t c = 0; c <= n + m; ++c) obj[c] -= fo * tab[pivot_row][c];
    basis[pivot_row] = pivot_col;
  }
  return obj[n + m] == 0;  // feasible iff all artificials drove to zero
}

/// The W-orbit of 2*rho (vertices of the u-small hull).
inline std::vector<Weight> two_rho_orbit(const WeylGroup& wg) {
  std::vector<Weight> out;
  out.reserve(wg.size());
  for (std::size_t i = 0; i < wg.size(); ++i) {
    ICoords v = wg.image_at(static_cast<std::int32_t>(i));
    Weight w(wg.datum().rank());
    for (int j = 0; j < wg.datum().rank(); ++j) w[j] = Rational(2 * static_cast<long>(v[j]));
    out.push_back(std::move(w));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Naive Lambda(s) box enumeration: full half-integer box from the diagonal
// bounds, membership via the public rational-arithmetic operations only.
// ---------------------------------------------------------------------------
inline std::vector<Weight> naive_step1(const Involution& s, const WeylGroup& wg) {
  const RootDatum& rd = wg.datum();
  const int n = rd.rank();
  QuadraticForm q = quadratic_form(s, wg);
  Rational two_rho_sq = rd.norm_sq(Rational(2) * rd.rho());
  std::vector<int> hi(n);  // bounds on 2*lambda_i
  for (int i = 0; i < n; ++i) {
    int b = 1;
    while (q.matrix[i][i] * make_ratio((b + 1) * (b + 1), 4) <= two_rho_sq) ++b;
    hi[i] = b;
  }
  std::vector<Weight> out;
  std::vector<int> m(n, 1);
  for (;;) {
    Weight lam(n);
    for (int i = 0; i < n; ++i) lam[i] = make_ratio(m[i], 2);
    Weight slam = wg.apply(s.element, lam);
    Weight diff = lam - slam;
    bool ok = weight_is_integral(lam + slam);
    if (ok)
      for (const auto& c : rd.root_coords(diff))
        if (!is_integer(c) || c < 0) ok = false;
    if (ok && rd.norm_sq(diff) <= two_rho_sq) out.push_back(lam);
    int k = n - 1;
    while (k >= 0 && m[k] == hi[k]) m[k--] = 1;
    if (k < 0) break;
    ++m[k];
  }
  return out;
}

inline std::string data_dir() {
#ifdef DS_DATA_DIR
  return DS_DATA_DIR;
#else
  return "data/catalogs";
#endif
}

inline std::vector<ScatteredEntry> shipped_catalog(const std::string& type) {
  std::string f = type;
  for (auto& c : f) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return load_catalog(data_dir() + "/" + f + ".json");
}

}  // namespace ds::testing
