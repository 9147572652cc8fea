#include "diracsieve/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <map>
#include <thread>
#include <unordered_map>

namespace ds {

namespace {

using PencilCache = std::unordered_map<ICoords, std::int64_t, ICoordsHash>;

std::int64_t pencil_cached(const ICoords& mu, const RootDatum& rd, PencilCache& cache) {
  auto it = cache.find(mu);
  if (it != cache.end()) return it->second;
  std::int64_t v = detail::pencil_min_scaled(mu, rd);
  cache.emplace(mu, v);
  return v;
}

// Integer tables for one s-family.
struct FamilyContext {
  const WeylGroup& wg;
  const RootDatum& rd;
  int n;
  std::int32_t s_idx;
  bool is_w0;
  std::array<ICoords, kMaxRank> M;                          // columns of s on varpi-coords
  std::array<std::array<std::int64_t, kMaxRank>, kMaxRank> Q{};   // (I-M)^T Gs (I-M)
  std::array<std::array<std::int64_t, kMaxRank>, kMaxRank> K{};   // I - M (rows)
  std::array<std::array<std::int64_t, kMaxRank>, kMaxRank> IM{};  // I + M (rows)
  bool prunable = true;
  std::int64_t bound = 0;  // m^T Q m <= bound  <=>  ||l - s l||^2 <= ||2 rho||^2

  FamilyContext(const Involution& s, const WeylGroup& group)
      : wg(group), rd(group.datum()), n(group.datum().rank()) {
    s_idx = s.index >= 0 ? s.index : wg.index_from_rho_image(s.element.rho_image);
    ICoords negrho{};
    for (int i = 0; i < n; ++i) negrho[i] = -1;
    is_w0 = wg.image_at(s_idx) == negrho;
    M = wg.matrix_on_weights(s_idx);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        K[i][j] = (i == j ? 1 : 0) - M[j][i];   // row i of I - M
        IM[i][j] = (i == j ? 1 : 0) + M[j][i];  // row i of I + M
      }
    // Q = K^T Gs K, computed columnwise: Q[a][b] = (K e_a, K e_b)_scaled
    std::array<ICoords, kMaxRank> kcol{};
    for (int a = 0; a < n; ++a) {
      ICoords e{};
      e[a] = 1;
      ICoords img = M[a];
      for (int i = 0; i < n; ++i) kcol[a][i] = e[i] - img[i];
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) Q[a][b] = rd.scaled_inner(kcol[a], kcol[b]);
    for (int a = 0; a < n; ++a) {
      if (Q[a][a] <= 0) prunable = false;
      for (int b = 0; b < n; ++b)
        if (a != b && Q[a][b] < 0) prunable = false;
    }
    bound = 4 * rd.scaled_norm_two_rho();
  }

  std::int64_t qval_with_tail_ones(const std::array<std::int64_t, kMaxRank>& m, int depth) const {
    std::int64_t acc = 0;
    std::array<std::int64_t, kMaxRank> v{};
    for (int i = 0; i < n; ++i) v[i] = i < depth ? m[i] : 1;
    for (int i = 0; i < n; ++i) {
      std::int64_t row = 0;
      for (int j = 0; j < n; ++j) row += Q[i][j] * v[j];
      acc += v[i] * row;
    }
    return acc;
  }

  // Membership tests for a full vector m = 2*lambda.
  bool lambda_conditions(const std::array<std::int64_t, kMaxRank>& m, ICoords& t_out,
                         ICoords& a_out) const {
    // (ii) lambda + s lambda integral: (I+M) m even
    for (int i = 0; i < n; ++i) {
      std::int64_t acc = 0;
      for (int j = 0; j < n; ++j) acc += IM[i][j] * m[j];
      if (acc & 1) return false;
      t_out[i] = acc / 2;
    }
    // (iii) root coordinates of lambda - s lambda in N
    ICoords a2{};
    for (int i = 0; i < n; ++i) {
      std::int64_t acc = 0;
      for (int j = 0; j < n; ++j) acc += K[i][j] * m[j];
      a2[i] = acc;
    }
    ICoords rc = rd.root_coords_scaled(a2);
    const std::int64_t mod = 2 * rd.cartan_det();
    for (int i = 0; i < n; ++i) {
      if (rc[i] < 0 || rc[i] % mod != 0) return false;
    }
    for (int i = 0; i < n; ++i) {
      assert((a2[i] & 1) == 0);  // integral: a = C^T(root coords)
      a_out[i] = a2[i] / 2;
    }
    return true;
  }

  // Depth-first enumeration of the half-integer box in lexicographic order.
  // `leaf` receives m = 2*lambda for every member of Lambda(s) within the
  // step-1 norm bound.
  void enumerate(const std::function<void(const std::array<std::int64_t, kMaxRank>&,
                                          const ICoords&, const ICoords&)>& leaf) const {
    std::array<std::int64_t, kMaxRank> m{};
    for (int i = 0; i < n; ++i) m[i] = 1;
    if (prunable) {
      dfs(0, m, leaf);
      return;
    }
    // Fallback: plain box scan with the diagonal bounds (never expected;
    // empty-I(s) forms have positive diagonal and nonnegative cross terms).
    std::array<std::int64_t, kMaxRank> hi{};
    for (int i = 0; i < n; ++i) {
      std::int64_t b = 1;
      while (Q[i][i] * (b + 1) * (b + 1) <= bound) ++b;
      hi[i] = b;
    }
    box_scan(0, m, hi, leaf);
  }

 private:
  void dfs(int k, std::array<std::int64_t, kMaxRank>& m,
           const std::function<void(const std::array<std::int64_t, kMaxRank>&, const ICoords&,
                                    const ICoords&)>& leaf) const {
    for (m[k] = 1;; ++m[k]) {
      const std::int64_t f = qval_with_tail_ones(m, k + 1);
      if (f > bound) break;
      if (k + 1 == n) {
        ICoords t{}, a{};
        if (lambda_conditions(m, t, a)) leaf(m, t, a);
      } else {
        dfs(k + 1, m, leaf);
      }
    }
    m[k] = 1;
  }

  void box_scan(int k, std::array<std::int64_t, kMaxRank>& m,
                const std::array<std::int64_t, kMaxRank>& hi,
                const std::function<void(const std::array<std::int64_t, kMaxRank>&, const ICoords&,
                                         const ICoords&)>& leaf) const {
    for (m[k] = 1; m[k] <= hi[k]; ++m[k]) {
      if (k + 1 == n) {
        if (qval_with_tail_ones(m, n) > bound) continue;
        ICoords t{}, a{};
        if (lambda_conditions(m, t, a)) leaf(m, t, a);
      } else {
        box_scan(k + 1, m, hi, leaf);
      }
    }
    m[k] = 1;
  }
};

Weight halves_to_weight(const RootDatum& rd, const std::array<std::int64_t, kMaxRank>& m) {
  Weight out(rd.rank());
  for (int i = 0; i < rd.rank(); ++i) out[i] = make_ratio(m[i], 2);
  return out;
}

Candidate make_survivor(const FamilyContext& fc, const std::array<std::int64_t, kMaxRank>& m,
                        const ICoords& t, const ICoords& a, const ICoords& mu,
                        std::int64_t n2_scaled, std::int64_t p2_scaled) {
  const RootDatum& rd = fc.rd;
  Candidate c;
  c.s_rho = rd.from_icoords(fc.wg.image_at(fc.s_idx));
  c.lambda = halves_to_weight(rd, m);
  c.mu = rd.from_icoords(mu);
  c.t_param = rd.from_icoords(t);
  c.a_param = rd.from_icoords(a);
  const std::int64_t den = rd.gram_denominator();
  c.delta1 = make_ratio(n2_scaled - detail::spin_norm_sq_scaled(mu, rd), den);
  c.delta2 = make_ratio(n2_scaled - p2_scaled, den);
  c.stage = Stage::step2_survivor;
  return c;
}

FamilyReport run_family_impl(const Involution& s, const WeylGroup& wg, bool step1_count_only,
                             PencilCache& cache) {
  if (!s.fixed_indices.empty())
    throw InfiniteFamily("family of s with I(s) non-empty is infinite (s rho = " +
                         weight_str(s.element.rho_image) + ")");
  FamilyReport rep;
  rep.s = s;
  FamilyContext fc(s, wg);
  const RootDatum& rd = wg.datum();
  ICoords two{};
  for (int i = 0; i < rd.rank(); ++i) two[i] = 2;

  fc.enumerate([&](const std::array<std::int64_t, kMaxRank>& m, const ICoords& t,
                   const ICoords& a) {
    ++rep.step1_count;
    if (step1_count_only) return;
    ICoords mu = t;
    rd.project_dominant_inplace(mu);
    const std::int64_t p2 = pencil_cached(mu, rd, cache);
    std::int64_t n2 = 0;
    {
      ICoords mi{};
      for (int i = 0; i < rd.rank(); ++i) mi[i] = m[i];
      n2 = rd.scaled_inner(mi, mi);
    }
    bool keep = n2 <= p2;
    if (!keep && fc.is_w0) {
      // the trivial representation J(rho, -w0 rho)
      bool is_rho = true;
      for (int i = 0; i < rd.rank(); ++i) is_rho = is_rho && m[i] == 2;
      keep = is_rho;
    }
    if (keep) rep.step2_survivors.push_back(make_survivor(fc, m, t, a, mu, n2, p2));
  });
  if (!step1_count_only) rep.folded_survivors = fold(rep.step2_survivors, wg);
  return rep;
}

bool icoords_lex_less(const ICoords& a, const ICoords& b, int n) {
  for (int i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

}  // namespace

QuadraticForm quadratic_form(const Involution& s, const WeylGroup& wg) {
  const RootDatum& rd = wg.datum();
  const int n = rd.rank();
  std::int32_t idx = s.index >= 0 ? s.index : wg.index_from_rho_image(s.element.rho_image);
  auto M = wg.matrix_on_weights(idx);
  // columns of I - M
  std::vector<Weight> kcol(n, Weight(n, Rational(0)));
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < n; ++i)
      kcol[a][i] = Rational((i == a ? 1 : 0) - static_cast<long>(M[a][i]));
  QuadraticForm q;
  q.matrix.assign(n, std::vector<Rational>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) q.matrix[a][b] = rd.inner(kcol[a], kcol[b]);
  return q;
}

std::vector<Weight> step1_enumerate(const Involution& s, const WeylGroup& wg) {
  if (!s.fixed_indices.empty())
    throw InfiniteFamily("step1_enumerate: I(s) non-empty, Lambda(s) box is infinite");
  FamilyContext fc(s, wg);
  std::vector<Weight> out;
  fc.enumerate([&](const std::array<std::int64_t, kMaxRank>& m, const ICoords&, const ICoords&) {
    out.push_back(halves_to_weight(fc.rd, m));
  });
  return out;
}

std::vector<Candidate> step2_filter(const std::vector<Weight>& lambdas, const Involution& s,
                                    const WeylGroup& wg) {
  const RootDatum& rd = wg.datum();
  FamilyContext fc(s, wg);
  PencilCache cache;
  std::vector<Candidate> out;
  for (const Weight& lam : lambdas) {
    std::array<std::int64_t, kMaxRank> m{};
    for (int i = 0; i < rd.rank(); ++i) {
      Rational two_l = 2 * lam[i];
      if (!is_integer(two_l) || two_l < 1)
        throw DsError("step2_filter: lambda not in the half-integer grid: " + weight_str(lam));
      m[i] = two_l.get_num().get_si();
    }
    ICoords t{}, a{};
    if (!fc.lambda_conditions(m, t, a))
      throw DsError("step2_filter: lambda not in Lambda(s): " + weight_str(lam));
    ICoords mu = t;
    rd.project_dominant_inplace(mu);
    const std::int64_t p2 = pencil_cached(mu, rd, cache);
    ICoords mi{};
    for (int i = 0; i < rd.rank(); ++i) mi[i] = m[i];
    const std::int64_t n2 = rd.scaled_inner(mi, mi);
    bool keep = n2 <= p2;
    if (!keep && fc.is_w0) {
      bool is_rho = true;
      for (int i = 0; i < rd.rank(); ++i) is_rho = is_rho && m[i] == 2;
      keep = is_rho;
    }
    if (keep) out.push_back(make_survivor(fc, m, t, a, mu, n2, p2));
  }
  return out;
}

std::vector<Candidate> fold(const std::vector<Candidate>& cands, const WeylGroup& wg) {
  const int n = wg.datum().rank();
  // group by family, preserving first-seen order
  std::vector<Weight> order;
  std::map<std::vector<std::string>, std::size_t> seen;  // canonical key
  auto key_of = [](const Weight& w) {
    std::vector<std::string> k;
    for (const auto& x : w) k.push_back(rational_str(x));
    return k;
  };
  std::vector<std::vector<Candidate>> groups;
  for (const auto& c : cands) {
    auto k = key_of(c.s_rho);
    auto it = seen.find(k);
    if (it == seen.end()) {
      seen.emplace(k, groups.size());
      groups.emplace_back();
      order.push_back(c.s_rho);
      groups.back().push_back(c);
    } else {
      groups[it->second].push_back(c);
    }
  }
  std::vector<Candidate> out;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const Weight& srho = order[g];
    std::int32_t idx = wg.index_from_rho_image(srho);
    const ICoords& img = wg.image_at(idx);
    ICoords dual_img = wg.neg_w0_icoords(img);
    if (dual_img != img) {
      // non-self-dual family: keep only the lexicographically smaller s rho
      // of a dual pair when both are present
      bool dual_present = seen.count(key_of(wg.datum().from_icoords(dual_img))) > 0;
      if (dual_present && icoords_lex_less(dual_img, img, n)) continue;
      for (auto c : groups[g]) {
        c.starred = true;  // stands for the whole dual pair of families
        out.push_back(std::move(c));
      }
      continue;
    }
    // self-dual family: fold lambda against -w0(lambda)
    for (const auto& c : groups[g]) {
      Weight dual_lambda = wg.neg_w0(c.lambda);
      if (dual_lambda == c.lambda) {
        out.push_back(c);
        continue;
      }
      if (std::lexicographical_compare(dual_lambda.begin(), dual_lambda.end(), c.lambda.begin(),
                                       c.lambda.end())) {
        continue;  // the partner is kept instead
      }
      Candidate kept = c;
      kept.starred = true;
      out.push_back(std::move(kept));
    }
  }
  return out;
}

std::pair<Weight, Weight> zhelobenko_params(const Weight& lambda, const Involution& s,
                                            const WeylGroup& wg) {
  Weight slam = wg.apply(s.element, lambda);
  return {lambda + slam, lambda - slam};
}

Rational delta1(const Weight& lambda, const Involution& s, const WeylGroup& wg) {
  const RootDatum& rd = wg.datum();
  Weight slam = wg.apply(s.element, lambda);
  Weight t = lambda + slam;
  Weight a = lambda - slam;
  Weight mu = rd.dominant_of(t);
  Rational two_l_sq = rd.norm_sq(Rational(2) * lambda);
  Rational d1 = two_l_sq - spin_norm_sq(mu, rd);
  // Identity from the Dirac-inequality analysis:
  //   Delta_1 = ||lambda - s lambda||^2 - g,  g = 2({mu-rho} - (mu-rho), rho)
  Weight mu_rho = mu - rd.rho();
  Weight g_arg = rd.dominant_of(mu_rho) - mu_rho;
  Rational g = 2 * rd.inner(g_arg, rd.rho());
  Rational two_rho_sq = rd.norm_sq(Rational(2) * rd.rho());
  if (d1 != rd.norm_sq(a) - g || g > two_rho_sq)
    throw DsError("delta1 identity violated for lambda = " + weight_str(lambda));
  return d1;
}

FamilyReport run_family(const Involution& s, const WeylGroup& wg, bool step1_count_only) {
  PencilCache cache;
  return run_family_impl(s, wg, step1_count_only, cache);
}

std::vector<FamilyReport> run_all_families(const WeylGroup& wg, const RunOptions& opts) {
  const int n = wg.datum().rank();
  std::vector<Involution> reps;
  for (const auto& s : wg.empty_Is_involutions()) {
    const ICoords& img = wg.image_at(s.index);
    ICoords dual = wg.neg_w0_icoords(img);
    if (dual != img && icoords_lex_less(dual, img, n)) continue;  // dual family kept
    reps.push_back(s);
  }
  std::sort(reps.begin(), reps.end(), [&](const Involution& a, const Involution& b) {
    return icoords_lex_less(wg.image_at(a.index), wg.image_at(b.index), n);
  });

  std::vector<FamilyReport> out(reps.size());
  int jobs = opts.jobs > 0 ? opts.jobs : static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  jobs = std::min<int>(jobs, static_cast<int>(reps.size() ? reps.size() : 1));

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    PencilCache cache;  // shared across this worker's families
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= reps.size()) break;
      out[i] = run_family_impl(reps[i], wg, opts.step1_count_only, cache);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return out;
}

}  // namespace ds
