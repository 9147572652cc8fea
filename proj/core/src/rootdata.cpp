#include "diracsieve/rootdata.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace ds {

namespace {

using QMatrix = std::vector<std::vector<Rational>>;

// Gram matrix of the simple roots, normalized so long roots have (a,a)=2,
// assembled from the Dynkin diagram. Bourbaki numbering throughout.
QMatrix simple_root_gram(const TypeLabel& t) {
  const int n = t.rank;
  QMatrix s(n, std::vector<Rational>(n, Rational(0)));
  auto bond = [&](int i, int j, const Rational& v) {
    s[i - 1][j - 1] = v;
    s[j - 1][i - 1] = v;
  };
  switch (t.family) {
    case Family::A:
      for (int i = 1; i <= n; ++i) s[i - 1][i - 1] = 2;
      for (int i = 1; i < n; ++i) bond(i, i + 1, Rational(-1));
      break;
    case Family::B:  // alpha_n short
      for (int i = 1; i <= n; ++i) s[i - 1][i - 1] = 2;
      s[n - 1][n - 1] = 1;
      for (int i = 1; i < n; ++i) bond(i, i + 1, Rational(-1));
      break;
    case Family::C:  // alpha_n long
      for (int i = 1; i <= n; ++i) s[i - 1][i - 1] = 1;
      s[n - 1][n - 1] = 2;
      for (int i = 1; i + 1 < n; ++i) bond(i, i + 1, Rational(-1, 2));
      bond(n - 1, n, Rational(-1));
      break;
    case Family::D:  // fork at alpha_{n-2}
      for (int i = 1; i <= n; ++i) s[i - 1][i - 1] = 2;
      for (int i = 1; i + 2 < n; ++i) bond(i, i + 1, Rational(-1));
      bond(n - 2, n - 1, Rational(-1));
      bond(n - 2, n, Rational(-1));
      break;
    case Family::E:  // E6: chain 1-3-4-5-6, node 2 on node 4
      for (int i = 1; i <= n; ++i) s[i - 1][i - 1] = 2;
      bond(1, 3, Rational(-1));
      bond(3, 4, Rational(-1));
      bond(4, 5, Rational(-1));
      bond(5, 6, Rational(-1));
      bond(2, 4, Rational(-1));
      break;
    case Family::F:  // 1,2 long; 3,4 short
      s[0][0] = s[1][1] = 2;
      s[2][2] = s[3][3] = 1;
      bond(1, 2, Rational(-1));
      bond(2, 3, Rational(-1));
      bond(3, 4, Rational(-1, 2));
      break;
    case Family::G:  // alpha_1 short, alpha_2 long
      s[0][0] = Rational(2, 3);
      s[1][1] = 2;
      bond(1, 2, Rational(-1));
      break;
  }
  return s;
}

// Exact Gauss-Jordan inverse of a small rational matrix.
QMatrix invert(const QMatrix& m) {
  const int n = static_cast<int>(m.size());
  QMatrix a(n, std::vector<Rational>(2 * n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int p = col;
    while (p < n && a[p][col] == 0) ++p;
    assert(p < n && "singular matrix");
    std::swap(a[col], a[p]);
    Rational piv = a[col][col];
    for (auto& x : a[col]) x /= piv;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  QMatrix inv(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / std::gcd(a, b) * b; }

std::int64_t to_i64(const Rational& q) {
  assert(q.get_den() == 1);
  assert(q.get_num().fits_slong_p());
  return q.get_num().get_si();
}

}  // namespace

RootDatum::RootDatum(TypeLabel label) : RootDatum(label, Rational(1)) {}

RootDatum RootDatum::with_form_scale(TypeLabel label, const Rational& scale) {
  if (scale <= 0) throw DsError("form scale must be positive");
  return RootDatum(label, scale);
}

RootDatum::RootDatum(TypeLabel label, const Rational& scale) : label_(label), rank_(label.rank) {
  const int n = rank_;
  QMatrix s = simple_root_gram(label_);
  half_lengths_.resize(n);
  for (int j = 0; j < n; ++j) half_lengths_[j] = s[j][j] / 2;

  // pairing(i,j) = 2 (a_i, a_j) / (a_j, a_j); integer by crystallographic axiom
  QMatrix cq(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cq[i][j] = s[i][j] / half_lengths_[j];
      assert(is_integer(cq[i][j]));
      cartan_[i][j] = to_i64(cq[i][j]);
    }

  cartan_inv_ = invert(cq);
  // gram = C^{-1} diag(d) * scale, symmetric positive definite
  gram_.assign(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram_[i][j] = cartan_inv_[i][j] * half_lengths_[j] * scale;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) assert(gram_[i][j] == gram_[j][i]);

  gram_den_ = 1;
  for (const auto& row : gram_)
    for (const auto& x : row) gram_den_ = lcm64(gram_den_, to_i64(Rational(x.get_den())));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram_scaled_[i][j] = to_i64(gram_[i][j] * gram_den_);

  // det(C) and adj(C^T) = det(C) * (C^T)^{-1}; det(C) > 0 for all Cartan matrices
  Rational det(1);
  {
    QMatrix a = cq;
    for (int col = 0; col < n; ++col) {
      int p = col;
      while (p < n && a[p][col] == 0) ++p;
      assert(p < n);
      if (p != col) {
        std::swap(a[col], a[p]);
        det = -det;
      }
      det *= a[col][col];
      for (int r = col + 1; r < n; ++r) {
        if (a[r][col] == 0) continue;
        Rational f = a[r][col] / a[col][col];
        for (int j = col; j < n; ++j) a[r][j] -= f * a[col][j];
      }
    }
  }
  assert(det > 0 && is_integer(det));
  cartan_det_ = to_i64(det);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational v = cartan_inv_[j][i] * det;  // adj(C^T) = det * (C^{-1})^T
      assert(is_integer(v));
      adjT_[i][j] = to_i64(v);
    }

  rho_i_.fill(0);
  for (int i = 0; i < n; ++i) rho_i_[i] = 1;

  // highest root: the dominant conjugate of any long simple root
  {
    int long_idx = 0;
    for (int j = 0; j < n; ++j)
      if (half_lengths_[j] == 1) {
        long_idx = j;
        break;
      }
    ICoords b{};
    for (int j = 0; j < n; ++j) b[j] = cartan_[long_idx][j];
    project_dominant_inplace(b);
    beta_i_ = b;
  }

  ICoords two_rho{};
  for (int i = 0; i < n; ++i) two_rho[i] = 2;
  two_rho_nsq_scaled_ = scaled_inner(two_rho, two_rho);
}

std::int64_t RootDatum::pairing(int i, int j) const {
  if (i < 1 || i > rank_ || j < 1 || j > rank_)
    throw IndexOutOfRange("pairing index out of range");
  return cartan_[i - 1][j - 1];
}

Weight RootDatum::rho() const { return Weight(rank_, Rational(1)); }

Weight RootDatum::highest_root() const { return from_icoords(beta_i_); }

Weight RootDatum::simple_root(int i) const {
  if (i < 1 || i > rank_) throw IndexOutOfRange("simple root index out of range");
  Weight out(rank_);
  for (int j = 0; j < rank_; ++j) out[j] = Rational(cartan_[i - 1][j]);
  return out;
}

void RootDatum::check_dim(const Weight& v, const char* where) const {
  if (static_cast<int>(v.size()) != rank_)
    throw DimensionMismatch(std::string(where) + ": expected length " + std::to_string(rank_));
}

Rational RootDatum::inner(const Weight& v, const Weight& w) const {
  check_dim(v, "inner");
  check_dim(w, "inner");
  Rational acc(0);
  for (int i = 0; i < rank_; ++i) {
    if (v[i] == 0) continue;
    Rational row(0);
    for (int j = 0; j < rank_; ++j) row += gram_[i][j] * w[j];
    acc += v[i] * row;
  }
  return acc;
}

Rational RootDatum::norm_sq(const Weight& v) const { return inner(v, v); }

std::vector<Rational> RootDatum::root_coords(const Weight& v) const {
  check_dim(v, "root_coords");
  // v = C^T c  =>  c = (C^{-1})^T v
  std::vector<Rational> c(rank_, Rational(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) c[i] += cartan_inv_[j][i] * v[j];
  return c;
}

bool RootDatum::is_dominant(const Weight& v) const {
  check_dim(v, "is_dominant");
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x >= 0; });
}

bool RootDatum::is_integral(const Weight& v) const {
  check_dim(v, "is_integral");
  return weight_is_integral(v);
}

bool RootDatum::is_regular(const Weight& v) const {
  Weight d = dominant_of(v);
  return std::all_of(d.begin(), d.end(), [](const Rational& x) { return x > 0; });
}

Weight RootDatum::simple_reflection_apply(int i, const Weight& v) const {
  if (i < 1 || i > rank_) throw IndexOutOfRange("reflection index out of range");
  check_dim(v, "simple_reflection_apply");
  Weight out = v;
  const Rational& vi = v[i - 1];
  if (vi == 0) return out;
  for (int j = 0; j < rank_; ++j)
    if (cartan_[i - 1][j] != 0) out[j] -= vi * cartan_[i - 1][j];
  return out;
}

Weight RootDatum::dominant_of(const Weight& v, std::vector<int>* word) const {
  check_dim(v, "dominant_of");
  Weight w = v;
  // Reflect at the smallest index with a negative coordinate until dominant.
  for (;;) {
    int neg = -1;
    for (int i = 0; i < rank_; ++i)
      if (w[i] < 0) {
        neg = i;
        break;
      }
    if (neg < 0) return w;
    const Rational vi = w[neg];
    for (int j = 0; j < rank_; ++j)
      if (cartan_[neg][j] != 0) w[j] -= vi * cartan_[neg][j];
    if (word) word->push_back(neg + 1);
  }
}

void RootDatum::refl_inplace(int i0, ICoords& v) const {
  const std::int64_t vi = v[i0];
  if (vi == 0) return;
  for (int j = 0; j < rank_; ++j) {
    const std::int64_t c = cartan_[i0][j];
    if (c != 0) v[j] -= vi * c;
  }
}

void RootDatum::project_dominant_inplace(ICoords& v) const {
  for (;;) {
    int neg = -1;
    for (int i = 0; i < rank_; ++i)
      if (v[i] < 0) {
        neg = i;
        break;
      }
    if (neg < 0) return;
    refl_inplace(neg, v);
  }
}

std::int64_t RootDatum::scaled_inner(const ICoords& v, const ICoords& w) const {
  std::int64_t acc = 0;
  for (int i = 0; i < rank_; ++i) {
    if (v[i] == 0) continue;
    std::int64_t row = 0;
    for (int j = 0; j < rank_; ++j) row += gram_scaled_[i][j] * w[j];
    acc += v[i] * row;
  }
  return acc;
}

ICoords RootDatum::root_coords_scaled(const ICoords& v) const {
  ICoords c{};
  for (int i = 0; i < rank_; ++i) {
    std::int64_t acc = 0;
    for (int j = 0; j < rank_; ++j) acc += adjT_[i][j] * v[j];
    c[i] = acc;
  }
  return c;
}

Weight RootDatum::from_icoords(const ICoords& v) const {
  Weight out(rank_);
  for (int i = 0; i < rank_; ++i) out[i] = Rational(static_cast<long>(v[i]));
  return out;
}

std::optional<ICoords> RootDatum::to_icoords(const Weight& v) const {
  check_dim(v, "to_icoords");
  ICoords out{};
  for (int i = 0; i < rank_; ++i) {
    if (!is_integer(v[i]) || !v[i].get_num().fits_slong_p()) return std::nullopt;
    out[i] = v[i].get_num().get_si();
  }
  return out;
}

}  // namespace ds
