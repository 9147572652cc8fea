#pragma once

#include <optional>
#include <vector>

#include "diracsieve/types.hpp"

namespace ds {

/// Exact root-system data for one of the supported simple types, with the
/// invariant form normalized so that long roots have squared length 2.
///
/// Conventions (used by every module):
///   * Bourbaki numbering of simple roots. For E6 the diagram is the chain
///     1-3-4-5-6 with node 2 attached to node 4.
///   * pairing(i,j) = <alpha_i, alpha_j^vee>, and the i-th simple root has
///     fundamental-weight coordinates (pairing(i,1),...,pairing(i,l)).
///   * Generator/coordinate indices in the public interface are 1-based.
///
/// Immutable after construction; all operations are pure and safe to share
/// across threads.
class RootDatum {
 public:
  explicit RootDatum(TypeLabel label);

  /// Test-only variant: same datum with the invariant form multiplied by a
  /// positive rational. Every boolean decision in the library is a
  /// comparison of two norms under the same form, so no observable output
  /// may change. Used by the scale-invariance property suite.
  static RootDatum with_form_scale(TypeLabel label, const Rational& scale);

  const TypeLabel& label() const { return label_; }
  int rank() const { return rank_; }

  /// pairing(i,j) = <alpha_i, alpha_j^vee>, 1-based.
  std::int64_t pairing(int i, int j) const;

  const std::vector<std::vector<Rational>>& cartan_inverse() const { return cartan_inv_; }
  /// gram(i,j) = (w_i, w_j) under the invariant form.
  const std::vector<std::vector<Rational>>& gram() const { return gram_; }

  Weight rho() const;           // [1,...,1]
  Weight highest_root() const;  // beta, dominant long root
  Weight simple_root(int i) const;  // 1-based; throws IndexOutOfRange
  Weight zero() const { return Weight(rank_, Rational(0)); }

  Rational inner(const Weight& v, const Weight& w) const;
  Rational norm_sq(const Weight& v) const;

  /// Coordinates c with v = sum_i c_i alpha_i (exact Cartan-system solve).
  std::vector<Rational> root_coords(const Weight& v) const;

  bool is_dominant(const Weight& v) const;
  bool is_integral(const Weight& v) const;
  /// True iff no Weyl conjugate of v has a zero coordinate, equivalently the
  /// dominant conjugate of v has all coordinates > 0.
  bool is_regular(const Weight& v) const;

  /// s_i(v) = v - v_i * alpha_i. 1-based; throws IndexOutOfRange.
  Weight simple_reflection_apply(int i, const Weight& v) const;

  /// Unique dominant W-conjugate of v. When `word` is non-null, the applied
  /// reflection indices are appended so that (s_{w_k}...s_{w_1}) v is the
  /// result, i.e. *word lists them innermost first.
  Weight dominant_of(const Weight& v, std::vector<int>* word = nullptr) const;

  // -- integer fast path (exact; used by the enumeration/sieve internals) --

  /// Simple reflection on an integer coordinate vector.
  void refl_inplace(int i0, ICoords& v) const;  // 0-based index
  /// Dominance projection on integer vectors.
  void project_dominant_inplace(ICoords& v) const;
  /// den * (v,w) as an integer (den = common denominator of the gram matrix).
  std::int64_t scaled_inner(const ICoords& v, const ICoords& w) const;
  std::int64_t gram_denominator() const { return gram_den_; }
  /// adjugate(C^T) * v; root coordinates scaled by det(C) > 0.
  ICoords root_coords_scaled(const ICoords& v) const;
  std::int64_t cartan_det() const { return cartan_det_; }
  const ICoords& rho_i() const { return rho_i_; }
  const ICoords& highest_root_i() const { return beta_i_; }
  std::int64_t scaled_norm_two_rho() const { return two_rho_nsq_scaled_; }

  Weight from_icoords(const ICoords& v) const;
  std::optional<ICoords> to_icoords(const Weight& v) const;  // integral weights only

 private:
  RootDatum(TypeLabel label, const Rational& scale);
  void check_dim(const Weight& v, const char* where) const;

  TypeLabel label_;
  int rank_;
  std::array<std::array<std::int64_t, kMaxRank>, kMaxRank> cartan_{};
  std::vector<std::vector<Rational>> cartan_inv_;
  std::vector<std::vector<Rational>> gram_;
  std::vector<Rational> half_lengths_;  // d_j = (alpha_j, alpha_j)/2

  // integer tables
  std::int64_t gram_den_ = 1;
  std::array<std::array<std::int64_t, kMaxRank>, kMaxRank> gram_scaled_{};
  std::int64_t cartan_det_ = 1;
  std::array<std::array<std::int64_t, kMaxRank>, kMaxRank> adjT_{};  // adj(C^T)
  ICoords rho_i_{};
  ICoords beta_i_{};
  std::int64_t two_rho_nsq_scaled_ = 0;
};

}  // namespace ds
