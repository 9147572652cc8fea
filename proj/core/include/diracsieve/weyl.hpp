#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "diracsieve/rootdata.hpp"

namespace ds {

/// A Weyl group element: a reduced word in the simple reflections (1-based
/// generator indices, leftmost factor first) together with the image w(rho).
/// rho is regular, so the image determines the element.
struct WeylElement {
  std::vector<int> word;
  Weight rho_image;
};

/// An involution s (s^2 = e) with its fixed-index set
/// I(s) = { i : s(w_i) = w_i } and duality flag under -w0.
struct Involution {
  WeylElement element;
  std::vector<int> fixed_indices;  // 1-based, sorted
  bool self_dual = false;
  std::int32_t index = -1;  // position in the enumeration table
};

struct ICoordsHash {
  std::size_t operator()(const ICoords& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (std::int64_t x : v) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

/// The full Weyl group of a supported root datum, enumerated once as the
/// orbit of rho under the simple reflections (breadth first, generator
/// indices ascending, so reduced words are deterministic).
///
/// Immutable after enumeration; queries are pure and thread-safe.
class WeylGroup {
 public:
  static WeylGroup enumerate(const RootDatum& rd);

  const RootDatum& datum() const { return datum_; }
  std::size_t size() const { return images_.size(); }

  WeylElement identity() const { return element_at(0); }
  WeylElement longest() const { return element_at(longest_); }
  WeylElement element_at(std::int32_t idx) const;

  /// Applies w to a weight: composition of simple reflections in word order
  /// (the rightmost letter acts first).
  Weight apply(const WeylElement& w, const Weight& v) const;

  /// The unique w with w(rho) = v. Throws NotInOrbit otherwise.
  WeylElement element_from_rho_image(const Weight& v) const;
  std::int32_t index_from_rho_image(const Weight& v) const;

  /// ({v}, w) with w v = {v} dominant; ties broken by always reflecting at
  /// the smallest index with a negative coordinate.
  std::pair<Weight, WeylElement> dominant_representative(const Weight& v) const;

  /// -(w0 . v). On the fundamental weights this is a permutation (the
  /// diagram automorphism); the identity when w0 = -1.
  Weight neg_w0(const Weight& v) const;
  const std::array<int, kMaxRank>& neg_w0_perm() const { return negw0_perm_; }

  /// All involutions, e included (I(e) = [l]); enumeration order.
  const std::vector<Involution>& involutions() const { return involutions_; }
  /// The involutions with empty fixed-index set (the scattered families).
  std::vector<Involution> empty_Is_involutions() const;
  std::size_t self_dual_involution_count() const;

  /// s' = w0 s w0, an involution again; equals s iff s is self-dual.
  Involution dual_involution(const Involution& s) const;

  /// Reconstructs an involution from its rho-image (the tables' s rho
  /// column). Throws NotInOrbit / NotAnInvolution.
  Involution involution_from_rho_image(const Weight& v) const;

  // -- integer fast path -----------------------------------------------------
  const ICoords& image_at(std::int32_t idx) const { return images_[idx]; }
  ICoords apply_index(std::int32_t idx, const ICoords& v) const;
  std::int32_t index_of_icoords(const ICoords& v) const;  // -1 if absent
  std::int32_t longest_index() const { return longest_; }
  ICoords neg_w0_icoords(const ICoords& v) const;
  /// Matrix of the element on fundamental-weight coordinates: column j
  /// (0-based) holds the coordinates of w(varpi_{j+1}).
  std::array<ICoords, kMaxRank> matrix_on_weights(std::int32_t idx) const;

 private:
  explicit WeylGroup(RootDatum rd) : datum_(std::move(rd)) {}
  void run_enumeration();
  void compute_involutions();
  std::vector<int> word_of(std::int32_t idx) const;  // 1-based, leftmost first
  Involution make_involution(std::int32_t idx) const;

  RootDatum datum_;
  std::vector<ICoords> images_;
  std::vector<std::int32_t> parent_;
  std::vector<std::int8_t> gen_;  // 0-based generator joining parent -> this
  std::unordered_map<ICoords, std::int32_t, ICoordsHash> index_;
  std::int32_t longest_ = -1;
  std::array<int, kMaxRank> negw0_perm_{};  // neg_w0(w_i) = w_{perm[i]} (0-based)
  std::vector<Involution> involutions_;
  std::vector<std::uint8_t> fixed_mask_;  // per involution: bit i => w_{i+1} fixed
};

}  // namespace ds
