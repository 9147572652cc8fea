#include "diracsieve/weyl.hpp"

#include <algorithm>
#include <cassert>

namespace ds {

WeylGroup WeylGroup::enumerate(const RootDatum& rd) {
  WeylGroup g(rd);
  g.run_enumeration();
  g.compute_involutions();
  return g;
}

void WeylGroup::run_enumeration() {
  const int n = datum_.rank();
  ICoords rho{};
  for (int i = 0; i < n; ++i) rho[i] = 1;

  images_.push_back(rho);
  parent_.push_back(-1);
  gen_.push_back(-1);
  index_.emplace(rho, 0);

  // Breadth-first closure of {rho}; levels are word lengths, so the parent
  // chains are reduced words.
  for (std::size_t head = 0; head < images_.size(); ++head) {
    const ICoords v = images_[head];
    for (int i = 0; i < n; ++i) {
      ICoords w = v;
      datum_.refl_inplace(i, w);
      auto [it, inserted] = index_.emplace(w, static_cast<std::int32_t>(images_.size()));
      if (inserted) {
        images_.push_back(w);
        parent_.push_back(static_cast<std::int32_t>(head));
        gen_.push_back(static_cast<std::int8_t>(i));
      }
    }
  }

  ICoords negrho{};
  for (int i = 0; i < n; ++i) negrho[i] = -1;
  auto it = index_.find(negrho);
  assert(it != index_.end());
  longest_ = it->second;

  // -w0 acts on the fundamental weights as a permutation.
  for (int i = 0; i < n; ++i) {
    ICoords e{};
    e[i] = 1;
    ICoords img = apply_index(longest_, e);
    int pos = -1;
    for (int j = 0; j < n; ++j) {
      if (img[j] == -1) {
        assert(pos == -1);
        pos = j;
      } else {
        assert(img[j] == 0);
      }
    }
    assert(pos >= 0);
    negw0_perm_[i] = pos;
  }
}

std::vector<int> WeylGroup::word_of(std::int32_t idx) const {
  std::vector<int> word;
  while (parent_[idx] >= 0) {
    word.push_back(gen_[idx] + 1);
    idx = parent_[idx];
  }
  return word;  // element = s_{word[0]} s_{word[1]} ... ; rightmost acts first
}

ICoords WeylGroup::apply_index(std::int32_t idx, const ICoords& v) const {
  // this = s_g(parent), so the parent acts first. Words are bounded by the
  // number of positive roots (36 for E6).
  std::array<std::int8_t, 64> gens;
  int k = 0;
  while (parent_[idx] >= 0) {
    assert(k < static_cast<int>(gens.size()));
    gens[k++] = gen_[idx];
    idx = parent_[idx];
  }
  ICoords out = v;
  for (int i = k - 1; i >= 0; --i) datum_.refl_inplace(gens[i], out);
  return out;
}

std::int32_t WeylGroup::index_of_icoords(const ICoords& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

WeylElement WeylGroup::element_at(std::int32_t idx) const {
  return WeylElement{word_of(idx), datum_.from_icoords(images_[idx])};
}

Weight WeylGroup::apply(const WeylElement& w, const Weight& v) const {
  Weight out = v;
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it)
    out = datum_.simple_reflection_apply(*it, out);
  return out;
}

std::int32_t WeylGroup::index_from_rho_image(const Weight& v) const {
  auto iv = datum_.to_icoords(v);
  if (!iv) throw NotInOrbit("weight " + weight_str(v) + " is not in the orbit of rho");
  std::int32_t idx = index_of_icoords(*iv);
  if (idx < 0) throw NotInOrbit("weight " + weight_str(v) + " is not in the orbit of rho");
  return idx;
}

WeylElement WeylGroup::element_from_rho_image(const Weight& v) const {
  return element_at(index_from_rho_image(v));
}

std::pair<Weight, WeylElement> WeylGroup::dominant_representative(const Weight& v) const {
  std::vector<int> steps;
  Weight dom = datum_.dominant_of(v, &steps);
  // The element w with w v = dom; identified through its rho-image so the
  // returned word is the canonical reduced word from the enumeration.
  Weight rho_img = datum_.rho();
  for (int i : steps) rho_img = datum_.simple_reflection_apply(i, rho_img);
  // rho_img = (s_{steps_k} ... s_{steps_1}) rho
  return {std::move(dom), element_from_rho_image(rho_img)};
}

Weight WeylGroup::neg_w0(const Weight& v) const {
  if (static_cast<int>(v.size()) != datum_.rank())
    throw DimensionMismatch("neg_w0: wrong weight length");
  Weight out(v.size());
  for (int i = 0; i < datum_.rank(); ++i) out[negw0_perm_[i]] = v[i];
  return out;
}

ICoords WeylGroup::neg_w0_icoords(const ICoords& v) const {
  ICoords out{};
  for (int i = 0; i < datum_.rank(); ++i) out[negw0_perm_[i]] = v[i];
  return out;
}

std::array<ICoords, kMaxRank> WeylGroup::matrix_on_weights(std::int32_t idx) const {
  std::array<ICoords, kMaxRank> cols{};
  for (int j = 0; j < datum_.rank(); ++j) {
    ICoords e{};
    e[j] = 1;
    cols[j] = apply_index(idx, e);
  }
  return cols;
}

Involution WeylGroup::make_involution(std::int32_t idx) const {
  Involution s;
  s.index = idx;
  s.element = element_at(idx);
  const int n = datum_.rank();
  for (int i = 0; i < n; ++i) {
    ICoords e{};
    e[i] = 1;
    if (apply_index(idx, e) == e) s.fixed_indices.push_back(i + 1);
  }
  s.self_dual = neg_w0_icoords(images_[idx]) == images_[idx];
  return s;
}

void WeylGroup::compute_involutions() {
  const int n = datum_.rank();
  ICoords rho{};
  for (int i = 0; i < n; ++i) rho[i] = 1;
  for (std::int32_t idx = 0; idx < static_cast<std::int32_t>(images_.size()); ++idx) {
    if (apply_index(idx, images_[idx]) != rho) continue;  // w^2 rho != rho
    Involution s = make_involution(idx);
    // I(s) = empty  <=>  every generator occurs in the reduced word
    std::uint8_t support = 0;
    for (int g : s.element.word) support |= static_cast<std::uint8_t>(1u << (g - 1));
    const bool full_support = support == ((1u << n) - 1u);
    assert(full_support == s.fixed_indices.empty());
    (void)full_support;
    std::uint8_t mask = 0;
    for (int i : s.fixed_indices) mask |= static_cast<std::uint8_t>(1u << (i - 1));
    fixed_mask_.push_back(mask);
    involutions_.push_back(std::move(s));
  }
}

std::vector<Involution> WeylGroup::empty_Is_involutions() const {
  std::vector<Involution> out;
  for (const auto& s : involutions_)
    if (s.fixed_indices.empty()) out.push_back(s);
  return out;
}

std::size_t WeylGroup::self_dual_involution_count() const {
  std::size_t c = 0;
  for (const auto& s : involutions_)
    if (s.self_dual) ++c;
  return c;
}

Involution WeylGroup::involution_from_rho_image(const Weight& v) const {
  std::int32_t idx = index_from_rho_image(v);
  ICoords rho{};
  for (int i = 0; i < datum_.rank(); ++i) rho[i] = 1;
  if (apply_index(idx, images_[idx]) != rho)
    throw NotAnInvolution("element with rho-image " + weight_str(v) + " is not an involution");
  return make_involution(idx);
}

Involution WeylGroup::dual_involution(const Involution& s) const {
  // Lemma: (-w0) s rho = s' rho for s' = w0 s w0.
  ICoords img = neg_w0_icoords(images_[s.index]);
  std::int32_t idx = index_of_icoords(img);
  assert(idx >= 0);
  return make_involution(idx);
}

}  // namespace ds
