#include "diracsieve/levi.hpp"

#include <algorithm>
#include <cassert>

namespace ds {

namespace {

bool adjacent(const RootDatum& rd, int i, int j) { return i != j && rd.pairing(i, j) != 0; }

std::vector<std::vector<int>> connected_components(const std::vector<int>& subset,
                                                   const RootDatum& rd) {
  std::vector<int> s = subset;
  std::sort(s.begin(), s.end());
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(s.size(), false);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> comp;
    std::vector<std::size_t> stack{i};
    seen[i] = true;
    while (!stack.empty()) {
      std::size_t k = stack.back();
      stack.pop_back();
      comp.push_back(s[k]);
      for (std::size_t j = 0; j < s.size(); ++j)
        if (!seen[j] && adjacent(rd, s[k], s[j])) {
          seen[j] = true;
          stack.push_back(j);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

// Candidate abstract types for a connected component of the given rank.
std::vector<TypeLabel> candidate_types(int rank) {
  std::vector<TypeLabel> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
    if (type_is_supported(f, rank)) out.emplace_back(f, rank);
  return out;
}

// All bijections factor-node -> ambient-node preserving the Cartan pairing.
std::vector<std::vector<int>> admissible_maps(const TypeLabel& type,
                                              const std::vector<int>& nodes,
                                              const RootDatum& ambient) {
  const int k = type.rank;
  RootDatum factor(type);
  std::vector<int> perm(nodes.begin(), nodes.end());
  std::sort(perm.begin(), perm.end());
  std::vector<std::vector<int>> maps;
  do {
    bool ok = true;
    for (int i = 1; i <= k && ok; ++i)
      for (int j = 1; j <= k && ok; ++j)
        if (factor.pairing(i, j) != ambient.pairing(perm[i - 1], perm[j - 1])) ok = false;
    if (ok) maps.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return maps;
}

}  // namespace

std::vector<SubdiagramComponent> classify_subdiagram(const std::vector<int>& subset,
                                                     const RootDatum& rd) {
  for (int i : subset)
    if (i < 1 || i > rd.rank()) throw IndexOutOfRange("subdiagram index out of range");
  std::vector<SubdiagramComponent> out;
  for (const auto& nodes : connected_components(subset, rd)) {
    bool found = false;
    for (const TypeLabel& t : candidate_types(static_cast<int>(nodes.size()))) {
      auto maps = admissible_maps(t, nodes, rd);
      if (maps.empty()) continue;
      out.push_back(SubdiagramComponent{nodes, t, *std::min_element(maps.begin(), maps.end())});
      found = true;
      break;
    }
    if (!found)
      throw DsError("subdiagram component is not of a supported type");
  }
  // deterministic component order: by smallest ambient index
  std::sort(out.begin(), out.end(), [](const SubdiagramComponent& a, const SubdiagramComponent& b) {
    return a.ambient_indices.front() < b.ambient_indices.front();
  });
  return out;
}

LeviCensus levi_census(const RootDatum& rd) {
  const int n = rd.rank();
  LeviCensus census;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size == n) continue;  // proper subsets only
    std::vector<int> subset;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) subset.push_back(i + 1);
    if (subset.empty()) {
      census.by_size[0][""] += 1;
      continue;
    }
    auto comps = classify_subdiagram(subset, rd);
    std::vector<std::string> labels;
    for (const auto& c : comps) labels.push_back(c.type.str());
    std::sort(labels.begin(), labels.end());
    std::string key;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (i) key += "x";
      key += labels[i];
    }
    census.by_size[size][key] += 1;
  }
  return census;
}

Involution embed_involution(const SubdiagramComponent& comp, const std::vector<int>& factor_word,
                            const WeylGroup& ambient) {
  const RootDatum& rd = ambient.datum();
  ICoords img = rd.rho_i();
  std::vector<int> ambient_word;
  ambient_word.reserve(factor_word.size());
  for (int g : factor_word) {
    if (g < 1 || g > comp.type.rank) throw IndexOutOfRange("factor word letter out of range");
    ambient_word.push_back(comp.index_map[g - 1]);
  }
  for (auto it = ambient_word.rbegin(); it != ambient_word.rend(); ++it)
    rd.refl_inplace(*it - 1, img);
  std::int32_t idx = ambient.index_of_icoords(img);
  assert(idx >= 0);
  if (ambient.apply_index(idx, img) != rd.rho_i())
    throw NotAnInvolution("embedded word does not square to the identity");
  return ambient.involution_from_rho_image(rd.from_icoords(img));
}

std::vector<StringDescriptor> build_strings(
    const WeylGroup& ambient, const std::map<std::string, std::vector<ScatteredEntry>>& catalogs) {
  const RootDatum& rd = ambient.datum();
  const int n = rd.rank();

  // factor groups and unfolded entry lists, built once per needed type
  std::map<std::string, WeylGroup> factor_groups;
  std::map<std::string, std::vector<ScatteredEntry>> unfolded_entries;
  auto factor_data = [&](const TypeLabel& t) -> const std::vector<ScatteredEntry>& {
    const std::string key = t.str();
    auto it = unfolded_entries.find(key);
    if (it != unfolded_entries.end()) return it->second;
    auto cat = catalogs.find(key);
    if (cat == catalogs.end())
      throw MissingCatalog("no scattered-part catalog for factor type " + key);
    auto grp = factor_groups.emplace(key, WeylGroup::enumerate(RootDatum(t))).first;
    return unfolded_entries.emplace(key, unfold(cat->second, grp->second)).first->second;
  };

  std::vector<StringDescriptor> out;
  // subsets ordered by size then lexicographically
  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) == n) continue;
    std::vector<int> sub;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) sub.push_back(i + 1);
    subsets.push_back(std::move(sub));
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  for (const auto& subset : subsets) {
    std::vector<int> free_indices;
    for (int i = 1; i <= n; ++i)
      if (std::find(subset.begin(), subset.end(), i) == subset.end()) free_indices.push_back(i);

    if (subset.empty()) {
      // the e-family: every coordinate free, tempered members
      StringDescriptor sd;
      sd.free_indices = free_indices;
      sd.ambient_involution = ambient.involution_from_rho_image(rd.rho());
      sd.t_const = rd.zero();
      sd.a_const = rd.zero();
      out.push_back(std::move(sd));
      continue;
    }

    auto comps = classify_subdiagram(subset, rd);
    std::vector<const std::vector<ScatteredEntry>*> factor_lists;
    for (const auto& c : comps) factor_lists.push_back(&factor_data(c.type));

    // cartesian product over the components' unfolded entries
    std::vector<std::size_t> pick(comps.size(), 0);
    for (;;) {
      StringDescriptor sd;
      sd.fixed_set = subset;
      sd.free_indices = free_indices;
      Weight fixed_part = rd.zero();
      std::vector<int> word;  // product of commuting component involutions
      for (std::size_t c = 0; c < comps.size(); ++c) {
        const ScatteredEntry& entry = (*factor_lists[c])[pick[c]];
        const std::string key = comps[c].type.str();
        const WeylGroup& fw = factor_groups.at(key);
        WeylElement fs = fw.element_from_rho_image(entry.s_rho);
        for (int g : fs.word) word.push_back(comps[c].index_map[g - 1]);
        for (int k = 0; k < comps[c].type.rank; ++k) {
          int amb = comps[c].index_map[k];
          sd.fixed_lambda[amb] = entry.lambda[k];
          fixed_part[amb - 1] = entry.lambda[k];
        }
        sd.sources.push_back(StringSource{comps[c].type, entry.s_rho, entry.lambda});
      }
      Weight img = rd.rho();
      for (auto it = word.rbegin(); it != word.rend(); ++it)
        img = rd.simple_reflection_apply(*it, img);
      sd.ambient_involution = ambient.involution_from_rho_image(img);
      // I(s) must be exactly the free set
      if (sd.ambient_involution.fixed_indices != free_indices)
        throw DsError("embedded involution fixes the wrong index set");
      Weight s_fixed = ambient.apply(sd.ambient_involution.element, fixed_part);
      sd.t_const = fixed_part + s_fixed;
      sd.a_const = fixed_part - s_fixed;
      out.push_back(std::move(sd));

      // advance the odometer
      std::size_t c = 0;
      while (c < pick.size()) {
        if (++pick[c] < factor_lists[c]->size()) break;
        pick[c] = 0;
        ++c;
      }
      if (c == pick.size()) break;
    }
  }
  return out;
}

std::pair<Weight, Weight> string_params(const StringDescriptor& sd,
                                        const std::map<int, Rational>& free_values,
                                        const WeylGroup& ambient) {
  const RootDatum& rd = ambient.datum();
  Weight lambda = rd.zero();
  for (const auto& [i, v] : sd.fixed_lambda) lambda[i - 1] = v;
  for (int i : sd.free_indices) {
    auto it = free_values.find(i);
    if (it == free_values.end())
      throw BadFreeValue("no value for free index " + std::to_string(i));
    Rational two_v = 2 * it->second;
    if (!is_integer(two_v) || two_v < 1)
      throw BadFreeValue("free value at index " + std::to_string(i) +
                         " must be a positive half-integer");
    lambda[i - 1] = it->second;
  }
  return zhelobenko_params(lambda, sd.ambient_involution, ambient);
}

}  // namespace ds
