#pragma once

#include <map>
#include <string>
#include <vector>

#include "diracsieve/catalog.hpp"

namespace ds {

/// A connected component of the Dynkin subdiagram induced on a subset of
/// simple-root indices, classified up to graph isomorphism, with the chosen
/// relabeling of the component type's Bourbaki indices into the ambient
/// diagram. Ambiguous relabelings (path reversal, D-fork leaves) are resolved
/// by taking the lexicographically smallest ambient index sequence.
struct SubdiagramComponent {
  std::vector<int> ambient_indices;  // sorted, 1-based
  TypeLabel type;
  std::vector<int> index_map;  // index_map[k] = ambient index of factor node k+1
};

std::vector<SubdiagramComponent> classify_subdiagram(const std::vector<int>& subset,
                                                     const RootDatum& rd);

/// Tally of proper subsets by size and component-type multiset
/// (key example: "A1xA1xA2").
struct LeviCensus {
  std::map<int, std::map<std::string, int>> by_size;
};
LeviCensus levi_census(const RootDatum& rd);

/// Relabels a reduced word of the factor type through the component's
/// index_map and evaluates it in the ambient group.
/// Throws NotAnInvolution if the word does not square to the identity.
Involution embed_involution(const SubdiagramComponent& comp, const std::vector<int>& factor_word,
                            const WeylGroup& ambient);

/// Where one string's fixed data came from: one unfolded scattered entry of
/// the factor type per component.
struct StringSource {
  TypeLabel factor_type;
  Weight factor_s_rho;
  Weight factor_lambda;
};

/// An (s, I)-string: the lambda_i for i in the free set range over (1/2)P
/// while the others are pinned by a scattered entry of the Levi factor.
/// T = t_const + sum over free i of 2 lambda_i e_i; A = a_const on the
/// whole string.
struct StringDescriptor {
  std::vector<int> fixed_set;     // S, sorted, possibly empty (the e-family)
  std::vector<int> free_indices;  // [l] minus S
  Involution ambient_involution;
  std::map<int, Rational> fixed_lambda;
  std::vector<StringSource> sources;
  Weight t_const;
  Weight a_const;
};

/// Builds every string of the ambient type from the factor catalogs
/// (unfolded). Keys of `catalogs` are type labels ("A1", ..., "D5").
/// Throws MissingCatalog when a needed factor table is absent.
std::vector<StringDescriptor> build_strings(
    const WeylGroup& ambient, const std::map<std::string, std::vector<ScatteredEntry>>& catalogs);

/// Instantiates the string at the given free values (each in (1/2)P) and
/// returns the Zhelobenko (T, A) parameters. Throws BadFreeValue.
std::pair<Weight, Weight> string_params(const StringDescriptor& sd,
                                        const std::map<int, Rational>& free_values,
                                        const WeylGroup& ambient);

}  // namespace ds
