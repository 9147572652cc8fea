#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "diracsieve/spin.hpp"
#include "diracsieve/weyl.hpp"

namespace ds {

/// ||lambda - s lambda||^2 as a quadratic form in the coordinates of lambda.
/// For empty I(s) the diagonal is positive and the off-diagonal entries are
/// nonnegative, which is what makes the step-1 set finite and prunable.
struct QuadraticForm {
  std::vector<std::vector<Rational>> matrix;
};

enum class Stage { step1, step2_survivor };

/// One candidate parameter (s, lambda) with its derived data.
struct Candidate {
  Weight s_rho;     // identifies the family
  Weight lambda;    // lambda_i in (1/2)P
  Weight mu;        // {lambda + s lambda}, the lowest K-type
  Weight t_param;   // lambda + s lambda
  Weight a_param;   // lambda - s lambda
  Rational delta1;  // ||2 lambda||^2 - ||mu||_spin^2
  Rational delta2;  // ||2 lambda||^2 - P_mu^2
  Stage stage = Stage::step1;
  bool starred = false;  // folding kept this candidate for a dual pair
};

struct FamilyReport {
  Involution s;
  std::uint64_t step1_count = 0;
  std::vector<Candidate> step2_survivors;
  std::vector<Candidate> folded_survivors;
};

QuadraticForm quadratic_form(const Involution& s, const WeylGroup& wg);

/// Step 1: all lambda in Lambda(s) with ||lambda - s lambda||^2 <= ||2 rho||^2,
/// in lexicographic order of (2 lambda_1, ..., 2 lambda_l).
/// Throws InfiniteFamily when I(s) is non-empty.
std::vector<Weight> step1_enumerate(const Involution& s, const WeylGroup& wg);

/// Step 2: keeps the lambda with ||2 lambda||^2 <= P_mu^2, mu = {lambda+s lambda},
/// and fills every Candidate field. The trivial parameter (s = w0, lambda = rho)
/// is always kept: the pencil bound certifies non-unitarity only for
/// infinite-dimensional modules, and the trivial module is the one
/// finite-dimensional unitary representation (it has non-zero Dirac cohomology).
std::vector<Candidate> step2_filter(const std::vector<Weight>& lambdas, const Involution& s,
                                    const WeylGroup& wg);

/// Folds candidates under -w0: families of non-self-dual s keep only the
/// lexicographically smaller s rho of the dual pair; within a self-dual
/// family, of each pair {lambda, -w0 lambda} with distinct members only the
/// lexicographically smaller survives, marked starred.
std::vector<Candidate> fold(const std::vector<Candidate>& cands, const WeylGroup& wg);

/// Zhelobenko parameters of J(lambda, -s lambda):
/// T = lambda + s lambda, A = lambda - s lambda.
std::pair<Weight, Weight> zhelobenko_params(const Weight& lambda, const Involution& s,
                                            const WeylGroup& wg);

/// Delta_1 = ||2 lambda||^2 - ||mu||_spin^2. Also checks the identity
/// Delta_1 = ||lambda - s lambda||^2 - g(lambda) with
/// g = 2({mu-rho} - (mu-rho), rho) and the uniform bound g <= ||2 rho||^2.
Rational delta1(const Weight& lambda, const Involution& s, const WeylGroup& wg);

struct RunOptions {
  int jobs = 0;                   // 0 = hardware concurrency
  bool step1_count_only = false;  // skip step 2 (counts only)
};

/// Runs every folded scattered family (empty I(s), one representative per
/// -w0 dual pair), sorted lexicographically by s rho. Families are processed
/// in parallel; the output order is deterministic.
std::vector<FamilyReport> run_all_families(const WeylGroup& wg, const RunOptions& opts = {});

/// Runs a single family (the s given, no dual folding of the family itself).
FamilyReport run_family(const Involution& s, const WeylGroup& wg,
                        bool step1_count_only = false);

}  // namespace ds
