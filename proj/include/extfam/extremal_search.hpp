#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "extfam/bignum.hpp"
#include "extfam/constructions.hpp"
#include "extfam/set_family.hpp"

namespace extfam {

enum class SearchEngine { kDual, kPrimal, kBoth };

struct SearchConfig {
  int ens_guard = 10;          // full e(n,s) search guard
  int uniform_guard = 13;      // single-layer search guard
  int tie_cap = 64;            // maximum families collected per report
  bool allow_large = false;    // explicit acknowledgment to exceed a guard
  SearchEngine engine = SearchEngine::kDual;
  bool collect_ties = true;
  std::uint64_t sample_seed = 0x5eedf00dULL;
};

// Exact optimum: the largest subfamily of the universe (all of 2^[n], or a
// single layer) avoiding s pairwise disjoint members, optionally restricted
// to shifted families. Two independent formulations:
//   dual   - branch and bound on the complement: a minimum up-closed set of
//            exclusions hitting every s-matching, with constraints found
//            lazily and a member-disjoint constraint packing as lower bound;
//   primal - branch and bound over membership decisions in a linear
//            extension of domination, upper-bounded by the same packing.
struct ExtremalSolve {
  BigCount best_size;
  std::vector<SetFamily> maxima;
  bool ties_truncated = false;
  std::uint64_t nodes = 0;
};
ExtremalSolve solve_extremal(int n, int s, bool shifted_only, SearchEngine engine,
                             int uniform, int tie_cap, bool collect_ties,
                             const std::vector<SetFamily>& seeds = {});

struct ConstructionComparison {
  Kind kind = Kind::P;
  BigCount size;
  bool feasible = false;  // avoids an s-matching (can fail when l = 0)
  bool attains = false;
};

struct SearchReport {
  int n = 0, s = 0;
  BigCount e_value;
  bool vacuous = false;  // s >= n+2: the whole power set qualifies
  std::vector<SetFamily> extremal_families;
  bool ties_truncated = false;
  bool has_params = false;  // n = ms + c with m >= 1, 1 <= c <= s
  ExtremalParams params;
  bool degenerate_ell = false;
  std::vector<ConstructionComparison> constructions;
  bool conjecture_holds = false;
  std::vector<std::string> extremal_kinds;  // attaining kinds, plus "other"
  std::uint64_t nodes = 0;
};

// Exact e(n, s) over shifted families (sufficient: the optimum is always
// attained by one), with construction comparison when n = ms + c.
SearchReport e_exact(int n, int s, const SearchConfig& config = {});

// Largest k-uniform family on [n] without t pairwise disjoint members.
// Shifted-restricted search, validated against the unrestricted search for
// small n in tests.
BigCount uniform_emc_max(int n, int k, int t, const SearchConfig& config = {});

SearchReport conjecture_check(int m, int c, int s, const SearchConfig& config = {});

struct StabilityReport {
  ExtremalParams params;
  BigCount y_m;   // missing m-sets
  BigCount y_m1;  // missing (m+1)-sets
  int d = 0;
  bool d_within_mc = false;
  std::string regime;  // "d<(m-1)c" | "d=(m-1)c" | "(m-1)c<d<=mc" | "d>mc"
  // counting bound: y(m) >= C(n-d, m) - C(ml-1, m)
  BigCount deficit_bound_rhs;
  bool deficit_bound_satisfied = false;
  // the same bound with the exact uniform optimum in place of the clique
  // size; this direction is a theorem at every scale
  std::optional<BigCount> uniform_oracle_max;
  std::optional<BigCount> deficit_bound_oracle_rhs;
  bool deficit_bound_oracle_satisfied = false;
  // d = mc and c = 1 forces containment in W
  bool w_membership_applies = false;
  bool w_membership_holds = false;
  std::optional<SetWord> w_membership_counterexample;
};

// Requires f shifted with no s-matching; recomputes every quantity from
// first principles (layer profile, deletion number, uniform optimum).
StabilityReport layer_stability_check(const SetFamily& f, const ExtremalParams& p,
                                      const SearchConfig& config = {});

struct UniquenessReport {
  SearchReport search;
  std::vector<std::string> expected_kinds;  // {"Q"} or {"Q","W"} when c = 1
  bool holds_at_this_s = false;
  bool below_threshold = false;  // a different family wins; expected at small s
  bool ties_truncated = false;
  BigCount q_complement;
  // smallest complement among maxima contained in neither Q nor (c=1) W
  std::optional<BigCount> min_complement_outside;
};

// Determines all maximum shifted families and whether Q (c >= 2) or {Q, W}
// (c = 1) are exactly the maxima. A negative outcome at small s is a
// first-class "below threshold" result, not an error.
UniquenessReport uniqueness_check(int m, int c, int s, const SearchConfig& config = {});

// Deterministic stream of shifted families with no s-matching, produced by
// pruning feasible constructions by random up-closed chunks and by
// feasibility-filtered random down-sets.
std::vector<SetFamily> sample_shifted_feasible(int n, int s, int count,
                                               std::uint64_t seed);

}  // namespace extfam
