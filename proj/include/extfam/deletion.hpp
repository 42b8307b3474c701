#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "extfam/set_family.hpp"
#include "extfam/set_word.hpp"

namespace extfam {

enum class DeletionMode { kAuto, kPrefix, kExhaustive };

struct DeletionResult {
  int d = 0;
  SetWord witness_x = 0;  // deleting these elements leaves no l-matching on layer m
  std::uint64_t nodes = 0;
  bool exceeded_budget = false;
  int budget = -1;
  std::string mode;  // "prefix" or "exhaustive"
  int m = 0;
  int ell = 0;
};

// Deletion number: the minimum |X| such that the m-th layer restricted to
// [n] \ X has no l-matching. Searched by increasing |X| with capped matching
// queries. For shifted families an optimal X is always the prefix [1..d]:
// a matching avoiding [d] converts into one avoiding any X of size d by
// swapping each element of X it uses down into [d] \ X (shiftedness). The
// prefix restriction is validated against the exhaustive search in tests.
DeletionResult deletion_number(const SetFamily& f, int m, int ell,
                               std::optional<int> budget = {},
                               DeletionMode mode = DeletionMode::kAuto);

struct PrefixDeletionReport {
  bool preconditions_ok = true;
  std::string precondition_error;
  int d = 0, k = 0, m = 0, ell = 0;
  int prefix = 0;  // d + m*ell
  std::uint64_t cases_checked = 0;
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::vector<SetWord> failures;  // X sets with no (l+k)-matching avoiding them

  bool holds() const { return preconditions_ok && failures.empty(); }
};

// For shifted f with deletion number > d and 0 <= k <= d/m: every
// X inside [d + m*l] with |X| = d - k*m must leave an (l+k)-matching on
// layer m within the prefix. Exhaustive over X when d + m*l <= 14 (or when
// `sample` is absent), sampled with the given seed otherwise. Precondition
// failures are reported distinctly from property violations.
PrefixDeletionReport verify_prefix_deletion_property(const SetFamily& f, int d, int k,
                                                     int m, int ell,
                                                     std::optional<int> sample = {},
                                                     std::uint64_t seed = 0x5eed1e7eULL);

}  // namespace extfam
