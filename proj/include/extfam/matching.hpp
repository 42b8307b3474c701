#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "extfam/bignum.hpp"
#include "extfam/constructions.hpp"
#include "extfam/set_family.hpp"
#include "extfam/set_word.hpp"

namespace extfam {

// Low-level packing query against a dense membership oracle. `universe`
// restricts the ground elements sets may use; `uniform` (when > 0) restricts
// to sets of exactly that size; `blocked` hides individual member sets.
struct PackingQuery {
  const SetFamily* family = nullptr;
  SetWord universe = 0;
  int uniform = -1;
  const SetFamily* blocked = nullptr;
};

// Searches for `need` pairwise disjoint nonempty member sets inside the
// universe. Branches on the lowest available element (use it or skip it),
// candidates enumerated in ascending mask order, with a memoized upper
// bound per element-availability mask to cut repeated failing states.
bool find_nonempty_packing(const PackingQuery& q, int need,
                           std::vector<SetWord>* witness = nullptr,
                           std::uint64_t* nodes = nullptr);

// s-matching search where the empty set, when a member, may occur once.
// A matching of s nonempty sets always yields one using the empty set, so
// when the empty set is present only s-1 nonempty sets are searched for.
std::optional<std::vector<SetWord>> find_matching_in(const PackingQuery& q, int s,
                                                     std::uint64_t* nodes = nullptr);

struct MatchingResult {
  int nu = 0;
  bool lower_bound_only = false;  // stopped at the cap; true value may be larger
  std::vector<SetWord> witness;
  std::uint64_t nodes = 0;
};

// Exact matching number. With a cap, returns early with nu = cap (flagged)
// once a matching of that size is found.
MatchingResult matching_number(const SetFamily& f, std::optional<int> cap = {});

// Decision form: s pairwise disjoint members, or nothing.
std::optional<std::vector<SetWord>> has_matching_of_size(const SetFamily& f, int s);

// Independent witness checker: s distinct, pairwise disjoint members of f.
bool witness_is_valid(const SetFamily& f, const std::vector<SetWord>& witness, int s);

// Searches for a t-matching on layer m using only elements of
// [prefix] \ forbidden. Complete relative to the full ground set when the
// family is shifted; the caller asserts shiftedness.
std::optional<std::vector<SetWord>> prefix_matching_search(const SetFamily& f, int m,
                                                           int t, SetWord forbidden,
                                                           int prefix);

struct CertificateResult {
  bool accepted = false;
  std::optional<SetWord> violated_set;
  Rational weight_sum;
  std::optional<Rational> min_member_weight;
};

// Weak-duality certificate: accepted iff sum_i x_i < s and every member F
// has sum_{i in F} x_i >= 1 (then no s-matching exists). All arithmetic is
// exact rational. Negative weights are a precondition violation, not a
// rejection.
CertificateResult verify_weight_certificate(const SetFamily& f,
                                            const std::vector<Rational>& x, int s);

// Symbolic variant for predicate-backed constructions: since each defining
// inequality depends only on the number of head and tail elements and is
// monotone, it suffices to minimize the weight over the tight (head, tail)
// count classes. Requires the weight split to coincide with the
// construction's head boundary (canonical weights always do); falls back to
// dense evaluation otherwise when n permits.
CertificateResult verify_weight_certificate(Kind k, const ExtremalParams& p,
                                            const WeightVector& x, int s);

}  // namespace extfam
