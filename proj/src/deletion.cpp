#include "extfam/deletion.hpp"

#include <random>
#include <stdexcept>

#include "extfam/matching.hpp"

namespace extfam {

namespace {

// no l-matching on layer m outside X?
bool deletion_succeeds(const SetFamily& f, int m, int ell, SetWord x,
                       std::uint64_t* nodes) {
  PackingQuery q{&f, full_set(f.n()) & ~x, m, nullptr};
  return !find_nonempty_packing(q, ell, nullptr, nodes);
}

template <typename Fn>
bool for_each_subset_of_size(SetWord pool, int k, Fn&& fn, SetWord acc = 0) {
  if (k == 0) return fn(acc);
  while (pool) {
    const SetWord p = pool & (~pool + 1);
    pool ^= p;
    if (std::popcount(pool) < k - 1) break;
    if (for_each_subset_of_size(pool, k - 1, fn, acc | p)) return true;
  }
  return false;
}

}  // namespace

DeletionResult deletion_number(const SetFamily& f, int m, int ell,
                               std::optional<int> budget, DeletionMode mode) {
  if (m < 1) throw std::invalid_argument("deletion_number requires m >= 1");
  if (ell < 1)
    throw std::invalid_argument("deletion_number requires an l-matching target, l >= 1");

  const bool prefix_ok = mode == DeletionMode::kPrefix ||
                         (mode == DeletionMode::kAuto && is_shifted(f));
  DeletionResult r;
  r.m = m;
  r.ell = ell;
  r.mode = prefix_ok ? "prefix" : "exhaustive";
  if (budget) r.budget = *budget;

  const int n = f.n();
  for (int d = 0; d <= n; ++d) {
    if (budget && d > *budget) {
      r.exceeded_budget = true;
      r.d = *budget + 1;  // a lower bound: true d exceeds the budget
      return r;
    }
    if (prefix_ok) {
      const SetWord x = prefix_set(d);
      if (deletion_succeeds(f, m, ell, x, &r.nodes)) {
        r.d = d;
        r.witness_x = x;
        return r;
      }
    } else {
      SetWord found = 0;
      const bool ok = for_each_subset_of_size(full_set(n), d, [&](SetWord x) {
        if (deletion_succeeds(f, m, ell, x, &r.nodes)) {
          found = x;
          return true;
        }
        return false;
      });
      if (ok) {
        r.d = d;
        r.witness_x = found;
        return r;
      }
    }
  }
  // deleting everything always works: layer m is empty, and l >= 1
  throw std::logic_error("deletion search failed to terminate");
}

PrefixDeletionReport verify_prefix_deletion_property(const SetFamily& f, int d, int k,
                                                     int m, int ell,
                                                     std::optional<int> sample,
                                                     std::uint64_t seed) {
  PrefixDeletionReport rep;
  rep.d = d;
  rep.k = k;
  rep.m = m;
  rep.ell = ell;
  rep.prefix = d + m * ell;
  rep.seed = seed;

  auto precondition_fail = [&](const std::string& msg) {
    rep.preconditions_ok = false;
    rep.precondition_error = msg;
    return rep;
  };

  if (m < 1 || ell < 1) return precondition_fail("require m >= 1 and l >= 1");
  if (k < 0 || static_cast<long long>(k) * m > d)
    return precondition_fail("require 0 <= k <= d/m");
  if (rep.prefix > f.n()) return precondition_fail("prefix d + m*l exceeds n");
  if (!is_shifted(f)) return precondition_fail("family is not shifted");
  DeletionResult dn = deletion_number(f, m, ell, d);
  if (!dn.exceeded_budget && dn.d <= d)
    return precondition_fail("deletion number is not larger than d");

  const int pick = d - k * m;
  const SetWord pool = prefix_set(rep.prefix);
  rep.exhaustive = !sample.has_value() && rep.prefix <= 14;

  auto check_x = [&](SetWord x) {
    ++rep.cases_checked;
    if (!prefix_matching_search(f, m, ell + k, x, rep.prefix))
      rep.failures.push_back(x);
  };

  if (rep.exhaustive || !sample.has_value()) {
    rep.exhaustive = true;
    for_each_subset_of_size(pool, pick, [&](SetWord x) {
      check_x(x);
      return false;
    });
  } else {
    rep.exhaustive = false;
    std::mt19937_64 rng(seed);
    std::vector<int> idx(static_cast<size_t>(rep.prefix));
    for (int i = 0; i < rep.prefix; ++i) idx[static_cast<size_t>(i)] = i + 1;
    for (int trial = 0; trial < *sample; ++trial) {
      // random `pick`-subset via a partial shuffle
      for (int i = 0; i < pick; ++i) {
        std::uniform_int_distribution<int> dist(i, rep.prefix - 1);
        std::swap(idx[static_cast<size_t>(i)], idx[static_cast<size_t>(dist(rng))]);
      }
      SetWord x = 0;
      for (int i = 0; i < pick; ++i) x |= element_bit(idx[static_cast<size_t>(i)]);
      check_x(x);
    }
  }
  return rep;
}

}  // namespace extfam
