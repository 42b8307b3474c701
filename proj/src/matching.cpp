#include "extfam/matching.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace extfam {

namespace {

struct PackDfs {
  const SetFamily& fam;
  const SetFamily* blocked;
  int uniform;
  std::uint64_t nodes = 0;
  std::vector<SetWord> chosen;
  // avail -> known upper bound on the packing size achievable inside avail
  std::unordered_map<std::uint32_t, std::int8_t> bound;

  explicit PackDfs(const PackingQuery& q)
      : fam(*q.family), blocked(q.blocked), uniform(q.uniform) {}

  bool usable(SetWord s) const {
    return fam.contains(s) && (!blocked || !blocked->contains(s));
  }

  bool run(SetWord avail, int need) {
    if (need <= 0) return true;
    ++nodes;
    const int pc = std::popcount(avail);
    if (uniform > 0 ? pc < need * uniform : pc < need) return false;
    const auto key = static_cast<std::uint32_t>(avail);
    if (auto it = bound.find(key); it != bound.end() && it->second < need)
      return false;

    const SetWord e = avail & (~avail + 1);  // lowest available element
    const SetWord rest = avail ^ e;
    bool found = uniform > 0 ? try_uniform(avail, rest, e, uniform - 1, need)
                             : try_any(avail, rest, e, need);
    if (found) return true;
    if (run(rest, need)) return true;  // no chosen set covers e

    auto [it, inserted] = bound.emplace(key, static_cast<std::int8_t>(need - 1));
    if (!inserted && it->second > need - 1) it->second = static_cast<std::int8_t>(need - 1);
    return false;
  }

  bool try_any(SetWord avail, SetWord rest, SetWord e, int need) {
    // ascending submask walk over rest; candidate = submask | e
    SetWord sub = 0;
    for (;;) {
      const SetWord cand = sub | e;
      if (usable(cand)) {
        chosen.push_back(cand);
        if (run(avail & ~cand, need - 1)) return true;
        chosen.pop_back();
      }
      if (sub == rest) break;
      sub = (sub - rest) & rest;
    }
    return false;
  }

  // candidates of exactly `uniform` elements containing e, built by picking
  // `left` further elements from pool in increasing order
  bool try_uniform(SetWord avail, SetWord pool, SetWord base, int left, int need) {
    if (left == 0) {
      if (!usable(base)) return false;
      chosen.push_back(base);
      if (run(avail & ~base, need - 1)) return true;
      chosen.pop_back();
      return false;
    }
    while (pool) {
      const SetWord p = pool & (~pool + 1);
      pool ^= p;
      if (std::popcount(pool) < left - 1) break;
      if (try_uniform(avail, pool, base | p, left - 1, need)) return true;
    }
    return false;
  }
};

}  // namespace

bool find_nonempty_packing(const PackingQuery& q, int need,
                           std::vector<SetWord>* witness, std::uint64_t* nodes) {
  if (need <= 0) {
    if (witness) witness->clear();
    return true;
  }
  PackDfs dfs(q);
  const bool ok = dfs.run(q.universe, need);
  if (nodes) *nodes += dfs.nodes;
  if (ok && witness) *witness = dfs.chosen;
  return ok;
}

std::optional<std::vector<SetWord>> find_matching_in(const PackingQuery& q, int s,
                                                     std::uint64_t* nodes) {
  if (s <= 0) return std::vector<SetWord>{};
  const bool empty_available =
      q.uniform <= 0 && q.family->contains(kEmptySet) &&
      (!q.blocked || !q.blocked->contains(kEmptySet));
  std::vector<SetWord> wit;
  if (empty_available) {
    if (!find_nonempty_packing(q, s - 1, &wit, nodes)) return std::nullopt;
    wit.insert(wit.begin(), kEmptySet);
    return wit;
  }
  if (!find_nonempty_packing(q, s, &wit, nodes)) return std::nullopt;
  return wit;
}

MatchingResult matching_number(const SetFamily& f, std::optional<int> cap) {
  MatchingResult r;
  const int base = f.contains(kEmptySet) ? 1 : 0;
  if (base) r.witness.push_back(kEmptySet);
  r.nu = base;
  PackingQuery q{&f, full_set(f.n()), -1, nullptr};
  for (;;) {
    if (cap && r.nu >= *cap) {
      r.lower_bound_only = true;
      break;
    }
    std::vector<SetWord> wit;
    if (!find_nonempty_packing(q, r.nu - base + 1, &wit, &r.nodes)) break;
    r.witness.assign(wit.begin(), wit.end());
    if (base) r.witness.insert(r.witness.begin(), kEmptySet);
    ++r.nu;
  }
  return r;
}

std::optional<std::vector<SetWord>> has_matching_of_size(const SetFamily& f, int s) {
  PackingQuery q{&f, full_set(f.n()), -1, nullptr};
  return find_matching_in(q, s);
}

bool witness_is_valid(const SetFamily& f, const std::vector<SetWord>& witness, int s) {
  if (static_cast<int>(witness.size()) != s) return false;
  for (size_t i = 0; i < witness.size(); ++i) {
    if (!f.contains(witness[i])) return false;
    for (size_t j = i + 1; j < witness.size(); ++j) {
      if (witness[i] == witness[j]) return false;
      if (!sets_disjoint(witness[i], witness[j])) return false;
    }
  }
  return true;
}

std::optional<std::vector<SetWord>> prefix_matching_search(const SetFamily& f, int m,
                                                           int t, SetWord forbidden,
                                                           int prefix) {
  if (m < 1) throw std::invalid_argument("prefix_matching_search requires m >= 1");
  const SetWord universe =
      prefix_set(std::min(prefix, f.n())) & ~forbidden & full_set(f.n());
  PackingQuery q{&f, universe, m, nullptr};
  std::vector<SetWord> wit;
  if (!find_nonempty_packing(q, t, &wit)) return std::nullopt;
  return wit;
}

CertificateResult verify_weight_certificate(const SetFamily& f,
                                            const std::vector<Rational>& x, int s) {
  if (static_cast<int>(x.size()) != f.n())
    throw std::invalid_argument("weight vector length must equal n");
  for (const Rational& xi : x)
    if (xi < 0) throw std::invalid_argument("weights must be nonnegative");

  CertificateResult r;
  for (const Rational& xi : x) r.weight_sum += xi;
  if (!(r.weight_sum < Rational(s))) {
    r.accepted = false;
    return r;
  }

  bool any = false;
  Rational best;
  SetWord arg = 0;
  if (f.n() <= 18) {
    // weight of every subset by one rational addition each
    const std::uint64_t total = f.subset_count();
    std::vector<Rational> weight(total);
    for (std::uint64_t mask = 1; mask < total; ++mask) {
      const SetWord low = mask & (~mask + 1);
      weight[mask] = weight[mask ^ low] + x[static_cast<size_t>(lowest_element(low) - 1)];
    }
    f.for_each_member([&](SetWord mset) {
      if (!any || weight[mset] < best) {
        best = weight[mset];
        arg = mset;
        any = true;
      }
    });
  } else {
    f.for_each_member([&](SetWord mset) {
      Rational w;
      for (SetWord rest = mset; rest; rest &= rest - 1)
        w += x[static_cast<size_t>(std::countr_zero(rest))];
      if (!any || w < best) {
        best = w;
        arg = mset;
        any = true;
      }
    });
  }
  if (any) {
    r.min_member_weight = best;
    if (best < 1) {
      r.accepted = false;
      r.violated_set = arg;
      return r;
    }
  }
  r.accepted = true;
  return r;
}

namespace {

long long head_boundary(Kind k, const ExtremalParams& p) {
  const long long m = p.m, c = p.c, s = p.s, ell = p.ell();
  switch (k) {
    case Kind::P: return std::max<long long>(ell - 1, 0);
    case Kind::Pprime: return std::max<long long>(m * ell - 1, 0);
    case Kind::Q: return std::max<long long>(m * s - c - 1, 0);
    case Kind::W: return m * s - 1;
  }
  throw std::logic_error("unknown kind");
}

// Minimal (head count, tail count) classes on the membership frontier.
std::vector<std::pair<long long, long long>> tight_classes(Kind k,
                                                           const ExtremalParams& p,
                                                           long long head,
                                                           long long tail) {
  std::vector<std::pair<long long, long long>> out;
  const long long m = p.m;
  auto add = [&](long long h, long long t) {
    if (h >= 0 && h <= head && t >= 0 && t <= tail) out.emplace_back(h, t);
  };
  switch (k) {
    case Kind::P:  // 2h + t >= m+1
      for (long long h = 0; 2 * h <= m + 2; ++h) add(h, std::max<long long>(m + 1 - 2 * h, 0));
      break;
    case Kind::Q:  // 2h + t >= 2m
      for (long long h = 0; h <= m; ++h) add(h, std::max<long long>(2 * m - 2 * h, 0));
      break;
    case Kind::W:  // h >= m, t free
      add(m, 0);
      break;
    case Kind::Pprime:  // size >= m+1, or the clique m-sets inside the head
      for (long long h = 0; h <= m + 1; ++h) add(h, m + 1 - h);
      add(m, 0);
      break;
  }
  return out;
}

}  // namespace

CertificateResult verify_weight_certificate(Kind k, const ExtremalParams& p,
                                            const WeightVector& x, int s) {
  if (x.head < 0 || x.tail < 0)
    throw std::invalid_argument("weights must be nonnegative");
  const long long n = p.n();
  const long long head = head_boundary(k, p);
  if (x.n != n) throw std::invalid_argument("weight vector length must equal n");
  if (x.split != head) {
    // misaligned split: evaluate densely when possible
    if (n <= SetFamily::kDenseLimit)
      return verify_weight_certificate(densify(k, p), x.materialize(), s);
    throw std::invalid_argument(
        "symbolic certificate requires weights split at the construction boundary");
  }

  CertificateResult r;
  r.weight_sum = x.sum();
  if (!(r.weight_sum < Rational(s))) {
    r.accepted = false;
    return r;
  }

  const long long tail = n - head;
  bool any = false;
  Rational best;
  std::pair<long long, long long> arg{0, 0};
  for (auto [h, t] : tight_classes(k, p, head, tail)) {
    const Rational w = x.head * Rational(h) + x.tail * Rational(t);
    if (!any || w < best) {
      best = w;
      arg = {h, t};
      any = true;
    }
  }
  if (any) {
    r.min_member_weight = best;
    if (best < 1) {
      r.accepted = false;
      // concrete witness: h head elements from the top of the head region,
      // t from the top of the tail
      SetWord v = 0;
      for (long long i = 0; i < arg.first; ++i) v |= element_bit(static_cast<int>(head - i));
      for (long long i = 0; i < arg.second; ++i) v |= element_bit(static_cast<int>(n - i));
      r.violated_set = v;
      return r;
    }
  }
  r.accepted = true;
  return r;
}

}  // namespace extfam
