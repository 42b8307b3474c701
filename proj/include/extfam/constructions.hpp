#pragma once

#include <optional>
#include <string>
#include <vector>

#include "extfam/bignum.hpp"
#include "extfam/set_family.hpp"
#include "extfam/set_word.hpp"

namespace extfam {

// The four candidate extremal families on [n], n = ms + c, l = s - c:
//   P      : |A| + |A n [l-1]|      >= m+1
//   Pprime : all sets of size >= m+1, plus the m-sets inside [ml-1]
//   Q      : |A| + |A n [ms-c-1]|   >= 2m
//   W      : |A n [ms-1]|           >= m
enum class Kind { P, Pprime, Q, W };

inline constexpr Kind kAllKinds[] = {Kind::P, Kind::Pprime, Kind::Q, Kind::W};

std::string kind_name(Kind k);
Kind parse_kind(const std::string& name);

struct ExtremalParams {
  int m = 1;
  int c = 1;
  int s = 1;

  ExtremalParams() = default;
  ExtremalParams(int m_, int c_, int s_);

  int ell() const { return s - c; }
  long long n() const { return static_cast<long long>(m) * s + c; }
  bool degenerate() const { return ell() == 0; }
};

// Evaluates the defining predicate directly; no dense materialization, so
// any n up to the SetWord width works.
bool member(Kind k, const ExtremalParams& p, SetWord set);

// Dense materialization; requires n <= SetFamily::kDenseLimit.
SetFamily densify(Kind k, const ExtremalParams& p);

// Exact complement sizes via closed-form binomial sums, valid for any s:
//   P      : sum_j C(l-1, j) * sum_{b <= m-2j} C(n-l+1, b)
//   Pprime : sum_{i<=m} C(n, i) - C(ml-1, m)
//   Q      : sum_t C(2c+1, t) * sum_{a <= (2m-1-t)/2} C(ms-c-1, a)
//   W      : 2^{c+1} * sum_{a <= m-1} C(ms-1, a)
// Validated against dense enumeration for every n <= 16 in the test suite.
BigCount complement_size_exact(Kind k, const ExtremalParams& p);

BigCount family_size_exact(Kind k, const ExtremalParams& p);

// Coefficient of C(n, m-1) in the complement-size asymptotic for fixed
// (m, c), s -> infinity: (m+1)c+2 for Pprime, 2c+2 for Q, 2^{c+1} for W.
// P's complement grows like s^m; asking for its coefficient is an error.
BigCount leading_coefficient(Kind k, const ExtremalParams& p);

struct QWEqualityReport {
  int m = 0;
  int s = 0;
  BigCount q_complement;
  BigCount w_complement;
  bool equal = false;
  bool enumeration_checked = false;  // additionally verified densely (n <= 16)
};

// |Q(m,s,s-1)| = |W(m,s,s-1)| (the c = 1 coincidence), by closed forms,
// with a dense cross-check when the ground set is small enough.
QWEqualityReport q_w_equality_check(int m, int s);

// Two-level weight vector: x_i = head for i <= split, tail for i > split.
// All canonical certificate weights have this shape.
struct WeightVector {
  long long n = 0;
  long long split = 0;
  Rational head;
  Rational tail;

  Rational value(long long i) const { return i <= split ? head : tail; }
  Rational sum() const {
    return head * Rational(split) + tail * Rational(n - split);
  }
  std::vector<Rational> materialize() const;
};

// The canonical duality weights for each kind:
//   P      : 2/(m+1) on [l-1],    1/(m+1) after
//   Pprime : 1/m     on [ml-1],   1/(m+1) after
//   Q      : 1/m     on [ms-c-1], 1/(2m)  after
//   W      : 1/m     on [ms-1],   0       after
// For l >= 1 the total is strictly below s; in the degenerate l = 0 case
// P/Pprime (and Q when m = 1) reach total exactly s and the certificate
// legitimately fails, matching the fact that those families then contain
// an s-matching.
WeightVector canonical_weights(Kind k, const ExtremalParams& p);

}  // namespace extfam
