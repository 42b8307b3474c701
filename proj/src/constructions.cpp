#include "extfam/constructions.hpp"

#include <stdexcept>

namespace extfam {

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::P: return "P";
    case Kind::Pprime: return "Pprime";
    case Kind::Q: return "Q";
    case Kind::W: return "W";
  }
  throw std::logic_error("unknown kind");
}

Kind parse_kind(const std::string& name) {
  if (name == "P") return Kind::P;
  if (name == "Pprime" || name == "P'") return Kind::Pprime;
  if (name == "Q") return Kind::Q;
  if (name == "W") return Kind::W;
  throw std::invalid_argument("unknown construction kind: " + name);
}

ExtremalParams::ExtremalParams(int m_, int c_, int s_) : m(m_), c(c_), s(s_) {
  if (m < 1) throw std::invalid_argument("require m >= 1");
  if (c < 1 || c > s) throw std::invalid_argument("require 1 <= c <= s");
  if (n() > kMaxElements)
    throw std::invalid_argument("ground set exceeds explicit-set width");
}

bool member(Kind k, const ExtremalParams& p, SetWord set) {
  const long long n = p.n();
  if (set & ~full_set(static_cast<int>(n)))
    throw std::invalid_argument("set element beyond ground set [n]");
  const int size = set_size(set);
  switch (k) {
    case Kind::P: {
      const int head = set_size(set & prefix_set(p.ell() - 1));
      return size + head >= p.m + 1;
    }
    case Kind::Pprime: {
      if (size >= p.m + 1) return true;
      const long long clique = static_cast<long long>(p.m) * p.ell() - 1;
      return size == p.m && (set & ~prefix_set(static_cast<int>(clique))) == 0;
    }
    case Kind::Q: {
      const long long hd = static_cast<long long>(p.m) * p.s - p.c - 1;
      const int head = set_size(set & prefix_set(static_cast<int>(hd)));
      return size + head >= 2 * p.m;
    }
    case Kind::W: {
      const long long hd = static_cast<long long>(p.m) * p.s - 1;
      return set_size(set & prefix_set(static_cast<int>(hd))) >= p.m;
    }
  }
  throw std::logic_error("unknown kind");
}

SetFamily densify(Kind k, const ExtremalParams& p) {
  const long long n = p.n();
  if (n > SetFamily::kDenseLimit)
    throw std::invalid_argument("n exceeds the dense-mode limit");
  SetFamily f(static_cast<int>(n));
  const std::uint64_t total = f.subset_count();
  for (std::uint64_t s = 0; s < total; ++s)
    if (member(k, p, s)) f.insert(s);
  return f;
}

BigCount complement_size_exact(Kind k, const ExtremalParams& p) {
  const long long n = p.n();
  const long long m = p.m, c = p.c, s = p.s, ell = p.ell();
  switch (k) {
    case Kind::P: {
      // head [l-1] (h elements, weight 2 each analogically): 2h + b <= m
      const long long head = ell - 1 > 0 ? ell - 1 : 0;
      BigCount total = 0;
      for (long long j = 0; 2 * j <= m; ++j) {
        BigCount inner = 0;
        for (long long b = 0; b <= m - 2 * j; ++b) inner += binomial(n - head, b);
        total += binomial(head, j) * inner;
      }
      return total;
    }
    case Kind::Pprime: {
      BigCount total = 0;
      for (long long i = 0; i <= m; ++i) total += binomial(n, i);
      return total - binomial(m * ell - 1, m);
    }
    case Kind::Q: {
      const long long head = m * s - c - 1;
      BigCount total = 0;
      for (long long t = 0; t <= 2 * c + 1; ++t) {
        const long long amax = (2 * m - 1 - t) / 2;
        if (2 * m - 1 - t < 0) continue;
        BigCount inner = 0;
        for (long long a = 0; a <= amax; ++a) inner += binomial(head, a);
        total += binomial(2 * c + 1, t) * inner;
      }
      return total;
    }
    case Kind::W: {
      BigCount inner = 0;
      for (long long a = 0; a <= m - 1; ++a) inner += binomial(m * s - 1, a);
      return pow2(c + 1) * inner;
    }
  }
  throw std::logic_error("unknown kind");
}

BigCount family_size_exact(Kind k, const ExtremalParams& p) {
  return pow2(p.n()) - complement_size_exact(k, p);
}

BigCount leading_coefficient(Kind k, const ExtremalParams& p) {
  switch (k) {
    case Kind::P:
      throw std::invalid_argument(
          "P's complement grows like s^m; it has no C(n, m-1) coefficient");
    case Kind::Pprime: return BigCount(p.m + 1) * p.c + 2;
    case Kind::Q: return BigCount(2) * p.c + 2;
    case Kind::W: return pow2(p.c + 1);
  }
  throw std::logic_error("unknown kind");
}

QWEqualityReport q_w_equality_check(int m, int s) {
  if (m < 1 || s < 1) throw std::invalid_argument("require m, s >= 1");
  ExtremalParams p(m, 1, s);
  QWEqualityReport r;
  r.m = m;
  r.s = s;
  r.q_complement = complement_size_exact(Kind::Q, p);
  r.w_complement = complement_size_exact(Kind::W, p);
  r.equal = r.q_complement == r.w_complement;
  if (p.n() <= 16 && p.n() <= SetFamily::kDenseLimit) {
    SetFamily q = densify(Kind::Q, p);
    SetFamily w = densify(Kind::W, p);
    BigCount qc = pow2(p.n()) - q.size();
    BigCount wc = pow2(p.n()) - w.size();
    if (qc != r.q_complement || wc != r.w_complement)
      throw std::logic_error("closed form disagrees with dense enumeration");
    r.enumeration_checked = true;
  }
  return r;
}

std::vector<Rational> WeightVector::materialize() const {
  std::vector<Rational> x(static_cast<size_t>(n));
  for (long long i = 1; i <= n; ++i) x[static_cast<size_t>(i - 1)] = value(i);
  return x;
}

WeightVector canonical_weights(Kind k, const ExtremalParams& p) {
  WeightVector w;
  w.n = p.n();
  const long long m = p.m, c = p.c, s = p.s, ell = p.ell();
  switch (k) {
    case Kind::P:
      w.split = ell - 1 > 0 ? ell - 1 : 0;
      w.head = Rational(2, m + 1);
      w.tail = Rational(1, m + 1);
      break;
    case Kind::Pprime:
      w.split = m * ell - 1 > 0 ? m * ell - 1 : 0;
      w.head = Rational(1, m);
      w.tail = Rational(1, m + 1);
      break;
    case Kind::Q:
      w.split = m * s - c - 1 > 0 ? m * s - c - 1 : 0;
      w.head = Rational(1, m);
      w.tail = Rational(1, 2 * m);
      break;
    case Kind::W:
      w.split = m * s - 1;
      w.head = Rational(1, m);
      w.tail = Rational(0);
      break;
  }
  return w;
}

}  // namespace extfam
