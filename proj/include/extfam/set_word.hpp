#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace extfam {

// A subset of [n] = {1, ..., n} as a bitmask: element i occupies bit i-1.
// Elements are 1-based throughout, including serialization.
using SetWord = std::uint64_t;

inline constexpr SetWord kEmptySet = 0;
inline constexpr int kMaxElements = 64;

inline constexpr SetWord element_bit(int element) {
  return SetWord{1} << (element - 1);
}

inline constexpr SetWord full_set(int n) {
  return n >= kMaxElements ? ~SetWord{0} : (SetWord{1} << n) - 1;
}

// The prefix [1..k] as a mask; empty for k <= 0.
inline constexpr SetWord prefix_set(int k) {
  if (k <= 0) return kEmptySet;
  return full_set(k);
}

inline constexpr bool set_contains(SetWord s, int element) {
  return (s >> (element - 1)) & 1;
}

inline int set_size(SetWord s) { return std::popcount(s); }

inline bool sets_disjoint(SetWord a, SetWord b) { return (a & b) == 0; }

inline int lowest_element(SetWord s) { return std::countr_zero(s) + 1; }

inline std::vector<int> set_elements(SetWord s) {
  std::vector<int> out;
  while (s) {
    out.push_back(std::countr_zero(s) + 1);
    s &= s - 1;
  }
  return out;
}

inline SetWord make_set(const std::vector<int>& elements, int n) {
  SetWord s = 0;
  for (int e : elements) {
    if (e < 1 || e > n)
      throw std::invalid_argument("set element " + std::to_string(e) +
                                  " outside ground set [" + std::to_string(n) + "]");
    s |= element_bit(e);
  }
  return s;
}

// Componentwise comparison of equal-size sets in increasing-order listing:
// true iff a_i >= b_i for all i. Sets of different sizes are incomparable.
inline bool dominates(SetWord a, SetWord b) {
  if (set_size(a) != set_size(b)) return false;
  while (a) {
    if (std::countr_zero(a) < std::countr_zero(b)) return false;
    a &= a - 1;
    b &= b - 1;
  }
  return true;
}

// Elementary domination step: move element e of `a` down to e-1 (which must
// be vacant). The transitive closure of these steps generates domination.
template <typename Fn>
void for_each_domination_pred(SetWord a, Fn&& fn) {
  for (SetWord rest = a; rest; rest &= rest - 1) {
    SetWord b = rest & ~(rest - 1);  // lowest remaining bit
    if (b > 1 && !(a & (b >> 1))) fn((a ^ b) | (b >> 1));
  }
}

// Inverse step: move element e up to e+1 within [n].
template <typename Fn>
void for_each_domination_succ(SetWord a, int n, Fn&& fn) {
  for (SetWord rest = a; rest; rest &= rest - 1) {
    SetWord b = rest & ~(rest - 1);
    SetWord up = b << 1;
    if (up <= element_bit(n) && !(a & up)) fn((a ^ b) | up);
  }
}

// "1 3 7" with elements ascending; "-" for the empty set.
std::string format_set(SetWord s);

// Parses one family-file line: strictly increasing integers in [1, n],
// or the literal "-" for the empty set.
SetWord parse_set(const std::string& line, int n);

}  // namespace extfam
