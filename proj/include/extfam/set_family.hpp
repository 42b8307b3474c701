#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "extfam/bignum.hpp"
#include "extfam/set_word.hpp"

namespace extfam {

// Dense family over 2^[n]: one membership bit per subset of [n]. At the
// dense limit n = 24 this is 2 MiB. Construct via insert/erase, then treat
// as immutable; all operations below are pure and return fresh values.
class SetFamily {
 public:
  static constexpr int kDenseLimit = 24;

  explicit SetFamily(int n);
  static SetFamily full(int n);

  int n() const { return n_; }
  std::uint64_t size() const { return size_; }
  std::uint64_t subset_count() const { return std::uint64_t{1} << n_; }

  bool contains(SetWord s) const {
    return (words_[s >> 6] >> (s & 63)) & 1;
  }
  void insert(SetWord s);
  void erase(SetWord s);

  template <typename Fn>
  void for_each_member(Fn&& fn) const {
    const std::uint64_t total = subset_count();
    for (std::uint64_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        unsigned b = std::countr_zero(bits);
        bits &= bits - 1;
        SetWord s = (w << 6) | b;
        if (s < total) fn(s);
      }
    }
  }

  std::vector<SetWord> members() const;

  bool operator==(const SetFamily& other) const = default;

 private:
  int n_;
  std::uint64_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct LayerProfile {
  int n;
  std::vector<std::uint64_t> layer_size;  // |F^(i)|, i = 0..n
  std::vector<BigCount> deficit;          // y_F(i) = C(n,i) - |F^(i)|
};

// Builds the family containing exactly the given sets (duplicates collapse).
SetFamily make_family(int n, const std::vector<SetWord>& sets);

SetFamily complement(const SetFamily& f);

LayerProfile layer_profile(const SetFamily& f);

// True iff for every A in F, every same-size B that A dominates is in F.
// Checked via elementary steps: moving one element down by one generates
// the whole domination order.
bool is_shifted(const SetFamily& f);

// Smallest shifted superfamily. Idempotent. Note: unlike compression, the
// closure can increase the matching number.
SetFamily shift_closure(const SetFamily& f);

// Classical compression S_ij (i < j): members containing j but not i are
// replaced by (A \ {j}) u {i} unless the replacement is already present.
// Preserves |F|; never increases the matching number.
SetFamily shift_compress(const SetFamily& f, int i, int j);

// Applies S_ij for all i < j until fixpoint; the result is shifted and has
// the same size as the input.
SetFamily compress_to_shifted(const SetFamily& f);

// Lifts F on [n] to {A in 2^[n+1] : A n [n] in F}. Doubles the size and
// preserves the matching number exactly.
SetFamily doubling(const SetFamily& f);

// Text format: line 1 "n=<int>"; one set per subsequent line as strictly
// increasing space-separated elements; "-" denotes the empty set; lines
// starting with '#' are comments.
SetFamily read_family(std::istream& in);
void write_family(std::ostream& out, const SetFamily& f);
SetFamily read_family_file(const std::string& path);
void write_family_file(const std::string& path, const SetFamily& f);

}  // namespace extfam
