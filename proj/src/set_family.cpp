#include "extfam/set_family.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace extfam {

std::string format_set(SetWord s) {
  if (s == kEmptySet) return "-";
  std::ostringstream os;
  bool first = true;
  for (int e : set_elements(s)) {
    if (!first) os << ' ';
    os << e;
    first = false;
  }
  return os.str();
}

SetWord parse_set(const std::string& line, int n) {
  std::istringstream is(line);
  std::string tok;
  if (!(is >> tok)) throw std::invalid_argument("empty set line");
  if (tok == "-") {
    if (is >> tok) throw std::invalid_argument("trailing tokens after '-'");
    return kEmptySet;
  }
  SetWord s = 0;
  int prev = 0;
  std::istringstream again(line);
  int e;
  while (again >> e) {
    if (e < 1 || e > n)
      throw std::invalid_argument("element " + std::to_string(e) +
                                  " outside [1," + std::to_string(n) + "]");
    if (e <= prev)
      throw std::invalid_argument("elements must be strictly increasing: " + line);
    s |= element_bit(e);
    prev = e;
  }
  if (!again.eof())
    throw std::invalid_argument("malformed set line: " + line);
  return s;
}

SetFamily::SetFamily(int n) : n_(n) {
  if (n < 1 || n > kDenseLimit)
    throw std::invalid_argument("dense families require 1 <= n <= " +
                                std::to_string(kDenseLimit));
  words_.assign(((std::uint64_t{1} << n) + 63) / 64, 0);
}

SetFamily SetFamily::full(int n) {
  SetFamily f(n);
  const std::uint64_t total = f.subset_count();
  for (std::uint64_t i = 0; i < f.words_.size(); ++i) f.words_[i] = ~std::uint64_t{0};
  if (total < 64) f.words_[0] = (std::uint64_t{1} << total) - 1;
  f.size_ = total;
  return f;
}

void SetFamily::insert(SetWord s) {
  if (!contains(s)) {
    words_[s >> 6] |= std::uint64_t{1} << (s & 63);
    ++size_;
  }
}

void SetFamily::erase(SetWord s) {
  if (contains(s)) {
    words_[s >> 6] &= ~(std::uint64_t{1} << (s & 63));
    --size_;
  }
}

std::vector<SetWord> SetFamily::members() const {
  std::vector<SetWord> out;
  out.reserve(size_);
  for_each_member([&](SetWord s) { out.push_back(s); });
  return out;
}

SetFamily make_family(int n, const std::vector<SetWord>& sets) {
  SetFamily f(n);
  const SetWord ground = full_set(n);
  for (SetWord s : sets) {
    if (s & ~ground)
      throw std::invalid_argument("set " + format_set(s) + " not within [1," +
                                  std::to_string(n) + "]");
    f.insert(s);
  }
  return f;
}

SetFamily complement(const SetFamily& f) {
  SetFamily g = SetFamily::full(f.n());
  f.for_each_member([&](SetWord s) { g.erase(s); });
  return g;
}

LayerProfile layer_profile(const SetFamily& f) {
  LayerProfile p;
  p.n = f.n();
  p.layer_size.assign(f.n() + 1, 0);
  f.for_each_member([&](SetWord s) { ++p.layer_size[set_size(s)]; });
  p.deficit.resize(f.n() + 1);
  for (int i = 0; i <= f.n(); ++i)
    p.deficit[i] = binomial(f.n(), i) - p.layer_size[i];
  return p;
}

bool is_shifted(const SetFamily& f) {
  bool ok = true;
  f.for_each_member([&](SetWord s) {
    if (!ok) return;
    for_each_domination_pred(s, [&](SetWord pred) {
      if (!f.contains(pred)) ok = false;
    });
  });
  return ok;
}

SetFamily shift_closure(const SetFamily& f) {
  SetFamily g = f;
  std::vector<SetWord> queue = f.members();
  while (!queue.empty()) {
    SetWord s = queue.back();
    queue.pop_back();
    for_each_domination_pred(s, [&](SetWord pred) {
      if (!g.contains(pred)) {
        g.insert(pred);
        queue.push_back(pred);
      }
    });
  }
  return g;
}

SetFamily shift_compress(const SetFamily& f, int i, int j) {
  if (i < 1 || i >= j || j > f.n())
    throw std::invalid_argument("shift_compress requires 1 <= i < j <= n");
  SetFamily g(f.n());
  const SetWord bi = element_bit(i), bj = element_bit(j);
  f.for_each_member([&](SetWord s) {
    if ((s & bj) && !(s & bi)) {
      SetWord moved = (s ^ bj) | bi;
      // blocked replacements stay put; membership is tested in the input
      g.insert(f.contains(moved) ? s : moved);
    } else {
      g.insert(s);
    }
  });
  return g;
}

SetFamily compress_to_shifted(const SetFamily& f) {
  SetFamily g = f;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = 2; j <= g.n(); ++j)
      for (int i = 1; i < j; ++i) {
        SetFamily h = shift_compress(g, i, j);
        if (!(h == g)) {
          g = h;
          changed = true;
        }
      }
  }
  return g;
}

SetFamily doubling(const SetFamily& f) {
  if (f.n() + 1 > SetFamily::kDenseLimit)
    throw std::invalid_argument("doubling would exceed the dense-mode limit");
  SetFamily g(f.n() + 1);
  const SetWord top = element_bit(f.n() + 1);
  f.for_each_member([&](SetWord s) {
    g.insert(s);
    g.insert(s | top);
  });
  return g;
}

SetFamily read_family(std::istream& in) {
  std::string line;
  int n = -1;
  // first significant line must be n=<int>
  while (std::getline(in, line)) {
    std::string t = line;
    if (auto pos = t.find('#'); pos != std::string::npos) t.resize(pos);
    while (!t.empty() && (t.back() == ' ' || t.back() == '\t' || t.back() == '\r'))
      t.pop_back();
    size_t b = t.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    t = t.substr(b);
    if (t.rfind("n=", 0) != 0)
      throw std::invalid_argument("family file must start with 'n=<int>'");
    n = std::stoi(t.substr(2));
    break;
  }
  if (n < 0) throw std::invalid_argument("family file missing 'n=<int>' header");
  SetFamily f(n);
  while (std::getline(in, line)) {
    std::string t = line;
    if (auto pos = t.find('#'); pos != std::string::npos) t.resize(pos);
    while (!t.empty() && (t.back() == ' ' || t.back() == '\t' || t.back() == '\r'))
      t.pop_back();
    size_t b = t.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    f.insert(parse_set(t.substr(b), n));
  }
  return f;
}

void write_family(std::ostream& out, const SetFamily& f) {
  out << "n=" << f.n() << '\n';
  f.for_each_member([&](SetWord s) { out << format_set(s) << '\n'; });
}

SetFamily read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open family file: " + path);
  return read_family(in);
}

void write_family_file(const std::string& path, const SetFamily& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  write_family(out, f);
}

}  // namespace extfam
