#include "flagkey/combinat.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace flagkey {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::part(int i) const {
  return (i >= 1 && i <= size()) ? parts_[i - 1] : 0;
}

int Partition::rows() const {
  int r = 0;
  while (r < size() && parts_[r] > 0) ++r;
  return r;
}

long long Partition::total() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

bool Partition::is_strict() const {
  for (int i = 1; i < rows(); ++i)
    if (parts_[i - 1] == parts_[i]) return false;
  return true;
}

bool Partition::contains(const Partition& mu) const {
  for (int i = 1; i <= std::max(size(), mu.size()); ++i)
    if (mu.part(i) > part(i)) return false;
  return true;
}

Partition Partition::trimmed() const {
  std::vector<int> p(parts_.begin(), parts_.begin() + rows());
  return Partition(std::move(p));
}

Partition Partition::padded(int n) const {
  std::vector<int> p = parts_;
  while (static_cast<int>(p.size()) < n) p.push_back(0);
  return Partition(std::move(p));
}

bool Partition::operator==(const Partition& o) const {
  return trimmed().parts() == o.trimmed().parts();
}

bool Partition::operator<(const Partition& o) const {
  return trimmed().parts() < o.trimmed().parts();
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 0) throw std::invalid_argument("composition parts must be nonnegative");
}

int Composition::part(int i) const {
  return (i >= 1 && i <= size()) ? parts_[i - 1] : 0;
}

long long Composition::total() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

Composition Composition::trimmed() const {
  std::vector<int> p = parts_;
  while (!p.empty() && p.back() == 0) p.pop_back();
  return Composition(std::move(p));
}

Composition Composition::padded(int n) const {
  std::vector<int> p = parts_;
  while (static_cast<int>(p.size()) < n) p.push_back(0);
  return Composition(std::move(p));
}

Partition Composition::sorted_decreasing() const {
  std::vector<int> p = parts_;
  std::sort(p.rbegin(), p.rend());
  return Partition(std::move(p));
}

bool Composition::operator==(const Composition& o) const {
  return trimmed().parts() == o.trimmed().parts();
}

bool Composition::operator<(const Composition& o) const {
  return trimmed().parts() < o.trimmed().parts();
}

Flag::Flag(std::vector<int> bounds) : bounds_(std::move(bounds)) {
  if (bounds_.empty()) throw std::invalid_argument("flag must be nonempty");
  for (size_t i = 0; i < bounds_.size(); ++i) {
    if (bounds_[i] < 1) throw std::invalid_argument("flag bounds must be positive");
    if (i + 1 < bounds_.size() && bounds_[i] > bounds_[i + 1])
      throw std::invalid_argument("flag bounds must be nondecreasing");
  }
}

int Flag::bound(int i) const {
  if (i < 1) throw std::out_of_range("flag index");
  return i <= size() ? bounds_[i - 1] : bounds_.back();
}

int Flag::max_bound() const { return bounds_.back(); }

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1])
      throw std::invalid_argument("permutation must be a bijection on 1..n");
    seen[v - 1] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("transposition index out of range");
  Permutation p = identity(n);
  std::swap(p.images_[i - 1], p.images_[i]);
  return p;
}

Permutation Permutation::from_word(const std::vector<int>& word, int n) {
  Permutation w = identity(n);
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    w = Permutation::transposition(n, *it).compose(w);
  return w;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= n(); ++i) inv[images_[i - 1] - 1] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& rhs) const {
  if (n() != rhs.n()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> im(images_.size());
  for (int i = 1; i <= n(); ++i) im[i - 1] = image(rhs.image(i));
  return Permutation(std::move(im));
}

int Permutation::inversions() const {
  int inv = 0;
  for (int i = 0; i < n(); ++i)
    for (int j = i + 1; j < n(); ++j)
      if (images_[i] > images_[j]) ++inv;
  return inv;
}

bool Permutation::is_identity() const { return inversions() == 0; }

std::vector<int> Permutation::reduced_word() const {
  // Push each value, largest first, to its home position by adjacent swaps.
  // Each swap at position j is a right multiplication by s_j, so the
  // collected letters reversed give a reduced word for w.
  std::vector<int> v = images_;
  std::vector<int> letters;
  for (int val = n(); val >= 2; --val) {
    int p = static_cast<int>(std::find(v.begin(), v.end(), val) - v.begin());
    while (p < val - 1) {
      std::swap(v[p], v[p + 1]);
      letters.push_back(p + 1);
      ++p;
    }
  }
  std::reverse(letters.begin(), letters.end());
  return letters;
}

std::vector<std::vector<int>> Permutation::all_reduced_words() const {
  // Left descents: value i after value i+1 in one-line order.
  std::vector<std::vector<int>> out;
  if (is_identity()) {
    out.push_back({});
    return out;
  }
  const Permutation& w = *this;
  Permutation winv = inverse();
  for (int i = 1; i < n(); ++i) {
    if (winv.image(i) > winv.image(i + 1)) {
      Permutation shorter = Permutation::transposition(n(), i).compose(w);
      for (auto& tail : shorter.all_reduced_words()) {
        std::vector<int> word;
        word.reserve(tail.size() + 1);
        word.push_back(i);
        word.insert(word.end(), tail.begin(), tail.end());
        out.push_back(std::move(word));
      }
    }
  }
  return out;
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
  // Ehresmann criterion; the test suite cross-checks it against an explicit
  // subword search over a fixed reduced word of w.
  if (u.n() != w.n()) throw std::invalid_argument("bruhat_leq needs equal n");
  int n = u.n();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      int cu = 0, cw = 0;
      for (int k = 1; k <= i; ++k) {
        if (u.image(k) >= j) ++cu;
        if (w.image(k) >= j) ++cw;
      }
      if (cu > cw) return false;
    }
  }
  return true;
}

bool dominance_leq(const Composition& v, const Composition& w) {
  if (v.total() != w.total()) return false;
  long long sv = 0, sw = 0;
  int len = std::max(v.size(), w.size());
  for (int i = 1; i <= len; ++i) {
    sv += v.part(i);
    sw += w.part(i);
    if (sv > sw) return false;
  }
  return true;
}

Composition apply_perm(const Permutation& w, const Composition& v) {
  if (v.size() < w.n())
    throw std::invalid_argument("apply_perm: vector shorter than permutation degree");
  std::vector<int> out = v.parts();
  for (int i = 1; i <= w.n(); ++i) out[w.image(i) - 1] = v.part(i);
  return Composition(std::move(out));
}

bool is_reduced_word(const std::vector<int>& word, int n) {
  Permutation w = Permutation::from_word(word, n);
  return w.inversions() == static_cast<int>(word.size());
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
    if (pos != tok.size()) throw std::invalid_argument("bad integer list: " + text);
    out.push_back(v);
  }
  if (out.empty() && !text.empty()) throw std::invalid_argument("bad integer list: " + text);
  return out;
}

std::string format_int_list(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

std::vector<Partition> partitions_up_to(int max_total, int max_rows) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
    if (!cur.empty()) out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == max_rows) return;
    for (int p = std::min(remaining, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, max_total, max_total);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace flagkey
