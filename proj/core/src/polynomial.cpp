#include "flagkey/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace flagkey {

Monomial Monomial::from_exponents(const std::vector<int>& exps) {
  if (exps.size() > kMaxVars) throw std::invalid_argument("too many variables (max 8)");
  Monomial m;
  for (size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > kMaxExponent)
      throw std::invalid_argument("exponent out of range");
    m.bits_ |= static_cast<std::uint64_t>(exps[i]) << (8 * (kMaxVars - 1 - i));
  }
  return m;
}

Monomial Monomial::with_exponent(int var, int e) const {
  if (e < 0 || e > kMaxExponent) throw std::invalid_argument("exponent out of range");
  Monomial m;
  int shift = 8 * (kMaxVars - var);
  m.bits_ = (bits_ & ~(0xffULL << shift)) | (static_cast<std::uint64_t>(e) << shift);
  return m;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial m;
  m.bits_ = bits_ + o.bits_;  // per-byte sums; callers stay far below 255
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (int v = 1; v <= kMaxVars; ++v) d += exponent(v);
  return d;
}

std::vector<int> Monomial::exponents(int nvars) const {
  std::vector<int> e(nvars);
  for (int v = 1; v <= nvars; ++v) e[v - 1] = exponent(v);
  return e;
}

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > Monomial::kMaxVars)
    throw std::invalid_argument("variable count out of range (max 8)");
}

Polynomial Polynomial::one(int nvars) { return constant(1, nvars); }

Polynomial Polynomial::constant(Int c, int nvars) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.emplace_back(Monomial(), std::move(c));
  return p;
}

Polynomial Polynomial::monomial(const std::vector<int>& exps, Int coeff, int nvars) {
  Polynomial p(nvars);
  if (static_cast<int>(exps.size()) > nvars)
    throw std::invalid_argument("exponent vector longer than variable count");
  if (coeff != 0) p.terms_.emplace_back(Monomial::from_exponents(exps), std::move(coeff));
  return p;
}

Polynomial Polynomial::variable(int var, int nvars) {
  if (var < 1 || var > nvars) throw std::invalid_argument("variable index out of range");
  std::vector<int> e(nvars, 0);
  e[var - 1] = 1;
  return monomial(e, 1, nvars);
}

Int Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return t.first < x; });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

int Polynomial::max_exponent() const {
  int mx = 0;
  for (const auto& [m, c] : terms_)
    for (int v = 1; v <= nvars_; ++v) mx = std::max(mx, m.exponent(v));
  return mx;
}

long long Polynomial::degree() const {
  long long d = -1;
  for (const auto& [m, c] : terms_) d = std::max<long long>(d, m.degree());
  return d;
}

void Polynomial::check_vars(const Polynomial& o) const {
  if (nvars_ != o.nvars_)
    throw std::invalid_argument("polynomial variable-count mismatch");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_vars(o);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.cbegin();
  auto b = o.terms_.cbegin();
  while (a != terms_.cend() || b != o.terms_.cend()) {
    if (b == o.terms_.cend() || (a != terms_.cend() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == terms_.cend() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      Int c = a->second + b->second;
      if (c != 0) merged.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += o.scaled(-1); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_vars(b);
  std::map<Monomial, Int> acc;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) acc[ma.times(mb)] += ca * cb;
  Polynomial r(a.nvars_);
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.emplace_back(m, std::move(c));
  return r;
}

Polynomial Polynomial::scaled(const Int& k) const {
  Polynomial r(nvars_);
  if (k == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& [m, c] : terms_) r.terms_.emplace_back(m, c * k);
  return r;
}

void Polynomial::push_term_unchecked(Monomial m, Int c) {
  terms_.emplace_back(m, std::move(c));
}

static void append_monomial_text(std::string& out, const Monomial& m, int nvars) {
  for (int v = 1; v <= nvars; ++v) {
    int e = m.exponent(v);
    if (e == 0) continue;
    out += "*x" + std::to_string(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
}

std::string Polynomial::canonical_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += ' ';
    out += (it->second < 0) ? '-' : '+';
    out += (it->second < 0 ? -it->second : it->second).str();
    append_monomial_text(out, it->first, nvars_);
  }
  return out;
}

std::string Polynomial::pretty_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Int c = it->second;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    Int a = c < 0 ? -c : c;
    std::string body;
    append_monomial_text(body, it->first, nvars_);
    if (a != 1 || body.empty())
      out += a.str() + body;
    else
      out += body.substr(1);  // drop the leading '*'
    first = false;
  }
  return out;
}

Polynomial Polynomial::parse(const std::string& text, int nvars) {
  Polynomial out(nvars);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) return out;
  if (text.compare(i, 1, "0") == 0 && i + 1 == text.size()) return out;
  bool first = true;
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+') {
      ++i;
    } else if (text[i] == '-') {
      sign = -1;
      ++i;
    } else if (!first) {
      throw std::invalid_argument("polynomial term must start with a sign");
    }
    skip_ws();
    Int coeff = 1;
    bool saw_coeff = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      coeff = Int(text.substr(i, j - i));
      i = j;
      saw_coeff = true;
    }
    std::vector<int> exps(nvars, 0);
    bool saw_var = false;
    while (true) {
      size_t save = i;
      if (i < text.size() && text[i] == '*') ++i;
      else if (saw_coeff || saw_var) break;
      if (i < text.size() && text[i] == 'x') {
        ++i;
        size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i) throw std::invalid_argument("expected variable index after 'x'");
        int var = std::stoi(text.substr(i, j - i));
        if (var < 1 || var > nvars)
          throw std::invalid_argument("variable index out of range in polynomial text");
        i = j;
        int e = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          j = i;
          while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
          if (j == i) throw std::invalid_argument("expected exponent after '^'");
          e = std::stoi(text.substr(i, j - i));
          i = j;
        }
        exps[var - 1] += e;
        saw_var = true;
      } else {
        i = save;
        break;
      }
    }
    if (!saw_coeff && !saw_var)
      throw std::invalid_argument("empty polynomial term");
    out += Polynomial::monomial(exps, sign * coeff, nvars);
    first = false;
    skip_ws();
  }
  return out;
}

Polynomial act(const Permutation& w, const Polynomial& p) {
  if (w.n() > p.var_count())
    throw std::invalid_argument("act: permutation degree exceeds variable count");
  Polynomial r(p.var_count());
  std::map<Monomial, Int> acc;
  for (const auto& [m, c] : p.terms()) {
    Monomial m2 = m;
    for (int i = 1; i <= w.n(); ++i) m2 = m2.with_exponent(w.image(i), m.exponent(i));
    acc[m2] += c;
  }
  for (auto& [m, c] : acc)
    if (c != 0) r.push_term_unchecked(m, std::move(c));
  return r;
}

Polynomial complete_homogeneous(int degree, int num_vars, int total_vars) {
  Polynomial r(total_vars);
  if (degree < 0) return r;
  if (num_vars < 0) throw std::invalid_argument("negative variable window");
  if (degree == 0) return Polynomial::one(total_vars);
  if (num_vars == 0) return r;
  if (num_vars > total_vars)
    throw std::invalid_argument("variable window exceeds total variable count");
  // Enumerate exponent vectors of the given degree in ascending lex order.
  std::vector<int> e(num_vars, 0);
  std::vector<Polynomial::Term> terms;
  auto rec = [&](auto&& self, int pos, int rem) -> void {
    if (pos == num_vars - 1) {
      e[pos] = rem;
      terms.emplace_back(Monomial::from_exponents(e), 1);
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      e[pos] = v;
      self(self, pos + 1, rem - v);
    }
  };
  rec(rec, 0, degree);
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& t : terms) r.push_term_unchecked(t.first, std::move(t.second));
  return r;
}

}  // namespace flagkey
