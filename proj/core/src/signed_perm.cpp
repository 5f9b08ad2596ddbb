#include "orbvar/signed_perm.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace orbvar {

SignedPermutation::SignedPermutation(std::vector<int> entries) : entries_(std::move(entries)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int x : entries_) {
    const int a = std::abs(x);
    if (a < 1 || a > n || seen[a]) {
      throw std::invalid_argument("not a signed permutation: " + toString());
    }
    seen[a] = true;
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> e(n);
  for (int i = 0; i < n; ++i) e[i] = i + 1;
  return SignedPermutation(std::move(e));
}

SignedPermutation SignedPermutation::generator(int n, RootIndex i) {
  if (i.value < 1 || i.value > n) throw std::invalid_argument("root index out of range");
  std::vector<int> e(n);
  for (int k = 0; k < n; ++k) e[k] = k + 1;
  if (i.value == 1) {
    e[0] = -1;
  } else {
    std::swap(e[i.value - 2], e[i.value - 1]);
  }
  return SignedPermutation(std::move(e));
}

SignedPermutation SignedPermutation::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<int> e;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw std::invalid_argument("bad permutation entry '" + token + "'");
    e.push_back(value);
  }
  if (e.empty()) throw std::invalid_argument("empty permutation");
  return SignedPermutation(std::move(e));
}

int SignedPermutation::operator()(int i) const {
  const int v = entries_.at(std::abs(i) - 1);
  return i > 0 ? v : -v;
}

bool SignedPermutation::isIdentity() const {
  for (int i = 0; i < size(); ++i) {
    if (entries_[i] != i + 1) return false;
  }
  return true;
}

std::string SignedPermutation::toString() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(entries_[i]);
  }
  return out;
}

SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& v) {
  if (u.size() != v.size()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> e(v.size());
  for (int i = 0; i < v.size(); ++i) e[i] = u(v.entries()[i]);
  return SignedPermutation(std::move(e));
}

SignedPermutation inverse(const SignedPermutation& w) {
  std::vector<int> e(w.size());
  for (int i = 0; i < w.size(); ++i) {
    const int x = w.entries()[i];
    e[std::abs(x) - 1] = x > 0 ? i + 1 : -(i + 1);
  }
  return SignedPermutation(std::move(e));
}

// inv(w) + nsp(w) + neg(w): ordinary inversions, pairs with negative sum, and
// negative entries.
int length(const SignedPermutation& w, LieType) {
  const auto e = w.entries();
  const int n = w.size();
  int total = 0;
  for (int i = 0; i < n; ++i) {
    if (e[i] < 0) ++total;
    for (int j = i + 1; j < n; ++j) {
      if (e[i] > e[j]) ++total;
      if (e[i] + e[j] < 0) ++total;
    }
  }
  return total;
}

RootSet rightDescents(const SignedPermutation& w, LieType) {
  RootSet out;
  const auto e = w.entries();
  if (!e.empty() && e[0] < 0) out.insert(RootIndex{1});
  for (int i = 2; i <= w.size(); ++i) {
    if (e[i - 2] > e[i - 1]) out.insert(RootIndex{i});
  }
  return out;
}

RootSet leftDescents(const SignedPermutation& w, LieType type) { return rightDescents(inverse(w), type); }

std::string toString(const RootSet& roots) {
  std::string out = "{";
  bool first = true;
  for (auto r : roots) {
    if (!first) out += ',';
    out += std::to_string(r.value);
    first = false;
  }
  return out + "}";
}

}  // namespace orbvar
