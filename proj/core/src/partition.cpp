#include "orbvar/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace orbvar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw std::invalid_argument("not a partition: parts must be positive and weakly decreasing");
    }
  }
}

Partition Partition::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw std::invalid_argument("partition must be written as [p1,p2,...]");
  }
  text = trim(text.substr(1, text.size() - 2));
  std::vector<int> parts;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = std::string(trim(text.substr(0, comma)));
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw std::invalid_argument("bad partition part '" + item + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text = trim(text.substr(comma + 1));
    if (text.empty()) throw std::invalid_argument("trailing comma in partition");
  }
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::string Partition::toString() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

bool dominates(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("dominates: partitions of different sizes");
  int a = 0;
  int b = 0;
  for (int i = 0; i < std::max(lambda.length(), mu.length()); ++i) {
    a += lambda[i];
    b += mu[i];
    if (a < b) return false;
  }
  return true;
}

Partition transpose(const Partition& lambda) {
  std::vector<int> t(lambda.empty() ? 0 : lambda[0], 0);
  for (int part : lambda.parts()) {
    for (int j = 0; j < part; ++j) ++t[j];
  }
  return Partition(std::move(t));
}

namespace {

// Parts whose multiplicity must be even: odd parts in type C, even in type B.
bool constrainedPart(int part, LieType type) { return (part % 2 == 1) == (type == LieType::C); }

}  // namespace

bool isXPartition(const Partition& lambda, LieType type) {
  const auto& p = lambda.parts();
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    if (constrainedPart(p[i], type) && (j - i) % 2 == 1) return false;
    i = j;
  }
  return true;
}

// Take the largest offending part q, lower its last occurrence to q-1 and
// raise the first later part that is below q-1. Each round strictly lowers
// the partition in dominance order while staying above every X-partition that
// the input dominates.
Partition xCollapse(const Partition& lambda, LieType type) {
  if (type == LieType::C && lambda.size() % 2 == 1) {
    throw DomainError("no C-partition of odd size " + std::to_string(lambda.size()));
  }
  std::vector<int> p = lambda.parts();
  while (!isXPartition(Partition(p), type)) {
    int q = 0;
    std::size_t last = 0;
    for (std::size_t i = 0; i < p.size();) {
      std::size_t j = i;
      while (j < p.size() && p[j] == p[i]) ++j;
      if (constrainedPart(p[i], type) && (j - i) % 2 == 1) {
        q = p[i];
        last = j - 1;
        break;
      }
      i = j;
    }
    p[last] -= 1;
    std::size_t k = last + 1;
    while (k < p.size() && p[k] >= q - 1) ++k;
    if (k == p.size()) p.push_back(0);
    p[k] += 1;
    while (!p.empty() && p.back() == 0) p.pop_back();
  }
  return Partition(std::move(p));
}

Partition dualLS(const Partition& lambda, LieType type) {
  if (!isXPartition(lambda, type)) {
    throw DomainError(lambda.toString() + " is not a " + std::string(1, toChar(type)) + "-partition");
  }
  return xCollapse(transpose(lambda), type);
}

bool isSpecial(const Partition& lambda, LieType type) { return dualLS(dualLS(lambda, type), type) == lambda; }

namespace {

void partitionsRec(int remaining, int maxPart, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, maxPart); p >= 1; --p) {
    prefix.push_back(p);
    partitionsRec(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitionsOf(int n) {
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitionsRec(n, n, prefix, out);
  return out;
}

}  // namespace orbvar
