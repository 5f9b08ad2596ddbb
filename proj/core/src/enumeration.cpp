#include "orbvar/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "orbvar/cycles.hpp"
#include "orbvar/insertion.hpp"
#include "orbvar/operators.hpp"
#include "orbvar/orbital.hpp"

namespace orbvar {

std::vector<SignedPermutation> enumerateGroup(int n) {
  if (n < 1) throw std::invalid_argument("enumerateGroup: n must be positive");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<SignedPermutation> out;
  do {
    for (int signs = 0; signs < (1 << n); ++signs) {
      std::vector<int> e(perm);
      for (int i = 0; i < n; ++i) {
        if (signs & (1 << i)) e[i] = -e[i];
      }
      out.emplace_back(std::move(e));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace {

void sdtRec(const Partition& target, std::vector<int>& rows, std::vector<Domino>& placed, LieType type,
            std::vector<DominoTableau>& out) {
  const int label = static_cast<int>(placed.size()) + 1;
  if (rows == target.parts()) {
    out.emplace_back(type, placed);
    return;
  }
  const int height = static_cast<int>(rows.size());
  for (int r = 0; r <= height && r < target.length(); ++r) {
    const int len = r < height ? rows[r] : 0;
    const int above = r == 0 ? 1 << 20 : rows[r - 1];
    // Horizontal at the end of row r.
    if (len + 2 <= target[r] && len + 2 <= above) {
      if (r == height) rows.push_back(0);
      rows[r] += 2;
      placed.emplace_back(label, Square{r + 1, len + 1}, Square{r + 1, len + 2});
      sdtRec(target, rows, placed, type, out);
      placed.pop_back();
      rows[r] -= 2;
      if (rows[r] == 0) rows.pop_back();
    }
    // Vertical in rows r, r+1 at column len+1; row r+1 must currently end at
    // the same column.
    const int below = r + 1 < height ? rows[r + 1] : 0;
    if (below == len && len + 1 <= target[r] && len + 1 <= target[r + 1] && len + 1 <= above) {
      while (static_cast<int>(rows.size()) < r + 2) rows.push_back(0);
      rows[r] += 1;
      rows[r + 1] += 1;
      placed.emplace_back(label, Square{r + 1, len + 1}, Square{r + 2, len + 1});
      sdtRec(target, rows, placed, type, out);
      placed.pop_back();
      rows[r] -= 1;
      rows[r + 1] -= 1;
      while (!rows.empty() && rows.back() == 0) rows.pop_back();
    }
  }
}

}  // namespace

std::vector<DominoTableau> allSDT(const Partition& shape, LieType type) {
  const int core = hasCore(type) ? 1 : 0;
  if ((shape.size() - core) % 2 != 0 || shape.size() < core) {
    throw DomainError("shape " + shape.toString() + " has the wrong size parity for type " + toChar(type));
  }
  std::vector<DominoTableau> out;
  std::vector<int> rows;
  if (core) rows.push_back(1);
  std::vector<Domino> placed;
  if (shape.empty() && !core) return {DominoTableau(type)};
  sdtRec(shape, rows, placed, type, out);
  return out;
}

std::int64_t countSDT(const Partition& shape, LieType type) {
  return static_cast<std::int64_t>(allSDT(shape, type).size());
}

std::vector<Partition> shapesOfRank(int n, LieType type) {
  std::vector<Partition> out;
  for (const auto& p : partitionsOf(2 * n + (hasCore(type) ? 1 : 0))) {
    if (countSDT(p, type) > 0) out.push_back(p);
  }
  return out;
}

namespace {

template <typename Step, typename Stop>
std::set<DominoTableau> reachableTerminals(const DominoTableau& start, Step step, Stop stop) {
  std::set<DominoTableau> terminals;
  std::set<DominoTableau> visited;
  std::vector<DominoTableau> stack{start};
  while (!stack.empty()) {
    auto t = std::move(stack.back());
    stack.pop_back();
    if (!visited.insert(t).second) continue;
    if (stop(t)) {
      terminals.insert(t);
      continue;
    }
    for (auto& m : step(t)) stack.push_back(std::move(m.result));
  }
  return terminals;
}

}  // namespace

std::set<DominoTableau> annealTerminals(const DominoTableau& tableau) {
  return reachableTerminals(
      tableau, [](const DominoTableau& t) { return candidateMoves(t); },
      [](const DominoTableau& t) { return isXPartition(shape(t), t.type()); });
}

std::set<DominoTableau> specialTerminals(const DominoTableau& tableau) {
  return reachableTerminals(
      tableau, [](const DominoTableau& t) { return specialMoves(t); },
      [](const DominoTableau& t) {
        const auto s = shape(t);
        return isXPartition(s, t.type()) && isSpecial(s, t.type());
      });
}

std::string genTauSignature(const SignedPermutation& w, int depth, LieType type) {
  std::string out = toString(leftDescents(w, type));
  if (depth <= 0) return out;
  const auto u = inverse(w);
  std::vector<std::string> parts;
  for (int i = 2; i < w.size(); ++i) {
    for (auto [a, b] : {std::pair{i, i + 1}, std::pair{i + 1, i}}) {
      if (auto x = tryTSameLength(u, RootIndex{a}, RootIndex{b})) {
        parts.push_back("T" + std::to_string(a) + std::to_string(b) + ":" +
                        genTauSignature(inverse(*x), depth - 1, type));
      }
    }
  }
  const auto pair = rs(u, type);
  if (vTruncatedDomain(pair).defined) {
    parts.push_back("V:" + genTauSignature(inverse(rsInverse(vTruncated(pair))), depth - 1, type));
  }
  std::sort(parts.begin(), parts.end());
  out += "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ";";
    out += parts[i];
  }
  return out + "]";
}

// ---------------------------------------------------------------------------
// Verification suites

namespace {

struct Finding {
  std::vector<std::string> failures;
  std::int64_t instances = 0;
};

// Runs `check` on every element, split across `jobs` threads; findings are
// merged in element order so reports do not depend on the job count.
Finding forEachElement(const std::vector<SignedPermutation>& elements, int jobs,
                       const std::function<Finding(const SignedPermutation&)>& check) {
  std::vector<Finding> results(elements.size());
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(elements.size())));
  auto work = [&](int worker) {
    for (std::size_t i = worker; i < elements.size(); i += workers) results[i] = check(elements[i]);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < workers; ++t) threads.emplace_back(work, t);
    for (auto& t : threads) t.join();
  }
  Finding merged;
  for (auto& r : results) {
    merged.instances += r.instances;
    for (auto& f : r.failures) merged.failures.push_back(std::move(f));
  }
  return merged;
}

std::string tableauText(const DominoTableau& t) {
  std::string out;
  for (const auto& d : t.dominoes()) {
    out += std::to_string(d.label()) + ":(" + std::to_string(d.first().row) + "," + std::to_string(d.first().col) +
           ")(" + std::to_string(d.second().row) + "," + std::to_string(d.second().col) + ") ";
  }
  return out;
}

std::int64_t groupOrder(int n) {
  std::int64_t order = 1;
  for (int i = 1; i <= n; ++i) order *= 2 * i;
  return order;
}

using Suite = std::function<void(int, LieType, const VerifyOptions&, VerificationReport&)>;

void absorb(VerificationReport& report, Finding f) {
  report.instances += f.instances;
  for (auto& x : f.failures) report.failures.push_back(std::move(x));
}

void rsBijection(int n, LieType type, const VerifyOptions& opt, VerificationReport& report) {
  const auto group = enumerateGroup(n);
  absorb(report, forEachElement(group, opt.jobs, [type](const SignedPermutation& w) {
           Finding f{{}, 1};
           const auto pair = rs(w, type);
           const auto back = rsInverse(pair);
           if (back != w) f.failures.push_back("rsInverse(rs(" + w.toString() + ")) = " + back.toString());
           return f;
         }));
  std::set<TableauPair> images;
  for (const auto& w : group) images.insert(rs(w, type));
  if (static_cast<std::int64_t>(images.size()) != groupOrder(n)) {
    report.failures.push_back("rs is not injective: " + std::to_string(images.size()) + " distinct pairs");
  }
}

void involutionCriterion(int n, LieType type, const VerifyOptions& opt, VerificationReport& report) {
  const auto group = enumerateGroup(n);
  absorb(report, forEachElement(group, opt.jobs, [type](const SignedPermutation& w) {
           Finding f{{}, 1};
           const bool involution = compose(w, w).isIdentity();
           const auto pair = rs(w, type);
           if (involution != (pair.left == pair.right)) {
             f.failures.push_back(w.toString() + ": involution=" + std::to_string(involution) +
                                  " but T_L==T_R is " + std::to_string(pair.left == pair.right));
           }
           return f;
         }));
  const auto involutions = std::count_if(group.begin(), group.end(), [](const auto& w) { return compose(w, w).isIdentity(); });
  std::int64_t tableaux = 0;
  for (const auto& p : shapesOfRank(n, type)) tableaux += countSDT(p, type);
  if (involutions != tableaux) {
    report.failures.push_back(std::to_string(involutions) + " involutions but " + std::to_string(tableaux) +
                              " standard domino tableaux");
  }
  report.notes.push_back("involutions = tableaux = " + std::to_string(tableaux));
}

void inverseTranspose(int n, LieType type, const VerifyOptions& opt, VerificationReport& report) {
  absorb(report, forEachElement(enumerateGroup(n), opt.jobs, [type](const SignedPermutation& w) {
           Finding f{{}, 1};
           if (rs(inverse(w), type).left != rs(w, type).right) {
             f.failures.push_back("T_L(w^-1) != T_R(w) for w = " + w.toString());
           }
           return f;
         }));
}

void cycleInvolution(int n, LieType type, const VerifyOptions& opt, VerificationReport& report) {
  absorb(report, forEachElement(enumerateGroup(n), opt.jobs, [type](const SignedPermutation& w) {
           Finding f;
           const auto t = rs(w, type).left;
           const auto before = shape(t);
           for (Coloring c : {Coloring::X, Coloring::D}) {
             const auto cycles = cyclesOf(t, c);
             std::vector<int> covered;
             for (const auto& cyc : cycles) covered.insert(covered.end(), cyc.labels.begin(), cyc.labels.end());
             std::sort(covered.begin(), covered.end());
             if (covered != t.labels()) f.failures.push_back("cycles do not partition labels of " + tableauText(t));
             for (const auto& cyc : cycles) {
               for (int k : cyc.labels) {
                 ++f.instances;
                 const auto moved = moveThrough(t, cyc);
                 const std::string where = w.toString() + " label " + std::to_string(k) + " " + toChar(c);
                 if (!validate(moved)) {
                   f.failures.push_back(where + ": move is not standard");
                   continue;
                 }
                 const auto back = moveThrough(moved, cycleOf(moved, k, c));
                 if (back != t) f.failures.push_back(where + ": moving twice does not return");
                 const auto after = shape(moved);
                 for (const auto& d : moved.dominoes()) {
                   if (fixedSquare(d, c) != fixedSquare(t.at(d.label()), c)) {
                     f.failures.push_back(where + ": fixed square changed");
                   }
                 }
                 if (cyc.open) {
                   std::vector<Square> cells;
                   for (int r = 0; r < before.length(); ++r) {
                     for (int col = 1; col <= before[r]; ++col) {
                       const Square s{r + 1, col};
                       if (s != *cyc.hole) cells.push_back(s);
                     }
                   }
                   cells.push_back(*cyc.corner);
                   auto expected = diagramShape(cells);
                   if (!expected || *expected != after) f.failures.push_back(where + ": shape is not old - hole + corner");
                 } else if (after != before) {
                   f.failures.push_back(where + ": closed move changed the shape");
                 }
               }
             }
           }
           return f;
         }));
}

void operatorCellCompat(int n, LieType type, const VerifyOptions& opt, VerificationReport& report) {
  absorb(report, forEachElement(enumerateGroup(n), opt.jobs, [n, type](const SignedPermutation& w) {
           Finding f;
           const auto pair = rs(w, type);
           const auto target = orbitalTableau(pair.left).tableau;
           auto compare = [&](const std::string& op, const SignedPermutation& image) {
             ++f.instances;
             if (orbitalTableau(rs(image, type).left).tableau != target) {
               f.failures.push_back(op + " at " + w.toString() + " -> " + image.toString() + " changes the orbital tableau");
             }
           };
           for (int i = 2; i < n; ++i) {
             for (auto [a, b] : {std::pair{i, i + 1}, std::pair{i + 1, i}}) {
               if (auto x = tryTSameLength(w, RootIndex{a}, RootIndex{b})) {
                 compare("T" + std::to_string(a) + std::to_string(b), *x);
               }
             }
           }
           if (vTruncatedDomain(pair).defined) compare("V_ab", rsInverse(vTruncated(pair)));
           if (vDDomain(pair).defined) compare("V_D", rsInverse(vD(pair)));
           return f;
         }));
}

void pipelineConfluence(int n, LieType type, const VerifyOptions& opt, VerificationReport& report) {
  auto elements = enumerateGroup(n);
  if (n >= 4) {
    std::mt19937 rng(opt.seed);
    std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
    std::vector<SignedPermutation> sample;
    for (int i = 0; i < opt.samples; ++i) sample.push_back(elements[pick(rng)]);
    elements = std::move(sample);
    report.notes.push_back("sampled " + std::to_string(opt.samples) + " elements with seed " + std::to_string(opt.seed));
  }
  absorb(report, forEachElement(elements, opt.jobs, [type](const SignedPermutation& w) {
           Finding f{{}, 1};
           const auto left = rs(w, type).left;
           const auto result = orbitalTableau(left);
           const auto terminals = annealTerminals(left);
           if (terminals.size() != 1) {
             f.failures.push_back(w.toString() + ": " + std::to_string(terminals.size()) + " terminal tableaux");
           } else if (*terminals.begin() != result.tableau) {
             f.failures.push_back(w.toString() + ": canonical anneal disagrees with the unique terminal");
           }
           return f;
         }));
}

void countingIdentities(int n, LieType type, const VerifyOptions&, VerificationReport& report) {
  std::map<Partition, std::int64_t> byShape;
  for (const auto& w : enumerateGroup(n)) ++byShape[shape(rs(w, type).left)];
  std::int64_t sumSquares = 0;
  for (const auto& p : shapesOfRank(n, type)) {
    ++report.instances;
    const auto f = countSDT(p, type);
    sumSquares += f * f;
    if (byShape[p] != f * f) {
      report.failures.push_back("shape " + p.toString() + ": " + std::to_string(byShape[p]) + " elements but f^2 = " +
                                std::to_string(f * f));
    }
  }
  if (sumSquares != groupOrder(n)) {
    report.failures.push_back("sum of squares " + std::to_string(sumSquares) + " != " + std::to_string(groupOrder(n)));
  }
  report.notes.push_back("sum of f^2 = " + std::to_string(sumSquares));
}

void surjectivity(int n, LieType type, const VerifyOptions&, VerificationReport& report) {
  const auto group = enumerateGroup(n);
  std::vector<DominoTableau> images(group.size());
  report.instances = static_cast<std::int64_t>(group.size());
  for (std::size_t i = 0; i < group.size(); ++i) images[i] = orbitalTableau(rs(group[i], type).left).tableau;
  std::set<DominoTableau> image(images.begin(), images.end());
  std::set<DominoTableau> expected;
  for (const auto& p : shapesOfRank(n, type)) {
    if (!isXPartition(p, type)) continue;
    for (auto& t : allSDT(p, type)) expected.insert(std::move(t));
  }
  if (image != expected) {
    report.failures.push_back("pipeline image has " + std::to_string(image.size()) + " tableaux, expected " +
                              std::to_string(expected.size()));
  }
  report.notes.push_back("fibers = " + std::to_string(image.size()) + ", X-shape tableaux = " +
                         std::to_string(expected.size()));
}

void specialProjectionSuite(int n, LieType type, const VerifyOptions& opt, VerificationReport& report) {
  absorb(report, forEachElement(enumerateGroup(n), opt.jobs, [type](const SignedPermutation& w) {
           Finding f{{}, 1};
           const auto right = rs(w, type).right;
           const auto projected = specialProjection(right);
           const auto s = shape(projected);
           if (!isXPartition(s, type) || !isSpecial(s, type)) {
             f.failures.push_back(w.toString() + ": projection shape " + s.toString() + " is not special");
           }
           const auto terminals = specialTerminals(right);
           if (terminals.size() != 1 || *terminals.begin() != projected) {
             f.failures.push_back(w.toString() + ": special projection is order dependent (" +
                                  std::to_string(terminals.size()) + " terminals)");
           }
           const auto rs0 = shape(right);
           if (isXPartition(rs0, type) && isSpecial(rs0, type) && projected != right) {
             f.failures.push_back(w.toString() + ": special input was moved");
           }
           return f;
         }));
}

const std::vector<std::pair<std::string, Suite>>& registry() {
  static const std::vector<std::pair<std::string, Suite>> suites = {
      {"rs-bijection", rsBijection},
      {"involution-criterion", involutionCriterion},
      {"inverse-transpose", inverseTranspose},
      {"cycle-involution", cycleInvolution},
      {"operator-cell-compat", operatorCellCompat},
      {"pipeline-confluence", pipelineConfluence},
      {"counting-identities", countingIdentities},
      {"surjectivity", surjectivity},
      {"special-projection", specialProjectionSuite},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suiteNames() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, suite] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

VerificationReport verifySuite(std::string_view name, int n, LieType type, const VerifyOptions& options) {
  if (n < 1) throw std::invalid_argument("verify: n must be positive");
  for (const auto& [suiteName, suite] : registry()) {
    if (suiteName == name) {
      VerificationReport report;
      report.suite = suiteName;
      report.n = n;
      report.type = type;
      suite(n, type, options, report);
      return report;
    }
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

}  // namespace orbvar
