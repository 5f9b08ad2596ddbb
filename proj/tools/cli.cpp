#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "orbvar/cycles.hpp"
#include "orbvar/enumeration.hpp"
#include "orbvar/insertion.hpp"
#include "orbvar/operators.hpp"
#include "orbvar/orbital.hpp"
#include "orbvar/serialization.hpp"

namespace orbvar::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Positional input: a file path, inline JSON, or permutation text.
std::string readInput(const std::string& input) {
  std::error_code ec;
  if (!input.empty() && input.front() != '{' && std::filesystem::is_regular_file(input, ec)) {
    std::ifstream in(input);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  return input;
}

bool looksLikeJson(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '{';
}

Json parseJson(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("invalid JSON: ") + e.what());
  }
}

LieType requireType(const std::string& type) {
  if (type.empty()) throw UsageError("--type is required for permutation input");
  return parseLieType(type);
}

// A tableau given directly, the left tableau of a pair, or T_L of a permutation.
DominoTableau tableauInput(const std::string& raw, const std::string& type, bool rightOfPermutation = false) {
  const auto text = readInput(raw);
  if (looksLikeJson(text)) {
    const auto doc = parseJson(text);
    if (doc.contains("left")) return pairFromJson(doc).left;
    return deserialize(text);
  }
  const auto pair = rs(SignedPermutation::parse(text), requireType(type));
  return rightOfPermutation ? pair.right : pair.left;
}

TableauPair pairInput(const std::string& raw, const std::string& type) {
  const auto text = readInput(raw);
  if (looksLikeJson(text)) return pairFromJson(parseJson(text));
  return rs(SignedPermutation::parse(text), requireType(type));
}

Json cycleJson(const Cycle& c) {
  Json doc;
  doc["labels"] = c.labels;
  doc["coloring"] = std::string(1, toChar(c.coloring));
  doc["kind"] = c.anchored ? "anchored" : c.open ? "open" : "closed";
  if (c.open) {
    doc["direction"] = *c.down ? "down" : "up";
    doc["hole"] = Json::array({c.hole->row, c.hole->col});
    doc["corner"] = Json::array({c.corner->row, c.corner->col});
  }
  doc["boxed"] = c.boxed;
  return doc;
}

Json reportJson(const OperatorDomainReport& r) {
  Json doc;
  doc["defined"] = r.defined;
  if (r.caseName) doc["case"] = *r.caseName;
  doc["reason"] = r.reason;
  return doc;
}

struct Options {
  std::string format = "json";
  std::string type;
  std::string input;
  std::string coloring = "X";
  std::string op;
  std::string shape;
  std::string suite;
  int label = 0;
  int n = 0;
  int i = 0;
  int j = 0;
  bool extended = false;
  VerifyOptions verify;
};

class Printer {
 public:
  Printer(std::ostream& out, const std::string& format) : out_(out), ascii_(format == "ascii") {}
  bool ascii() const { return ascii_; }
  void json(const Json& doc) { out_ << doc.dump() << '\n'; }
  void tableau(const DominoTableau& t) {
    if (ascii_) {
      out_ << renderAscii(t);
    } else {
      json(toJson(t));
    }
  }
  void pair(const TableauPair& p) {
    if (ascii_) {
      out_ << "left\n" << renderAscii(p.left) << "right\n" << renderAscii(p.right);
    } else {
      json(toJson(p));
    }
  }
  std::ostream& stream() { return out_; }

 private:
  std::ostream& out_;
  bool ascii_;
};

int doRs(const Options& o, Printer& p) {
  p.pair(rs(SignedPermutation::parse(readInput(o.input)), requireType(o.type)));
  return 0;
}

int doInverse(const Options& o, Printer& p) {
  const auto pair = pairInput(o.input, o.type);
  const auto w = rsInverse(pair);
  if (p.ascii()) {
    p.stream() << w.toString() << '\n';
  } else {
    Json doc;
    doc["type"] = std::string(1, toChar(pair.left.type()));
    doc["permutation"] = w.toString();
    p.json(doc);
  }
  return 0;
}

int doOrbital(const Options& o, Printer& p) {
  const auto result = orbitalTableau(tableauInput(o.input, o.type));
  if (p.ascii()) {
    for (const auto& step : result.trace) {
      p.stream() << step.shapeBefore.toString() << " -> " << step.shapeAfter.toString() << "  via " << step.cycle.describe()
                 << '\n';
    }
    p.stream() << "orbit " << result.orbit.toString() << '\n' << renderAscii(result.tableau);
    return 0;
  }
  Json doc;
  doc["tableau"] = toJson(result.tableau);
  doc["orbit"] = result.orbit.toString();
  Json trace = Json::array();
  for (const auto& step : result.trace) {
    Json item;
    item["cycle"] = cycleJson(step.cycle);
    item["before"] = step.shapeBefore.toString();
    item["after"] = step.shapeAfter.toString();
    trace.push_back(std::move(item));
  }
  doc["trace"] = std::move(trace);
  p.json(doc);
  return 0;
}

int doSpecial(const Options& o, Printer& p) {
  const auto projected = specialProjection(tableauInput(o.input, o.type, true));
  if (p.ascii()) {
    p.stream() << "shape " << shape(projected).toString() << '\n' << renderAscii(projected);
    return 0;
  }
  Json doc;
  doc["tableau"] = toJson(projected);
  doc["shape"] = shape(projected).toString();
  p.json(doc);
  return 0;
}

int doCycles(const Options& o, Printer& p) {
  const auto t = tableauInput(o.input, o.type);
  const auto cycles = cyclesOf(t, parseColoring(o.coloring));
  if (p.ascii()) {
    for (const auto& c : cycles) p.stream() << c.describe() << '\n';
    return 0;
  }
  Json list = Json::array();
  for (const auto& c : cycles) list.push_back(cycleJson(c));
  p.json(list);
  return 0;
}

int doMove(const Options& o, Printer& p) {
  const Coloring coloring = parseColoring(o.coloring);
  if (o.extended) {
    p.pair(moveThroughExtended(pairInput(o.input, o.type), o.label, coloring));
    return 0;
  }
  const auto t = tableauInput(o.input, o.type);
  if (!t.hasLabel(o.label)) throw DomainError("no domino labelled " + std::to_string(o.label));
  p.tableau(moveThrough(t, cycleOf(t, o.label, coloring)));
  return 0;
}

int doOp(const Options& o, Printer& p) {
  if (o.op == "tsame") {
    if (o.i == 0 || o.j == 0) throw UsageError("tsame needs --i and --j");
    const auto text = readInput(o.input);
    const auto w = looksLikeJson(text) ? rsInverse(pairFromJson(parseJson(text))) : SignedPermutation::parse(text);
    const auto image = tryTSameLength(w, RootIndex{o.i}, RootIndex{o.j});
    if (!image) {
      OperatorDomainReport report;
      report.reason = "T_{" + std::to_string(o.i) + "," + std::to_string(o.j) + "} is not defined at " + w.toString();
      if (p.ascii()) {
        p.stream() << "undefined: " << report.reason << '\n';
      } else {
        p.json(reportJson(report));
      }
      return 1;
    }
    if (p.ascii()) {
      p.stream() << image->toString() << '\n';
    } else {
      Json doc;
      doc["permutation"] = image->toString();
      if (!o.type.empty()) doc["pair"] = toJson(rs(*image, parseLieType(o.type)));
      p.json(doc);
    }
    return 0;
  }
  const auto pair = pairInput(o.input, o.type);
  const bool truncated = o.op == "vtrunc";
  const auto report = truncated ? vTruncatedDomain(pair) : vDDomain(pair);
  if (!report.defined) {
    if (p.ascii()) {
      p.stream() << "undefined: " << report.reason << '\n';
    } else {
      p.json(reportJson(report));
    }
    return 1;
  }
  p.pair(truncated ? vTruncated(pair) : vD(pair));
  return 0;
}

int doCount(const Options& o, Printer& p) {
  const LieType type = requireType(o.type);
  std::vector<Partition> shapes;
  if (!o.shape.empty()) {
    shapes.push_back(Partition::parse(o.shape));
  } else if (o.n > 0) {
    shapes = shapesOfRank(o.n, type);
  } else {
    throw UsageError("count needs --shape or --n");
  }
  Json doc = Json::array();
  std::int64_t total = 0;
  for (const auto& s : shapes) {
    const auto c = countSDT(s, type);
    total += c;
    if (p.ascii()) {
      p.stream() << s.toString() << ' ' << c << '\n';
    } else {
      Json item;
      item["shape"] = s.toString();
      item["count"] = c;
      doc.push_back(std::move(item));
    }
  }
  if (p.ascii()) {
    if (shapes.size() > 1) p.stream() << "total " << total << '\n';
  } else {
    p.json(doc);
  }
  return 0;
}

int doVerify(const Options& o, Printer& p) {
  if (o.n < 1) throw UsageError("verify needs --n >= 1");
  const auto report = verifySuite(o.suite, o.n, requireType(o.type), o.verify);
  if (p.ascii()) {
    p.stream() << report.suite << " n=" << report.n << " type=" << toChar(report.type) << ' '
               << (report.passed() ? "PASS" : "FAIL") << " instances=" << report.instances << '\n';
    for (const auto& note : report.notes) p.stream() << "  " << note << '\n';
    for (const auto& f : report.failures) p.stream() << "  failure: " << f << '\n';
  } else {
    Json doc;
    doc["suite"] = report.suite;
    doc["n"] = report.n;
    doc["type"] = std::string(1, toChar(report.type));
    doc["passed"] = report.passed();
    doc["instances"] = report.instances;
    doc["notes"] = report.notes;
    doc["failures"] = report.failures;
    p.json(doc);
  }
  return report.passed() ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Domino tableaux and orbital varieties in types B and C"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "ascii"}));

  auto typeOpt = [&o](CLI::App* sub) {
    sub->add_option("--type,-t", o.type, "Lie type")->check(CLI::IsMember({"B", "C"}));
  };
  auto inputOpt = [&o](CLI::App* sub, const std::string& what) {
    sub->add_option("input", o.input, what)->required();
  };
  const std::string permOrTableau = "Signed permutation, tableau JSON, or a file holding either";
  const std::string permOrPair = "Signed permutation, pair JSON, or a file holding either";

  auto* rsCmd = app.add_subcommand("rs", "Domino Robinson-Schensted pair of a signed permutation");
  typeOpt(rsCmd);
  inputOpt(rsCmd, "Signed permutation such as \"2 -1\"");
  rsCmd->callback([&] { if (o.type.empty()) throw CLI::RequiredError("--type"); });

  auto* invCmd = app.add_subcommand("inverse", "Recover the signed permutation of a tableau pair");
  typeOpt(invCmd);
  inputOpt(invCmd, permOrPair);

  auto* orbCmd = app.add_subcommand("orbital", "Orbital variety tableau and orbit of w (uses T_L)");
  typeOpt(orbCmd);
  inputOpt(orbCmd, permOrTableau);

  auto* specCmd = app.add_subcommand("special", "Project to a tableau of special shape (uses T_R of w)");
  typeOpt(specCmd);
  inputOpt(specCmd, permOrTableau);

  auto* cycCmd = app.add_subcommand("cycles", "List the cycles of a tableau");
  typeOpt(cycCmd);
  inputOpt(cycCmd, permOrTableau);
  cycCmd->add_option("--coloring,-c", o.coloring, "X or D")->check(CLI::IsMember({"X", "D"}));

  auto* moveCmd = app.add_subcommand("move", "Move a tableau through the cycle of a label");
  typeOpt(moveCmd);
  inputOpt(moveCmd, permOrTableau);
  moveCmd->add_option("--label,-l", o.label, "Domino label")->required()->check(CLI::PositiveNumber);
  moveCmd->add_option("--coloring,-c", o.coloring, "X or D")->check(CLI::IsMember({"X", "D"}));
  moveCmd->add_flag("--extended", o.extended, "Extended cycle move on a pair");

  auto* opCmd = app.add_subcommand("op", "Apply a wall-crossing operator");
  opCmd->add_option("operator", o.op, "vtrunc, vd or tsame")->required()->check(CLI::IsMember({"vtrunc", "vd", "tsame"}));
  inputOpt(opCmd, permOrPair);
  typeOpt(opCmd);
  opCmd->add_option("--i", o.i, "First root index (tsame)");
  opCmd->add_option("--j", o.j, "Second root index (tsame)");

  auto* countCmd = app.add_subcommand("count", "Count standard domino tableaux");
  typeOpt(countCmd);
  countCmd->add_option("--shape", o.shape, "Shape such as [3,1]");
  countCmd->add_option("--n", o.n, "Every shape with n dominoes");

  auto* verCmd = app.add_subcommand("verify", "Run an exhaustive verification suite");
  verCmd->add_option("suite", o.suite, "Suite name")->required()->check(CLI::IsMember(suiteNames()));
  verCmd->add_option("--n", o.n, "Rank")->required();
  typeOpt(verCmd);
  verCmd->add_option("--seed", o.verify.seed, "Seed for sampled suites")->capture_default_str();
  verCmd->add_option("--jobs,-j", o.verify.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verCmd->add_option("--samples", o.verify.samples, "Random draws for sampled suites")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Printer printer(out, o.format);
  try {
    const auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "rs") return doRs(o, printer);
    if (name == "inverse") return doInverse(o, printer);
    if (name == "orbital") return doOrbital(o, printer);
    if (name == "special") return doSpecial(o, printer);
    if (name == "cycles") return doCycles(o, printer);
    if (name == "move") return doMove(o, printer);
    if (name == "op") return doOp(o, printer);
    if (name == "count") return doCount(o, printer);
    return doVerify(o, printer);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace orbvar::cli
