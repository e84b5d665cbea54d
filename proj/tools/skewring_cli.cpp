// skewring: command-line front end over the C interface.
//
// Exit codes: 0 holds / reproduced / corpus passed, 1 fails / mismatch,
// 2 invalid input, 3 tuple budget exceeded.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "skewring/skewring.h"

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kInvalid = 2;
constexpr int kBudget = 3;

int report_error(sr_status status) {
  std::cerr << "error: " << sr_last_error() << "\n";
  return status == SR_ERR_BUDGET ? kBudget : kInvalid;
}

// Owns a string returned by the library.
struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { sr_string_free(p); }
};

struct Structure {
  sr_structure* p = nullptr;
  ~Structure() { sr_structure_free(p); }
};

struct VerdictHandle {
  sr_verdict* p = nullptr;
  ~VerdictHandle() { sr_verdict_free(p); }
};

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

// SKEWRING_TUPLE_BUDGET overrides the library default; 0 means unset.
bool tuple_budget(std::uint64_t& out) {
  out = 0;
  const char* env = std::getenv("SKEWRING_TUPLE_BUDGET");
  if (!env || !*env) return true;
  try {
    std::size_t used = 0;
    out = std::stoull(env, &used);
    return used == std::string(env).size() && out > 0;
  } catch (const std::exception&) {
    return false;
  }
}

int cmd_validate(const std::string& path) {
  Structure s;
  if (auto st = sr_structure_load(path.c_str(), 0, &s.p); st != SR_OK) return report_error(st);
  OwnedString text;
  if (auto st = sr_structure_describe(s.p, &text.p); st != SR_OK) return report_error(st);
  std::cout << text.p << "\n";
  return kHolds;
}

struct CheckArgs {
  std::string path;
  std::string property;
  std::vector<std::uint32_t> degree;
  std::vector<std::uint32_t> window;
  std::vector<std::uint32_t> trunc;
  std::string format = "text";
};

int cmd_check(const CheckArgs& a) {
  std::uint64_t budget = 0;
  if (!tuple_budget(budget)) {
    std::cerr << "error: SKEWRING_TUPLE_BUDGET must be a positive integer\n";
    return kInvalid;
  }
  const int given = !a.degree.empty() + !a.window.empty() + !a.trunc.empty();
  if (given > 1) {
    std::cerr << "error: give at most one of --deg, --window, --trunc\n";
    return kInvalid;
  }
  sr_check_options opts{};
  opts.tuple_budget = budget;
  if (!a.degree.empty()) {
    opts.envelope = SR_ENVELOPE_DEGREE;
    opts.degree = a.degree[0];
  } else if (!a.window.empty()) {
    opts.envelope = SR_ENVELOPE_WINDOW;
    for (int k = 0; k < 4; ++k) opts.window[k] = a.window[static_cast<std::size_t>(k)];
  } else if (!a.trunc.empty()) {
    opts.envelope = SR_ENVELOPE_TRUNCATION;
    opts.order = a.trunc[0];
  }

  Structure s;
  if (auto st = sr_structure_load(a.path.c_str(), 0, &s.p); st != SR_OK) return report_error(st);
  VerdictHandle v;
  if (auto st = sr_check(s.p, a.property.c_str(), &opts, &v.p); st != SR_OK) return report_error(st);
  OwnedString text;
  const sr_format format = a.format == "structured" ? SR_FORMAT_STRUCTURED : SR_FORMAT_TEXT;
  if (auto st = sr_verdict_render(v.p, format, &text.p); st != SR_OK) return report_error(st);
  std::cout << text.p;
  int holds = 0;
  sr_verdict_holds(v.p, &holds);
  return holds ? kHolds : kFails;
}

int cmd_replay(const std::string& path) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "error: cannot open " << path << "\n";
    return kInvalid;
  }
  int reproduced = 0;
  OwnedString detail;
  if (auto st = sr_replay(text.c_str(), &reproduced, &detail.p); st != SR_OK) return report_error(st);
  std::cout << (reproduced ? "reproduced: " : "mismatch: ") << detail.p << "\n";
  return reproduced ? kHolds : kFails;
}

struct CorpusArgs {
  std::vector<std::string> entries;
  bool all = false;
  std::uint32_t degree = 2;
  std::string manifest;
};

int cmd_corpus(const CorpusArgs& a) {
  if (a.all == !a.entries.empty()) {
    std::cerr << "error: give either --all or at least one --entry\n";
    return kInvalid;
  }
  std::uint64_t budget = 0;
  if (!tuple_budget(budget)) {
    std::cerr << "error: SKEWRING_TUPLE_BUDGET must be a positive integer\n";
    return kInvalid;
  }
  std::string manifest;
  if (!a.manifest.empty() && !read_file(a.manifest, manifest)) {
    std::cerr << "error: cannot open " << a.manifest << "\n";
    return kInvalid;
  }
  std::vector<const char*> names;
  for (const auto& e : a.entries) names.push_back(e.c_str());
  int passed = 0;
  OwnedString report;
  const auto st = sr_corpus_run(a.manifest.empty() ? nullptr : manifest.c_str(), names.data(), names.size(),
                                a.degree, budget, &passed, &report.p);
  if (st != SR_OK) return report_error(st);
  std::cout << report.p;
  return passed ? kHolds : kFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide skew Armendariz-type conditions over finite rings"};
  app.set_version_flag("--version", std::string(sr_version()));
  app.require_subcommand(1);

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Validate a ring document and describe it");
  validate->add_option("ring", validate_path, "Ring document (JSON)")->required();

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Decide one property of a ring document");
  check->add_option("ring", check_args.path, "Ring document (JSON)")->required();
  check->add_option("--property", check_args.property, "Property name, e.g. q-alpha-skew-armendariz")->required();
  check->add_option("--deg", check_args.degree, "Degree bound for R[x; alpha]")->expected(1);
  check->add_option("--window", check_args.window, "Laurent exponent window m,n,t,s")
      ->expected(4)
      ->delimiter(',');
  check->add_option("--trunc", check_args.trunc, "Truncation order for power series")->expected(1);
  check->add_option("--format", check_args.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}));

  std::string replay_path;
  auto* replay = app.add_subcommand("replay", "Replay a recorded verdict");
  replay->add_option("record", replay_path, "Verdict record (JSON)")->required();

  CorpusArgs corpus_args;
  auto* corpus = app.add_subcommand("corpus", "Run the corpus harness");
  corpus->add_option("--entry", corpus_args.entries, "Entry name (repeatable)");
  corpus->add_flag("--all", corpus_args.all, "Run every entry");
  corpus->add_option("--deg", corpus_args.degree, "Degree bound for polynomial checks");
  corpus->add_option("--manifest", corpus_args.manifest, "Manifest file instead of the built-in one");
  // `corpus run ...` is accepted as a spelling of `corpus ...`
  corpus->add_subcommand("run", "Same as corpus")->fallthrough();
  corpus->require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInvalid;
  }

  if (*validate) return cmd_validate(validate_path);
  if (*check) return cmd_check(check_args);
  if (*replay) return cmd_replay(replay_path);
  if (*corpus) return cmd_corpus(corpus_args);
  return kInvalid;
}
