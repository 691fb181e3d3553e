#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "braidcable/acceptance.hpp"
#include "braidcable/json_io.hpp"

using namespace braidcable;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

// Bad command-line input: exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t default_series_order() {
  const char* env = std::getenv("BRAIDCABLE_SERIES_ORDER");
  if (env == nullptr || *env == '\0') return 4;
  try {
    std::size_t used = 0;
    const long v = std::stol(env, &used);
    if (used == std::string(env).size() && v >= 1 && v <= 64) return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
  }
  throw UsageError("BRAIDCABLE_SERIES_ORDER must be an integer in [1, 64], got '" + std::string(env) + "'");
}

// "2 1 -3", "[2,1,-3]" or "@bigelow".
BraidWord parse_word_arg(int n, const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '@') {
    if (text.substr(first) != "@bigelow") throw UsageError("unknown word alias '" + text + "'");
    if (n != 5) throw UsageError("@bigelow lives in B_5; pass --n 5");
    return bigelow_element();
  }
  try {
    if (first != std::string::npos && text[first] == '[') return braid_word_from_json(n, json::parse(text));
    return parse_braid_word(n, text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad --word: ") + e.what());
  }
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

struct EvalArgs {
  std::string rep = "burau";
  int n = 2;
  std::string word;
  std::optional<std::size_t> series_order;
  bool series = false;
  bool json = false;
};

int run_eval(const EvalArgs& a) {
  GeneratorRep rep = [&] {
    try {
      return parse_rep_descriptor(a.rep, a.n);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("bad --rep: ") + e.what());
    }
  }();
  const BraidWord w = parse_word_arg(a.n, a.word);
  const LaurentMatrix m = eval_word(rep, w);
  std::optional<std::size_t> order = a.series_order;
  if (!order && a.series) order = default_series_order();

  if (a.json) {
    json out{{"rep", rep.label()}, {"n", a.n}, {"word", to_json(w)}};
    if (order) {
      out["series_order"] = *order;
      out["matrix"] = to_json(to_series(m, *order));
    } else {
      out["matrix"] = to_json(m);
    }
    print_json(out);
  } else if (order) {
    std::cout << render(to_series(m, *order));
  } else {
    std::cout << render(m);
  }
  return kOk;
}

struct CableArgs {
  int n = 2;
  int r = 2;
  std::string word;
  bool json = false;
};

int run_cable(const CableArgs& a) {
  const BraidWord cabled = cable_word(parse_word_arg(a.n, a.word), a.r);
  if (a.json) {
    print_json({{"strands", cabled.strands()}, {"word", to_json(cabled)}});
  } else {
    std::cout << cabled.to_string() << "\n";
  }
  return kOk;
}

struct DecomposeArgs {
  int n = 2;
  int r = 2;
  bool infinitesimal = false;
  bool emit_intertwiner = false;
  bool json = false;
};

int run_decompose(const DecomposeArgs& a) {
  const DecompositionReport rep =
      a.infinitesimal ? verify_infinitesimal_decomposition(a.n, a.r) : verify_global_decomposition(a.n, a.r);
  if (a.json) {
    json out = to_json(rep, a.emit_intertwiner);
    out["mode"] = a.infinitesimal ? "infinitesimal" : "global";
    out["n"] = a.n;
    out["r"] = a.r;
    print_json(out);
  } else {
    std::cout << (a.infinitesimal ? "infinitesimal" : "global") << " decomposition, n=" << a.n << " r=" << a.r << "\n";
    std::cout << "  " << rep.left_label << "  ~  " << rep.right_label << "\n";
    for (const auto& b : rep.blocks) {
      std::cout << "  block " << b.label << "  dim " << b.dimension << "  multiplicity " << b.multiplicity << "\n";
    }
    if (rep.solution_dimension) std::cout << "  intertwiner space dimension " << *rep.solution_dimension << "\n";
    std::cout << "  " << (rep.verified ? "verified" : "NOT verified: " + rep.failure) << "\n";
    if (a.emit_intertwiner && rep.intertwiner) std::cout << render(*rep.intertwiner);
  }
  return rep.verified ? kOk : kFailed;
}

struct KernelArgs {
  int n = 2;
  int r = 2;
  std::string word;
  bool json = false;
};

int run_kernel(const KernelArgs& a) {
  const KernelVerdict v = kernel_equivalence_check(parse_word_arg(a.n, a.word), a.r);
  if (a.json) {
    print_json(to_json(v));
  } else {
    auto b = [](bool x) { return x ? "true" : "false"; };
    std::cout << "burau: " << b(v.in_ker_burau) << "\ncabled: " << b(v.in_ker_cabled) << "\nagree: " << b(v.agree())
              << "\n";
  }
  return v.agree() ? kOk : kFailed;
}

int run_selftest(bool as_json) {
  const auto results = run_acceptance(as_json ? nullptr : &std::cout);
  bool all = true;
  json arr = json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    arr.push_back({{"id", r.id},
                   {"name", r.name},
                   {"passed", r.passed},
                   {"seconds", r.seconds},
                   {"budget_seconds", r.budget_seconds},
                   {"detail", r.detail}});
  }
  if (as_json) print_json({{"passed", all}, {"criteria", arr}});
  return all ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Burau/cabling computations on braid groups"};
  app.require_subcommand(1);

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "Evaluate a representation on a braid word");
  eval->add_option("--rep", ev.rep, "burau | sym | desc,twist=r,frame=a | sum=[d1;d2]")->capture_default_str();
  eval->add_option("--n", ev.n, "number of strands")->required()->check(CLI::Range(2, 64));
  eval->add_option("--word", ev.word, "\"2 1 -3\", [2,1,-3] or @bigelow")->required();
  eval->add_option("--series-order", ev.series_order, "expand in h = 2 log q to this many terms")
      ->check(CLI::Range(1, 64));
  eval->add_flag("--series", ev.series, "expand in h using BRAIDCABLE_SERIES_ORDER (default 4)");
  eval->add_flag("--json", ev.json, "JSON output");

  CableArgs ca;
  auto* cable = app.add_subcommand("cable", "Replace every strand by r parallel strands");
  cable->add_option("--n", ca.n, "number of strands")->required()->check(CLI::Range(1, 64));
  cable->add_option("--r", ca.r, "cabling factor")->required()->check(CLI::Range(1, 64));
  cable->add_option("--word", ca.word, "braid word")->required();
  cable->add_flag("--json", ca.json, "JSON output");

  DecomposeArgs de;
  auto* decompose = app.add_subcommand("decompose", "Verify the decomposition of the cabled Burau representation");
  decompose->add_option("--n", de.n, "number of strands, >= 2")->required()->check(CLI::Range(2, 16));
  decompose->add_option("--r", de.r, "cabling factor, >= 2")->required()->check(CLI::Range(2, 16));
  decompose->add_flag("--infinitesimal", de.infinitesimal, "check the infinitesimal decomposition");
  decompose->add_flag("--emit-intertwiner", de.emit_intertwiner, "print the change-of-basis matrix");
  decompose->add_flag("--json", de.json, "JSON output");

  KernelArgs ke;
  auto* kernel = app.add_subcommand("kernel", "Compare Burau kernel membership before and after cabling");
  kernel->add_option("--n", ke.n, "number of strands")->required()->check(CLI::Range(1, 64));
  kernel->add_option("--r", ke.r, "cabling factor")->required()->check(CLI::Range(1, 16));
  kernel->add_option("--word", ke.word, "braid word or @bigelow")->required();
  kernel->add_flag("--json", ke.json, "JSON output");

  bool self_json = false;
  auto* selftest = app.add_subcommand("selftest", "Run the acceptance grid");
  selftest->add_flag("--json", self_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*eval) return run_eval(ev);
    if (*cable) return run_cable(ca);
    if (*decompose) return run_decompose(de);
    if (*kernel) return run_kernel(ke);
    if (*selftest) return run_selftest(self_json);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
