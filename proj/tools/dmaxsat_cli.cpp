// Command-line front end. Talks to the library only through the C API.

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "dmaxsat/dmaxsat.h"

namespace {

enum ExitCode : int { kOk = 0, kNo = 1, kBadInput = 2, kLimit = 3, kInternal = 4 };

struct CliFailure {
  int code;
  std::string message;
};

int exit_code_for(dmaxsat_status s) {
  switch (s) {
    case DMAXSAT_OK:
      return kOk;
    case DMAXSAT_ERR_LIMIT:
      return kLimit;
    case DMAXSAT_ERR_INTERNAL:
      return kInternal;
    default:
      return kBadInput;
  }
}

void check(dmaxsat_status s) {
  if (s != DMAXSAT_OK) {
    throw CliFailure{exit_code_for(s),
                     std::string(dmaxsat_status_name(s)) + ": " + dmaxsat_last_error()};
  }
}

struct StringDeleter {
  void operator()(char* s) const { dmaxsat_string_free(s); }
};
struct FormulaDeleter {
  void operator()(dmaxsat_formula* f) const { dmaxsat_formula_free(f); }
};
struct QueryDeleter {
  void operator()(dmaxsat_query* q) const { dmaxsat_query_free(q); }
};
struct InstanceDeleter {
  void operator()(dmaxsat_instance* i) const { dmaxsat_instance_free(i); }
};
struct WitnessDeleter {
  void operator()(dmaxsat_witness* w) const { dmaxsat_witness_free(w); }
};

using FormulaPtr = std::unique_ptr<dmaxsat_formula, FormulaDeleter>;
using QueryPtr = std::unique_ptr<dmaxsat_query, QueryDeleter>;
using InstancePtr = std::unique_ptr<dmaxsat_instance, InstanceDeleter>;
using WitnessPtr = std::unique_ptr<dmaxsat_witness, WitnessDeleter>;

// Takes ownership of a library-allocated string.
std::string take(char* s) {
  std::unique_ptr<char, StringDeleter> guard(s);
  return s ? std::string(s) : std::string();
}

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliFailure{kBadInput, "cannot read '" + path + "'"};
  buf << in.rdbuf();
  return buf.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

dmaxsat_format format_for(const std::string& path, const std::string& flag) {
  if (flag == "circuit") return DMAXSAT_FORMAT_CIRCUIT;
  if (flag == "dimacs") return DMAXSAT_FORMAT_DIMACS;
  if (ends_with(path, ".ckt")) return DMAXSAT_FORMAT_CIRCUIT;
  if (ends_with(path, ".cnf") || ends_with(path, ".dimacs")) return DMAXSAT_FORMAT_DIMACS;
  return DMAXSAT_FORMAT_AUTO;
}

FormulaPtr parse_text(const std::string& text, dmaxsat_format format) {
  dmaxsat_formula* f = nullptr;
  check(dmaxsat_formula_parse(text.c_str(), format, &f));
  return FormulaPtr(f);
}

FormulaPtr load(const std::string& path, const std::string& format_flag) {
  return parse_text(read_input(path), format_for(path, format_flag));
}

std::string circuit_text(const dmaxsat_formula* f) {
  char* s = nullptr;
  check(dmaxsat_formula_print(f, &s));
  return take(s);
}

// Gadget output: the circuit goes to --output (or stdout); audit lines go to
// stdout when the circuit went to a file, stderr otherwise.
struct Emitter {
  std::string output;

  void emit(const dmaxsat_formula* f, const std::string& audit_jsonl) const {
    const std::string text = circuit_text(f);
    if (output.empty() || output == "-") {
      std::cout << text;
      std::cerr << audit_jsonl;
      return;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out) throw CliFailure{kBadInput, "cannot write '" + output + "'"};
    out << text;
    std::cout << audit_jsonl;
  }
};

std::string audit_line(nlohmann::json j, const dmaxsat_formula* f) {
  j["scope"] = dmaxsat_formula_scope(f);
  j["size"] = dmaxsat_formula_size(f);
  return j.dump() + "\n";
}

// The block declaration either comes from the command line or from a line
// starting with "x:" / "y:" inside the instance file.
std::string split_blocks(std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::string rest;
  std::string blocks;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t");
    if (blocks.empty() && first != std::string::npos && line.size() > first + 1 &&
        (line[first] == 'x' || line[first] == 'y') &&
        line.find_first_not_of(" \t", first + 1) != std::string::npos &&
        line[line.find_first_not_of(" \t", first + 1)] == ':') {
      blocks = line;
      continue;
    }
    rest += line;
    rest += '\n';
  }
  text = std::move(rest);
  return blocks;
}

InstancePtr load_instance(const std::string& path, std::string blocks, const std::string& format,
                          const std::string* bound) {
  std::string text = read_input(path);
  std::string embedded = split_blocks(text);
  if (blocks.empty()) blocks = embedded;
  FormulaPtr f = parse_text(text, format_for(path, format));
  dmaxsat_instance* inst = nullptr;
  check(dmaxsat_instance_new(f.get(), blocks.c_str(), bound ? bound->c_str() : nullptr, &inst));
  return InstancePtr(inst);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Model counting gadgets, count-query reductions and a MAX#SAT solver"};
  app.require_subcommand(1);
  std::string format = "auto";
  app.add_option("--format", format, "Input format")
      ->check(CLI::IsMember({"auto", "circuit", "dimacs"}));

  // count
  auto* count = app.add_subcommand("count", "Print the model count of a formula");
  std::string count_path;
  std::string engine = "fast";
  std::string bound;
  std::uint32_t limit = 0;
  count->add_option("path", count_path, "Circuit (.ckt) or DIMACS (.cnf) file, '-' for stdin")
      ->required();
  count->add_option("--engine", engine, "Counting engine")->check(CLI::IsMember({"fast", "brute"}));
  count->add_option("--bound", bound, "Print yes/no for count >= bound instead of the count");
  count->add_option("--limit", limit, "Variable limit of the brute-force engine");

  // size
  auto* size = app.add_subcommand("size", "Print the number of Boolean operators");
  std::string size_path;
  size->add_option("path", size_path)->required();

  // pack
  auto* pack = app.add_subcommand("pack", "Pack formulas of equal scope into digit positions");
  std::vector<std::string> pack_paths;
  std::string output;
  pack->add_option("paths", pack_paths)->required();
  pack->add_option("-o,--output", output, "Write the circuit here");

  // mkless
  auto* mkless = app.add_subcommand("mkless", "Formula over n variables with exactly c models");
  std::uint32_t mk_n = 0;
  std::string mk_c;
  mkless->add_option("n", mk_n)->required();
  mkless->add_option("c", mk_c)->required();
  mkless->add_option("-o,--output", output, "Write the circuit here");

  // psi
  auto* psi = app.add_subcommand("psi", "Gadget whose count is X(2^n - X + 2 delta)");
  std::string psi_path;
  std::string delta;
  psi->add_option("path", psi_path)->required();
  psi->add_option("--delta", delta)->required();
  psi->add_option("-o,--output", output, "Write the circuit here");

  // eq2geq
  auto* eq2geq = app.add_subcommand("eq2geq", "Turn '#F = y' into a threshold query");
  std::string eq_path;
  std::string eq_y;
  eq2geq->add_option("path", eq_path)->required();
  eq2geq->add_option("y", eq_y)->required();
  eq2geq->add_option("-o,--output", output, "Write the threshold formula here");

  // combine
  auto* combine = app.add_subcommand("combine", "Collapse 'file:claim' equalities into one query");
  std::vector<std::string> claims;
  combine->add_option("claims", claims, "path:claimed_count")->required();
  combine->add_option("-o,--output", output, "Write the threshold formula here");

  // dmax / maxcount
  auto* dmax = app.add_subcommand("dmax", "Is there an x whose y-count reaches the bound?");
  auto* maxcount = app.add_subcommand("maxcount", "x maximizing the y-count");
  std::string solve_path;
  std::string blocks;
  std::string solve_engine = "pruned";
  for (auto* sub : {dmax, maxcount}) {
    sub->add_option("path", solve_path)->required();
    sub->add_option("blocks", blocks, "Block declaration, e.g. \"x: 1 3 / y: 2\"");
  }
  dmax->add_option("--bound", bound)->required();
  dmax->add_option("--engine", solve_engine)->check(CLI::IsMember({"pruned", "plain"}));

  // selftest
  auto* selftest = app.add_subcommand("selftest", "Run the randomized property suites");
  std::uint64_t seed = 42;
  std::int64_t budget = -1;
  std::string mutate = "none";
  selftest->add_option("--seed", seed);
  selftest->add_option("--budget", budget, "Cap on cases per suite")->check(CLI::NonNegativeNumber);
  selftest->add_option("--mutate", mutate, "Run against a deliberately broken construction")
      ->check(CLI::IsMember({"none", "pack_pair"}))
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (count->parsed()) {
      FormulaPtr f = load(count_path, format);
      if (!bound.empty()) {
        int holds = 0;
        check(dmaxsat_threshold(f.get(),
                                engine == "brute" ? DMAXSAT_ENGINE_BRUTE : DMAXSAT_ENGINE_FAST,
                                limit, bound.c_str(), &holds));
        std::cout << (holds ? "yes" : "no") << "\n";
        if (!holds) return kNo;
      } else {
        char* c = nullptr;
        check(dmaxsat_count(f.get(), engine == "brute" ? DMAXSAT_ENGINE_BRUTE : DMAXSAT_ENGINE_FAST,
                            limit, &c));
        std::cout << take(c) << "\n";
      }
    } else if (size->parsed()) {
      FormulaPtr f = load(size_path, format);
      std::cout << dmaxsat_formula_size(f.get()) << "\n";
    } else if (pack->parsed()) {
      std::vector<FormulaPtr> owned;
      std::vector<const dmaxsat_formula*> raw;
      for (const auto& p : pack_paths) {
        owned.push_back(load(p, format));
        raw.push_back(owned.back().get());
      }
      dmaxsat_formula* out = nullptr;
      check(dmaxsat_pack(raw.data(), raw.size(), &out));
      FormulaPtr packed(out);
      Emitter{output}.emit(packed.get(),
                           audit_line({{"step", "pack"},
                                       {"k", raw.size()},
                                       {"n", dmaxsat_formula_scope(raw.front())}},
                                      packed.get()));
    } else if (mkless->parsed()) {
      dmaxsat_formula* out = nullptr;
      check(dmaxsat_less_than(mk_n, mk_c.c_str(), &out));
      FormulaPtr f(out);
      Emitter{output}.emit(f.get(), audit_line({{"step", "mkless"}, {"n", mk_n}, {"c", mk_c}}, f.get()));
    } else if (psi->parsed()) {
      FormulaPtr in = load(psi_path, format);
      dmaxsat_formula* out = nullptr;
      check(dmaxsat_psi(in.get(), delta.c_str(), &out));
      FormulaPtr f(out);
      Emitter{output}.emit(
          f.get(), audit_line({{"step", "psi"}, {"n", dmaxsat_formula_scope(in.get())}, {"delta", delta}},
                              f.get()));
    } else if (eq2geq->parsed() || combine->parsed()) {
      dmaxsat_query* q = nullptr;
      std::vector<FormulaPtr> owned;
      if (eq2geq->parsed()) {
        owned.push_back(load(eq_path, format));
        check(dmaxsat_eq_to_geq(owned.front().get(), eq_y.c_str(), &q));
      } else {
        std::vector<const dmaxsat_formula*> raw;
        std::vector<std::string> counts;
        for (const auto& c : claims) {
          const auto colon = c.rfind(':');
          if (colon == std::string::npos || colon == 0 || colon + 1 == c.size()) {
            throw CliFailure{kBadInput, "expected path:claimed_count, got '" + c + "'"};
          }
          owned.push_back(load(c.substr(0, colon), format));
          raw.push_back(owned.back().get());
          counts.push_back(c.substr(colon + 1));
        }
        std::vector<const char*> count_ptrs;
        for (const auto& s : counts) count_ptrs.push_back(s.c_str());
        check(dmaxsat_combine(raw.data(), count_ptrs.data(), raw.size(), &q));
      }
      QueryPtr query(q);
      dmaxsat_formula* g = nullptr;
      check(dmaxsat_query_formula(query.get(), &g));
      FormulaPtr gf(g);
      char* audit = nullptr;
      check(dmaxsat_query_audit(query.get(), &audit));
      Emitter{output}.emit(gf.get(), take(audit));
    } else if (dmax->parsed()) {
      InstancePtr inst = load_instance(solve_path, blocks, format, &bound);
      dmaxsat_witness* w = nullptr;
      check(dmaxsat_dmax(inst.get(), solve_engine == "pruned", &w));
      if (!w) {
        std::cout << "no\n";
        return kNo;
      }
      WitnessPtr witness(w);
      char* a = nullptr;
      check(dmaxsat_witness_assignment(witness.get(), &a));
      const std::string assignment = take(a);
      char* c = nullptr;
      check(dmaxsat_witness_count(witness.get(), &c));
      std::cout << "yes" << (assignment.empty() ? "" : " " + assignment) << "\n"
                << "count=" << take(c) << "\n";
    } else if (maxcount->parsed()) {
      InstancePtr inst = load_instance(solve_path, blocks, format, nullptr);
      dmaxsat_witness* w = nullptr;
      check(dmaxsat_maxcount(inst.get(), &w));
      WitnessPtr witness(w);
      char* a = nullptr;
      check(dmaxsat_witness_assignment(witness.get(), &a));
      const std::string assignment = take(a);
      char* c = nullptr;
      check(dmaxsat_witness_count(witness.get(), &c));
      std::cout << assignment << (assignment.empty() ? "" : " ") << "count=" << take(c) << "\n";
    } else if (selftest->parsed()) {
      const auto start = std::chrono::steady_clock::now();
      char* report = nullptr;
      int passed = 0;
      check(dmaxsat_selftest(seed, budget,
                             mutate == "pack_pair" ? DMAXSAT_MUTATION_PACK_PAIR : DMAXSAT_MUTATION_NONE,
                             &report, &passed));
      std::cout << take(report);
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      std::cerr << "wall time: " << elapsed.count() << " s\n";
      return passed ? kOk : kNo;
    }
  } catch (const CliFailure& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  }
  return kOk;
}
