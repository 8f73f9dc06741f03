// Copyright 2026 The radionum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// radionum command-line front end. Links only the C API.
//
// Exit codes: 0 success / agreement, 1 negative mathematical finding,
// 2 input error, 3 resource budget exhausted, 4 internal error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "radionum/radionum.h"

namespace {

enum ExitCode : int {
  kSuccess = 0,
  kNegative = 1,
  kInputError = 2,
  kBudget = 3,
  kInternal = 4,
};

struct TreeDeleter {
  void operator()(radionum_tree* t) const { radionum_tree_free(t); }
};
struct LabelingDeleter {
  void operator()(radionum_labeling* l) const { radionum_labeling_free(l); }
};
struct CompositionDeleter {
  void operator()(radionum_composition* c) const { radionum_composition_free(c); }
};
struct StringDeleter {
  void operator()(char* s) const { radionum_string_free(s); }
};
using TreePtr = std::unique_ptr<radionum_tree, TreeDeleter>;
using LabelingPtr = std::unique_ptr<radionum_labeling, LabelingDeleter>;
using CompositionPtr = std::unique_ptr<radionum_composition, CompositionDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Carries a library failure up to main().
struct Failure {
  radionum_status status;
  std::string message;
};

int exit_code_for(radionum_status status) {
  switch (status) {
    case RADIONUM_OK:
      return kSuccess;
    case RADIONUM_ERR_NOT_ATTAINED:
      return kNegative;
    case RADIONUM_ERR_BUDGET_EXCEEDED:
      return kBudget;
    case RADIONUM_ERR_INTERNAL:
      return kInternal;
    default:
      return kInputError;
  }
}

void check(radionum_status status) {
  if (status != RADIONUM_OK) throw Failure{status, radionum_last_error()};
}

TreePtr load_tree(const std::string& path) {
  radionum_tree* raw = nullptr;
  check(radionum_tree_load(path.c_str(), &raw));
  return TreePtr(raw);
}

LabelingPtr load_labeling(const std::string& path) {
  radionum_labeling* raw = nullptr;
  check(radionum_labeling_load(path.c_str(), &raw));
  return LabelingPtr(raw);
}

std::string take(char* s) {
  StringPtr owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out || !(out << text)) {
    throw Failure{RADIONUM_ERR_IO, "cannot write '" + path + "'"};
  }
}

const char* search_name(radionum_search_status s) {
  switch (s) {
    case RADIONUM_SEARCH_FOUND:
      return "FOUND";
    case RADIONUM_SEARCH_EXHAUSTED:
      return "EXHAUSTED";
    case RADIONUM_SEARCH_BUDGET_EXCEEDED:
      return "BUDGET_EXCEEDED";
  }
  return "UNKNOWN";
}

std::string centers_of(const radionum_profile& prof, const char* sep) {
  std::string s = std::to_string(prof.centers[0]);
  if (prof.num_centers == 2) s += sep + std::to_string(prof.centers[1]);
  return s;
}

struct Options {
  std::string tree;
  std::string labeling;
  std::string family;
  std::vector<std::string> bases;
  std::string out;
  std::string format = "text";
  std::uint64_t budget = 200'000'000;
  int cap = 10;
  int k = 2;
  int order = 10;
  std::uint64_t seed = 1;
};

int cmd_analyze(const Options& opt) {
  auto tree = load_tree(opt.tree);
  if (opt.format == "dot") {
    char* dot = nullptr;
    check(radionum_tree_to_dot(tree.get(), nullptr, &dot));
    std::cout << take(dot);
    return kSuccess;
  }
  radionum_profile prof{};
  check(radionum_tree_profile(tree.get(), &prof));
  std::int64_t weight_bound = 0, level_bound = 0;
  const bool has_bounds = prof.diameter >= 2;
  if (has_bounds) {
    check(radionum_weight_lower_bound(tree.get(), &weight_bound));
    check(radionum_level_lower_bound(tree.get(), &level_bound));
  }
  const auto bound_text = [&](std::int64_t b) {
    return has_bounds ? std::to_string(b) : std::string("undefined");
  };
  if (opt.format == "record") {
    std::cout << "p=" << prof.order << " d=" << prof.diameter
              << " centers=" << centers_of(prof, ",")
              << " epsilon=" << prof.epsilon
              << " total_level=" << prof.total_level
              << " weight=" << prof.tree_weight
              << " weight_bound=" << bound_text(weight_bound)
              << " bound=" << bound_text(level_bound) << '\n';
  } else {
    std::cout << "p: " << prof.order << '\n'
              << "d: " << prof.diameter << '\n'
              << "centers: {" << centers_of(prof, ", ") << "}\n"
              << "epsilon: " << prof.epsilon << '\n'
              << "L(T): " << prof.total_level << '\n'
              << "w(T): " << prof.tree_weight << '\n'
              << "weight_bound: " << bound_text(weight_bound) << '\n'
              << "bound: " << bound_text(level_bound) << '\n';
  }
  return kSuccess;
}

// Writes a labeling either to --out (status on stdout) or to stdout behind a
// '#' status line, so stdout stays a valid labeling file.
void emit_labeling(const Options& opt, const radionum_labeling* labeling,
                   const std::string& status) {
  char* text = nullptr;
  check(radionum_labeling_to_text(labeling, &text));
  const std::string body = take(text);
  if (!opt.out.empty()) {
    write_file(opt.out, body);
    std::cout << status << '\n';
  } else {
    std::cout << "# " << status << '\n' << body;
  }
}

int cmd_label(const Options& opt) {
  auto tree = load_tree(opt.tree);
  radionum_search_result result{};
  radionum_labeling* raw = nullptr;
  check(radionum_search_ordering(tree.get(), opt.budget, &result, nullptr, 0,
                                 &raw));
  LabelingPtr labeling(raw);
  std::int64_t bound = 0;
  check(radionum_level_lower_bound(tree.get(), &bound));
  if (opt.format == "record") {
    std::cout << "status=" << search_name(result.status) << " bound=" << bound
              << " span=" << (labeling ? std::to_string(result.span) : "none")
              << " nodes=" << result.nodes_explored << '\n';
  }
  switch (result.status) {
    case RADIONUM_SEARCH_FOUND:
      if (opt.format != "record" || !opt.out.empty()) {
        emit_labeling(opt, labeling.get(),
                      "optimal span " + std::to_string(result.span));
      }
      return kSuccess;
    case RADIONUM_SEARCH_EXHAUSTED:
      if (opt.format != "record") {
        std::cout << "bound " << bound
                  << " not attained: no certificate ordering exists (nodes "
                  << result.nodes_explored << ")\n";
      }
      return kNegative;
    case RADIONUM_SEARCH_BUDGET_EXCEEDED:
      std::cerr << "error: node budget " << opt.budget
                << " exhausted before the search finished\n";
      return kBudget;
  }
  return kInternal;
}

int cmd_verify(const Options& opt) {
  auto tree = load_tree(opt.tree);
  auto labeling = load_labeling(opt.labeling);
  radionum_radio_verdict verdict{};
  check(radionum_verify_radio(tree.get(), labeling.get(), &verdict));
  std::int64_t span = 0;
  check(radionum_labeling_span(labeling.get(), &span));
  if (opt.format == "record") {
    std::cout << "verdict=" << (verdict.pass ? "PASS" : "FAIL")
              << " span=" << span;
    if (!verdict.pass) {
      std::cout << " u=" << verdict.u << " v=" << verdict.v
                << " deficit=" << verdict.deficit;
    }
    std::cout << '\n';
  } else if (verdict.pass) {
    std::cout << "PASS span " << span << '\n';
  } else {
    std::cout << "FAIL pair (" << verdict.u << "," << verdict.v
              << ") deficit " << verdict.deficit << '\n';
  }
  return verdict.pass ? kSuccess : kNegative;
}

int cmd_exact(const Options& opt) {
  auto tree = load_tree(opt.tree);
  // Seed the oracle with a certificate when one is cheap to find.
  LabelingPtr seed;
  if (radionum_tree_order(tree.get()) >= 3 &&
      radionum_tree_order(tree.get()) <= opt.cap) {
    radionum_search_result result{};
    radionum_labeling* raw = nullptr;
    if (radionum_search_ordering(tree.get(), opt.budget, &result, nullptr, 0,
                                 &raw) == RADIONUM_OK) {
      seed.reset(raw);
    }
  }
  radionum_exact_result result{};
  radionum_labeling* witness = nullptr;
  check(radionum_exact(tree.get(), opt.cap, opt.budget, seed.get(), &result,
                       &witness));
  LabelingPtr owned(witness);
  if (opt.format == "record") {
    std::cout << "rn=" << result.rn << " nodes=" << result.nodes_explored
              << '\n';
    if (!opt.out.empty()) {
      char* text = nullptr;
      check(radionum_labeling_to_text(owned.get(), &text));
      write_file(opt.out, take(text));
    }
    return kSuccess;
  }
  emit_labeling(opt, owned.get(), "rn: " + std::to_string(result.rn));
  return kSuccess;
}

radionum_family family_of(const std::string& name) {
  if (name == "wk") return RADIONUM_FAMILY_WK;
  if (name == "sk") return RADIONUM_FAMILY_SK;
  if (name == "dk") return RADIONUM_FAMILY_DK;
  throw Failure{RADIONUM_ERR_INVALID_ARGUMENT,
                "unknown family '" + name + "' (expected wk, sk or dk)"};
}

CompositionPtr compose(const Options& opt) {
  const auto family = family_of(opt.family);
  std::vector<TreePtr> owned;
  std::vector<const radionum_tree*> bases;
  for (const auto& path : opt.bases) {
    owned.push_back(load_tree(path));
    bases.push_back(owned.back().get());
  }
  radionum_composition* raw = nullptr;
  check(radionum_compose(family, bases.data(), bases.size(), opt.k, &raw));
  return CompositionPtr(raw);
}

int cmd_compose(const Options& opt) {
  auto comp = compose(opt);
  char* text = nullptr;
  check(radionum_tree_to_text(radionum_composition_tree(comp.get()), &text));
  const std::string tree_text = take(text);
  char* prov = nullptr;
  check(radionum_composition_provenance(comp.get(), &prov));
  const std::string prov_text = take(prov);

  if (!opt.out.empty()) {
    write_file(opt.out, tree_text);
    write_file(opt.out + ".prov", prov_text);
    return kSuccess;
  }
  // Provenance goes to stdout as comments, keeping the output parseable.
  std::cout << tree_text << "# provenance: composed_id base_index base_id\n";
  std::istringstream lines(prov_text);
  for (std::string line; std::getline(lines, line);) {
    std::cout << "# " << line << '\n';
  }
  return kSuccess;
}

int cmd_theorem_check(const Options& opt) {
  auto comp = compose(opt);
  radionum_report r{};
  check(radionum_theorem_check(comp.get(), opt.cap, opt.budget, &r));
  const auto yn = [](int flag) { return flag ? "yes" : "no"; };
  const std::string span =
      r.has_search_span ? std::to_string(r.search_span) : "none";
  const std::string exact =
      r.has_exact ? std::to_string(r.exact) : "skipped";
  if (opt.format == "record") {
    std::cout << "family=" << opt.family << " k=" << opt.k
              << " order=" << r.order << " d=" << r.diameter
              << " predicted=" << r.predicted << " bound=" << r.bound
              << " search=" << search_name(r.search_status)
              << " search_span=" << span << " exact=" << exact
              << " exploratory=" << r.exploratory
              << " all_agree=" << r.all_agree << '\n';
  } else {
    const auto line = [](const char* key, const std::string& value) {
      std::printf("%-26s %s\n", key, value.c_str());
    };
    line("family:", opt.family);
    if (opt.family != "wk") line("k:", std::to_string(opt.k));
    line("order:", std::to_string(r.order));
    line("diameter:", std::to_string(r.diameter));
    line("predicted:", std::to_string(r.predicted));
    line("bound:", std::to_string(r.bound));
    line("search:", search_name(r.search_status));
    line("search_span:", span);
    line("exact:", r.has_exact ? exact : "skipped (order > cap)");
    line("exploratory:", yn(r.exploratory));
    line("predicted_matches_bound:", yn(r.predicted_matches_bound));
    line("search_matches_predicted:", yn(r.search_matches_prediction));
    line("exact_matches_predicted:",
         r.has_exact ? yn(r.exact_matches_prediction) : "n/a");
    line("all_agree:", yn(r.all_agree));
    std::fflush(stdout);
  }
  if (r.search_status == RADIONUM_SEARCH_BUDGET_EXCEEDED) return kBudget;
  return r.all_agree ? kSuccess : kNegative;
}

int cmd_export_dot(const Options& opt) {
  auto tree = load_tree(opt.tree);
  LabelingPtr labeling;
  if (!opt.labeling.empty()) labeling = load_labeling(opt.labeling);
  char* dot = nullptr;
  check(radionum_tree_to_dot(tree.get(), labeling.get(), &dot));
  const std::string text = take(dot);
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    write_file(opt.out, text);
  }
  return kSuccess;
}

int cmd_generate(const Options& opt) {
  radionum_tree* raw = nullptr;
  check(radionum_tree_random(opt.order, opt.seed, &raw));
  TreePtr tree(raw);
  char* text = nullptr;
  check(radionum_tree_to_text(tree.get(), &text));
  const std::string body = take(text);
  if (opt.out.empty()) {
    std::cout << "# random tree, seed " << opt.seed << '\n' << body;
  } else {
    write_file(opt.out, body);
  }
  return kSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radio labelings and radio numbers of trees"};
  app.require_subcommand(1);
  app.set_version_flag("--version", radionum_version());

  Options opt;
  const auto positive_budget = CLI::Range(std::uint64_t{1}, UINT64_MAX);
  const auto formats = CLI::IsMember({"text", "record", "dot"});

  auto* analyze = app.add_subcommand("analyze", "Weight centers, levels and lower bounds");
  analyze->add_option("tree", opt.tree, "Tree file")->required();
  analyze->add_option("--format", opt.format, "text | record | dot")->check(formats);

  auto* label = app.add_subcommand("label", "Search for an optimal labeling certificate");
  label->add_option("tree", opt.tree, "Tree file")->required();
  label->add_option("--budget", opt.budget, "Search node budget")->check(positive_budget);
  label->add_option("--out", opt.out, "Write the labeling here");
  label->add_option("--format", opt.format, "text | record")->check(formats);

  auto* verify = app.add_subcommand("verify", "Check a labeling is a radio labeling");
  verify->add_option("tree", opt.tree, "Tree file")->required();
  verify->add_option("labeling", opt.labeling, "Labeling file")->required();
  verify->add_option("--format", opt.format, "text | record")->check(formats);

  auto* exact = app.add_subcommand("exact", "Exact radio number by exhaustive search");
  exact->add_option("tree", opt.tree, "Tree file")->required();
  exact->add_option("--cap", opt.cap, "Largest order accepted")->check(CLI::PositiveNumber);
  exact->add_option("--budget", opt.budget, "Search node budget")->check(positive_budget);
  exact->add_option("--out", opt.out, "Write the witness labeling here");
  exact->add_option("--format", opt.format, "text | record")->check(formats);

  auto* comp = app.add_subcommand("compose", "Build a wk / sk / dk composed tree");
  comp->add_option("family", opt.family, "wk | sk | dk")->required();
  comp->add_option("bases", opt.bases, "Base tree file(s)")->required();
  comp->add_option("--k", opt.k, "Multiplicity for sk / dk")->check(CLI::PositiveNumber);
  comp->add_option("--out", opt.out, "Tree file; provenance goes to <out>.prov");

  auto* theorem = app.add_subcommand("theorem-check", "Reconcile the closed-form radio number of a composition");
  theorem->add_option("family", opt.family, "wk | sk | dk")->required();
  theorem->add_option("bases", opt.bases, "Base tree file(s)")->required();
  theorem->add_option("--k", opt.k, "Multiplicity for sk / dk")->check(CLI::PositiveNumber);
  theorem->add_option("--cap", opt.cap, "Largest order for the exact leg")->check(CLI::PositiveNumber);
  theorem->add_option("--budget", opt.budget, "Search node budget")->check(positive_budget);
  theorem->add_option("--format", opt.format, "text | record")->check(formats);

  auto* dot = app.add_subcommand("export-dot", "Graphviz export, optionally annotated with labels");
  dot->add_option("tree", opt.tree, "Tree file")->required();
  dot->add_option("labeling", opt.labeling, "Labeling file");
  dot->add_option("--out", opt.out, "Output path");

  auto* gen = app.add_subcommand("generate", "Seeded uniformly random tree");
  gen->add_option("--p", opt.order, "Vertex count")->check(CLI::PositiveNumber);
  gen->add_option("--seed", opt.seed, "Random seed");
  gen->add_option("--out", opt.out, "Output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (*analyze) return cmd_analyze(opt);
    if (*label) return cmd_label(opt);
    if (*verify) return cmd_verify(opt);
    if (*exact) return cmd_exact(opt);
    if (*comp) return cmd_compose(opt);
    if (*theorem) return cmd_theorem_check(opt);
    if (*dot) return cmd_export_dot(opt);
    if (*gen) return cmd_generate(opt);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return exit_code_for(f.status);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
