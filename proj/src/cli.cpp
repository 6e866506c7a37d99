// Copyright 2026 The rigidrel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rigidrel/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "rigidrel/census.hpp"
#include "rigidrel/construct.hpp"
#include "rigidrel/core.hpp"
#include "rigidrel/errors.hpp"
#include "rigidrel/fraenkel.hpp"
#include "rigidrel/relation_io.hpp"

namespace rigidrel::cli {
namespace {

// Same cap as relation files, so every built relation can be read back.
constexpr std::size_t kMaxBuildVertices = 4096;

// Vertices moved by p, listed as "swap a b" for a transposition and in
// cycle notation otherwise. `labels` maps positions to printed names.
std::string format_permutation(const Permutation& p,
                               const std::vector<Vertex>& labels) {
  std::vector<Vertex> moved;
  for (Vertex v = 0; v < p.size(); ++v) {
    if (p(v) != v) moved.push_back(v);
  }
  if (moved.size() == 2) {
    return "swap " + std::to_string(labels[moved[0]]) + " " +
           std::to_string(labels[moved[1]]);
  }
  std::string out = "cycles ";
  std::vector<bool> seen(p.size(), false);
  for (Vertex start : moved) {
    if (seen[start]) continue;
    out += "(";
    for (Vertex v = start; !seen[v]; v = p(v)) {
      seen[v] = true;
      if (v != start) out += " ";
      out += std::to_string(labels[v]);
    }
    out += ")";
  }
  return out;
}

std::vector<Vertex> identity_labels(std::size_t n) {
  std::vector<Vertex> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = i;
  return labels;
}

std::string join(const std::vector<Vertex>& vs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(vs[i]);
  }
  return out;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  if (text.empty()) return items;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    items.push_back(text.substr(pos, comma - pos));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return items;
}

std::size_t to_index(const std::string& token) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (token.empty() || used != token.size() || token[0] == '-' ||
      token[0] == '+') {
    throw InvalidArgument("malformed index \"" + token + "\"");
  }
  return static_cast<std::size_t>(value);
}

std::vector<CantorPoint> parse_points(const std::string& text) {
  std::vector<CantorPoint> points;
  for (const auto& item : split_list(text)) points.emplace_back(item);
  return points;
}

std::vector<LabeledPair> parse_pairs(const std::string& text) {
  std::vector<LabeledPair> pairs;
  for (const auto& item : split_list(text)) {
    const std::size_t colon = item.find(':');
    if (colon == std::string::npos) {
      throw InvalidArgument("pair \"" + item + "\" is not of the form bits:label");
    }
    pairs.push_back({CantorPoint(item.substr(0, colon)),
                     to_index(item.substr(colon + 1))});
  }
  return pairs;
}

SpineDesignation parse_spine(std::size_t z_star, const std::string& chain) {
  SpineDesignation spine;
  spine.z_star = z_star;
  for (const auto& item : split_list(chain)) spine.z_chain.push_back(to_index(item));
  return spine;
}

struct CheckArgs {
  std::string file;
  std::string mode = "rigid";
  std::optional<std::size_t> max_n;
};

int cmd_check(const CheckArgs& args, std::ostream& out) {
  const Relation r = read_relation_file(args.file);
  SearchLimits limits;
  if (args.max_n) {
    limits.automorphism_max_n = *args.max_n;
    limits.endomorphism_max_n = *args.max_n;
    limits.hereditary_max_n = *args.max_n;
  }
  if (args.mode == "rigid") {
    const auto verdict = is_rigid(r, limits);
    if (verdict.rigid()) {
      out << "RIGID\n";
      return kPositive;
    }
    out << "NOT RIGID\nwitness: "
        << format_permutation(*verdict.witness, identity_labels(r.size())) << "\n";
    return kNegative;
  }
  if (args.mode == "strong") {
    const auto verdict = is_strongly_rigid(r, limits);
    if (verdict.strongly_rigid()) {
      out << "STRONGLY RIGID\n";
      return kPositive;
    }
    out << "NOT STRONGLY RIGID\nwitness: map " << join(verdict.witness->images(), " ")
        << "\n";
    return kNegative;
  }
  if (args.mode == "hereditary") {
    const auto verdict = is_hereditarily_rigid(r, limits);
    if (verdict.hereditarily_rigid()) {
      out << "HEREDITARILY RIGID\n";
      return kPositive;
    }
    out << "NOT HEREDITARILY RIGID\nwitness subset: "
        << join(*verdict.witness_subset, " ") << "\nwitness: "
        << format_permutation(*verdict.witness_perm, *verdict.witness_subset)
        << "\n";
    return kNegative;
  }
  // irreflexive
  for (const auto& [u, v] : r.edges()) {
    if (u == v) {
      out << "NOT IRREFLEXIVE\nwitness: loop " << u << "\n";
      return kNegative;
    }
  }
  out << "IRREFLEXIVE\n";
  return kPositive;
}

struct BuildArgs {
  std::string kind;
  std::size_t count = 0;
  std::string points;
  std::string pairs;
  std::string base_file;
  std::optional<std::size_t> base_linorder;
  std::size_t z_star = 0;
  std::string chain;
  bool unsafe = false;
  std::string output;
  bool verify = false;
  bool dot = false;
  std::optional<std::size_t> max_n;
};

Relation load_base(const BuildArgs& args) {
  if (args.base_linorder && !args.base_file.empty()) {
    throw InvalidArgument("give either --base or --base-linorder, not both");
  }
  if (args.base_linorder) return rigid_linear_order(*args.base_linorder);
  if (args.base_file.empty()) {
    throw InvalidArgument("a base relation is required (--base or --base-linorder)");
  }
  return read_relation_file(args.base_file);
}

int cmd_build(const BuildArgs& args, std::ostream& out, std::ostream& err) {
  SearchLimits limits;
  if (args.max_n) limits.automorphism_max_n = *args.max_n;
  ConstructOptions options;
  options.check_hypotheses = !args.unsafe;

  Relation r;
  if ((args.kind == "linorder" || args.kind == "ordinal") &&
      args.count > kMaxBuildVertices) {
    throw ResourceLimit("vertex count above " + std::to_string(kMaxBuildVertices));
  }
  if (args.kind == "linorder") {
    r = rigid_linear_order(args.count);
  } else if (args.kind == "ordinal") {
    r = ordinal_relation(args.count);
  } else if (args.kind == "cantor") {
    r = cantor_relation(parse_points(args.points), parse_spine(args.z_star, args.chain));
  } else if (args.kind == "product-main") {
    r = product_relation_main(parse_pairs(args.pairs), load_base(args),
                              parse_spine(args.z_star, args.chain), options);
  } else {
    r = product_relation_lex(parse_pairs(args.pairs), load_base(args), options);
  }

  std::optional<RigidityVerdict> verdict;
  if (args.verify) verdict = is_rigid(r, limits);

  const std::string text = args.dot ? to_dot(r) : serialize_relation(r);
  if (args.output.empty()) {
    out << text;
  } else {
    std::ofstream file(args.output, std::ios::binary);
    if (!(file << text)) throw Error("cannot write " + args.output);
  }
  if (!verdict) return kPositive;
  if (verdict->rigid()) {
    err << "verify: RIGID\n";
    return kPositive;
  }
  err << "verify: NOT RIGID, witness "
      << format_permutation(*verdict->witness, identity_labels(r.size())) << "\n";
  return kNegative;
}

struct FraenkelArgs {
  std::size_t atoms = 0;
  std::optional<std::size_t> max_support;
  unsigned threads = 1;
  std::optional<std::size_t> max_n;
};

int cmd_fraenkel(const FraenkelArgs& args, std::ostream& out) {
  LemmaOptions options;
  options.threads = args.threads;
  if (args.max_n) options.limits.lemma_max_atoms = *args.max_n;
  const std::size_t max_support =
      args.max_support.value_or(args.atoms >= 2 ? args.atoms - 2 : 0);
  const LemmaReport report = verify_lemma(args.atoms, max_support, options);
  if (!report.applicable) {
    out << "fraenkel atoms=" << report.atoms
        << ": not applicable (no support leaves two atoms outside it)\n";
    return kPositive;
  }
  out << "fraenkel atoms=" << report.atoms << " max_support=" << report.max_support
      << "\n";
  for (const auto& s : report.per_support) {
    out << "support={" << join(s.support, ",") << "}\torbits=" << s.orbit_count
        << "\trelations=" << s.relations_checked << "\tfailures=" << s.failures
        << "\n";
  }
  out << "relations_checked=" << report.relations_checked
      << " failures=" << report.failures << "\n";
  if (report.failures == 0) {
    out << "ALL NON-RIGID\n";
    return kPositive;
  }
  out << "COUNTEREXAMPLES FOUND\n";
  for (const auto& s : report.per_support) {
    for (auto mask : s.failing_masks) {
      out << "support={" << join(s.support, ",") << "}\tmask=" << mask << "\n";
    }
  }
  return kNegative;
}

struct CensusArgs {
  std::size_t max_n = 0;
  bool iso = false;
  unsigned threads = 1;
  std::optional<std::size_t> max_n_bound;
};

int cmd_census(const CensusArgs& args, std::ostream& out) {
  CensusOptions options;
  options.isomorph_rejection = args.iso;
  options.threads = args.threads;
  if (args.max_n_bound) {
    options.labeled_max_n = *args.max_n_bound;
    options.isomorph_max_n = *args.max_n_bound;
  }
  const std::size_t bound =
      args.iso ? options.isomorph_max_n : options.labeled_max_n;
  if (args.max_n > bound) {
    throw ResourceLimit("census bound exceeded: max_n=" + std::to_string(args.max_n) +
                        " > " + std::to_string(bound));
  }
  std::vector<CensusRow> rows;
  for (std::size_t n = 0; n <= args.max_n; ++n) rows.push_back(census(n, options));
  write_census_tsv(out, rows);
  return kPositive;
}

void add_max_n(CLI::App* app, std::optional<std::size_t>& target) {
  app->add_option("--max-n", target, "Override the search size bound");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Rigidity of finite binary relations", "rigidrel"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Decide a rigidity property of a relation file");
  check_cmd->add_option("file", check.file, "Relation file")->required();
  check_cmd->add_option("--mode", check.mode, "rigid|strong|hereditary|irreflexive")
      ->check(CLI::IsMember({"rigid", "strong", "hereditary", "irreflexive"}));
  add_max_n(check_cmd, check.max_n);

  BuildArgs build;
  auto* build_cmd = app.add_subcommand("build", "Construct a rigid relation");
  build_cmd->require_subcommand(1);
  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("-o,--output", build.output, "Write to this file instead of stdout");
    cmd->add_flag("--verify", build.verify, "Check the result is rigid (exit 1 if not)");
    cmd->add_flag("--dot", build.dot, "Emit Graphviz DOT instead of a relation file");
    add_max_n(cmd, build.max_n);
  };
  const auto add_spine = [&](CLI::App* cmd) {
    cmd->add_option("--zstar", build.z_star, "Index of z*")->required();
    cmd->add_option("--chain", build.chain, "Comma-separated chain indices z_0,z_1,...")
        ->required();
  };
  const auto add_base = [&](CLI::App* cmd) {
    cmd->add_option("--pairs", build.pairs, "Comma-separated bits:label pairs")->required();
    cmd->add_option("--base", build.base_file, "Base relation file");
    cmd->add_option("--base-linorder", build.base_linorder, "Use the linear order of this size as base");
    cmd->add_flag("--unsafe", build.unsafe, "Skip the base hypothesis checks");
  };
  auto* linorder = build_cmd->add_subcommand("linorder", "Linear order on n vertices");
  linorder->add_option("n", build.count)->required();
  add_common(linorder);
  auto* ordinal = build_cmd->add_subcommand("ordinal", "Order on an ordinal gamma");
  ordinal->add_option("gamma", build.count)->required();
  add_common(ordinal);
  auto* cantor = build_cmd->add_subcommand("cantor", "Spine construction on binary strings");
  cantor->add_option("--points", build.points, "Comma-separated binary strings")->required();
  add_spine(cantor);
  add_common(cantor);
  auto* main_cmd = build_cmd->add_subcommand("product-main", "Spine construction on labeled pairs");
  add_base(main_cmd);
  add_spine(main_cmd);
  add_common(main_cmd);
  auto* lex_cmd = build_cmd->add_subcommand("product-lex", "Lexicographic product construction");
  add_base(lex_cmd);
  add_common(lex_cmd);

  FraenkelArgs fraenkel;
  auto* fraenkel_cmd = app.add_subcommand("fraenkel", "Verify no supported relation is rigid");
  fraenkel_cmd->add_option("atoms", fraenkel.atoms, "Number of atoms N")->required();
  fraenkel_cmd->add_option("max_support", fraenkel.max_support, "Largest support size (default N-2)");
  fraenkel_cmd->add_option("--threads", fraenkel.threads)->check(CLI::PositiveNumber);
  add_max_n(fraenkel_cmd, fraenkel.max_n);

  CensusArgs census_args;
  auto* census_cmd = app.add_subcommand("census", "Count relations by rigidity type");
  census_cmd->add_option("max_n", census_args.max_n, "Largest vertex count")->required();
  census_cmd->add_flag("--iso", census_args.iso, "Enumerate one relation per isomorphism class");
  census_cmd->add_option("--threads", census_args.threads)->check(CLI::PositiveNumber);
  add_max_n(census_cmd, census_args.max_n_bound);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kPositive;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kError;
  }

  std::ostringstream buffer;
  int code = kError;
  try {
    if (check_cmd->parsed()) {
      code = cmd_check(check, buffer);
    } else if (build_cmd->parsed()) {
      for (auto* sub : build_cmd->get_subcommands()) build.kind = sub->get_name();
      code = cmd_build(build, buffer, err);
    } else if (fraenkel_cmd->parsed()) {
      code = cmd_fraenkel(fraenkel, buffer);
    } else {
      code = cmd_census(census_args, buffer);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  out << buffer.str();
  return code;
}

}  // namespace rigidrel::cli
