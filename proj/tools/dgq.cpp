#include <openssl/evp.h>

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "dgq/algebra.hpp"
#include "dgq/criteria.hpp"
#include "dgq/errors.hpp"
#include "dgq/io.hpp"
#include "dgq/silting.hpp"

using namespace dgq;
using json = nlohmann::ordered_json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_assert = 1;
constexpr int exit_invalid = 2;
constexpr int exit_ineligible = 3;
constexpr int exit_inconclusive = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string sha256(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned int k = 0; k < len; ++k) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[k]);
  return "sha256:" + out.str();
}

struct Input {
  std::string digest;
  DgQuiver quiver;
};

Input load(const std::string& path) {
  const std::string text = read_file(path);
  return {sha256(text), parse_quiver(text)};
}

json envelope(const std::string& command, const Input& in) {
  return {{"schema", "dgq-report/1"}, {"command", command}, {"input_digest", in.digest}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void require_valid(const DgQuiver& q) {
  const auto report = validate(q);
  if (report.ok()) return;
  std::string msg = "invalid dg quiver:";
  for (const auto& v : report.violations) msg += "\n  " + v.message;
  throw InvalidInput(msg);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
  return out;
}

json table_json(const ExtTable& t) {
  json rows = json::array();
  for (int n = 0; n <= t.window && n < static_cast<int>(t.entries.size()); ++n)
    for (std::size_t i = 0; i < t.vertices.size(); ++i)
      for (std::size_t j = 0; j < t.vertices.size(); ++j)
        if (long c = t.entries[n][i][j]) rows.push_back({{"n", n}, {"i", t.vertices[i]}, {"j", t.vertices[j]}, {"dim", c}});
  return {{"window", t.window}, {"vertices", t.vertices}, {"nonzero", rows}};
}

void print_table(const ExtTable& t) {
  std::cout << "Ext table, dim Ext^n(S_i, S_j) with i the row:\n";
  if (t.vertices.empty()) {
    std::cout << "  (empty)\n";
    return;
  }
  std::size_t width = 1;
  for (const auto& v : t.vertices) width = std::max(width, v.size());
  for (int n = 0; n < static_cast<int>(t.entries.size()); ++n) {
    std::cout << "  n = " << n << "\n    " << std::string(width, ' ');
    for (const auto& v : t.vertices) std::cout << " " << std::setw(static_cast<int>(width)) << v;
    std::cout << "\n";
    for (std::size_t i = 0; i < t.vertices.size(); ++i) {
      std::cout << "    " << std::setw(static_cast<int>(width)) << t.vertices[i];
      for (std::size_t j = 0; j < t.vertices.size(); ++j)
        std::cout << " " << std::setw(static_cast<int>(width)) << t.entries[n][i][j];
      std::cout << "\n";
    }
  }
}

// degree -> "source->target" -> multiplicity, degrees descending
using ArrowCounts = std::map<int, std::map<std::string, long>, std::greater<>>;

ArrowCounts arrow_counts(const DgQuiver& q) {
  ArrowCounts out;
  for (const auto& a : q.arrows()) ++out[a.degree][a.source_label + "->" + a.target_label];
  return out;
}

int cmd_validate(const std::string& path, bool as_json) {
  Input in = load(path);
  const auto report = validate(in.quiver);
  if (as_json) {
    json j = envelope("validate", in);
    json violations = json::array();
    for (const auto& v : report.violations)
      violations.push_back({{"kind", to_string(v.kind)}, {"arrow", v.arrow}, {"message", v.message}});
    j["results"] = {{"valid", report.ok()}, {"violations", violations}};
    emit(j);
  } else if (report.ok()) {
    std::cout << "valid: " << in.quiver.vertices().size() << " vertices, " << in.quiver.arrows().size()
              << " arrows\n";
  } else {
    std::cout << "invalid:\n";
    for (const auto& v : report.violations) std::cout << "  " << to_string(v.kind) << ": " << v.message << "\n";
  }
  return report.ok() ? exit_ok : exit_invalid;
}

int cmd_report(const std::string& path, std::optional<int> d_opt, std::optional<int> nmax, bool as_json,
               bool assert_mode) {
  Input in = load(path);
  const DgQuiver& q = in.quiver;
  require_valid(q);
  const int gl = global_dimension(q);
  const int d = d_opt.value_or(std::max(1, gl));
  const ExtTable table = ext_table(q, nmax);
  bool all_admissible = true;
  json verdicts = json::array();
  std::vector<std::string> lines;
  for (int v = 0; v < static_cast<int>(q.vertices().size()); ++v) {
    const std::string& label = q.vertices()[v];
    try {
      const MutationVerdict verdict = mutation_check(q, v, d);
      all_admissible = all_admissible && verdict.admissible;
      verdicts.push_back({{"vertex", label},
                          {"admissible", verdict.admissible},
                          {"reason", to_string(verdict.reason)},
                          {"arrows", verdict.offending}});
      std::string line = label + ": " + (verdict.admissible ? "admissible" : "not admissible");
      if (verdict.reason == VerdictReason::OffendingArrows) line += " (offending: " + join(verdict.offending, ", ") + ")";
      if (verdict.reason == VerdictReason::LoopPresent)
        line = label + ": criterion inapplicable (loop: " + join(verdict.offending, ", ") + ")";
      lines.push_back(line);
    } catch (const GlobalDimensionExceeded& e) {
      all_admissible = false;
      verdicts.push_back({{"vertex", label}, {"error", e.what()}, {"witness", e.witness()}});
      lines.push_back(label + ": " + e.what());
    }
  }
  const auto cycle = nu_obstruction_cycle(q, d);
  if (as_json) {
    json j = envelope("report", in);
    json pd = json::object();
    for (int v = 0; v < static_cast<int>(q.vertices().size()); ++v) pd[q.vertices()[v]] = projdim_simple(q, v);
    json obstruction = nullptr;
    if (cycle) obstruction = {{"arrows", cycle->arrows}, {"vertices", cycle->vertices}};
    j["results"] = {{"d", d},
                    {"global_dimension", gl},
                    {"projective_dimensions", pd},
                    {"ext", table_json(table)},
                    {"verdicts", verdicts},
                    {"nu_obstruction", obstruction}};
    emit(j);
  } else {
    std::cout << "global dimension: " << gl << "\n";
    std::cout << "projective dimension of simples:\n";
    for (int v = 0; v < static_cast<int>(q.vertices().size()); ++v)
      std::cout << "  " << q.vertices()[v] << ": " << projdim_simple(q, v) << "\n";
    print_table(table);
    std::cout << "mutation verdicts (d = " << d << "):\n";
    for (const auto& line : lines) std::cout << "  " << line << "\n";
    std::cout << "nu_" << d << " obstruction: ";
    if (cycle) {
      std::vector<std::string> steps;
      for (std::size_t k = 0; k < cycle->arrows.size(); ++k) steps.push_back(cycle->arrows[k] + " at " + cycle->vertices[k]);
      std::cout << "cycle " << join(steps, ", ") << "\n";
    } else {
      std::cout << "none found\n";
    }
  }
  return assert_mode && (!all_admissible || cycle) ? exit_assert : exit_ok;
}

SiltingPresentation apply_mutations(const SiltingPresentation& s, const std::vector<std::string>& labels) {
  SiltingPresentation out = s;
  for (const auto& label : labels) out = mutate(out, out.index(label));
  return out;
}

int cmd_mutate(const std::string& path, const std::vector<std::string>& vertices, int d, std::optional<int> nmax,
               int window, bool as_json, bool assert_mode) {
  Input in = load(path);
  const DgQuiver& q = in.quiver;
  AlgebraPtr a = algebra_from_quiver(q);
  const SiltingPresentation m = apply_mutations(seed(a), vertices);
  const int n_max = nmax.value_or(d + 1);
  const MinimalModel mm = minimal_model_quiver(endomorphism_algebra(m), n_max);
  const bool silting_d = is_d_silting(m, d);
  const bool silting_d1 = is_d_silting(m, d + 1);
  std::optional<WindowReport> win;
  if (window > 0) win = dri_window(m, d, window);
  const ArrowCounts counts = arrow_counts(mm.quiver);
  if (as_json) {
    json j = envelope("mutate", in);
    json arrows = json::array();
    for (const auto& [deg, by_pair] : counts)
      for (const auto& [pair, c] : by_pair) arrows.push_back({{"degree", deg}, {"arrow", pair}, {"count", c}});
    j["results"] = {{"vertices", vertices},
                    {"d", d},
                    {"nmax", n_max},
                    {"minimal_model", arrows},
                    {"d_silting", silting_d},
                    {"d_plus_one_silting", silting_d1}};
    if (win) {
      json steps = json::array();
      for (const auto& st : win->steps) {
        json degrees = json::object();
        for (const auto& [deg, dim] : st.degrees) degrees[std::to_string(deg)] = dim;
        steps.push_back({{"n", st.n}, {"concentrated", st.concentrated}, {"cohomology", degrees}});
      }
      j["results"]["window"] = {{"ok", win->ok}, {"steps", steps}};
    }
    j["provenance"] = m.provenance;
    emit(j);
  } else {
    std::cout << "mutated minimal model (n <= " << n_max << "):\n";
    if (counts.empty()) std::cout << "  no arrows\n";
    for (const auto& [deg, by_pair] : counts) {
      std::vector<std::string> parts;
      for (const auto& [pair, c] : by_pair) parts.push_back(pair + " x" + std::to_string(c));
      std::cout << "  degree " << deg << ": " << join(parts, ", ") << "\n";
    }
    std::cout << d << "-silting: " << (silting_d ? "yes" : "no") << "\n";
    std::cout << d + 1 << "-silting: " << (silting_d1 ? "yes" : "no") << "\n";
    if (win) {
      std::cout << "window (d = " << d << ", n <= " << window << "): " << (win->ok ? "ok" : "fails") << "\n";
      for (const auto& st : win->steps) {
        std::vector<std::string> parts;
        for (const auto& [deg, dim] : st.degrees) parts.push_back("H^" + std::to_string(deg) + " = " + std::to_string(dim));
        std::cout << "  n = " << st.n << ": " << (parts.empty() ? "zero" : join(parts, ", ")) << "\n";
      }
    }
    std::cout << "provenance:\n";
    for (const auto& p : m.provenance) std::cout << "  " << p << "\n";
  }
  const bool ok = silting_d && (!win || win->ok);
  return assert_mode && !ok ? exit_assert : exit_ok;
}

std::vector<std::string> parse_sequence(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty() || text == "-") return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int cmd_order(const std::string& path, const std::vector<std::string>& sequences, bool as_json, bool assert_mode) {
  Input in = load(path);
  AlgebraPtr a = algebra_from_quiver(in.quiver);
  const SiltingPresentation s = seed(a);
  const auto first_seq = parse_sequence(sequences.at(0));
  const auto second_seq = parse_sequence(sequences.at(1));
  const SiltingPresentation first = apply_mutations(s, first_seq);
  const SiltingPresentation second = apply_mutations(s, second_seq);
  const bool geq = silt_order_check(first, second);
  const bool leq = silt_order_check(second, first);
  const std::string relation = geq && leq ? "equal" : geq ? "first >= second" : leq ? "second >= first" : "incomparable";
  auto describe = [](const std::vector<std::string>& seq) {
    return seq.empty() ? std::string("seed") : "mutate " + join(seq, ", ");
  };
  if (as_json) {
    json j = envelope("order", in);
    j["results"] = {{"first", first_seq},
                    {"second", second_seq},
                    {"first_geq_second", geq},
                    {"second_geq_first", leq},
                    {"relation", relation}};
    j["provenance"] = {{"first", first.provenance}, {"second", second.provenance}};
    emit(j);
  } else {
    std::cout << "first: " << describe(first_seq) << "\n";
    std::cout << "second: " << describe(second_seq) << "\n";
    std::cout << "first >= second: " << (geq ? "yes" : "no") << "\n";
    std::cout << "second >= first: " << (leq ? "yes" : "no") << "\n";
    std::cout << "relation: " << relation << "\n";
  }
  return assert_mode && !geq ? exit_assert : exit_ok;
}

int cmd_dot(const std::string& path, const std::string& style) {
  Input in = load(path);
  require_valid(in.quiver);
  std::cout << to_dot(in.quiver, style == "dotted" ? DotStyle::Dotted : DotStyle::Dashed);
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for dg path algebras"};
  app.require_subcommand(1);

  std::string file;
  bool as_json = false, assert_mode = false;
  std::optional<int> d_opt, nmax;
  int d = 2, window = 0;
  std::vector<std::string> vertices, sequences;
  std::string style = "dashed";

  auto* validate_cmd = app.add_subcommand("validate", "check a dg quiver file");
  validate_cmd->add_option("file", file, "quiver file")->required();
  validate_cmd->add_flag("--json", as_json, "machine-readable report");

  auto* report_cmd = app.add_subcommand("report", "global dimension, Ext table and mutation verdicts");
  report_cmd->add_option("file", file, "quiver file")->required();
  report_cmd->add_option("--d", d_opt, "silting degree (default: max(1, gl.dim))")->check(CLI::PositiveNumber);
  report_cmd->add_option("--nmax", nmax, "Ext window (default: gl.dim)")->check(CLI::NonNegativeNumber);
  report_cmd->add_flag("--json", as_json, "machine-readable report");
  report_cmd->add_flag("--assert", assert_mode, "exit 1 unless every vertex is admissible and no obstruction is found");

  auto* mutate_cmd = app.add_subcommand("mutate", "left silting mutation in the derived engine");
  mutate_cmd->add_option("file", file, "quiver file")->required();
  mutate_cmd->add_option("--vertex", vertices, "vertex to mutate at (repeat for a sequence)")->required();
  mutate_cmd->add_option("--d", d, "silting degree")->check(CLI::PositiveNumber);
  mutate_cmd->add_option("--nmax", nmax, "minimal model window (default: d + 1)")->check(CLI::NonNegativeNumber);
  mutate_cmd->add_option("--window", window, "check the nu_d window up to this n")->check(CLI::NonNegativeNumber);
  mutate_cmd->add_flag("--json", as_json, "machine-readable report");
  mutate_cmd->add_flag("--assert", assert_mode, "exit 1 unless the result is d-silting and the window holds");

  auto* dot_cmd = app.add_subcommand("dot", "Graphviz rendering");
  dot_cmd->add_option("file", file, "quiver file")->required();
  dot_cmd->add_option("--degree-style", style, "edge style for degree -1 arrows")
      ->check(CLI::IsMember({"dashed", "dotted"}));

  auto* order_cmd = app.add_subcommand("order", "compare two mutation sequences in the silting order");
  order_cmd->add_option("file", file, "quiver file")->required();
  order_cmd->add_option("--mutations", sequences, "two comma-separated vertex sequences ('-' for the seed)")
      ->expected(2)
      ->required();
  order_cmd->add_flag("--json", as_json, "machine-readable report");
  order_cmd->add_flag("--assert", assert_mode, "exit 1 unless first >= second");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? exit_ok : exit_invalid;
  }

  try {
    if (*validate_cmd) return cmd_validate(file, as_json);
    if (*report_cmd) return cmd_report(file, d_opt, nmax, as_json, assert_mode);
    if (*mutate_cmd) return cmd_mutate(file, vertices, d, nmax, window, as_json, assert_mode);
    if (*dot_cmd) return cmd_dot(file, style);
    if (*order_cmd) return cmd_order(file, sequences, as_json, assert_mode);
  } catch (const ParseError& e) {
    std::cerr << file << ":" << e.what() << "\n";
    return exit_invalid;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_invalid;
  } catch (const GlobalDimensionExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_invalid;
  } catch (const EngineIneligible& e) {
    std::cerr << "error: " << e.what() << " (cycle: " << join(e.cycle(), " ") << ")\n";
    return exit_ineligible;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_inconclusive;
  }
  return exit_ok;
}
