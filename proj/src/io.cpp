#include "dgq/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "dgq/errors.hpp"

namespace dgq {

namespace {

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool valid_name(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.' || c == '*' ||
           c == '(' || c == ')' || c == '-';
  });
}

PathSum parse_terms(const DgQuiver& q, const std::string& body, int line) {
  PathSum sum;
  std::string_view rest = body;
  bool any = false;
  while (true) {
    auto comma = rest.find(',');
    auto piece = split_ws(rest.substr(0, comma));
    if (piece.empty()) throw ParseError(line, "empty differential term");
    Rational c;
    try {
      c = parse_rational(piece.front());
    } catch (const std::invalid_argument& e) {
      throw ParseError(line, e.what());
    }
    if (piece.size() == 1) {
      if (c != 0 || any || comma != std::string_view::npos)
        throw ParseError(line, "term '" + piece.front() + "' has no path");
      return sum;
    }
    std::vector<std::string> ids(piece.begin() + 1, piece.end());
    for (const auto& id : ids)
      if (!q.find_arrow(id)) throw ParseError(line, "unknown arrow '" + id + "' in differential");
    try {
      sum.add(q.path_from_ids(ids), c);
    } catch (const InvalidInput& e) {
      throw ParseError(line, e.what());
    }
    any = true;
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return sum;
}

}  // namespace

DgQuiver parse_quiver(std::string_view text) {
  DgQuiver q;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  bool header = false;
  std::vector<int> seen_d;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view content = strip_comment(raw);
    auto tokens = split_ws(content);
    if (tokens.empty()) continue;
    const std::string& kw = tokens.front();
    if (!header) {
      if (kw != "dgquiver") throw ParseError(line, "expected header 'dgquiver 1'");
      if (tokens.size() != 2 || tokens[1] != "1") throw ParseError(line, "unsupported format version");
      header = true;
      continue;
    }
    if (kw == "vertex") {
      if (tokens.size() < 2) throw ParseError(line, "vertex needs a label");
      for (std::size_t k = 1; k < tokens.size(); ++k) {
        if (!valid_name(tokens[k])) throw ParseError(line, "bad vertex label '" + tokens[k] + "'");
        if (q.find_vertex(tokens[k])) throw ParseError(line, "duplicate vertex '" + tokens[k] + "'");
        q.add_vertex(tokens[k]);
      }
    } else if (kw == "arrow") {
      if (tokens.size() != 5) throw ParseError(line, "expected 'arrow <id> <source> <target> <degree>'");
      if (!valid_name(tokens[1])) throw ParseError(line, "bad arrow id '" + tokens[1] + "'");
      if (q.find_arrow(tokens[1])) throw ParseError(line, "duplicate arrow '" + tokens[1] + "'");
      int degree = 0;
      try {
        std::size_t used = 0;
        degree = std::stoi(tokens[4], &used);
        if (used != tokens[4].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError(line, "bad degree '" + tokens[4] + "'");
      }
      q.add_arrow(tokens[1], tokens[2], tokens[3], degree);
    } else if (kw == "d") {
      auto eq = content.find('=');
      if (tokens.size() < 3 || tokens[2] != "=" || eq == std::string_view::npos)
        throw ParseError(line, "expected 'd <arrow> = <terms>'");
      auto a = q.find_arrow(tokens[1]);
      if (!a) throw ParseError(line, "unknown arrow '" + tokens[1] + "'");
      if (std::find(seen_d.begin(), seen_d.end(), *a) != seen_d.end())
        throw ParseError(line, "differential of '" + tokens[1] + "' given twice");
      seen_d.push_back(*a);
      q.set_differential(*a, parse_terms(q, std::string(content.substr(eq + 1)), line));
    } else {
      throw ParseError(line, "unknown directive '" + kw + "'");
    }
  }
  if (!header) throw ParseError(line, "missing header 'dgquiver 1'");
  return q;
}

DgQuiver load_quiver(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ParseError(0, "cannot read '" + file.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_quiver(buf.str());
}

std::string serialize_quiver(const DgQuiver& q) {
  std::ostringstream out;
  out << "dgquiver 1\n";
  for (const auto& v : q.vertices()) out << "vertex " << v << '\n';
  for (const auto& a : q.arrows())
    out << "arrow " << a.id << ' ' << a.source_label << ' ' << a.target_label << ' ' << a.degree << '\n';
  for (const auto& [idx, sum] : q.differentials()) {
    out << "d " << q.arrows()[idx].id << " =";
    bool first = true;
    for (const auto& [p, c] : sum.terms()) {
      out << (first ? " " : ", ") << format_rational(c);
      for (int a : p.arrows) out << ' ' << q.arrows()[a].id;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

std::string to_dot(const DgQuiver& q, DotStyle style) {
  auto quote = [](const std::string& s) {
    std::string r = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') r += '\\';
      r += c;
    }
    return r + '"';
  };
  std::vector<std::string> vertices = q.vertices();
  std::sort(vertices.begin(), vertices.end());
  std::vector<const Arrow*> arrows;
  for (const auto& a : q.arrows()) arrows.push_back(&a);
  std::stable_sort(arrows.begin(), arrows.end(), [](const Arrow* a, const Arrow* b) {
    return std::tie(a->source_label, a->id) < std::tie(b->source_label, b->id);
  });
  std::ostringstream out;
  out << "digraph dgquiver {\n";
  for (const auto& v : vertices) out << "  " << quote(v) << ";\n";
  for (const Arrow* a : arrows) {
    out << "  " << quote(a->source_label) << " -> " << quote(a->target_label) << " [label=";
    if (a->degree == 0) {
      out << quote(a->id) << "]";
    } else if (a->degree == -1) {
      out << quote(a->id) << ", style=" << (style == DotStyle::Dashed ? "dashed" : "dotted") << "]";
    } else {
      out << quote(a->id + " (" + std::to_string(a->degree) + ")") << ", style=bold]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace dgq
