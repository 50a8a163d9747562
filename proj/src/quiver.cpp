#include "dgq/quiver.hpp"

#include <algorithm>
#include <functional>

#include "dgq/errors.hpp"

namespace dgq {

PathSum PathSum::of(const Path& p, const Rational& c) {
  PathSum s;
  s.add(p, c);
  return s;
}

void PathSum::add(const Path& p, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(p, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

PathSum& PathSum::operator+=(const PathSum& other) {
  for (const auto& [p, c] : other.terms_) add(p, c);
  return *this;
}

void PathSum::scale(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return;
  }
  for (auto& [p, v] : terms_) v *= c;
}

int DgQuiver::add_vertex(std::string label) {
  if (find_vertex(label)) throw InvalidInput("duplicate vertex '" + label + "'");
  vertices_.push_back(std::move(label));
  const int v = static_cast<int>(vertices_.size()) - 1;
  for (auto& a : arrows_) {
    if (a.source < 0 && a.source_label == vertices_.back()) a.source = v;
    if (a.target < 0 && a.target_label == vertices_.back()) a.target = v;
  }
  return v;
}

int DgQuiver::add_arrow(std::string id, std::string_view source, std::string_view target, int degree) {
  if (find_arrow(id)) throw InvalidInput("duplicate arrow '" + id + "'");
  Arrow a;
  a.id = std::move(id);
  a.source = find_vertex(source).value_or(-1);
  a.target = find_vertex(target).value_or(-1);
  a.degree = degree;
  a.source_label = std::string(source);
  a.target_label = std::string(target);
  arrows_.push_back(std::move(a));
  return static_cast<int>(arrows_.size()) - 1;
}

void DgQuiver::set_differential(int arrow, PathSum value) {
  if (arrow < 0 || arrow >= static_cast<int>(arrows_.size())) throw InvalidInput("arrow index out of range");
  if (value.empty())
    differential_.erase(arrow);
  else
    differential_[arrow] = std::move(value);
}

const PathSum* DgQuiver::differential(int arrow) const {
  auto it = differential_.find(arrow);
  return it == differential_.end() ? nullptr : &it->second;
}

std::optional<int> DgQuiver::find_vertex(std::string_view label) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == label) return static_cast<int>(i);
  return std::nullopt;
}

std::optional<int> DgQuiver::find_arrow(std::string_view id) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].id == id) return static_cast<int>(i);
  return std::nullopt;
}

int DgQuiver::vertex(std::string_view label) const {
  if (auto v = find_vertex(label)) return *v;
  throw InvalidInput("unknown vertex '" + std::string(label) + "'");
}

int DgQuiver::arrow(std::string_view id) const {
  if (auto a = find_arrow(id)) return *a;
  throw InvalidInput("unknown arrow '" + std::string(id) + "'");
}

Path DgQuiver::arrow_path(int a) const {
  const Arrow& ar = arrows_.at(a);
  return Path{ar.source, ar.target, {a}};
}

Path DgQuiver::path_from_ids(const std::vector<std::string>& application_order) const {
  if (application_order.empty()) throw InvalidInput("empty path");
  Path p = arrow_path(arrow(application_order.front()));
  for (std::size_t k = 1; k < application_order.size(); ++k) {
    auto next = compose(arrow_path(arrow(application_order[k])), p);
    if (!next)
      throw InvalidInput("arrows '" + application_order[k - 1] + "' and '" + application_order[k] +
                         "' are not composable");
    p = std::move(*next);
  }
  return p;
}

int DgQuiver::degree(const Path& p) const {
  int deg = 0;
  for (int a : p.arrows) deg += arrows_.at(a).degree;
  return deg;
}

std::string DgQuiver::name(const Path& p) const {
  if (p.lazy()) return "e_" + (p.source >= 0 ? vertices_.at(p.source) : std::string("?"));
  std::string out;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
    if (!out.empty()) out += '*';
    out += arrows_.at(*it).id;
  }
  return out;
}

std::optional<Path> compose(const Path& later, const Path& earlier) {
  if (earlier.target != later.source) return std::nullopt;
  Path p{earlier.source, later.target, earlier.arrows};
  p.arrows.insert(p.arrows.end(), later.arrows.begin(), later.arrows.end());
  return p;
}

bool ValidationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.kind == kind; });
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::DanglingEndpoint: return "dangling endpoint";
    case ViolationKind::PositiveDegree: return "positive degree";
    case ViolationKind::DifferentialNotParallel: return "differential term not parallel to arrow";
    case ViolationKind::DifferentialDegree: return "differential term of wrong degree";
    case ViolationKind::DifferentialShortTerm: return "differential term of length < 2";
    case ViolationKind::DifferentialBrokenPath: return "differential term is not a path";
    case ViolationKind::DSquaredNonzero: return "d^2 != 0";
  }
  return "unknown";
}

namespace {

bool composable(const DgQuiver& q, const Path& p) {
  if (p.arrows.empty()) return p.source >= 0 && p.source == p.target;
  const auto& arrows = q.arrows();
  if (arrows[p.arrows.front()].source != p.source || arrows[p.arrows.back()].target != p.target) return false;
  for (std::size_t k = 1; k < p.arrows.size(); ++k)
    if (arrows[p.arrows[k - 1]].target != arrows[p.arrows[k]].source) return false;
  return true;
}

}  // namespace

ValidationReport validate(const DgQuiver& q) {
  ValidationReport report;
  auto flag = [&](ViolationKind kind, const Arrow& a, std::string msg) {
    report.violations.push_back({kind, a.id, std::move(msg)});
  };
  for (const auto& a : q.arrows()) {
    if (a.source < 0) flag(ViolationKind::DanglingEndpoint, a, "unknown source vertex '" + a.source_label + "'");
    if (a.target < 0) flag(ViolationKind::DanglingEndpoint, a, "unknown target vertex '" + a.target_label + "'");
    if (a.degree > 0) flag(ViolationKind::PositiveDegree, a, "positive degree " + std::to_string(a.degree));
  }
  for (const auto& [idx, sum] : q.differentials()) {
    const Arrow& a = q.arrows()[idx];
    for (const auto& [p, c] : sum.terms()) {
      if (!composable(q, p)) {
        flag(ViolationKind::DifferentialBrokenPath, a, "term is not a composable path");
        continue;
      }
      const std::string term = q.name(p);
      if (p.source != a.source || p.target != a.target)
        flag(ViolationKind::DifferentialNotParallel, a, "term " + term + " is not parallel to the arrow");
      if (q.degree(p) != a.degree + 1)
        flag(ViolationKind::DifferentialDegree, a,
             "term " + term + " has degree " + std::to_string(q.degree(p)) + ", expected " +
                 std::to_string(a.degree + 1));
      if (p.length() < 2) flag(ViolationKind::DifferentialShortTerm, a, "term " + term + " has length < 2");
    }
  }
  if (report.ok()) {
    auto sq = check_d_squared(q);
    if (!sq.passed) {
      const Arrow& a = q.arrows()[q.arrow(*sq.witness)];
      flag(ViolationKind::DSquaredNonzero, a, "d(d(" + a.id + ")) is nonzero");
    }
  }
  return report;
}

PathSum leibniz(const DgQuiver& q, const Path& p) {
  PathSum out;
  const auto& arrows = p.arrows;
  const std::size_t n = arrows.size();
  // suffix[k] = sum of degrees of arrows applied after position k
  std::vector<int> suffix(n + 1, 0);
  for (std::size_t k = n; k-- > 0;) suffix[k] = suffix[k + 1] + q.arrows()[arrows[k]].degree;
  for (std::size_t k = 0; k < n; ++k) {
    const PathSum* da = q.differential(arrows[k]);
    if (!da) continue;
    const Rational sign = (suffix[k + 1] % 2 == 0) ? Rational(1) : Rational(-1);
    for (const auto& [term, c] : da->terms()) {
      Path r{p.source, p.target, {}};
      r.arrows.reserve(n - 1 + term.arrows.size());
      r.arrows.insert(r.arrows.end(), arrows.begin(), arrows.begin() + static_cast<std::ptrdiff_t>(k));
      r.arrows.insert(r.arrows.end(), term.arrows.begin(), term.arrows.end());
      r.arrows.insert(r.arrows.end(), arrows.begin() + static_cast<std::ptrdiff_t>(k + 1), arrows.end());
      out.add(r, sign * c);
    }
  }
  return out;
}

PathSum leibniz(const DgQuiver& q, const PathSum& s) {
  PathSum out;
  for (const auto& [p, c] : s.terms()) {
    PathSum t = leibniz(q, p);
    t.scale(c);
    out += t;
  }
  return out;
}

DSquaredCheck check_d_squared(const DgQuiver& q) {
  for (const auto& [idx, sum] : q.differentials()) {
    if (!leibniz(q, sum).empty()) return {false, q.arrows()[idx].id};
  }
  return {};
}

std::vector<Path> enumerate_paths(const DgQuiver& q, int from, int to, int degree, std::size_t max_len) {
  std::vector<Path> found;
  std::vector<std::vector<int>> out(q.vertices().size());
  for (std::size_t a = 0; a < q.arrows().size(); ++a)
    if (q.arrows()[a].source >= 0 && q.arrows()[a].target >= 0) out[q.arrows()[a].source].push_back(static_cast<int>(a));
  Path current{from, from, {}};
  int current_degree = 0;
  std::function<void()> walk = [&]() {
    if (current.target == to && current_degree == degree) found.push_back(current);
    if (current.length() == max_len) return;
    for (int a : out[current.target]) {
      const Arrow& ar = q.arrows()[a];
      const int saved = current.target;
      current.arrows.push_back(a);
      current.target = ar.target;
      current_degree += ar.degree;
      walk();
      current_degree -= ar.degree;
      current.target = saved;
      current.arrows.pop_back();
    }
  };
  walk();
  auto key = [&](const Path& p) {
    std::vector<std::string> ids;
    for (int a : p.arrows) ids.push_back(q.arrows()[a].id);
    return ids;
  };
  std::sort(found.begin(), found.end(), [&](const Path& a, const Path& b) { return key(a) < key(b); });
  return found;
}

std::optional<std::vector<int>> find_cycle(const DgQuiver& q) {
  const std::size_t nv = q.vertices().size();
  std::vector<std::vector<int>> out(nv);
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const Arrow& ar = q.arrows()[a];
    if (ar.source >= 0 && ar.target >= 0) out[ar.source].push_back(static_cast<int>(a));
  }
  for (auto& list : out)
    std::sort(list.begin(), list.end(), [&](int a, int b) { return q.arrows()[a].id < q.arrows()[b].id; });

  std::vector<int> color(nv, 0);  // 0 unvisited, 1 on stack, 2 done
  std::vector<int> stack;         // arrows on the current DFS path
  std::optional<std::vector<int>> cycle;
  std::function<bool(int)> dfs = [&](int v) {
    color[v] = 1;
    for (int a : out[v]) {
      const int w = q.arrows()[a].target;
      if (color[w] == 1) {
        std::vector<int> c{a};
        for (auto it = stack.rbegin(); it != stack.rend() && q.arrows()[c.front()].source != w; ++it)
          c.insert(c.begin(), *it);
        cycle = std::move(c);
        return true;
      }
      if (color[w] == 0) {
        stack.push_back(a);
        if (dfs(w)) return true;
        stack.pop_back();
      }
    }
    color[v] = 2;
    return false;
  };
  std::vector<int> order(nv);
  for (std::size_t v = 0; v < nv; ++v) order[v] = static_cast<int>(v);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return q.vertices()[a] < q.vertices()[b]; });
  for (int v : order)
    if (color[v] == 0 && dfs(v)) return cycle;
  return std::nullopt;
}

bool is_graph_acyclic(const DgQuiver& q) { return !find_cycle(q).has_value(); }

DgQuiver subquiver_by_degree(const DgQuiver& q, int degree) {
  DgQuiver sub;
  for (const auto& v : q.vertices()) sub.add_vertex(v);
  for (const auto& a : q.arrows())
    if (a.degree == degree) sub.add_arrow(a.id, a.source_label, a.target_label, a.degree);
  return sub;
}

DgQuiver relabeled(const DgQuiver& q, const std::map<std::string, std::string>& vertex_names,
                   const std::map<std::string, std::string>& arrow_names) {
  auto rename = [](const std::map<std::string, std::string>& m, const std::string& s) {
    auto it = m.find(s);
    return it == m.end() ? s : it->second;
  };
  DgQuiver r;
  for (const auto& v : q.vertices()) r.add_vertex(rename(vertex_names, v));
  for (const auto& a : q.arrows())
    r.add_arrow(rename(arrow_names, a.id), rename(vertex_names, a.source_label), rename(vertex_names, a.target_label),
                a.degree);
  for (const auto& [idx, sum] : q.differentials()) r.set_differential(idx, sum);
  return r;
}

}  // namespace dgq
