#include "dgq/criteria.hpp"

#include <algorithm>

#include "dgq/errors.hpp"

namespace dgq {

std::string to_string(VerdictReason r) {
  switch (r) {
    case VerdictReason::NoOffendingArrow: return "no-offending-arrow";
    case VerdictReason::OffendingArrows: return "offending-arrow";
    case VerdictReason::LoopPresent: return "loop-present-criterion-inapplicable";
  }
  return "unknown";
}

namespace {

void require_valid(const DgQuiver& q) {
  auto report = validate(q);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw InvalidInput("invalid quiver: arrow '" + v.arrow + "': " + v.message);
  }
}

long count_arrows(const DgQuiver& q, int from, int to, int degree) {
  return std::count_if(q.arrows().begin(), q.arrows().end(), [&](const Arrow& a) {
    return a.source == from && a.target == to && a.degree == degree;
  });
}

void check_vertex(const DgQuiver& q, int i) {
  if (i < 0 || i >= static_cast<int>(q.vertices().size())) throw InvalidInput("vertex index out of range");
}

}  // namespace

long ext_simples(const DgQuiver& q, int i, int j, int n) {
  require_valid(q);
  check_vertex(q, i);
  check_vertex(q, j);
  if (n < 0) throw InvalidInput("negative Ext degree");
  if (n == 0) return i == j ? 1 : 0;
  return count_arrows(q, j, i, -(n - 1));
}

int projdim_simple(const DgQuiver& q, int i) {
  check_vertex(q, i);
  int pd = 0;
  for (const auto& a : q.arrows())
    if (a.target == i) pd = std::max(pd, 1 - a.degree);
  return pd;
}

int global_dimension(const DgQuiver& q) {
  int gd = 0;
  for (const auto& a : q.arrows()) gd = std::max(gd, 1 - a.degree);
  return gd;
}

MutationVerdict mutation_check(const DgQuiver& q, int i, int d) {
  check_vertex(q, i);
  if (d < 1) throw InvalidInput("mutation_check needs d >= 1");
  for (const auto& a : q.arrows())
    if (a.degree <= -d)
      throw GlobalDimensionExceeded("global dimension exceeds " + std::to_string(d) + ": arrow '" + a.id +
                                        "' has degree " + std::to_string(a.degree),
                                    a.id);
  MutationVerdict v;
  v.vertex = q.vertices()[i];
  v.d = d;
  for (const auto& a : q.arrows())
    if (a.source == i && a.target == i && a.degree == 1 - d) v.offending.push_back(a.id);
  if (!v.offending.empty()) {
    v.reason = VerdictReason::LoopPresent;
    return v;
  }
  for (const auto& a : q.arrows())
    if (a.target == i && a.degree == 1 - d) v.offending.push_back(a.id);
  v.admissible = v.offending.empty();
  v.reason = v.admissible ? VerdictReason::NoOffendingArrow : VerdictReason::OffendingArrows;
  return v;
}

std::optional<CycleCertificate> nu_obstruction_cycle(const DgQuiver& q, int d) {
  DgQuiver layer = subquiver_by_degree(q, 1 - d);
  auto cycle = find_cycle(layer);
  if (!cycle) return std::nullopt;
  CycleCertificate cert;
  for (int a : *cycle) {
    cert.arrows.push_back(layer.arrows()[a].id);
    cert.vertices.push_back(layer.arrows()[a].source_label);
  }
  return cert;
}

ExtTable ext_table(const DgQuiver& q, std::optional<int> n_max) {
  require_valid(q);
  const int window = n_max.value_or(global_dimension(q));
  if (window < 0) throw InvalidInput("negative Ext window");
  ExtTable t = arrow_count_table(q, window);
  return t;
}

ExtTable arrow_count_table(const DgQuiver& q, int n_max) {
  const int nv = static_cast<int>(q.vertices().size());
  ExtTable t;
  t.window = n_max;
  t.vertices = q.vertices();
  t.entries.assign(n_max + 1, std::vector<std::vector<long>>(nv, std::vector<long>(nv, 0)));
  for (int i = 0; i < nv; ++i) t.entries[0][i][i] = 1;
  for (const auto& a : q.arrows()) {
    const int n = 1 - a.degree;
    if (n <= n_max && a.source >= 0 && a.target >= 0) ++t.entries[n][a.target][a.source];
  }
  return t;
}

}  // namespace dgq
