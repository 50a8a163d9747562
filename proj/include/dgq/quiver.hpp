#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dgq/rational.hpp"

namespace dgq {

struct Arrow {
  std::string id;
  int source = -1;  // -1: endpoint names an undeclared vertex
  int target = -1;
  int degree = 0;
  std::string source_label;
  std::string target_label;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// A path a_n ... a_1 stored in application order (a_1 first). A path of
/// length zero is the lazy path e_v with source == target == v.
struct Path {
  int source = -1;
  int target = -1;
  std::vector<int> arrows;

  std::size_t length() const { return arrows.size(); }
  bool lazy() const { return arrows.empty(); }
  auto operator<=>(const Path&) const = default;
};

/// Formal linear combination of paths, no zero coefficients.
class PathSum {
 public:
  PathSum() = default;
  static PathSum of(const Path& p, const Rational& c = Rational(1));

  void add(const Path& p, const Rational& c);
  PathSum& operator+=(const PathSum& other);
  void scale(const Rational& c);

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<Path, Rational>& terms() const { return terms_; }
  friend bool operator==(const PathSum& a, const PathSum& b) { return a.terms_ == b.terms_; }

 private:
  std::map<Path, Rational> terms_;
};

/// Finite graded quiver with a differential on arrows. Values are immutable
/// once handed to the algorithms; construction goes through the add_* calls.
class DgQuiver {
 public:
  /// Throws InvalidInput on a duplicate label.
  int add_vertex(std::string label);
  /// Unknown endpoint labels are kept as dangling endpoints for validate().
  /// Throws InvalidInput on a duplicate arrow id.
  int add_arrow(std::string id, std::string_view source, std::string_view target, int degree);
  /// An empty value removes the differential (zero is represented by absence).
  void set_differential(int arrow, PathSum value);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::map<int, PathSum>& differentials() const { return differential_; }
  const PathSum* differential(int arrow) const;

  std::optional<int> find_vertex(std::string_view label) const;
  std::optional<int> find_arrow(std::string_view id) const;
  int vertex(std::string_view label) const;  // throws InvalidInput
  int arrow(std::string_view id) const;      // throws InvalidInput

  Path lazy_path(int v) const { return Path{v, v, {}}; }
  Path arrow_path(int a) const;
  /// Builds a path from arrow ids in application order; throws if not composable.
  Path path_from_ids(const std::vector<std::string>& application_order) const;
  int degree(const Path& p) const;
  /// Written right to left, e.g. "beta*alpha"; lazy paths print as "e_<v>".
  std::string name(const Path& p) const;

  friend bool operator==(const DgQuiver&, const DgQuiver&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<int, PathSum> differential_;
};

/// Concatenation "later after earlier" (earlier applied first); empty when not composable.
std::optional<Path> compose(const Path& later, const Path& earlier);

enum class ViolationKind {
  DanglingEndpoint,
  PositiveDegree,
  DifferentialNotParallel,
  DifferentialDegree,
  DifferentialShortTerm,
  DifferentialBrokenPath,
  DSquaredNonzero,
};

struct Violation {
  ViolationKind kind;
  std::string arrow;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
};

std::string to_string(ViolationKind kind);

ValidationReport validate(const DgQuiver& q);

/// Graded Leibniz extension d(uv) = (du)v + (-1)^{|u|} u(dv), terms collected.
PathSum leibniz(const DgQuiver& q, const Path& p);
PathSum leibniz(const DgQuiver& q, const PathSum& s);

struct DSquaredCheck {
  bool passed = true;
  std::optional<std::string> witness;
};

DSquaredCheck check_d_squared(const DgQuiver& q);

/// All paths from -> to of the given degree and length <= max_len, ordered
/// lexicographically by their arrow ids in application order.
std::vector<Path> enumerate_paths(const DgQuiver& q, int from, int to, int degree, std::size_t max_len);

/// A directed cycle (arrow indices in order) if one exists.
std::optional<std::vector<int>> find_cycle(const DgQuiver& q);
bool is_graph_acyclic(const DgQuiver& q);

DgQuiver subquiver_by_degree(const DgQuiver& q, int degree);

/// Same quiver with vertices and arrows renamed through the given maps
/// (missing entries keep their name).
DgQuiver relabeled(const DgQuiver& q, const std::map<std::string, std::string>& vertex_names,
                   const std::map<std::string, std::string>& arrow_names);

}  // namespace dgq
