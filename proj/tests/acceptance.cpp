#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "dgq/io.hpp"
#include "dgq/resolution.hpp"
#include "dgq/silting.hpp"
#include "fixtures.hpp"
#include "random_quiver.hpp"
#include "random_semifree.hpp"

using namespace dgq;

namespace {

constexpr int corpus_size = 100;
constexpr int corpus_seed = 20240517;
constexpr int serre_pairs = 50;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      pass = false;
      detail << what;
    }
  }
};

std::vector<std::string> admissible(const DgQuiver& q, int d) {
  std::vector<std::string> out;
  for (const auto& v : q.vertices())
    if (mutation_check(q, q.vertex(v), d).admissible) out.push_back(v);
  return out;
}

std::vector<DgQuiver> corpus() {
  std::mt19937 rng(corpus_seed);
  std::vector<DgQuiver> out;
  for (int k = 0; k < corpus_size; ++k) out.push_back(testing::random_quiver(rng));
  return out;
}

using ArrowCounts = std::map<std::tuple<int, std::string, std::string>, long>;

ArrowCounts arrow_counts(const DgQuiver& q) {
  ArrowCounts out;
  for (const auto& a : q.arrows()) ++out[{a.degree, a.source_label, a.target_label}];
  return out;
}

void criterion1(Outcome& o) {
  auto q = fixture("q_rel");
  o.expect(global_dimension(q) == 2, "gl.dim != 2");
  o.expect(admissible(q, 2) == std::vector<std::string>{"1", "2"}, "admissible set != {1, 2}");
}

void criterion2(Outcome& o) {
  auto q = fixture("q_tildeA");
  o.expect(admissible(q, 2) == std::vector<std::string>{"0", "1"}, "admissible set != {0, 1}");
  auto a = algebra_from_quiver(q);
  const Index expected[] = {1, 2, 4, 6};
  for (int j = 0; j < 4; ++j)
    o.expect(h0_dimension(*a, 0, j) == expected[j], "H0 dimension at (0," + std::to_string(j) + ")");
}

void criterion3(Outcome& o) {
  auto s = seed(algebra_from_quiver(fixture("q_tildeA")));
  for (auto [v, name] : {std::pair{0, "q_b0"}, std::pair{1, "q_b1"}}) {
    auto mm = minimal_model_quiver(endomorphism_algebra(mutate(s, v)), 2);
    o.expect(arrow_counts(mm.quiver) == arrow_counts(fixture(name)), std::string(name) + " arrow counts differ");
  }
}

void criterion4(Outcome& o, const std::vector<DgQuiver>& qs) {
  long checked = 0;
  for (std::size_t k = 0; k < qs.size(); ++k) {
    auto a = algebra_from_quiver(qs[k]);
    const int nv = a->vertex_count();
    for (int i = 0; i < nv; ++i)
      for (int j = 0; j < nv; ++j)
        for (int n = 0; n <= 4; ++n, ++checked)
          if (ext_engine(a, i, j, n) != ext_simples(qs[k], i, j, n))
            o.expect(false, "quiver " + std::to_string(k) + " (" + std::to_string(i) + "," + std::to_string(j) +
                                "," + std::to_string(n) + ")");
  }
  o.detail << (o.pass ? "" : "; ") << qs.size() << " quivers, " << checked << " entries";
}

void criterion5(Outcome& o, const std::vector<DgQuiver>& qs) {
  long mutations = 0;
  for (std::size_t k = 0; k < qs.size(); ++k) {
    const auto& q = qs[k];
    const int d = std::max(1, global_dimension(q));
    auto s = seed(algebra_from_quiver(q));
    for (int i = 0; i < s.size(); ++i, ++mutations) {
      auto m = mutate(s, i);
      const std::string where = "quiver " + std::to_string(k) + " vertex " + q.vertices()[i];
      o.expect(is_d_silting(m, d + 1), where + " not (d+1)-silting");
      const bool silting = is_d_silting(m, d);
      const auto verdict = mutation_check(q, i, d);
      if (verdict.reason != VerdictReason::LoopPresent) o.expect(verdict.admissible == silting, where + " criterion");
      o.expect(fine_mutation_check(s, i, d) == silting, where + " fine check");
    }
  }
  o.detail << (o.pass ? "" : "; ") << mutations << " mutations";
}

void criterion6(Outcome& o) {
  std::mt19937 rng(corpus_seed + 6);
  for (const char* name : {"q_a2", "q_rel", "q_tildeA"}) {
    auto a = algebra_from_quiver(fixture(name));
    for (int k = 0; k < serre_pairs; ++k) {
      auto x = testing::random_semifree(rng, a);
      auto y = testing::random_semifree(rng, a);
      auto lhs = nonzero_cohomology(hom_complex(x, y).complex);
      std::map<int, Index> rhs;
      for (const auto& [n, dim] : nonzero_cohomology(hom_complex(y, serre_twist(x)).complex)) rhs[-n] = dim;
      o.expect(lhs == rhs, std::string(name) + " pair " + std::to_string(k));
    }
  }
  o.detail << (o.pass ? "" : "; ") << serre_pairs << " pairs per algebra";
}

void criterion7(Outcome& o) {
  auto affine = seed(algebra_from_quiver(fixture("q_tildeA")));
  o.expect(dri_window(affine, 2, 3).ok, "seed window");
  o.expect(dri_window(mutate(affine, 0), 2, 2).ok, "mutated window");
  o.expect(!dri_window(seed(algebra_from_quiver(fixture("q_rel"))), 2, 1).ok, "relation algebra window");
}

void criterion8(Outcome& o) {
  auto cert = nu_obstruction_cycle(fixture("q_b0"), 2);
  o.expect(cert && cert->arrows == std::vector<std::string>{"l"}, "no loop certificate on B0");
  o.expect(!nu_obstruction_cycle(fixture("q_tildeA"), 2), "certificate on the affine quiver");
}

void criterion9(Outcome& o) {
  std::vector<SiltingPresentation> all;
  for (const char* name : {"q_a2", "q_rel", "q_tildeA"}) all.push_back(seed(algebra_from_quiver(fixture(name))));
  all.push_back(mutate(all[2], 0));
  all.push_back(mutate(all[2], 1));
  for (const auto& s : all) o.expect(silt_order_check(s, s), "not reflexive");
  int strict = 0;
  for (const char* name : {"q_rel", "q_a2"}) {
    auto q = fixture(name);
    auto s = seed(algebra_from_quiver(q));
    const int d = std::max(1, global_dimension(q));
    for (int i = 0; i < s.size(); ++i) {
      if (!mutation_check(q, i, d).admissible) continue;
      auto m = mutate(s, i);
      o.expect(silt_order_check(s, m), std::string(name) + " seed >= mutant fails");
      o.expect(!silt_order_check(m, s), std::string(name) + " mutant >= seed");
      ++strict;
    }
  }
  o.detail << (o.pass ? "" : "; ") << strict << " strict descents";
}

}  // namespace

int main() {
  const auto qs = corpus();
  const std::vector<std::function<void(Outcome&)>> criteria = {
      criterion1, criterion2, criterion3, [&](Outcome& o) { criterion4(o, qs); },
      [&](Outcome& o) { criterion5(o, qs); }, criterion6, criterion7, criterion8, criterion9};
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[k](o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << k + 1 << ": " << (o.pass ? "PASS" : "FAIL");
    if (!o.detail.str().empty()) std::cout << " (" << o.detail.str() << ")";
    std::cout << " [" << seconds << "s]\n";
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
