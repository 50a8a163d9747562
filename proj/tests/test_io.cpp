#include <doctest.h>

#include "dgq/errors.hpp"
#include "dgq/io.hpp"
#include "fixtures.hpp"

using namespace dgq;

TEST_CASE("round trip through the canonical form") {
  for (auto name : {"q_rel", "q_tildeA", "q_a2", "q_b0", "q_b1"}) {
    CAPTURE(name);
    auto q = fixture(name);
    auto text = serialize_quiver(q);
    auto again = parse_quiver(text);
    CHECK(again == q);
    CHECK(serialize_quiver(again) == text);
  }
}

TEST_CASE("differential syntax") {
  auto q = parse_quiver(
      "dgquiver 1\n"
      "vertex 1 2 3   # three at once\n"
      "arrow a 1 2 0\narrow b 2 3 0\narrow c 1 2 0\narrow g 1 3 -1\n"
      "d g = 1/2 a b, -3 c b\n");
  const PathSum* dg = q.differential(q.arrow("g"));
  REQUIRE(dg != nullptr);
  CHECK(dg->size() == 2);
  CHECK(dg->terms().at(q.path_from_ids({"a", "b"})) == Rational(1, 2));
  CHECK(validate(q).has(ViolationKind::DifferentialShortTerm) == false);
}

TEST_CASE("parse errors") {
  auto line_of = [](const std::string& text) {
    try {
      parse_quiver(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("vertex 1\n") == 1);
  CHECK(line_of("dgquiver 2\n") == 1);
  CHECK(line_of("dgquiver 1\nvertex 1 2\narrow a 1 2 0\narrow g 1 2 -1\nd g = 1 a zz\n") == 5);
  CHECK(line_of("dgquiver 1\nvertex 1\narrow a 1 1 x\n") == 3);
  CHECK(line_of("dgquiver 1\nvertex 1\nfoo\n") == 3);
  CHECK(line_of("dgquiver 1\nvertex 1 1\n") == 2);
  CHECK(line_of("dgquiver 1\nvertex 1 2\narrow a 1 2 0\narrow g 1 2 -1\nd g = 1/0 a\n") == 5);
  CHECK(line_of("dgquiver 1\n# nothing else\n") == -1);
}

TEST_CASE("DOT output") {
  auto dot = to_dot(fixture("q_rel"));
  auto count = [&](const std::string& needle) {
    std::size_t n = 0, pos = 0;
    while ((pos = dot.find(needle, pos)) != std::string::npos) ++n, ++pos;
    return n;
  };
  CHECK(count(" -> ") == 3);
  CHECK(count("style=dashed") == 1);
  CHECK(count(";\n") == 6);

  dot = to_dot(fixture("q_tildeA"));
  CHECK(count(" -> ") == 12);
  CHECK(count("style=dashed") == 4);
  CHECK(to_dot(fixture("q_tildeA")) == dot);
  CHECK(to_dot(fixture("q_tildeA"), DotStyle::Dotted).find("style=dotted") != std::string::npos);

  dot = to_dot(DgQuiver{});
  CHECK(dot == "digraph dgquiver {\n}\n");
}
