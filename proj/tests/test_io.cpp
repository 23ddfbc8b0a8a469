#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "regflow/io.hpp"
#include "regflow/reference.hpp"
#include "testutil.hpp"

using namespace regflow;

namespace {

const char* kTriangleInst = R"(# directed triangle
mode kernel
size 3 3
r 3
matrix
-1 0 1
1 -1 0
0 1 -1
capacities
1 1
)";

const char* kDiamondDimacs = R"(c diamond graph
p max 4 5
n 1 s
n 4 t
a 1 2 1
a 1 3 1
a 2 3 1
a 2 4 1
a 3 4 1
)";

}  // namespace

TEST_CASE("parse_instance happy path") {
  Instance inst = parse_instance(kTriangleInst);
  CHECK(inst.ground_size() == 3);
  CHECK(inst.r() == 2);
  CHECK(inst.space().mode() == SpaceMode::Kernel);
  CHECK(inst.space().dimension() == 1);
  CHECK(inst.capacity(0) == 1);
  CHECK(inst.capacity(1) == 1);
  CHECK_FALSE(inst.has_graph());
}

TEST_CASE("parse_instance keeps rational capacities exact") {
  std::string text = "mode rowspace\nsize 1 2\nr 1\nmatrix\n1 -1\ncapacities\n1/2\n";
  Instance inst = parse_instance(text);
  CHECK(inst.capacity(1) == Rational(1, 2));
}

TEST_CASE("parse_instance error reporting carries line numbers") {
  auto expect_line = [](const std::string& text, int line) {
    try {
      parse_instance(text);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
    }
  };
  // bad matrix entry, line 5
  expect_line("mode kernel\nsize 1 2\nr 1\nmatrix\n2 0\ncapacities\n1\n", 5);
  // wrong entry count, line 5
  expect_line("mode kernel\nsize 1 2\nr 1\nmatrix\n1\ncapacities\n1\n", 5);
  // negative capacity, line 7
  expect_line("mode kernel\nsize 1 2\nr 1\nmatrix\n1 -1\ncapacities\n-1\n", 7);
  // r out of range, line 3
  expect_line("mode kernel\nsize 1 2\nr 4\nmatrix\n1 -1\ncapacities\n1\n", 3);
  // bad mode, line 1
  expect_line("mode sideways\nsize 1 2\nr 1\nmatrix\n1 -1\ncapacities\n1\n", 1);
  CHECK_THROWS_AS(parse_instance("mode kernel\nsize 1 2\nr 1\nmatrix\n1 -1\ncapacities\n"),
                  ParseError);  // missing capacity
}

TEST_CASE("instance serialization round-trips") {
  Instance first = parse_instance(kTriangleInst);
  std::string canonical = serialize_instance(first);
  Instance second = parse_instance(canonical);
  CHECK(serialize_instance(second) == canonical);
  CHECK(second.r() == first.r());
  CHECK(second.space().mode() == first.space().mode());
  CHECK(second.space().generator() == first.space().generator());
}

TEST_CASE("parse_dimacs_digraph appends the return arc") {
  Instance inst = parse_dimacs_digraph(kDiamondDimacs, SpaceMode::Kernel);
  CHECK(inst.ground_size() == 6);  // 5 arcs + r
  CHECK(inst.r() == 5);
  REQUIRE(inst.has_graph());
  CHECK(inst.graph().source == 0);
  CHECK(inst.graph().sink == 3);
  CHECK(inst.graph().arcs.back() == std::pair<int, int>{3, 0});
  CHECK(inst.space().dimension() == 3);  // cycle space of a connected graph

  Instance rows = parse_dimacs_digraph(kDiamondDimacs, SpaceMode::RowSpace);
  CHECK(rows.ground_size() == 6);
  CHECK(rows.space().dimension() == 3);  // rank = |V| - components
}

TEST_CASE("parse_dimacs_digraph validation") {
  CHECK_THROWS_AS(parse_dimacs_digraph("p max 2 1\nn 1 s\na 1 2 1\n", SpaceMode::Kernel),
                  ParseError);  // no sink
  CHECK_THROWS_AS(parse_dimacs_digraph("p max 2 0\np max 2 0\nn 1 s\nn 2 t\n", SpaceMode::Kernel),
                  ParseError);  // duplicate problem line
  CHECK_THROWS_AS(
      parse_dimacs_digraph("p max 2 1\nn 1 s\nn 2 t\na 1 3 1\n", SpaceMode::Kernel),
      ParseError);  // dangling endpoint
  CHECK_THROWS_AS(
      parse_dimacs_digraph("p max 2 1\nn 1 s\nn 2 t\na 1 1 1\n", SpaceMode::Kernel),
      ParseError);  // self-loop
  CHECK_THROWS_AS(parse_dimacs_digraph("p max 2 2\nn 1 s\nn 2 t\na 1 2 1\n", SpaceMode::Kernel),
                  ParseError);  // arc count mismatch
  CHECK_THROWS_AS(parse_dimacs_digraph("p max 2 1\nn 1 s\nn 1 t\na 1 2 1\n", SpaceMode::Kernel),
                  ParseError);  // s == t
  CHECK_THROWS_AS(parse_dimacs_digraph("p max 2 1\nn 1 s\nn 2 t\na 1 2 -1\n", SpaceMode::Kernel),
                  ParseError);  // negative capacity
}

TEST_CASE("parse_any sniffs the format") {
  CHECK(parse_any(kTriangleInst, SpaceMode::Kernel).ground_size() == 3);
  CHECK(parse_any(kDiamondDimacs, SpaceMode::RowSpace).space().mode() == SpaceMode::RowSpace);
  CHECK_THROWS_AS(parse_any("hello world\n", SpaceMode::Kernel), ParseError);
  CHECK_THROWS_AS(parse_any("", SpaceMode::Kernel), ParseError);
  CHECK_THROWS_AS(parse_any("# only comments\n", SpaceMode::Kernel), ParseError);
}

TEST_CASE("trace serialization round-trips losslessly") {
  Instance inst = parse_dimacs_digraph(kDiamondDimacs, SpaceMode::Kernel);
  MaxFlowResult res = max_flow(inst, OracleKind::Generic);
  REQUIRE(res.trace.steps.size() == 2);

  std::string text = serialize_trace(res.trace);
  auto parsed = parse_trace(text);
  REQUIRE(parsed.size() == res.trace.steps.size());
  AugmentationTrace rebuilt;
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    const TraceStep& step = res.trace.steps[i];
    CHECK(parsed[i].iteration == step.iteration);
    CHECK(parsed[i].epsilon == step.epsilon);
    CHECK(parsed[i].objective == step.objective_after);
    CHECK(parsed[i].length == step.path_length);
    CHECK(parsed[i].support == step.path.support());
    rebuilt.steps.push_back({parsed[i].iteration,
                             SignedVector(inst.ground_size(), parsed[i].support),
                             parsed[i].epsilon, parsed[i].objective, parsed[i].length});
  }
  CHECK(serialize_trace(rebuilt) == text);
}

TEST_CASE("trace parser rejects malformed lines") {
  CHECK_THROWS_AS(parse_trace("1 1 1 3\n"), ParseError);            // no signed support
  CHECK_THROWS_AS(parse_trace("1 +1 +2 1 1\n"), ParseError);        // missing field
  CHECK_THROWS_AS(parse_trace("1 +1 +2 1 1 3\n"), ParseError);      // length mismatch
  CHECK_THROWS_AS(parse_trace("x +1 +2 1 1 2\n"), ParseError);      // bad iteration
  CHECK_THROWS_AS(parse_trace("1 +0 1 1 1\n"), ParseError);         // index must be >= 1
  CHECK(parse_trace("# comment only\n").empty());
}

TEST_CASE("identical runs produce byte-identical traces") {
  Instance inst = parse_dimacs_digraph(kDiamondDimacs, SpaceMode::Kernel);
  std::string first = serialize_trace(max_flow(inst, OracleKind::Generic).trace);
  Instance again = parse_dimacs_digraph(kDiamondDimacs, SpaceMode::Kernel);
  std::string second = serialize_trace(max_flow(again, OracleKind::Generic).trace);
  CHECK(first == second);
}

TEST_CASE("solve and reference agree end to end through the parsers") {
  for (SpaceMode mode : {SpaceMode::Kernel, SpaceMode::RowSpace}) {
    Instance inst = parse_dimacs_digraph(kDiamondDimacs, mode);
    MaxFlowResult res = max_flow(inst, OracleKind::Generic);
    ReferenceResult ref = lp_reference_solve(inst);
    REQUIRE_FALSE(res.unbounded);
    REQUIRE_FALSE(ref.unbounded);
    CHECK(res.objective == ref.value);
  }
}
