// Acceptance suite: each criterion prints exactly one PASS/FAIL line; the
// process exits nonzero if any criterion fails.
#include <algorithm>
#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "regflow/io.hpp"
#include "regflow/reference.hpp"
#include "testutil.hpp"

using namespace regflow;
using testutil::graph_instance;
using testutil::unit_capacity_instance;

namespace {

struct Criterion {
  int id;
  std::string name;
  bool pass = true;
  std::string detail{};

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
  void note(const std::string& text) {
    if (pass) detail = text;
  }
};

struct Run {
  Instance instance;
  int num_vertices;
  MaxFlowResult generic;
  ReferenceResult reference;
};

RatVector replay_prefix(const AugmentationTrace& trace, int steps, int n) {
  RatVector f(n, Rational(0));
  for (int k = 0; k < steps; ++k)
    for (const auto& [index, sign] : trace.steps[k].path.support())
      f[index] += sign > 0 ? trace.steps[k].epsilon : -trace.steps[k].epsilon;
  return f;
}

std::string plural(std::size_t k, const char* noun) {
  return std::to_string(k) + " " + noun + (k == 1 ? "" : "s");
}

}  // namespace

int main() {
  auto started = std::chrono::steady_clock::now();
  Criterion c1{1, "oracle equivalence: generic max_flow == exact LP on randomized digraphs"};
  Criterion c2{2, "augmentation bounds: <= |E|^2 always, <= |V||E| for graphic runs"};
  Criterion c3{3, "monotone path lengths in every trace"};
  Criterion c4{4, "path algebra: properties (a)-(d) and the length inequalities"};
  Criterion c5{5, "shortest-path lattice: P^f conformal and closed under the pair operation"};
  Criterion c6{6, "conformal decomposition of random integral members"};
  Criterion c7{7, "integral flows under integer capacities"};
  Criterion c8{8, "graphic oracle agreement with the generic oracle"};
  Criterion c9{9, "known objectives on the diamond and the triangle with a direct arc"};
  Criterion c10{10, "byte-identical traces on repeated runs"};

  // ---- the randomized pool: 200 digraphs, solved in both modes -------------
  std::mt19937 rng(20240613);
  std::vector<Run> runs;
  std::size_t unbounded_runs = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto rd = testutil::random_digraph(rng, 7, 12, 10);
    for (SpaceMode mode : {SpaceMode::Kernel, SpaceMode::RowSpace}) {
      Instance inst = graph_instance(rd.graph, mode, rd.capacities);
      MaxFlowResult res = max_flow(inst, OracleKind::Generic);
      ReferenceResult ref = lp_reference_solve(inst);
      if (res.unbounded != ref.unbounded)
        c1.fail("solver and LP disagree on unboundedness (trial " + std::to_string(trial) + ")");
      if (res.unbounded) ++unbounded_runs;
      if (!res.unbounded && !ref.unbounded && res.objective != ref.value)
        c1.fail("objective mismatch: solver " + to_string(res.objective) + " vs LP " +
                to_string(ref.value) + " (trial " + std::to_string(trial) + ")");
      runs.push_back({std::move(inst), rd.graph.num_vertices, std::move(res), std::move(ref)});
    }
  }
  if (c1.pass)
    c1.note(plural(runs.size(), "run") + " (" + std::to_string(unbounded_runs) +
            " unbounded coflow agreements), all objectives exactly equal");

  // ---- criteria 2, 3, 7: bounds, monotonicity, integrality ----------------
  long max_augmentations = 0;
  for (const Run& run : runs) {
    if (run.generic.unbounded) continue;
    int n = run.instance.ground_size();
    long count = static_cast<long>(run.generic.trace.steps.size());
    max_augmentations = std::max(max_augmentations, count);
    if (count > static_cast<long>(n) * n)
      c2.fail("a run used " + std::to_string(count) + " > |E|^2 augmentations");

    int prev_len = 0;
    for (const TraceStep& s : run.generic.trace.steps) {
      if (s.path_length < prev_len)
        c3.fail("length dropped from " + std::to_string(prev_len) + " to " +
                std::to_string(s.path_length));
      prev_len = s.path_length;
    }

    RatVector f(n, Rational(0));
    for (const TraceStep& s : run.generic.trace.steps) {
      for (const auto& [index, sign] : s.path.support())
        f[index] += sign > 0 ? s.epsilon : -s.epsilon;
      for (const Rational& v : f)
        if (!is_integer(v)) c7.fail("non-integral intermediate flow entry " + to_string(v));
    }
    if (!(f == run.generic.flow.values)) c7.fail("trace replay does not reproduce the final flow");
  }
  if (c3.pass) c3.note("all traces nondecreasing");
  if (c7.pass) c7.note("every intermediate flow integral across all traces");

  // ---- criterion 8 + graphic side of criterion 2 ---------------------------
  long max_graphic = 0;
  std::size_t graphic_runs = 0;
  for (const Run& run : runs) {
    if (run.instance.space().mode() != SpaceMode::Kernel) continue;
    MaxFlowResult graphic = max_flow(run.instance, OracleKind::Graphic);
    ++graphic_runs;
    if (graphic.unbounded != run.generic.unbounded) {
      c8.fail("graphic oracle disagrees on unboundedness");
      continue;
    }
    if (graphic.unbounded) continue;
    if (graphic.objective != run.generic.objective)
      c8.fail("objectives differ: graphic " + to_string(graphic.objective) + " vs generic " +
              to_string(run.generic.objective));
    if (graphic.trace.steps.size() != run.generic.trace.steps.size())
      c8.fail("iteration counts differ");
    else
      for (std::size_t i = 0; i < graphic.trace.steps.size(); ++i)
        if (graphic.trace.steps[i].path_length != run.generic.trace.steps[i].path_length)
          c8.fail("lengths differ at iteration " + std::to_string(i + 1));
    long count = static_cast<long>(graphic.trace.steps.size());
    max_graphic = std::max(max_graphic, count);
    if (count > static_cast<long>(run.num_vertices) * run.instance.ground_size())
      c2.fail("a graphic run used " + std::to_string(count) + " > |V||E| augmentations");
  }
  if (c8.pass)
    c8.note(plural(graphic_runs, "graphic run") + ", equal lengths at every iteration");
  if (c2.pass)
    c2.note("max " + std::to_string(max_augmentations) + " augmentations overall, max " +
            std::to_string(max_graphic) + " on graphic runs");

  // ---- criterion 4: path algebra, exhaustive over r-path pairs -------------
  {
    std::vector<Instance> spaces;
    spaces.push_back(unit_capacity_instance(testutil::diamond(), SpaceMode::Kernel));
    spaces.push_back(unit_capacity_instance(testutil::diamond(), SpaceMode::RowSpace));
    spaces.push_back(unit_capacity_instance(testutil::triangle_direct(), SpaceMode::Kernel));
    spaces.push_back(unit_capacity_instance(testutil::triangle_direct(), SpaceMode::RowSpace));
    // a denser 5-vertex graph: 11 arcs + r = 12 ground elements
    testutil::TestGraph dense{5,
                              0,
                              4,
                              {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4},
                               {0, 3}, {1, 4}, {3, 1}, {4, 0}}};
    spaces.push_back(graph_instance(dense, SpaceMode::Kernel,
                                    std::vector<Rational>(11, Rational(1))));
    spaces.push_back(graph_instance(dense, SpaceMode::RowSpace,
                                    std::vector<Rational>(11, Rational(1))));

    std::size_t pairs = 0;
    for (const Instance& inst : spaces) {
      const RegularSpace& space = inst.space();
      int r = inst.r();
      std::vector<RPath> paths;
      for (const SignedVector& c : space.circuits()) {
        int sr = c.sign_at(r);
        if (sr != 0) paths.emplace_back(sr == 1 ? c : c.negated(), r);
      }
      for (const RPath& p : paths) {
        for (const RPath& q : paths) {
          ++pairs;
          PathPair pair = conformal_pair(space, p, q);
          if (!check_pair_properties(p, q, pair).all_pass())
            c4.fail("properties (a)-(d) failed for a pair");
          LengthInequality li = length_inequality(space, p, q);
          if (li.lhs > li.rhs) c4.fail("length inequality violated");
          bool conformal = are_conformal(p, q);
          if (!conformal && !li.strict)
            c4.fail("nonconformal pair without a strict inequality");
          RatVector sum = p.vec().to_rational();
          for (const auto& [index, sign] : q.vec().support()) sum[index] += sign;
          if ((one_norm(sum) == li.rhs) != conformal)
            c4.fail("|P+Q| = |P|+|Q| does not characterize conformity");
        }
      }
    }
    if (c4.pass) c4.note(plural(pairs, "ordered pair") + " across 6 spaces, all checks clean");
  }

  // ---- criterion 5: P^f conformal lattice over >= 50 solver runs -----------
  {
    std::size_t inspected = 0, iterations = 0;
    std::size_t kernel_runs = 0, rowspace_runs = 0;
    for (std::size_t trial = 0; inspected < 50; ++trial) {
      SpaceMode mode = trial % 3 == 2 ? SpaceMode::RowSpace : SpaceMode::Kernel;
      auto rd = testutil::random_flow_digraph(rng, 7, 6, 10,
                                              /*reversed_chain=*/mode == SpaceMode::RowSpace);
      Instance instance = graph_instance(rd.graph, mode, rd.capacities);
      MaxFlowResult solved = max_flow(instance, OracleKind::Generic);
      if (solved.unbounded || solved.trace.steps.empty()) continue;
      ++inspected;
      ++(mode == SpaceMode::Kernel ? kernel_runs : rowspace_runs);
      int n = instance.ground_size();
      int steps = static_cast<int>(solved.trace.steps.size());
      for (int k = 0; k < steps; ++k) {
        ++iterations;
        FlowState f{replay_prefix(solved.trace, k, n)};
        std::vector<RPath> shortest = shortest_augmenting_set(f, instance);
        if (shortest.empty()) {
          c5.fail("P^f empty although an augmentation followed");
          continue;
        }
        auto member = [&](const RPath& candidate) {
          for (const RPath& m : shortest)
            if (m.vec() == candidate.vec()) return true;
          return false;
        };
        for (std::size_t i = 0; i < shortest.size() && c5.pass; ++i) {
          for (std::size_t j = i; j < shortest.size(); ++j) {
            if (!are_conformal(shortest[i], shortest[j])) {
              c5.fail("nonconformal pair inside P^f");
              break;
            }
            PathPair pair = conformal_pair(instance.space(), shortest[i], shortest[j]);
            if (!member(pair.first) || !member(pair.second)) {
              c5.fail("conformal pair left P^f");
              break;
            }
          }
        }
      }
    }
    if (c5.pass)
      c5.note(plural(inspected, "run") + " (" + std::to_string(kernel_runs) + " flow, " +
              std::to_string(rowspace_runs) + " coflow), " + plural(iterations, "iteration") +
              " inspected, closure holds");
  }

  // ---- criterion 6: conformal decomposition of random members --------------
  {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::size_t samples = 0, nonzero = 0;
    for (std::size_t i = 0; samples < 500; i = (i + 1) % runs.size()) {
      const RegularSpace& space = runs[i].instance.space();
      if (space.dimension() == 0) continue;
      ++samples;
      int n = space.ground_size();
      RatVector x(n, Rational(0));
      for (const RatVector& b : space.basis()) {
        int c = coeff(rng);
        if (c == 0) continue;
        for (int j = 0; j < n; ++j)
          if (b[j] != 0) x[j] += Rational(c) * b[j];
      }
      auto terms = space.conformal_decomposition(x);
      if (!(decomposition_sum(terms, n) == x)) c6.fail("decomposition sum differs from x");
      Rational norm = one_norm(x);
      if (Rational(decomposition_size(terms)) > norm)
        c6.fail("summand count exceeds |x|_1");
      bool any = false;
      for (const DecompTerm& t : terms) {
        any = true;
        for (const auto& [index, sign] : t.vec.support())
          if (!(Rational(sign) * x[index] > 0)) c6.fail("a summand does not conform to x");
      }
      if (any) ++nonzero;
    }
    if (c6.pass)
      c6.note(plural(samples, "sample") + " (" + std::to_string(nonzero) +
              " nonzero), all decompositions exact and conforming");
  }

  // ---- criterion 9: known values -------------------------------------------
  {
    MaxFlowResult diamond =
        max_flow(unit_capacity_instance(testutil::diamond(), SpaceMode::Kernel),
                 OracleKind::Generic);
    if (diamond.objective != 2)
      c9.fail("diamond objective " + to_string(diamond.objective) + " != 2");
    MaxFlowResult tri =
        max_flow(unit_capacity_instance(testutil::triangle_direct(), SpaceMode::Kernel),
                 OracleKind::Generic);
    if (tri.objective != 2) c9.fail("triangle objective " + to_string(tri.objective) + " != 2");
    if (tri.trace.steps.size() != 2 || tri.trace.steps[0].path_length != 2 ||
        tri.trace.steps[1].path_length != 3)
      c9.fail("triangle trace lengths are not (2, 3)");
    if (c9.pass) c9.note("diamond = 2, triangle = 2 with trace lengths (2, 3)");
  }

  // ---- criterion 10: determinism -------------------------------------------
  {
    std::size_t checked = 0;
    for (std::size_t i = 0; i < runs.size() && checked < 25; i += 17) {
      const Run& run = runs[i];
      if (run.generic.unbounded) continue;
      ++checked;
      MaxFlowResult again = max_flow(run.instance, OracleKind::Generic);
      if (serialize_trace(again.trace) != serialize_trace(run.generic.trace))
        c10.fail("repeated run produced a different trace");
    }
    if (c10.pass) c10.note(plural(checked, "repeated run") + ", traces byte-identical");
  }

  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();

  bool all_pass = true;
  for (const Criterion* c : {&c1, &c2, &c3, &c4, &c5, &c6, &c7, &c8, &c9, &c10}) {
    all_pass = all_pass && c->pass;
    std::cout << (c->pass ? "PASS" : "FAIL") << " criterion " << c->id << ": " << c->name;
    if (!c->detail.empty()) std::cout << " [" << c->detail << "]";
    std::cout << "\n";
  }
  std::cout << (all_pass ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED") << " ("
            << elapsed / 1000.0 << " s)\n";
  return all_pass ? 0 : 1;
}
