#include "regflow/solver.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace regflow {
namespace {

bool signed_vector_augments(const SignedVector& v, int r, const RatVector& f,
                            const Instance& inst) {
  for (const auto& [index, sign] : v.support()) {
    if (index == r) continue;
    if (sign > 0 ? !(f[index] < inst.capacity(index)) : !(f[index] > 0)) return false;
  }
  return true;
}

void require_graph(const Instance& inst, OracleKind kind) {
  if (!inst.has_graph())
    throw ValidationError("the specialized oracle needs graph metadata (DIMACS input)");
  if (kind == OracleKind::Graphic && inst.space().mode() != SpaceMode::Kernel)
    throw ValidationError("graphic oracle requires a kernel-mode (flow) instance");
  if (kind == OracleKind::Cographic && inst.space().mode() != SpaceMode::RowSpace)
    throw ValidationError("cographic oracle requires a rowspace-mode (coflow) instance");
}

}  // namespace

TuMatrix incidence_matrix(int num_vertices, const std::vector<std::pair<int, int>>& arcs) {
  if (num_vertices < 1) throw ValidationError("incidence matrix: no vertices");
  if (arcs.empty()) throw ValidationError("incidence matrix: no arcs");
  std::vector<int> entries(static_cast<std::size_t>(num_vertices) * arcs.size(), 0);
  for (std::size_t j = 0; j < arcs.size(); ++j) {
    auto [tail, head] = arcs[j];
    if (tail < 0 || tail >= num_vertices || head < 0 || head >= num_vertices)
      throw ValidationError("incidence matrix: arc " + std::to_string(j + 1) +
                            " has a dangling endpoint");
    if (tail == head)
      throw ValidationError("incidence matrix: arc " + std::to_string(j + 1) + " is a self-loop");
    entries[static_cast<std::size_t>(tail) * arcs.size() + j] = -1;
    entries[static_cast<std::size_t>(head) * arcs.size() + j] = 1;
  }
  return TuMatrix(num_vertices, static_cast<int>(arcs.size()), entries);
}

Instance::Instance(std::shared_ptr<const RegularSpace> space, int r,
                   std::vector<Rational> capacities, std::optional<GraphMeta> graph)
    : space_(std::move(space)), r_(r), capacities_(std::move(capacities)), graph_(std::move(graph)) {
  if (!space_) throw ValidationError("instance needs a space");
  int n = space_->ground_size();
  if (r_ < 0 || r_ >= n) throw ValidationError("instance: r out of range");
  if (static_cast<int>(capacities_.size()) != n - 1)
    throw ValidationError("instance: expected " + std::to_string(n - 1) + " capacities, got " +
                          std::to_string(capacities_.size()));
  for (const Rational& c : capacities_)
    if (c < 0) throw ValidationError("instance: negative capacity " + to_string(c));
  if (graph_) {
    if (static_cast<int>(graph_->arcs.size()) != n)
      throw ValidationError("instance: graph metadata arc count differs from ground size");
    if (graph_->source < 0 || graph_->source >= graph_->num_vertices || graph_->sink < 0 ||
        graph_->sink >= graph_->num_vertices || graph_->source == graph_->sink)
      throw ValidationError("instance: bad source/sink in graph metadata");
    if (!(incidence_matrix(graph_->num_vertices, graph_->arcs) == space_->generator()))
      throw ValidationError("instance: graph metadata is inconsistent with the generator matrix");
  }
}

const Rational& Instance::capacity(int j) const {
  if (j == r_ || j < 0 || j >= ground_size())
    throw ValidationError("capacity lookup for invalid index");
  return capacities_[j < r_ ? j : j - 1];
}

const GraphMeta& Instance::graph() const {
  if (!graph_) throw ValidationError("instance carries no graph metadata");
  return *graph_;
}

bool is_feasible(const RatVector& f, const Instance& inst) {
  if (static_cast<int>(f.size()) != inst.ground_size())
    throw ValidationError("is_feasible: dimension mismatch");
  for (int j = 0; j < inst.ground_size(); ++j) {
    if (j == inst.r()) continue;
    if (f[j] < 0 || f[j] > inst.capacity(j)) return false;
  }
  return inst.space().contains(f);
}

bool is_augmenting(const RPath& p, const FlowState& f, const Instance& inst) {
  if (p.r() != inst.r()) throw ValidationError("is_augmenting: path has a different r");
  return signed_vector_augments(p.vec(), inst.r(), f.values, inst);
}

StepSize max_step(const RPath& p, const FlowState& f, const Instance& inst) {
  if (!is_augmenting(p, f, inst))
    throw ValidationError("max_step: path is not augmenting for this flow");
  StepSize step;
  step.unbounded = true;
  for (const auto& [index, sign] : p.vec().support()) {
    if (index == inst.r()) continue;
    Rational room = sign > 0 ? Rational(inst.capacity(index) - f.values[index])
                             : f.values[index];
    if (step.unbounded || room < step.value) {
      step.unbounded = false;
      step.value = room;
    }
  }
  return step;
}

std::optional<RPath> shortest_augmenting_path_generic(const FlowState& f, const Instance& inst) {
  int r = inst.r();
  std::optional<SignedVector> best;
  for (const SignedVector& c : inst.space().circuits()) {
    int sr = c.sign_at(r);
    if (sr == 0) continue;
    SignedVector candidate = sr == 1 ? c : c.negated();
    if (!signed_vector_augments(candidate, r, f.values, inst)) continue;
    if (!best || path_order_less(candidate, *best)) best = std::move(candidate);
  }
  if (!best) return std::nullopt;
  return RPath(std::move(*best), r);
}

std::vector<RPath> shortest_augmenting_set(const FlowState& f, const Instance& inst) {
  int r = inst.r();
  std::vector<SignedVector> augmenting;
  for (const SignedVector& c : inst.space().circuits()) {
    int sr = c.sign_at(r);
    if (sr == 0) continue;
    SignedVector candidate = sr == 1 ? c : c.negated();
    if (signed_vector_augments(candidate, r, f.values, inst))
      augmenting.push_back(std::move(candidate));
  }
  if (augmenting.empty()) return {};
  int min_len = augmenting[0].support_size();
  for (const SignedVector& v : augmenting) min_len = std::min(min_len, v.support_size());
  std::vector<RPath> shortest;
  for (SignedVector& v : augmenting)
    if (v.support_size() == min_len) shortest.emplace_back(std::move(v), r);
  std::sort(shortest.begin(), shortest.end(),
            [](const RPath& a, const RPath& b) { return path_order_less(a.vec(), b.vec()); });
  return shortest;
}

std::optional<RPath> shortest_augmenting_path_graphic(const FlowState& f, const Instance& inst) {
  require_graph(inst, OracleKind::Graphic);
  const GraphMeta& g = inst.graph();
  int r = inst.r();

  // Residual adjacency: forward below capacity, backward above zero.
  struct ResidualArc {
    int to;
    int index;
    int sign;
  };
  std::vector<std::vector<ResidualArc>> adj(g.num_vertices);
  for (int j = 0; j < inst.ground_size(); ++j) {
    if (j == r) continue;
    auto [tail, head] = g.arcs[j];
    if (f.values[j] < inst.capacity(j)) adj[tail].push_back({head, j, 1});
    if (f.values[j] > 0) adj[head].push_back({tail, j, -1});
  }

  std::vector<int> level(g.num_vertices, -1);
  std::deque<int> queue{g.source};
  level[g.source] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (const ResidualArc& a : adj[u])
      if (level[a.to] < 0) {
        level[a.to] = level[u] + 1;
        queue.push_back(a.to);
      }
  }
  if (level[g.sink] < 0) return std::nullopt;

  // Walk the BFS level structure to list every shortest residual s-t path,
  // then apply the shared tie-break so all oracles agree on the choice.
  std::optional<SignedVector> best;
  std::vector<std::pair<int, int>> arc_stack;
  auto consider = [&] {
    std::vector<SignedVector::Entry> support(arc_stack.begin(), arc_stack.end());
    support.emplace_back(r, 1);
    SignedVector candidate(inst.ground_size(), std::move(support));
    if (!best || path_order_less(candidate, *best)) best = std::move(candidate);
  };
  auto dfs = [&](auto&& self, int u) -> void {
    if (u == g.sink) {
      consider();
      return;
    }
    for (const ResidualArc& a : adj[u]) {
      if (level[a.to] != level[u] + 1) continue;
      if (a.to != g.sink && level[g.sink] <= level[a.to]) continue;
      arc_stack.emplace_back(a.index, a.sign);
      self(self, a.to);
      arc_stack.pop_back();
    }
  };
  dfs(dfs, g.source);
  if (!best) return std::nullopt;
  return RPath(std::move(*best), r);
}

std::optional<RPath> shortest_augmenting_path_cographic(const FlowState& f, const Instance& inst) {
  require_graph(inst, OracleKind::Cographic);
  const GraphMeta& g = inst.graph();
  int r = inst.r();
  auto [r_tail, r_head] = g.arcs[r];

  // Scan vertex bipartitions with r entering the chosen side, so the cut
  // vector carries +1 at r. The minimum-cardinality augmenting cut is a
  // minimal cutset, hence primitive.
  // TODO: replace the 2^(|V|-2) bipartition scan with a nested min-cut
  // computation once instances outgrow enumeration scale.
  std::vector<int> free_vertices;
  for (int v = 0; v < g.num_vertices; ++v)
    if (v != r_tail && v != r_head) free_vertices.push_back(v);

  std::optional<SignedVector> best;
  std::uint64_t combos = std::uint64_t{1} << free_vertices.size();
  for (std::uint64_t bits = 0; bits < combos; ++bits) {
    std::vector<bool> in_side(g.num_vertices, false);
    in_side[r_head] = true;
    for (std::size_t i = 0; i < free_vertices.size(); ++i)
      if (bits >> i & 1) in_side[free_vertices[i]] = true;

    std::vector<SignedVector::Entry> support;
    bool augmenting = true;
    for (int j = 0; j < inst.ground_size() && augmenting; ++j) {
      auto [tail, head] = g.arcs[j];
      int sign = 0;
      if (in_side[head] && !in_side[tail])
        sign = 1;
      else if (in_side[tail] && !in_side[head])
        sign = -1;
      if (sign == 0) continue;
      if (j != r)
        augmenting = sign > 0 ? f.values[j] < inst.capacity(j) : f.values[j] > 0;
      support.emplace_back(j, sign);
    }
    if (!augmenting) continue;
    SignedVector candidate(inst.ground_size(), std::move(support));
    if (!best || path_order_less(candidate, *best)) best = std::move(candidate);
  }
  if (!best) return std::nullopt;
  if (!inst.space().is_elementary(best->to_rational()))
    throw InvariantError("cographic oracle: minimum augmenting cut is not primitive; "
                         "graph metadata is inconsistent");
  return RPath(std::move(*best), r);
}

std::optional<RPath> shortest_augmenting_path(const FlowState& f, const Instance& inst,
                                              OracleKind kind) {
  switch (kind) {
    case OracleKind::Graphic:
      return shortest_augmenting_path_graphic(f, inst);
    case OracleKind::Cographic:
      return shortest_augmenting_path_cographic(f, inst);
    case OracleKind::Generic:
    default:
      return shortest_augmenting_path_generic(f, inst);
  }
}

MaxFlowResult max_flow(const Instance& inst, OracleKind kind) {
  int n = inst.ground_size();
  long guard = static_cast<long>(n) * n;

  MaxFlowResult result;
  result.flow.values.assign(n, Rational(0));
  result.objective = 0;

  int iteration = 0;
  int previous_length = 0;
  while (true) {
    std::optional<RPath> path = shortest_augmenting_path(result.flow, inst, kind);
    if (!path) break;
    ++iteration;
    if (iteration > guard)
      throw InvariantError("augmentation count exceeded |E|^2 = " + std::to_string(guard) +
                           "; input space is not regular or the oracle is faulty");
    if (path->length() < previous_length)
      throw InvariantError("shortest augmenting path length decreased from " +
                           std::to_string(previous_length) + " to " +
                           std::to_string(path->length()) + " at iteration " +
                           std::to_string(iteration));
    previous_length = path->length();

    StepSize step = max_step(*path, result.flow, inst);
    if (step.unbounded) {
      result.unbounded = true;
      return result;
    }
    for (const auto& [index, sign] : path->vec().support())
      result.flow.values[index] += sign > 0 ? step.value : -step.value;
    result.objective = result.flow.values[inst.r()];
    result.trace.steps.push_back(
        {iteration, path->vec(), step.value, result.objective, path->length()});
  }
  return result;
}

bool verify_optimality(const FlowState& f, const Instance& inst) {
  return !shortest_augmenting_path_generic(f, inst).has_value();
}

}  // namespace regflow
