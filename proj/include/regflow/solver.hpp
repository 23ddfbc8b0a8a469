#pragma once
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "regflow/path_algebra.hpp"

namespace regflow {

/// Digraph metadata retained from DIMACS ingestion, consumed by the graphic
/// and cographic oracles. Arc j of the ground set is arcs[j] = (tail, head);
/// the return arc sits at its ground index like any other arc.
struct GraphMeta {
  int num_vertices = 0;
  int source = 0;  // s
  int sink = 0;    // t
  std::vector<std::pair<int, int>> arcs;
};

/// Vertex-arc incidence matrix, tail -1 / head +1 (fixed project-wide).
/// Rejects dangling endpoints and self-loops.
TuMatrix incidence_matrix(int num_vertices, const std::vector<std::pair<int, int>>& arcs);

/// A max-flow instance: regular space, distinguished index r, and finite
/// nonnegative capacities on every other ground index (c_r is conceptually
/// infinite and not stored).
class Instance {
public:
  Instance(std::shared_ptr<const RegularSpace> space, int r, std::vector<Rational> capacities,
           std::optional<GraphMeta> graph = std::nullopt);

  const RegularSpace& space() const { return *space_; }
  std::shared_ptr<const RegularSpace> space_ptr() const { return space_; }
  int ground_size() const { return space_->ground_size(); }
  int r() const { return r_; }
  /// Capacity of ground index j != r.
  const Rational& capacity(int j) const;
  bool has_graph() const { return graph_.has_value(); }
  const GraphMeta& graph() const;

private:
  std::shared_ptr<const RegularSpace> space_;
  int r_;
  std::vector<Rational> capacities_;  // n-1 values, the slot for r skipped
  std::optional<GraphMeta> graph_;
};

struct FlowState {
  RatVector values;
};

struct TraceStep {
  int iteration;  // 1-based
  SignedVector path;
  Rational epsilon;
  Rational objective_after;
  int path_length;
};

struct AugmentationTrace {
  std::vector<TraceStep> steps;
};

enum class OracleKind { Generic, Graphic, Cographic };

bool is_feasible(const RatVector& f, const Instance& inst);

bool is_augmenting(const RPath& p, const FlowState& f, const Instance& inst);

/// Largest epsilon keeping f + epsilon*P feasible. Unbounded exactly when the
/// path's support is {r}. Requires is_augmenting(p, f, inst).
struct StepSize {
  bool unbounded = false;
  Rational value;
};

StepSize max_step(const RPath& p, const FlowState& f, const Instance& inst);

std::optional<RPath> shortest_augmenting_path_generic(const FlowState& f, const Instance& inst);
std::optional<RPath> shortest_augmenting_path_graphic(const FlowState& f, const Instance& inst);
std::optional<RPath> shortest_augmenting_path_cographic(const FlowState& f, const Instance& inst);
std::optional<RPath> shortest_augmenting_path(const FlowState& f, const Instance& inst,
                                              OracleKind kind);

/// The full set P^f: every augmenting r-path of minimum length, in
/// deterministic order. Materialized from the cached circuit list.
std::vector<RPath> shortest_augmenting_set(const FlowState& f, const Instance& inst);

struct MaxFlowResult {
  bool unbounded = false;
  FlowState flow;
  AugmentationTrace trace;
  Rational objective;
};

/// Ford-Fulkerson from the zero flow with maximal steps along shortest
/// augmenting paths. Throws InvariantError if the augmentation count ever
/// exceeds |E|^2 or a trace path length decreases.
MaxFlowResult max_flow(const Instance& inst, OracleKind kind);

/// True iff no r-path augments f; certifies optimality.
bool verify_optimality(const FlowState& f, const Instance& inst);

}  // namespace regflow
