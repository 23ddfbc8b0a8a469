#include "regflow.h"

#include <cstring>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "regflow/io.hpp"
#include "regflow/reference.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

rf_status fail(rf_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

template <typename Fn>
rf_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const regflow::ParseError& e) {
    return fail(RF_ERR_PARSE, e.what());
  } catch (const regflow::InvariantError& e) {
    return fail(RF_ERR_INVARIANT, e.what());
  } catch (const regflow::ValidationError& e) {
    return fail(RF_ERR_INVALID, e.what());
  } catch (const std::exception& e) {
    return fail(RF_ERR_INTERNAL, e.what());
  }
}

}  // namespace

struct rf_instance {
  regflow::Instance inst;
};

struct rf_solution {
  std::string objective;
  std::string trace_text;
  std::string flow_text;
  std::vector<int> lengths;
  std::vector<std::string> epsilons;
  std::vector<std::string> objectives;
  std::vector<std::string> supports;
};

extern "C" {

const char* rf_last_error(void) { return g_last_error.c_str(); }

void rf_string_free(char* s) { delete[] s; }

rf_status rf_instance_from_string(const char* text, rf_mode dimacs_mode, rf_instance** out) {
  if (!text || !out) return fail(RF_ERR_INVALID, "null argument");
  *out = nullptr;
  return guarded([&] {
    regflow::SpaceMode mode = dimacs_mode == RF_MODE_ROWSPACE ? regflow::SpaceMode::RowSpace
                                                              : regflow::SpaceMode::Kernel;
    *out = new rf_instance{regflow::parse_any(text, mode)};
    return RF_OK;
  });
}

rf_status rf_instance_from_file(const char* path, rf_mode dimacs_mode, rf_instance** out) {
  if (!path || !out) return fail(RF_ERR_INVALID, "null argument");
  *out = nullptr;
  return guarded([&] {
    std::string text = regflow::read_file(path);
    return rf_instance_from_string(text.c_str(), dimacs_mode, out);
  });
}

void rf_instance_free(rf_instance* inst) { delete inst; }

int rf_instance_ground_size(const rf_instance* inst) { return inst->inst.ground_size(); }

int rf_instance_return_index(const rf_instance* inst) { return inst->inst.r() + 1; }

rf_mode rf_instance_mode(const rf_instance* inst) {
  return inst->inst.space().mode() == regflow::SpaceMode::Kernel ? RF_MODE_KERNEL
                                                                 : RF_MODE_ROWSPACE;
}

int rf_instance_has_graph(const rf_instance* inst) { return inst->inst.has_graph() ? 1 : 0; }

int rf_instance_dimension(const rf_instance* inst) { return inst->inst.space().dimension(); }

rf_status rf_instance_serialize(const rf_instance* inst, char** out_text) {
  if (!inst || !out_text) return fail(RF_ERR_INVALID, "null argument");
  return guarded([&] {
    *out_text = dup_string(regflow::serialize_instance(inst->inst));
    return RF_OK;
  });
}

rf_status rf_solve(const rf_instance* inst, rf_oracle oracle, rf_solution** out) {
  if (!inst || !out) return fail(RF_ERR_INVALID, "null argument");
  *out = nullptr;
  return guarded([&] {
    regflow::OracleKind kind = regflow::OracleKind::Generic;
    if (oracle == RF_ORACLE_GRAPHIC) kind = regflow::OracleKind::Graphic;
    if (oracle == RF_ORACLE_COGRAPHIC) kind = regflow::OracleKind::Cographic;
    regflow::MaxFlowResult result = regflow::max_flow(inst->inst, kind);
    if (result.unbounded) return fail(RF_ERR_UNBOUNDED, "the max-flow objective is unbounded");

    auto sol = std::make_unique<rf_solution>();
    sol->objective = regflow::to_string(result.objective);
    sol->trace_text = regflow::serialize_trace(result.trace);
    std::ostringstream flow;
    for (std::size_t j = 0; j < result.flow.values.size(); ++j)
      flow << (j ? " " : "") << regflow::to_string(result.flow.values[j]);
    sol->flow_text = flow.str();
    for (const regflow::TraceStep& s : result.trace.steps) {
      sol->lengths.push_back(s.path_length);
      sol->epsilons.push_back(regflow::to_string(s.epsilon));
      sol->objectives.push_back(regflow::to_string(s.objective_after));
      sol->supports.push_back(regflow::format_signed_support(s.path));
    }
    *out = sol.release();
    return RF_OK;
  });
}

void rf_solution_free(rf_solution* sol) { delete sol; }

const char* rf_solution_objective(const rf_solution* sol) { return sol->objective.c_str(); }

size_t rf_solution_steps(const rf_solution* sol) { return sol->lengths.size(); }

int rf_solution_step_length(const rf_solution* sol, size_t i) { return sol->lengths.at(i); }

const char* rf_solution_step_epsilon(const rf_solution* sol, size_t i) {
  return sol->epsilons.at(i).c_str();
}

const char* rf_solution_step_objective(const rf_solution* sol, size_t i) {
  return sol->objectives.at(i).c_str();
}

const char* rf_solution_step_support(const rf_solution* sol, size_t i) {
  return sol->supports.at(i).c_str();
}

const char* rf_solution_trace(const rf_solution* sol) { return sol->trace_text.c_str(); }

const char* rf_solution_flow(const rf_solution* sol) { return sol->flow_text.c_str(); }

rf_status rf_reference_objective(const rf_instance* inst, char** out_value) {
  if (!inst || !out_value) return fail(RF_ERR_INVALID, "null argument");
  return guarded([&] {
    regflow::ReferenceResult ref = regflow::lp_reference_solve(inst->inst);
    if (ref.unbounded) return fail(RF_ERR_UNBOUNDED, "the max-flow objective is unbounded");
    *out_value = dup_string(regflow::to_string(ref.value));
    return RF_OK;
  });
}

rf_status rf_verify_tu(const rf_instance* inst, int max_size, int force, int* is_tu,
                       char** witness) {
  if (!inst || !is_tu) return fail(RF_ERR_INVALID, "null argument");
  if (witness) *witness = nullptr;
  return guarded([&] {
    regflow::TuReport report =
        regflow::verify_tu(inst->inst.space().generator(), max_size, force != 0);
    *is_tu = report.tu ? 1 : 0;
    if (!report.tu && witness) {
      std::ostringstream os;
      os << "submatrix rows {";
      for (std::size_t i = 0; i < report.witness_rows.size(); ++i)
        os << (i ? "," : "") << report.witness_rows[i] + 1;
      os << "} cols {";
      for (std::size_t i = 0; i < report.witness_cols.size(); ++i)
        os << (i ? "," : "") << report.witness_cols[i] + 1;
      os << "}, det " << report.witness_det;
      *witness = dup_string(os.str());
    }
    return RF_OK;
  });
}

rf_status rf_circuits(const rf_instance* inst, char** out_text) {
  if (!inst || !out_text) return fail(RF_ERR_INVALID, "null argument");
  return guarded([&] {
    std::ostringstream os;
    for (const regflow::SignedVector& c : inst->inst.space().circuits())
      os << regflow::format_signed_support(c) << "\n";
    *out_text = dup_string(os.str());
    return RF_OK;
  });
}

rf_status rf_decompose(const rf_instance* inst, const char* vector_text, char** out_text) {
  if (!inst || !vector_text || !out_text) return fail(RF_ERR_INVALID, "null argument");
  return guarded([&] {
    std::istringstream in(vector_text);
    regflow::RatVector x;
    std::string tok;
    while (in >> tok) x.push_back(regflow::parse_rational(tok));
    if (static_cast<int>(x.size()) != inst->inst.ground_size())
      return fail(RF_ERR_INVALID,
                  "expected " + std::to_string(inst->inst.ground_size()) + " values, got " +
                      std::to_string(x.size()));
    std::ostringstream os;
    for (const regflow::DecompTerm& t : inst->inst.space().conformal_decomposition(x))
      os << t.count.str() << " " << regflow::format_signed_support(t.vec) << "\n";
    *out_text = dup_string(os.str());
    return RF_OK;
  });
}

}  // extern "C"
