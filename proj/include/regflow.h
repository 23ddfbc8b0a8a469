/* regflow: max-flow over regular spaces (kernels and row spaces of totally
 * unimodular matrices).
 *
 * C interface to the shared library. Handles are opaque; every fallible call
 * returns an rf_status, with a thread-local message available through
 * rf_last_error(). Strings returned through char** are owned by the caller
 * and must be released with rf_string_free; const char* results are owned by
 * the handle they came from.
 */
#ifndef REGFLOW_H
#define REGFLOW_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct rf_instance rf_instance;
typedef struct rf_solution rf_solution;

typedef enum rf_status {
  RF_OK = 0,
  RF_ERR_PARSE = 1,     /* malformed input text */
  RF_ERR_INVALID = 2,   /* validation failure or bad argument */
  RF_ERR_UNBOUNDED = 3, /* the optimum is unbounded (a result, not a fault) */
  RF_ERR_INVARIANT = 4, /* a theory guarantee failed: non-regular input or bug */
  RF_ERR_INTERNAL = 5
} rf_status;

typedef enum rf_mode {
  RF_MODE_KERNEL = 0,  /* flows: kernel of the generator */
  RF_MODE_ROWSPACE = 1 /* coflows: row space of the generator */
} rf_mode;

typedef enum rf_oracle {
  RF_ORACLE_GENERIC = 0,
  RF_ORACLE_GRAPHIC = 1,
  RF_ORACLE_COGRAPHIC = 2
} rf_oracle;

/* Message for the most recent failing call on this thread. */
const char* rf_last_error(void);

void rf_string_free(char* s);

/* Instance input: native instance text or DIMACS max-flow text, detected by
 * content. dimacs_mode selects flow/coflow for DIMACS input and is ignored
 * for the native format (which carries its own mode). */
rf_status rf_instance_from_string(const char* text, rf_mode dimacs_mode, rf_instance** out);
rf_status rf_instance_from_file(const char* path, rf_mode dimacs_mode, rf_instance** out);
void rf_instance_free(rf_instance* inst);

int rf_instance_ground_size(const rf_instance* inst);
int rf_instance_return_index(const rf_instance* inst); /* 1-based */
rf_mode rf_instance_mode(const rf_instance* inst);
int rf_instance_has_graph(const rf_instance* inst);
int rf_instance_dimension(const rf_instance* inst);

/* Canonical instance text (round-trips through rf_instance_from_string). */
rf_status rf_instance_serialize(const rf_instance* inst, char** out_text);

/* Shortest-augmenting-path Ford-Fulkerson. RF_ERR_UNBOUNDED when the
 * objective is unbounded; RF_ERR_INVARIANT when the augmentation bound
 * |E|^2 is exceeded or path lengths decrease. */
rf_status rf_solve(const rf_instance* inst, rf_oracle oracle, rf_solution** out);
void rf_solution_free(rf_solution* sol);

const char* rf_solution_objective(const rf_solution* sol);
size_t rf_solution_steps(const rf_solution* sol);
int rf_solution_step_length(const rf_solution* sol, size_t i);
const char* rf_solution_step_epsilon(const rf_solution* sol, size_t i);
const char* rf_solution_step_objective(const rf_solution* sol, size_t i);
const char* rf_solution_step_support(const rf_solution* sol, size_t i);
/* Full trace text: one line per augmentation. */
const char* rf_solution_trace(const rf_solution* sol);
/* Final flow, one value per ground index, space separated. */
const char* rf_solution_flow(const rf_solution* sol);

/* Exact LP optimum, computed independently of the solver. */
rf_status rf_reference_objective(const rf_instance* inst, char** out_value);

/* Exhaustive total-unimodularity scan of the generator up to max_size.
 * Refuses larger matrices unless force is nonzero. On a violation *is_tu is
 * 0 and *witness (when non-NULL) describes the offending submatrix. */
rf_status rf_verify_tu(const rf_instance* inst, int max_size, int force, int* is_tu,
                       char** witness);

/* Canonical circuits, one signed support per line ("+1 +2 +3"). */
rf_status rf_circuits(const rf_instance* inst, char** out_text);

/* Conformal decomposition of an integral member vector (n whitespace-
 * separated values). One line per distinct summand: multiplicity, then the
 * signed support. */
rf_status rf_decompose(const rf_instance* inst, const char* vector_text, char** out_text);

#ifdef __cplusplus
}
#endif

#endif /* REGFLOW_H */
