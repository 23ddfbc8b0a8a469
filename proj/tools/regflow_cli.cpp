// Command-line front end. Talks to the solver exclusively through the C API
// in regflow.h, the same surface other language bindings would use.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "regflow.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUserError = 1;   // validation, parse, infeasibility, unbounded
constexpr int kExitInvariant = 2;   // theory guard tripped

struct InstanceHandle {
  rf_instance* ptr = nullptr;
  ~InstanceHandle() { rf_instance_free(ptr); }
};

struct SolutionHandle {
  rf_solution* ptr = nullptr;
  ~SolutionHandle() { rf_solution_free(ptr); }
};

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { rf_string_free(ptr); }
};

int status_to_exit(rf_status status) {
  switch (status) {
    case RF_OK:
      return kExitOk;
    case RF_ERR_INVARIANT:
      return kExitInvariant;
    default:
      return kExitUserError;
  }
}

int report_failure(rf_status status) {
  std::cerr << "error: " << rf_last_error() << "\n";
  return status_to_exit(status);
}

rf_mode mode_from_string(const std::string& mode) {
  return mode == "rowspace" ? RF_MODE_ROWSPACE : RF_MODE_KERNEL;
}

int load_instance(const std::string& file, const std::string& mode, InstanceHandle& h) {
  rf_status status = rf_instance_from_file(file.c_str(), mode_from_string(mode), &h.ptr);
  if (status != RF_OK) return report_failure(status);
  return kExitOk;
}

int write_trace(const std::string& path, const char* text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write trace file '" << path << "'\n";
    return kExitUserError;
  }
  out << text;
  return kExitOk;
}

int run_solve(const std::string& file, const std::string& mode, const std::string& oracle,
              const std::string& trace_path) {
  InstanceHandle inst;
  if (int rc = load_instance(file, mode, inst); rc != kExitOk) return rc;

  rf_oracle kind = RF_ORACLE_GENERIC;
  if (oracle == "graphic") kind = RF_ORACLE_GRAPHIC;
  if (oracle == "cographic") kind = RF_ORACLE_COGRAPHIC;

  SolutionHandle sol;
  rf_status status = rf_solve(inst.ptr, kind, &sol.ptr);
  if (status == RF_ERR_UNBOUNDED) {
    std::cout << "unbounded\n";
    return kExitUserError;
  }
  if (status != RF_OK) return report_failure(status);

  std::cout << "objective " << rf_solution_objective(sol.ptr) << "\n";
  if (!trace_path.empty())
    if (int rc = write_trace(trace_path, rf_solution_trace(sol.ptr)); rc != kExitOk) return rc;
  return kExitOk;
}

int run_reference(const std::string& file, const std::string& mode) {
  InstanceHandle inst;
  if (int rc = load_instance(file, mode, inst); rc != kExitOk) return rc;
  OwnedString value;
  rf_status status = rf_reference_objective(inst.ptr, &value.ptr);
  if (status == RF_ERR_UNBOUNDED) {
    std::cout << "unbounded\n";
    return kExitUserError;
  }
  if (status != RF_OK) return report_failure(status);
  std::cout << "objective " << value.ptr << "\n";
  return kExitOk;
}

int run_verify_tu(const std::string& file, const std::string& mode, int max_size, bool force) {
  InstanceHandle inst;
  if (int rc = load_instance(file, mode, inst); rc != kExitOk) return rc;
  int is_tu = 0;
  OwnedString witness;
  rf_status status = rf_verify_tu(inst.ptr, max_size, force ? 1 : 0, &is_tu, &witness.ptr);
  if (status != RF_OK) return report_failure(status);
  if (is_tu) {
    std::cout << "TU\n";
    return kExitOk;
  }
  std::cout << "NOT TU (" << (witness.ptr ? witness.ptr : "no witness") << ")\n";
  return kExitUserError;
}

int run_circuits(const std::string& file, const std::string& mode) {
  InstanceHandle inst;
  if (int rc = load_instance(file, mode, inst); rc != kExitOk) return rc;
  OwnedString text;
  rf_status status = rf_circuits(inst.ptr, &text.ptr);
  if (status != RF_OK) return report_failure(status);
  std::cout << text.ptr;
  return kExitOk;
}

int run_decompose(const std::string& file, const std::string& mode,
                  const std::vector<std::string>& values) {
  InstanceHandle inst;
  if (int rc = load_instance(file, mode, inst); rc != kExitOk) return rc;
  std::string joined;
  for (const std::string& v : values) {
    if (!joined.empty()) joined += ' ';
    joined += v;
  }
  OwnedString text;
  rf_status status = rf_decompose(inst.ptr, joined.c_str(), &text.ptr);
  if (status != RF_OK) return report_failure(status);
  std::cout << text.ptr;
  return kExitOk;
}

int run_compare_oracles(const std::string& file, const std::string& mode) {
  InstanceHandle inst;
  if (int rc = load_instance(file, mode, inst); rc != kExitOk) return rc;
  if (!rf_instance_has_graph(inst.ptr)) {
    std::cerr << "error: compare-oracles needs a DIMACS instance with graph metadata\n";
    return kExitUserError;
  }
  rf_oracle specialized =
      rf_instance_mode(inst.ptr) == RF_MODE_KERNEL ? RF_ORACLE_GRAPHIC : RF_ORACLE_COGRAPHIC;
  const char* name = specialized == RF_ORACLE_GRAPHIC ? "graphic" : "cographic";

  SolutionHandle generic, special;
  rf_status status = rf_solve(inst.ptr, RF_ORACLE_GENERIC, &generic.ptr);
  if (status != RF_OK) {
    if (status == RF_ERR_UNBOUNDED) {
      std::cout << "unbounded\n";
      return kExitUserError;
    }
    return report_failure(status);
  }
  status = rf_solve(inst.ptr, specialized, &special.ptr);
  if (status != RF_OK) return report_failure(status);

  size_t a = rf_solution_steps(generic.ptr), b = rf_solution_steps(special.ptr);
  bool agree = a == b;
  for (size_t i = 0; i < std::min(a, b); ++i) {
    int la = rf_solution_step_length(generic.ptr, i);
    int lb = rf_solution_step_length(special.ptr, i);
    std::cout << "iter " << i + 1 << ": generic " << la << " " << name << " " << lb << "\n";
    if (la != lb) agree = false;
  }
  std::string obj_a = rf_solution_objective(generic.ptr);
  std::string obj_b = rf_solution_objective(special.ptr);
  std::cout << "objective generic " << obj_a << " " << name << " " << obj_b << "\n";
  if (obj_a != obj_b) agree = false;
  if (!agree) {
    std::cerr << "error: oracle disagreement between generic and " << name << "\n";
    return kExitInvariant;
  }
  std::cout << "agreement ok\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"max-flow solver for regular spaces (kernels and row spaces of TU matrices)"};
  app.require_subcommand(1);

  std::string file, mode = "kernel", oracle = "generic", trace_path;
  int max_size = 8;
  bool force = false;
  std::vector<std::string> values;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "instance file (native or DIMACS)")->required();
    cmd->add_option("--mode", mode, "space mode for DIMACS inputs: kernel (flow) or rowspace (coflow)")
        ->check(CLI::IsMember({"kernel", "rowspace"}));
  };

  CLI::App* solve = app.add_subcommand("solve", "run the augmenting-path solver");
  add_common(solve);
  solve->add_option("--oracle", oracle, "shortest-path oracle")
      ->check(CLI::IsMember({"generic", "graphic", "cographic"}));
  solve->add_option("--trace", trace_path, "write the augmentation trace to this file");

  CLI::App* reference = app.add_subcommand("reference", "exact LP reference objective");
  add_common(reference);

  CLI::App* verify = app.add_subcommand("verify-tu", "exhaustive total-unimodularity check");
  add_common(verify);
  verify->add_option("--max-size", max_size, "largest submatrix size to scan (default 8)");
  verify->add_flag("--force", force, "scan even if the matrix exceeds --max-size (capped scan)");

  CLI::App* circuits = app.add_subcommand("circuits", "list canonical circuits");
  add_common(circuits);

  CLI::App* decompose =
      app.add_subcommand("decompose", "conformal decomposition of an integral member vector");
  add_common(decompose);
  decompose->add_option("values", values, "the vector, one value per ground index")->required();

  CLI::App* compare = app.add_subcommand(
      "compare-oracles", "assert generic vs specialized oracle agreement, print lengths");
  add_common(compare);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUserError;
  }

  try {
    if (solve->parsed()) return run_solve(file, mode, oracle, trace_path);
    if (reference->parsed()) return run_reference(file, mode);
    if (verify->parsed()) return run_verify_tu(file, mode, max_size, force);
    if (circuits->parsed()) return run_circuits(file, mode);
    if (decompose->parsed()) return run_decompose(file, mode, values);
    if (compare->parsed()) return run_compare_oracles(file, mode);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUserError;
  }
  return kExitUserError;
}
