#pragma once
#include <string>
#include <vector>

#include "regflow/solver.hpp"

namespace regflow {

/// "+1 -3 +6": signed 1-based ground indices, ascending.
std::string format_signed_support(const SignedVector& v);

/// Parse the native instance format:
///   mode kernel|rowspace
///   size R C
///   r K              (1-based)
///   matrix           (R rows of C entries in {-1,0,+1})
///   capacities       (C-1 nonnegative rationals, ascending index, r skipped)
/// '#' starts a comment anywhere; blank lines are ignored.
/// Errors carry 1-based line numbers.
Instance parse_instance(const std::string& text);

/// Canonical text for an instance (round-trips through parse_instance).
std::string serialize_instance(const Instance& inst);

/// Parse the DIMACS max-flow dialect (problem line `p max N M`, node lines
/// `n X s|t`, arc lines `a U V CAP`, comments `c ...`), append the return
/// arc r = (t, s) as the last ground index, and build the instance in the
/// requested mode with graph metadata retained for the specialized oracles.
Instance parse_dimacs_digraph(const std::string& text, SpaceMode mode);

/// Dispatch on content: a `p` problem line means DIMACS (mode applies),
/// a `mode` directive means the native format (mode argument ignored).
Instance parse_any(const std::string& text, SpaceMode dimacs_mode);

/// One line per augmentation: iteration, signed support, epsilon, objective,
/// length. A '#' header line is included; parse_trace skips it.
std::string serialize_trace(const AugmentationTrace& trace);

struct ParsedTraceStep {
  int iteration;
  std::vector<std::pair<int, int>> support;  // 0-based, ascending
  Rational epsilon;
  Rational objective;
  int length;
};

std::vector<ParsedTraceStep> parse_trace(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace regflow
