#include "regflow/io.hpp"

#include <fstream>
#include <sstream>

namespace regflow {
namespace {

struct Line {
  int number;  // 1-based
  std::vector<std::string> tokens;
};

// Comment-stripped, tokenized lines. comment_char is '#' for the native
// format; DIMACS uses whole-line 'c' comments handled by its parser.
std::vector<Line> tokenize(const std::string& text, char comment_char) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto cut = raw.find(comment_char);
    if (cut != std::string::npos) raw.erase(cut);
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

int parse_count(const std::string& tok, int line, const char* what) {
  try {
    std::size_t used = 0;
    int value = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return value;
  } catch (const std::exception&) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
  }
}

Rational parse_capacity(const std::string& tok, int line) {
  Rational c;
  try {
    c = parse_rational(tok);
  } catch (const ValidationError& e) {
    throw ParseError(line, e.what());
  }
  if (c < 0) throw ParseError(line, "negative capacity " + tok);
  return c;
}

}  // namespace

std::string format_signed_support(const SignedVector& v) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [index, sign] : v.support()) {
    if (!first) os << ' ';
    os << (sign > 0 ? '+' : '-') << index + 1;
    first = false;
  }
  return os.str();
}

Instance parse_instance(const std::string& text) {
  std::vector<Line> lines = tokenize(text, '#');
  std::size_t pos = 0;
  auto next = [&]() -> const Line& {
    if (pos >= lines.size()) throw ParseError("unexpected end of instance file");
    return lines[pos++];
  };

  const Line& mode_line = next();
  if (mode_line.tokens.size() != 2 || mode_line.tokens[0] != "mode")
    throw ParseError(mode_line.number, "expected 'mode kernel' or 'mode rowspace'");
  SpaceMode mode;
  if (mode_line.tokens[1] == "kernel")
    mode = SpaceMode::Kernel;
  else if (mode_line.tokens[1] == "rowspace")
    mode = SpaceMode::RowSpace;
  else
    throw ParseError(mode_line.number, "unknown mode '" + mode_line.tokens[1] + "'");

  const Line& size_line = next();
  if (size_line.tokens.size() != 3 || size_line.tokens[0] != "size")
    throw ParseError(size_line.number, "expected 'size ROWS COLS'");
  int rows = parse_count(size_line.tokens[1], size_line.number, "row count");
  int cols = parse_count(size_line.tokens[2], size_line.number, "column count");
  if (rows < 1 || cols < 1) throw ParseError(size_line.number, "dimensions must be at least 1");

  const Line& r_line = next();
  if (r_line.tokens.size() != 2 || r_line.tokens[0] != "r")
    throw ParseError(r_line.number, "expected 'r INDEX'");
  int r = parse_count(r_line.tokens[1], r_line.number, "r index");
  if (r < 1 || r > cols)
    throw ParseError(r_line.number, "r = " + std::to_string(r) + " is out of range 1.." +
                                        std::to_string(cols));

  const Line& matrix_line = next();
  if (matrix_line.tokens.size() != 1 || matrix_line.tokens[0] != "matrix")
    throw ParseError(matrix_line.number, "expected 'matrix'");
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(rows) * cols);
  for (int i = 0; i < rows; ++i) {
    const Line& row = next();
    if (static_cast<int>(row.tokens.size()) != cols)
      throw ParseError(row.number, "expected " + std::to_string(cols) + " entries, got " +
                                       std::to_string(row.tokens.size()));
    for (const std::string& tok : row.tokens) {
      if (tok == "0")
        entries.push_back(0);
      else if (tok == "1" || tok == "+1")
        entries.push_back(1);
      else if (tok == "-1")
        entries.push_back(-1);
      else
        throw ParseError(row.number, "matrix entry '" + tok + "' is not in {-1,0,+1}");
    }
  }

  const Line& cap_line = next();
  if (cap_line.tokens.size() != 1 || cap_line.tokens[0] != "capacities")
    throw ParseError(cap_line.number, "expected 'capacities'");
  std::vector<Rational> capacities;
  while (static_cast<int>(capacities.size()) < cols - 1) {
    const Line& row = next();
    for (const std::string& tok : row.tokens) {
      if (static_cast<int>(capacities.size()) >= cols - 1)
        throw ParseError(row.number, "more capacities than the " + std::to_string(cols - 1) +
                                         " expected");
      capacities.push_back(parse_capacity(tok, row.number));
    }
  }
  if (pos < lines.size())
    throw ParseError(lines[pos].number, "trailing content after the capacity block");

  TuMatrix generator(rows, cols, entries);
  auto space = std::make_shared<RegularSpace>(std::move(generator), mode);
  return Instance(std::move(space), r - 1, std::move(capacities));
}

std::string serialize_instance(const Instance& inst) {
  const TuMatrix& g = inst.space().generator();
  std::ostringstream os;
  os << "mode " << (inst.space().mode() == SpaceMode::Kernel ? "kernel" : "rowspace") << "\n";
  os << "size " << g.rows() << ' ' << g.cols() << "\n";
  os << "r " << inst.r() + 1 << "\n";
  os << "matrix\n";
  for (int i = 0; i < g.rows(); ++i) {
    for (int j = 0; j < g.cols(); ++j) os << (j ? " " : "") << g.at(i, j);
    os << "\n";
  }
  os << "capacities\n";
  for (int j = 0; j < inst.ground_size(); ++j) {
    if (j == inst.r()) continue;
    os << to_string(inst.capacity(j)) << "\n";
  }
  return os.str();
}

Instance parse_dimacs_digraph(const std::string& text, SpaceMode mode) {
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  int num_vertices = -1, num_arcs = -1;
  int source = -1, sink = -1;
  int source_line = 0, sink_line = 0;
  std::vector<std::pair<int, int>> arcs;
  std::vector<Rational> capacities;

  while (std::getline(in, raw)) {
    ++number;
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    std::string t;
    while (ls >> t) tok.push_back(t);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (num_vertices >= 0) throw ParseError(number, "duplicate problem line");
      if (tok.size() != 4 || tok[1] != "max")
        throw ParseError(number, "expected 'p max NODES ARCS'");
      num_vertices = parse_count(tok[2], number, "node count");
      num_arcs = parse_count(tok[3], number, "arc count");
      if (num_vertices < 2) throw ParseError(number, "need at least two nodes");
      if (num_arcs < 0) throw ParseError(number, "negative arc count");
    } else if (tok[0] == "n") {
      if (num_vertices < 0) throw ParseError(number, "node line before problem line");
      if (tok.size() != 3) throw ParseError(number, "expected 'n NODE s|t'");
      int v = parse_count(tok[1], number, "node id");
      if (v < 1 || v > num_vertices) throw ParseError(number, "node id out of range");
      if (tok[2] == "s") {
        if (source >= 0) throw ParseError(number, "duplicate source line");
        source = v;
        source_line = number;
      } else if (tok[2] == "t") {
        if (sink >= 0) throw ParseError(number, "duplicate sink line");
        sink = v;
        sink_line = number;
      } else {
        throw ParseError(number, "node designator must be 's' or 't'");
      }
    } else if (tok[0] == "a") {
      if (num_vertices < 0) throw ParseError(number, "arc line before problem line");
      if (tok.size() != 4) throw ParseError(number, "expected 'a TAIL HEAD CAPACITY'");
      int u = parse_count(tok[1], number, "arc tail");
      int v = parse_count(tok[2], number, "arc head");
      if (u < 1 || u > num_vertices || v < 1 || v > num_vertices)
        throw ParseError(number, "arc endpoint out of range (dangling)");
      if (u == v) throw ParseError(number, "self-loop arc");
      arcs.emplace_back(u - 1, v - 1);
      capacities.push_back(parse_capacity(tok[3], number));
    } else {
      throw ParseError(number, "unrecognized line kind '" + tok[0] + "'");
    }
  }

  if (num_vertices < 0) throw ParseError("missing problem line");
  if (source < 0) throw ParseError("missing source line ('n X s')");
  if (sink < 0) throw ParseError("missing sink line ('n X t')");
  if (source == sink) throw ParseError(sink_line ? sink_line : source_line,
                                       "source and sink must differ");
  if (static_cast<int>(arcs.size()) != num_arcs)
    throw ParseError("arc count " + std::to_string(arcs.size()) +
                     " does not match the problem line (" + std::to_string(num_arcs) + ")");

  // The return arc is always appended as the last ground index.
  arcs.emplace_back(sink - 1, source - 1);
  GraphMeta meta{num_vertices, source - 1, sink - 1, arcs};
  TuMatrix generator = incidence_matrix(num_vertices, arcs);
  auto space = std::make_shared<RegularSpace>(std::move(generator), mode);
  return Instance(std::move(space), static_cast<int>(arcs.size()) - 1, std::move(capacities),
                  std::move(meta));
}

Instance parse_any(const std::string& text, SpaceMode dimacs_mode) {
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    std::istringstream ls(raw);
    std::string first;
    if (!(ls >> first)) continue;
    if (first[0] == '#' || first == "c") continue;
    if (first == "p" || first == "n" || first == "a")
      return parse_dimacs_digraph(text, dimacs_mode);
    if (first == "mode") return parse_instance(text);
    throw ParseError("cannot tell the input format: expected a 'p max' problem line or a "
                     "'mode' directive, found '" + first + "'");
  }
  throw ParseError("empty input");
}

std::string serialize_trace(const AugmentationTrace& trace) {
  std::ostringstream os;
  os << "# iteration support epsilon objective length\n";
  for (const TraceStep& s : trace.steps) {
    os << s.iteration << ' ' << format_signed_support(s.path) << ' ' << to_string(s.epsilon)
       << ' ' << to_string(s.objective_after) << ' ' << s.path_length << "\n";
  }
  return os.str();
}

std::vector<ParsedTraceStep> parse_trace(const std::string& text) {
  std::vector<ParsedTraceStep> steps;
  for (const Line& line : tokenize(text, '#')) {
    const auto& tok = line.tokens;
    std::size_t i = 0;
    ParsedTraceStep step;
    step.iteration = parse_count(tok[i++], line.number, "iteration");
    while (i < tok.size() && (tok[i][0] == '+' || tok[i][0] == '-')) {
      int sign = tok[i][0] == '+' ? 1 : -1;
      int index = parse_count(tok[i].substr(1), line.number, "support index");
      if (index < 1) throw ParseError(line.number, "support index must be positive");
      step.support.emplace_back(index - 1, sign);
      ++i;
    }
    if (step.support.empty()) throw ParseError(line.number, "empty path support");
    if (tok.size() - i != 3)
      throw ParseError(line.number, "expected epsilon, objective and length after the support");
    try {
      step.epsilon = parse_rational(tok[i]);
      step.objective = parse_rational(tok[i + 1]);
    } catch (const ValidationError& e) {
      throw ParseError(line.number, e.what());
    }
    step.length = parse_count(tok[i + 2], line.number, "path length");
    if (step.length != static_cast<int>(step.support.size()))
      throw ParseError(line.number, "length field disagrees with the support size");
    steps.push_back(std::move(step));
  }
  return steps;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace regflow
