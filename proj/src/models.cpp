#include "fiberwalk/models.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>

namespace fiberwalk {

ModelInstance::ModelInstance(std::string name_, std::vector<long long> params,
                             IntegerMatrix a, MoveSet basis)
    : name(std::move(name_)), parameters(std::move(params)), matrix(std::move(a)),
      markov_basis(std::move(basis)) {
  if (markov_basis.is_symmetric_closed())
    throw std::invalid_argument("ModelInstance: raw bases are one-sided");
  if (markov_basis.dim() != matrix.cols())
    throw std::invalid_argument("ModelInstance: move dimension mismatch");
  for (const auto& m : markov_basis.moves())
    if (!matrix.in_kernel(m))
      throw std::invalid_argument("ModelInstance: move outside ker(A)");
}

ModelInstance build_single_row(std::size_t d) {
  if (d < 2) throw std::invalid_argument("build_single_row: d >= 2 required");
  IntegerMatrix a(1, d);
  for (std::size_t j = 0; j < d; ++j) a.at(0, j) = 1;
  a.attach_certificate(RatVec{Rat(1)});
  std::vector<IntVec> moves;
  for (std::size_t k = 1; k < d; ++k) {
    IntVec m(d, 0);
    m[0] = 1;
    m[k] = -1;
    moves.push_back(std::move(m));
  }
  return ModelInstance("a_d", {(long long)d}, std::move(a),
                       MoveSet::one_sided(d, std::move(moves)));
}

ModelInstance build_independence(std::size_t n, std::size_t m) {
  if (n < 2 || m < 2)
    throw std::invalid_argument("build_independence: n, m >= 2 required");
  const std::size_t d = n * m;
  IntegerMatrix a(n + m, d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      a.at(i, i * m + j) = 1;      // row sums
      a.at(n + j, i * m + j) = 1;  // column sums
    }
  a.attach_certificate(RatVec(n + m, Rat(1, 2)));

  // Orbit of the 2x2 swap; keeping i1<i2, j1<j2 fixes the representative
  // with leading entry +1 (the lexicographically larger of {m, -m}).
  std::vector<IntVec> moves;
  for (std::size_t i1 = 0; i1 < n; ++i1)
    for (std::size_t i2 = i1 + 1; i2 < n; ++i2)
      for (std::size_t j1 = 0; j1 < m; ++j1)
        for (std::size_t j2 = j1 + 1; j2 < m; ++j2) {
          IntVec mv(d, 0);
          mv[i1 * m + j1] = 1;
          mv[i2 * m + j2] = 1;
          mv[i1 * m + j2] = -1;
          mv[i2 * m + j1] = -1;
          moves.push_back(std::move(mv));
        }
  return ModelInstance("independence", {(long long)n, (long long)m}, std::move(a),
                       MoveSet::one_sided(d, std::move(moves)));
}

ModelInstance build_hemmecke(std::size_t k) {
  if (k < 1) throw std::invalid_argument("build_hemmecke: k >= 1 required");
  const std::size_t d = 4 * k + 2;
  IntegerMatrix h(2 * k + 1, d);
  for (std::size_t i = 0; i < k; ++i) {
    h.at(i, i) = 1;
    h.at(i, k + i) = 1;
    h.at(i, 4 * k) = -1;
    h.at(k + i, 2 * k + i) = 1;
    h.at(k + i, 3 * k + i) = 1;
    h.at(k + i, 4 * k + 1) = -1;
  }
  h.at(2 * k, 4 * k) = 1;
  h.at(2 * k, 4 * k + 1) = 1;
  RatVec lambda(2 * k + 1, Rat(1));
  lambda[2 * k] = Rat((long long)k + 1);
  h.attach_certificate(std::move(lambda));

  std::vector<IntVec> moves;
  for (std::size_t i = 0; i < k; ++i) {
    IntVec m(d, 0);
    m[i] = 1;
    m[k + i] = -1;
    moves.push_back(std::move(m));
  }
  for (std::size_t i = 0; i < k; ++i) {
    IntVec m(d, 0);
    m[2 * k + i] = 1;
    m[3 * k + i] = -1;
    moves.push_back(std::move(m));
  }
  IntVec long_move(d, 0);
  for (std::size_t i = 0; i < k; ++i) {
    long_move[k + i] = 1;
    long_move[3 * k + i] = -1;
  }
  long_move[4 * k] = 1;
  long_move[4 * k + 1] = -1;
  moves.push_back(std::move(long_move));

  return ModelInstance("hemmecke", {(long long)k}, std::move(h),
                       MoveSet::one_sided(d, std::move(moves)));
}

FiberGraph build_hemmecke_hypercube_graph(std::size_t k) {
  if (k < 1)
    throw std::invalid_argument("build_hemmecke_hypercube_graph: k >= 1 required");
  const std::size_t n = std::size_t(1) << (k + 1);
  FiberGraph g;
  g.node_count = n;
  g.degree = k + (std::size_t(1) << k);
  g.neighbors.assign(n, {});
  g.loops.assign(n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v) continue;
      const bool last_equal = ((u ^ v) >> k) == 0;
      const bool hamming_one = __builtin_popcountll(u ^ v) == 1;
      if ((last_equal && hamming_one) || !last_equal)
        g.neighbors[u].emplace_back(static_cast<std::uint32_t>(v), 1);
    }
  }
  g.check_regularity();
  return g;
}

namespace {

std::vector<std::string> tokenize(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  return tokens;
}

Int token_to_int(const std::string& tok) {
  std::size_t start = (tok[0] == '+' || tok[0] == '-') ? 1 : 0;
  if (start == tok.size())
    throw ParseError(ParseErrorKind::bad_token, "bad integer token '" + tok + "'");
  for (std::size_t i = start; i < tok.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(tok[i])))
      throw ParseError(ParseErrorKind::bad_token, "bad integer token '" + tok + "'");
  return Int(tok);
}

std::size_t header_count(const std::vector<std::string>& tokens, std::size_t idx,
                         const char* what) {
  if (idx >= tokens.size())
    throw ParseError(ParseErrorKind::malformed_header,
                     std::string("missing ") + what + " in header");
  Int v;
  try {
    v = token_to_int(tokens[idx]);
  } catch (const ParseError&) {
    throw ParseError(ParseErrorKind::malformed_header,
                     std::string("non-integer ") + what + " '" + tokens[idx] + "'");
  }
  if (v < 1 || v > 1'000'000)
    throw ParseError(ParseErrorKind::malformed_header,
                     std::string(what) + " out of range: " + tokens[idx]);
  return v.convert_to<std::size_t>();
}

std::vector<IntVec> parse_grid(const std::vector<std::string>& tokens,
                               std::size_t nrows, std::size_t ncols) {
  if (tokens.size() != 2 + nrows * ncols)
    throw ParseError(ParseErrorKind::wrong_entry_count,
                     "expected " + std::to_string(nrows * ncols) + " entries, found " +
                         std::to_string(tokens.size() - 2));
  std::vector<IntVec> rows(nrows, IntVec(ncols));
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j)
      rows[i][j] = token_to_int(tokens[2 + i * ncols + j]);
  return rows;
}

}  // namespace

IntegerMatrix parse_matrix(std::istream& in) {
  auto tokens = tokenize(in);
  std::size_t m = header_count(tokens, 0, "row count");
  std::size_t d = header_count(tokens, 1, "column count");
  return IntegerMatrix::from_rows(parse_grid(tokens, m, d));
}

MoveSet parse_moves(std::istream& in, const IntegerMatrix* validate_against) {
  auto tokens = tokenize(in);
  std::size_t k = header_count(tokens, 0, "move count");
  std::size_t d = header_count(tokens, 1, "dimension");
  auto rows = parse_grid(tokens, k, d);
  if (validate_against) {
    if (validate_against->cols() != d)
      throw ParseError(ParseErrorKind::kernel_violation,
                       "move dimension does not match the matrix");
    for (const auto& mv : rows)
      if (!validate_against->in_kernel(mv))
        throw ParseError(ParseErrorKind::kernel_violation,
                         "move (" + vec_to_string(mv) + ") is not in ker(A)");
  }
  try {
    return MoveSet::one_sided(d, std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw ParseError(ParseErrorKind::invalid_moves, e.what());
  }
}

IntVec parse_vector(std::istream& in) {
  auto tokens = tokenize(in);
  std::size_t m = header_count(tokens, 0, "entry count");
  if (tokens.size() != 1 + m)
    throw ParseError(ParseErrorKind::wrong_entry_count,
                     "expected " + std::to_string(m) + " entries, found " +
                         std::to_string(tokens.size() - 1));
  IntVec v(m);
  for (std::size_t i = 0; i < m; ++i) v[i] = token_to_int(tokens[1 + i]);
  return v;
}

namespace {

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(ParseErrorKind::io, "cannot open '" + path + "'");
  return in;
}

}  // namespace

IntegerMatrix parse_matrix_file(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_matrix(in);
}

MoveSet parse_moves_file(const std::string& path, const IntegerMatrix* validate_against) {
  auto in = open_or_throw(path);
  return parse_moves(in, validate_against);
}

IntVec parse_vector_file(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_vector(in);
}

}  // namespace fiberwalk
