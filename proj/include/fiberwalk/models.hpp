#pragma once

#include "fiberwalk/graph.hpp"
#include "fiberwalk/matrix.hpp"
#include "fiberwalk/moves.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace fiberwalk {

// A named (A, M) pair: constraint matrix plus a one-sided Markov basis whose
// moves are all verified to lie in ker(A).
struct ModelInstance {
  std::string name;
  std::vector<long long> parameters;
  IntegerMatrix matrix;
  MoveSet markov_basis;

  ModelInstance(std::string name_, std::vector<long long> params, IntegerMatrix a,
                MoveSet basis);
};

// A_d = (1,...,1) with moves e_1 - e_k, 2 <= k <= d.
ModelInstance build_single_row(std::size_t d);

// Independence model A_{n|m}: a flattened n x m table maps to its n row sums
// followed by its m column sums. Basis: the 2x2 swap orbit under row/column
// permutations, deduplicated up to sign (the sign-representative with
// leading +1 is kept), n(n-1)m(m-1)/4 one-sided moves.
ModelInstance build_independence(std::size_t n, std::size_t m);

// H_k in Z^{(2k+1) x (4k+2)} with its reduced lexicographic Groebner basis
// G_k: the 2k swaps e_i - e_{k+i} (first and third block) plus one long move.
ModelInstance build_hemmecke(std::size_t k);

// Comparison oracle for the Graver walk structure on F(H_k, e_{2k+1}):
// the graph on {0,1}^{k+1} with i ~ j iff the last coordinates are equal and
// the vectors differ in exactly one position, or the last coordinates
// differ. (The source statement prints the cross-class condition with an
// index typo; the last-coordinate reading is used.) Simple, (k+2^k)-regular.
FiberGraph build_hemmecke_hypercube_graph(std::size_t k);

enum class ParseErrorKind {
  malformed_header,
  wrong_entry_count,
  bad_token,
  kernel_violation,
  invalid_moves,
  io,
};

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind k, std::string msg)
      : std::runtime_error(std::move(msg)), kind(k) {}
  ParseErrorKind kind;
};

// Text formats ('#' starts a comment line, tokens whitespace-separated):
//   matrix: "m d" then m*d entries; moves: "k d" then k*d entries;
//   vector: "m" then m entries.
IntegerMatrix parse_matrix(std::istream& in);
MoveSet parse_moves(std::istream& in, const IntegerMatrix* validate_against = nullptr);
IntVec parse_vector(std::istream& in);

IntegerMatrix parse_matrix_file(const std::string& path);
MoveSet parse_moves_file(const std::string& path,
                         const IntegerMatrix* validate_against = nullptr);
IntVec parse_vector_file(const std::string& path);

}  // namespace fiberwalk
