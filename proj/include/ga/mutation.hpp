#pragma once
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ga/cartan.hpp"
#include "ga/laurent.hpp"
#include "ga/rootsys.hpp"

namespace ga {

// b'_ij = -b_ij if k in {i,j}; b_ij + |b_ik| b_kj if b_ik b_kj > 0; else b_ij
IntMatrix matrix_mutate(const IntMatrix& bt, int k);
// positive d with d_i b_ij = -d_j b_ji on the principal part, if any
std::optional<std::vector<long long>> skew_symmetrizer(const IntMatrix& b);

struct Seed {
  IntMatrix btilde;                  // m x n
  std::vector<LaurentPoly> cluster;  // n entries, Laurent in the ambient variables
  VarListPtr vars;                   // ambient x_1..x_m; the last m-n are frozen
  int n() const { return static_cast<int>(btilde.cols()); }
  int m() const { return static_cast<int>(btilde.rows()); }
  LaurentPoly frozen(int i) const { return LaurentPoly::variable(vars, n() + i); }
};

// names: m names, cluster first then frozen
// check_rank=false admits coefficient-free B of corank > 0 (A3, D4, ...)
Seed initial_seed(const IntMatrix& btilde, const VarList& names, bool check_rank = true);
Seed seed_mutate(const Seed& s, int k);

struct CanonicalSeed {
  std::vector<std::string> cluster;  // sorted canonical texts
  IntMatrix btilde;                  // rows/cols permuted to match
  std::vector<int> order;            // order[p] = original position of the p-th sorted entry
  std::string key;
};
CanonicalSeed canonical_seed(const Seed& s);

struct ExchangeGraphRecord {
  std::vector<Seed> seeds;
  std::vector<std::string> keys;
  std::vector<std::tuple<int, int, int>> edges;   // (seed, direction, seed), each once
  std::vector<LaurentPoly> variables;             // distinct cluster variables, sorted by text
  std::vector<std::vector<int>> seed_variables;   // per seed, sorted variable indices
  bool closed = false;
  bool term_limit_hit = false;
};

// stops (closed = false) after budget seeds or at a variable with more than max_terms terms
ExchangeGraphRecord explore(const Seed& s0, std::size_t budget = 100000, std::size_t max_terms = 2000);

enum class FiniteStatus { finite, infinite, inconclusive };
struct FiniteTypeResult {
  FiniteStatus status = FiniteStatus::inconclusive;
  DynkinType type;
  std::size_t class_size = 0;
  std::string witness;  // offending matrix for infinite
};
FiniteTypeResult detect_finite_type(const IntMatrix& b, std::size_t budget = 10000);
// minimum flattened entries over simultaneous permutations and global sign
std::vector<long long> canonical_principal(const IntMatrix& b);

struct NotAlmostPositive : Error {
  using Error::Error;
};
// (c_1..c_n): negated minimal exponents of the first n variables
Coords denominator_vector(const LaurentPoly& v, int n);
int denominator_root(const RootSystem& rs, const LaurentPoly& v);  // index into rs.roots

struct PositivityReport {
  std::size_t variables = 0;
  std::vector<std::string> violations;
};
PositivityReport observe_positivity(const std::vector<LaurentPoly>& vars);
PositivityReport observe_positivity(const ExchangeGraphRecord& rec);

}  // namespace ga
