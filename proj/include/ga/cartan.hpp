#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ga/linalg.hpp"

namespace ga {

struct NotCartanShape : Error {
  using Error::Error;
};
struct NotSymmetrizable : Error {
  using Error::Error;
};
struct UnrecognizedDiagram : Error {
  using Error::Error;
};
struct OddCycle : Error {
  using Error::Error;
};

// a(i,j) with s_i(alpha_j) = alpha_j - a(i,j) alpha_i
class CartanMatrix {
 public:
  CartanMatrix() = default;
  explicit CartanMatrix(IntMatrix a);  // checks diagonal 2s and the sign pattern
  int n() const { return static_cast<int>(a_.rows()); }
  long long operator()(int i, int j) const { return a_(i, j); }
  const IntMatrix& matrix() const { return a_; }
  bool operator==(const CartanMatrix& o) const { return a_ == o.a_; }

 private:
  IntMatrix a_;
};

struct FiniteCheck {
  bool finite = false;
  std::optional<std::vector<long long>> symmetrizer;
};

FiniteCheck validate_finite_type(const IntMatrix& m);
// minimal positive integer d with d_i a_ij = d_j a_ji, per component
std::vector<long long> symmetrizer(const CartanMatrix& a);

struct DynkinType {
  std::vector<std::pair<char, int>> factors;  // sorted
  std::string str() const;                    // "A3", "A1+A1"
  bool operator==(const DynkinType& o) const { return factors == o.factors; }
  bool irreducible() const { return factors.size() == 1; }
};

DynkinType classify(const CartanMatrix& a);
// connected components of the diagram, each sorted ascending
std::vector<std::vector<int>> components(const CartanMatrix& a);

struct Bipartition {
  std::vector<int> plus, minus;  // 0-based, ascending
  std::vector<int> eps;          // +1 / -1 per index
};

Bipartition bipartition(const CartanMatrix& a);
IntMatrix b_of_a(const CartanMatrix& a, const Bipartition& parts);

// built-in table; family in ABCDEFG
CartanMatrix standard_cartan(char family, int rank);
CartanMatrix standard_cartan(const DynkinType& t);
bool valid_family_rank(char family, int rank);
DynkinType parse_type_name(const std::string& s);  // "B4", "A1+A1"
// "type:A3", "A3" or "matrix:[[2,-1],[-1,2]]"
CartanMatrix parse_cartan(const std::string& text);
std::string cartan_text(const CartanMatrix& a);  // matrix:[[...]]

}  // namespace ga
