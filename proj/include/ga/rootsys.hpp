#pragma once
#include <map>
#include <utility>
#include <vector>

#include "ga/cartan.hpp"

namespace ga {

using Coords = std::vector<int>;

struct Root {
  Coords coords;  // simple-root coordinates
  Coords coroot;  // simple-coroot coordinates of the coroot
  int height = 0;
  bool positive() const { return height > 0; }
};

struct ClosureBudgetExceeded : Error {
  using Error::Error;
};

class RootSystem {
 public:
  CartanMatrix cartan;
  std::vector<long long> d;  // minimal symmetrizer
  IntMatrix gram;            // <alpha_i, alpha_j> = d_i a_ij
  std::vector<Root> roots;   // positives by (height, lex desc), then their negatives in the same order

  int n() const { return cartan.n(); }
  int num_positive() const { return npos_; }
  int size() const { return static_cast<int>(roots.size()); }
  int index(const Coords& c) const;  // -1 when c is not a root
  int neg(int idx) const { return idx < npos_ ? idx + npos_ : idx - npos_; }
  int simple(int i) const { return simple_[i]; }
  // s_i applied to root idx
  int sref(int i, int idx) const { return sref_[i][idx]; }
  long long inner(const Coords& a, const Coords& b) const;
  // sigma_beta(v) = v - <v, beta^vee> beta
  Coords reflect(const Coords& beta, const Coords& v) const;

  friend RootSystem generate(const CartanMatrix& a);

 private:
  int npos_ = 0;
  std::vector<int> simple_;
  std::vector<std::vector<int>> sref_;
  std::map<Coords, int> index_;
};

Coords simple_reflect(const CartanMatrix& a, int i, const Coords& v);
RootSystem generate(const CartanMatrix& a);

struct RootPoset {
  int size = 0;  // positive roots, indexed as in RootSystem
  std::vector<std::vector<char>> leq;
  std::vector<std::pair<int, int>> covers;
};
RootPoset root_poset(const RootSystem& rs);

struct CoxeterData {
  int h = 0;
  std::vector<int> exponents;
  BigInt group_order;
};
// integer matrix of s_i on simple-root coordinates
IntMatrix reflection_matrix(const CartanMatrix& a, int i);
IntMatrix bipartite_coxeter_matrix(const CartanMatrix& a);
CoxeterData coxeter_data(const RootSystem& rs);

struct WeightData {
  RationalMatrix omega;  // column i = omega_i in simple-root coordinates
  std::vector<BigRational> rho_coroot;
};
WeightData weight_data(const RootSystem& rs);

}  // namespace ga
