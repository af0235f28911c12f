#pragma once
#include <bitset>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ga/rootsys.hpp"

namespace ga {

// permutation of root indices, one byte per root
using Perm = std::string;
using InvSet = std::bitset<128>;

struct LatticeCheckFailed : Error {
  using Error::Error;
};
struct NotCoxeterElement : Error {
  using Error::Error;
};

Perm identity_perm(const RootSystem& rs);
Perm simple_perm(const RootSystem& rs, int i);
Perm compose(const Perm& a, const Perm& b);  // a after b
Perm invert(const Perm& p);
int perm_length(const RootSystem& rs, const Perm& p);
Perm longest_element_perm(const RootSystem& rs);
IntMatrix perm_matrix(const RootSystem& rs, const Perm& p);  // action on simple-root coordinates

class CoxeterGroup {
 public:
  std::shared_ptr<const RootSystem> rs;  // owned copy
  std::vector<Perm> elems;               // elems[0] is the identity; ordered by length
  std::vector<int> length;
  std::vector<std::vector<int>> rmul;    // rmul[w][i] = w s_i
  std::vector<int> reflections;          // sigma_beta for positive beta, in root order
  int w0 = 0;

  int size() const { return static_cast<int>(elems.size()); }
  int find(const Perm& p) const;         // -1 if absent
  int multiply(int a, int b) const;
  int inverse(int a) const;
  int from_word(const std::vector<int>& word) const;  // 0-based letters
  std::vector<int> lexmin_word(int w) const;
  std::string word_label(int w) const;   // "s1s2s1", "e"
  InvSet inversions(int w) const;        // {beta > 0 : w^{-1} beta < 0}
  bool left_descent(int w, int i) const;

  friend CoxeterGroup build_group(const RootSystem& rs, std::size_t budget);

 private:
  std::unordered_map<Perm, int> index_;
};

CoxeterGroup build_group(const RootSystem& rs, std::size_t budget = 1000000);

BigInt count_reduced_words(const CoxeterGroup& g, int w);
std::vector<BigInt> reduced_word_counts(const CoxeterGroup& g);

struct WeakOrder {
  std::vector<std::pair<int, int>> covers;  // (u, u s_i) with length going up
  bool lattice_checked_full = false;
  long pairs_checked = 0;
};

// greatest common lower bound in the right weak order, if it exists
std::optional<int> weak_meet(const CoxeterGroup& g, const std::vector<InvSet>& inv, int u, int v);
WeakOrder weak_order(const CoxeterGroup& g, std::size_t full_threshold = 1000, int samples = 300,
                     unsigned long seed = 1);

struct AbsoluteInterval {
  int c = 0;
  std::vector<int> reflection_length;  // L(w) for every element
  std::vector<int> elements;           // members of [1, c]
  std::vector<int> rank_counts;        // by L
};

// c = s_{word[0]} ... s_{word[n-1]} where word is a permutation of 0..n-1
AbsoluteInterval absolute_interval(const CoxeterGroup& g, const std::vector<int>& coxeter_word);
std::vector<int> bipartite_coxeter_word(const CartanMatrix& a);

}  // namespace ga
