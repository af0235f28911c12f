#pragma once
#include <compare>
#include <string>
#include <vector>

#include "ga/laurent.hpp"
#include "ga/linalg.hpp"

namespace ga {

struct NoMoveAvailable : Error {
  using Error::Error;
};
struct InvalidDiagram : Error {
  using Error::Error;
};

struct Letter {
  bool thick = false;
  int level = 1;  // crossing between positions level and level+1
  auto operator<=>(const Letter&) const = default;
};
using WiringWord = std::vector<Letter>;

std::string word_str(const WiringWord& w);  // "T2 t1 t2 ..."
WiringWord parse_word(const std::string& s);

// Delta_{rows, cols}: rows from the thick lines below the chamber, cols from the thin ones
struct Chamber {
  std::vector<int> rows, cols;  // 1-based, ascending
  auto operator<=>(const Chamber&) const = default;
  std::string str() const;  // "13,12"
};

// each color subword must be a reduced word for the longest permutation
void check_diagram(int n, const WiringWord& w);
// chambers level by level, left to right, the top chamber last
std::vector<Chamber> chambers(int n, const WiringWord& w);
std::vector<Chamber> chamber_collection(int n, const WiringWord& w);  // sorted
// unbounded: leftmost and rightmost at each level, and the top
std::vector<Chamber> bounded_chambers(int n, const WiringWord& w);
std::vector<Chamber> unbounded_chambers(int n, const WiringWord& w);

VarListPtr matrix_vars(int n);  // x11, x12, ..., xnn
LaurentPoly minor_poly(const VarListPtr& xs, int n, const Chamber& c);

struct LocalMove {
  enum class Kind { mixed, thin_braid, thick_braid } kind = Kind::mixed;
  int pos = 0;
  WiringWord result;
  // Y is removed, Z appears; D or B may be the empty or full minor
  Chamber Y, Z, A, B, C, D;
};
std::vector<LocalMove> local_moves(int n, const WiringWord& w);
// the move removing chamber y, up to commuting thick/thin letters; throws NoMoveAvailable
LocalMove local_move(int n, const WiringWord& w, const Chamber& y);
bool check_move_identity(const VarListPtr& xs, int n, const LocalMove& m);

std::vector<WiringWord> reduced_words_w0(int n);

struct WiringClasses {
  int n = 0;
  std::vector<std::vector<Chamber>> classes;  // sorted collections
  std::vector<std::vector<WiringWord>> words;  // every shuffle in the class
  std::vector<std::pair<int, int>> edges;      // between classes, i < j
  std::vector<int> degree;
  std::size_t moves_checked = 0;
  std::size_t identity_ok = 0;
  std::size_t single_exchange_ok = 0;
  std::size_t involutive_ok = 0;
  int find(const std::vector<Chamber>& collection) const;
  bool connected() const;
};
WiringClasses enumerate_classes(int n);

struct Gl3Report {
  WiringWord word;
  std::vector<Chamber> cluster, frozen;
  IntMatrix btilde;
  bool signs_consistent = false;
  std::size_t seeds = 0;
  bool closed = false;
  std::vector<std::string> variables;  // cluster variables as polynomials in x
  std::vector<std::string> labels;     // matching minor "13,12" or "hidden1"/"hidden2"
  int minors_matched = 0;
  int hidden_matched = 0;
  bool all_polynomial = true;
  std::string type;
  int wiring_classes = 0;
  int wiring_clusters_embedded = 0;
  int jacobian_rank = 0;
};
WiringWord figure_word();  // T2 t1 t2 T1 T2 t1
Gl3Report gl3_cell(unsigned long rng_seed = 1);
int jacobian_rank(int n, const WiringWord& w, unsigned long rng_seed);

}  // namespace ga
