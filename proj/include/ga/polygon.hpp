#pragma once
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ga/laurent.hpp"
#include "ga/linalg.hpp"
#include "ga/rootsys.hpp"

namespace ga {

using Diagonal = std::pair<int, int>;  // vertices a < b of the polygon, numbered counterclockwise

bool crosses(Diagonal d, Diagonal e);
Diagonal make_diagonal(int a, int b);

struct NotADiagonal : Error {
  using Error::Error;
};
struct MonodromyDetected : Error {
  using Error::Error;
};

struct Triangulation {
  int ngon = 0;
  std::vector<Diagonal> diagonals;  // label k+1 for diagonals[k]
  std::vector<Diagonal> sides;      // label n+1+k for sides[k]
  int n() const { return static_cast<int>(diagonals.size()); }
  std::vector<Diagonal> sorted_diagonals() const;
  std::string str() const;  // [[0,2],[0,3]]
  int label(Diagonal e) const;  // 1-based, -1 if not an edge
};

// sides labeled (0,1), (1,2), ..., (0,N-1)
Triangulation make_triangulation(int ngon, std::vector<Diagonal> diagonals);
// the labeled pentagon with B~ rows [[0,1],[-1,0],[0,1],[-1,0],[0,-1],[1,-1],[1,0]]
Triangulation reference_pentagon();

std::vector<Triangulation> enumerate_triangulations(int n);
std::vector<std::vector<int>> triangles(const Triangulation& t);
IntMatrix adjacency_matrix(const Triangulation& t);  // (2n+3) x n
Triangulation flip(const Triangulation& t, int k);    // k: 0-based diagonal index
std::string triangulation_key(const Triangulation& t);

// values of every diagonal reachable by flips, starting from the variables
// attached to the edges of t0; every flip edge is checked for agreement
using EdgeNames = std::map<Diagonal, std::string>;
struct PtolemyResult {
  VarListPtr vars;
  std::map<Diagonal, LaurentPoly> value;
  std::size_t flips_checked = 0;
};
PtolemyResult ptolemy_all(const Triangulation& t0, const EdgeNames& names);
LaurentPoly ptolemy_expand(const Triangulation& t0, const EdgeNames& names, Diagonal target);
// q1..q5 on sides, y1 = (0,3), y2 = (1,3)
EdgeNames reference_pentagon_names();

struct PluckerReport {
  int quadruples = 0;
  int identities_ok = 0;
  int diagonals = 0;
  int minors_matched = 0;
  bool ok() const { return quadruples == identities_ok && diagonals == minors_matched; }
};
PluckerReport plucker_verify(int n);

// snake labeling of the diagonals of the (n+3)-gon by almost positive roots of A_n
std::map<Coords, Diagonal> snake_labeling(int n);

struct SymmetricModel {
  int n = 0;
  std::vector<std::vector<Diagonal>> triangulations;  // centrally symmetric, sorted diagonals
  std::vector<std::pair<int, int>> flips;             // edges of the flip graph
  std::vector<std::vector<Diagonal>> orbits;          // diameters and antipodal pairs
  std::vector<std::vector<char>> compatible;          // orbit pairs without crossings
};
SymmetricModel enumerate_symmetric(int n);

}  // namespace ga
