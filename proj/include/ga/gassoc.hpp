#pragma once
#include <vector>

#include "ga/coxgroup.hpp"
#include "ga/rootsys.hpp"

namespace ga {

struct OrbitEscape : Error {
  using Error::Error;
};
struct NonUnimodularCluster : Error {
  using Error::Error;
};
struct OrbitConflict : Error {
  using Error::Error;
};
struct InequalityViolation : Error {
  using Error::Error;
};
struct SingularClusterSystem : Error {
  using Error::Error;
};

// Phi_{>=-1}: positive roots in root-system order, then -alpha_1..-alpha_n
struct AlmostPositiveRoots {
  std::vector<int> root;  // index into rs.roots
  int npos = 0;
  int size() const { return static_cast<int>(root.size()); }
  int neg_simple(int i) const { return npos + i; }
  bool is_neg_simple(int k) const { return k >= npos; }
};
AlmostPositiveRoots almost_positive(const RootSystem& rs);

// eps = +1 or -1; acts on rs root indices of almost positive roots
int tau(const RootSystem& rs, const Bipartition& parts, int eps, int root_idx);

struct TauData {
  AlmostPositiveRoots ap;
  Bipartition parts;
  std::vector<int> plus, minus;  // permutations of almost positive indices
};
TauData tau_data(const RootSystem& rs);
int permutation_order(const std::vector<int>& p);
bool w0_is_minus_identity(const RootSystem& rs);

struct TauOrderResult {
  int order = 0;
  int predicted = 0;  // (h+2)/2 if w0 = -1, else h+2
};
TauOrderResult tau_order(const RootSystem& rs);
// orbits of <tau_-, tau_+> on almost positive indices
std::vector<std::vector<int>> tau_orbits(const TauData& td);

struct CompatibilityRelation {
  TauData td;
  std::vector<std::vector<char>> compatible;  // on almost positive indices, irreflexive
};
CompatibilityRelation compatibility(const RootSystem& rs);

struct ClusterComplexData {
  std::vector<BigInt> f;                   // f[0] = 1 (empty face), f[k] = faces of size k
  std::vector<BigInt> h;
  std::vector<std::vector<int>> facets;    // sorted almost positive indices
  bool pure = true;
};
ClusterComplexData cluster_complex(const RootSystem& rs, const CompatibilityRelation& cr);
std::vector<BigInt> h_from_f(const std::vector<BigInt>& f);

BigInt n_phi(const CoxeterData& cd);
std::vector<BigInt> narayana(char family, int rank);

struct SupportFunction {
  std::vector<BigRational> F;  // on almost positive indices
};
SupportFunction support_function(const RootSystem& rs);

struct AssociahedronPolytope {
  std::vector<std::vector<int>> clusters;  // vertex -> tight facets (almost positive indices)
  std::vector<RationalVector> vertices;    // z_j = <z, alpha_j>
  std::vector<int> facet_root;             // almost positive index -> rs root index
  std::vector<BigRational> rhs;
  std::vector<std::pair<int, int>> edges;
};
AssociahedronPolytope build_polytope(const RootSystem& rs, const ClusterComplexData& cc, const SupportFunction& sf);

struct FanReport {
  bool simplicial = true;
  int walls = 0;
  int bad_walls = 0;
  int samples = 0;
  int uncovered = 0;
  int not_unique = 0;
  int regions = 0;
  int regions_contained = 0;
  std::vector<int> regions_per_cone;
  bool ok() const {
    return simplicial && bad_walls == 0 && uncovered == 0 && not_unique == 0 && regions == regions_contained;
  }
};
// samples = 0 skips the random coverage test; group = nullptr skips the refinement test
FanReport fan_checks(const RootSystem& rs, const ClusterComplexData& cc, const CoxeterGroup* group, int samples = 1000,
                     unsigned long seed = 7);

}  // namespace ga
