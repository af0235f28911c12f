#pragma once
#include <string>
#include <vector>

#include "ga/coxgroup.hpp"
#include "ga/rootsys.hpp"

namespace ga {

struct AntichainCount {
  BigInt total;
  std::vector<BigInt> by_size;  // index = antichain size
};
AntichainCount count_antichains(const RootPoset& poset);

struct NcStats {
  int total = 0;
  std::vector<int> by_rank;
};
NcStats nc_lattice_stats(const AbsoluteInterval& ai);

// W-orbits on Q/(h+1)Q; with_reflections adds every reflection as a generator
long torus_orbits(const RootSystem& rs, int h, bool with_reflections = false, std::size_t budget = 10000000);

// regions of the Shi arrangement inside the positive cone (rank <= 3)
int shi_positive_regions(const RootSystem& rs, int h);

struct EnumerationRow {
  std::string type;
  std::string interpretation;
  int k = -1;  // -1 for the total
  BigInt observed;
  BigInt expected;
  bool match() const { return observed == expected; }
};
struct EnumerationReport {
  std::vector<EnumerationRow> rows;
  bool ok() const;
  std::string csv() const;
};
// all interpretations that apply to the (irreducible) type
EnumerationReport enumeration_report(const std::string& type_name, std::size_t group_budget = 1000000);

}  // namespace ga
