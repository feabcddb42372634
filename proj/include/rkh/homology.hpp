#ifndef RKH_HOMOLOGY_HPP
#define RKH_HOMOLOGY_HPP

#include <map>
#include <string>
#include <vector>

#include "rkh/complex.hpp"
#include "rkh/laurent.hpp"

namespace rkh {

struct GroupEntry {
  long long rank = 0;
  std::vector<BigInt> torsion;  // divisor chain, each >= 2
  bool trivial() const { return rank == 0 && torsion.empty(); }
  bool operator==(const GroupEntry&) const = default;
};

// Finitely generated bigraded abelian group; only nontrivial entries stored.
class BigradedGroup {
 public:
  void set(Bidegree b, GroupEntry e);
  GroupEntry at(Bidegree b) const;
  const std::map<Bidegree, GroupEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  long long total_rank() const;
  bool has_torsion() const;
  bool operator==(const BigradedGroup& o) const { return entries_ == o.entries_; }
  bool operator!=(const BigradedGroup& o) const { return !(*this == o); }

 private:
  std::map<Bidegree, GroupEntry> entries_;
};

// ker d^{i,j} / im d^{i-1,j}, with the complex's shift applied to the keys
BigradedGroup homology(const BigradedComplex& c);

BigradedGroup shift(const BigradedGroup& g, int r, int s);

// sum of (-1)^i rank q^j, torsion ignored
LaurentPoly graded_euler_characteristic(const BigradedGroup& g);
LaurentPoly graded_euler_characteristic(const BigradedComplex& c);

// number of occupied diagonals delta = j/2 - i between the extremes
int homological_width(const BigradedGroup& g);

// "Z^3", "Z/2", "Z^2 + Z/2 + Z/4"; empty for the trivial group
std::string format_entry(const GroupEntry& e);
// rows j descending (step 2), columns i ascending
std::string format_table(const BigradedGroup& g);

}  // namespace rkh

#endif
