#include "rkh/homology.hpp"

#include <algorithm>
#include <future>
#include <iomanip>
#include <sstream>

#include "rkh/smith.hpp"

namespace rkh {

void BigradedGroup::set(Bidegree b, GroupEntry e) {
  if (e.trivial())
    entries_.erase(b);
  else
    entries_[b] = std::move(e);
}

GroupEntry BigradedGroup::at(Bidegree b) const {
  auto it = entries_.find(b);
  return it == entries_.end() ? GroupEntry{} : it->second;
}

long long BigradedGroup::total_rank() const {
  long long r = 0;
  for (const auto& [b, e] : entries_) r += e.rank;
  return r;
}

bool BigradedGroup::has_torsion() const {
  for (const auto& [b, e] : entries_)
    if (!e.torsion.empty()) return true;
  return false;
}

BigradedGroup homology(const BigradedComplex& c) {
  if (!squares_to_zero(c)) throw Error("differential does not square to zero");

  std::vector<Bidegree> keys;
  for (const auto& [b, d] : c.differentials) keys.push_back(b);
  std::vector<std::future<SmithInvariants>> jobs;
  jobs.reserve(keys.size());
  for (const auto& b : keys) {
    const IntMatrix* m = &c.differentials.at(b);
    const bool big = m->size() > 4096;
    jobs.push_back(std::async(big ? std::launch::async : std::launch::deferred,
                              [m] { return smith_invariants(*m); }));
  }
  std::map<Bidegree, SmithInvariants> snf;
  for (std::size_t k = 0; k < keys.size(); ++k) snf[keys[k]] = jobs[k].get();

  BigradedGroup out;
  for (const auto& [b, gens] : c.generators) {
    GroupEntry e;
    e.rank = static_cast<long long>(gens.size());
    if (auto it = snf.find(b); it != snf.end()) e.rank -= it->second.rank;
    if (auto it = snf.find({b.first - 1, b.second}); it != snf.end()) {
      e.rank -= it->second.rank;
      e.torsion = it->second.divisors;
    }
    out.set({b.first + c.shift_i, b.second + c.shift_j}, std::move(e));
  }
  return out;
}

BigradedGroup shift(const BigradedGroup& g, int r, int s) {
  BigradedGroup out;
  for (const auto& [b, e] : g.entries()) out.set({b.first + r, b.second + s}, e);
  return out;
}

LaurentPoly graded_euler_characteristic(const BigradedGroup& g) {
  LaurentPoly p;
  for (const auto& [b, e] : g.entries()) p.add(b.second, (b.first % 2 ? -1 : 1) * e.rank);
  return p;
}

LaurentPoly graded_euler_characteristic(const BigradedComplex& c) {
  LaurentPoly p;
  for (const auto& [b, gens] : c.generators) {
    const int i = b.first + c.shift_i;
    p.add(b.second + c.shift_j, (i % 2 ? -1 : 1) * static_cast<std::int64_t>(gens.size()));
  }
  return p;
}

int homological_width(const BigradedGroup& g) {
  if (g.empty()) throw Error("homological width of the trivial group is undefined");
  // work with 2*delta = j - 2i
  int lo = 0, hi = 0;
  bool first = true;
  for (const auto& [b, e] : g.entries()) {
    const int d2 = b.second - 2 * b.first;
    if (first || d2 < lo) lo = d2;
    if (first || d2 > hi) hi = d2;
    first = false;
  }
  if ((hi - lo) % 2 != 0) throw Error("occupied bigradings have mixed j parity");
  return (hi - lo) / 2 + 1;
}

std::string format_entry(const GroupEntry& e) {
  std::ostringstream os;
  bool first = true;
  if (e.rank > 0) {
    os << "Z";
    if (e.rank > 1) os << '^' << e.rank;
    first = false;
  }
  for (const auto& t : e.torsion) {
    if (!first) os << " + ";
    os << "Z/" << t;
    first = false;
  }
  return os.str();
}

std::string format_table(const BigradedGroup& g) {
  if (g.empty()) return "(trivial)\n";
  int imin = 0, imax = 0, jmin = 0, jmax = 0;
  bool first = true;
  for (const auto& [b, e] : g.entries()) {
    if (first) {
      imin = imax = b.first;
      jmin = jmax = b.second;
      first = false;
    }
    imin = std::min(imin, b.first);
    imax = std::max(imax, b.first);
    jmin = std::min(jmin, b.second);
    jmax = std::max(jmax, b.second);
  }
  std::vector<std::string> header{"j\\i"};
  for (int i = imin; i <= imax; ++i) header.push_back(std::to_string(i));
  std::vector<std::vector<std::string>> rows;
  for (int j = jmax; j >= jmin; j -= 2) {
    std::vector<std::string> row{std::to_string(j)};
    for (int i = imin; i <= imax; ++i) row.push_back(format_entry(g.at({i, j})));
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t k = 0; k < header.size(); ++k) {
    width[k] = header[k].size();
    for (const auto& r : rows) width[k] = std::max(width[k], r[k].size());
  }
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) {
      os << std::setw(static_cast<int>(width[k])) << (k == 0 ? std::right : std::left) << cells[k];
      os << (k == 0 ? " | " : (k + 1 < cells.size() ? "  " : ""));
    }
    os << '\n';
  };
  line(header);
  std::size_t total = width[0] + 3;
  for (std::size_t k = 1; k < width.size(); ++k) total += width[k] + 2;
  os << std::string(total - 2, '-') << '\n';
  for (const auto& r : rows) line(r);
  return os.str();
}

}  // namespace rkh
