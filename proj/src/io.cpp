#include "rkh/io.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace rkh {

Json to_json(const BigradedGroup& g) {
  std::vector<std::pair<Bidegree, GroupEntry>> items(g.entries().begin(), g.entries().end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    return std::pair(a.first.second, a.first.first) < std::pair(b.first.second, b.first.first);
  });
  Json out = Json::array();
  for (const auto& [b, e] : items) {
    Json t = Json::array();
    for (const auto& d : e.torsion) {
      // divisors too large for int64 go out as strings
      if (d <= BigInt(INT64_MAX)) t.push_back(static_cast<std::int64_t>(d));
      else t.push_back(d.str());
    }
    out.push_back({{"i", b.first}, {"j", b.second}, {"rank", e.rank}, {"torsion", t}});
  }
  return out;
}

BigradedGroup group_from_json(const Json& j) {
  if (!j.is_array()) throw Error("homology JSON must be an array");
  BigradedGroup g;
  for (const auto& item : j) {
    GroupEntry e;
    int i = 0, jj = 0;
    try {
      e.rank = item.at("rank").get<long long>();
      i = item.at("i").get<int>();
      jj = item.at("j").get<int>();
      for (const auto& d : item.at("torsion"))
        e.torsion.push_back(d.is_string() ? BigInt(d.get<std::string>()) : BigInt(d.get<std::int64_t>()));
    } catch (const Error&) {
      throw;
    } catch (const std::exception& ex) {
      throw Error(std::string("bad homology entry: ") + ex.what());
    }
    if (e.rank < 0) throw Error("negative rank");
    for (const auto& v : e.torsion)
      if (v < 2) throw Error("torsion divisor must be at least 2");
    g.set({i, jj}, e);
  }
  return g;
}

std::string edge_labels(const RibbonGraph& g, EdgeSet s) {
  std::vector<int> ls;
  for (int e = 0; e < g.num_edges(); ++e)
    if ((s >> e) & 1) ls.push_back(g.label(e));
  std::sort(ls.begin(), ls.end());
  std::string out = "{";
  for (std::size_t k = 0; k < ls.size(); ++k) out += (k ? "," : "") + std::to_string(ls[k]);
  return out + "}";
}

namespace {

std::vector<int> label_list(const RibbonGraph& g, EdgeSet s) {
  std::vector<int> ls;
  for (int e = 0; e < g.num_edges(); ++e)
    if ((s >> e) & 1) ls.push_back(g.label(e));
  std::sort(ls.begin(), ls.end());
  return ls;
}

}  // namespace

Json to_json(const RibbonGraph& g, const std::vector<QuasiTreeRecord>& records) {
  Json out = Json::array();
  for (const auto& q : records)
    out.push_back({{"edges", label_list(g, q.edges)},
                   {"genus", q.genus},
                   {"ia", q.ia},
                   {"ea", q.ea},
                   {"i", q.i},
                   {"j", q.j}});
  return out;
}

std::string quasi_tree_csv(const RibbonGraph& g, const std::vector<QuasiTreeRecord>& records) {
  std::ostringstream os;
  os << "edges,genus,ia,ea,i,j\n";
  for (const auto& q : records) {
    const auto ls = label_list(g, q.edges);
    std::string edges;
    for (std::size_t k = 0; k < ls.size(); ++k) edges += (k ? " " : "") + std::to_string(ls[k]);
    os << edges << ',' << q.genus << ',' << q.ia << ',' << q.ea << ',' << q.i << ',' << q.j << '\n';
  }
  return os.str();
}

std::string quasi_tree_table(const RibbonGraph& g, const std::vector<QuasiTreeRecord>& records) {
  std::vector<std::string> edges;
  std::size_t width = 5;
  for (const auto& q : records) {
    edges.push_back(edge_labels(g, q.edges));
    width = std::max(width, edges.back().size());
  }
  std::ostringstream os;
  os << std::left << std::setw(6) << "tree" << std::setw(static_cast<int>(width) + 2) << "edges" << std::right
     << std::setw(4) << "g" << std::setw(4) << "ia" << std::setw(4) << "ea" << std::setw(4) << "i" << std::setw(4)
     << "j" << '\n';
  for (std::size_t k = 0; k < records.size(); ++k) {
    const auto& q = records[k];
    os << std::left << std::setw(6) << ("T" + std::to_string(k + 1)) << std::setw(static_cast<int>(width) + 2)
       << edges[k] << std::right << std::setw(4) << q.genus << std::setw(4) << q.ia << std::setw(4) << q.ea
       << std::setw(4) << q.i << std::setw(4) << q.j << '\n';
  }
  return os.str();
}

Json to_json(const CheckReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.results) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"passed", r.passed()}, {"checks", checks}};
}

std::string format_report(const CheckReport& r) {
  std::ostringstream os;
  for (const auto& c : r.results) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
  }
  return os.str();
}

}  // namespace rkh
