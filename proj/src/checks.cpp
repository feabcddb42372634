#include "rkh/checks.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "rkh/arrow.hpp"
#include "rkh/quasitree.hpp"

namespace rkh {

bool CheckReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

void CheckReport::append(const CheckReport& o) {
  results.insert(results.end(), o.results.begin(), o.results.end());
}

namespace {

std::string at(Bidegree b) {
  return "(" + std::to_string(b.first) + "," + std::to_string(b.second) + ")";
}

std::string entry_text(const GroupEntry& e) {
  const std::string s = format_entry(e);
  return s.empty() ? "0" : s;
}

CheckResult fail(CheckResult r, const std::string& why) {
  r.passed = false;
  r.detail = why;
  return r;
}

CheckResult compare_dual(const std::string& name, const BigradedGroup& a, const BigradedGroup& b, int n) {
  CheckResult r{name, true, ""};
  std::set<Bidegree> keys;
  for (const auto& [k, e] : b.entries()) keys.insert(k);
  for (const auto& [k, e] : a.entries()) {
    keys.insert({n - k.first, n - k.second});
    keys.insert({n - k.first + 1, n - k.second});
  }
  for (const auto& k : keys) {
    const Bidegree rk{n - k.first, n - k.second};
    const Bidegree tk{n - k.first + 1, n - k.second};
    if (b.at(k).rank != a.at(rk).rank) {
      std::ostringstream os;
      os << "rank at " << at(k) << " of the dual is " << b.at(k).rank << ", rank at " << at(rk) << " is "
         << a.at(rk).rank;
      return fail(r, os.str());
    }
    if (b.at(k).torsion != a.at(tk).torsion) {
      GroupEntry x, y;
      x.torsion = b.at(k).torsion;
      y.torsion = a.at(tk).torsion;
      return fail(r, "torsion at " + at(k) + " of the dual is " + entry_text(x) + ", torsion at " + at(tk) +
                         " is " + entry_text(y));
    }
  }
  r.detail = "n=" + std::to_string(n);
  return r;
}

void require_connected(const RibbonGraph& g) {
  if (!is_connected(g)) throw Error("graph is not connected");
}

}  // namespace

CheckResult check_duality(const RibbonGraph& g, int max_edges) {
  require_connected(g);
  const auto a = homology(build_complex(g, max_edges));
  const auto b = homology(build_complex(dual(g), max_edges));
  return compare_dual("duality", a, b, g.num_edges());
}

CheckResult check_reduced_duality(const RibbonGraph& g, Basepoint bp, int max_edges) {
  require_connected(g);
  const auto a = homology(build_reduced_complex(g, bp, max_edges));
  const auto b = homology(build_reduced_complex(dual(g), dual_basepoint(g, bp), max_edges));
  return compare_dual("reduced duality", a, b, g.num_edges());
}

CheckReport check_grading_theorems(const RibbonGraph& g, Basepoint bp, int max_edges) {
  require_connected(g);
  CheckReport rep;
  const auto kh = homology(build_reduced_complex(g, bp, max_edges));
  const int gen = genus(g);
  const int nv = g.num_vertices(), ne = g.num_edges();
  if (kh.empty()) {
    rep.add({"width bound", false, "reduced homology is trivial"});
    return rep;
  }

  const int hw = homological_width(kh);
  {
    CheckResult r{"width bound", hw <= gen + 1, ""};
    r.detail = "hw=" + std::to_string(hw) + " g=" + std::to_string(gen);
    rep.add(r);
  }

  int jmin = kh.entries().begin()->first.second, jmax = jmin;
  for (const auto& [k, e] : kh.entries()) {
    jmin = std::min(jmin, k.second);
    jmax = std::max(jmax, k.second);
  }
  const GroupEntry z{1, {}};

  {
    CheckResult r{"j span", jmax - jmin <= 2 * (ne - gen), ""};
    r.detail = "jmin=" + std::to_string(jmin) + " jmax=" + std::to_string(jmax);
    rep.add(r);
  }

  if (!has_loop(g)) {
    CheckResult r{"loopless", true, ""};
    const Bidegree b{0, 1 - nv};
    if (jmin != 1 - nv) {
      r = fail(r, "jmin=" + std::to_string(jmin) + ", expected " + std::to_string(1 - nv));
    } else if (kh.at(b) != z) {
      r = fail(r, "group at " + at(b) + " is " + entry_text(kh.at(b)));
    } else {
      for (const auto& [k, e] : kh.entries())
        if (k.second == jmin && k != b) r = fail(r, "extra group at " + at(k));
    }
    if (r.passed) r.detail = "Z at " + at(b);
    rep.add(r);
  }

  if (is_adequate(g)) {
    CheckResult r{"adequate", true, ""};
    const int nf = face_count_by_permutation(g);
    const Bidegree b{ne, ne + nf - 1};
    if (jmax != b.second) {
      r = fail(r, "jmax=" + std::to_string(jmax) + ", expected " + std::to_string(b.second));
    } else if (kh.at(b) != z) {
      r = fail(r, "group at " + at(b) + " is " + entry_text(kh.at(b)));
    } else if (hw != gen + 1) {
      r = fail(r, "hw=" + std::to_string(hw) + ", expected " + std::to_string(gen + 1));
    }
    if (r.passed) r.detail = "Z at " + at(b) + ", hw=" + std::to_string(hw);
    rep.add(r);
  }
  return rep;
}

CheckResult check_state_circles(const PDCode& pd) {
  CheckResult r{"state circles", true, ""};
  const RibbonGraph g = to_ribbon_graph(all_A_ribbon_graph(pd).presentation);
  const int n = pd.size();
  std::vector<int> edge(n);
  for (int k = 0; k < n; ++k) edge[k] = g.edge_with_label(k + 1);
  for (EdgeSet s = 0; s < (EdgeSet{1} << n); ++s) {
    EdgeSet h = 0;
    for (int k = 0; k < n; ++k)
      if ((s >> k) & 1) h |= EdgeSet{1} << edge[k];
    const int circles = kauffman_state(pd, s).circle_count;
    const int faces = boundary_count(g, h);
    if (circles != faces) {
      std::ostringstream os;
      os << "state " << s << ": " << circles << " circles, " << faces << " boundary components";
      return fail(r, os.str());
    }
  }
  r.detail = std::to_string(EdgeSet{1} << n) + " states";
  return r;
}

CheckResult check_assignment_independence(const RibbonGraph& g, int trials, std::mt19937_64& rng,
                                          int max_edges) {
  CheckResult r{"edge assignments", true, ""};
  const int n = g.num_edges();
  const auto base = homology(build_complex(g, EdgeAssignment::standard(n), max_edges));
  const auto rbase = homology(build_reduced_complex(g, {}, EdgeAssignment::standard(n), max_edges));
  for (int t = 0; t < trials; ++t) {
    const auto eps = EdgeAssignment::random(n, rng);
    if (!eps.satisfies_square_condition()) return fail(r, "random assignment violates the square condition");
    if (homology(build_complex(g, eps, max_edges)) != base)
      return fail(r, "homology changed under random assignment " + std::to_string(t));
    if (homology(build_reduced_complex(g, {}, eps, max_edges)) != rbase)
      return fail(r, "reduced homology changed under random assignment " + std::to_string(t));
  }
  r.detail = std::to_string(trials) + " random assignments";
  return r;
}

CheckResult check_quasi_tree_oracle(const RibbonGraph& g, int orders, std::mt19937_64& rng) {
  CheckResult r{"quasi-trees", true, ""};
  auto census = quasi_tree_census(g);
  std::sort(census.begin(), census.end());

  std::vector<EdgeOrder> all{label_order(g)};
  for (int t = 0; t < orders; ++t) {
    EdgeOrder o = all.front();
    std::shuffle(o.begin(), o.end(), rng);
    all.push_back(o);
  }
  for (const auto& order : all) {
    const auto recs = quasi_trees(g, order);
    std::vector<EdgeSet> leaves;
    for (const auto& q : recs) leaves.push_back(q.edges);
    std::sort(leaves.begin(), leaves.end());
    if (leaves != census)
      return fail(r, "resolution tree gives " + std::to_string(leaves.size()) + " quasi-trees, census " +
                         std::to_string(census.size()));
    for (const auto& q : recs) {
      const auto [i, j] = gradings_via_activities(g, q.edges, order);
      if (i != q.i || j != q.j) {
        std::ostringstream os;
        os << "quasi-tree " << q.edges << ": leaf gives " << at({q.i, q.j}) << ", activities give " << at({i, j});
        return fail(r, os.str());
      }
    }
  }
  r.detail = std::to_string(census.size()) + " quasi-trees, " + std::to_string(all.size()) + " orders";
  return r;
}

CheckResult check_euler_bridge(const RibbonGraph& g, int max_edges) {
  CheckResult r{"euler bridge", true, ""};
  const auto qt = quasi_tree_polynomial(quasi_trees(g, label_order(g)));
  const auto chi = graded_euler_characteristic(build_reduced_complex(g, {}, max_edges));
  if (qt != chi) return fail(r, "quasi-trees give " + qt.to_string() + ", complex gives " + chi.to_string());
  r.detail = chi.to_string();
  return r;
}

CheckResult check_jones_bridge(const PDCode& pd, int max_edges) {
  CheckResult r{"jones bridge", true, ""};
  const auto a = all_A_ribbon_graph(pd);
  const auto g = to_ribbon_graph(a.presentation);
  const int np = a.signs.n_plus, nm = a.signs.n_minus;
  auto chi = graded_euler_characteristic(build_reduced_complex(g, {}, max_edges)).shifted(np - 2 * nm);
  if (nm % 2) chi = LaurentPoly{} - chi;
  const auto jones = jones_expansion(pd);
  if (jones != chi) return fail(r, "expansion gives " + jones.to_string() + ", complex gives " + chi.to_string());
  r.detail = jones.to_string();
  return r;
}

CheckReport run_graph_checks(const RibbonGraph& g, Basepoint bp, std::mt19937_64& rng, int max_edges) {
  CheckReport rep;
  rep.add(check_duality(g, max_edges));
  rep.add(check_reduced_duality(g, bp, max_edges));
  rep.append(check_grading_theorems(g, bp, max_edges));
  rep.add(check_assignment_independence(g, 10, rng, max_edges));
  rep.add(check_quasi_tree_oracle(g, 10, rng));
  rep.add(check_euler_bridge(g, max_edges));
  return rep;
}

CheckReport run_link_checks(const PDCode& pd, std::mt19937_64& rng, int max_edges) {
  const auto g = to_ribbon_graph(all_A_ribbon_graph(pd).presentation);
  CheckReport rep;
  rep.add(check_state_circles(pd));
  rep.add(check_jones_bridge(pd, max_edges));
  rep.append(run_graph_checks(g, {}, rng, max_edges));
  return rep;
}

}  // namespace rkh
