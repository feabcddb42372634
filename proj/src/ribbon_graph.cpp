#include "rkh/ribbon_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace rkh {

RibbonGraph::RibbonGraph(std::vector<std::vector<int>> rotations, std::vector<int> labels)
    : rotations_(std::move(rotations)), labels_(std::move(labels)) {
  std::size_t total = 0;
  for (const auto& r : rotations_) total += r.size();
  if (total % 2 != 0) throw Error("rotation system has an odd number of half-edges");
  const int n = static_cast<int>(total / 2);
  if (labels_.empty()) {
    labels_.resize(n);
    std::iota(labels_.begin(), labels_.end(), 1);
  }
  if (static_cast<int>(labels_.size()) != n) throw Error("edge label count does not match rotation system");
  if (std::set<int>(labels_.begin(), labels_.end()).size() != labels_.size())
    throw Error("edge labels must be distinct");

  vertex_of_.assign(2 * n, -1);
  position_of_.assign(2 * n, -1);
  for (int v = 0; v < num_vertices(); ++v) {
    for (int p = 0; p < degree(v); ++p) {
      int h = rotations_[v][p];
      if (h < 0 || h >= 2 * n || vertex_of_[h] != -1)
        throw Error("rotation system is not a permutation of the half-edges");
      vertex_of_[h] = v;
      position_of_[h] = p;
    }
  }
}

int RibbonGraph::next(int h) const {
  const auto& r = rotations_[vertex_of_[h]];
  int p = position_of_[h] + 1;
  return r[p == static_cast<int>(r.size()) ? 0 : p];
}

int RibbonGraph::edge_with_label(int label) const {
  for (int e = 0; e < num_edges(); ++e)
    if (labels_[e] == label) return e;
  return -1;
}

EdgeSet RibbonGraph::all_edges() const {
  return num_edges() >= 64 ? ~EdgeSet{0} : ((EdgeSet{1} << num_edges()) - 1);
}

int corner_count(const RibbonGraph& g) { return g.num_half_edges() + g.num_vertices(); }

int basepoint_corner(const RibbonGraph& g, Basepoint bp) {
  if (bp.vertex < 0 || bp.vertex >= g.num_vertices()) throw Error("basepoint vertex out of range");
  const int k = g.degree(bp.vertex);
  if (k == 0) {
    if (bp.gap != 0) throw Error("basepoint gap out of range");
    return g.num_half_edges() + bp.vertex;
  }
  if (bp.gap < 0 || bp.gap >= k) throw Error("basepoint gap out of range");
  return g.rotation(bp.vertex)[(bp.gap + k - 1) % k];
}

namespace {

bool present(EdgeSet h, int half) { return (h >> edge_of(half)) & 1; }

int next_present(const RibbonGraph& g, EdgeSet h, int p) {
  const auto& r = g.rotation(g.vertex_of(p));
  const int k = static_cast<int>(r.size());
  int pos = g.position_of(p);
  for (int s = 1; s <= k; ++s) {
    int q = r[(pos + s) % k];
    if (present(h, q)) return q;
  }
  return p;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

BoundaryWalkSet boundary_components(const RibbonGraph& g, EdgeSet h) {
  const int nh = g.num_half_edges();
  std::vector<int> arc_comp(nh, -1);
  std::vector<std::vector<int>> raw_walks;

  for (int p = 0; p < nh; ++p) {
    if (!present(h, p) || arc_comp[p] != -1) continue;
    const int id = static_cast<int>(raw_walks.size());
    raw_walks.emplace_back();
    int x = p;
    do {
      arc_comp[x] = id;
      raw_walks[id].push_back(x);
      x = partner(next_present(g, h, x));
    } while (x != p);
  }

  std::vector<int> corner(corner_count(g), -1);
  for (int v = 0; v < g.num_vertices(); ++v) {
    const auto& r = g.rotation(v);
    const int k = g.degree(v);
    if (k == 0) {
      corner[nh + v] = static_cast<int>(raw_walks.size());
      raw_walks.emplace_back();
      continue;
    }
    int start = -1;
    for (int p = 0; p < k; ++p)
      if (present(h, r[p])) {
        start = p;
        break;
      }
    if (start < 0) {
      const int id = static_cast<int>(raw_walks.size());
      raw_walks.emplace_back();
      for (int x : r) corner[x] = id;
      continue;
    }
    int last = r[start];
    for (int s = 0; s < k; ++s) {
      int x = r[(start + s) % k];
      if (present(h, x)) last = x;
      corner[x] = arc_comp[last];
    }
  }

  const int raw = static_cast<int>(raw_walks.size());
  std::vector<int> min_corner(raw, -1);
  for (int c = 0; c < static_cast<int>(corner.size()); ++c)
    if (corner[c] >= 0 && min_corner[corner[c]] < 0) min_corner[corner[c]] = c;
  std::vector<int> order(raw);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return min_corner[a] < min_corner[b]; });
  std::vector<int> rank(raw);
  for (int i = 0; i < raw; ++i) rank[order[i]] = i;

  BoundaryWalkSet out;
  out.count = raw;
  out.walks.resize(raw);
  for (int i = 0; i < raw; ++i) out.walks[rank[i]] = std::move(raw_walks[i]);
  for (auto& c : corner)
    if (c >= 0) c = rank[c];
  out.corner_component = std::move(corner);
  return out;
}

int boundary_count(const RibbonGraph& g, EdgeSet h) {
  const int nh = g.num_half_edges();
  std::vector<char> seen(nh, 0);
  int count = 0;
  for (int p = 0; p < nh; ++p) {
    if (!present(h, p) || seen[p]) continue;
    ++count;
    int x = p;
    do {
      seen[x] = 1;
      x = partner(next_present(g, h, x));
    } while (x != p);
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    bool any = false;
    for (int x : g.rotation(v)) any = any || present(h, x);
    if (!any) ++count;
  }
  return count;
}

int face_count_by_permutation(const RibbonGraph& g) {
  const int nh = g.num_half_edges();
  std::vector<char> seen(nh, 0);
  int count = 0;
  for (int p = 0; p < nh; ++p) {
    if (seen[p]) continue;
    ++count;
    for (int x = p; !seen[x]; x = g.next(partner(x))) seen[x] = 1;
  }
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) == 0) ++count;
  return count;
}

std::vector<int> vertex_components(const RibbonGraph& g, EdgeSet h, int* count) {
  UnionFind uf(g.num_vertices());
  for (int e = 0; e < g.num_edges(); ++e)
    if ((h >> e) & 1) uf.unite(g.vertex_of(2 * e), g.vertex_of(2 * e + 1));
  std::vector<int> id(g.num_vertices(), -1), comp(g.num_vertices());
  int c = 0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    int r = uf.find(v);
    if (id[r] < 0) id[r] = c++;
    comp[v] = id[r];
  }
  if (count) *count = c;
  return comp;
}

int component_count(const RibbonGraph& g, EdgeSet h) {
  int c = 0;
  vertex_components(g, h, &c);
  return c;
}

int component_count(const RibbonGraph& g) { return component_count(g, g.all_edges()); }

bool is_connected(const RibbonGraph& g) { return component_count(g) <= 1; }

int genus(const RibbonGraph& g, EdgeSet h) {
  const int twice = 2 * component_count(g, h) - g.num_vertices() + popcount(h) - boundary_count(g, h);
  return twice / 2;
}

int genus(const RibbonGraph& g) { return genus(g, g.all_edges()); }

RibbonGraph dual(const RibbonGraph& g) {
  const int nh = g.num_half_edges();
  std::vector<char> seen(nh, 0);
  std::vector<std::vector<int>> rot;
  for (int p = 0; p < nh; ++p) {
    if (seen[p]) continue;
    rot.emplace_back();
    for (int x = p; !seen[x]; x = g.next(partner(x))) {
      seen[x] = 1;
      rot.back().push_back(x);
    }
  }
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) == 0) rot.emplace_back();
  return RibbonGraph(std::move(rot), g.labels());
}

Basepoint dual_basepoint(const RibbonGraph& g, Basepoint bp) {
  const int c = basepoint_corner(g, bp);
  const RibbonGraph d = dual(g);
  if (c >= g.num_half_edges()) {
    // isolated vertices come last in the dual, in their original order
    int isolated = 0, before = 0;
    for (int v = 0; v < g.num_vertices(); ++v)
      if (g.degree(v) == 0) {
        ++isolated;
        before += v < bp.vertex;
      }
    return {d.num_vertices() - isolated + before, 0};
  }
  const int h = partner(c);
  const int v = d.vertex_of(h);
  return {v, (d.position_of(h) + 1) % d.degree(v)};
}

RibbonGraph spanning_subgraph(const RibbonGraph& g, EdgeSet h) {
  std::vector<int> new_edge(g.num_edges(), -1);
  std::vector<int> labels;
  for (int e = 0; e < g.num_edges(); ++e)
    if ((h >> e) & 1) {
      new_edge[e] = static_cast<int>(labels.size());
      labels.push_back(g.label(e));
    }
  std::vector<std::vector<int>> rot(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v)
    for (int x : g.rotation(v))
      if (new_edge[edge_of(x)] >= 0) rot[v].push_back(2 * new_edge[edge_of(x)] + (x & 1));
  return RibbonGraph(std::move(rot), std::move(labels));
}

RibbonGraph delete_edge(const RibbonGraph& g, int e) {
  if (e < 0 || e >= g.num_edges()) throw Error("unknown edge");
  return spanning_subgraph(g, g.all_edges() & ~(EdgeSet{1} << e));
}

namespace {

// rotation at h's vertex read from just after h, stopping before stop
std::vector<int> read_after(const RibbonGraph& g, int h, int stop) {
  std::vector<int> out;
  for (int x = g.next(h); x != stop && x != h; x = g.next(x)) out.push_back(x);
  return out;
}

int renumber(int x, int e) { return edge_of(x) > e ? x - 2 : x; }

}  // namespace

RibbonGraph contract_edge(const RibbonGraph& g, int e) {
  if (e < 0 || e >= g.num_edges()) throw Error("unknown edge");
  const int a = 2 * e, b = 2 * e + 1;
  const int u = g.vertex_of(a), v = g.vertex_of(b);
  std::vector<std::vector<int>> rot;
  if (u != v) {
    for (int w = 0; w < g.num_vertices(); ++w) {
      if (w == v) continue;
      if (w == u) {
        auto merged = read_after(g, a, a);
        auto rest = read_after(g, b, b);
        merged.insert(merged.end(), rest.begin(), rest.end());
        rot.push_back(std::move(merged));
      } else {
        rot.push_back(g.rotation(w));
      }
    }
  } else {
    rot = g.rotations();
    rot[u] = read_after(g, a, b);
    rot.push_back(read_after(g, b, a));
  }
  for (auto& r : rot)
    for (auto& x : r) x = renumber(x, e);
  std::vector<int> labels = g.labels();
  labels.erase(labels.begin() + e);
  return RibbonGraph(std::move(rot), std::move(labels));
}

EdgeKind classify_edge(const RibbonGraph& g, int e) {
  if (e < 0 || e >= g.num_edges()) throw Error("unknown edge");
  const int before = component_count(g);
  if (g.is_loop(e))
    return component_count(contract_edge(g, e)) > before ? EdgeKind::SeparatingLoop
                                                         : EdgeKind::NonseparatingLoop;
  return component_count(delete_edge(g, e)) > before ? EdgeKind::Bridge : EdgeKind::Ordinary;
}

const char* to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::Bridge: return "bridge";
    case EdgeKind::SeparatingLoop: return "separating-loop";
    case EdgeKind::NonseparatingLoop: return "nonseparating-loop";
    case EdgeKind::Ordinary: return "ordinary";
  }
  return "?";
}

bool has_loop(const RibbonGraph& g) {
  for (int e = 0; e < g.num_edges(); ++e)
    if (g.is_loop(e)) return true;
  return false;
}

bool is_adequate(const RibbonGraph& g) { return !has_loop(g) && !has_loop(dual(g)); }

namespace {

std::vector<int> code_from(const RibbonGraph& g, int start) {
  const int nh = g.num_half_edges();
  std::vector<int> id(nh, -1), order;
  id[start] = 0;
  order.push_back(start);
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (int y : {g.next(order[k]), partner(order[k])}) {
      if (id[y] < 0) {
        id[y] = static_cast<int>(order.size());
        order.push_back(y);
      }
    }
  }
  std::vector<int> code;
  code.reserve(2 * order.size());
  for (int x : order) {
    code.push_back(id[g.next(x)]);
    code.push_back(id[partner(x)]);
  }
  return code;
}

}  // namespace

std::vector<std::vector<int>> canonical_form(const RibbonGraph& g) {
  auto comp = vertex_components(g, g.all_edges());
  std::vector<std::vector<int>> out;
  std::vector<char> done(g.num_vertices(), 0);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (done[comp[v]]) continue;
    done[comp[v]] = 1;
    std::vector<int> best;
    for (int x = 0; x < g.num_half_edges(); ++x) {
      if (comp[g.vertex_of(x)] != comp[v]) continue;
      auto c = code_from(g, x);
      if (best.empty() || c < best) best = std::move(c);
    }
    out.push_back(std::move(best));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool isomorphic(const RibbonGraph& a, const RibbonGraph& b) {
  return a.num_vertices() == b.num_vertices() && a.num_edges() == b.num_edges() &&
         canonical_form(a) == canonical_form(b);
}

RibbonGraph random_ribbon_graph(int vertices, int edges, std::mt19937_64& rng) {
  if (vertices < 1 || edges < vertices - 1) throw Error("too few edges for a connected graph");
  std::vector<std::pair<int, int>> ends;
  for (int v = 1; v < vertices; ++v)
    ends.emplace_back(v, std::uniform_int_distribution<int>(0, v - 1)(rng));
  std::uniform_int_distribution<int> any(0, vertices - 1);
  while (static_cast<int>(ends.size()) < edges) ends.emplace_back(any(rng), any(rng));
  std::shuffle(ends.begin(), ends.end(), rng);
  std::vector<std::vector<int>> rot(vertices);
  for (int e = 0; e < edges; ++e) {
    auto [a, b] = ends[e];
    if (rng() & 1) std::swap(a, b);
    rot[a].push_back(2 * e);
    rot[b].push_back(2 * e + 1);
  }
  for (auto& r : rot) std::shuffle(r.begin(), r.end(), rng);
  return RibbonGraph(std::move(rot));
}

std::string describe(const RibbonGraph& g) {
  std::ostringstream os;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (v) os << " | ";
    os << "v" << v << ":";
    for (int x : g.rotation(v)) os << ' ' << g.label(edge_of(x));
  }
  return os.str();
}

}  // namespace rkh
