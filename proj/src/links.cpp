#include "rkh/links.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>

namespace rkh {

namespace {

struct Dart {
  int x, s;
};

// the two (crossing, slot) positions of every arc label
std::map<int, std::vector<Dart>> arc_ends(const PDCode& pd) {
  std::map<int, std::vector<Dart>> ends;
  for (int x = 0; x < pd.size(); ++x)
    for (int s = 0; s < 4; ++s) ends[pd.crossings[x][s]].push_back({x, s});
  return ends;
}

class Arcs {
 public:
  explicit Arcs(const PDCode& pd) : pd_(pd), other_(4 * pd.size()) {
    for (const auto& [label, e] : arc_ends(pd)) {
      if (e.size() != 2)
        throw Error("PD arc " + std::to_string(label) + " appears " + std::to_string(e.size()) +
                    " times, expected 2");
      other_[id(e[0])] = id(e[1]);
      other_[id(e[1])] = id(e[0]);
    }
  }
  static int id(Dart d) { return 4 * d.x + d.s; }
  int other(int d) const { return other_[d]; }
  int label(int d) const { return pd_.crossings[d / 4][d % 4]; }

 private:
  const PDCode& pd_;
  std::vector<int> other_;
};

int smoothing_partner(int d, bool b_smoothing) {
  const int x = d / 4, s = d % 4;
  static const int a_pair[4] = {1, 0, 3, 2};
  static const int b_pair[4] = {3, 2, 1, 0};
  return 4 * x + (b_smoothing ? b_pair[s] : a_pair[s]);
}

void check_planar(const PDCode& pd, const Arcs& arcs) {
  const int n = pd.size();
  if (n == 0) return;
  std::vector<char> seen(4 * n, 0);
  int faces = 0;
  for (int d = 0; d < 4 * n; ++d) {
    if (seen[d]) continue;
    ++faces;
    for (int e = d; !seen[e];) {
      seen[e] = 1;
      const int o = arcs.other(e);
      e = 4 * (o / 4) + (o % 4 + 1) % 4;
    }
  }
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int d = 0; d < 4 * n; ++d) parent[find(d / 4)] = find(arcs.other(d) / 4);
  int comps = 0;
  for (int x = 0; x < n; ++x) comps += find(x) == x;
  if (faces != n + 1 + comps) throw Error("PD code does not describe a planar diagram");
}

}  // namespace

PDCode parse_pd(const std::string& text) {
  static const std::regex cross(R"(X\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\])");
  PDCode pd;
  std::string rest;
  auto begin = std::sregex_iterator(text.begin(), text.end(), cross);
  std::size_t last = 0;
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    rest += text.substr(last, it->position() - last);
    last = it->position() + it->length();
    std::array<int, 4> c{};
    for (int k = 0; k < 4; ++k) c[k] = std::stoi((*it)[k + 1]);
    pd.crossings.push_back(c);
  }
  rest += text.substr(last);
  // strip comments and separators; anything left over is malformed
  std::string leftover;
  bool comment = false;
  for (char ch : rest) {
    if (ch == '#') comment = true;
    if (ch == '\n') comment = false;
    if (comment || std::isspace(static_cast<unsigned char>(ch)) || ch == ',') continue;
    if (ch == 'P' || ch == 'D' || ch == '[' || ch == ']') continue;
    leftover += ch;
  }
  if (!leftover.empty()) throw Error("malformed PD code near '" + leftover.substr(0, 12) + "'");
  Arcs arcs(pd);
  check_planar(pd, arcs);
  return pd;
}

std::string to_string(const PDCode& pd) {
  std::ostringstream os;
  for (std::size_t x = 0; x < pd.crossings.size(); ++x) {
    const auto& c = pd.crossings[x];
    os << (x ? " " : "") << "X[" << c[0] << ',' << c[1] << ',' << c[2] << ',' << c[3] << ']';
  }
  return os.str();
}

std::vector<int> crossing_signs(const PDCode& pd) {
  const int n = pd.size();
  Arcs arcs(pd);
  std::vector<int> dir(n, 0);
  // +1 if the arc at dart d enters the crossing, -1 if it leaves, 0 unknown
  auto role = [&](int d) {
    const int x = d / 4, s = d % 4;
    if (s == 0) return 1;
    if (s == 2) return -1;
    if (dir[x] == 0) return 0;
    return (s == 3) == (dir[x] > 0) ? 1 : -1;
  };

  // arc components for the numbering fallback
  std::map<int, int> parent;
  std::function<int(int)> find = [&](int a) {
    auto it = parent.find(a);
    if (it == parent.end() || it->second == a) return a;
    return it->second = find(it->second);
  };
  for (const auto& c : pd.crossings) {
    parent[find(c[0])] = find(c[2]);
    parent[find(c[1])] = find(c[3]);
  }
  std::map<int, std::pair<int, int>> range;
  for (const auto& c : pd.crossings)
    for (int a : c) {
      auto [it, fresh] = range.try_emplace(find(a), a, a);
      it->second.first = std::min(it->second.first, a);
      it->second.second = std::max(it->second.second, a);
    }
  auto succ = [&](int a) {
    auto [lo, hi] = range[find(a)];
    return a == hi ? lo : a + 1;
  };

  for (;;) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int d = 0; d < 4 * n; ++d) {
        const int o = arcs.other(d);
        const int rd = role(d), ro = role(o);
        if (rd != 0 && ro != 0) {
          if (rd == ro) throw Error("PD code orientation is inconsistent along arc " + std::to_string(arcs.label(d)));
          continue;
        }
        if (rd == 0 || ro != 0) continue;
        // o must play the opposite role of d
        const int x = o / 4, s = o % 4;
        const bool enters = rd < 0;
        dir[x] = ((s == 3) == enters) ? 1 : -1;
        changed = true;
      }
    }
    auto open = std::find(dir.begin(), dir.end(), 0);
    if (open == dir.end()) break;
    const auto& c = pd.crossings[open - dir.begin()];
    const bool fwd = succ(c[3]) == c[1], bwd = succ(c[1]) == c[3];
    *open = (fwd || !bwd) ? 1 : -1;
  }
  return dir;
}

SignCount sign_count(const PDCode& pd) {
  SignCount sc;
  for (int s : crossing_signs(pd)) (s > 0 ? sc.n_plus : sc.n_minus)++;
  return sc;
}

AllA all_A_ribbon_graph(const PDCode& pd) {
  const int n = pd.size();
  Arcs arcs(pd);
  AllA out;
  out.signs = sign_count(pd);
  if (n == 0) {
    out.presentation.circles.emplace_back();
    return out;
  }
  std::vector<char> seen(4 * n, 0);
  for (int start = 0; start < 4 * n; ++start) {
    if (seen[start]) continue;
    out.presentation.circles.emplace_back();
    auto& circle = out.presentation.circles.back();
    int d = start;
    do {
      seen[d] = 1;
      const int e = arcs.other(d);
      seen[e] = 1;
      const int f = smoothing_partner(e, false);
      const int se = e % 4, sf = f % 4;
      const bool plus = (se == 1 && sf == 0) || (se == 3 && sf == 2);
      circle.push_back({e / 4 + 1, plus ? 1 : -1});
      d = f;
    } while (d != start);
  }
  return out;
}

KauffmanState kauffman_state(const PDCode& pd, EdgeSet resolution) {
  const int n = pd.size();
  KauffmanState ks{resolution, 0};
  if (n == 0) {
    ks.circle_count = 1;
    return ks;
  }
  Arcs arcs(pd);
  std::vector<char> seen(4 * n, 0);
  for (int start = 0; start < 4 * n; ++start) {
    if (seen[start]) continue;
    ++ks.circle_count;
    int d = start;
    do {
      seen[d] = 1;
      const int e = arcs.other(d);
      seen[e] = 1;
      d = smoothing_partner(e, (resolution >> (e / 4)) & 1);
    } while (d != start);
  }
  return ks;
}

}  // namespace rkh
