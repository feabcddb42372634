#include "rkh/moves.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <sstream>

namespace rkh {

namespace {

// Circles of labels with 0 standing for the basepoint marker.
using Tokens = std::vector<int>;
using Circles = std::vector<Tokens>;

constexpr int kMarker = 0;

int arrow_count(const Tokens& t) {
  return static_cast<int>(std::count_if(t.begin(), t.end(), [](int x) { return x != kMarker; }));
}

// token index of arrow g; the end of the circle when it has no arrows
int arrow_index(const Tokens& t, int g) {
  int seen = 0;
  for (int k = 0; k < static_cast<int>(t.size()); ++k) {
    if (t[k] == kMarker) continue;
    if (seen++ == g) return k;
  }
  return static_cast<int>(t.size());
}

Tokens cyclic_slice(const Tokens& t, int from, int count) {
  Tokens out;
  const int n = static_cast<int>(t.size());
  for (int k = 0; k < count; ++k) out.push_back(t[(from + k) % n]);
  return out;
}

void check_circle(const Circles& c, int i) {
  if (i < 0 || i >= static_cast<int>(c.size()))
    throw Error("move names circle " + std::to_string(i) + " but there are " + std::to_string(c.size()));
}

void check_gap(const Tokens& t, int g) {
  const int m = arrow_count(t);
  if (g < 0 || g >= std::max(m, 1))
    throw Error("gap " + std::to_string(g) + " out of range for a circle with " + std::to_string(m) + " arrows");
}

struct Block {
  int circle = -1;
  std::vector<int> tokens;  // token index of each matched arrow
  bool marker_inside = false;
};

// all places where the arrows of one circle read `seq` consecutively
std::vector<Block> find_blocks(const Circles& cs, const std::vector<int>& seq) {
  std::vector<Block> out;
  for (int c = 0; c < static_cast<int>(cs.size()); ++c) {
    const Tokens& t = cs[c];
    std::vector<int> pos;
    for (int k = 0; k < static_cast<int>(t.size()); ++k)
      if (t[k] != kMarker) pos.push_back(k);
    const int m = static_cast<int>(pos.size());
    if (m < static_cast<int>(seq.size())) continue;
    for (int s = 0; s < m; ++s) {
      bool match = true;
      for (std::size_t k = 0; k < seq.size() && match; ++k) match = t[pos[(s + k) % m]] == seq[k];
      if (!match) continue;
      Block b;
      b.circle = c;
      for (std::size_t k = 0; k < seq.size(); ++k) b.tokens.push_back(pos[(s + k) % m]);
      const int n = static_cast<int>(t.size());
      for (std::size_t k = 0; k + 1 < seq.size(); ++k)
        for (int p = (b.tokens[k] + 1) % n; p != b.tokens[k + 1]; p = (p + 1) % n)
          if (t[p] == kMarker) b.marker_inside = true;
      out.push_back(b);
    }
  }
  return out;
}

bool overlaps(const Block& a, const Block& b) {
  if (a.circle != b.circle) return false;
  for (int x : a.tokens)
    if (std::find(b.tokens.begin(), b.tokens.end(), x) != b.tokens.end()) return true;
  return false;
}

// occurrences of a label outside a block
std::vector<std::pair<int, int>> occurrences(const Circles& cs, int label, const std::vector<Block>& skip) {
  std::vector<std::pair<int, int>> out;
  for (int c = 0; c < static_cast<int>(cs.size()); ++c)
    for (int k = 0; k < static_cast<int>(cs[c].size()); ++k) {
      if (cs[c][k] != label) continue;
      bool inside = false;
      for (const auto& b : skip)
        if (b.circle == c && std::find(b.tokens.begin(), b.tokens.end(), k) != b.tokens.end()) inside = true;
      if (!inside) out.push_back({c, k});
    }
  return out;
}

// Rewrites individual tokens: each (circle, token) maps to a replacement.
Circles rewrite(const Circles& cs, const std::map<std::pair<int, int>, std::vector<int>>& repl) {
  Circles out(cs.size());
  for (int c = 0; c < static_cast<int>(cs.size()); ++c)
    for (int k = 0; k < static_cast<int>(cs[c].size()); ++k) {
      auto it = repl.find({c, k});
      if (it == repl.end())
        out[c].push_back(cs[c][k]);
      else
        out[c].insert(out[c].end(), it->second.begin(), it->second.end());
    }
  return out;
}

struct Applied {
  Circles circles;
  bool marker_lost = false;
};

Applied apply_r3(const Circles& cs, int x, int y, int z, bool inverse) {
  const std::vector<int> head = inverse ? std::vector<int>{z, y, x} : std::vector<int>{x, y, z};
  for (const auto& b1 : find_blocks(cs, head))
    for (const auto& b2 : find_blocks(cs, inverse ? std::vector<int>{x, z} : std::vector<int>{z, x})) {
      if (overlaps(b1, b2)) continue;
      auto lone = occurrences(cs, y, {b1});
      if (lone.size() != 1) continue;
      std::map<std::pair<int, int>, std::vector<int>> repl;
      repl[{b1.circle, b1.tokens[0]}] = inverse ? std::vector<int>{x, y, z} : std::vector<int>{z, y, x};
      repl[{b1.circle, b1.tokens[1]}] = {};
      repl[{b1.circle, b1.tokens[2]}] = {};
      repl[{b2.circle, b2.tokens[0]}] = {y};
      repl[{b2.circle, b2.tokens[1]}] = {};
      repl[lone[0]] = inverse ? std::vector<int>{z, x} : std::vector<int>{x, z};
      return {rewrite(cs, repl), b1.marker_inside || b2.marker_inside};
    }
  throw Error("no Reidemeister III pattern for labels " + std::to_string(x) + " " + std::to_string(y) + " " +
              std::to_string(z));
}

Applied apply_tokens(Circles cs, const MoveSite& s, int fresh) {
  const int x = fresh, y = fresh + 1;
  if (s.kind == MoveKind::R3) {
    const auto [a, b, c] = s.labels;
    if (a == b || b == c || a == c) throw Error("Reidemeister III needs three distinct labels");
    return apply_r3(cs, a, b, c, s.inverse);
  }
  if (!s.inverse) {
    check_circle(cs, s.circle);
    check_gap(cs[s.circle], s.gap);
    Tokens& t = cs[s.circle];
    const int at = arrow_index(t, s.gap);
    switch (s.kind) {
      case MoveKind::R1VertexEdge:
        t.insert(t.begin() + at, x);
        cs.push_back({x});
        return {cs, false};
      case MoveKind::R1DoubleArrow:
        t.insert(t.begin() + at, {x, x});
        return {cs, false};
      default:
        break;
    }
    check_circle(cs, s.circle2);
    check_gap(cs[s.circle2], s.gap2);
    const Tokens& u = cs[s.circle2];
    const int at2 = arrow_index(u, s.gap2);
    if (s.circle != s.circle2) {
      Tokens merged = cyclic_slice(t, at, static_cast<int>(t.size()));
      merged.insert(merged.end(), {x, y, x});
      const Tokens r = cyclic_slice(u, at2, static_cast<int>(u.size()));
      merged.insert(merged.end(), r.begin(), r.end());
      merged.push_back(y);
      cs[s.circle] = merged;
      cs.erase(cs.begin() + s.circle2);
      return {cs, false};
    }
    const int n = static_cast<int>(t.size());
    const int len1 = n == 0 ? 0 : ((at2 - at) % n + n) % n;
    Tokens c1 = cyclic_slice(t, at, len1);
    Tokens c2 = cyclic_slice(t, n == 0 ? 0 : at2, n - len1);
    c1.push_back(y);
    c2.insert(c2.end(), {x, y, x});
    cs[s.circle] = c1;
    cs.insert(cs.begin() + s.circle + 1, c2);
    return {cs, false};
  }

  const int a = s.labels[0], b = s.labels[1];
  switch (s.kind) {
    case MoveKind::R1VertexEdge: {
      for (int c = 0; c < static_cast<int>(cs.size()); ++c) {
        if (arrow_count(cs[c]) != 1 || std::find(cs[c].begin(), cs[c].end(), a) == cs[c].end()) continue;
        const bool lost = std::find(cs[c].begin(), cs[c].end(), kMarker) != cs[c].end();
        cs.erase(cs.begin() + c);
        auto other = occurrences(cs, a, {});
        if (other.size() != 1) break;
        cs[other[0].first].erase(cs[other[0].first].begin() + other[0].second);
        return {cs, lost};
      }
      throw Error("label " + std::to_string(a) + " is not a vertex-edge pair");
    }
    case MoveKind::R1DoubleArrow: {
      auto blocks = find_blocks(cs, {a, a});
      if (blocks.empty()) throw Error("the two arrows labeled " + std::to_string(a) + " are not adjacent");
      std::map<std::pair<int, int>, std::vector<int>> repl;
      repl[{blocks[0].circle, blocks[0].tokens[0]}] = {};
      repl[{blocks[0].circle, blocks[0].tokens[1]}] = {};
      return {rewrite(cs, repl), false};
    }
    case MoveKind::R2: {
      auto blocks = find_blocks(cs, {a, b, a});
      if (blocks.empty()) throw Error("no arrows reading " + std::to_string(a) + " " + std::to_string(b) + " " +
                                      std::to_string(a));
      const Block& blk = blocks[0];
      auto other = occurrences(cs, b, {blk});
      if (other.size() != 1) throw Error("label " + std::to_string(b) + " does not close a Reidemeister II pair");
      const auto [oc, ok] = other[0];
      const Tokens& t = cs[blk.circle];
      const int n = static_cast<int>(t.size());
      const int after = (blk.tokens[2] + 1) % n;
      if (oc == blk.circle) {
        // x y x R y L
        const int len_r = ((ok - after) % n + n) % n;
        const Tokens r = cyclic_slice(t, after, len_r);
        const Tokens l = cyclic_slice(t, (ok + 1) % n, ((blk.tokens[0] - ok - 1) % n + n) % n);
        cs[blk.circle] = l;
        cs.insert(cs.begin() + blk.circle + 1, r);
        return {cs, blk.marker_inside};
      }
      // A y on one circle, B x y x on the other
      const Tokens& u = cs[oc];
      const int nu = static_cast<int>(u.size());
      Tokens w = cyclic_slice(u, (ok + 1) % nu, nu - 1);
      const Tokens bpart = cyclic_slice(t, after, ((blk.tokens[0] - after) % n + n) % n);
      w.insert(w.end(), bpart.begin(), bpart.end());
      cs[oc] = w;
      cs.erase(cs.begin() + blk.circle);
      return {cs, blk.marker_inside};
    }
    default:
      break;
  }
  throw Error("unsupported move");
}

}  // namespace

MoveSite parse_move(const std::string& line) {
  std::istringstream in(line);
  std::string verb;
  if (!(in >> verb)) throw Error("empty move");
  MoveSite s;
  s.inverse = verb.size() > 1 && verb.back() == '-';
  if (s.inverse) verb.pop_back();
  if (verb == "R1a")
    s.kind = MoveKind::R1VertexEdge;
  else if (verb == "R1b")
    s.kind = MoveKind::R1DoubleArrow;
  else if (verb == "R2")
    s.kind = MoveKind::R2;
  else if (verb == "R3")
    s.kind = MoveKind::R3;
  else
    throw Error("unknown move '" + verb + "'");

  std::vector<std::string> args;
  for (std::string a; in >> a;) args.push_back(a);
  auto number = [&](const std::string& a, char prefix) {
    static const std::regex plain(R"(\d+)");
    std::string body = a;
    if (prefix) {
      if (a.empty() || a[0] != prefix) throw Error("expected '" + std::string(1, prefix) + "<n>' but found '" + a + "'");
      body = a.substr(1);
    }
    if (!std::regex_match(body, plain)) throw Error("malformed move argument '" + a + "'");
    return std::stoi(body);
  };
  auto want = [&](std::size_t k) {
    if (args.size() != k) throw Error("move '" + line + "' expects " + std::to_string(k) + " arguments");
  };
  if (s.kind == MoveKind::R3) {
    want(3);
    for (int k = 0; k < 3; ++k) s.labels[k] = number(args[k], 0);
  } else if (s.inverse) {
    want(s.kind == MoveKind::R2 ? 2 : 1);
    for (std::size_t k = 0; k < args.size(); ++k) s.labels[k] = number(args[k], 0);
  } else if (s.kind == MoveKind::R2) {
    want(4);
    s.circle = number(args[0], 'c');
    s.gap = number(args[1], 'p');
    s.circle2 = number(args[2], 'c');
    s.gap2 = number(args[3], 'p');
  } else {
    want(2);
    s.circle = number(args[0], 'c');
    s.gap = number(args[1], 'p');
  }
  return s;
}

std::vector<MoveSite> parse_move_script(const std::string& text) {
  std::vector<MoveSite> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_move(line));
  }
  return out;
}

std::string to_string(const MoveSite& s) {
  static const char* names[] = {"R1a", "R1b", "R2", "R3"};
  std::ostringstream os;
  os << names[static_cast<int>(s.kind)] << (s.inverse ? "-" : "");
  if (s.kind == MoveKind::R3)
    os << ' ' << s.labels[0] << ' ' << s.labels[1] << ' ' << s.labels[2];
  else if (s.inverse)
    for (int k = 0; k < (s.kind == MoveKind::R2 ? 2 : 1); ++k) os << ' ' << s.labels[k];
  else {
    os << " c" << s.circle << " p" << s.gap;
    if (s.kind == MoveKind::R2) os << " c" << s.circle2 << " p" << s.gap2;
  }
  return os.str();
}

std::pair<int, int> move_shift(const MoveSite& s) {
  std::pair<int, int> r{0, 0};
  switch (s.kind) {
    case MoveKind::R1VertexEdge: r = {0, -1}; break;
    case MoveKind::R1DoubleArrow: r = {1, 2}; break;
    case MoveKind::R2: r = {1, 1}; break;
    case MoveKind::R3: r = {0, 0}; break;
  }
  if (s.inverse) r = {-r.first, -r.second};
  return r;
}

MoveResult apply_move(const ArrowPresentation& ap, const MoveSite& site, Basepoint bp) {
  std::vector<int> signs;
  const ArrowPresentation norm = normalized(ap, &signs);
  Circles cs;
  int top = 0;
  for (const auto& c : norm.circles) {
    cs.emplace_back();
    for (const auto& a : c) {
      cs.back().push_back(a.label);
      top = std::max(top, a.label);
    }
  }
  check_circle(cs, bp.vertex);
  check_gap(cs[bp.vertex], bp.gap);
  cs[bp.vertex].insert(cs[bp.vertex].begin() + arrow_index(cs[bp.vertex], bp.gap), kMarker);

  // site gaps are read on the input circles
  MoveSite s = site;
  auto flip = [&](int c, int& g) {
    if (!s.inverse && c >= 0 && c < static_cast<int>(signs.size()) && signs[c] < 0)
      g = reversed_gap(g, static_cast<int>(ap.circles[c].size()));
  };
  if (s.kind != MoveKind::R3) {
    flip(s.circle, s.gap);
    if (s.kind == MoveKind::R2) flip(s.circle2, s.gap2);
  }

  Applied res = apply_tokens(std::move(cs), s, top + 1);
  MoveResult out;
  for (const auto& t : res.circles) {
    out.presentation.circles.emplace_back();
    int gap = 0;
    for (int x : t) {
      if (x == kMarker) {
        if (!res.marker_lost)
          out.basepoint = Basepoint{static_cast<int>(out.presentation.circles.size()) - 1, gap};
        continue;
      }
      out.presentation.circles.back().push_back({x, 1});
      ++gap;
    }
  }
  if (out.basepoint) {
    const int m = static_cast<int>(out.presentation.circles[out.basepoint->vertex].size());
    if (m > 0) out.basepoint->gap %= m;
  }
  validate(out.presentation);
  if (!check_orientable(out.presentation)) throw Error("NonOrientable: the move creates a Moebius band");
  return out;
}

ArrowPresentation apply_move(const ArrowPresentation& ap, const MoveSite& site) {
  return apply_move(ap, site, Basepoint{}).presentation;
}

std::vector<MoveSite> enumerate_sites(const ArrowPresentation& ap) {
  std::vector<MoveSite> cand;
  const int nc = static_cast<int>(ap.circles.size());
  auto gaps = [&](int c) { return std::max<int>(1, static_cast<int>(ap.circles[c].size())); };
  for (int c = 0; c < nc; ++c)
    for (int g = 0; g < gaps(c); ++g) {
      cand.push_back({MoveKind::R1VertexEdge, false, c, g});
      cand.push_back({MoveKind::R1DoubleArrow, false, c, g});
      for (int d = 0; d < nc; ++d)
        for (int h = 0; h < gaps(d); ++h) cand.push_back({MoveKind::R2, false, c, g, d, h});
    }
  const auto labels = ap.sorted_labels();
  for (int a : labels) {
    MoveSite s;
    s.inverse = true;
    s.labels = {a, 0, 0};
    s.kind = MoveKind::R1VertexEdge;
    cand.push_back(s);
    s.kind = MoveKind::R1DoubleArrow;
    cand.push_back(s);
    for (int b : labels) {
      if (b == a) continue;
      s.kind = MoveKind::R2;
      s.labels = {a, b, 0};
      cand.push_back(s);
      for (int c : labels) {
        if (c == a || c == b) continue;
        cand.push_back({MoveKind::R3, false, 0, 0, 0, 0, {a, b, c}});
        cand.push_back({MoveKind::R3, true, 0, 0, 0, 0, {a, b, c}});
      }
    }
  }
  std::vector<MoveSite> out;
  for (const auto& s : cand) {
    try {
      apply_move(ap, s);
      out.push_back(s);
    } catch (const Error&) {
    }
  }
  return out;
}

InvarianceReport check_invariance(const ArrowPresentation& ap, const MoveSite& site, int max_edges) {
  InvarianceReport rep;
  rep.shift = move_shift(site);
  const RibbonGraph before = to_ribbon_graph(ap);
  const RibbonGraph after = to_ribbon_graph(apply_move(ap, site));
  rep.before = homology(build_complex(before, max_edges));
  rep.after = homology(build_complex(after, max_edges));
  rep.unreduced_ok = rep.after == shift(rep.before, rep.shift.first, rep.shift.second);

  for (int v = 0; v < before.num_vertices() && !rep.reduced_checked; ++v)
    for (int g = 0; g < std::max(1, before.degree(v)) && !rep.reduced_checked; ++g) {
      const auto moved = apply_move(ap, site, Basepoint{v, g});
      if (!moved.basepoint) continue;
      rep.reduced_checked = true;
      rep.basepoint_before = Basepoint{v, g};
      rep.basepoint_after = moved.basepoint;
      const auto rb = homology(build_reduced_complex(before, Basepoint{v, g}, max_edges));
      const auto ra = homology(build_reduced_complex(after, *moved.basepoint, max_edges));
      rep.reduced_ok = ra == shift(rb, rep.shift.first, rep.shift.second);
    }
  return rep;
}

}  // namespace rkh
