#include "rkh/arrow.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <sstream>

namespace rkh {

int ArrowPresentation::num_labels() const { return static_cast<int>(sorted_labels().size()); }

std::vector<int> ArrowPresentation::sorted_labels() const {
  std::vector<int> out;
  for (const auto& c : circles)
    for (const auto& a : c) out.push_back(a.label);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void validate(const ArrowPresentation& ap) {
  std::map<int, int> count;
  for (const auto& c : ap.circles)
    for (const auto& a : c) {
      if (a.dir != 1 && a.dir != -1) throw Error("arrow direction must be + or -");
      ++count[a.label];
    }
  for (auto [label, k] : count)
    if (k != 2)
      throw Error("label " + std::to_string(label) + " appears " + std::to_string(k) +
                  " times, expected 2");
}

namespace {

// compress labels to 1..n keeping their numeric order
ArrowPresentation renumbered(const ArrowPresentation& ap) {
  const auto labels = ap.sorted_labels();
  ArrowPresentation out = ap;
  for (auto& c : out.circles)
    for (auto& a : c)
      a.label = static_cast<int>(std::lower_bound(labels.begin(), labels.end(), a.label) - labels.begin()) + 1;
  return out;
}

}  // namespace

ArrowPresentation parse_arrow_presentation(const std::string& text) {
  std::string clean;
  bool comment = false;
  for (char ch : text) {
    if (ch == '#') comment = true;
    if (ch == '\n') comment = false;
    if (!comment) clean += (ch == ';' ? '\n' : ch);
  }
  static const std::regex token(R"(^(\d+)([+-])$)");
  ArrowPresentation ap;
  std::istringstream lines(clean);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream words(line);
    std::string w;
    if (!(words >> w)) continue;
    if (w.rfind("circle:", 0) != 0) throw Error("expected 'circle:' but found '" + w + "'");
    ap.circles.emplace_back();
    std::vector<std::string> toks;
    if (w.size() > 7) toks.push_back(w.substr(7));
    while (words >> w) toks.push_back(w);
    for (const auto& t : toks) {
      std::smatch m;
      if (!std::regex_match(t, m, token)) throw Error("malformed arrow token '" + t + "'");
      int label = std::stoi(m[1]);
      if (label <= 0) throw Error("labels must be positive");
      ap.circles.back().push_back({label, m[2] == "+" ? 1 : -1});
    }
  }
  validate(ap);
  return renumbered(ap);
}

std::string emit_arrow_presentation(const ArrowPresentation& ap) {
  std::ostringstream os;
  for (const auto& c : renumbered(ap).circles) {
    os << "circle:";
    for (const auto& a : c) os << ' ' << a.label << (a.dir > 0 ? '+' : '-');
    os << '\n';
  }
  return os.str();
}

std::optional<std::vector<int>> orientation_signs(const ArrowPresentation& ap) {
  validate(ap);
  struct End {
    int circle, dir;
  };
  std::map<int, std::vector<End>> ends;
  for (int c = 0; c < static_cast<int>(ap.circles.size()); ++c)
    for (const auto& a : ap.circles[c]) ends[a.label].push_back({c, a.dir});
  std::vector<std::vector<std::pair<int, int>>> adj(ap.circles.size());
  for (const auto& [label, e] : ends) {
    // s[c1]*d1 must equal s[c2]*d2
    const int rel = e[0].dir * e[1].dir;
    if (e[0].circle == e[1].circle) {
      if (rel != 1) return std::nullopt;
      continue;
    }
    adj[e[0].circle].push_back({e[1].circle, rel});
    adj[e[1].circle].push_back({e[0].circle, rel});
  }
  std::vector<int> sign(ap.circles.size(), 0);
  for (std::size_t root = 0; root < sign.size(); ++root) {
    if (sign[root]) continue;
    sign[root] = 1;
    std::vector<int> stack{static_cast<int>(root)};
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      for (auto [d, rel] : adj[c]) {
        const int want = sign[c] * rel;
        if (sign[d] == 0) {
          sign[d] = want;
          stack.push_back(d);
        } else if (sign[d] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return sign;
}

bool check_orientable(const ArrowPresentation& ap) { return orientation_signs(ap).has_value(); }

ArrowPresentation normalized(const ArrowPresentation& ap, std::vector<int>* signs) {
  auto s = orientation_signs(ap);
  if (!s) throw Error("NonOrientable: the band gluing contains a Moebius band");
  ArrowPresentation out = ap;
  for (std::size_t c = 0; c < out.circles.size(); ++c) {
    auto& circ = out.circles[c];
    if ((*s)[c] < 0) std::reverse(circ.begin(), circ.end());
    for (auto& a : circ) a.dir = 1;
  }
  if (signs) *signs = *s;
  return out;
}

RibbonGraph to_ribbon_graph(const ArrowPresentation& ap) {
  const ArrowPresentation norm = normalized(ap);
  const std::vector<int> labels = norm.sorted_labels();
  std::map<int, int> edge;
  for (std::size_t e = 0; e < labels.size(); ++e) edge[labels[e]] = static_cast<int>(e);
  std::vector<int> seen(labels.size(), 0);
  std::vector<std::vector<int>> rot(norm.circles.size());
  for (std::size_t c = 0; c < norm.circles.size(); ++c)
    for (const auto& a : norm.circles[c]) {
      const int e = edge[a.label];
      rot[c].push_back(2 * e + seen[e]++);
    }
  return RibbonGraph(std::move(rot), labels);
}

ArrowPresentation from_ribbon_graph(const RibbonGraph& g) {
  ArrowPresentation ap;
  for (const auto& r : g.rotations()) {
    ap.circles.emplace_back();
    for (int x : r) ap.circles.back().push_back({g.label(edge_of(x)), 1});
  }
  return ap;
}

}  // namespace rkh
