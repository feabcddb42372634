// Command-line front end: rkh <verb> <input> [options]

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "rkh/arrow.hpp"
#include "rkh/checks.hpp"
#include "rkh/homology.hpp"
#include "rkh/io.hpp"
#include "rkh/links.hpp"
#include "rkh/moves.hpp"
#include "rkh/quasitree.hpp"

using namespace rkh;

namespace {

enum class Format { Auto, Arrows, PD };

struct Input {
  bool is_pd = false;
  PDCode pd;
  ArrowPresentation arrows;
  RibbonGraph graph;
  SignCount signs;
};

std::string read_source(const std::string& src, bool explicit_format) {
  if (src == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(src);
  if (in) return {std::istreambuf_iterator<char>(in), {}};
  // not a file: inline text
  if (explicit_format || src.find("circle:") != std::string::npos || src.find("X[") != std::string::npos) return src;
  throw Error("cannot read input '" + src + "'");
}

// first token that is not whitespace or inside a comment
std::string leading_text(const std::string& text) {
  std::string out;
  bool comment = false;
  for (char ch : text) {
    if (ch == '#') comment = true;
    if (ch == '\n') comment = false;
    if (comment || std::isspace(static_cast<unsigned char>(ch))) continue;
    out += ch;
    if (out.size() >= 7) break;
  }
  return out;
}

Input load(const std::string& src, Format fmt) {
  const std::string text = read_source(src, fmt != Format::Auto);
  if (fmt == Format::Auto) {
    const std::string head = leading_text(text);
    if (head.rfind("X[", 0) == 0 || head.rfind("PD[", 0) == 0) fmt = Format::PD;
    else if (head.rfind("circle:", 0) == 0) fmt = Format::Arrows;
    else throw Error("cannot detect input format; use --format arrows|pd");
  }
  Input in;
  if (fmt == Format::PD) {
    in.is_pd = true;
    in.pd = parse_pd(text);
    auto a = all_A_ribbon_graph(in.pd);
    in.arrows = a.presentation;
    in.signs = a.signs;
  } else {
    in.arrows = parse_arrow_presentation(text);
  }
  in.graph = to_ribbon_graph(in.arrows);
  return in;
}

std::string read_script(const std::string& src) {
  std::ifstream f(src);
  if (f) return {std::istreambuf_iterator<char>(f), {}};
  return src;
}

void print_group(const BigradedGroup& g, bool json) {
  if (json) std::cout << to_json(g).dump() << '\n';
  else std::cout << format_table(g);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Khovanov homology of ribbon graphs"};
  app.require_subcommand(1);

  std::string source;
  Format fmt = Format::Auto;
  bool json = false, raw = false, csv = false, check_moves = false;
  std::vector<int> bp_args;
  std::string order_text;
  int max_edges = kDefaultMaxEdges;
  std::uint64_t seed = 1;
  std::vector<std::string> scripts;

  const std::map<std::string, Format> formats{{"auto", Format::Auto}, {"arrows", Format::Arrows}, {"pd", Format::PD}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("input", source, "input file, '-' for stdin, or inline text")->required();
    sub->add_option("--format", fmt, "input format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--max-edges", max_edges, "refuse graphs with more edges")->check(CLI::Range(0, 40));
    sub->add_flag("--json", json, "machine-readable output");
  };

  auto* info = app.add_subcommand("info", "vertices, edges, faces, genus, loops, adequacy");
  auto* kh = app.add_subcommand("kh", "Khovanov homology");
  auto* rkh_cmd = app.add_subcommand("rkh", "reduced Khovanov homology");
  auto* qt = app.add_subcommand("qtrees", "spanning quasi-trees with activities and gradings");
  auto* jones = app.add_subcommand("jones", "quasi-tree polynomial, or the Jones polynomial of a PD code");
  auto* dual_cmd = app.add_subcommand("dual", "arrow presentation of the dual");
  auto* move = app.add_subcommand("move", "apply a move script");
  auto* check = app.add_subcommand("check", "run the property checks");
  for (auto* s : {info, kh, rkh_cmd, qt, jones, dual_cmd, move, check}) common(s);

  for (auto* s : {kh, rkh_cmd}) s->add_flag("--raw", raw, "skip the link grading shift for PD input");
  rkh_cmd->add_option("--basepoint", bp_args, "vertex and gap")->expected(2);
  check->add_option("--basepoint", bp_args, "vertex and gap")->expected(2);
  qt->add_option("--edge-order", order_text, "edge labels from smallest, e.g. \"3,1,2\"");
  qt->add_flag("--csv", csv, "CSV output");
  move->add_option("script", scripts, "move script file or inline moves")->required();
  move->add_flag("--check", check_moves, "compare homology before and after each move");
  check->add_option("--seed", seed, "seed for random assignments and edge orders");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    const Input in = load(source, fmt);
    const RibbonGraph& g = in.graph;
    if (g.num_edges() > max_edges && !info->parsed() && !dual_cmd->parsed())
      throw Error("graph has " + std::to_string(g.num_edges()) + " edges, limit is " + std::to_string(max_edges));
    const Basepoint bp = bp_args.empty() ? Basepoint{} : Basepoint{bp_args[0], bp_args[1]};
    const int np = in.signs.n_plus, nm = in.signs.n_minus;
    const bool link_shift = in.is_pd && !raw;

    if (info->parsed()) {
      const int nf = face_count_by_permutation(g);
      const bool conn = is_connected(g);
      if (json) {
        Json j{{"vertices", g.num_vertices()}, {"edges", g.num_edges()}, {"faces", nf},
               {"connected", conn}, {"loops", has_loop(g)}, {"adequate", is_adequate(g)}};
        if (conn) j["genus"] = genus(g);
        if (in.is_pd) j["n_plus"] = np, j["n_minus"] = nm;
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "V=" << g.num_vertices() << " E=" << g.num_edges() << " F=" << nf;
        if (conn) std::cout << " g=" << genus(g);
        else std::cout << " components=" << component_count(g);
        std::cout << '\n';
        std::cout << "loops: " << (has_loop(g) ? "yes" : "no") << '\n';
        std::cout << "adequate: " << (is_adequate(g) ? "yes" : "no") << '\n';
        if (in.is_pd) std::cout << "n+=" << np << " n-=" << nm << '\n';
      }
    } else if (kh->parsed()) {
      auto h = homology(build_complex(g, max_edges));
      if (link_shift) h = shift(h, -nm, np - 2 * nm);
      print_group(h, json);
    } else if (rkh_cmd->parsed()) {
      auto h = homology(build_reduced_complex(g, bp, max_edges));
      if (link_shift) h = shift(h, -nm, np - 2 * nm);
      print_group(h, json);
    } else if (qt->parsed()) {
      const EdgeOrder order = order_text.empty() ? label_order(g) : parse_edge_order(g, order_text);
      const auto recs = quasi_trees(g, order);
      if (json) std::cout << to_json(g, recs).dump() << '\n';
      else if (csv) std::cout << quasi_tree_csv(g, recs);
      else std::cout << quasi_tree_table(g, recs);
    } else if (jones->parsed()) {
      const LaurentPoly p = in.is_pd ? jones_expansion(in.pd) : quasi_tree_polynomial(quasi_trees(g, label_order(g)));
      if (json) {
        Json t = Json::object();
        for (const auto& [e, c] : p.terms()) t[std::to_string(e)] = c;
        std::cout << t.dump() << '\n';
      } else {
        std::cout << (p.is_zero() ? "0" : p.to_string()) << '\n';
      }
    } else if (dual_cmd->parsed()) {
      std::cout << emit_arrow_presentation(from_ribbon_graph(dual(g)));
    } else if (move->parsed()) {
      std::vector<MoveSite> sites;
      for (const auto& s : scripts) {
        auto part = parse_move_script(read_script(s));
        sites.insert(sites.end(), part.begin(), part.end());
      }
      ArrowPresentation ap = in.arrows;
      bool ok = true;
      for (const auto& site : sites) {
        if (check_moves) {
          const auto rep = check_invariance(ap, site, max_edges);
          const auto [r, s] = rep.shift;
          std::cerr << to_string(site) << ": shift [" << r << "]{" << s << "} "
                    << (rep.ok() ? "invariant" : "NOT invariant") << '\n';
          ok = ok && rep.ok();
        }
        ap = apply_move(ap, site);
      }
      std::cout << emit_arrow_presentation(ap);
      return ok ? 0 : 1;
    } else if (check->parsed()) {
      std::mt19937_64 rng(seed);
      const CheckReport rep = in.is_pd ? run_link_checks(in.pd, rng, max_edges) : run_graph_checks(g, bp, rng, max_edges);
      if (json) std::cout << to_json(rep).dump() << '\n';
      else std::cout << format_report(rep);
      return rep.passed() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "rkh: error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
