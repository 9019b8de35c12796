#include "gbsr/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "gbsr/explorer.hpp"
#include "gbsr/report_json.hpp"
#include "gbsr/rigidity.hpp"

namespace gbsr {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Graph load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read graph file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_graph(text.str());
}

void print_state(std::ostream& out, const MarkedState& s, bool json) {
  if (json) {
    out << graph_json(s.graph()) << "\n";
    return;
  }
  out << serialize(s.graph());
  const auto& seed = s.seed_presentation();
  const auto gens = seed.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    out << "# " << seed.symbol(gens[i]) << " -> " << format_path(s.graph(), s.marking()[i]) << "\n";
}

void print_report(std::ostream& out, const ExploreReport& r) {
  out << "rigid: " << to_string(r.rigid) << "\n";
  out << "classes: " << r.classes.size() << "\n";
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    const auto& c = r.classes[i];
    out << "class " << i + 1 << " (seen " << c.count << "): " << canonical_form(c.graph) << "\n";
    out << "  fingerprint:";
    for (std::size_t x : c.fingerprint) out << ' ' << x;
    out << "\n  moves:";
    if (c.moves.empty()) out << " (seed)";
    for (const auto& m : c.moves) out << " [" << to_string(m) << "]";
    out << "\n";
  }
  if (!r.witness.empty()) {
    out << "witness:";
    for (const auto& m : r.witness) out << " [" << to_string(m) << "]";
    out << "\n";
  }
  if (r.bounds_hit) out << "bounds hit after " << r.states_expanded << " states\n";
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rigidity of GBS trees", "gbsr"};
  app.require_subcommand(1);

  std::string file;
  bool json = false;
  auto with_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "graph file")->required();
    sub->add_flag("--json", json, "machine-readable output");
  };

  auto* check_cmd = app.add_subcommand("check", "rigidity verdict");
  with_file(check_cmd);
  auto* reduce_cmd = app.add_subcommand("reduce", "collapse until reduced");
  with_file(reduce_cmd);
  auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz output");
  with_file(dot_cmd);

  std::vector<std::string> slide_args;
  auto* slide_cmd = app.add_subcommand("slide", "slide <end> across <end>");
  with_file(slide_cmd);
  slide_cmd->add_option("ends", slide_args, "<end> across <end>")->required()->expected(3);

  std::string edge;
  auto* collapse_cmd = app.add_subcommand("collapse", "collapse an edge");
  with_file(collapse_cmd);
  collapse_cmd->add_option("edge", edge)->required();

  std::string vertex;
  Label p = 0;
  std::vector<std::string> moved;
  auto* expand_cmd = app.add_subcommand("expand", "expand at a vertex");
  with_file(expand_cmd);
  expand_cmd->add_option("vertex", vertex)->required();
  expand_cmd->add_option("p", p)->required()->check(CLI::PositiveNumber);
  expand_cmd->add_option("ends", moved);

  Label d = 0;
  auto* induct_cmd = app.add_subcommand("induct", "induction on an ascending loop");
  with_file(induct_cmd);
  induct_cmd->add_option("d", d)->required()->check(CLI::PositiveNumber);

  ExploreBounds bounds;
  auto* explore_cmd = app.add_subcommand("explore", "search the deformation space");
  with_file(explore_cmd);
  explore_cmd->add_option("--max-extra-edges", bounds.max_extra_edges)->check(CLI::NonNegativeNumber);
  explore_cmd->add_option("--max-label", bounds.max_label)->check(CLI::PositiveNumber);
  explore_cmd->add_option("--depth", bounds.max_depth)->check(CLI::PositiveNumber);
  explore_cmd->add_option("--radius", bounds.radius)->check(CLI::PositiveNumber);

  std::string word;
  auto* length_cmd = app.add_subcommand("length", "translation length of a word");
  with_file(length_cmd);
  length_cmd->add_option("word", word)->required();

  std::vector<const char*> argv{"gbsr"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (slide_cmd->parsed() && slide_args[1] != "across")
      throw UsageError("expected 'across' between the two ends, got '" + slide_args[1] + "'");

    const Graph g = load(file);
    const MarkedState seed = MarkedState::seed(g);

    if (check_cmd->parsed()) {
      const RigidityVerdict v = check(g);
      out << (json ? verdict_json(g, v) + "\n" : describe(g, v));
    } else if (reduce_cmd->parsed()) {
      print_state(out, reduce_state(seed), json);
    } else if (dot_cmd->parsed()) {
      out << (json ? graph_json(g) + "\n" : to_dot(g));
    } else if (slide_cmd->parsed()) {
      print_state(out, slide(seed, named(g, parse_end(g, slide_args[0])), named(g, parse_end(g, slide_args[2]))), json);
    } else if (collapse_cmd->parsed()) {
      print_state(out, collapse(seed, edge), json);
    } else if (expand_cmd->parsed()) {
      std::vector<NamedEnd> ends;
      for (const auto& m : moved) ends.push_back(named(g, parse_end(g, m)));
      print_state(out, expand(seed, vertex, p, ends), json);
    } else if (induct_cmd->parsed()) {
      print_state(out, induct(seed, d), json);
    } else if (explore_cmd->parsed()) {
      if (bounds.max_label == 0) bounds.max_label = default_bounds(g).max_label;
      const ExploreReport r = explore(seed, bounds);
      if (json) {
        out << explore_json(r) << "\n";
      } else {
        print_report(out, r);
      }
    } else if (length_cmd->parsed()) {
      const Presentation& pres = seed.presentation();
      const std::size_t len = translation_length(g, pres.to_path_word(parse_word(pres, word)));
      out << (json ? "{\"length\": " + std::to_string(len) + "}" : std::to_string(len)) << "\n";
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace gbsr
