// Command-line front end.
//
// Exit status: 0 success, 1 invalid input or unmet precondition, 2 usage,
// 3 resource bound exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "mrigid/errors.hpp"
#include "mrigid/invariants.hpp"
#include "mrigid/io.hpp"
#include "mrigid/orbit.hpp"
#include "mrigid/quiver.hpp"
#include "mrigid/reconstruct.hpp"
#include "mrigid/rigid.hpp"
#include "mrigid/svg.hpp"

using namespace mrigid;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  return slurp(in);
}

ArcCollection polygon_collection(const AbstractTiling& t, const PolygonContext& ctx) {
  if (t.marked_points != ctx.vertex_count()) {
    throw InputError("file has " + std::to_string(t.marked_points) + " points but (n, m) gives " +
                     std::to_string(ctx.vertex_count()));
  }
  std::vector<Diagonal> ds;
  for (auto [i, j] : t.arcs) ds.push_back(make_diagonal(ctx, i, j));
  return ArcCollection(ctx, std::move(ds));
}

// A tiling file becomes its tiling algebra; a quiver file is taken as is.
Quiver load_algebra(const std::string& path) {
  const std::string text = read_file(path);
  if (detect_kind(text) == FileKind::kQuiver) return parse_quiver(text);
  return tiling_algebra(parse_tiling(text));
}

Diagonal parse_pair(const PolygonContext& ctx, const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw InputError("expected i,j but got '" + s + "'");
  try {
    return make_diagonal(ctx, std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1)));
  } catch (const std::invalid_argument&) {
    throw InputError("expected i,j but got '" + s + "'");
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string census(const ArcCollection& tc) {
  std::map<std::string, int> counts;
  for (const Tile& t : extract_tiles(tc)) ++counts[to_string(classify_tile(tc.context(), t))];
  std::string out;
  for (const auto& [name, c] : counts) {
    if (!out.empty()) out += ' ';
    out += name + ":" + std::to_string(c);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal m-rigid objects of higher cluster categories of type A and their algebras"};
  app.require_subcommand(1);

  int n = 0;
  int m = 0;
  std::string file;

  auto* enumerate = app.add_subcommand("enumerate", "list maximal m-rigid collections");
  bool connected_only = false;
  bool with_census = false;
  unsigned threads = 1;
  std::size_t max_diagonals = EnumerationOptions{}.max_diagonals;
  enumerate->add_option("n", n)->required();
  enumerate->add_option("m", m)->required();
  enumerate->add_flag("--connected", connected_only, "only connected collections");
  enumerate->add_flag("--census", with_census, "append tile types to each collection");
  enumerate->add_option("--threads", threads, "worker threads (0 = all cores)");
  enumerate->add_option("--max-diagonals", max_diagonals, "refuse larger contexts");

  auto* check = app.add_subcommand("check", "rigidity, maximality, connectedness, tile criterion");
  check->add_option("tiling", file)->required();
  check->add_option("--n", n)->required();
  check->add_option("--m", m)->required();

  auto* algebra = app.add_subcommand("algebra", "tiling algebra as a quiver file");
  algebra->add_option("tiling", file)->required();

  auto* ag = app.add_subcommand("ag", "AG-invariant of a tiling or quiver");
  ag->add_option("file", file)->required();

  auto* gorenstein = app.add_subcommand("gorenstein", "Gorenstein dimension of a tiling or quiver");
  gorenstein->add_option("file", file)->required();

  auto* endalg = app.add_subcommand("endalg", "test the endomorphism-algebra conditions");
  endalg->add_option("quiver", file)->required();
  endalg->add_option("--m", m)->required();

  auto* profile = app.add_subcommand("profile", "cluster-tilted profile of a connected object");
  profile->add_option("tiling", file)->required();
  profile->add_option("--n", n)->required();
  profile->add_option("--m", m)->required();

  auto* reconstruct = app.add_subcommand("reconstruct", "tiling of a gentle algebra");
  std::optional<int> pad_m;
  std::size_t root = 0;
  reconstruct->add_option("quiver", file)->required();
  reconstruct->add_option("--m", pad_m, "pad open tiles with isolated points");
  reconstruct->add_option("--root", root, "index of the first tile's thread");

  auto* ext = app.add_subcommand("ext", "is Ext^k(b, a) non-zero");
  std::string from;
  std::string to;
  int degree = 1;
  ext->add_option("n", n)->required();
  ext->add_option("m", m)->required();
  ext->add_option("--from", from, "b as i,j")->required();
  ext->add_option("--to", to, "a as i,j")->required();
  ext->add_option("--deg", degree)->required();

  auto* render = app.add_subcommand("render", "draw a tiling as SVG");
  std::string output;
  std::optional<int> render_m;
  render->add_option("tiling", file)->required();
  render->add_option("-o,--output", output)->required();
  render->add_option("--m", render_m, "draw short arcs for this m");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*enumerate) {
      const PolygonContext ctx(n, m);
      EnumerationOptions opts;
      opts.threads = threads;
      opts.max_diagonals = max_diagonals;
      const auto found = connected_only ? enumerate_connected_maximal(ctx, opts) : enumerate_maximal(ctx, opts);
      for (const auto& tc : found) {
        std::cout << to_string(tc);
        if (with_census && is_connected(tc)) std::cout << "  [" << census(tc) << "]";
        std::cout << '\n';
      }
      std::cout << "total " << found.size() << '\n';
    } else if (*check) {
      const PolygonContext ctx(n, m);
      const ArcCollection tc = polygon_collection(parse_tiling(read_file(file)), ctx);
      const bool rigid = is_m_rigid(tc);
      const bool conn = is_connected(tc);
      std::cout << "rigid " << yes_no(rigid) << '\n';
      std::cout << "maximal " << (rigid ? yes_no(is_maximal(tc)) : "n/a") << '\n';
      std::cout << "connected " << yes_no(conn) << '\n';
      if (conn && !tc.has_crossing()) {
        const TheoremReport r = theorem_report(tc);
        std::cout << "tiles " << census(tc) << '\n';
        std::cout << "criterion " << yes_no(r.ok()) << " (classified " << yes_no(r.tiles_classified)
                  << ", flanking shorts " << yes_no(r.flanking_shorts) << ", adjacent shorts "
                  << yes_no(!r.no_adjacent_shorts) << ", isolated stretch "
                  << yes_no(!r.no_isolated_stretch) << ")\n";
      } else {
        std::cout << "criterion n/a\n";
      }
    } else if (*algebra) {
      std::cout << print_quiver(tiling_algebra(parse_tiling(read_file(file))));
    } else if (*ag) {
      std::cout << to_string(ag_invariant(load_algebra(file))) << '\n';
    } else if (*gorenstein) {
      std::cout << to_string(gorenstein_endomorphism(load_algebra(file))) << '\n';
    } else if (*endalg) {
      const Quiver q = parse_quiver(read_file(file));
      const EndAlgebraReport r = end_algebra_report(q, m);
      std::cout << "(i) " << yes_no(r.no_short_to_short_thread) << '\n'
                << "(ii) " << yes_no(r.long_forbidden_paths_end_short) << '\n'
                << "(iii) " << yes_no(r.cycles_have_length) << '\n'
                << "(iv) " << yes_no(r.relation_vertices_flanked) << '\n'
                << "(v) " << yes_no(r.companion_threads) << '\n'
                << "(vi) " << yes_no(r.no_long_pair) << '\n'
                << "endomorphism algebra " << yes_no(r.ok()) << '\n';
    } else if (*profile) {
      const PolygonContext ctx(n, m);
      const ArcCollection tc = polygon_collection(parse_tiling(read_file(file)), ctx);
      if (!is_connected(tc)) throw PreconditionError("profile needs a connected collection");
      const ClusterProfile p = cluster_profile(tc);
      for (int k = 1; k <= m + 3; ++k) std::cout << "n_" << k << " " << p.counts[k] << '\n';
      std::cout << "n'_1 " << p.n1_prime << '\n' << "n'_" << m + 3 << " " << p.nm3_prime << '\n';
      std::cout << "x " << p.x << '\n';
      std::cout << (p.needs_cut() ? "n'' " : "n' ") << p.rank << '\n';
      if (p.needs_cut()) {
        std::cout << "cut";
        for (int a : p.cut) std::cout << ' ' << a;
        std::cout << '\n';
      }
      std::cout << print_tiling(p.angulation);
    } else if (*reconstruct) {
      ReconstructOptions opts;
      opts.root = root;
      opts.m = pad_m;
      std::cout << print_tiling(tiling_from_gentle(parse_quiver(read_file(file)), opts));
    } else if (*ext) {
      const PolygonContext ctx(n, m);
      if (degree < 1 || degree > m) throw InputError("--deg must lie in 1..m");
      const bool nonzero = ext_nonzero(ctx, parse_pair(ctx, from), parse_pair(ctx, to), degree);
      std::cout << (nonzero ? "nonzero" : "zero") << '\n';
    } else if (*render) {
      const std::string svg = render_svg(parse_tiling(read_file(file)), render_m);
      std::ofstream out(output, std::ios::binary);
      if (!out) throw InputError("cannot write " + output);
      out << svg;
    }
  } catch (const ResourceError& e) {
    std::cerr << "resource bound: " << e.what() << '\n';
    return 3;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 1;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
