#include "valmat/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "valmat/ends.hpp"
#include "valmat/errors.hpp"
#include "valmat/io.hpp"
#include "valmat/reconstruct.hpp"

namespace valmat {

namespace {

using nlohmann::ordered_json;

std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream file(path);
  if (!file) throw domain_error("cannot open \"" + path + "\"");
  std::stringstream ss;
  ss << file.rdbuf();
  return ss.str();
}

/// Loads and fully validates an instance: structure, base exchange, (EXC).
Valuation load_valuation(const std::string& path, std::istream& in) {
  Valuation v = parse_instance(read_input(path, in));
  if (auto fail = find_exchange_failure(v.family()))
    throw domain_error("family is not a matroid (exchange fails dropping \"" +
                       v.ground().label(fail->drop) + "\")");
  if (auto cex = check_exc(v))
    throw domain_error("instance violates the exchange axiom (validate for details)");
  return v;
}

ordered_json point_json(const GroundSet& g, const Point& p) {
  ordered_json out;
  for (int i = 0; i < g.size(); ++i) out[g.label(i)] = p[i];
  return out;
}

ordered_json rational_point_json(const GroundSet& g, const RationalPoint& p) {
  ordered_json out;
  for (int i = 0; i < g.size(); ++i) out[g.label(i)] = rat_to_string(p[i]);
  return out;
}

ordered_json base_json(const GroundSet& g, Subset b) {
  return ordered_json(g.subset_labels(b));
}

void emit(std::ostream& out, const ordered_json& doc) { out << doc.dump(2) << "\n"; }

/// Deterministic member sampling: seeded random walk through covers and
/// cocovers.
std::vector<LatticePoint> walk_members(const Valuation& v, unsigned seed, int count,
                                       int steps) {
  std::mt19937 rng(seed);
  std::vector<LatticePoint> out;
  LatticePoint base = find_point(v);
  for (int i = 0; i < count; ++i) {
    LatticePoint p = base;
    for (int s = 0; s < steps; ++s) {
      bool up = rng() % 2 == 0;
      auto moves = up ? covers(v, p) : cocovers(v, p);
      if (moves.empty()) continue;
      p = moves[rng() % moves.size()];
    }
    out.push_back(std::move(p));
  }
  return out;
}

struct Options {
  std::string input;
  std::string point;
  std::string point2;
  std::string base;
  std::string chain;
  std::string start;
  std::string element;
  std::string element2;
  std::string labels;
  int rank = 0;
  int depth = 3;
  int samples = 20;
  unsigned seed = 1;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"valuated matroids, tropical linear spaces, and their lattices"};
  app.require_subcommand(1);
  Options opt;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--input", opt.input, "instance file (default: stdin)");
  };
  auto make = [&](const std::string& name, const std::string& help, bool input = true) {
    CLI::App* cmd = app.add_subcommand(name, help);
    if (input) add_input(cmd);
    return cmd;
  };

  CLI::App* validate = make("validate", "check the matroid and exchange axioms");
  CLI::App* maximize_cmd = make("maximize", "maximize the valuation by local exchanges");
  maximize_cmd->add_option("--start", opt.start, "starting base (labels, default first)");
  CLI::App* member = make("member", "tropical linear space membership");
  member->add_option("--point", opt.point)->required();
  CLI::App* height_cmd = make("height", "lattice height of a member");
  height_cmd->add_option("--point", opt.point)->required();
  CLI::App* covers_cmd = make("covers", "points covering a member");
  covers_cmd->add_option("--point", opt.point)->required();
  CLI::App* cocovers_cmd = make("cocovers", "points covered by a member");
  cocovers_cmd->add_option("--point", opt.point)->required();
  CLI::App* meet_cmd = make("meet", "lattice meet of two members");
  meet_cmd->add_option("--point", opt.point)->required();
  meet_cmd->add_option("--point2", opt.point2)->required();
  CLI::App* join_cmd = make("join", "lattice join of two members");
  join_cmd->add_option("--point", opt.point)->required();
  join_cmd->add_option("--point2", opt.point2)->required();
  CLI::App* interval_cmd = make("interval", "all members between two points");
  interval_cmd->add_option("--point", opt.point)->required();
  interval_cmd->add_option("--point2", opt.point2)->required();
  CLI::App* segment_cmd = make("segment", "is a cover chain a segment");
  segment_cmd->add_option("--chain", opt.chain, "semicolon-separated points")->required();
  make("find-point", "find some member");
  CLI::App* floor_cmd = make("floor", "floor of a rational member");
  floor_cmd->add_option("--point", opt.point)->required();
  CLI::App* decompose_cmd = make("decompose", "flat-chain decomposition of a rational member");
  decompose_cmd->add_option("--point", opt.point)->required();
  CLI::App* delta_cmd = make("delta", "ray separation depth of two elements");
  delta_cmd->add_option("--point", opt.point)->required();
  delta_cmd->add_option("-e,--element", opt.element)->required();
  delta_cmd->add_option("-f,--element2", opt.element2)->required();
  CLI::App* metric_cmd = make("metric", "all pairwise ray separation depths");
  metric_cmd->add_option("--point", opt.point)->required();
  CLI::App* xb_cmd = make("xb", "project a member onto the skeleton of a base");
  xb_cmd->add_option("--point", opt.point)->required();
  xb_cmd->add_option("--base", opt.base)->required();
  CLI::App* reconstruct_cmd = make("reconstruct", "read the valuation back off the lattice");
  reconstruct_cmd->add_option("--point", opt.point, "basepoint (default: find-point)");
  CLI::App* roundtrip_cmd = make("roundtrip", "verify the reconstruction identity");
  roundtrip_cmd->add_option("--point", opt.point, "basepoint (default: find-point)");
  CLI::App* skeleton_cmd = make("skeleton", "is a member on the skeleton of a base");
  skeleton_cmd->add_option("--point", opt.point)->required();
  skeleton_cmd->add_option("--base", opt.base)->required();
  make("infinity", "matroid at infinity");
  CLI::App* modular_cmd = make("modular-probe", "sample pairs for lattice modularity");
  modular_cmd->add_option("--point", opt.point, "first point of an explicit pair");
  modular_cmd->add_option("--point2", opt.point2, "second point of an explicit pair");
  modular_cmd->add_option("--samples", opt.samples, "random pairs to draw");
  modular_cmd->add_option("--seed", opt.seed, "sampling seed");
  CLI::App* gen_tree = make("gen-tree", "compile a tree document into an instance");
  CLI::App* gen_poly = make("gen-poly", "compile a polynomial matrix into an instance");
  (void)gen_tree;
  (void)gen_poly;
  CLI::App* gen_uniform = make("gen-uniform", "zero valuation on a uniform matroid", false);
  gen_uniform->add_option("--labels", opt.labels, "comma-separated labels")->required();
  gen_uniform->add_option("--rank", opt.rank)->required();
  CLI::App* dot_cmd = make("export-dot", "DOT diagram of an interval");
  dot_cmd->add_option("--point", opt.point)->required();
  dot_cmd->add_option("--point2", opt.point2)->required();

  try {
    std::vector<std::string> argv_vec{"valmat"};
    argv_vec.insert(argv_vec.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_vec) argv.push_back(a.data());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(validate)) {
      Valuation v = parse_instance(read_input(opt.input, in));
      ordered_json doc;
      if (auto fail = find_exchange_failure(v.family())) {
        doc["valid"] = false;
        doc["reason"] = "base-exchange";
        doc["counterexample"] = {{"base", base_json(v.ground(), fail->b)},
                                 {"base2", base_json(v.ground(), fail->bprime)},
                                 {"drop", v.ground().label(fail->drop)}};
        emit(out, doc);
        return 1;
      }
      if (auto cex = check_exc(v)) {
        doc["valid"] = false;
        doc["reason"] = "exchange-axiom";
        doc["counterexample"] = {{"base", base_json(v.ground(), cex->b)},
                                 {"base2", base_json(v.ground(), cex->bprime)},
                                 {"drop", v.ground().label(cex->drop)}};
        emit(out, doc);
        return 1;
      }
      doc["valid"] = true;
      doc["rank"] = v.rank();
      doc["bases"] = v.family().base_count();
      doc["simple"] = is_simple(v);
      emit(out, doc);
      return 0;
    }

    if (app.got_subcommand("gen-uniform")) {
      std::vector<std::string> labels;
      std::stringstream ss(opt.labels);
      std::string item;
      while (std::getline(ss, item, ','))
        if (!item.empty()) labels.push_back(item);
      Valuation v = gen_uniform_zero(labels, opt.rank);
      out << emit_instance(v, std::string("{\"generator\":\"uniform\",\"rank\":") +
                                  std::to_string(opt.rank) + "}");
      return 0;
    }
    if (app.got_subcommand("gen-tree")) {
      TreeInstance t = parse_tree(read_input(opt.input, in));
      out << emit_instance(gen_tree_metric(t), std::string("{\"generator\":\"tree\"}"));
      return 0;
    }
    if (app.got_subcommand("gen-poly")) {
      PolyMatrix m = parse_poly_matrix(read_input(opt.input, in));
      out << emit_instance(gen_representable(m),
                           std::string("{\"generator\":\"poly-matrix\"}"));
      return 0;
    }

    Valuation v = load_valuation(opt.input, in);
    const GroundSet& g = v.ground();

    if (app.got_subcommand(maximize_cmd)) {
      Subset start =
          opt.start.empty() ? v.family().bases().front() : parse_subset(g, opt.start);
      auto [base, value] = maximize(v, start);
      emit(out, {{"base", base_json(g, base)}, {"value", value}});
    } else if (app.got_subcommand(member)) {
      RationalPoint x = parse_rational_point(g, opt.point);
      bool integral = std::all_of(x.begin(), x.end(), rat_is_integer);
      bool result;
      if (integral) {
        Point p(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) p[i] = x[i].numerator();
        result = is_member(v, p);
      } else {
        result = is_member_tw(v, x);
      }
      emit(out, {{"member", result}});
    } else if (app.got_subcommand(height_cmd)) {
      LatticePoint x = certify(v, parse_point(g, opt.point));
      emit(out, {{"height", height(v, x)}});
    } else if (app.got_subcommand(covers_cmd)) {
      LatticePoint x = certify(v, parse_point(g, opt.point));
      ordered_json list = ordered_json::array();
      auto classes = x.local.parallel_classes();
      auto ups = covers(v, x);
      for (std::size_t i = 0; i < ups.size(); ++i)
        list.push_back({{"point", point_json(g, ups[i].point)},
                        {"class", base_json(g, classes[i])}});
      emit(out, {{"covers", list}});
    } else if (app.got_subcommand(cocovers_cmd)) {
      LatticePoint x = certify(v, parse_point(g, opt.point));
      ordered_json list = ordered_json::array();
      auto hyperplanes = x.local.hyperplanes();
      auto downs = cocovers(v, x);
      for (std::size_t i = 0; i < downs.size(); ++i)
        list.push_back({{"point", point_json(g, downs[i].point)},
                        {"hyperplane", base_json(g, hyperplanes[i])}});
      emit(out, {{"cocovers", list}});
    } else if (app.got_subcommand(meet_cmd)) {
      LatticePoint x = certify(v, parse_point(g, opt.point));
      LatticePoint y = certify(v, parse_point(g, opt.point2));
      emit(out, {{"point", point_json(g, meet(v, x, y).point)}});
    } else if (app.got_subcommand(join_cmd)) {
      LatticePoint x = certify(v, parse_point(g, opt.point));
      LatticePoint y = certify(v, parse_point(g, opt.point2));
      emit(out, {{"point", point_json(g, join(v, x, y).point)}});
    } else if (app.got_subcommand(interval_cmd)) {
      LatticePoint x = certify(v, parse_point(g, opt.point));
      LatticePoint y = certify(v, parse_point(g, opt.point2));
      ordered_json list = ordered_json::array();
      auto points = interval(v, x, y);
      for (const auto& p : points) list.push_back(point_json(g, p.point));
      emit(out, {{"count", points.size()}, {"points", list}});
    } else if (app.got_subcommand(segment_cmd)) {
      std::vector<Point> chain;
      std::stringstream ss(opt.chain);
      std::string item;
      while (std::getline(ss, item, ';')) chain.push_back(parse_point(g, item));
      emit(out, {{"segment", is_segment(v, chain)}});
    } else if (app.got_subcommand("find-point")) {
      emit(out, {{"point", point_json(g, find_point(v).point)}});
    } else if (app.got_subcommand(floor_cmd)) {
      RationalPoint x = parse_rational_point(g, opt.point);
      emit(out, {{"point", point_json(g, floor_point(v, x))}});
    } else if (app.got_subcommand(decompose_cmd)) {
      RationalPoint x = parse_rational_point(g, opt.point);
      FlatChainDecomposition d = decompose(v, x);
      ordered_json chain = ordered_json::array();
      for (const auto& [flat, coeff] : d.chain)
        chain.push_back({{"flat", base_json(g, flat)},
                         {"coefficient", rat_to_string(coeff)}});
      emit(out, {{"base", point_json(g, d.base)}, {"chain", chain}});
    } else if (app.got_subcommand(delta_cmd)) {
      LatticePoint x = certify(v, parse_point(g, opt.point));
      emit(out, {{"delta", delta(v, x, g.index(opt.element), g.index(opt.element2))}});
    } else if (app.got_subcommand(metric_cmd)) {
      LatticePoint x = certify(v, parse_point(g, opt.point));
      UltrametricMatrix m = ultrametric_matrix(v, x);
      ordered_json rows = ordered_json::array();
      for (int i = 0; i < g.size(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < g.size(); ++j) {
          if (m.delta[i][j])
            row.push_back(*m.delta[i][j]);
          else
            row.push_back(nullptr);
        }
        rows.push_back(row);
      }
      emit(out, {{"elements", m.labels}, {"delta", rows}});
    } else if (app.got_subcommand(xb_cmd)) {
      LatticePoint x = certify(v, parse_point(g, opt.point));
      Subset b = parse_subset(g, opt.base);
      emit(out, {{"point", point_json(g, project_xb(v, x, b).point)}});
    } else if (app.got_subcommand(reconstruct_cmd)) {
      LatticePoint x =
          opt.point.empty() ? find_point(v) : certify(v, parse_point(g, opt.point));
      Valuation rebuilt = omega_from_lattice(v, x);
      ordered_json basepoint = point_json(g, x.point);
      out << emit_instance(rebuilt, std::string("{\"generator\":\"reconstruction\","
                                                "\"basepoint\":") +
                                        basepoint.dump() + "}");
    } else if (app.got_subcommand(roundtrip_cmd)) {
      LatticePoint x =
          opt.point.empty() ? find_point(v) : certify(v, parse_point(g, opt.point));
      RationalPoint witness = roundtrip_check(v, x);
      emit(out, {{"equivalent", true},
                 {"basepoint", point_json(g, x.point)},
                 {"witness", rational_point_json(g, witness)},
                 {"bases_checked", v.family().base_count()}});
    } else if (app.got_subcommand(skeleton_cmd)) {
      LatticePoint x = certify(v, parse_point(g, opt.point));
      Subset b = parse_subset(g, opt.base);
      emit(out, {{"member", skeleton_member(v, b, x)}});
    } else if (app.got_subcommand("infinity")) {
      BaseFamily inf = matroid_at_infinity(v);
      ordered_json bases = ordered_json::array();
      for (Subset b : inf.bases()) bases.push_back(base_json(g, b));
      emit(out, {{"rank", inf.rank()},
                 {"bases", bases},
                 {"matches_underlying", inf == v.family()}});
    } else if (app.got_subcommand(modular_cmd)) {
      std::vector<std::pair<Point, Point>> sample;
      if (!opt.point.empty() || !opt.point2.empty()) {
        if (opt.point.empty() || opt.point2.empty())
          throw domain_error("explicit pairs need both --point and --point2");
        sample.emplace_back(parse_point(g, opt.point), parse_point(g, opt.point2));
      } else {
        auto walks = walk_members(v, opt.seed, 2 * opt.samples, 4);
        for (int i = 0; i + 1 < static_cast<int>(walks.size()); i += 2)
          sample.emplace_back(walks[i].point, walks[i + 1].point);
      }
      ModularReport report = modular_probe(v, sample);
      ordered_json violations = ordered_json::array();
      for (const auto& viol : report.violations)
        violations.push_back({{"point", point_json(g, viol.x)},
                              {"point2", point_json(g, viol.y)},
                              {"height_sum", viol.height_sum},
                              {"meet_join_sum", viol.meet_join_sum}});
      emit(out, {{"pairs", report.pairs_checked},
                 {"modular", report.all_modular()},
                 {"violations", violations}});
    } else if (app.got_subcommand(dot_cmd)) {
      LatticePoint x = certify(v, parse_point(g, opt.point));
      LatticePoint y = certify(v, parse_point(g, opt.point2));
      out << export_dot(v, x, y);
    }
    return 0;
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const theorem_violation& e) {
    err << "theorem violation (library bug): " << e.what() << "\n";
    return 3;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace valmat
