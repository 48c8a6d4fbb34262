// commbench: command-line front end for the rectangle / protocol / direct-sum
// toolkit. Reports go to stdout, diagnostics to stderr.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commbench/corpus.h"
#include "commbench/cover.h"
#include "commbench/direct_sum.h"
#include "commbench/fooling.h"
#include "commbench/fortify.h"
#include "commbench/json_io.h"
#include "commbench/measure.h"
#include "commbench/protocol.h"
#include "commbench/rect_enum.h"

namespace {

using namespace commbench;
using json_io::json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct Globals {
  bool json = false;
  int cap = -1;
  std::uint64_t seed = 0;
  int jobs = 1;

  Options options() const {
    if (cap > 0) return Options::with_cap(cap, jobs);
    Options o;
    o.jobs = jobs;
    return o;
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

std::string list_str(Mask m) {
  std::string s = "{";
  bool first = true;
  for_each_bit(m, [&](int i) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  });
  return s + "}";
}

std::string rect_str(const ColoredRect& r) {
  return list_str(r.rect.rows) + "x" + list_str(r.rect.cols) + ":" + std::to_string(r.color);
}

std::string cells_str(const Problem& p, const CellSet& cells) {
  std::string s = "{";
  bool first = true;
  cells.for_each([&](int c) {
    const auto [x, y] = p.cell_coords(c);
    if (!first) s += ",";
    s += "(" + std::to_string(x) + "," + std::to_string(y) + ")";
    first = false;
  });
  return s + "}";
}

// A bundled name when no file by that name exists, otherwise a JSON file.
Problem load_problem(const std::string& arg) {
  if (!std::filesystem::exists(arg))
    if (auto p = bundled_problem(arg)) return *p;
  return json_io::problem_from_json(json_io::read_file(arg));
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

std::string bound_line(const Bound& b) {
  std::string s = "bound " + b.name + " holds=" + (b.holds ? "true" : "false") +
                  " vacuous=" + (b.vacuous ? "true" : "false") + " lhs=" + b.lhs.str() +
                  (b.relation == Relation::kEq ? " == " : " >= ") + "rhs=" + b.rhs.str();
  return s;
}

// ---- verbs ----

int run_analyze(const Globals& g, const std::string& arg) {
  const Problem p = load_problem(arg);
  const Options opt = g.options();
  const MonoRectIndex index = enumerate_maximal(p, opt);
  json j{{"name", p.name()}, {"nx", p.rows()}, {"ny", p.cols()}, {"nz", p.colors()},
         {"total", p.total()}, {"maximal_rects", index.size()}};
  if (p.total()) {
    const CoverSolver cover(p, index);
    ProtocolSolver proto(p, opt);
    j["Cov"] = cover.solve(p.all_cells()).value;
    j["L"] = proto.size(p.full_rect());
    j["C"] = proto.depth(p.full_rect());
  }
  if (g.json) {
    emit(j);
  } else {
    std::cout << "name=" << p.name() << "\n"
              << "nx=" << p.rows() << " ny=" << p.cols() << " nz=" << p.colors() << "\n"
              << "total=" << (p.total() ? "true" : "false") << "\n";
    if (p.total())
      std::cout << "Cov=" << j["Cov"].get<int>() << "\nL=" << j["L"].get<int>()
                << "\nC=" << j["C"].get<int>() << "\n";
    std::cout << "maximal_rects=" << index.size() << "\n";
  }
  return kExitOk;
}

int run_cover(const Globals& g, const std::string& arg, const std::string& cells_path) {
  const Problem p = load_problem(arg);
  const CellSet cells =
      cells_path.empty() ? p.all_cells() : json_io::cells_from_json(p, json_io::read_file(cells_path));
  const CoverResult r = cover_number(p, cells, g.options());
  if (g.json) {
    json j = json_io::cover_to_json(r);
    j["name"] = p.name();
    emit(j);
  } else {
    std::cout << "name=" << p.name() << "\nCov=" << r.value << "\n";
    for (const auto& e : r.witness) std::cout << "rect " << rect_str(e) << "\n";
  }
  return kExitOk;
}

int run_protocol(const Globals& g, const std::string& arg, const std::string& rect_path,
                 bool depth) {
  const Problem p = load_problem(arg);
  const Rect r =
      rect_path.empty() ? p.full_rect() : json_io::rect_from_json(p, json_io::read_file(rect_path));
  ProtocolSolver solver(p, g.options());
  const int value = depth ? solver.depth(r) : solver.size(r);
  const ProtocolTree tree = depth ? solver.depth_witness(r) : solver.size_witness(r);
  const char* key = depth ? "C" : "L";
  if (g.json) {
    emit(json{{"name", p.name()}, {key, value}, {"tree", json_io::tree_to_json(tree)}});
  } else {
    std::cout << "name=" << p.name() << "\n" << key << "=" << value << "\n"
              << "leaves=" << tree.leaf_count() << " depth=" << tree.depth() << "\n";
  }
  return kExitOk;
}

int run_fool(const Globals& g, const std::string& arg, const std::string& strategy_name,
             const std::string& cells_path, int size_hint) {
  const Problem p = load_problem(arg);
  const Options opt = g.options();
  FoolingCertificate cert;
  std::string strategy = "given";
  if (!cells_path.empty()) {
    cert = min_fooling_delta(p, json_io::cells_from_json(p, json_io::read_file(cells_path)), opt);
  } else {
    const auto s = parse_fooling_strategy(strategy_name);
    if (!s) throw Error(ErrorCode::kInvalidArgument, "unknown strategy " + strategy_name);
    cert = search_fooling(p, *s, size_hint > 0 ? std::optional<int>(size_hint) : std::nullopt, opt);
    strategy = strategy_name;
  }
  if (g.json) {
    json j = json_io::certificate_to_json(p, cert);
    j["name"] = p.name();
    j["strategy"] = strategy;
    emit(j);
  } else {
    std::cout << "name=" << p.name() << "\nstrategy=" << strategy << "\n"
              << "lambda=" << cells_str(p, cert.lambda) << "\n"
              << "delta=" << cert.delta.str() << "\n"
              << "witness=" << rect_str(cert.witness) << "\n"
              << "cov_lb=" << cert.cov_lb << "\n";
  }
  return kExitOk;
}

void print_fortification(const FortificationResult& r) {
  std::cout << "sigma=" << list_str(r.sigma) << "\n"
            << "c=" << fmt(r.c) << " weak_rho=" << fmt(r.weak_rho) << " rho=" << fmt(r.rho) << "\n"
            << "lambda0=" << list_str(r.lambda0) << "\n"
            << "lambda=" << list_str(r.lambda) << "\n"
            << "mu_sigma=" << fmt(r.mu_sigma) << " mu_lambda0=" << fmt(r.mu_lambda0)
            << " mu_lambda=" << fmt(r.mu_lambda) << "\n"
            << "certified=" << (r.certified ? "true" : "false") << "\n";
  if (!r.certified) std::cout << "failure=" << r.failure << "\n";
}

int run_fortify(const Globals& g, const std::string& arg) {
  const Problem p = load_problem(arg);
  const CoverFortification r = fortify_cover(p, g.options());
  const bool ok = r.fortification.certified && r.cover_density_certified;
  if (g.json) {
    json j = json_io::fortification_to_json(r.fortification);
    j["name"] = p.name();
    j["cov"] = r.cov;
    j["fooling"] = json_io::certificate_to_json(p, r.fooling);
    j["delta_nominal"] = r.delta_nominal;
    j["delta_within_nominal"] = r.delta_within_nominal;
    j["cover_density_certified"] = r.cover_density_certified;
    emit(j);
  } else {
    std::cout << "name=" << p.name() << "\nCov=" << r.cov << "\n";
    print_fortification(r.fortification);
    std::cout << "fooling_delta=" << r.fooling.delta.str() << " cov_lb=" << r.fooling.cov_lb << "\n"
              << "delta_nominal=" << fmt(r.delta_nominal)
              << " within=" << (r.delta_within_nominal ? "true" : "false") << "\n"
              << "cover_density_certified=" << (r.cover_density_certified ? "true" : "false")
              << "\n";
  }
  return ok ? kExitOk : kExitViolation;
}

int run_fortify_measure(const Globals& g, const std::string& path) {
  const Distribution d = json_io::distribution_from_json(json_io::read_file(path));
  const MeasureOracle m = entropy_measure(d);
  const MeasureReport check = check_measure(m, g.seed);
  if (!check.valid) {
    for (const auto& v : check.violations) std::cerr << "measure: " << v << "\n";
    if (g.json) emit(json{{"valid", false}, {"violations", check.violations}});
    else std::cout << "valid=false\n";
    return kExitViolation;
  }
  const FortificationResult r = fortify(m, m.ground(), g.options());
  if (g.json) {
    json j = json_io::fortification_to_json(r);
    j["valid"] = true;
    j["exhaustive_check"] = check.exhaustive;
    emit(j);
  } else {
    std::cout << "valid=true exhaustive=" << (check.exhaustive ? "true" : "false") << "\n";
    print_fortification(r);
  }
  return r.certified ? kExitOk : kExitViolation;
}

int run_product(const Globals& g, const std::string& a, const std::string& b) {
  const Problem s = load_problem(a);
  const Problem t = load_problem(b);
  const Problem st = product(s, t);
  if (g.json) {
    emit(json_io::problem_to_json(st));
  } else {
    std::cout << "name=" << st.name() << "\nnx=" << st.rows() << " ny=" << st.cols()
              << " nz=" << st.colors() << "\n";
  }
  return kExitOk;
}

int run_directsum(const Globals& g, const std::string& a, const std::string& b,
                  const std::string& fooling_path) {
  const Problem s = load_problem(a);
  const Problem t = load_problem(b);
  const Options opt = g.options();
  CellSet lambda;
  if (!fooling_path.empty()) {
    lambda = json_io::cells_from_json(t, json_io::read_file(fooling_path));
  } else {
    const auto strategy =
        t.cell_count() <= opt.subset_cap ? FoolingStrategy::kExhaustive : FoolingStrategy::kGreedy;
    lambda = search_fooling(t, strategy, std::nullopt, opt).lambda;
  }
  const DirectSumReport r = direct_sum(s, t, lambda, opt);
  if (g.json) {
    json j{{"s", r.s_name}, {"t", r.t_name}};
    auto put = [&](const char* key, const std::optional<int>& v) {
      if (v) j[key] = *v;
    };
    put("cov_s", r.cov_s);
    put("cov_t", r.cov_t);
    put("cov_product", r.cov_product);
    put("cov_hardcore", r.cov_hardcore);
    put("l_s", r.l_s);
    put("l_product", r.l_product);
    put("c_s", r.c_s);
    put("c_product", r.c_product);
    j["lambda"] = json_io::cells_to_json(t, lambda).at("cells");
    j["delta"] = json_io::rational_to_json(r.delta);
    j["bounds"] = json_io::report_to_json(r);
    j["all_hold"] = r.all_hold();
    emit(j);
  } else {
    auto put = [&](const char* key, const std::optional<int>& v) {
      if (v) std::cout << key << "=" << *v << "\n";
    };
    std::cout << "S=" << r.s_name << " T=" << r.t_name << "\n";
    put("Cov(S)", r.cov_s);
    put("Cov(T)", r.cov_t);
    put("Cov(SxT)", r.cov_product);
    put("Cov(hardcore)", r.cov_hardcore);
    put("L(S)", r.l_s);
    put("L(SxT)", r.l_product);
    put("C(S)", r.c_s);
    put("C(SxT)", r.c_product);
    std::cout << "lambda=" << cells_str(t, lambda) << "\ndelta=" << r.delta.str() << "\n";
    for (const auto& bnd : r.bounds) std::cout << bound_line(bnd) << "\n";
  }
  return r.all_hold() ? kExitOk : kExitViolation;
}

int run_verify_protocol(const Globals& g, const std::string& arg, const std::string& tree_path) {
  const Problem p = load_problem(arg);
  const ProtocolTree tree = json_io::tree_from_json(p, json_io::read_file(tree_path));
  const CheckResult r = verify_protocol(p, tree);
  if (g.json) {
    json j{{"name", p.name()}, {"valid", r.ok}};
    if (r.ok) {
      j["leaves"] = tree.leaf_count();
      j["depth"] = tree.depth();
    } else {
      j["reason"] = r.reason;
    }
    emit(j);
  } else {
    std::cout << "name=" << p.name() << "\nvalid=" << (r.ok ? "true" : "false") << "\n";
    if (r.ok) std::cout << "leaves=" << tree.leaf_count() << " depth=" << tree.depth() << "\n";
    else std::cout << "reason=" << r.reason << "\n";
  }
  return r.ok ? kExitOk : kExitViolation;
}

int run_explore(const Globals& g, int max_side) {
  const std::vector<ExploreRow> rows = explore_conjectures(max_side, g.options());
  bool ok = true;
  if (!g.json)
    std::cout << "function Cov L L(FxF) C C(FxF) log_size_gap depth_gap chain\n";
  for (const auto& r : rows) {
    ok = ok && r.chain.holds;
    if (g.json) {
      emit(json{{"f", r.f.name()},
                {"cov", r.cov},
                {"l", r.l},
                {"l_square", r.l_square},
                {"c", r.c},
                {"c_square", r.c_square},
                {"log_size_gap", r.log_size_gap},
                {"depth_gap", r.depth_gap},
                {"chain", json_io::bound_to_json(r.chain)}});
    } else {
      std::cout << r.f.name() << " " << r.cov << " " << r.l << " " << r.l_square << " " << r.c
                << " " << r.c_square << " " << fmt(r.log_size_gap) << " " << r.depth_gap << " "
                << (r.chain.holds ? (r.chain.vacuous ? "vacuous" : "holds") : "FAILS") << "\n";
    }
  }
  return ok ? kExitOk : kExitViolation;
}

int run_corpus(const Globals& g, const std::string& name, const std::string& out_dir) {
  std::vector<std::string> names;
  if (name.empty()) {
    names = bundled_names();
  } else {
    if (!bundled_problem(name)) throw Error(ErrorCode::kInvalidArgument, "no bundled problem " + name);
    names.push_back(name);
  }
  for (const auto& n : names) {
    const json j = json_io::problem_to_json(*bundled_problem(n));
    if (out_dir.empty()) {
      if (g.json) emit(j);
      else std::cout << n << " " << j.dump() << "\n";
      continue;
    }
    std::filesystem::create_directories(out_dir);
    const std::string path = (std::filesystem::path(out_dir) / (n + ".json")).string();
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::kParse, "cannot write " + path);
    out << j.dump(2) << "\n";
    std::cout << path << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"commbench: rectangle covers, protocol trees and direct-sum checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "JSON lines on stdout");
  app.add_option("--cap", g.cap, "override every size cap")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "sampling seed");
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::Range(1, 256));

  std::string a, b, extra, strategy = "exhaustive";
  int max_side = 2;
  int size_hint = 0;
  std::function<int()> action;

  auto* analyze = app.add_subcommand("analyze", "sizes, totality, Cov, L, C, maximal rectangles");
  analyze->add_option("problem", a, "JSON file or bundled name")->required();
  analyze->callback([&] { action = [&] { return run_analyze(g, a); }; });

  auto* cover = app.add_subcommand("cover", "minimum monochromatic rectangle cover");
  cover->add_option("problem", a)->required();
  cover->add_option("--cells", extra, "cell-set JSON (default: whole domain)");
  cover->callback([&] { action = [&] { return run_cover(g, a, extra); }; });

  auto* size = app.add_subcommand("size", "protocol size L with a witness tree");
  size->add_option("problem", a)->required();
  size->add_option("--rect", extra, "rectangle JSON (default: whole domain)");
  size->callback([&] { action = [&] { return run_protocol(g, a, extra, false); }; });

  auto* depth = app.add_subcommand("depth", "communication depth C with a witness tree");
  depth->add_option("problem", a)->required();
  depth->add_option("--rect", extra, "rectangle JSON (default: whole domain)");
  depth->callback([&] { action = [&] { return run_protocol(g, a, extra, true); }; });

  auto* fool = app.add_subcommand("fool", "fooling-set search or delta of a given set");
  fool->add_option("problem", a)->required();
  fool->add_option("--strategy", strategy)->check(CLI::IsMember({"exhaustive", "greedy", "fortify"}));
  fool->add_option("--cells", extra, "compute delta for this cell set instead of searching");
  fool->add_option("--size", size_hint, "only consider sets of this size")->check(CLI::PositiveNumber);
  fool->callback([&] { action = [&] { return run_fool(g, a, strategy, extra, size_hint); }; });

  auto* fortify_cmd = app.add_subcommand("fortify", "fortify the cover measure of a problem");
  fortify_cmd->add_option("problem", a)->required();
  fortify_cmd->callback([&] { action = [&] { return run_fortify(g, a); }; });

  auto* fortify_m = app.add_subcommand("fortify-measure", "fortify the entropy measure of a distribution");
  fortify_m->add_option("distribution", a)->required();
  fortify_m->callback([&] { action = [&] { return run_fortify_measure(g, a); }; });

  auto* prod = app.add_subcommand("product", "product problem S x T as JSON");
  prod->add_option("s", a)->required();
  prod->add_option("t", b)->required();
  prod->callback([&] { action = [&] { return run_product(g, a, b); }; });

  auto* ds = app.add_subcommand("directsum", "direct-sum report for S x T");
  ds->add_option("s", a)->required();
  ds->add_option("t", b)->required();
  ds->add_option("--fooling", extra, "cell-set JSON over T (default: best fooling set)");
  ds->callback([&] { action = [&] { return run_directsum(g, a, b, extra); }; });

  auto* vp = app.add_subcommand("verify-protocol", "check a protocol tree against a problem");
  vp->add_option("problem", a)->required();
  vp->add_option("tree", b)->required();
  vp->callback([&] { action = [&] { return run_verify_protocol(g, a, b); }; });

  auto* ex = app.add_subcommand("explore", "L, C and Cov of all small boolean functions and their squares");
  ex->add_option("--max-side", max_side)->check(CLI::Range(1, 3));
  ex->callback([&] { action = [&] { return run_explore(g, max_side); }; });

  auto* corpus = app.add_subcommand("corpus", "write bundled problems");
  corpus->add_option("name", a, "one of EQ1 EQ2 AND2 GT2 CONST (default: all)");
  corpus->add_option("--out", extra, "output directory");
  corpus->callback([&] { action = [&] { return run_corpus(g, a, extra); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kSizeCap ? kExitCap : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
