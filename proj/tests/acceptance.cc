// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria (0 when all pass).

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commbench/corpus.h"
#include "commbench/cover.h"
#include "commbench/direct_sum.h"
#include "commbench/fooling.h"
#include "commbench/fortify.h"
#include "commbench/measure.h"
#include "commbench/protocol.h"
#include "commbench/rect_enum.h"
#include "oracles.h"

using namespace commbench;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  long checked = 0;

  // Records a failure; keeps only the first few messages.
  void fail(const std::string& why) {
    if (pass || failures < 3) detail += (detail.empty() ? "" : "; ") + why;
    pass = false;
    ++failures;
  }
  void expect(bool ok, const std::function<std::string()>& why) {
    ++checked;
    if (!ok) fail(why());
  }
  int failures = 0;
};

std::vector<Problem> functions_up_to(int side, int colors) {
  std::vector<Problem> out;
  for (int a = 1; a <= side; ++a)
    for (int b = 1; b <= side; ++b)
      for (auto& p : all_functions(a, b, colors)) out.push_back(std::move(p));
  return out;
}

std::vector<Problem> random_4x4(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<Problem> out;
  for (int i = 0; i < count; ++i) out.push_back(random_function(rng, 4, 4, 2 + i % 2));
  return out;
}

// Criterion 1.
Outcome cover_oracle() {
  Outcome o;
  std::vector<Problem> ps = functions_up_to(3, 3);
  for (auto& p : random_4x4(101, 200)) ps.push_back(std::move(p));
  for (const Problem& p : ps) {
    const CoverResult r = cover_number(p, p.all_cells());
    const int ref = oracle::min_cover(p, oracle::all_cells(p));
    o.expect(r.value == ref && verify_cover(p, p.all_cells(), r.witness).ok, [&] {
      return p.name() + " Cov=" + std::to_string(r.value) + " oracle=" + std::to_string(ref);
    });
  }
  o.detail = std::to_string(o.checked) + " instances" + (o.detail.empty() ? "" : ": " + o.detail);
  return o;
}

std::vector<Problem> protocol_corpus() {
  std::vector<Problem> ps = all_functions(2, 2, 3);
  for (auto& p : all_functions(2, 3, 3)) ps.push_back(std::move(p));
  return ps;
}

// Criterion 2.
Outcome protocol_oracle() {
  Outcome o;
  for (const Problem& p : protocol_corpus()) {
    ProtocolSolver s(p);
    const auto ref = oracle::from_shapes(oracle::protocol_shapes(p, p.all_rows(), p.all_cols()));
    const int l = s.size(p.full_rect()), c = s.depth(p.full_rect());
    o.expect(l == ref.size && c == ref.depth, [&] {
      return p.name() + " L,C=" + std::to_string(l) + "," + std::to_string(c) + " oracle=" +
             std::to_string(ref.size) + "," + std::to_string(ref.depth);
    });
  }
  o.detail = std::to_string(o.checked) + " functions" + (o.detail.empty() ? "" : ": " + o.detail);
  return o;
}

// Criterion 3. Each constant is first recomputed by the independent oracles,
// then compared against the library and the frozen value.
Outcome named_values() {
  Outcome o;
  auto triple = [&](const Problem& p, int cov, int l, int c) {
    ProtocolSolver s(p);
    const auto ref = oracle::from_shapes(oracle::protocol_shapes(p, p.all_rows(), p.all_cols()));
    const int ocov = oracle::min_cover(p, oracle::all_cells(p));
    o.expect(ocov == cov && ref.size == l && ref.depth == c, [&] { return p.name() + " oracle disagrees with frozen value"; });
    o.expect(cover_number(p, p.all_cells()).value == cov && s.size(p.full_rect()) == l &&
                 s.depth(p.full_rect()) == c,
             [&] { return p.name() + " library disagrees"; });
  };
  triple(equality_problem(1), 4, 4, 2);
  triple(and_problem(), 3, 3, 2);
  triple(constant_problem(4, 4), 1, 1, 0);

  const Problem eq = equality_problem(1);
  const Problem pr = product(eq, eq);
  oracle::ProtocolMemo memo(pr);
  o.expect(oracle::min_cover(pr, oracle::all_cells(pr)) == 16 && cover_number(pr, pr.all_cells()).value == 16,
           [] { return std::string("Cov(EQ1xEQ1) != 16"); });
  ProtocolSolver ps(pr);
  o.expect(memo.solve(pr.all_rows(), pr.all_cols()).size == 16 && ps.size(pr.full_rect()) == 16,
           [] { return std::string("L(EQ1xEQ1) != 16"); });
  CellSet diag;
  diag.insert(eq.cell(0, 0));
  diag.insert(eq.cell(1, 1));
  const CellSet h = hardcore(eq, eq, diag);
  o.expect(oracle::min_cover(pr, h.low_word()) == 8 && cover_number(pr, h).value == 8,
           [] { return std::string("Cov(hardcore) != 8"); });
  o.detail = "EQ1 (4,4,2), AND (3,3,2), CONST (1,1,0), EQ1xEQ1 Cov=L=16, hardcore Cov=8" +
             (o.detail.empty() ? "" : ": " + o.detail);
  return o;
}

// Criterion 4: log2 L <= C <= 2 log2 L, i.e. L <= 2^C <= L^2, exactly.
Outcome fact27_chain() {
  Outcome o;
  std::vector<Problem> ps = functions_up_to(3, 3);
  for (auto& p : protocol_corpus()) ps.push_back(std::move(p));
  for (auto& p : random_4x4(404, 200)) ps.push_back(std::move(p));
  for (const Problem& p : ps) {
    ProtocolSolver s(p);
    const long l = s.size(p.full_rect());
    const long c = s.depth(p.full_rect());
    const long pow = 1L << c;
    o.expect(l <= pow && pow <= l * l, [&] {
      return p.name() + " L=" + std::to_string(l) + " C=" + std::to_string(c);
    });
  }
  o.detail = std::to_string(o.checked) + " instances" + (o.detail.empty() ? "" : ": " + o.detail);
  return o;
}

// Criterion 5.
Outcome projection_fact() {
  Outcome o;
  std::mt19937_64 rng(505);
  std::uniform_int_distribution<int> side(1, 3), colors(1, 3);
  int trials = 0;
  while (trials < 1000) {
    const Problem s = random_function(rng, side(rng), side(rng), colors(rng));
    const Problem t = random_function(rng, side(rng), side(rng), colors(rng));
    const Problem st = product(s, t);
    const MonoRectIndex idx = enumerate_maximal(st);
    std::uniform_int_distribution<std::size_t> pick(0, idx.size() - 1);
    for (int k = 0; k < 10 && trials < 1000; ++k, ++trials) {
      // random nonempty sub-rectangle of a random maximal one
      const ColoredRect& m = idx.all()[pick(rng)];
      Rect r;
      while (r.empty()) {
        std::uniform_int_distribution<Mask> bits(0, ~Mask{0});
        r = {m.rect.rows & bits(rng), m.rect.cols & bits(rng)};
      }
      const Rect rs = project_s(st, r);
      const Rect rt = project_t(st, r);
      o.expect(oracle::mono_color(st, r.rows, r.cols) >= 0 && valid_colors(s, rs) != 0 &&
                   valid_colors(t, rt) != 0 && oracle::mono_color(s, rs.rows, rs.cols) >= 0 &&
                   oracle::mono_color(t, rt.rows, rt.cols) >= 0,
               [&] { return s.name() + " x " + t.name() + " projection not monochromatic"; });
    }
  }
  o.detail = std::to_string(o.checked) + " rectangles" + (o.detail.empty() ? "" : ": " + o.detail);
  return o;
}

std::vector<Problem> all_2x2_problems() {
  std::vector<Problem> ps = all_functions(2, 2, 3);
  // total 2-color relations: each cell accepts a nonempty subset of {0,1}
  for (int code = 0; code < 81; ++code) {
    std::vector<AcceptTriple> acc;
    int rest = code;
    for (int c = 0; c < 4; ++c) {
      const int m = rest % 3 + 1;
      rest /= 3;
      for (int z = 0; z < 2; ++z)
        if ((m >> z) & 1) acc.push_back({c / 2, c % 2, z});
    }
    ps.push_back(make_relation_problem(2, 2, 2, acc, "rel2x2:" + std::to_string(code)));
  }
  return ps;
}

// Criterion 6.
Outcome fooling_equivalence() {
  Outcome o;
  std::vector<Problem> ps = all_2x2_problems();
  std::mt19937_64 rng(606);
  for (int i = 0; i < 100; ++i)
    ps.push_back(i % 2 ? random_function(rng, 3, 3, 2 + i % 3 / 2) : random_relation(rng, 3, 3, 3, 0.3));
  long sets = 0;
  for (const Problem& p : ps) {
    const MonoRectIndex idx = enumerate_maximal(p);
    const CoverSolver cover(p, idx);
    const std::uint64_t full = oracle::all_cells(p);
    for (std::uint64_t m = 1; m <= full; ++m) {
      if (std::popcount(m) > 8) continue;
      ++sets;
      const CellSet lam = CellSet::from_mask(m);
      const std::vector<int> cells = lam.indices();
      const FoolingCertificate c = min_fooling_delta(idx, lam);
      const Rational lit = oracle::literal_min_delta(p, cells);
      o.expect(c.delta == lit, [&] { return p.name() + " delta " + c.delta.str() + " vs " + lit.str(); });
      const int n = lam.size();
      for (int k = 1; k <= n; ++k) {
        const Rational d(k, n);
        o.expect(is_delta_fooling(idx, lam, d) == oracle::literal_is_fooling(p, cells, d),
                 [&] { return p.name() + " is_delta_fooling mismatch at " + d.str(); });
      }
      const int cov = cover.solve(lam).value;
      o.expect(cov_lower_bound(c) <= cov && cov == oracle::min_cover(p, m), [&] {
        return p.name() + " ceil(1/delta)=" + std::to_string(cov_lower_bound(c)) + " > Cov=" + std::to_string(cov);
      });
    }
  }
  o.detail = std::to_string(ps.size()) + " problems, " + std::to_string(sets) + " sets" +
             (o.detail.empty() ? "" : ": " + o.detail);
  return o;
}

Distribution random_distribution(std::mt19937_64& rng, int n) {
  std::exponential_distribution<double> e(1.0);
  std::bernoulli_distribution zero(0.25);
  Distribution d{n, std::vector<double>(std::size_t{1} << n)};
  double total = 0;
  for (double& p : d.probabilities) total += p = zero(rng) ? 0.0 : e(rng);
  if (total == 0) d.probabilities[1] = total = 1;
  for (double& p : d.probabilities) p /= total;
  return d;
}

// The measure corpus shared by criteria 7 and 8.
struct MeasureCase {
  std::string name;
  MeasureOracle m;
  std::function<double(Mask)> reference;  // independent evaluation
};

std::vector<MeasureCase> measure_corpus() {
  std::vector<MeasureCase> out;
  auto add_cover = [&](const Problem& p) {
    MeasureOracle m = cover_measure(p);
    auto ref = std::make_shared<oracle::CoverOracle>(p);
    out.push_back({"cover " + p.name(), m, [ref](Mask t) { return double((*ref)(t)); }});
  };
  for (const Problem& p : all_functions(2, 2, 3)) add_cover(p);
  std::mt19937_64 rng(707);
  for (int i = 0; i < 30; ++i) add_cover(random_function(rng, 3, 3, 2 + i % 2));
  for (int i = 0; i < 25; ++i) add_cover(random_function(rng, 4, 4, 2 + i % 2));
  for (int i = 0; i < 60; ++i) {
    const int n = 2 + i % 7;
    Distribution d = random_distribution(rng, n);
    MeasureOracle m = entropy_measure(d);
    if (m(low_mask(n)) <= 0) continue;
    out.push_back({"entropy n=" + std::to_string(n) + " #" + std::to_string(i), m,
                   [d](Mask t) { return oracle::entropy(d.variables, d.probabilities, t); }});
  }
  return out;
}

// Criterion 7.
Outcome fortification_certificates(const std::vector<MeasureCase>& corpus) {
  Outcome o;
  int covers = 0, entropies = 0;
  for (const auto& c : corpus) {
    const Mask sigma = c.m.ground();
    const FortificationResult r = fortify(c.m, sigma);
    const double rho = 1.0 / (4.0 * std::log2(static_cast<double>(popcount(sigma))));
    const bool lib = r.certified && certify_fortified(c.m, r.lambda, rho).ok;
    // independent re-check with the reference evaluation
    const double tol = c.m.tolerance();
    const bool ind = oracle::fortified(c.reference, r.lambda, rho, tol) &&
                     c.reference(r.lambda) >= c.reference(sigma) / 4 - tol * std::max(1.0, c.reference(sigma));
    o.expect(lib && ind, [&] { return c.name + " not certified: " + r.failure; });
    (c.name.rfind("cover", 0) == 0 ? covers : entropies)++;
  }
  o.detail = std::to_string(covers) + " cover measures, " + std::to_string(entropies) +
             " entropy measures" + (o.detail.empty() ? "" : ": " + o.detail);
  return o;
}

// Criterion 8.
Outcome weak_inverse_certificates(const std::vector<MeasureCase>& corpus) {
  Outcome o;
  for (const auto& c : corpus) {
    const Mask sigma = c.m.ground();
    const double logn = std::log2(static_cast<double>(popcount(sigma)));
    const double rho = 1.0 / (2.0 * logn);
    const WeakFortification w = weak_fortify(c.m, sigma, rho);
    const Certificate cw = certify_weak(c.m, sigma, w.lambda1, rho);
    o.expect(cw.ok, [&] { return c.name + " weak: " + cw.reason; });
    const InverseFortification inv = inverse_fortify(c.m, sigma, logn);
    const Certificate ci = certify_inverse(c.m, sigma, inv.lambda0, logn);
    o.expect(ci.ok && inv.lambda0 != 0, [&] { return c.name + " inverse: " + ci.reason; });
  }
  o.detail = std::to_string(corpus.size()) + " measures" + (o.detail.empty() ? "" : ": " + o.detail);
  return o;
}

// Criterion 9.
Outcome direct_sum_theorems() {
  Outcome o;
  const std::vector<Problem> fs = all_functions(2, 2, 3);
  long triples = 0, log_nonvacuous = 0;
  for (const Problem& s : fs)
    for (const Problem& t : fs) {
      const Problem st = product(s, t);
      const int cov_st = oracle::min_cover(st, oracle::all_cells(st));
      oracle::ProtocolMemo memo(st);
      const int l_st = memo.solve(st.all_rows(), st.all_cols()).size;
      for (Mask m = 1; m < 16; ++m) {
        ++triples;
        const CellSet lam = CellSet::from_mask(m);
        DirectSumReport r = check_thm41(s, t, lam);
        r.append(check_thm43(s, t, lam));
        const Rational delta = oracle::literal_min_delta(t, lam.indices());
        o.expect(r.delta == delta && *r.cov_product == cov_st && *r.l_product == l_st,
                 [&] { return s.name() + " x " + t.name() + " report disagrees with oracles"; });
        o.expect(cov_st >= (Rational(*r.cov_s) / delta).ceil() && l_st >= (Rational(*r.l_s) / delta).ceil(),
                 [&] { return s.name() + " x " + t.name() + " theorem bound fails"; });
        for (const auto& b : r.bounds) {
          if (b.name.size() > 4 && b.name.compare(b.name.size() - 4, 4, "_log") == 0 && !b.vacuous)
            ++log_nonvacuous;
          o.expect(b.holds, [&] { return s.name() + " x " + t.name() + " " + b.name + " fails"; });
        }
      }
    }
  o.detail = std::to_string(triples) + " (S,T,lambda) triples; non-vacuous log bounds: " +
             std::to_string(log_nonvacuous) + (o.detail.empty() ? "" : ": " + o.detail);
  return o;
}

// Criterion 10.
Outcome phi_facts() {
  Outcome o;
  const Problem eq = equality_problem(1);
  const Problem pr = product(eq, eq);
  CellSet diag;
  diag.insert(eq.cell(0, 0));
  diag.insert(eq.cell(1, 1));
  const ProtocolTree canon = full_split_protocol(pr);
  o.expect(verify_protocol(pr, canon).ok && canon.leaf_count() == 16,
           [] { return std::string("canonical protocol invalid"); });
  o.expect(phi(eq, eq, diag, pr.full_rect()) == Rational(4), [] { return std::string("phi(root) != 4"); });
  PhiMeasure ph(eq, eq, diag);
  for (const auto& n : canon.nodes()) {
    if (n.leaf) {
      o.expect(ph(n.rect) <= Rational(1, 2), [] { return std::string("leaf phi > 1/2"); });
    } else {
      const Rational sum = ph(canon.node(n.child[0]).rect) + ph(canon.node(n.child[1]).rect);
      o.expect(ph(n.rect) <= sum, [] { return std::string("phi not subadditive"); });
    }
  }
  for (const auto& b : check_phi_tree(eq, eq, diag, Rational(1, 2), canon))
    o.expect(b.holds, [&] { return "EQ1xEQ1 " + b.name; });

  std::mt19937_64 rng(1010);
  std::uniform_int_distribution<Mask> pick(1, 15);
  for (int i = 0; i < 20; ++i) {
    const Problem s = random_function(rng, 2, 2, 2 + i % 2);
    const Problem t = random_function(rng, 2, 2, 2 + (i / 2) % 2);
    const CellSet lam = CellSet::from_mask(pick(rng));
    const DirectSumReport r = check_thm43(s, t, lam);
    int phi_bounds = 0;
    for (const auto& b : r.bounds) {
      if (b.name.rfind("fact4", 0) == 0 || b.name == "phi_leaf_sum" || b.name == "thm43_tree") ++phi_bounds;
      o.expect(b.holds, [&] { return s.name() + " x " + t.name() + " " + b.name; });
    }
    o.expect(phi_bounds == 5, [&] { return s.name() + " x " + t.name() + " missing phi checks"; });
  }
  o.detail = "EQ1xEQ1 canonical 16-leaf tree + 20 random pairs" + (o.detail.empty() ? "" : ": " + o.detail);
  return o;
}

std::string run_cli(const std::string& args) {
  const std::string cmd = std::string(COMMBENCH_CLI) + " " + args + " 2>&1; echo \"exit=$?\"";
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return "popen failed";
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), f)) out.append(buf.data(), n);
  pclose(f);
  return out;
}

// Criterion 11.
Outcome cli_determinism() {
  Outcome o;
  const std::vector<std::string> suite = {
      "analyze EQ1", "analyze EQ2", "analyze AND2", "analyze GT2", "analyze CONST",
      "cover GT2", "size EQ2", "depth GT2", "fool EQ1", "fool AND2 --strategy greedy",
      "fool GT2 --strategy fortify", "fortify EQ1", "fortify AND2", "product EQ1 AND2",
      "directsum EQ1 EQ1", "directsum AND2 EQ1", "directsum EQ1 GT2", "explore --max-side 2",
      "corpus", "--cap 2 analyze EQ2"};
  auto full = [&](int jobs) {
    std::string all;
    for (const auto& cmd : suite)
      for (const char* mode : {"", "--json "}) {
        const std::string args = std::string(mode) + "--jobs " + std::to_string(jobs) + " " + cmd;
        all += "$ " + cmd + " " + mode + "\n" + run_cli(args);
      }
    return all;
  };
  const std::string one = full(1), four = full(4);
  o.expect(!one.empty() && one == four, [] { return std::string("reports differ between --jobs 1 and --jobs 4"); });
  o.detail = std::to_string(suite.size() * 2) + " commands, " + std::to_string(one.size()) + " bytes each run" +
             (o.detail.empty() ? "" : ": " + o.detail);
  return o;
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](int n, const char* title, const std::function<Outcome()>& f) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << "  " << title << "  ["
         << o.detail << "] (" << secs << "s)";
    std::cout << line.str() << std::endl;
    if (!o.pass) ++failed;
  };
  report(1, "cover solver equals exhaustive oracle", cover_oracle);
  report(2, "protocol L and C equal tree enumeration", protocol_oracle);
  report(3, "named values", named_values);
  report(4, "log2 L <= C <= 2 log2 L", fact27_chain);
  report(5, "projections of monochromatic rectangles", projection_fact);
  report(6, "fooling delta equals literal definition; ceil(1/delta) <= Cov", fooling_equivalence);
  const std::vector<MeasureCase> corpus = measure_corpus();
  report(7, "fortify output certified at rho = 1/(4 log2 |sigma|)", [&] { return fortification_certificates(corpus); });
  report(8, "weak and inverse fortification certificates", [&] { return weak_inverse_certificates(corpus); });
  report(9, "direct-sum cover and size bounds", direct_sum_theorems);
  report(10, "phi measure facts", phi_facts);
  report(11, "CLI output identical for --jobs 1 and --jobs 4", cli_determinism);
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed;
}
