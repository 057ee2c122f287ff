#include "oriclique/verify.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "oriclique/canonical.hpp"
#include "oriclique/circulant.hpp"
#include "oriclique/colouring.hpp"
#include "oriclique/enumeration.hpp"
#include "oriclique/extension.hpp"
#include "oriclique/io.hpp"
#include "oriclique/reference.hpp"

namespace oriclique {

namespace {

// isomorphism class counts of oriented graphs at orders 1..7, cross-checked
// against labelled_class_count at orders 1..5 by criterion 2
constexpr std::uint64_t kClassCounts[7] = {1, 2, 7, 42, 582, 21480, 2142288};

OrientedGraph directed_c5() {
  return OrientedGraph::build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
}

OrientedGraph random_graph(int n, std::mt19937_64& rng) {
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      switch (rng() % 3) {
        case 1: arcs.push_back({i, j}); break;
        case 2: arcs.push_back({j, i}); break;
        default: break;
      }
    }
  return OrientedGraph::build(n, arcs);
}

bool is_dcoc(const OrientedGraph& g) {
  return is_absolute_clique(g) && is_deeply_critical(g);
}

// every valid connection set for order n, via the three states of each
// residue pair {k, n-k}
void for_each_connection_set(int n, const std::function<void(const std::vector<int>&)>& f) {
  const int npairs = (n - 1) / 2;
  std::vector<int> set;
  auto rec = [&](auto&& self, int pair) -> void {
    if (pair > npairs) {
      std::vector<int> sorted = set;
      std::sort(sorted.begin(), sorted.end());
      f(sorted);
      return;
    }
    self(self, pair + 1);
    for (int e : {pair, n - pair}) {
      set.push_back(e);
      self(self, pair + 1);
      set.pop_back();
    }
  };
  rec(rec, 1);
}

struct Ctx {
  VerifyOptions opts;
  bool full() const { return opts.level == VerifyLevel::full; }
};

CriterionResult c1_directed_c5(const Ctx&) {
  const OrientedGraph g = directed_c5();
  const ChiResult chi = oriented_chromatic_number(g);
  const CriticalityReport rep = criticality_report(g);
  const bool pass = chi.chromatic_number == 5 && validate_certificate(g, chi.certificate) &&
                    is_absolute_clique(g) && rep.deeply_critical && rep.chi == 5;
  std::ostringstream d;
  d << "chi=" << chi.chromatic_number << " clique=" << is_absolute_clique(g)
    << " deeply_critical=" << rep.deeply_critical;
  return {1, "directed C5 is a deeply critical clique", pass, d.str(), 0};
}

CriterionResult c2_order7_census(const Ctx& ctx) {
  std::ostringstream d;
  bool pass = true;
  for (int n = 1; n <= 5; ++n) {
    const std::uint64_t fast = count_oriented_graphs(n);
    const std::uint64_t slow = labelled_class_count(n);
    if (fast != slow || fast != kClassCounts[n - 1]) pass = false;
    d << "n" << n << "=" << fast << (fast == slow ? "" : "!=oracle") << " ";
  }
  const int top = ctx.full() ? 7 : 6;
  for (int n = 6; n <= top && pass; ++n) {
    CensusOptions co;
    co.jobs = ctx.opts.jobs;
    const ScanReport rep = census_dcoc(n, co);
    if (rep.generated != kClassCounts[n - 1] || !rep.completed) pass = false;
    if (n == 7 && rep.dcoc != 0) pass = false;
    d << "n" << n << "=" << rep.generated << " dcoc=" << rep.dcoc << " ";
  }
  return {2, ctx.full() ? "order-7 census finds no deeply critical clique"
                        : "census matches the labelled oracle (quick: n <= 6)",
          pass, d.str(), 0};
}

CriterionResult c3_embedded_order9(const Ctx&) {
  const OrientedGraph g = dcoc_order9();
  const PartitionDiagnosis diag = check_extending_partition(g, dcoc_order9_partition());
  const bool pass = is_absolute_clique(g) && is_deeply_critical(g) && diag.ok();
  std::ostringstream d;
  d << "clique=" << is_absolute_clique(g) << " partition=(" << diag.forward_only << ","
    << diag.private_in << "," << diag.private_out << ")";
  return {3, "embedded order-9 graph checks out with its partition", pass, d.str(), 0};
}

CriterionResult c4_six_extension_identity(const Ctx&) {
  const OrientedGraph c3 = OrientedGraph::build(3, {{0, 1}, {1, 2}, {2, 0}});
  const SixExtension six = six_extension(c3, {{0}, {1}, {2}});
  const bool pass = canonical_code(six.graph) == canonical_code(dcoc_order9());
  return {4, "six-extension of the directed triangle is the order-9 graph", pass,
          pass ? "canonical codes equal" : "canonical codes differ", 0};
}

CriterionResult c5_odd_orders(const Ctx& ctx) {
  bool pass = true;
  std::ostringstream d;
  for (int n : {1, 3, 7}) {
    bool threw = false;
    try {
      generate_odd_dcoc(n);
    } catch (const Error& e) {
      threw = e.code() == errc::no_such_order;
    }
    if (!threw) { pass = false; d << "n=" << n << " not rejected "; }
  }
  const int top = ctx.full() ? 31 : 15;
  int built = 0;
  for (int n = 5; n <= top; n += 2) {
    if (n == 7) continue;
    const OrientedGraph g = generate_odd_dcoc(n);
    if (g.order() != n || !is_dcoc(g)) { pass = false; d << "n=" << n << " invalid "; }
    else ++built;
  }
  d << "built=" << built << " up to n=" << top;
  return {5, "every achievable odd order is constructed and verified", pass, d.str(), 0};
}

CriterionResult c6_lemma_equivalence(const Ctx& ctx) {
  const int top = ctx.full() ? 13 : 11;
  std::uint64_t checked = 0, disagreements = 0;
  for (int n = 1; n <= top; ++n) {
    for_each_connection_set(n, [&](const std::vector<int>& s) {
      const CirculantSpec spec{n, s};
      ++checked;
      const bool fast = arithmetic_dcoc_check(spec);
      const bool slow = is_dcoc(build_circulant(spec));
      if (fast != slow) ++disagreements;
    });
  }
  std::ostringstream d;
  d << "sets=" << checked << " disagreements=" << disagreements;
  return {6, "arithmetic circulant test equals the definitional check", disagreements == 0,
          d.str(), 0};
}

CriterionResult c7_even_sweep(const Ctx& ctx) {
  const int top = ctx.full() ? 48 : 24;
  const bool pass = verify_no_even_circulant_dcoc(top, ctx.opts.jobs);
  return {7, "no even-order circulant is a deeply critical clique", pass,
          "swept even n <= " + std::to_string(top), 0};
}

CriterionResult c8_extension_suite(const Ctx& ctx) {
  bool pass = true;
  std::ostringstream d;

  // no extending partition of directed C5 may exist: its 2-extension would
  // be an order-7 deeply critical clique
  if (find_extending_partition(directed_c5())) { pass = false; d << "C5 extendable! "; }

  std::vector<std::pair<OrientedGraph, ExtendingPartition>> corpus;
  corpus.emplace_back(dcoc_order9(), dcoc_order9_partition());
  const ScanReport probe = random_probe(9, ctx.full() ? 200000 : 20000, 2026);
  for (const std::string& w : probe.witnesses) {
    const OrientedGraph g = parse_compact(w);
    if (auto p = find_extending_partition(g)) corpus.emplace_back(g, *p);
  }
  d << "corpus=" << corpus.size() << " (probe hits " << probe.dcoc << ") ";

  int extended = 0;
  for (const auto& [g, p] : corpus) {
    const SixExtension six = six_extension(g, p);
    const OrientedGraph four = four_extension(g, p);
    const OrientedGraph two = two_extension(g, p);
    const bool ok = is_dcoc(six.graph) && is_extending_partition(six.graph, six.partition) &&
                    is_dcoc(four) && is_dcoc(two);
    if (!ok) { pass = false; d << "failure at order " << g.order() << " "; }
    else ++extended;
  }
  d << "extended=" << extended;
  return {8, "all three extensions of corpus cliques are deeply critical", pass, d.str(), 0};
}

CriterionResult c9_solver_oracle(const Ctx& ctx) {
  std::uint64_t checked = 0, disagreements = 0;
  for_each_oriented_graph(5, [&](const OrientedGraph& g) {
    ++checked;
    if (oriented_chromatic_number(g).chromatic_number != reference_chi_o(g)) ++disagreements;
  });
  const std::uint64_t order5 = checked;
  std::mt19937_64 rng(777);
  const int trials = ctx.full() ? 1000 : 250;
  for (int t = 0; t < trials; ++t) {
    const int n = static_cast<int>(rng() % 6) + 1;
    const OrientedGraph g = random_graph(n, rng);
    ++checked;
    if (oriented_chromatic_number(g).chromatic_number != reference_chi_o(g)) ++disagreements;
  }
  std::ostringstream d;
  d << "order5=" << order5 << " random=" << trials << " disagreements=" << disagreements;
  return {9, "solver matches the exhaustive-partition oracle", order5 == 582 && disagreements == 0,
          d.str(), 0};
}

CriterionResult c10_circulant_scale(const Ctx& ctx) {
  bool pass = true;
  std::ostringstream d;
  const int both_top = ctx.full() ? 33 : 21;
  for (int n = 5; n <= both_top; n += 2) {
    CirculantScanOptions ex;
    ex.mode = ScanMode::exhaustive;
    ex.jobs = ctx.opts.jobs;
    CirculantScanOptions pr;
    pr.mode = ScanMode::pruned;
    pr.jobs = ctx.opts.jobs;
    const CirculantScanResult a = scan_circulants(n, ex);
    const CirculantScanResult b = scan_circulants(n, pr);
    if (!a.completed || !b.completed || a.found != b.found) {
      pass = false;
      d << "n=" << n << " modes disagree ";
    }
    d << "n" << n << ":" << a.found.size() << "/" << a.classes.size() << " ";
  }
  if (ctx.full()) {
    for (int n = both_top + 2; n <= ctx.opts.circulant_pruned_max; n += 2) {
      CirculantScanOptions pr;
      pr.mode = ScanMode::pruned;
      pr.jobs = ctx.opts.jobs;
      const CirculantScanResult r = scan_circulants(n, pr);
      if (!r.completed) pass = false;
      d << "n" << n << ":" << r.found.size() << "/" << r.classes.size() << " ";
    }
  }
  return {10, "circulant census: pruned and exhaustive modes agree", pass,
          "sets/classes per odd n: " + d.str(), 0};
}

}  // namespace

bool VerifyReport::all_passed() const {
  for (const CriterionResult& c : criteria)
    if (!c.passed) return false;
  return !criteria.empty();
}

VerifyReport run_verification_suite(const VerifyOptions& opts, std::ostream* progress) {
  const Ctx ctx{opts};
  using Fn = CriterionResult (*)(const Ctx&);
  const Fn criteria[] = {c1_directed_c5,    c2_order7_census,     c3_embedded_order9,
                         c4_six_extension_identity, c5_odd_orders, c6_lemma_equivalence,
                         c7_even_sweep,     c8_extension_suite,   c9_solver_oracle,
                         c10_circulant_scale};
  VerifyReport report;
  report.level = opts.level;
  for (Fn fn : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult res = fn(ctx);
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (progress) {
      *progress << "[" << (res.passed ? "pass" : "FAIL") << "] criterion " << res.id << ": "
                << res.name << " (" << res.detail << ", "
                << static_cast<int>(res.seconds * 1000) / 1000.0 << " s)\n";
      progress->flush();
    }
    report.criteria.push_back(std::move(res));
  }
  return report;
}

}  // namespace oriclique
