// Command line front end. Each subcommand wraps one library operation; exit
// code 0 = success, 1 = a property verdict came back false, 2 = usage or
// format trouble. The only environment override is ORICLIQUE_OUT (output
// directory for graph files); nothing is written unless --out or that
// variable is set.
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "oriclique/canonical.hpp"
#include "oriclique/circulant.hpp"
#include "oriclique/colouring.hpp"
#include "oriclique/enumeration.hpp"
#include "oriclique/extension.hpp"
#include "oriclique/graph.hpp"
#include "oriclique/io.hpp"
#include "oriclique/verify.hpp"

namespace {

using namespace oriclique;
using nlohmann::json;

int exit_code_for(errc c) {
  switch (c) {
    case errc::no_such_order:
    case errc::even_order:
    case errc::not_extending:
    case errc::not_a_clique:
      return 1;  // honest negative answers, not malfunctions
    default:
      return 2;
  }
}

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) fail(errc::bad_format, "cannot open " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

OrientedGraph load_graph(const std::string& path) {
  return parse_graph(read_input(path));
}

std::optional<std::filesystem::path> out_dir(const std::string& flag) {
  std::filesystem::path dir;
  if (!flag.empty()) {
    dir = flag;
  } else if (const char* env = std::getenv("ORICLIQUE_OUT"); env && *env) {
    dir = env;
  } else {
    return std::nullopt;
  }
  std::filesystem::create_directories(dir);  // checkpoints may land here first
  return dir;
}

void write_file(const std::filesystem::path& dir, const std::string& name,
                const std::string& text) {
  const std::filesystem::path path = dir / name;
  std::ofstream out(path);
  out << text;
  out.close();
  if (!out) fail(errc::bad_format, "cannot write " + path.string());
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

const char* yn(bool b) { return b ? "true" : "false"; }

std::string set_text(const std::vector<int>& s) {
  std::string t = "{";
  for (std::size_t i = 0; i < s.size(); ++i)
    t += (i ? ", " : "") + std::to_string(s[i]);
  return t + "}";
}

std::string checkpoint_name(const std::string& flag, bool disabled,
                            const std::string& def_name,
                            const std::optional<std::filesystem::path>& dir) {
  if (disabled) return {};
  if (!flag.empty()) return flag;
  return (dir ? *dir / def_name : std::filesystem::path(def_name)).string();
}

int cmd_chi(const std::string& file, bool as_json) {
  const OrientedGraph g = load_graph(file);
  const ChiResult r = oriented_chromatic_number(g);
  if (as_json) {
    emit(json{{"graph", graph_json(g)},
              {"chi", r.chromatic_number},
              {"certificate", certificate_json(r.certificate)}});
    return 0;
  }
  std::cout << "chi_o = " << r.chromatic_number << "\n";
  for (std::size_t i = 0; i < r.certificate.classes.size(); ++i) {
    std::cout << "class " << i << ":";
    for (int v : r.certificate.classes[i]) std::cout << ' ' << v;
    std::cout << "\n";
  }
  return 0;
}

int cmd_check(const std::string& file, bool as_json) {
  const OrientedGraph g = load_graph(file);
  const bool clique = is_absolute_clique(g);
  const CriticalityReport rep = criticality_report(g);
  const bool verdict = clique && rep.deeply_critical;
  const char* reason = clique ? "NotDeeplyCritical" : "NotAClique";
  if (as_json) {
    json j = criticality_json(rep);
    j["absolute_clique"] = clique;
    j["deeply_critical_clique"] = verdict;
    if (!verdict) j["reason"] = reason;
    emit(j);
    return verdict ? 0 : 1;
  }
  std::cout << "order " << g.order() << ", " << g.arc_count() << " arcs\n"
            << "chi_o: " << rep.chi << "\n"
            << "absolute clique: " << yn(clique) << "\n";
  for (const ArcCriticality& a : rep.per_arc)
    std::cout << "arc " << a.arc.tail << "->" << a.arc.head << ": chi_o drops to "
              << a.chi_without << " (-" << a.drop << ")\n";
  std::cout << "deeply critical clique: " << yn(verdict) << "\n";
  if (!verdict) std::cout << "reason: " << reason << "\n";
  return verdict ? 0 : 1;
}

ExtendingPartition parse_partition(const std::string& text) {
  ExtendingPartition p;
  std::vector<int>* parts[3] = {&p.x1, &p.x2, &p.x3};
  std::istringstream in(text);
  std::string chunk;
  int idx = 0;
  while (std::getline(in, chunk, '/')) {
    if (idx == 3) fail(errc::bad_partition, "expected three '/'-separated parts");
    std::istringstream part(chunk);
    std::string item;
    while (std::getline(part, item, ','))
      if (!item.empty()) parts[idx]->push_back(std::stoi(item));
    ++idx;
  }
  if (idx != 3) fail(errc::bad_partition, "expected three '/'-separated parts");
  return p;
}

json partition_json(const ExtendingPartition& p) {
  return json{{"x1", p.x1}, {"x2", p.x2}, {"x3", p.x3}};
}

int cmd_extend(const std::string& file, int k, const std::string& partition_text,
               bool as_json, const std::string& out_flag) {
  const OrientedGraph g = load_graph(file);
  ExtendingPartition p;
  if (partition_text.empty()) {
    std::optional<ExtendingPartition> found = find_extending_partition(g);
    if (!found) fail(errc::not_extending, "no extending partition exists");
    p = *found;
  } else {
    p = parse_partition(partition_text);
  }

  OrientedGraph result;
  std::optional<ExtendingPartition> result_partition;
  if (k == 6) {
    SixExtension six = six_extension(g, p);
    result = six.graph;
    result_partition = six.partition;
  } else if (k == 4) {
    result = four_extension(g, p);
  } else {
    result = two_extension(g, p);
  }

  const std::string text = format_ograph(result);
  if (as_json) {
    json j{{"k", k},
           {"partition", partition_json(p)},
           {"graph", graph_json(result)},
           {"ograph", text}};
    if (result_partition) j["result_partition"] = partition_json(*result_partition);
    emit(j);
  } else {
    std::cout << text;
  }
  if (auto dir = out_dir(out_flag))
    write_file(*dir, "extend-" + std::to_string(result.order()) + ".og", text);
  return 0;
}

int cmd_gen_odd(int n, bool as_json, const std::string& out_flag) {
  const OrientedGraph g = generate_odd_dcoc(n);
  const std::string text = format_ograph(g);
  if (as_json)
    emit(json{{"n", n}, {"graph", graph_json(g)}, {"ograph", text}});
  else
    std::cout << text;
  if (auto dir = out_dir(out_flag))
    write_file(*dir, "gen-odd-" + std::to_string(n) + ".og", text);
  return 0;
}

int cmd_circulant_check(int n, std::vector<int> set, bool as_json) {
  std::sort(set.begin(), set.end());
  const CirculantSpec spec{n, set};
  validate(spec);
  const ArithmeticDiagnosis d = arithmetic_conditions(spec);
  if (as_json) {
    emit(json{{"n", n},
              {"set", set},
              {"cover", d.cover},
              {"unique", d.unique},
              {"witness_k", d.witness_k},
              {"deeply_critical_clique", d.ok()}});
    return d.ok() ? 0 : 1;
  }
  std::cout << "C(" << n << ", " << set_text(set) << ")\n"
            << "cover: " << yn(d.cover) << "\n"
            << "unique: " << yn(d.unique) << "\n"
            << "deeply critical clique: " << yn(d.ok()) << "\n";
  if (!d.ok()) std::cout << "witness residue: " << d.witness_k << "\n";
  return d.ok() ? 0 : 1;
}

int cmd_circulant_scan(int n, ScanMode mode, int jobs, const std::string& ckpt,
                       bool no_ckpt, bool even_sweep, bool as_json,
                       const std::string& out_flag) {
  const std::optional<std::filesystem::path> dir = out_dir(out_flag);
  if (even_sweep) {
    const bool clean = verify_no_even_circulant_dcoc(n, jobs);
    if (as_json)
      emit(json{{"even_sweep_max", n}, {"clean", clean}});
    else
      std::cout << "even orders up to " << n
                << ": no deeply critical circulant clique: " << yn(clean) << "\n";
    return clean ? 0 : 1;
  }

  CirculantScanOptions opts;
  opts.mode = mode;
  opts.jobs = jobs;
  opts.checkpoint_path =
      checkpoint_name(ckpt, no_ckpt, "circulant-" + std::to_string(n) + ".ckpt", dir);
  const CirculantScanResult res = scan_circulants(n, opts);
  if (as_json) {
    emit(circulant_scan_json(res));
  } else {
    std::cout << "order " << n << " circulant scan ("
              << (mode == ScanMode::pruned ? "pruned" : "exhaustive")
              << "): leaves=" << res.leaves << " nodes=" << res.nodes << "\n"
              << "found " << res.found.size() << " deeply critical cliques in "
              << res.classes.size() << " multiplier classes\n";
    for (const CirculantClass& c : res.classes)
      std::cout << "class " << set_text(c.set) << " size " << c.class_size << "\n";
    std::cout << "elapsed: " << res.elapsed_seconds << "s"
              << (res.resumed ? " (resumed)" : "") << "\n";
  }
  if (dir)
    for (const CirculantClass& c : res.classes) {
      std::string name = "circulant-" + std::to_string(n);
      for (int e : c.set) name += "-" + std::to_string(e);
      write_file(*dir, name + ".og", format_ograph(build_circulant({n, c.set})));
    }
  return 0;
}

int cmd_scan(int n, CensusFilter filter, std::uint64_t probe_trials,
             std::uint64_t seed, bool probing, int jobs, const std::string& ckpt,
             bool no_ckpt, bool as_json, const std::string& out_flag) {
  const std::optional<std::filesystem::path> dir = out_dir(out_flag);
  ScanReport rep;
  if (probing) {
    rep = random_probe(n, probe_trials, seed);
  } else {
    CensusOptions opts;
    opts.filter = filter;
    opts.jobs = jobs;
    opts.checkpoint_path =
        checkpoint_name(ckpt, no_ckpt, "scan-" + std::to_string(n) + ".ckpt", dir);
    rep = census_dcoc(n, opts);
  }
  if (as_json) {
    emit(scan_report_json(rep));
  } else {
    std::cout << "order " << n << (probing ? " probe" : " census")
              << ": generated=" << rep.generated << " cliques=" << rep.cliques
              << " deeply critical cliques=" << rep.dcoc << "\n"
              << "parameters: " << rep.parameters << "\n";
    for (const std::string& w : rep.witnesses) std::cout << "witness: " << w << "\n";
    std::cout << "elapsed: " << rep.elapsed_seconds << "s"
              << (rep.resumed ? " (resumed)" : "") << "\n";
  }
  if (dir)
    for (std::size_t i = 0; i < rep.witnesses.size(); ++i)
      write_file(*dir,
                 "scan-" + std::to_string(n) + "-witness-" + std::to_string(i) + ".og",
                 format_ograph(parse_compact(rep.witnesses[i])));
  return 0;
}

int cmd_verify(VerifyLevel level, int jobs, bool as_json) {
  VerifyOptions opts;
  opts.level = level;
  opts.jobs = jobs;
  const VerifyReport rep = run_verification_suite(opts, as_json ? nullptr : &std::cout);
  if (as_json) {
    json arr = json::array();
    for (const CriterionResult& c : rep.criteria)
      arr.push_back(json{{"id", c.id},
                         {"name", c.name},
                         {"passed", c.passed},
                         {"detail", c.detail},
                         {"seconds", c.seconds}});
    emit(json{{"level", level == VerifyLevel::full ? "full" : "quick"},
              {"criteria", arr},
              {"all_passed", rep.all_passed()}});
  } else {
    std::cout << "----\n";
    for (const CriterionResult& c : rep.criteria)
      std::cout << (c.passed ? "pass" : "FAIL") << "  criterion " << c.id << "  "
                << c.name << "\n";
    std::cout << (rep.all_passed() ? "all criteria passed" : "criteria FAILED")
              << "\n";
  }
  return rep.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"oriclique: deeply critical oriented clique toolkit"};
  app.require_subcommand(1);
  int rc = 0;

  // chi
  std::string chi_file;
  bool chi_json = false;
  CLI::App* chi = app.add_subcommand("chi", "oriented chromatic number of a graph file");
  chi->add_option("file", chi_file, "graph file (OGRAPH or compact; - for stdin)")
      ->required();
  chi->add_flag("--json", chi_json, "single-line JSON output");
  chi->callback([&] { rc = cmd_chi(chi_file, chi_json); });

  // check
  std::string check_file;
  bool check_json = false;
  CLI::App* check =
      app.add_subcommand("check", "absolute clique + deep criticality report");
  check->add_option("file", check_file, "graph file (OGRAPH or compact; - for stdin)")
      ->required();
  check->add_flag("--json", check_json, "single-line JSON output");
  check->callback([&] { rc = cmd_check(check_file, check_json); });

  // extend
  std::string ext_file, ext_partition, ext_out;
  int ext_k = 6;
  bool ext_json = false;
  CLI::App* extend = app.add_subcommand("extend", "2-, 4- or 6-extension of a graph");
  extend->add_option("file", ext_file, "graph file (OGRAPH or compact; - for stdin)")
      ->required();
  extend->add_option("--k", ext_k, "extension size")
      ->check(CLI::IsMember({2, 4, 6}))
      ->required();
  extend->add_option("--partition", ext_partition,
                     "extending partition 'a,b/c,d/e,f' (default: search)");
  extend->add_option("--out", ext_out, "directory for the result file");
  extend->add_flag("--json", ext_json, "single-line JSON output");
  extend->callback([&] { rc = cmd_extend(ext_file, ext_k, ext_partition, ext_json, ext_out); });

  // gen-odd
  int gen_n = 0;
  std::string gen_out;
  bool gen_json = false;
  CLI::App* gen = app.add_subcommand(
      "gen-odd", "deeply critical oriented clique of odd order (5, 9, 11, ...)");
  gen->add_option("--n", gen_n, "target order")->required();
  gen->add_option("--out", gen_out, "directory for the result file");
  gen->add_flag("--json", gen_json, "single-line JSON output");
  gen->callback([&] { rc = cmd_gen_odd(gen_n, gen_json, gen_out); });

  // circulant check | scan
  CLI::App* circ = app.add_subcommand("circulant", "circulant digraph tools");
  circ->require_subcommand(1);

  int cc_n = 0;
  std::vector<int> cc_set;
  bool cc_json = false;
  CLI::App* ccheck =
      circ->add_subcommand("check", "arithmetic deeply-critical-clique test for C(n, S)");
  ccheck->add_option("--n", cc_n, "order")->required();
  ccheck->add_option("--set", cc_set, "connection set, comma separated")
      ->delimiter(',')
      ->required();
  ccheck->add_flag("--json", cc_json, "single-line JSON output");
  ccheck->callback([&] { rc = cmd_circulant_check(cc_n, cc_set, cc_json); });

  int cs_n = 0, cs_jobs = 1;
  ScanMode cs_mode = ScanMode::pruned;
  std::string cs_ckpt, cs_out;
  bool cs_no_ckpt = false, cs_even = false, cs_json = false;
  CLI::App* cscan = circ->add_subcommand("scan", "scan all connection sets of order n");
  cscan->add_option("--n", cs_n, "order (with --even-sweep: largest even order)")
      ->required();
  cscan
      ->add_option("--mode", cs_mode, "search mode")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, ScanMode>{{"pruned", ScanMode::pruned},
                                          {"exhaustive", ScanMode::exhaustive}}))
      ->default_str("pruned");
  cscan->add_option("--jobs", cs_jobs, "worker threads")->check(CLI::PositiveNumber);
  cscan->add_option("--checkpoint", cs_ckpt, "checkpoint file (default circulant-<n>.ckpt)");
  cscan->add_flag("--no-checkpoint", cs_no_ckpt, "disable checkpointing");
  cscan->add_flag("--even-sweep", cs_even,
                  "verify that no even order up to --n yields a find");
  cscan->add_option("--out", cs_out, "directory for witness files");
  cscan->add_flag("--json", cs_json, "single-line JSON output");
  cscan->callback([&] {
    rc = cmd_circulant_scan(cs_n, cs_mode, cs_jobs, cs_ckpt, cs_no_ckpt, cs_even,
                            cs_json, cs_out);
  });

  // scan (census / probe)
  int sc_n = 0, sc_jobs = 1;
  CensusFilter sc_filter = CensusFilter::cliques_first;
  std::uint64_t sc_trials = 0, sc_seed = 0;
  std::string sc_ckpt, sc_out;
  bool sc_no_ckpt = false, sc_json = false;
  CLI::App* scan = app.add_subcommand(
      "scan", "exhaustive census (or random probe) of order-n oriented graphs");
  scan->add_option("--n", sc_n, "order")->required();
  scan->add_option("--filter", sc_filter, "census filter")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, CensusFilter>{{"cliques-first", CensusFilter::cliques_first},
                                              {"all", CensusFilter::all}}))
      ->default_str("cliques-first");
  CLI::Option* probe_opt =
      scan->add_option("--probe", sc_trials, "sample this many random graphs instead");
  CLI::Option* seed_opt = scan->add_option("--seed", sc_seed, "probe RNG seed");
  probe_opt->needs(seed_opt);
  seed_opt->needs(probe_opt);
  scan->add_option("--jobs", sc_jobs, "worker threads")->check(CLI::PositiveNumber);
  scan->add_option("--checkpoint", sc_ckpt, "checkpoint file (default scan-<n>.ckpt)");
  scan->add_flag("--no-checkpoint", sc_no_ckpt, "disable checkpointing");
  scan->add_option("--out", sc_out, "directory for witness files");
  scan->add_flag("--json", sc_json, "single-line JSON output");
  scan->callback([&] {
    rc = cmd_scan(sc_n, sc_filter, sc_trials, sc_seed, probe_opt->count() > 0,
                  sc_jobs, sc_ckpt, sc_no_ckpt, sc_json, sc_out);
  });

  // verify-paper
  bool vp_quick = false, vp_full = false, vp_json = false;
  int vp_jobs = 1;
  CLI::App* verify = app.add_subcommand(
      "verify-paper", "run the built-in verification suite (pass/fail table)");
  CLI::Option* q = verify->add_flag("--quick", vp_quick, "desk-scale subset (default)");
  verify->add_flag("--full", vp_full, "everything, including the long scans")
      ->excludes(q);
  verify->add_option("--jobs", vp_jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--json", vp_json, "single-line JSON output");
  verify->callback([&] {
    rc = cmd_verify(vp_full ? VerifyLevel::full : VerifyLevel::quick, vp_jobs, vp_json);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
