#include "oriclique/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "json.hpp"
#include "oriclique/canonical.hpp"
#include "oriclique/colouring.hpp"
#include "oriclique/io.hpp"

namespace oriclique {

namespace {

using nlohmann::json;

// Canonical-augmentation step: extend g by vertex p in all 3^p ways, keep a
// child only when removing its canonical last vertex recovers g. Each
// isomorphism class of each order is reached exactly once; children of one
// parent are visited in canonical-code order so the stream is deterministic.
void grow(const OrientedGraph& g, int target, const GraphVisitor& visit) {
  if (g.order() == target) {
    visit(g);
    return;
  }
  const int p = g.order();
  const std::string parent = canonical_code(g).bytes;
  const std::vector<Arc> base = g.arcs();
  int pow3 = 1;
  for (int i = 0; i < p; ++i) pow3 *= 3;
  std::set<std::string> seen;                  // every candidate code examined
  std::map<std::string, OrientedGraph> batch;  // accepted children by code
  for (int vec = 0; vec < pow3; ++vec) {
    std::vector<Arc> arcs = base;
    int d = vec;
    for (int j = 0; j < p; ++j, d /= 3) {
      const int state = d % 3;
      if (state == 1) arcs.push_back({j, p});
      else if (state == 2) arcs.push_back({p, j});
    }
    OrientedGraph child = OrientedGraph::build(p + 1, arcs);
    CanonicalForm cf = canonical_form(child);
    if (!seen.insert(cf.code.bytes).second) continue;
    int vstar = -1;
    for (int v = 0; v <= p; ++v)
      if (cf.to_canonical[v] == p) { vstar = v; break; }
    const OrientedGraph sub =
        induced_subgraph(child, child.vertex_mask() & ~(1ull << vstar));
    if (canonical_code(sub).bytes != parent) continue;
    batch.emplace(std::move(cf.code.bytes), std::move(child));
  }
  for (const auto& [code, child] : batch) grow(child, target, visit);
}

struct CensusPartial {
  std::uint64_t generated = 0, cliques = 0, dcoc = 0;
  std::vector<std::string> witnesses;
};

std::string filter_name(CensusFilter f) {
  return f == CensusFilter::cliques_first ? "cliques_first" : "all";
}

void write_checkpoint(const std::string& path, const json& doc) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << doc.dump();
  }
  std::filesystem::rename(tmp, path);
}

CensusPartial census_chunk(const OrientedGraph& root, int n, CensusFilter filter) {
  CensusPartial part;
  grow(root, n, [&](const OrientedGraph& g) {
    ++part.generated;
    const bool clique = is_absolute_clique(g);
    if (clique) ++part.cliques;
    if (filter == CensusFilter::cliques_first && !clique) return;
    if (is_deeply_critical(g) && clique) {
      ++part.dcoc;
      part.witnesses.push_back(format_compact(g));
    }
  });
  return part;
}

}  // namespace

void for_each_oriented_graph(int n, const GraphVisitor& visit) {
  if (n < 1 || n > kExhaustiveLimit)
    fail(errc::capacity, "exhaustive generation supports orders 1.." +
                             std::to_string(kExhaustiveLimit));
  grow(OrientedGraph::build(1, {}), n, visit);
}

std::uint64_t count_oriented_graphs(int n) {
  std::uint64_t count = 0;
  for_each_oriented_graph(n, [&](const OrientedGraph&) { ++count; });
  return count;
}

ScanReport census_dcoc(int n, const CensusOptions& opts) {
  if (n < 1 || n > kExhaustiveLimit)
    fail(errc::capacity,
         "census supports orders 1.." + std::to_string(kExhaustiveLimit));
  const auto t0 = std::chrono::steady_clock::now();

  const int level = std::min(5, n - 1);
  std::vector<OrientedGraph> roots;
  if (level < 1) roots.push_back(OrientedGraph::build(1, {}));
  else for_each_oriented_graph(level, [&](const OrientedGraph& g) { roots.push_back(g); });
  const int nchunks = static_cast<int>(roots.size());

  ScanReport rep;
  rep.n = n;
  rep.parameters = "filter=" + filter_name(opts.filter) + " level=" +
                   std::to_string(level < 1 ? 1 : level);

  std::map<int, CensusPartial> done;
  if (!opts.checkpoint_path.empty() && std::filesystem::exists(opts.checkpoint_path)) {
    std::ifstream in(opts.checkpoint_path);
    json doc = json::parse(in, nullptr, false);
    if (!doc.is_discarded() && doc.value("kind", "") == "census" && doc.value("n", -1) == n &&
        doc.value("filter", "") == filter_name(opts.filter) &&
        doc.value("chunk_count", -1) == nchunks) {
      for (auto& [key, val] : doc["chunks"].items()) {
        CensusPartial p;
        p.generated = val.value("generated", 0ull);
        p.cliques = val.value("cliques", 0ull);
        p.dcoc = val.value("dcoc", 0ull);
        for (auto& w : val["witnesses"]) p.witnesses.push_back(w.get<std::string>());
        done.emplace(std::stoi(key), std::move(p));
      }
      rep.resumed = !done.empty();
    }
  }

  std::vector<int> pending;
  for (int c = 0; c < nchunks; ++c)
    if (!done.count(c)) pending.push_back(c);
  if (opts.limit_chunks >= 0 && static_cast<int>(pending.size()) > opts.limit_chunks)
    pending.resize(static_cast<std::size_t>(opts.limit_chunks));

  std::mutex mu;
  std::atomic<std::size_t> next{0};

  auto save = [&]() {
    if (opts.checkpoint_path.empty()) return;
    json chunks = json::object();
    for (const auto& [id, p] : done) {
      json entry;
      entry["generated"] = p.generated;
      entry["cliques"] = p.cliques;
      entry["dcoc"] = p.dcoc;
      entry["witnesses"] = p.witnesses;
      chunks[std::to_string(id)] = std::move(entry);
    }
    json doc{{"kind", "census"},
             {"n", n},
             {"filter", filter_name(opts.filter)},
             {"chunk_count", nchunks},
             {"chunks", std::move(chunks)}};
    write_checkpoint(opts.checkpoint_path, doc);
  };

  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= pending.size()) return;
      const int chunk = pending[i];
      CensusPartial part = census_chunk(roots[static_cast<std::size_t>(chunk)], n, opts.filter);
      std::lock_guard<std::mutex> lock(mu);
      done.emplace(chunk, std::move(part));
      save();
    }
  };

  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1 || pending.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    const std::size_t count = std::min<std::size_t>(static_cast<std::size_t>(jobs), pending.size());
    threads.reserve(count);
    for (std::size_t i = 0; i < count; ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  rep.completed = static_cast<int>(done.size()) == nchunks;
  for (const auto& [id, p] : done) {
    rep.generated += p.generated;
    rep.cliques += p.cliques;
    rep.dcoc += p.dcoc;
    for (const auto& w : p.witnesses) rep.witnesses.push_back(w);
  }
  if (!opts.checkpoint_path.empty()) {
    if (rep.completed) std::filesystem::remove(opts.checkpoint_path);
    else save();
  }
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

ScanReport random_probe(int n, std::uint64_t trials, std::uint64_t seed) {
  if (n < 1 || n > OrientedGraph::kMaxVertices)
    fail(errc::capacity, "probe order outside 1.." +
                             std::to_string(OrientedGraph::kMaxVertices));
  const auto t0 = std::chrono::steady_clock::now();
  ScanReport rep;
  rep.n = n;
  rep.parameters = "trials=" + std::to_string(trials) + " seed=" + std::to_string(seed);

  std::mt19937_64 rng(seed);
  std::set<std::string> keys;
  std::vector<Arc> arcs;
  for (std::uint64_t t = 0; t < trials; ++t) {
    arcs.clear();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        // modulo, not uniform_int_distribution: identical draws on every
        // platform for a fixed seed
        switch (rng() % 3) {
          case 1: arcs.push_back({i, j}); break;
          case 2: arcs.push_back({j, i}); break;
          default: break;
        }
      }
    const OrientedGraph g = OrientedGraph::build(n, arcs);
    ++rep.generated;
    if (!is_absolute_clique(g)) continue;
    ++rep.cliques;
    if (!is_deeply_critical(g)) continue;
    ++rep.dcoc;
    if (keys.size() < 1000) {
      std::string key =
          n <= kCanonicalCapacity ? canonical_code(g).bytes : format_compact(g);
      if (keys.insert(std::move(key)).second) rep.witnesses.push_back(format_compact(g));
    }
  }
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace oriclique
