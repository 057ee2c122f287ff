#include "oriclique/circulant.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "json.hpp"

namespace oriclique {

namespace {

using nlohmann::json;

bool unique_ok(const std::vector<int>& cnt, int n, int h) {
  const int k2 = (2 * h) % n;
  const int neg = (n - k2) % n;
  return cnt[k2] == 1 && neg != k2 && cnt[neg] == 0;
}

// cnt[r] = unordered pairs {x,y} from S u {0} with x+y = r (mod n),
// including {0,0}. Maintained incrementally by the scan.
struct PairCounts {
  int n;
  std::vector<int> cnt;
  std::vector<int> sel;

  explicit PairCounts(int order) : n(order), cnt(static_cast<std::size_t>(order), 0) {
    cnt[0] = 1;
  }
  void add(int e) {
    ++cnt[e % n];  // pair {0, e}
    for (int x : sel) ++cnt[(e + x) % n];
    ++cnt[(2 * e) % n];  // pair {e, e}
    sel.push_back(e);
  }
  void remove(int e) {
    sel.pop_back();
    --cnt[e % n];
    for (int x : sel) --cnt[(e + x) % n];
    --cnt[(2 * e) % n];
  }
  bool all_unique() const {
    for (int h : sel)
      if (!unique_ok(cnt, n, h)) return false;
    return true;
  }
  bool covers() const {
    for (int k = 1; k < n; ++k)
      if (cnt[k] == 0 && cnt[n - k] == 0) return false;
    return true;
  }
};

struct ChunkPartial {
  std::vector<std::vector<int>> found;
  std::uint64_t leaves = 0, nodes = 0;
};

struct Walker {
  int n, npairs;
  ScanMode mode;
  PairCounts pc;
  ChunkPartial out;

  Walker(int order, int pairs, ScanMode m) : n(order), npairs(pairs), mode(m), pc(order) {}

  void leaf() {
    ++out.leaves;
    if (pc.sel.empty()) return;  // arcless circulant: never deeply critical
    if (mode == ScanMode::exhaustive && !pc.all_unique()) return;
    if (!pc.covers()) return;
    std::vector<int> s = pc.sel;
    std::sort(s.begin(), s.end());
    out.found.push_back(std::move(s));
  }

  void dfs(int pair) {
    ++out.nodes;
    if (pair == npairs) { leaf(); return; }
    const int k = pair + 1;
    dfs(pair + 1);  // residue pair absent
    for (int e : {k, n - k}) {
      pc.add(e);
      if (mode == ScanMode::exhaustive || pc.all_unique()) dfs(pair + 1);
      pc.remove(e);
    }
  }

  // Apply one fixed chunk digit; false only when pruning kills the prefix.
  bool apply(int pair, int digit) {
    if (digit == 0) return true;
    const int k = pair + 1;
    pc.add(digit == 1 ? k : n - k);
    return mode == ScanMode::exhaustive || pc.all_unique();
  }
};

std::string mode_name(ScanMode m) {
  return m == ScanMode::pruned ? "pruned" : "exhaustive";
}

void write_checkpoint(const std::string& path, const json& doc) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << doc.dump();
  }
  std::filesystem::rename(tmp, path);
}

std::vector<int> multiplier_image(const std::vector<int>& set, int n, int c) {
  std::vector<int> img;
  img.reserve(set.size());
  for (int k : set) img.push_back(static_cast<int>((static_cast<long long>(c) * k) % n));
  std::sort(img.begin(), img.end());
  return img;
}

}  // namespace

void validate(const CirculantSpec& spec) {
  if (spec.n < 1) fail(errc::bad_connection_set, "order must be at least 1");
  int prev = 0;
  for (int k : spec.set) {
    if (k < 1 || k >= spec.n)
      fail(errc::bad_connection_set,
           "element " + std::to_string(k) + " outside 1.." + std::to_string(spec.n - 1));
    if (k <= prev) fail(errc::bad_connection_set, "elements must be strictly ascending");
    prev = k;
    if (2 * k == spec.n)
      fail(errc::bad_connection_set,
           "element " + std::to_string(k) + " is its own negative mod " + std::to_string(spec.n));
  }
  for (int k : spec.set)
    if (std::binary_search(spec.set.begin(), spec.set.end(), spec.n - k))
      fail(errc::bad_connection_set, "elements " + std::to_string(k) + " and " +
                                         std::to_string(spec.n - k) + " are mutual negatives");
}

OrientedGraph build_circulant(const CirculantSpec& spec) {
  validate(spec);
  std::vector<Arc> arcs;
  arcs.reserve(spec.set.size() * static_cast<std::size_t>(spec.n));
  for (int i = 0; i < spec.n; ++i)
    for (int k : spec.set) arcs.push_back({i, (i + k) % spec.n});
  return OrientedGraph::build(spec.n, arcs);
}

ArithmeticDiagnosis arithmetic_conditions(const CirculantSpec& spec) {
  validate(spec);
  if (spec.set.empty()) return {false, true, -1};
  PairCounts pc(spec.n);
  for (int k : spec.set) pc.add(k);
  ArithmeticDiagnosis d{true, true, -1};
  for (int h : spec.set)
    if (!unique_ok(pc.cnt, spec.n, h)) {
      d.unique = false;
      d.witness_k = (2 * h) % spec.n;
      break;
    }
  for (int k = 1; k < spec.n; ++k)
    if (pc.cnt[k] == 0 && pc.cnt[spec.n - k] == 0) {
      d.cover = false;
      if (d.witness_k < 0) d.witness_k = k;
      break;
    }
  return d;
}

bool arithmetic_dcoc_check(const CirculantSpec& spec) {
  return arithmetic_conditions(spec).ok();
}

std::vector<int> multiplier_canonical(const CirculantSpec& spec) {
  validate(spec);
  if (spec.n == 1) return spec.set;
  std::vector<int> best = spec.set;
  for (int c = 1; c < spec.n; ++c) {
    if (std::gcd(c, spec.n) != 1) continue;
    std::vector<int> img = multiplier_image(spec.set, spec.n, c);
    if (img < best) best = std::move(img);
  }
  return best;
}

int multiplier_class_size(const CirculantSpec& spec) {
  validate(spec);
  if (spec.n == 1) return 1;
  std::vector<std::vector<int>> images;
  for (int c = 1; c < spec.n; ++c) {
    if (std::gcd(c, spec.n) != 1) continue;
    images.push_back(multiplier_image(spec.set, spec.n, c));
  }
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return static_cast<int>(images.size());
}

CirculantScanResult scan_circulants(int n, const CirculantScanOptions& opts) {
  if (n < 1) fail(errc::bad_argument, "order must be at least 1");
  const auto t0 = std::chrono::steady_clock::now();
  const int npairs = (n - 1) / 2;
  const int prefix = std::min(5, npairs);
  int nchunks = 1;
  for (int i = 0; i < prefix; ++i) nchunks *= 3;

  CirculantScanResult res;
  res.n = n;
  res.mode = opts.mode;

  std::map<int, ChunkPartial> done;
  if (!opts.checkpoint_path.empty() && std::filesystem::exists(opts.checkpoint_path)) {
    std::ifstream in(opts.checkpoint_path);
    json doc = json::parse(in, nullptr, false);
    if (!doc.is_discarded() && doc.value("kind", "") == "circulant-scan" &&
        doc.value("n", -1) == n && doc.value("mode", "") == mode_name(opts.mode) &&
        doc.value("prefix_pairs", -1) == prefix) {
      for (auto& [key, val] : doc["chunks"].items()) {
        ChunkPartial p;
        p.leaves = val.value("leaves", 0ull);
        p.nodes = val.value("nodes", 0ull);
        for (auto& s : val["found"]) p.found.push_back(s.get<std::vector<int>>());
        done.emplace(std::stoi(key), std::move(p));
      }
      res.resumed = !done.empty();
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
      entry["leaves"] = p.leaves;
      entry["nodes"] = p.nodes;
      entry["found"] = p.found;
      chunks[std::to_string(id)] = std::move(entry);
    }
    json doc{{"kind", "circulant-scan"},
             {"n", n},
             {"mode", mode_name(opts.mode)},
             {"prefix_pairs", prefix},
             {"chunks", std::move(chunks)}};
    write_checkpoint(opts.checkpoint_path, doc);
  };

  auto run_chunk = [&](int chunk) {
    Walker w(n, npairs, opts.mode);
    bool alive = true;
    int digits = chunk;
    for (int p = 0; p < prefix && alive; ++p) {
      alive = w.apply(p, digits % 3);
      digits /= 3;
    }
    if (alive) w.dfs(prefix);
    std::lock_guard<std::mutex> lock(mu);
    done.emplace(chunk, std::move(w.out));
    save();
  };

  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= pending.size()) return;
      run_chunk(pending[i]);
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

  res.completed = static_cast<int>(done.size()) == nchunks;
  for (const auto& [id, p] : done) {
    res.leaves += p.leaves;
    res.nodes += p.nodes;
    for (const auto& s : p.found) res.found.push_back(s);
  }
  std::sort(res.found.begin(), res.found.end());

  std::map<std::vector<int>, int> reps;
  for (const auto& s : res.found) {
    std::vector<int> canon = multiplier_canonical({n, s});
    ++reps[std::move(canon)];
  }
  for (const auto& [rep, seen] : reps) {
    (void)seen;
    res.classes.push_back({rep, multiplier_class_size({n, rep})});
  }

  if (!opts.checkpoint_path.empty()) {
    if (res.completed) std::filesystem::remove(opts.checkpoint_path);
    else save();
  }
  res.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

bool verify_no_even_circulant_dcoc(int n_max, int jobs) {
  for (int n = 2; n <= n_max; n += 2) {
    bool rejected = false;
    try {
      validate({n, {n / 2}});
    } catch (const Error& e) {
      rejected = e.code() == errc::bad_connection_set;
    }
    if (!rejected) return false;
    // any x, y with x + y = n/2 (mod n) breaks uniqueness at residue 2x
    for (int x = 1; x < n; ++x)
      for (int y = x; y < n; ++y) {
        if ((x + y) % n != n / 2) continue;
        std::vector<int> s = x == y ? std::vector<int>{x} : std::vector<int>{x, y};
        CirculantSpec spec{n, s};
        try {
          validate(spec);
        } catch (const Error&) {
          continue;  // set not anti-symmetric; cannot occur in a scan
        }
        if (arithmetic_conditions(spec).unique) return false;
      }
    CirculantScanOptions opts;
    opts.jobs = jobs;
    if (!scan_circulants(n, opts).found.empty()) return false;
  }
  return true;
}

}  // namespace oriclique
