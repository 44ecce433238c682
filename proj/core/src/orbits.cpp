#include "arithdyn/orbits.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "arithdyn/dynatomic.hpp"
#include "arithdyn/errors.hpp"
#include "arithdyn/roots.hpp"

namespace arithdyn {

RatPoint parse_point(const std::string& text) {
  if (text == "inf") return RatPoint::infinity();
  return RatPoint::finite(BigRat::parse(text));
}

namespace {

void require_nondegenerate(const BigRat& k, const BigRat& b) {
  if (k.is_zero() || b.is_zero()) throw DegenerateMap("k*b = 0 does not give a degree 2 map");
}

}  // namespace

RatPoint apply_map(const BigRat& k, const BigRat& b, const RatPoint& p) {
  require_nondegenerate(k, b);
  if (p.is_infinity() || p.value().is_zero()) return RatPoint::infinity();
  const BigRat& z = p.value();
  return RatPoint::finite(k * (z * z + b) / z);
}

std::optional<unsigned> exact_period(const BigRat& k, const BigRat& b, const RatPoint& p,
                                     unsigned max_period) {
  RatPoint q = p;
  for (unsigned m = 1; m <= max_period; ++m) {
    q = apply_map(k, b, q);
    if (q == p) return m;
  }
  return std::nullopt;
}

std::vector<PeriodicPoint> periodic_points(const BigRat& k, const BigRat& b, unsigned n_max) {
  require_nondegenerate(k, b);
  if (n_max == 0) throw std::invalid_argument("periodic_points: n_max must be at least 1");
  std::vector<PeriodicPoint> out{{RatPoint::infinity(), 1}};
  DynatomicEngine engine(MapFamily(k, b));
  for (unsigned n = 1; n <= n_max; ++n) {
    const MultiPoly dehom = dehomogenize(engine.dynatomic(n)).trimmed();
    if (dehom.is_constant()) continue;
    for (const BigRat& z : rational_roots(dehom)) {
      const RatPoint p = RatPoint::finite(z);
      if (exact_period(k, b, p, n) == n) out.push_back({p, n});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const PeriodicPoint& x, const PeriodicPoint& y) { return x.point < y.point; });
  return out;
}

std::vector<RatPoint> rational_preimages(const BigRat& k, const BigRat& b, const RatPoint& q) {
  require_nondegenerate(k, b);
  if (q.is_infinity()) return {RatPoint::infinity(), RatPoint::finite(BigRat(0))};
  // k z^2 - y z + k b = 0
  const BigRat& y = q.value();
  const auto root = rational_sqrt(y * y - BigRat(4) * k * k * b);
  if (!root) return {};
  std::set<RatPoint> pts{RatPoint::finite((y + *root) / (BigRat(2) * k)),
                         RatPoint::finite((y - *root) / (BigRat(2) * k))};
  return {pts.begin(), pts.end()};
}

// ---------------------------------------------------------------------------

namespace {

struct CycleStructure {
  std::vector<bool> on_cycle;
  std::vector<std::vector<std::size_t>> cycles;  // in successor order
};

CycleStructure find_cycles(const std::vector<std::size_t>& succ) {
  const std::size_t n = succ.size();
  CycleStructure cs{std::vector<bool>(n, false), {}};
  std::vector<int> state(n, 0);  // 0 new, 1 on current path, 2 done
  for (std::size_t start = 0; start < n; ++start) {
    if (state[start] != 0) continue;
    std::vector<std::size_t> path;
    std::size_t v = start;
    while (state[v] == 0) {
      state[v] = 1;
      path.push_back(v);
      v = succ[v];
    }
    if (state[v] == 1) {
      std::vector<std::size_t> cycle;
      std::size_t u = v;
      do {
        cycle.push_back(u);
        cs.on_cycle[u] = true;
        u = succ[u];
      } while (u != v);
      cs.cycles.push_back(std::move(cycle));
    }
    for (std::size_t p : path) state[p] = 2;
  }
  return cs;
}

}  // namespace

std::string functional_graph_label(const std::vector<std::size_t>& succ) {
  const std::size_t n = succ.size();
  for (std::size_t s : succ) {
    if (s >= n) throw std::invalid_argument("functional_graph_label: successor out of range");
  }
  const CycleStructure cs = find_cycles(succ);
  std::vector<std::vector<std::size_t>> children(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (!cs.on_cycle[v]) children[succ[v]].push_back(v);
  }
  std::vector<std::string> memo(n);
  std::function<const std::string&(std::size_t)> code = [&](std::size_t v) -> const std::string& {
    if (!memo[v].empty()) return memo[v];
    std::vector<std::string> sub;
    for (std::size_t c : children[v]) sub.push_back(code(c));
    std::sort(sub.begin(), sub.end());
    std::string s = "(";
    for (const auto& x : sub) s += x;
    s += ")";
    memo[v] = std::move(s);
    return memo[v];
  };
  std::vector<std::string> cycle_codes;
  for (const auto& cycle : cs.cycles) {
    std::vector<std::string> seq;
    for (std::size_t v : cycle) seq.push_back(code(v));
    std::vector<std::string> best = seq;
    for (std::size_t r = 1; r < seq.size(); ++r) {
      std::rotate(seq.begin(), seq.begin() + 1, seq.end());
      if (seq < best) best = seq;
    }
    std::string s = "[";
    for (const auto& x : best) s += x;
    s += "]";
    cycle_codes.push_back(std::move(s));
  }
  std::sort(cycle_codes.begin(), cycle_codes.end());
  std::string label;
  for (const auto& c : cycle_codes) label += c;
  return label;
}

PreperGraph PreperGraph::from_edges(std::map<RatPoint, RatPoint> edges) {
  PreperGraph g;
  g.edges_ = std::move(edges);
  std::vector<RatPoint> verts;
  std::map<RatPoint, std::size_t> index;
  for (const auto& [p, q] : g.edges_) {
    index.emplace(p, verts.size());
    verts.push_back(p);
  }
  std::vector<std::size_t> succ(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    auto it = index.find(g.edges_.at(verts[i]));
    if (it == index.end()) {
      throw std::invalid_argument("PreperGraph: image of " + verts[i].to_string() +
                                  " is not a vertex");
    }
    succ[i] = it->second;
  }
  const CycleStructure cs = find_cycles(succ);
  std::vector<unsigned> cycle_len(verts.size(), 0);
  for (const auto& cycle : cs.cycles) {
    std::vector<RatPoint> pts;
    for (std::size_t v : cycle) {
      cycle_len[v] = static_cast<unsigned>(cycle.size());
      pts.push_back(verts[v]);
    }
    std::rotate(pts.begin(), std::min_element(pts.begin(), pts.end()), pts.end());
    g.cycles_.push_back(std::move(pts));
  }
  std::sort(g.cycles_.begin(), g.cycles_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::size_t v = 0; v < verts.size(); ++v) {
    if (cs.on_cycle[v]) continue;
    unsigned steps = 0;
    std::size_t u = v;
    while (!cs.on_cycle[u]) {
      u = succ[u];
      ++steps;
    }
    g.tails_.emplace(verts[v], TailType{cycle_len[u], steps});
  }
  return g;
}

std::vector<RatPoint> PreperGraph::vertices() const {
  std::vector<RatPoint> v;
  v.reserve(edges_.size());
  for (const auto& [p, q] : edges_) v.push_back(p);
  return v;
}

PreperGraph preperiodic_closure(const BigRat& k, const BigRat& b, const ClosureOptions& opts) {
  std::map<RatPoint, RatPoint> edges;
  std::deque<std::pair<RatPoint, unsigned>> queue;
  for (const auto& pp : periodic_points(k, b, opts.n_max)) {
    edges.emplace(pp.point, apply_map(k, b, pp.point));
    queue.emplace_back(pp.point, 0);
  }
  while (!queue.empty()) {
    auto [q, depth] = queue.front();
    queue.pop_front();
    for (const RatPoint& z : rational_preimages(k, b, q)) {
      if (edges.count(z) != 0) continue;
      if (depth + 1 > opts.depth_cap) {
        throw CapExceeded("preimage depth exceeds " + std::to_string(opts.depth_cap));
      }
      edges.emplace(z, q);
      if (edges.size() > opts.size_cap) {
        throw CapExceeded("closure size exceeds " + std::to_string(opts.size_cap));
      }
      queue.emplace_back(z, depth + 1);
    }
  }
  return PreperGraph::from_edges(std::move(edges));
}

namespace {

std::string label_of(const PreperGraph& g) {
  const auto verts = g.vertices();
  std::map<RatPoint, std::size_t> index;
  for (std::size_t i = 0; i < verts.size(); ++i) index.emplace(verts[i], i);
  std::vector<std::size_t> succ(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) succ[i] = index.at(g.edges().at(verts[i]));
  return functional_graph_label(succ);
}

PreperGraph graph_from_text(std::initializer_list<std::pair<const char*, const char*>> edges) {
  std::map<RatPoint, RatPoint> m;
  for (const auto& [from, to] : edges) m.emplace(parse_point(from), parse_point(to));
  return PreperGraph::from_edges(std::move(m));
}

}  // namespace

const std::vector<std::pair<std::string, PreperGraph>>& reference_shapes() {
  static const std::vector<std::pair<std::string, PreperGraph>> shapes{
      {"pole", graph_from_text({{"inf", "inf"}, {"0", "inf"}})},
      {"pole-preimages", graph_from_text({{"inf", "inf"}, {"0", "inf"}, {"1", "0"}, {"-1", "0"}})},
      {"two-cycle", graph_from_text({{"inf", "inf"},
                                     {"0", "inf"},
                                     {"1", "-1"},
                                     {"-1", "1"},
                                     {"-2", "-1"},
                                     {"2", "1"}})},
      {"finite-fixed", graph_from_text({{"inf", "inf"}, {"0", "inf"}, {"1", "1"}, {"-1", "-1"}})},
  };
  return shapes;
}

StructureDescriptor classify_graph(const PreperGraph& g) {
  StructureDescriptor d;
  for (const auto& c : g.cycles()) d.cycle_lengths.push_back(static_cast<unsigned>(c.size()));
  std::sort(d.cycle_lengths.begin(), d.cycle_lengths.end());
  for (const auto& [p, t] : g.tails()) d.tails.push_back(t);
  std::sort(d.tails.begin(), d.tails.end());
  d.count = g.size();
  d.label = label_of(g);
  for (const auto& [name, ref] : reference_shapes()) {
    if (label_of(ref) == d.label) {
      d.shape = name;
      break;
    }
  }
  return d;
}

std::string graph_to_dot(const PreperGraph& g, const BigRat& k, const BigRat& b) {
  std::ostringstream out;
  out << "digraph \"phi k=" << k.to_string() << " b=" << b.to_string() << "\" {\n";
  for (const auto& [p, q] : g.edges()) out << "  \"" << p.to_string() << "\";\n";
  for (const auto& [p, q] : g.edges()) {
    out << "  \"" << p.to_string() << "\" -> \"" << q.to_string() << "\";\n";
  }
  out << "}\n";
  return out.str();
}

std::string graph_to_json(const PreperGraph& g, const BigRat& k, const BigRat& b) {
  const StructureDescriptor d = classify_graph(g);
  nlohmann::ordered_json j;
  j["k"] = k.to_string();
  j["b"] = b.to_string();
  j["count"] = g.size();
  j["cycles"] = nlohmann::ordered_json::array();
  for (const auto& c : g.cycles()) {
    nlohmann::ordered_json cj;
    cj["length"] = c.size();
    cj["points"] = nlohmann::ordered_json::array();
    for (const auto& p : c) cj["points"].push_back(p.to_string());
    j["cycles"].push_back(std::move(cj));
  }
  j["tails"] = nlohmann::ordered_json::array();
  for (const auto& [p, t] : g.tails()) {
    nlohmann::ordered_json tj;
    tj["point"] = p.to_string();
    tj["type"] = t.label();
    tj["cycle_length"] = t.cycle_length;
    tj["steps"] = t.steps;
    j["tails"].push_back(std::move(tj));
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& [p, q] : g.edges()) {
    j["edges"].push_back({{"from", p.to_string()}, {"to", q.to_string()}});
  }
  j["label"] = d.label;
  j["shape"] = d.shape;
  return j.dump();
}

std::string graph_to_text(const PreperGraph& g, const BigRat& k, const BigRat& b) {
  const StructureDescriptor d = classify_graph(g);
  std::ostringstream out;
  out << "phi(z) = k(z^2 + b)/z with k = " << k.to_string() << ", b = " << b.to_string() << "\n";
  out << "rational preperiodic points: " << g.size() << "\n";
  for (const auto& c : g.cycles()) {
    out << "  cycle of length " << c.size() << ":";
    for (const auto& p : c) out << " " << p.to_string();
    out << "\n";
  }
  for (const auto& [p, t] : g.tails()) {
    out << "  " << p.to_string() << " -> " << g.edges().at(p).to_string() << "  type "
        << t.label() << "\n";
  }
  out << "shape: " << (d.shape.empty() ? "unmatched" : d.shape) << "  label " << d.label << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------

std::vector<BigRat> scan_parameters(const ScanRange& range) {
  std::set<BigRat> out;
  for (long q = 1; q <= range.den_max; ++q) {
    for (long p = 1; p <= range.num_max; ++p) {
      BigInt g;
      mpz_gcd_ui(g.get_mpz_t(), BigInt(p).get_mpz_t(), static_cast<unsigned long>(q));
      if (g != 1) continue;
      out.insert(BigRat(BigInt(p), BigInt(q)));
      out.insert(BigRat(BigInt(-p), BigInt(q)));
    }
  }
  return {out.begin(), out.end()};
}

ScanSummary scan(const BigRat& k, const ScanRange& range, unsigned jobs,
                 std::optional<unsigned> n_max) {
  if (!n_max) {
    if (k != BigRat(1) && k != BigRat(-1)) {
      throw std::invalid_argument("scan: n_max must be given explicitly unless k = +-1");
    }
    n_max = 4;
  }
  ScanSummary s;
  s.k = k;
  s.n_max = *n_max;
  const std::vector<BigRat> params = scan_parameters(range);
  s.rows.resize(params.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < params.size(); i = next++) {
      ScanRow row;
      row.b = params[i];
      try {
        ClosureOptions opts;
        opts.n_max = *n_max;
        const PreperGraph g = preperiodic_closure(k, row.b, opts);
        const StructureDescriptor d = classify_graph(g);
        row.count = d.count;
        row.label = d.label;
        row.shape = d.shape;
      } catch (const std::exception& ex) {
        row.error = ex.what();
      }
      s.rows[i] = std::move(row);
    }
  };
  const unsigned width = std::max(1U, jobs);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < width; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& row : s.rows) {
    if (!row.error.empty()) {
      ++s.errors;
      continue;
    }
    ++s.count_histogram[row.count];
    ++s.shape_histogram[row.shape.empty() ? "unmatched:" + row.label : row.shape];
  }
  return s;
}

std::string scan_to_json(const ScanSummary& s) {
  nlohmann::ordered_json j;
  j["k"] = s.k.to_string();
  j["n_max"] = s.n_max;
  j["values"] = s.rows.size();
  j["errors"] = s.errors;
  j["count_histogram"] = nlohmann::ordered_json::object();
  for (const auto& [c, n] : s.count_histogram) j["count_histogram"][std::to_string(c)] = n;
  j["shape_histogram"] = nlohmann::ordered_json::object();
  for (const auto& [shape, n] : s.shape_histogram) j["shape_histogram"][shape] = n;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : s.rows) {
    nlohmann::ordered_json r;
    r["b"] = row.b.to_string();
    if (row.error.empty()) {
      r["count"] = row.count;
      r["shape"] = row.shape;
      r["label"] = row.label;
    } else {
      r["error"] = row.error;
    }
    j["rows"].push_back(std::move(r));
  }
  return j.dump();
}

std::string scan_to_text(const ScanSummary& s) {
  std::ostringstream out;
  out << "k = " << s.k.to_string() << ", " << s.rows.size() << " values of b, n_max = " << s.n_max
      << ", errors = " << s.errors << "\n";
  out << "count histogram:\n";
  for (const auto& [c, n] : s.count_histogram) out << "  " << c << ": " << n << "\n";
  out << "shape histogram:\n";
  for (const auto& [shape, n] : s.shape_histogram) out << "  " << shape << ": " << n << "\n";
  out << "rows:\n";
  for (const auto& row : s.rows) {
    out << "  b = " << row.b.to_string() << ": ";
    if (row.error.empty()) {
      out << row.count << " " << (row.shape.empty() ? "unmatched " + row.label : row.shape);
    } else {
      out << "error: " << row.error;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace arithdyn
