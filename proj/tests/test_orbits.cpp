#include <algorithm>
#include <numeric>
#include <set>

#include "support.hpp"

#include "arithdyn/errors.hpp"
#include "arithdyn/dynatomic.hpp"
#include "arithdyn/orbits.hpp"
#include "arithdyn/roots.hpp"

using namespace arithdyn;
using namespace support;

namespace {

using Edges = std::map<RatPoint, RatPoint>;

std::set<RatPoint> vertex_set(const PreperGraph& g) {
  const auto v = g.vertices();
  return {v.begin(), v.end()};
}

bool is_preperiodic_by_iteration(const BigRat& k, const BigRat& b, RatPoint p, unsigned steps) {
  std::set<RatPoint> seen{p};
  for (unsigned i = 0; i < steps; ++i) {
    p = apply_map(k, b, p);
    if (!seen.insert(p).second) return true;
  }
  return false;
}

// Brute-force isomorphism test for small functional graphs.
bool isomorphic(const std::vector<std::size_t>& f, const std::vector<std::size_t>& g) {
  if (f.size() != g.size()) return false;
  std::vector<std::size_t> perm(f.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t v = 0; v < f.size() && ok; ++v) ok = perm[f[v]] == g[perm[v]];
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<std::size_t> random_functional_graph(Rng& rng, std::size_t n) {
  std::vector<std::size_t> succ(n);
  for (auto& s : succ) s = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
  return succ;
}

}  // namespace

TEST_SUITE("orbits") {

TEST_CASE("apply_map") {
  CHECK(apply_map(rat(1), rat(-2), pt(1)) == pt(-1));
  CHECK(apply_map(rat(1), rat(7, 3), pt(0)) == inf());
  CHECK(apply_map(rat(1), rat(7, 3), inf()) == inf());
  CHECK(apply_map(rat(-1), rat(-2), pt(1)) == pt(1));
  CHECK(apply_map(rat(2), rat(1, 2), pt(1, 2)) == pt(3));
  CHECK_THROWS_AS(apply_map(rat(0), rat(1), pt(1)), DegenerateMap);
  CHECK_THROWS_AS(apply_map(rat(1), rat(0), pt(1)), DegenerateMap);
}

TEST_CASE("exact period") {
  CHECK(exact_period(rat(1), rat(-2), pt(1), 4) == 2u);
  CHECK(exact_period(rat(1), rat(-2), inf(), 4) == 1u);
  CHECK_FALSE(exact_period(rat(1), rat(-2), pt(2), 10).has_value());
  CHECK(exact_period(rat(-1), rat(-2), pt(-1), 4) == 1u);
}

TEST_CASE("periodic points") {
  using PP = PeriodicPoint;
  CHECK(periodic_points(rat(1), rat(-2), 4) == std::vector<PP>{{inf(), 1}, {pt(-1), 2}, {pt(1), 2}});
  CHECK(periodic_points(rat(1), rat(1), 4) == std::vector<PP>{{inf(), 1}});
  CHECK(periodic_points(rat(-1), rat(-2), 4) == std::vector<PP>{{inf(), 1}, {pt(-1), 1}, {pt(1), 1}});
}

TEST_CASE("rational preimages") {
  CHECK(rational_preimages(rat(1), rat(-2), pt(-1)) == std::vector<RatPoint>{pt(-2), pt(1)});
  CHECK(rational_preimages(rat(1), rat(-2), pt(0)).empty());
  CHECK(rational_preimages(rat(1), rat(3), inf()) == std::vector<RatPoint>{inf(), pt(0)});
  CHECK_THROWS_AS(rational_preimages(rat(1), rat(0), pt(1)), DegenerateMap);
}

TEST_CASE("preimages map forward to their target") {
  Rng rng(91);
  int nonempty = 0;
  for (int i = 0; i < 400; ++i) {
    const BigRat k = rng.rational(3, 3), b = rng.rational(8, 4);
    // Choose Q = phi(z0) half the time so that preimages exist.
    const RatPoint q = i % 2 ? apply_map(k, b, RatPoint::finite(rng.rational(9, 5))) : RatPoint::finite(rng.rational(9, 5, false));
    const auto pre = rational_preimages(k, b, q);
    nonempty += pre.empty() ? 0 : 1;
    for (const auto& z : pre) CHECK(apply_map(k, b, z) == q);
  }
  CHECK(nonempty >= 200);
}

TEST_CASE("preperiodic closures of z + b/z") {
  const auto b1 = preperiodic_closure(rat(1), rat(1));
  CHECK(b1.edges() == Edges{{inf(), inf()}, {pt(0), inf()}});
  const auto bm1 = preperiodic_closure(rat(1), rat(-1));
  CHECK(bm1.edges() == Edges{{inf(), inf()}, {pt(0), inf()}, {pt(1), pt(0)}, {pt(-1), pt(0)}});
  const auto bm2 = preperiodic_closure(rat(1), rat(-2));
  CHECK(bm2.edges() ==
        Edges{{inf(), inf()}, {pt(0), inf()}, {pt(1), pt(-1)}, {pt(-1), pt(1)}, {pt(-2), pt(-1)}, {pt(2), pt(1)}});
  CHECK(preperiodic_closure(rat(1), rat(5)).size() == 2);
  CHECK(classify_graph(b1).shape == "pole");
  CHECK(classify_graph(bm1).shape == "pole-preimages");
  CHECK(classify_graph(bm2).shape == "two-cycle");
}

TEST_CASE("preperiodic closures of -(z + b/z)") {
  CHECK(preperiodic_closure(rat(-1), rat(2)).size() == 2);
  const auto bm1 = preperiodic_closure(rat(-1), rat(-1));
  CHECK(bm1.size() == 4);
  CHECK(classify_graph(bm1).shape == "pole-preimages");
  CHECK(preperiodic_closure(rat(-1), rat(1)).size() == 2);
  // b = -2: the fixed points +-1 each have a second rational preimage.
  const auto bm2 = preperiodic_closure(rat(-1), rat(-2));
  CHECK(bm2.edges() ==
        Edges{{inf(), inf()}, {pt(0), inf()}, {pt(1), pt(1)}, {pt(-1), pt(-1)}, {pt(-2), pt(1)}, {pt(2), pt(-1)}});
  const auto d = classify_graph(bm2);
  CHECK(d.count == 6);
  CHECK(d.cycle_lengths == std::vector<unsigned>{1, 1, 1});
  CHECK(d.shape.empty());
}

TEST_CASE("cap diagnostics") {
  CHECK_THROWS_AS(preperiodic_closure(rat(1), rat(-2), ClosureOptions{4, 64, 3}), CapExceeded);
  CHECK_THROWS_AS(preperiodic_closure(rat(1), rat(-1), ClosureOptions{4, 1, 100}), CapExceeded);
}

TEST_CASE("classification of hand-built graphs") {
  const auto g1b = PreperGraph::from_edges({{inf(), inf()}, {pt(0), inf()}, {pt(1), pt(0)}, {pt(-1), pt(0)}});
  const auto d1b = classify_graph(g1b);
  CHECK(d1b.cycle_lengths == std::vector<unsigned>{1});
  CHECK(d1b.tails == std::vector<TailType>{{1, 1}, {1, 2}, {1, 2}});
  CHECK(d1b.count == 4);

  const auto g1c = PreperGraph::from_edges(
      {{inf(), inf()}, {pt(0), inf()}, {pt(1), pt(-1)}, {pt(-1), pt(1)}, {pt(-2), pt(-1)}, {pt(2), pt(1)}});
  const auto d1c = classify_graph(g1c);
  CHECK(d1c.cycle_lengths == std::vector<unsigned>{1, 2});
  CHECK(d1c.tails == std::vector<TailType>{{1, 1}, {2, 1}, {2, 1}});
  CHECK(d1c.count == 6);
  CHECK(g1c.tails().at(pt(-2)).label() == "2_1");

  const auto g2c = PreperGraph::from_edges({{inf(), inf()}, {pt(0), inf()}, {pt(1), pt(1)}, {pt(-1), pt(-1)}});
  const auto d2c = classify_graph(g2c);
  CHECK(d2c.cycle_lengths == std::vector<unsigned>{1, 1, 1});
  CHECK(d2c.tails == std::vector<TailType>{{1, 1}});
  CHECK(d2c.count == 4);
  CHECK(d2c.shape == "finite-fixed");

  // Same shape on other vertices gives the same label.
  const auto relabeled = PreperGraph::from_edges({{pt(5), pt(5)}, {pt(3), pt(5)}, {pt(7), pt(3)}, {pt(9), pt(3)}});
  CHECK(classify_graph(relabeled).label == d1b.label);
  CHECK(d1b.label != d2c.label);
  CHECK_THROWS_AS(PreperGraph::from_edges({{pt(1), pt(2)}}), std::invalid_argument);
}

TEST_CASE("functional graph labels decide isomorphism") {
  Rng rng(101);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 6));
    const auto f = random_functional_graph(rng, n);
    const auto g = random_functional_graph(rng, n);
    CHECK((functional_graph_label(f) == functional_graph_label(g)) == isomorphic(f, g));
    // Relabeling by a random permutation keeps the label.
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t j = n; j > 1; --j) std::swap(perm[j - 1], perm[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(j) - 1))]);
    std::vector<std::size_t> h(n);
    for (std::size_t v = 0; v < n; ++v) h[perm[v]] = perm[f[v]];
    CHECK(functional_graph_label(h) == functional_graph_label(f));
  }
}

TEST_CASE("periodic points satisfy the periodicity oracle") {
  Rng rng(111);
  for (int i = 0; i < 40; ++i) {
    const BigRat k = i % 2 ? rat(1) : rat(-1);
    const BigRat c = rng.rational(6, 4);
    const BigRat b = i % 4 < 2 ? -rat(2) * c * c : rng.rational(9, 9);
    for (const auto& [p, n] : periodic_points(k, b, 4)) {
      RatPoint q = p;
      for (unsigned m = 1; m <= n; ++m) {
        q = apply_map(k, b, q);
        if (m < n) CHECK(q != p);
      }
      CHECK(q == p);
    }
  }
}

TEST_CASE("closure agrees with a height-box brute force") {
  const long H = 14;
  std::vector<RatPoint> box{inf()};
  for (long q = 1; q <= H; ++q) {
    for (long p = -H; p <= H; ++p) {
      if (std::gcd(p, q) == 1 || p == 0) box.push_back(pt(p, q));
    }
  }
  std::sort(box.begin(), box.end());
  box.erase(std::unique(box.begin(), box.end()), box.end());
  for (const auto& [k, b] : std::vector<std::pair<BigRat, BigRat>>{
           {rat(1), rat(1)}, {rat(1), rat(-1)}, {rat(1), rat(-2)}, {rat(1), rat(-9, 4)}, {rat(1), rat(-1, 2)},
           {rat(1), rat(3)}, {rat(-1), rat(-1)}, {rat(-1), rat(-2)}, {rat(-1), rat(2)}, {rat(-1), rat(-1, 8)},
           {rat(-1), rat(-9)}, {rat(2), rat(-1)}}) {
    const auto g = preperiodic_closure(k, b);
    const auto verts = vertex_set(g);
    for (const auto& v : verts) {
      CHECK(is_preperiodic_by_iteration(k, b, v, 64));
      for (const auto& u : rational_preimages(k, b, v)) CHECK(verts.count(u) == 1);
    }
    // Orbits of preperiodic points repeat within 12 steps for these maps; the
    // heights of the other orbits double each step, so longer runs only cost time.
    for (const auto& p : box) {
      if (is_preperiodic_by_iteration(k, b, p, 12)) CHECK(verts.count(p) == 1);
    }
  }
}

TEST_CASE("k = 1 structure conditions") {
  for (const auto& b : scan_parameters(ScanRange{8, 8})) {
    DynatomicEngine e(MapFamily(rat(1), b));
    CHECK(rational_roots(dehomogenize(e.dynatomic(3))).empty());
    CHECK(rational_roots(dehomogenize(e.dynatomic(4))).empty());
    const auto g = preperiodic_closure(rat(1), b);
    bool two_cycle = false;
    for (const auto& c : g.cycles()) two_cycle = two_cycle || c.size() == 2;
    bool tail_12 = false;
    for (const auto& [p, t] : g.tails()) tail_12 = tail_12 || (t.cycle_length == 1 && t.steps == 2);
    CHECK(two_cycle == rational_sqrt(-b / rat(2)).has_value());
    CHECK(tail_12 == rational_sqrt(-b).has_value());
    CHECK_FALSE((two_cycle && tail_12));
  }
  for (long c = 1; c <= 10; ++c) {
    const auto g = preperiodic_closure(rat(1), rat(-c * c));
    CHECK(g.size() == 4);
    CHECK(classify_graph(g).shape == "pole-preimages");
  }
}

TEST_CASE("scan") {
  const auto params = scan_parameters(ScanRange{3, 2});
  CHECK(params == std::vector<BigRat>{rat(-3), rat(-2), rat(-3, 2), rat(-1), rat(-1, 2), rat(1, 2), rat(1), rat(3, 2), rat(2), rat(3)});
  const ScanSummary s = scan(rat(1), ScanRange{8, 8}, 1);
  CHECK(s.errors == 0);
  for (const auto& [count, n] : s.count_histogram) CHECK((count == 2 || count == 4 || count == 6));
  for (const auto& row : s.rows) CHECK_FALSE(row.shape.empty());
  const ScanSummary s3 = scan(rat(1), ScanRange{8, 8}, 3);
  CHECK(scan_to_json(s) == scan_to_json(s3));
  CHECK(scan_to_text(s) == scan_to_text(s3));
  CHECK_THROWS_AS(scan(rat(2), ScanRange{3, 3}, 1), std::invalid_argument);
  CHECK_NOTHROW(scan(rat(2), ScanRange{3, 3}, 2, 3u));
}

TEST_CASE("graph emitters") {
  const auto g = preperiodic_closure(rat(1), rat(-1));
  CHECK(graph_to_dot(g, rat(1), rat(-1)) ==
        "digraph \"phi k=1 b=-1\" {\n"
        "  \"inf\";\n  \"-1\";\n  \"0\";\n  \"1\";\n"
        "  \"inf\" -> \"inf\";\n  \"-1\" -> \"0\";\n  \"0\" -> \"inf\";\n  \"1\" -> \"0\";\n}\n");
  const std::string j = graph_to_json(g, rat(1), rat(-1));
  CHECK(j.find("\"count\":4") != std::string::npos);
  CHECK(j.rfind("{\"k\":\"1\",\"b\":\"-1\"", 0) == 0);
  CHECK(graph_to_text(g, rat(1), rat(-1)).find("shape: pole-preimages") != std::string::npos);
}

}  // TEST_SUITE
