#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arithdyn/projpoint.hpp"
#include "arithdyn/rational.hpp"

namespace arithdyn {

/// phi(z) = k(z^2 + b)/z on P^1(Q): phi(inf) = inf, phi(0) = inf.
/// Throws DegenerateMap if k b = 0.
RatPoint apply_map(const BigRat& k, const BigRat& b, const RatPoint& p);

/// Least m in [1, max_period] with phi^m(P) = P.
std::optional<unsigned> exact_period(const BigRat& k, const BigRat& b, const RatPoint& p,
                                     unsigned max_period);

struct PeriodicPoint {
  RatPoint point;
  unsigned period;

  friend bool operator==(const PeriodicPoint&, const PeriodicPoint&) = default;
};

/// The fixed point inf plus every rational root of PhiStar_n(z, 1),
/// n <= n_max, whose exact period (by direct iteration) is n. Sorted by point.
std::vector<PeriodicPoint> periodic_points(const BigRat& k, const BigRat& b, unsigned n_max);

/// Rational solutions of phi(z) = q, ascending.
std::vector<RatPoint> rational_preimages(const BigRat& k, const BigRat& b, const RatPoint& q);

/// Strictly preperiodic point entering a cycle of exact length
/// `cycle_length` after `steps` iterations ("type m_n").
struct TailType {
  unsigned cycle_length = 0;
  unsigned steps = 0;

  std::string label() const { return std::to_string(cycle_length) + "_" + std::to_string(steps); }
  friend auto operator<=>(const TailType&, const TailType&) = default;
};

/// Finite functional graph P -> phi(P) on a set of points of P^1(Q).
class PreperGraph {
 public:
  /// Throws std::invalid_argument if some image is not a vertex.
  static PreperGraph from_edges(std::map<RatPoint, RatPoint> edges);

  std::size_t size() const { return edges_.size(); }
  std::vector<RatPoint> vertices() const;
  const std::map<RatPoint, RatPoint>& edges() const { return edges_; }
  /// Each cycle starts at its smallest point; cycles sorted by that point.
  const std::vector<std::vector<RatPoint>>& cycles() const { return cycles_; }
  const std::map<RatPoint, TailType>& tails() const { return tails_; }

 private:
  std::map<RatPoint, RatPoint> edges_;
  std::vector<std::vector<RatPoint>> cycles_;
  std::map<RatPoint, TailType> tails_;
};

struct ClosureOptions {
  unsigned n_max = 4;
  unsigned depth_cap = 64;
  std::size_t size_cap = 10000;
};

/// All rational points reachable backwards from the rational periodic points
/// of period <= n_max. Throws CapExceeded when a cap is hit.
PreperGraph preperiodic_closure(const BigRat& k, const BigRat& b, const ClosureOptions& opts = {});

struct StructureDescriptor {
  std::vector<unsigned> cycle_lengths;  // ascending
  std::vector<TailType> tails;          // ascending
  std::size_t count = 0;
  /// Canonical form of the functional graph; equal iff isomorphic.
  std::string label;
  /// Name of the matching reference shape, empty when none matches.
  std::string shape;
};
StructureDescriptor classify_graph(const PreperGraph& g);

/// Canonical isomorphism label of the functional graph v -> succ[v].
std::string functional_graph_label(const std::vector<std::size_t>& succ);

/// The expected rational preperiodic structures for z -> +-(z + b/z), by name:
///   "pole"           inf fixed, 0 -> inf
///   "pole-preimages" inf fixed, 0 -> inf, +-1 -> 0
///   "two-cycle"      inf fixed, 0 -> inf, 1 <-> -1, -2 -> -1, 2 -> 1
///   "finite-fixed"   inf, 1, -1 fixed, 0 -> inf
const std::vector<std::pair<std::string, PreperGraph>>& reference_shapes();

std::string graph_to_dot(const PreperGraph& g, const BigRat& k, const BigRat& b);
std::string graph_to_json(const PreperGraph& g, const BigRat& k, const BigRat& b);
std::string graph_to_text(const PreperGraph& g, const BigRat& k, const BigRat& b);

/// Parameters b = p/q in lowest terms with 0 < |p| <= num_max, 1 <= q <= den_max.
struct ScanRange {
  long num_max = 20;
  long den_max = 20;
};
std::vector<BigRat> scan_parameters(const ScanRange& range);

struct ScanRow {
  BigRat b;
  std::size_t count = 0;
  std::string label;
  std::string shape;
  std::string error;  // non-empty when the closure failed
};

struct ScanSummary {
  BigRat k;
  unsigned n_max = 0;
  std::vector<ScanRow> rows;  // ascending in b
  std::map<std::size_t, std::size_t> count_histogram;
  std::map<std::string, std::size_t> shape_histogram;  // unmatched shapes under their label
  std::size_t errors = 0;
};

/// Preperiodic closure for every b in the range using `jobs` worker threads.
/// n_max may be omitted only for k = +-1, where it defaults to 4.
ScanSummary scan(const BigRat& k, const ScanRange& range, unsigned jobs = 1,
                 std::optional<unsigned> n_max = std::nullopt);

std::string scan_to_json(const ScanSummary& s);
std::string scan_to_text(const ScanSummary& s);

}  // namespace arithdyn
