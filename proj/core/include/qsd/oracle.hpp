#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "qsd/params.hpp"
#include "qsd/rational.hpp"

namespace qsd {

/// A concrete design: points 0..v-1 and a list of blocks, each a sorted list of
/// distinct points. Supports v <= 64.
class ExplicitDesign {
 public:
  /// Sorts each block; throws InvalidParameters on out-of-range or repeated points.
  ExplicitDesign(int v, std::vector<std::vector<int>> blocks);

  int v() const { return v_; }
  std::size_t b() const { return blocks_.size(); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  /// Bit i set iff point i lies in the block.
  const std::vector<std::uint64_t>& masks() const { return masks_; }

  ExplicitDesign complement() const;

  /// "v b" on the first line, then one block per line as space-separated 0-based
  /// point indices, each line terminated by '\n'.
  std::string to_text() const;

 private:
  int v_;
  std::vector<std::vector<int>> blocks_;
  std::vector<std::uint64_t> masks_;
};

/// Inverse of ExplicitDesign::to_text. Throws InvalidParameters on malformed input.
ExplicitDesign parse_design(std::istream& in);

/// All 2-subsets of an n-set, in lexicographic order. n >= 3.
ExplicitDesign build_pair_design(int n);

/// The 2-(6,3,2) design with ten blocks. Its intersection-2 graph is the Petersen graph.
ExplicitDesign build_6_3_2();

/// The Steiner system S(4,7,23): supports of the weight-7 words of the binary
/// greedy lexicographic code of length 23 and minimum distance 7. Words are
/// scanned in increasing integer order with bit i standing for point i. The
/// construction checks that the code has 4096 words and that every 4-set of points
/// lies in exactly one block, and throws std::logic_error otherwise.
ExplicitDesign build_witt_23();

/// Everything measured by literal counting on an explicit design, next to the
/// values the formulas predict. Any disagreement is listed in `mismatches`.
struct OracleReport {
  // Measured design parameters.
  std::int64_t v = 0;
  std::int64_t b = 0;
  std::int64_t k = 0;
  std::optional<std::int64_t> lambda;  // constant pair count
  std::optional<std::int64_t> r;       // constant replication
  std::vector<std::int64_t> intersection_sizes;
  bool is_2design = false;
  bool quasisymmetric = false;
  std::optional<QsdParams> params;

  // Intersection-x graph.
  std::optional<std::int64_t> K;
  std::optional<std::int64_t> Lambda;
  std::optional<std::int64_t> M;
  bool spectrum_verified = false;  // (A-RI)(A-SI) = cJ and A1 = K1
  std::int64_t mult_R = 0;         // from the trace condition
  std::int64_t mult_S = 0;

  // Regular sets S(u), constant over all points u.
  std::optional<std::int64_t> degree;
  std::optional<std::int64_t> nexus;

  // Triple sums for a fixed point, over ordered pairs of two further points.
  std::int64_t sum_one = 0;
  std::int64_t sum_lambda = 0;
  std::int64_t sum_lambda_pairs = 0;  // sum of lambda_uvw(lambda_uvw - 1)
  Rational sum_squared_deviation;    // sum of (lambda_uvw - B/A)^2
  bool is_3design = false;

  // Predicted inequality values at the measured parameters.
  Rational n_slack;
  Rational c_value;
  std::optional<Rational> h_value;

  bool complement_checked = false;
  std::optional<QsdParams> complement_params;

  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Counts everything by brute force and compares against design_core, block_graph
/// and criteria. When `check_complement` is set, the complementary design is built
/// and verified against the complement parameter map as well.
OracleReport verify_design(const ExplicitDesign& d, bool check_complement = true);

}  // namespace qsd
