#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsd/rational.hpp"

namespace qsd {

/// A point (v,k,x,y) in rational parameter space together with the quantities the
/// Hobart <=> Calderbank argument substitutes: b from Calderbank-Cowen equality,
/// r = bk/v, lambda = r(k-1)/(v-1) and the block-graph eigenvalues K, R, S.
struct RationalTuple {
  Rational v;
  Rational k;
  Rational x;
  Rational y;
  Rational b;
  Rational r;
  Rational lambda;
  Rational K;
  Rational R;
  Rational S;

  /// Derives b, r, lambda, K, R, S and checks the domain
  ///   0 <= y < x < k < v, 1 < k, v > 2, b > 0, K != 0, b-K-1 != 0, S < -1,
  ///   k^2 - k - vy + y != 0.
  /// Throws InvalidParameters (or UndefinedValue from b_from_cc) outside it.
  static RationalTuple make(const Rational& v, const Rational& k, const Rational& x,
                            const Rational& y);

  /// The stricter sampling region: additionally r > lambda > 0, K > R > 0, K + RS > 0.
  bool in_conservative_domain() const;

  std::string to_string() const;
};

/// Both sides of the identity for the parenthetical part of (H) after b is
/// replaced by the SRG vertex count (K-R)(K-S)/(K+RS):
///   lhs = 1 + R^3/K^2 - (R+1)^3/(b-K-1)^2
///   rhs = -(K-R)(KR + R^2 - 2KS + 2R^2 S - KS^2 - RS^2) / (K^2 (S+1)^2)
struct ParenIdentity {
  Rational lhs;
  Rational rhs;
  Rational srg_vertex_count;  // (K-R)(K-S)/(K+RS)
};

/// Throws UndefinedValue when K+RS = 0 or a denominator vanishes.
ParenIdentity a_paren_identity(const Rational& K, const Rational& R, const Rational& S);
ParenIdentity a_paren_identity(const RationalTuple& t);

/// (v-1)(v-2)xy + k^2(k-1)(k-3) + 2k(k-1)(x+y) - k(k-1)v(x+y-1)
Rational final_polynomial(const Rational& v, const Rational& k, const Rational& x,
                          const Rational& y);

enum class ChainLink {
  kParenIdentity,     // (a) lhs = rhs
  kVertexCount,       // (a') (K-R)(K-S)/(K+RS) equals the Calderbank-Cowen b
  kPolynomial,        // (b) final polynomial = Calderbank expression
  kHobartSign,        // (c) sign(H) = sign(final) = sign(C)
  kNeumaierSign,      // (d) sign(N) = sign(C)
};
std::string to_string(ChainLink link);

struct ChainFailure {
  ChainLink link;
  std::string detail;
};

struct ChainReport {
  ParenIdentity paren;
  Rational final_poly;
  Rational calderbank;
  Rational hobart;
  Rational neumaier_slack;
  int common_sign = 0;
  std::vector<ChainFailure> failures;

  bool ok() const { return failures.empty(); }
};

/// Checks every link of the chain exactly; failures carry the full witness tuple.
ChainReport verify_chain(const RationalTuple& t);

struct SampleOptions {
  std::int64_t max_value = 64;          // v <= max_value
  std::int64_t max_denominator = 8;     // common denominator of each coordinate
  std::size_t max_attempts_per_sample = 5000;
  bool conservative = true;             // restrict to in_conservative_domain()
  bool integral = false;                // integer v,k,x,y with b > v
};

/// Deterministic rejection sampling of `count` tuples. Throws ResourceLimit when
/// more than count * max_attempts_per_sample draws are needed.
std::vector<RationalTuple> sample_domain(std::uint64_t seed, std::size_t count,
                                         const SampleOptions& options = {});

struct EquivalenceSummary {
  std::size_t samples = 0;
  std::size_t failures = 0;
  std::vector<std::string> failure_lines;  // sorted
  std::size_t grid_points = 0;
  std::size_t grid_mismatches = 0;

  bool ok() const { return failures == 0 && grid_mismatches == 0; }
};

/// Evaluates final_polynomial and the Calderbank expression on the integer grid
/// v in [0,5], k in [0,6], x, y in [0,3]. Each side has degree <= 2 in v, <= 4 in
/// k and <= 1 in x and y, so agreement on this grid proves the polynomial identity.
EquivalenceSummary verify_polynomial_grid();

/// Samples, verifies every chain link on every tuple (in parallel), and appends the
/// grid check. The result does not depend on `threads`.
EquivalenceSummary run_equivalence(std::uint64_t seed, std::size_t samples,
                                   unsigned threads = 1, const SampleOptions& options = {});

}  // namespace qsd
