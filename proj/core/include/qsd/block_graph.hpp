#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsd/params.hpp"
#include "qsd/rational.hpp"

namespace qsd {

/// Parameters (V,K,Lambda,M) and spectrum K^1 R^(v-1) S^(b-v) of the intersection-x
/// block graph. Values are exact rationals; integrality is a separate feasibility test.
struct SrgParams {
  std::int64_t V = 0;
  Rational K;
  Rational Lambda;
  Rational M;
  Rational R;
  Rational S;
  std::int64_t mult_R = 0;
  std::int64_t mult_S = 0;

  bool all_integral() const;
  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

/// Blocks through a fixed point form a regular set of this size, degree and nexus.
struct RegularSetParams {
  std::int64_t size = 0;
  Rational degree;
  Rational nexus;
};

/// The three eigenvalues as rational functions of the parameters; defined for any
/// rational arguments with x != y:
///   K = ((r-1)k - (b-1)y)/(x-y),  R = (r-lambda-k+y)/(x-y),  S = -(k-y)/(x-y).
struct Eigenvalues {
  Rational K;
  Rational R;
  Rational S;
};
Eigenvalues block_graph_eigenvalues(const Rational& k, const Rational& lambda,
                                    const Rational& x, const Rational& y, const Rational& r,
                                    const Rational& b);

/// Requires integral r, b. Throws DegenerateGraph if b <= v or S = -1.
SrgParams block_graph_params(const QsdParams& p, const DerivedParams& d);

/// d = ((lambda-1)(k-1) - (r-1)(y-1))/(x-y), e = (lambda k - r y)/(x-y).
/// Requires integral r, b.
RegularSetParams regular_set_params(const QsdParams& p, const DerivedParams& d);

/// Names every violated relation among RS = M-K, R+S = Lambda-M and
/// 1 + mult_R + mult_S = V. Empty when all hold.
std::vector<std::string> srg_sanity(const SrgParams& s);

/// "140^1 25^22 (-3)^230"
std::string spectrum_string(const SrgParams& s);

}  // namespace qsd
