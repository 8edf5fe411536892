#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "qsd/rational.hpp"

namespace qsd {

/// Candidate parameter set of a quasisymmetric 2-(v,k,lambda) design with block
/// intersection numbers x > y.
///
/// Construction validates 1 < k < v, lambda >= 1 and k > x > y >= 0. Intersection
/// numbers given in the order x < y are swapped so that x is always the larger one;
/// the block graph is taken on x.
class QsdParams {
 public:
  /// Throws InvalidParameters when the invariants above cannot be met.
  static QsdParams make(std::int64_t v, std::int64_t k, std::int64_t lambda,
                        std::int64_t x, std::int64_t y);

  std::int64_t v() const { return v_; }
  std::int64_t k() const { return k_; }
  std::int64_t lambda() const { return lambda_; }
  std::int64_t x() const { return x_; }
  std::int64_t y() const { return y_; }

  std::string to_string() const;

  friend auto operator<=>(const QsdParams&, const QsdParams&) = default;

 private:
  QsdParams(std::int64_t v, std::int64_t k, std::int64_t lambda, std::int64_t x,
            std::int64_t y)
      : v_(v), k_(k), lambda_(lambda), x_(x), y_(y) {}

  std::int64_t v_;
  std::int64_t k_;
  std::int64_t lambda_;
  std::int64_t x_;
  std::int64_t y_;
};

/// Replication number and block count, exact.
struct DerivedParams {
  Rational r;
  Rational b;
  bool integral = false;  // both r and b are integers

  std::int64_t r_int() const { return to_int64(r); }
  std::int64_t b_int() const { return to_int64(b); }
};

/// r = lambda(v-1)/(k-1), b = vr/k.
DerivedParams derive_params(const QsdParams& p);

/// Parameters of the complementary design: blocks replaced by their complements.
///
/// Requires integral r and b (InvalidParameters otherwise). Throws NotADesign when
/// the complement has lambda' <= 0, a negative intersection number v-2k+y, or
/// block size v-k <= 1.
std::pair<QsdParams, DerivedParams> complement(const QsdParams& p, const DerivedParams& d);
std::pair<QsdParams, DerivedParams> complement(const QsdParams& p);

/// Blokhuis-Haemers family for q a power of two, q >= 2:
/// v = q^3, k = q^2(q-1)/2, lambda = q(q^3-q^2-2)/4, x = k/2, y = x - q^2/4.
QsdParams bh_family(std::int64_t q);

/// Affine resolvable design ARD(n,t) shape.
struct ArdParams {
  std::int64_t n = 0;
  std::int64_t t = 0;

  friend bool operator==(const ArdParams&, const ArdParams&) = default;
};

/// v = n^2((n-1)t+1), k = v/n, lambda = nt+1, x = (n-1)t+1, y = 0.
QsdParams ard_params(const ArdParams& a);

/// Recognises the ARD parameter shape (not resolvability itself).
std::optional<ArdParams> detect_ard(const QsdParams& p);

}  // namespace qsd
