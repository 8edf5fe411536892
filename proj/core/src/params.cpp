#include "qsd/params.hpp"

#include <bit>
#include <sstream>

#include "qsd/error.hpp"

namespace qsd {

QsdParams QsdParams::make(std::int64_t v, std::int64_t k, std::int64_t lambda,
                          std::int64_t x, std::int64_t y) {
  if (x < y) std::swap(x, y);
  std::ostringstream why;
  if (!(1 < k && k < v)) {
    why << "need 1 < k < v, got v=" << v << " k=" << k;
  } else if (lambda < 1) {
    why << "need lambda >= 1, got " << lambda;
  } else if (x == y) {
    why << "intersection numbers must be distinct, got x=y=" << x;
  } else if (y < 0) {
    why << "intersection numbers must be nonnegative, got y=" << y;
  } else if (x >= k) {
    why << "need k > x, got k=" << k << " x=" << x;
  }
  if (!why.str().empty()) throw InvalidParameters(why.str());
  return QsdParams(v, k, lambda, x, y);
}

std::string QsdParams::to_string() const {
  std::ostringstream out;
  out << '(' << v_ << ',' << k_ << ',' << lambda_ << ',' << x_ << ',' << y_ << ')';
  return out.str();
}

DerivedParams derive_params(const QsdParams& p) {
  DerivedParams d;
  d.r = make_rational(p.lambda()) * (p.v() - 1) / make_rational(p.k() - 1);
  d.b = make_rational(p.v()) * d.r / p.k();
  d.r.canonicalize();
  d.b.canonicalize();
  d.integral = is_integer(d.r) && is_integer(d.b);
  return d;
}

std::pair<QsdParams, DerivedParams> complement(const QsdParams& p, const DerivedParams& d) {
  if (!d.integral) {
    throw InvalidParameters("complement needs integral r and b for " + p.to_string());
  }
  const std::int64_t v = p.v();
  const std::int64_t k2 = v - p.k();
  const std::int64_t x2 = v - 2 * p.k() + p.x();
  const std::int64_t y2 = v - 2 * p.k() + p.y();
  const Rational lambda2 = d.b - 2 * d.r + p.lambda();
  if (y2 < 0) {
    throw NotADesign("complement of " + p.to_string() + " has intersection number v-2k+y=" +
                     std::to_string(y2));
  }
  if (lambda2 <= 0) {
    throw NotADesign("complement of " + p.to_string() + " has lambda'=" + to_string(lambda2));
  }
  if (k2 <= 1) {
    throw NotADesign("complement of " + p.to_string() + " has block size " +
                     std::to_string(k2));
  }
  QsdParams q = QsdParams::make(v, k2, to_int64(lambda2), x2, y2);
  DerivedParams dq{d.b - d.r, d.b, true};
  return {q, dq};
}

std::pair<QsdParams, DerivedParams> complement(const QsdParams& p) {
  return complement(p, derive_params(p));
}

QsdParams bh_family(std::int64_t q) {
  if (q < 2 || !std::has_single_bit(static_cast<std::uint64_t>(q))) {
    throw InvalidParameters("Blokhuis-Haemers family needs q a power of two >= 2, got " +
                            std::to_string(q));
  }
  if (q > (std::int64_t{1} << 12)) {
    throw InvalidParameters("q=" + std::to_string(q) + " overflows 64-bit parameters");
  }
  const std::int64_t q2 = q * q;
  const std::int64_t v = q2 * q;
  const std::int64_t k = q2 * (q - 1) / 2;
  const std::int64_t lambda = q * (v - q2 - 2) / 4;
  const std::int64_t x = k / 2;
  const std::int64_t y = x - q2 / 4;
  return QsdParams::make(v, k, lambda, x, y);
}

QsdParams ard_params(const ArdParams& a) {
  if (a.n < 2 || a.t < 0) {
    throw InvalidParameters("ARD(n,t) needs n >= 2 and t >= 0, got (" + std::to_string(a.n) +
                            "," + std::to_string(a.t) + ")");
  }
  const std::int64_t x = (a.n - 1) * a.t + 1;
  const std::int64_t k = a.n * x;
  const std::int64_t v = a.n * k;
  return QsdParams::make(v, k, a.n * a.t + 1, x, 0);
}

std::optional<ArdParams> detect_ard(const QsdParams& p) {
  if (p.y() != 0 || p.v() % p.k() != 0) return std::nullopt;
  const std::int64_t n = p.v() / p.k();
  if (n < 2) return std::nullopt;
  // x = k^2/v  <=>  x*v = k*k; here k^2/v = k/n.
  if (p.k() % n != 0 || p.x() != p.k() / n) return std::nullopt;
  if ((p.x() - 1) % (n - 1) != 0) return std::nullopt;
  const std::int64_t t = (p.x() - 1) / (n - 1);
  if (t < 0 || p.lambda() != n * t + 1) return std::nullopt;
  return ArdParams{n, t};
}

}  // namespace qsd
