#include "qsd/block_graph.hpp"

#include "qsd/error.hpp"

namespace qsd {

bool SrgParams::all_integral() const {
  return is_integer(K) && is_integer(Lambda) && is_integer(M) && is_integer(R) &&
         is_integer(S);
}

Eigenvalues block_graph_eigenvalues(const Rational& k, const Rational& lambda,
                                    const Rational& x, const Rational& y, const Rational& r,
                                    const Rational& b) {
  if (x == y) throw UndefinedValue("eigenvalues need x != y");
  const Rational diff = x - y;
  Eigenvalues e{((r - 1) * k - (b - 1) * y) / diff, (r - lambda - k + y) / diff,
                -(k - y) / diff};
  e.K.canonicalize();
  e.R.canonicalize();
  e.S.canonicalize();
  return e;
}

SrgParams block_graph_params(const QsdParams& p, const DerivedParams& d) {
  if (!d.integral) {
    throw InvalidParameters("block graph needs integral r and b for " + p.to_string());
  }
  const std::int64_t b = d.b_int();
  if (b <= p.v()) {
    throw DegenerateGraph("b=" + std::to_string(b) + " <= v=" + std::to_string(p.v()) +
                          ": eigenvalue S would have nonpositive multiplicity");
  }
  const Eigenvalues e =
      block_graph_eigenvalues(make_rational(p.k()), make_rational(p.lambda()),
                              make_rational(p.x()), make_rational(p.y()), d.r, d.b);
  SrgParams s;
  s.V = b;
  s.K = e.K;
  s.R = e.R;
  s.S = e.S;
  if (s.S == -1) {
    throw DegenerateGraph("S = -1: x = k, a multiple of a symmetric design");
  }
  s.M = s.K + s.R * s.S;
  s.Lambda = s.R + s.S + s.M;
  s.mult_R = p.v() - 1;
  s.mult_S = b - p.v();
  s.M.canonicalize();
  s.Lambda.canonicalize();
  return s;
}

RegularSetParams regular_set_params(const QsdParams& p, const DerivedParams& d) {
  if (!d.integral) {
    throw InvalidParameters("regular sets need integral r and b for " + p.to_string());
  }
  const Rational diff = make_rational(p.x() - p.y());
  RegularSetParams rs;
  rs.size = d.r_int();
  rs.degree = (make_rational((p.lambda() - 1) * (p.k() - 1)) - (d.r - 1) * (p.y() - 1)) / diff;
  rs.nexus = (make_rational(p.lambda() * p.k()) - d.r * p.y()) / diff;
  rs.degree.canonicalize();
  rs.nexus.canonicalize();
  return rs;
}

std::vector<std::string> srg_sanity(const SrgParams& s) {
  std::vector<std::string> violated;
  if (s.R * s.S != s.M - s.K) violated.emplace_back("RS = M-K");
  if (s.R + s.S != s.Lambda - s.M) violated.emplace_back("R+S = Lambda-M");
  if (1 + s.mult_R + s.mult_S != s.V) violated.emplace_back("1 + mult_R + mult_S = V");
  return violated;
}

std::string spectrum_string(const SrgParams& s) {
  auto term = [](const Rational& value, std::int64_t mult) {
    std::string base = to_string(value);
    if (sign(value) < 0 || !is_integer(value)) base = "(" + base + ")";
    return base + "^" + std::to_string(mult);
  };
  return term(s.K, 1) + " " + term(s.R, s.mult_R) + " " + term(s.S, s.mult_S);
}

}  // namespace qsd
