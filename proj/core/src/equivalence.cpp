#include "qsd/equivalence.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <sstream>

#include "parallel.hpp"
#include "qsd/block_graph.hpp"
#include "qsd/criteria.hpp"
#include "qsd/error.hpp"

namespace qsd {

RationalTuple RationalTuple::make(const Rational& v, const Rational& k, const Rational& x,
                                  const Rational& y) {
  auto fail = [&](const std::string& why) {
    throw InvalidParameters("tuple (v,k,x,y)=(" + qsd::to_string(v) + "," + qsd::to_string(k) +
                            "," + qsd::to_string(x) + "," + qsd::to_string(y) + "): " + why);
  };
  if (!(0 <= y && y < x && x < k && k < v)) fail("need 0 <= y < x < k < v");
  if (!(k > 1)) fail("need k > 1");
  if (!(v > 2)) fail("need v > 2");

  RationalTuple t;
  t.v = v;
  t.k = k;
  t.x = x;
  t.y = y;
  t.b = b_from_cc(v, k, x, y);
  if (t.b <= 0) fail("Calderbank-Cowen b = " + qsd::to_string(t.b) + " is not positive");
  t.r = t.b * k / v;
  t.lambda = t.r * (k - 1) / (v - 1);
  const Eigenvalues e = block_graph_eigenvalues(k, t.lambda, x, y, t.r, t.b);
  t.K = e.K;
  t.R = e.R;
  t.S = e.S;
  if (t.K == 0) fail("K = 0");
  if (t.b - t.K - 1 == 0) fail("b-K-1 = 0");
  if (!(t.S < -1)) fail("need S < -1");
  if (k * k - k - v * y + y == 0) fail("k^2-k-vy+y = 0 (nexus e vanishes)");
  return t;
}

bool RationalTuple::in_conservative_domain() const {
  return r > lambda && lambda > 0 && K > R && R > 0 && K + R * S > 0;
}

std::string RationalTuple::to_string() const {
  std::ostringstream out;
  out << "v=" << qsd::to_string(v) << " k=" << qsd::to_string(k) << " x=" << qsd::to_string(x)
      << " y=" << qsd::to_string(y) << " b=" << qsd::to_string(b) << " r=" << qsd::to_string(r)
      << " lambda=" << qsd::to_string(lambda) << " K=" << qsd::to_string(K)
      << " R=" << qsd::to_string(R) << " S=" << qsd::to_string(S);
  return out.str();
}

ParenIdentity a_paren_identity(const Rational& K, const Rational& R, const Rational& S) {
  const Rational M = K + R * S;
  if (M == 0) throw UndefinedValue("K + RS = 0");
  if (K == 0 || S == -1) throw UndefinedValue("K = 0 or S = -1");
  ParenIdentity id;
  id.srg_vertex_count = (K - R) * (K - S) / M;
  id.lhs = hobart_paren(id.srg_vertex_count, K, R);
  const Rational poly =
      K * R + R * R - 2 * K * S + 2 * R * R * S - K * S * S - R * S * S;
  const Rational s1 = S + 1;
  id.rhs = -(K - R) * poly / (K * K * s1 * s1);
  return id;
}

ParenIdentity a_paren_identity(const RationalTuple& t) { return a_paren_identity(t.K, t.R, t.S); }

Rational final_polynomial(const Rational& v, const Rational& k, const Rational& x,
                          const Rational& y) {
  return (v - 1) * (v - 2) * x * y + k * k * (k - 1) * (k - 3) + 2 * k * (k - 1) * (x + y) -
         k * (k - 1) * v * (x + y - 1);
}

std::string to_string(ChainLink link) {
  switch (link) {
    case ChainLink::kParenIdentity:
      return "paren-identity";
    case ChainLink::kVertexCount:
      return "vertex-count";
    case ChainLink::kPolynomial:
      return "final-polynomial";
    case ChainLink::kHobartSign:
      return "hobart-sign";
    case ChainLink::kNeumaierSign:
      return "neumaier-sign";
  }
  return "?";
}

ChainReport verify_chain(const RationalTuple& t) {
  ChainReport rep;
  auto fail = [&](ChainLink link, const std::string& what) {
    rep.failures.push_back({link, what + " at " + t.to_string()});
  };

  try {
    rep.paren = a_paren_identity(t);
    if (rep.paren.lhs != rep.paren.rhs) {
      fail(ChainLink::kParenIdentity,
           "lhs=" + to_string(rep.paren.lhs) + " rhs=" + to_string(rep.paren.rhs));
    }
    if (rep.paren.srg_vertex_count != t.b) {
      fail(ChainLink::kVertexCount, "(K-R)(K-S)/(K+RS)=" + to_string(rep.paren.srg_vertex_count) +
                                        " b=" + to_string(t.b));
    }
  } catch (const UndefinedValue& e) {
    fail(ChainLink::kParenIdentity, std::string("undefined: ") + e.what());
  }

  rep.final_poly = final_polynomial(t.v, t.k, t.x, t.y);
  rep.calderbank = calderbank(t.v, t.k, t.x, t.y);
  if (rep.final_poly != rep.calderbank) {
    fail(ChainLink::kPolynomial,
         "final=" + to_string(rep.final_poly) + " calderbank=" + to_string(rep.calderbank));
  }
  rep.common_sign = sign(rep.calderbank);

  rep.hobart = hobart(t.v, t.k, t.lambda, t.b, t.K, t.R, t.S);
  if (sign(rep.hobart) != rep.common_sign || sign(rep.final_poly) != rep.common_sign) {
    fail(ChainLink::kHobartSign, "hobart=" + to_string(rep.hobart) + " final=" +
                                     to_string(rep.final_poly) + " calderbank=" +
                                     to_string(rep.calderbank));
  }

  const Rational degree =
      ((t.lambda - 1) * (t.k - 1) - (t.r - 1) * (t.y - 1)) / (t.x - t.y);
  rep.neumaier_slack = neumaier(t.v, t.k, t.x, t.y, t.r, degree).slack;
  if (sign(rep.neumaier_slack) != rep.common_sign) {
    fail(ChainLink::kNeumaierSign, "n_slack=" + to_string(rep.neumaier_slack) +
                                       " calderbank=" + to_string(rep.calderbank));
  }
  return rep;
}

namespace {

// Uniform enough for test-point generation and, unlike std distributions,
// identical on every standard library.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

Rational draw_rational(std::mt19937_64& rng, std::int64_t max_value, std::int64_t max_den) {
  const std::int64_t den = draw(rng, 1, max_den);
  return make_rational(draw(rng, 0, max_value * den), den);
}

}  // namespace

std::vector<RationalTuple> sample_domain(std::uint64_t seed, std::size_t count,
                                         const SampleOptions& options) {
  if (count == 0) throw InvalidParameters("sample count must be >= 1");
  if (options.max_value < 4 || options.max_denominator < 1) {
    throw InvalidParameters("sampling needs max_value >= 4 and max_denominator >= 1");
  }
  const std::int64_t den = options.integral ? 1 : options.max_denominator;
  std::mt19937_64 rng(seed);
  std::vector<RationalTuple> out;
  out.reserve(count);
  const std::size_t budget = count * options.max_attempts_per_sample;
  std::size_t attempts = 0;
  while (out.size() < count) {
    if (++attempts > budget) {
      throw ResourceLimit("sample_domain: rejection budget of " + std::to_string(budget) +
                          " draws exhausted after " + std::to_string(out.size()) + " samples");
    }
    // Draw all four coordinates every attempt so the stream position depends only
    // on the attempt count.
    std::array<Rational, 4> c;
    for (Rational& value : c) value = draw_rational(rng, options.max_value, den);
    std::sort(c.begin(), c.end());
    const Rational& y = c[0];
    const Rational& x = c[1];
    const Rational& k = c[2];
    const Rational& v = c[3];
    if (!(0 <= y && y < x && x < k && k < v && k > 1 && v > 2)) continue;
    try {
      RationalTuple t = RationalTuple::make(v, k, x, y);
      if (options.conservative && !t.in_conservative_domain()) continue;
      if (options.integral && !(t.b > t.v)) continue;
      out.push_back(std::move(t));
    } catch (const Error&) {
      continue;
    }
  }
  return out;
}

EquivalenceSummary verify_polynomial_grid() {
  EquivalenceSummary s;
  for (int v = 0; v <= 5; ++v) {
    for (int k = 0; k <= 6; ++k) {
      for (int x = 0; x <= 3; ++x) {
        for (int y = 0; y <= 3; ++y) {
          const Rational rv(v), rk(k), rx(x), ry(y);
          ++s.grid_points;
          if (final_polynomial(rv, rk, rx, ry) != calderbank(rv, rk, rx, ry)) {
            ++s.grid_mismatches;
            s.failure_lines.push_back("grid mismatch at v=" + std::to_string(v) +
                                      " k=" + std::to_string(k) + " x=" + std::to_string(x) +
                                      " y=" + std::to_string(y));
          }
        }
      }
    }
  }
  return s;
}

EquivalenceSummary run_equivalence(std::uint64_t seed, std::size_t samples, unsigned threads,
                                   const SampleOptions& options) {
  const std::vector<RationalTuple> tuples = sample_domain(seed, samples, options);
  std::vector<std::vector<std::string>> per_tuple(tuples.size());
  detail::parallel_for(tuples.size(), threads, [&](std::size_t i) {
    const ChainReport rep = verify_chain(tuples[i]);
    for (const ChainFailure& f : rep.failures) {
      per_tuple[i].push_back(to_string(f.link) + ": " + f.detail);
    }
  });

  EquivalenceSummary s = verify_polynomial_grid();
  s.samples = tuples.size();
  for (std::size_t i = 0; i < per_tuple.size(); ++i) {
    if (!per_tuple[i].empty()) ++s.failures;
    for (auto& line : per_tuple[i]) s.failure_lines.push_back(std::move(line));
  }
  std::sort(s.failure_lines.begin(), s.failure_lines.end());
  return s;
}

}  // namespace qsd
