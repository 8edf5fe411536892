#include "qsd/criteria.hpp"

#include <stdexcept>

#include "qsd/error.hpp"
#include "qsd/tables.hpp"

namespace qsd {
namespace {

Rational q(std::int64_t value) { return make_rational(value); }

Rational cc_bound(const Rational& v, const Rational& k, const Rational& x, const Rational& y) {
  const Rational den = v * (v - 1) * (k - x) * (k - y);
  if (den == 0) throw UndefinedValue("Calderbank-Cowen bound undefined (v(v-1)(k-x)(k-y) = 0)");
  const Rational kk = k * (v - k);
  return kk * ((v - 1) * (2 * k - x - y) - kk) / den;
}

}  // namespace

Verdict verdict_of(const Rational& slack) {
  switch (sign(slack)) {
    case 1:
      return Verdict::kPass;
    case 0:
      return Verdict::kEquality;
    default:
      return Verdict::kFail;
  }
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kEquality:
      return "equality";
    case Verdict::kFail:
      return "fail";
  }
  return "?";
}

Rational cc_slack(const Rational& v, const Rational& k, const Rational& x, const Rational& y,
                  const Rational& b) {
  if (b == 0) throw UndefinedValue("Calderbank-Cowen slack needs b != 0");
  return cc_bound(v, k, x, y) - (1 - 1 / b);
}

Rational cc_slack(const QsdParams& p, const DerivedParams& d) {
  return cc_slack(q(p.v()), q(p.k()), q(p.x()), q(p.y()), d.b);
}

Rational b_from_cc(const Rational& v, const Rational& k, const Rational& x, const Rational& y) {
  const Rational t = cc_bound(v, k, x, y);
  if (t >= 1) {
    throw UndefinedValue("Calderbank-Cowen bound " + to_string(t) + " >= 1: no positive b");
  }
  return 1 / (1 - t);
}

NeumaierTerms neumaier(const Rational& v, const Rational& k, const Rational& x,
                       const Rational& y, const Rational& r, const Rational& degree) {
  NeumaierTerms n;
  n.A = (v - 1) * (v - 2);
  n.B = r * (k - 1) * (k - 2);
  n.C = r * degree * (x - 1) * (x - 2) + r * (r - 1 - degree) * (y - 1) * (y - 2);
  n.slack = n.A * n.C - n.B * (n.B - n.A);
  return n;
}

NeumaierTerms neumaier(const QsdParams& p, const DerivedParams& d, const RegularSetParams& rs) {
  return neumaier(q(p.v()), q(p.k()), q(p.x()), q(p.y()), d.r, rs.degree);
}

Rational calderbank(const Rational& v, const Rational& k, const Rational& x, const Rational& y) {
  const Rational xb = k - x;
  const Rational yb = k - y;
  const Rational kk = k * (v - k);
  return (v - 1) * (v - 2) * xb * yb - kk * (v - 2) * (xb + yb) + kk * (kk - 1);
}

Rational calderbank(const QsdParams& p) {
  return calderbank(q(p.v()), q(p.k()), q(p.x()), q(p.y()));
}

Rational hobart_paren(const Rational& b, const Rational& K, const Rational& R) {
  const Rational rest = b - K - 1;
  if (K == 0) throw UndefinedValue("Hobart bound undefined: K = 0");
  if (rest == 0) throw UndefinedValue("Hobart bound undefined: b-K-1 = 0");
  const Rational r1 = R + 1;
  return 1 + R * R * R / (K * K) - r1 * r1 * r1 / (rest * rest);
}

Rational hobart(const Rational& v, const Rational& k, const Rational& lambda, const Rational& b,
                const Rational& K, const Rational& R, const Rational& S) {
  if (S == -1) throw UndefinedValue("Hobart bound undefined: S = -1");
  if (v == 0 || k == 0 || k == 1 || k == v) {
    throw UndefinedValue("Hobart bound undefined: needs v, k, k-1, v-k nonzero");
  }
  const Rational w = v - 2 * k;
  return (v - 2) / v * hobart_paren(b, K, R) - w * w * lambda / (k * k * (k - 1) * (v - k));
}

Rational hobart(const QsdParams& p, const DerivedParams& d, const SrgParams& s) {
  return hobart(q(p.v()), q(p.k()), q(p.lambda()), d.b, s.K, s.R, s.S);
}

KreinForm krein_form(const Rational& v, const Rational& k, const Rational& b, const Rational& K,
                     const Rational& R, const Rational& S) {
  if (S == -1) throw UndefinedValue("Krein form undefined: S = -1");
  if (b == 0 || k == 0 || k == v || v == 2) {
    throw UndefinedValue("Krein form undefined: needs b, k, v-k, v-2 nonzero");
  }
  const Rational w = v - 2 * k;
  KreinForm f;
  f.lhs = (v - 1) * (v - 1) / b * hobart_paren(b, K, R);
  f.rhs = w * w * (v - 1) / (k * (v - k) * (v - 2));
  return f;
}

KreinForm krein_form(const QsdParams& p, const DerivedParams& d, const SrgParams& s) {
  return krein_form(q(p.v()), q(p.k()), d.b, s.K, s.R, s.S);
}

std::uint64_t squarefree_part(std::uint64_t n) {
  if (n == 0) throw InvalidParameters("squarefree part needs n >= 1");
  std::uint64_t part = 1;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e % 2 == 1) part *= p;
  }
  return part * n;  // leftover n is 1 or a prime
}

std::string_view to_string(ShrikhandeVerdict v) {
  switch (v) {
    case ShrikhandeVerdict::kExcluded:
      return "excluded";
    case ShrikhandeVerdict::kNotExcluded:
      return "not-excluded";
    case ShrikhandeVerdict::kNotArdShaped:
      return "not-ARD-shaped";
  }
  return "?";
}

ShrikhandeVerdict shrikhande_ard(const ArdParams& a) {
  if (a.n < 2) throw InvalidParameters("ARD(n,t) needs n >= 2");
  if (a.n % 4 != 2) return ShrikhandeVerdict::kNotExcluded;
  std::uint64_t m = squarefree_part(static_cast<std::uint64_t>(a.n));
  while (m % 2 == 0) m /= 2;
  for (std::uint64_t p = 3; p * p <= m; p += 2) {
    if (m % p != 0) continue;
    if (p % 4 == 3) return ShrikhandeVerdict::kExcluded;
    m /= p;
  }
  return m % 4 == 3 ? ShrikhandeVerdict::kExcluded : ShrikhandeVerdict::kNotExcluded;
}

CriterionReport evaluate_criteria(const QsdParams& p, const DerivedParams& d) {
  const Rational v = q(p.v());
  const Rational k = q(p.k());
  const Rational x = q(p.x());
  const Rational y = q(p.y());
  const Rational lambda = q(p.lambda());

  CriterionReport rep;
  rep.cc_slack = cc_slack(v, k, x, y, d.b);
  const Rational degree = ((lambda - 1) * (k - 1) - (d.r - 1) * (y - 1)) / (x - y);
  rep.neumaier = neumaier(v, k, x, y, d.r, degree);
  rep.c_value = calderbank(v, k, x, y);

  const Eigenvalues eig = block_graph_eigenvalues(k, lambda, x, y, d.r, d.b);
  try {
    rep.h_value = hobart(v, k, lambda, d.b, eig.K, eig.R, eig.S);
    rep.krein = krein_form(v, k, d.b, eig.K, eig.R, eig.S);
  } catch (const UndefinedValue&) {
    rep.h_value.reset();
    rep.krein.reset();
  }

  rep.ard = detect_ard(p);
  rep.shrikhande = rep.ard ? shrikhande_ard(*rep.ard) : ShrikhandeVerdict::kNotArdShaped;

  rep.cc_verdict = verdict_of(rep.cc_slack);
  rep.n_verdict = verdict_of(rep.neumaier.slack);
  rep.c_verdict = verdict_of(rep.c_value);
  if (rep.h_value) {
    rep.h_verdict = verdict_of(*rep.h_value);
    rep.krein_verdict = verdict_of(rep.krein->margin());
  }
  rep.degenerate_triple = rep.neumaier.B == 0;

  // k lambda - r y vanishes exactly when the nexus e does.
  const bool nexus_nonzero = k * lambda != d.r * y;
  rep.equivalence_applies = rep.cc_slack == 0 && nexus_nonzero && rep.h_value.has_value();
  if (rep.h_value && sign(rep.krein->margin()) != sign(*rep.h_value)) {
    throw std::logic_error("Krein form and Hobart value differ in sign at " + p.to_string());
  }
  if (rep.equivalence_applies) {
    const int c = sign(rep.c_value);
    if (sign(*rep.h_value) != c || sign(rep.neumaier.slack) != c) {
      throw std::logic_error("(H), (C), (N) signs disagree at " + p.to_string());
    }
  }

  if (const TableRow* row = find_table_row(p); row && !row->comment.empty()) {
    rep.external_citations.push_back(row->comment);
  }
  return rep;
}

CriterionReport full_report(const QsdParams& p) {
  const DerivedParams d = derive_params(p);
  const SrgParams s = block_graph_params(p, d);  // validates integrality and b > v
  CriterionReport rep = evaluate_criteria(p, d);
  if (!rep.h_value) {
    // Re-raise the precise reason.
    hobart(p, d, s);
  }
  return rep;
}

}  // namespace qsd
