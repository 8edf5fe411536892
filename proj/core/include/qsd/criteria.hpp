#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsd/block_graph.hpp"
#include "qsd/params.hpp"
#include "qsd/rational.hpp"

namespace qsd {

/// Outcome of one inequality: Pass if its slack is positive, Equality if zero.
enum class Verdict { kFail, kEquality, kPass };

Verdict verdict_of(const Rational& slack);
std::string_view to_string(Verdict v);

// ---------------------------------------------------------------------------
// Calderbank-Cowen: 1 - 1/b <= T with
//   T = k(v-k)/(v(v-1)) * ((v-1)(2k-x-y) - k(v-k)) / ((k-x)(k-y)),
// equality exactly for 2-designs.

/// T - (1 - 1/b).
Rational cc_slack(const Rational& v, const Rational& k, const Rational& x, const Rational& y,
                  const Rational& b);
Rational cc_slack(const QsdParams& p, const DerivedParams& d);

/// The block count at which cc_slack vanishes, 1/(1-T). Throws UndefinedValue if
/// T is undefined or T >= 1.
Rational b_from_cc(const Rational& v, const Rational& k, const Rational& x, const Rational& y);

// ---------------------------------------------------------------------------
// Neumaier: B(B-A) <= AC where, for a fixed point u and ordered pairs of further
// points, A counts the pairs, B sums the triple counts and C sums
// lambda_uvw(lambda_uvw - 1).

struct NeumaierTerms {
  Rational A;
  Rational B;
  Rational C;
  Rational slack;  // AC - B(B-A)
};

/// A = (v-1)(v-2), B = r(k-1)(k-2),
/// C = r d (x-1)(x-2) + r(r-1-d)(y-1)(y-2) with d the regular-set degree.
NeumaierTerms neumaier(const Rational& v, const Rational& k, const Rational& x,
                       const Rational& y, const Rational& r, const Rational& degree);
NeumaierTerms neumaier(const QsdParams& p, const DerivedParams& d, const RegularSetParams& rs);

/// (v-1)(v-2) xb yb - k(v-k)(v-2)(xb+yb) + k(v-k)(k(v-k)-1), xb = k-x, yb = k-y.
Rational calderbank(const Rational& v, const Rational& k, const Rational& x, const Rational& y);
Rational calderbank(const QsdParams& p);

/// 1 + R^3/K^2 - (R+1)^3/(b-K-1)^2. Throws UndefinedValue if K = 0 or b-K-1 = 0.
Rational hobart_paren(const Rational& b, const Rational& K, const Rational& R);

/// (v-2)/v * hobart_paren - (v-2k)^2 lambda / (k^2 (k-1)(v-k)).
Rational hobart(const Rational& v, const Rational& k, const Rational& lambda, const Rational& b,
                const Rational& K, const Rational& R, const Rational& S);
Rational hobart(const QsdParams& p, const DerivedParams& d, const SrgParams& s);

/// Krein-parameter form of the Hobart bound: lhs = Q^1_11 normalised as
/// ((v-1)^2/b) * hobart_paren, rhs = (v-2k)^2 (v-1) / (k(v-k)(v-2)).
///
/// The normalisation is a reconstruction: it is the scaling under which lhs - rhs
/// is a positive multiple (v(v-1)^2/((v-2)b)) of the Hobart value.
struct KreinForm {
  Rational lhs;
  Rational rhs;
  Rational margin() const { return lhs - rhs; }
};
KreinForm krein_form(const Rational& v, const Rational& k, const Rational& b, const Rational& K,
                     const Rational& R, const Rational& S);
KreinForm krein_form(const QsdParams& p, const DerivedParams& d, const SrgParams& s);

/// Product of the primes dividing n to an odd power. n >= 1.
std::uint64_t squarefree_part(std::uint64_t n);

enum class ShrikhandeVerdict { kExcluded, kNotExcluded, kNotArdShaped };
std::string_view to_string(ShrikhandeVerdict v);

/// An ARD(n,t) cannot exist when n = 2 (mod 4) and the squarefree part of n has a
/// prime factor = 3 (mod 4). Independent of t.
ShrikhandeVerdict shrikhande_ard(const ArdParams& a);

/// Every criterion for one parameter set, exact.
struct CriterionReport {
  Rational cc_slack;
  NeumaierTerms neumaier;
  Rational c_value;
  std::optional<Rational> h_value;  // absent when K = 0, b-K-1 = 0 or S = -1
  std::optional<KreinForm> krein;
  std::optional<ArdParams> ard;
  ShrikhandeVerdict shrikhande = ShrikhandeVerdict::kNotArdShaped;

  Verdict cc_verdict = Verdict::kFail;
  Verdict n_verdict = Verdict::kFail;
  Verdict c_verdict = Verdict::kFail;
  std::optional<Verdict> h_verdict;
  std::optional<Verdict> krein_verdict;

  /// B = 0: every triple count is zero, so (N) holds with equality trivially.
  bool degenerate_triple = false;

  /// Hypotheses of the (H) <=> (C) <=> (N) equivalence hold: cc_slack = 0,
  /// k lambda != r y and the Hobart value is defined. The signs then agree.
  bool equivalence_applies = false;

  /// Literal comment column of a matching embedded table row, when non-empty.
  std::vector<std::string> external_citations;
};

/// Evaluates whatever is defined for p: tolerates non-integral r, b and degenerate
/// block graphs. Throws std::logic_error if equivalence_applies and the signs of
/// the three inequalities disagree.
CriterionReport evaluate_criteria(const QsdParams& p, const DerivedParams& d);

/// Strict form: requires integral r, b and a non-degenerate block graph, and
/// propagates the errors of block_graph_params / hobart otherwise.
CriterionReport full_report(const QsdParams& p);

}  // namespace qsd
