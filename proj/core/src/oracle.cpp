#include "qsd/oracle.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "qsd/block_graph.hpp"
#include "qsd/criteria.hpp"
#include "qsd/error.hpp"

namespace qsd {

// ---------------------------------------------------------------------------
// ExplicitDesign

ExplicitDesign::ExplicitDesign(int v, std::vector<std::vector<int>> blocks)
    : v_(v), blocks_(std::move(blocks)) {
  if (v_ < 1 || v_ > 64) {
    throw InvalidParameters("explicit designs support 1 <= v <= 64, got " + std::to_string(v_));
  }
  masks_.reserve(blocks_.size());
  for (auto& block : blocks_) {
    std::sort(block.begin(), block.end());
    std::uint64_t mask = 0;
    for (int p : block) {
      if (p < 0 || p >= v_) throw InvalidParameters("point " + std::to_string(p) + " out of range");
      const std::uint64_t bit = std::uint64_t{1} << p;
      if (mask & bit) throw InvalidParameters("point " + std::to_string(p) + " repeated in block");
      mask |= bit;
    }
    masks_.push_back(mask);
  }
}

ExplicitDesign ExplicitDesign::complement() const {
  std::vector<std::vector<int>> out;
  out.reserve(blocks_.size());
  for (std::uint64_t mask : masks_) {
    std::vector<int> block;
    for (int p = 0; p < v_; ++p) {
      if (!(mask >> p & 1)) block.push_back(p);
    }
    out.push_back(std::move(block));
  }
  return ExplicitDesign(v_, std::move(out));
}

std::string ExplicitDesign::to_text() const {
  std::ostringstream out;
  out << v_ << ' ' << blocks_.size() << '\n';
  for (const auto& block : blocks_) {
    for (std::size_t i = 0; i < block.size(); ++i) out << (i ? " " : "") << block[i];
    out << '\n';
  }
  return out.str();
}

ExplicitDesign parse_design(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InvalidParameters("design text is empty");
  std::istringstream head(line);
  long long v = 0, b = 0;
  std::string extra;
  if (!(head >> v >> b) || (head >> extra) || b < 0) {
    throw InvalidParameters("design header must be 'v b', got '" + line + "'");
  }
  std::vector<std::vector<int>> blocks;
  for (long long i = 0; i < b; ++i) {
    if (!std::getline(in, line)) {
      throw InvalidParameters("design text ends after " + std::to_string(i) + " of " +
                              std::to_string(b) + " blocks");
    }
    std::istringstream row(line);
    std::vector<int> block;
    int p = 0;
    while (row >> p) block.push_back(p);
    if (!row.eof()) throw InvalidParameters("bad block line '" + line + "'");
    blocks.push_back(std::move(block));
  }
  return ExplicitDesign(static_cast<int>(v), std::move(blocks));
}

// ---------------------------------------------------------------------------
// Constructions

ExplicitDesign build_pair_design(int n) {
  if (n < 3) throw InvalidParameters("pair design needs n >= 3");
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) blocks.push_back({i, j});
  }
  return ExplicitDesign(n, std::move(blocks));
}

ExplicitDesign build_6_3_2() {
  return ExplicitDesign(6, {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
                            {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}});
}

ExplicitDesign build_witt_23() {
  constexpr int kLength = 23;
  constexpr int kDistance = 7;
  constexpr std::uint32_t kWords = std::uint32_t{1} << kLength;

  // Error patterns of weight < kDistance.
  std::vector<std::uint32_t> ball;
  for (std::uint32_t e = 0; e < kWords; ++e) {
    if (std::popcount(e) < kDistance) ball.push_back(e);
  }

  // covered[w] != 0 iff w is within distance kDistance-1 of an accepted word.
  std::vector<std::uint8_t> covered(kWords, 0);
  std::vector<std::uint32_t> code;
  for (std::uint32_t w = 0; w < kWords; ++w) {
    if (covered[w]) continue;
    code.push_back(w);
    for (std::uint32_t e : ball) covered[w ^ e] = 1;
  }

  std::vector<std::vector<int>> blocks;
  for (std::uint32_t c : code) {
    if (std::popcount(c) != kDistance) continue;
    std::vector<int> block;
    for (int p = 0; p < kLength; ++p) {
      if (c >> p & 1) block.push_back(p);
    }
    blocks.push_back(std::move(block));
  }

  if (code.size() != 4096 || blocks.size() != 253) {
    throw std::logic_error("lexicode construction produced " + std::to_string(code.size()) +
                           " words and " + std::to_string(blocks.size()) + " weight-7 words");
  }
  std::unordered_map<std::uint32_t, int> quads;
  for (const auto& block : blocks) {
    for (int a = 0; a < 7; ++a)
      for (int b = a + 1; b < 7; ++b)
        for (int c = b + 1; c < 7; ++c)
          for (int d = c + 1; d < 7; ++d) {
            ++quads[(1u << block[a]) | (1u << block[b]) | (1u << block[c]) | (1u << block[d])];
          }
  }
  const bool steiner = quads.size() == 8855 &&
                       std::all_of(quads.begin(), quads.end(),
                                   [](const auto& kv) { return kv.second == 1; });
  if (!steiner) throw std::logic_error("weight-7 lexicode words do not form S(4,7,23)");
  return ExplicitDesign(kLength, std::move(blocks));
}

// ---------------------------------------------------------------------------
// Verification

namespace {

/// Fixed-width bitset over the blocks.
class BlockSet {
 public:
  explicit BlockSet(std::size_t n) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return words_[i / 64] >> (i % 64) & 1; }
  std::int64_t count() const {
    std::int64_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  std::int64_t count_and(const BlockSet& o) const {
    std::int64_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }
  std::int64_t count_and(const BlockSet& o1, const BlockSet& o2) const {
    std::int64_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      c += std::popcount(words_[i] & o1.words_[i] & o2.words_[i]);
    }
    return c;
  }

 private:
  std::vector<std::uint64_t> words_;
};

/// Returns the common value of `values`, or nullopt if they differ or are empty.
std::optional<std::int64_t> constant_of(const std::vector<std::int64_t>& values) {
  if (values.empty()) return std::nullopt;
  for (auto x : values) {
    if (x != values.front()) return std::nullopt;
  }
  return values.front();
}

template <typename A, typename B>
void expect_equal(OracleReport& rep, const std::string& what, const A& measured,
                  const B& predicted) {
  if (!(measured == predicted)) {
    std::ostringstream out;
    out << what << ": measured " << measured << ", predicted " << predicted;
    rep.mismatches.push_back(out.str());
  }
}

}  // namespace

OracleReport verify_design(const ExplicitDesign& design, bool check_complement) {
  OracleReport rep;
  const int v = design.v();
  const std::size_t b = design.b();
  const auto& masks = design.masks();
  rep.v = v;
  rep.b = static_cast<std::int64_t>(b);

  // Block size, replication, pair counts.
  std::set<std::int64_t> sizes;
  for (auto m : masks) sizes.insert(std::popcount(m));
  if (sizes.size() != 1) {
    rep.mismatches.push_back("block sizes are not constant");
    return rep;
  }
  rep.k = *sizes.begin();

  std::vector<BlockSet> through(v, BlockSet(b));  // blocks on each point
  for (std::size_t i = 0; i < b; ++i) {
    for (int p = 0; p < v; ++p) {
      if (masks[i] >> p & 1) through[p].set(i);
    }
  }
  std::vector<std::int64_t> reps, pairs;
  for (int p = 0; p < v; ++p) {
    reps.push_back(through[p].count());
    for (int q = p + 1; q < v; ++q) pairs.push_back(through[p].count_and(through[q]));
  }
  rep.r = constant_of(reps);
  rep.lambda = constant_of(pairs);
  rep.is_2design = rep.lambda.has_value() && *rep.lambda >= 1;
  if (!rep.is_2design) rep.mismatches.push_back("pair counts are not a positive constant");

  // Block intersection sizes.
  std::set<std::int64_t> meets;
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t j = i + 1; j < b; ++j) meets.insert(std::popcount(masks[i] & masks[j]));
  }
  rep.intersection_sizes.assign(meets.begin(), meets.end());
  rep.quasisymmetric = meets.size() == 2;
  if (!rep.quasisymmetric) {
    rep.mismatches.push_back("design has " + std::to_string(meets.size()) +
                             " distinct block intersection sizes, expected 2");
  }
  if (!rep.is_2design || !rep.quasisymmetric) return rep;

  const std::int64_t x = *meets.rbegin();
  const std::int64_t y = *meets.begin();
  try {
    rep.params = QsdParams::make(v, rep.k, *rep.lambda, x, y);
  } catch (const InvalidParameters& e) {
    rep.mismatches.push_back(std::string("measured parameters invalid: ") + e.what());
    return rep;
  }
  const QsdParams& p = *rep.params;

  // design_core predictions.
  const DerivedParams dp = derive_params(p);
  expect_equal(rep, "r", make_rational(rep.r.value_or(-1)), dp.r);
  expect_equal(rep, "b", make_rational(rep.b), dp.b);
  if (!dp.integral) return rep;

  SrgParams srg;
  try {
    srg = block_graph_params(p, dp);
  } catch (const Error& e) {
    rep.mismatches.push_back(std::string("block graph: ") + e.what());
    return rep;
  }
  const RegularSetParams rs = regular_set_params(p, dp);

  // Intersection-x graph by counting.
  std::vector<BlockSet> adj(b, BlockSet(b));
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      if (i != j && std::popcount(masks[i] & masks[j]) == x) adj[i].set(j);
    }
  }
  std::vector<std::int64_t> degrees, on_edges, off_edges;
  std::vector<std::vector<std::int64_t>> common(b, std::vector<std::int64_t>(b));
  for (std::size_t i = 0; i < b; ++i) {
    degrees.push_back(adj[i].count());
    for (std::size_t j = 0; j < b; ++j) {
      common[i][j] = adj[i].count_and(adj[j]);
      if (i < j) (adj[i].test(j) ? on_edges : off_edges).push_back(common[i][j]);
    }
  }
  rep.K = constant_of(degrees);
  rep.Lambda = constant_of(on_edges);
  rep.M = constant_of(off_edges);
  if (!rep.K || !rep.Lambda || !rep.M) {
    rep.mismatches.push_back("intersection-x graph is not strongly regular");
    return rep;
  }
  expect_equal(rep, "V", rep.b, srg.V);
  expect_equal(rep, "K", make_rational(*rep.K), srg.K);
  expect_equal(rep, "Lambda", make_rational(*rep.Lambda), srg.Lambda);
  expect_equal(rep, "M", make_rational(*rep.M), srg.M);

  // Spectrum without floating point: A1 = K1 (regularity, above) and
  // (A-RI)(A-SI) = A^2 - (R+S)A + RS I is a multiple of J, so A has at most the
  // eigenvalues R, S on the complement of the all-ones vector. The trace then fixes
  // the multiplicities.
  if (!srg.all_integral()) {
    rep.mismatches.push_back("predicted eigenvalues are not integral");
  } else {
    const std::int64_t R = to_int64(srg.R);
    const std::int64_t S = to_int64(srg.S);
    std::optional<std::int64_t> c;
    bool annihilated = true;
    for (std::size_t i = 0; i < b && annihilated; ++i) {
      for (std::size_t j = 0; j < b; ++j) {
        const std::int64_t entry =
            common[i][j] - (R + S) * (adj[i].test(j) ? 1 : 0) + (i == j ? R * S : 0);
        if (!c) c = entry;
        if (entry != *c) {
          annihilated = false;
          break;
        }
      }
    }
    rep.spectrum_verified = annihilated && R != S;
    if (!rep.spectrum_verified) {
      rep.mismatches.push_back("(A-RI)(A-SI) is not a multiple of J");
    } else {
      // K + mR*R + mS*S = trace(A) = 0 and mR + mS = V - 1.
      const std::int64_t V = rep.b;
      const std::int64_t num = -*rep.K - (V - 1) * S;
      if (num % (R - S) != 0) {
        rep.mismatches.push_back("eigenvalue multiplicities are not integral");
      } else {
        rep.mult_R = num / (R - S);
        rep.mult_S = V - 1 - rep.mult_R;
        expect_equal(rep, "multiplicity of R", rep.mult_R, srg.mult_R);
        expect_equal(rep, "multiplicity of S", rep.mult_S, srg.mult_S);
      }
    }
  }

  // Regular sets: S(u) = blocks through u.
  std::vector<std::int64_t> inside, outside;
  for (int u = 0; u < v; ++u) {
    for (std::size_t i = 0; i < b; ++i) {
      (through[u].test(i) ? inside : outside).push_back(adj[i].count_and(through[u]));
    }
  }
  rep.degree = constant_of(inside);
  rep.nexus = constant_of(outside);
  if (!rep.degree || !rep.nexus) {
    rep.mismatches.push_back("blocks through a point do not form a regular set");
  } else {
    expect_equal(rep, "regular-set degree d", make_rational(*rep.degree), rs.degree);
    expect_equal(rep, "regular-set nexus e", make_rational(*rep.nexus), rs.nexus);
  }

  // Triple sums, per point, over ordered pairs of distinct further points.
  const NeumaierTerms nt = neumaier(p, dp, rs);
  std::vector<std::int64_t> all_triples;
  bool sums_constant = true;
  for (int u = 0; u < v; ++u) {
    std::int64_t s1 = 0, sl = 0, sll = 0;
    std::vector<std::int64_t> counts;
    for (int w1 = 0; w1 < v; ++w1) {
      if (w1 == u) continue;
      for (int w2 = 0; w2 < v; ++w2) {
        if (w2 == u || w2 == w1) continue;
        const std::int64_t l3 = through[u].count_and(through[w1], through[w2]);
        ++s1;
        sl += l3;
        sll += l3 * (l3 - 1);
        counts.push_back(l3);
        all_triples.push_back(l3);
      }
    }
    if (u == 0) {
      rep.sum_one = s1;
      rep.sum_lambda = sl;
      rep.sum_lambda_pairs = sll;
      const Rational mean = make_rational(sl) / s1;
      Rational dev = 0;
      for (auto l3 : counts) dev += (l3 - mean) * (l3 - mean);
      rep.sum_squared_deviation = dev;
    } else if (s1 != rep.sum_one || sl != rep.sum_lambda || sll != rep.sum_lambda_pairs) {
      sums_constant = false;
    }
  }
  if (!sums_constant) rep.mismatches.push_back("triple sums depend on the fixed point");
  expect_equal(rep, "triple sum of 1 (A)", make_rational(rep.sum_one), nt.A);
  expect_equal(rep, "triple sum of lambda_uvw (B)", make_rational(rep.sum_lambda), nt.B);
  expect_equal(rep, "triple sum of lambda_uvw(lambda_uvw-1) (C)",
               make_rational(rep.sum_lambda_pairs), nt.C);
  expect_equal(rep, "sum of squared deviations", rep.sum_squared_deviation,
               Rational(nt.B + nt.C - nt.B * nt.B / nt.A));
  if (sign(rep.sum_squared_deviation) < 0) {
    rep.mismatches.push_back("sum of squared deviations is negative");
  }
  rep.is_3design = constant_of(all_triples).has_value();

  // Inequalities: (N) is tight exactly for 3-designs, and (C), (H) with it.
  rep.n_slack = nt.slack;
  rep.c_value = calderbank(p);
  try {
    rep.h_value = hobart(p, dp, srg);
  } catch (const UndefinedValue& e) {
    rep.mismatches.push_back(std::string("Hobart value undefined: ") + e.what());
  }
  expect_equal(rep, "(N) equality <=> 3-design", rep.n_slack == 0, rep.is_3design);
  expect_equal(rep, "(C) equality <=> 3-design", rep.c_value == 0, rep.is_3design);
  if (rep.h_value) {
    expect_equal(rep, "(H) equality <=> 3-design", *rep.h_value == 0, rep.is_3design);
  }
  for (const auto& [name, value] :
       {std::pair<const char*, Rational>{"(N)", rep.n_slack}, {"(C)", rep.c_value}}) {
    if (sign(value) < 0) rep.mismatches.push_back(std::string(name) + " violated by a design");
  }
  if (rep.h_value && sign(*rep.h_value) < 0) rep.mismatches.push_back("(H) violated by a design");

  if (check_complement) {
    rep.complement_checked = true;
    const OracleReport comp = verify_design(design.complement(), false);
    if (!comp.ok() || !comp.params) {
      rep.mismatches.push_back("complement is not a quasisymmetric 2-design");
      for (const auto& m : comp.mismatches) rep.mismatches.push_back("complement: " + m);
    } else {
      rep.complement_params = comp.params;
      try {
        const auto [predicted, pd] = complement(p, dp);
        expect_equal(rep, "complement parameters", comp.params->to_string(),
                     predicted.to_string());
        expect_equal(rep, "complement r", make_rational(comp.r.value_or(-1)), pd.r);
      } catch (const Error& e) {
        rep.mismatches.push_back(std::string("complement map: ") + e.what());
      }
    }
  }
  return rep;
}

}  // namespace qsd
