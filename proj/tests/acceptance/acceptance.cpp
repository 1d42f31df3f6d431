// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any line fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"

using namespace vlab;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
};

class Tally {
 public:
  void expect(bool cond, const std::string& what) {
    ++checks_;
    if (!cond) {
      ++failures_;
      if (first_.empty()) first_ = what;
    }
  }
  long checks() const { return checks_; }
  long failures() const { return failures_; }
  Verdict verdict(const std::string& summary) const {
    std::ostringstream s;
    s << summary << "; " << checks_ << " checks";
    if (failures_) s << ", " << failures_ << " failed, first: " << first_;
    return {failures_ == 0, s.str()};
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::string first_;
};

// Grid of h with h_0 = 1 and h_1..h_d in 0..cmax, for every d in [1, dMax].
void grid(unsigned dMax, unsigned cmax, const std::function<void(const HVector&)>& fn) {
  for (unsigned d = 1; d <= dMax; ++d) oracle::for_each_grid(d, cmax, fn);
}

std::vector<oracle::CorpusEntry> corpus() { return oracle::load_corpus(std::string(VLAB_DATA_DIR) + "/polytopes"); }

Verdict engine_equivalence() {
  Tally t;
  long instances = 0;
  grid(6, 3, [&](const HVector& h) {
    ++instances;
    for (unsigned n = 1; n <= 12; ++n) {
      const auto def = un_definition(h, n).coeffs;
      const auto conv = un_convolution(h, n).coeffs;
      const auto eul = un_eulerian(h, n).coeffs;
      auto series = oracle::un_by_series(h.coeffs(), h.d(), n);
      const bool topVanishes = series.back() == 0;
      series.pop_back();
      const std::string tag = h.str() + " n=" + std::to_string(n);
      t.expect(def == conv && conv == eul, "engines disagree on " + tag);
      t.expect(topVanishes && def == series, "series oracle disagrees on " + tag);
    }
  });
  return t.verdict(std::to_string(instances) + " grid inputs (d <= 6, h_i in 0..3), n = 1..12, 3 engines + series oracle");
}

Verdict triangle_example() {
  Tally t;
  const auto tri = ingest_polytope({{0, 1}, {1, 0}, {-1, -1}});
  const auto delta = delta_vector(tri).delta;
  t.expect(delta == oracle::big({1, 1, 1}), "delta is " + join(delta));
  const RootReport h = sturm_real_roots(IntPoly(delta));
  t.expect(h.realRootCount == 0, "1+t+t^2 has real roots");
  t.expect(oracle::numeric_real_count(delta) == 0, "numeric oracle finds real roots of 1+t+t^2");
  const auto u2 = un_definition(HVector(2, delta), 2).coeffs;
  t.expect(u2 == oracle::big({1, 7, 4}), "U_2 is " + join(u2));
  const RootReport r = sturm_real_roots(IntPoly(u2));
  t.expect(r.realRootCount == 2 && r.negativeRootCount == 2 && r.squarefree, "U_2 roots not 2 distinct negative");
  t.expect(u2[1] * u2[1] > u2[0] * u2[2], "U_2 not strictly log-concave");
  t.expect(logconcave_unimodal(u2).none_fail(), "log-concavity diagnostic fails on U_2");
  return t.verdict("delta = (1,1,1), no real roots; U_2 = (1,7,4) with 2 distinct negative roots, 7^2 > 1*4");
}

Verdict eulerian_eigenvector() {
  Tally t;
  for (unsigned d = 1; d <= 8; ++d) {
    const auto a = oracle::eulerian_by_descents(d);
    for (unsigned n = 1; n <= 10; ++n) {
      BigInt scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), n, d);
      std::vector<BigInt> expected;
      for (const auto& x : a) expected.push_back(scale * x);
      for (UnMethod m : {UnMethod::Definition, UnMethod::Convolution, UnMethod::Eulerian})
        t.expect(apply_un(HVector(d, a), n, m).coeffs == expected,
                 "d=" + std::to_string(d) + " n=" + std::to_string(n) + " " + std::string(to_string(m)));
    }
  }
  return t.verdict("U_n A_d = n^d A_d for d <= 8, n <= 10, A_d from descent counts");
}

Verdict plane_roots_and_boundary() {
  Tally t;
  int polygons = 0;
  std::vector<std::string> linear;
  for (const auto& e : corpus()) {
    if (e.polytope.dim() != 2) continue;
    ++polygons;
    const HVector delta = delta_vector(e.polytope).as_hvector();
    for (unsigned n = 2; n <= 20; ++n) {
      const auto c = un_definition(delta, n).coeffs;
      const std::string tag = e.name + " n=" + std::to_string(n);
      const RootReport r = sturm_real_roots(IntPoly(c));
      // h_2(n) counts interior points of nP, which is zero only for a unimodular triangle at n = 2;
      // then every root of 1 + 3t is still real, simple and negative, but there is only one.
      if (c[2] == 0) {
        linear.push_back(tag);
        t.expect(r.degree == 1 && r.allRealSimpleNegative && c[1] > 0, "Sturm: " + tag);
      } else {
        t.expect(r.degree == 2 && r.realRootCount == 2 && r.negativeRootCount == 2 && r.squarefree, "Sturm: " + tag);
        // Independent: positive coefficients and positive discriminant.
        t.expect(c[0] > 0 && c[1] > 0 && c[1] * c[1] - 4 * c[0] * c[2] > 0, "discriminant: " + tag);
      }
      const BigInt boundary = oracle::polygon_data(e.vertices).boundary_count(n);
      t.expect(c[1] - c[2] == boundary - 3, "boundary identity (hull oracle): " + tag);
      t.expect(boundary_identity_d2(e.polytope, n), "boundary identity (library): " + tag);
    }
  }
  t.expect(polygons >= 10, "fewer than 10 polygons in the corpus");
  std::string summary = std::to_string(polygons) + " polygons, n = 2..20: all roots real, simple, negative; 2 roots except ";
  for (std::size_t k = 0; k < linear.size(); ++k) summary += (k ? ", " : "") + linear[k];
  summary += " (degree 1, no interior points); boundary identity exact";
  return t.verdict(summary);
}

Verdict strict_inequalities_after_dilation() {
  Tally t;
  long eligible = 0;
  auto check = [&](const HVector& h) {
    const unsigned d = h.d();
    const IntPoly a = decompose(h).a;
    bool positive = true;
    for (unsigned i = 0; i <= d; ++i) positive = positive && a[i] > 0;
    if (!positive) return;
    ++eligible;
    const unsigned nd = d % 2 == 0 ? d : (d + 1) / 2;
    for (unsigned n = nd; n <= 2 * d; ++n) {
      const auto c = un_convolution(h, n).coeffs;
      bool holds = true;
      for (unsigned i = 0; i + 1 <= d / 2; ++i) holds = holds && c[i + 1] > c[d - i];
      const std::string tag = h.str() + " n=" + std::to_string(n);
      t.expect(holds, tag);
      const BeijingResult b = beijing_guarantee(h, n);
      t.expect(b.holds == holds && b.certified, "library report disagrees: " + tag);
    }
  };
  grid(6, 3, check);
  for (unsigned d = 7; d <= 8; ++d) oracle::for_each_grid(d, 2, check);
  return t.verdict(std::to_string(eligible) + " grid inputs with a > 0 (d <= 6 over 0..3, d = 7, 8 over 0..2), n_d <= n <= 2d");
}

Verdict bound_suites() {
  Tally t;
  long bmChecked = 0, leadChecked = 0, runnerChecked = 0, runnerEligible = 0, runnerFailing = 0;
  std::string firstRunner;
  grid(6, 3, [&](const HVector& h) {
    const auto bm = betke_mcmullen_bounds(h);
    bmChecked += static_cast<long>(bm.named("betke_mcmullen").size());
    t.expect(bm.none_fail(), "Betke-McMullen bound fails on " + h.str());
    const auto lead = deadset_bounds(h);
    for (const auto& c : lead.checks) leadChecked += c.status != CheckStatus::NotApplicable;
    t.expect(lead.none_fail(), "leading-coefficient bound fails on " + h.str());
    try {
      const auto runner = runner_bounds(h);
      bool fails = false, applicable = false;
      for (const auto* c : runner.named("runner")) {
        if (c->status == CheckStatus::NotApplicable) continue;
        ++runnerChecked;
        applicable = true;
        fails = fails || c->status == CheckStatus::Fails;
      }
      runnerEligible += applicable;
      if (fails) {
        ++runnerFailing;
        if (firstRunner.empty()) firstRunner = h.str();
      }
      t.expect(!fails, "refined bound fails on " + h.str());
    } catch (const PreconditionFailed&) {
    }
  });

  // (1, 11, 11, 1) with its second coefficient negated.
  const HVector corrupted(4, {1, -11, 11, 1});
  auto rejects = [](auto fn) {
    try {
      fn();
      return false;
    } catch (const PreconditionFailed&) {
      return true;
    }
  };
  t.expect(rejects([&] { betke_mcmullen_bounds(corrupted); }), "Betke-McMullen accepted a negated coefficient");
  t.expect(rejects([&] { runner_bounds(corrupted); }), "refined bound accepted a negated coefficient");
  t.expect(rejects([&] { hibi_inequalities(corrupted); }), "Hibi accepted a negated coefficient");
  const auto lead = deadset_bounds(corrupted);
  t.expect(lead.find("subleading_lower")->status == CheckStatus::NotApplicable, "leading bounds ignored a broken hypothesis");

  std::ostringstream s;
  s << "grid d <= 6 over 0..3: " << bmChecked << " Betke-McMullen, " << leadChecked << " leading-coefficient and "
    << runnerChecked << " refined-bound comparisons; refined bound violated on " << runnerFailing << " of " << runnerEligible
    << " inputs meeting its hypothesis" << (firstRunner.empty() ? "" : " (first " + firstRunner + ")")
    << "; corrupted input rejected";
  return t.verdict(s.str());
}

Verdict decomposition_identities() {
  Tally t;
  std::mt19937_64 rng(20261015);
  long exact = 0, shifted = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const unsigned d = 1 + trial % 8;
    const HVector h = oracle::random_h(rng, d, -5, 9, trial % 2 == 1, false);
    const SymDecomp s = decompose(h);
    const SymDecomp c = decompose_closed_form(h);
    t.expect(s.a == c.a && s.b == c.b, "decompositions differ on " + h.str());

    // Left side from g(m) for m >= 0 and g(-m) by extending backward; right side from prefix sums of a.
    const RatPoly g = h_to_g(h);
    std::vector<BigRat> forward;
    for (unsigned m = 0; m <= d; ++m) forward.push_back(g.eval(BigRat(m)));
    const auto backward = oracle::extend_backward(forward, d, 20);
    const auto rhs = oracle::series_by_prefix_sums(s.a.padded(d + 1), d - 1, 20);
    const BigRat sign(d % 2 ? -1 : 1);
    bool tail = true;
    for (unsigned m = 1; m < 20; ++m) tail = tail && g.eval(BigRat(m)) - sign * backward[m - 1] == BigRat(rhs[m]);
    t.expect(tail, "series differ beyond the constant term on " + h.str());
    const BigRat gap = forward[0] - BigRat(rhs[0]);
    if (d % 2 == 1 || h[d + 1] == 0) {
      ++exact;
      t.expect(gap == 0, "constant terms differ on " + h.str());
    } else {
      ++shifted;
      // g(0) = h_0 + h_{d+1} but a_0 = h_0 - h_{d+1}.
      t.expect(gap == BigRat(2 * h[d + 1]), "constant term gap is not 2 h_{d+1} on " + h.str());
    }
    const auto libL = reciprocity_series(h, 20);
    const auto libR = symmetric_part_series(h, 20);
    for (unsigned m = 0; m < 20; ++m) {
      const BigRat lhs = m == 0 ? forward[0] : g.eval(BigRat(m)) - sign * backward[m - 1];
      t.expect(libL[m] == lhs && libR[m] == rhs[m], "library series differ from oracle on " + h.str());
    }
  }
  std::ostringstream s;
  s << "1000 random inputs (h_{d+1} set on half), series to 20 terms: identity exact on " << exact
    << "; on the " << shifted << " with even d and h_{d+1} != 0 only the constant term differs, by exactly 2 h_{d+1}";
  return t.verdict(s.str());
}

Verdict convergence() {
  Tally t;
  for (unsigned d = 2; d <= 4; ++d) {
    const HVector h(d, std::vector<BigInt>(d + 1, BigInt(1)));
    const auto early = convergence_trace(h, 4, 4, 30);
    const auto late = convergence_trace(h, 32, 32, 30);
    t.expect(early.size() == d && late.size() == d, "d=" + std::to_string(d) + " not real-rooted");
    for (unsigned i = 0; i < d && i < early.size() && i < late.size(); ++i)
      t.expect(early[i].realRooted && late[i].realRooted && late[i].distanceBound < early[i].distanceBound,
               "d=" + std::to_string(d) + " i=" + std::to_string(i + 1));
  }
  return t.verdict("h = (1,...,1), d = 2, 3, 4: root distance bound at n = 32 below n = 4 for every i");
}

Verdict ehrhart_overdetermination() {
  Tally t;
  int polytopes = 0;
  for (const auto& e : corpus()) {
    ++polytopes;
    t.expect(interpolation_consistent(e.polytope), "interpolation: " + e.name);
    for (unsigned n = 1; n <= 4; ++n) t.expect(dilation_consistency(e.polytope, n), "dilation: " + e.name + " n=" + std::to_string(n));
  }
  return t.verdict(std::to_string(polytopes) + " polytopes, counts at m = d+1..2d+2 and U_n delta = delta(nP) for n <= 4");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"engine equivalence", engine_equivalence},
      {"triangle example", triangle_example},
      {"Eulerian eigenvector", eulerian_eigenvector},
      {"plane roots and boundary identity", plane_roots_and_boundary},
      {"strict inequalities after dilation", strict_inequalities_after_dilation},
      {"inequality suites", bound_suites},
      {"decomposition identities", decomposition_identities},
      {"root convergence", convergence},
      {"Ehrhart over-determination", ehrhart_overdetermination},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[k].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !v.ok;
    std::cout << (v.ok ? "PASS" : "FAIL") << " " << k + 1 << " " << criteria[k].first << ": " << v.detail << " ["
              << static_cast<long>(secs * 1000) << " ms]" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
