#pragma once

/**
 * @file suite.hpp
 * @brief Named check suites over catalog entries, and text/JSON reports.
 */

#include <algorithm>
#include <future>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hopfdual/catalog.hpp"

namespace hopfdual {

enum class Suite { Hopf, Crossed, Smash, Duality, Cleft, Opposite, All };

inline const std::vector<std::pair<Suite, std::string>>& suite_names() {
  static const std::vector<std::pair<Suite, std::string>> names{
      {Suite::Hopf, "hopf"},   {Suite::Crossed, "crossed"},   {Suite::Smash, "smash"}, {Suite::Duality, "duality"},
      {Suite::Cleft, "cleft"}, {Suite::Opposite, "opposite"}, {Suite::All, "all"}};
  return names;
}

inline std::string to_string(Suite s) {
  for (const auto& [k, n] : suite_names())
    if (k == s) return n;
  return "?";
}

inline Suite parse_suite(const std::string& text) {
  for (const auto& [k, n] : suite_names())
    if (n == text) return k;
  fail(ErrorKind::ParseError, "unknown suite '" + text + "'");
}

struct SuiteRun {
  std::string entry;
  Suite suite = Suite::All;
  ValidationReport report;

  bool passed() const { return report.passed(); }
};

namespace detail {

inline ValidationReport hopf_checks(const CatalogEntry& e) {
  ValidationReport r;
  const HopfData& h = e.hopf;
  r.append(validate_hopf(h, e.supplied_antipode), "hopf-");
  if (e.supplied_antipode)
    r.run("hopf-antipode-supplied-axiom", "supplied S satisfies sum S(h1)h2 = eps(h)1 = sum h1S(h2)",
          [&]() -> std::optional<std::string> {
            ValidationReport s = validate_hopf(HopfData(h.bialgebra(), *e.supplied_antipode));
            const CheckResult* c = s.find("antipode");
            if (c == nullptr || c->passed) return std::nullopt;
            return c->witness;
          });
  r.run("hopf-twisted-is-inverse", "Sbar = S^-1 when S is bijective", [&]() -> std::optional<std::string> {
    Scalar d = determinant(h.ring(), h.antipode().matrix());
    if (!h.ring().is_unit(d)) {
      if (h.twisted_antipode()) return std::string("S not bijective but Sbar exists");
      return std::nullopt;
    }
    if (!h.twisted_antipode()) return std::string("S bijective but no Sbar");
    return map_difference(*h.twisted_antipode(), invert_map(h.antipode()));
  });
  HopfData dual = dual_hopf(h);
  r.append(validate_hopf(dual), "dual-");
  r.append(validate_pairing(dual_pairing(h, dual)), "pairing-");
  r.append(validate_regular_actions(h, regular_actions(h, dual.carrier())));
  return r;
}

inline ValidationReport crossed_checks(const CatalogEntry& e, const CrossedProductData& cp) {
  ValidationReport r;
  r.append(validate_crossed_product(cp));
  r.run("crossed-biconditional", "associative and unital iff normal, cocycle and twisted module",
        [&]() -> std::optional<std::string> {
          CrossedProductCheck c = crossed_product_check(cp.action, cp.cocycle.sigma);
          if (!c.agrees()) return std::string(c.direct() ? "direct passes, flags fail" : "flags pass, direct fails");
          return std::nullopt;
        });
  if (e.cleft) {
    r.append(validate_cleft(*e.cleft), "cleft-");
    r.run("cleft-decomposition", "A #_sigma H = B for the coinvariants A", [&]() -> std::optional<std::string> {
      crossed_from_integral(*e.cleft);
      return std::nullopt;
    });
  }
  return r;
}

inline ValidationReport smash_checks(const CatalogEntry& e, const CrossedProductData& cp) {
  ValidationReport r;
  const HopfData& h = e.hopf;
  r.run("smash-compare", "left and right smash of H with H* agree", [&]() -> std::optional<std::string> {
    SmashComparison c = smash_compare(h);
    if (!c.equal()) return std::string("structure constants differ");
    return std::nullopt;
  });
  ComoduleAlgebraData reg = regular_comodule(h.bialgebra());
  r.append(validate_algebra(hat_smash(reg)), "hat-");
  r.append(validate_algebra(op_hat_smash(reg)), "hat-op-");
  for (Side side : e.sides) {
    const std::string p = side == Side::Right ? "right-" : "left-";
    SubalgebraU u = e.subalgebra(side);
    r.append(validate_subalgebra(u), p);
    AlgebraData s = side == Side::Right ? right_smash(cp.comodule, u) : op_smash(cp.comodule, u);
    r.append(validate_algebra(s), p + "smash-");
  }
  return r;
}

inline ValidationReport roundtrip_checks(const CrossedProductData& cp) {
  ValidationReport r;
  CleftData cl = integral_from_crossed(cp);
  r.append(validate_cleft(cl), "roundtrip-");
  r.run("roundtrip-theta-inverse", "theta^-1 formula equals the convolution inverse of theta",
        [&]() -> std::optional<std::string> {
          return map_difference(cl.theta_inv, convolution_invert(cl.hopf.coalgebra(), cp.product, cl.theta));
        });
  r.run("roundtrip-recovers", "crossed_from_integral returns the original action and sigma",
        [&]() -> std::optional<std::string> {
          CleftDecomposition d = crossed_from_integral(cl);
          if (d.crossed.action.action.matrix() != cp.action.action.matrix()) return std::string("action");
          if (d.crossed.cocycle.sigma.matrix() != cp.cocycle.sigma.matrix()) return std::string("sigma");
          return std::nullopt;
        });
  return r;
}

inline ValidationReport opposite_checks(const CrossedProductData& cp) {
  ValidationReport r;
  std::optional<OppositeCrossed> opp;
  r.run("opposite-iso", "(A^op #_tau H^op)^op = A #_sigma H, colinear", [&]() -> std::optional<std::string> {
    opp = opposite_crossed(cp);
    return std::nullopt;
  });
  if (opp) {
    const CocycleData& tau = opp->crossed.cocycle;
    r.add("tau-cocycle", "tau is a normal invertible cocycle for the twisted module A^op",
          tau.normal && tau.cocycle && tau.twisted_module && tau.sigma_inv.has_value(),
          !tau.normal ? tau.normal_witness
                      : !tau.cocycle ? tau.cocycle_witness
                                     : !tau.twisted_module ? tau.twisted_witness : tau.inverse_error);
  }
  return r;
}

}  // namespace detail

/// Runs one suite on one entry. Unexpected library errors become a failed
/// `suite-error` check rather than escaping.
inline SuiteRun run_suite(const CatalogEntry& e, Suite suite) {
  SuiteRun out{e.name, suite, {}};
  ValidationReport& r = out.report;
  auto want = [suite](Suite s) { return suite == Suite::All || suite == s; };
  try {
    if (want(Suite::Hopf)) r.append(detail::hopf_checks(e));
    if (suite == Suite::Hopf) return out;
    CrossedProductData cp = e.crossed_product();
    if (want(Suite::Crossed)) r.append(detail::crossed_checks(e, cp));
    if (want(Suite::Smash)) r.append(detail::smash_checks(e, cp));
    if (want(Suite::Cleft)) r.append(detail::roundtrip_checks(cp));
    if (want(Suite::Opposite)) r.append(detail::opposite_checks(cp));

    const bool iso = want(Suite::Duality) || want(Suite::Cleft) || want(Suite::Opposite);
    if (iso && !e.iso_suites) {
      r.add("iso-suites", "entry is validators-only", true, "skipped");
      return out;
    }
    for (Side side : e.sides) {
      if (side == Side::Left && !want(Suite::Duality)) continue;
      SubalgebraU u = e.subalgebra(side);
      DualityRun run = duality_run(cp, u, e.v);
      if (want(Suite::Duality)) r.append(run.report);
      else if (!run.hypotheses) r.append(run.report);  // the routes need the direct iso
      if (side != Side::Right || !run.hypotheses) continue;
      if (want(Suite::Duality)) {
        r.append(norm_checks(cp, u, run.table));
        if (e.full_dual_u(side))
          r.run("mn-iso", "(A # H) # H* = M_n(A) through four certified legs", [&]() -> std::optional<std::string> {
            MatrixIso m = matrix_iso(cp, u);
            if (m.total.target.rank() != cp.algebra().rank() * e.hopf.rank() * e.hopf.rank())
              return "rank " + std::to_string(m.total.target.rank());
            return std::nullopt;
          });
      }
      if (want(Suite::Cleft)) r.append(cleft_route_checks(cp, u, run));
      if (want(Suite::Opposite)) r.append(opposite_chain_checks(cp, u, run));
    }
  } catch (const Error& ex) {
    r.add("suite-error", "suite ran to completion", false, ex.what());
  }
  return out;
}

/// Runs entries concurrently (each suite is sequential inside); results keep
/// the input order.
inline std::vector<SuiteRun> run_suites(const std::vector<CatalogEntry>& entries, Suite suite, std::size_t jobs = 1) {
  std::vector<SuiteRun> out(entries.size());
  jobs = std::max<std::size_t>(1, jobs);
  for (std::size_t start = 0; start < entries.size(); start += jobs) {
    std::vector<std::future<SuiteRun>> batch;
    for (std::size_t i = start; i < std::min(entries.size(), start + jobs); ++i)
      batch.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async,
                                 [&entries, i, suite] { return run_suite(entries[i], suite); }));
    for (std::size_t i = 0; i < batch.size(); ++i) out[start + i] = batch[i].get();
  }
  return out;
}

// ---------------------------------------------------------------------------
// reports

struct ReportOptions {
  bool canonical = false;  // no timings
};

namespace detail {

inline std::vector<CheckResult> ordered(const ValidationReport& r) {
  std::vector<CheckResult> checks = r.checks;
  std::stable_sort(checks.begin(), checks.end(), [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  return checks;
}

inline std::size_t failures(const ValidationReport& r) {
  return static_cast<std::size_t>(std::count_if(r.checks.begin(), r.checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

}  // namespace detail

inline bool all_passed(const std::vector<SuiteRun>& runs) {
  return std::all_of(runs.begin(), runs.end(), [](const SuiteRun& s) { return s.passed(); });
}

inline std::string render_text(const std::vector<SuiteRun>& runs, const ReportOptions& opt = {}) {
  std::ostringstream os;
  std::size_t total = 0, failed = 0;
  for (const auto& run : runs) {
    std::size_t f = detail::failures(run.report);
    os << "== " << run.entry << " [" << to_string(run.suite) << "] " << (f == 0 ? "PASS" : "FAIL") << " ("
       << run.report.checks.size() - f << "/" << run.report.checks.size() << ")\n";
    for (const auto& c : detail::ordered(run.report)) {
      os << (c.passed ? "  ok   " : "  FAIL ") << c.id << " : " << c.anchor;
      if (!c.witness.empty()) os << " [" << c.witness << "]";
      if (!opt.canonical) os << " " << std::fixed << std::setprecision(4) << c.seconds << "s";
      os << "\n";
    }
    total += run.report.checks.size();
    failed += f;
  }
  os << "total " << total << " checks, " << failed << " failed: " << (failed == 0 ? "PASS" : "FAIL") << "\n";
  return os.str();
}

inline nlohmann::json report_json(const std::vector<SuiteRun>& runs, const ReportOptions& opt = {}) {
  nlohmann::json out;
  out["runs"] = nlohmann::json::array();
  for (const auto& run : runs) {
    nlohmann::json j;
    j["entry"] = run.entry;
    j["suite"] = to_string(run.suite);
    j["passed"] = run.passed();
    j["checks"] = nlohmann::json::array();
    for (const auto& c : detail::ordered(run.report)) {
      nlohmann::json cj{{"id", c.id}, {"anchor", c.anchor}, {"passed", c.passed}, {"witness", c.witness}};
      if (!opt.canonical) cj["seconds"] = c.seconds;
      j["checks"].push_back(cj);
    }
    out["runs"].push_back(j);
  }
  out["passed"] = all_passed(runs);
  return out;
}

inline std::string render_json(const std::vector<SuiteRun>& runs, const ReportOptions& opt = {}) {
  return report_json(runs, opt).dump(2) + "\n";
}

}  // namespace hopfdual
