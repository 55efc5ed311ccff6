// Acceptance gate: one line per criterion, tolerances as pinned below.
//
//   acceptance [--known-infeasible 6[,k...]] [--decay-n-max N]
//
// A criterion listed as known-infeasible still prints its real verdict; it
// just does not make the exit status nonzero.

#include "oddzeta/asymptotics.hpp"
#include "oddzeta/certificate.hpp"
#include "oddzeta/linear_forms.hpp"
#include "oddzeta/numerics.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

using namespace oddzeta;

namespace {

constexpr double kX0Paper = 0.00036713;
constexpr double kX0Tol = 5e-8;
constexpr double kLogGPaper = -25.292363;
constexpr double kLogGTol = 1e-6;
constexpr double kLimitPaper = -0.292363;
constexpr int kCrossDigits = 30;
constexpr int kSoundnessSamples = 10000;
constexpr std::uint32_t kLcmMax = 10000;
constexpr int kDecayNMax = 215;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double mid(const Enclosure& e) { return mpfr_get_d(e.midpoint().get(), MPFR_RNDN); }

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Outcome paper_constants() {
  const auto t0 = std::chrono::steady_clock::now();
  const GrowthProfile g = decay_exponents(25, 96);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const double dx = std::abs(mid(g.x0.enclosure) - kX0Paper);
  const double dg = std::abs(mid(g.gx0_log) - kLogGPaper);
  Outcome o;
  o.pass = dx <= kX0Tol && dg <= kLogGTol && secs < 1.0;
  o.detail = "x0 = " + g.x0.enclosure.mid_decimal(12) + " (|diff| " + fmt("%.2e", dx) +
             " <= 5e-08), log g(x0) = " + g.gx0_log.mid_decimal(12) + " (|diff| " +
             fmt("%.2e", dg) + " <= 1e-06), " + fmt("%.3f", secs) + " s (< 1 s)";
  return o;
}

Outcome lemma_suite() {
  int grid = 0;
  std::string bad;
  for (int s : {7, 25})
    for (int n = 1; n <= 12; ++n) {
      const auto table = decompose_Rn(FormSpec::make(n, s));
      const auto form = zeta_coefficients(table);
      const bool ok = check_lemma1(table).passed && check_symmetry(table).passed &&
                      column_sum(table, 1) == 0 && check_lemma3(form).passed;
      ++grid;
      if (!ok) bad += " (s=" + std::to_string(s) + ",n=" + std::to_string(n) + ")";
    }
  return {bad.empty(), std::to_string(grid) + " grid points, s in {7,25}, n = 1..12, exact" +
                           (bad.empty() ? "" : "; failing:" + bad)};
}

Outcome zeta3_elimination() {
  int grid = 0;
  std::string bad;
  for (int s : {7, 25})
    for (int n = 1; n <= 12; ++n) {
      const auto form = zeta_coefficients(decompose_Rn(FormSpec::make(n, s)));
      ++grid;
      if (combined_coefficient(form, 3) != 0 || combine(form).c.count(3))
        bad += " (s=" + std::to_string(s) + ",n=" + std::to_string(n) + ")";
    }
  return {bad.empty(),
          "zeta(3) coefficient of 7 r_n - r^_n is exactly 0 at " + std::to_string(grid) + " grid points" + bad};
}

Outcome oracle_identities() {
  int bricks = 0, ratios = 0;
  std::string bad;
  for (int kind = 1; kind <= 6; ++kind)
    for (int n = 0; n <= 10; ++n) {
      const BrickKind bk = brick_kind(kind);
      ++bricks;
      if (decompose(brick_rational(bk, n)) != brick_table(bk, n))
        bad += " brick" + std::to_string(kind) + "@n=" + std::to_string(n);
    }
  for (int s : {7, 25})
    for (int n = 1; n <= 5; ++n) {
      const FormSpec spec = FormSpec::make(n, s);
      const SummandSequence ints(spec, Grid::integer), halves(spec, Grid::half);
      for (long k = 0; k <= 30; ++k) {
        ratios += 2;
        if (ints.term(k + 1) / ints.term(k) != consecutive_ratio_closed(spec, k) ||
            ints.term(k) / halves.term(k) != cross_ratio_closed(spec, k))
          bad += " ratio@(s=" + std::to_string(s) + ",n=" + std::to_string(n) + ",k=" +
                 std::to_string(k) + ")";
      }
    }
  return {bad.empty(), std::to_string(bricks) + " brick tables (n = 0..10), " + std::to_string(ratios) +
                           " ratio identities (n <= 5, k <= 30), exact" + bad};
}

Outcome cross_route() {
  int points = 0;
  double worst = -1e9;
  std::string bad;
  for (int s : {7, 25})
    for (int n = 1; n <= (s == 7 ? 8 : 4); ++n) {
      const FormSpec spec = FormSpec::make(n, s);
      const auto form = zeta_coefficients(decompose_Rn(spec));
      const Enclosure rb = evaluate_r_basis(form, kCrossDigits);
      const Enclosure hb = evaluate_rhat_basis(form, kCrossDigits);
      const Enclosure db = evaluate_delta_basis(combine(form), kCrossDigits);
      const SeriesSum rd = sum_series(SummandSequence(spec, Grid::integer), kCrossDigits);
      const SeriesSum hd = sum_series(SummandSequence(spec, Grid::half), kCrossDigits);
      DeltaOptions opt;
      opt.digits = kCrossDigits;
      opt.use_basis = false;
      const Enclosure dd = *delta(spec, opt).direct;
      for (auto [a, b] : {std::pair{&rb, &rd.value}, std::pair{&hb, &hd.value}, std::pair{&db, &dd}}) {
        ++points;
        worst = std::max({worst, a->relative_error_log2(), b->relative_error_log2()});
        if (!a->overlaps(*b) || !a->relative_radius_at_most(99) || !b->relative_radius_at_most(99))
          bad += " (s=" + std::to_string(s) + ",n=" + std::to_string(n) + ")";
      }
    }
  return {bad.empty(), std::to_string(points) +
                           " comparisons of r_n, r^_n, delta_n; all overlap, relative radii <= 1e-30 "
                           "(worst 2^" + fmt("%.0f", worst) + ")" + bad};
}

Outcome decay_trend(int n_max, std::ostream& log) {
  const int s = 25;
  RunConfig cfg;
  cfg.mode = Mode::decay_table;
  cfg.s = s;
  cfg.n_min = 1;
  cfg.n_max = n_max;
  cfg.precision = 30;
  cfg.basis_n_max = 20;
  const Report r = run(cfg);

  std::string n0 = "none", monotone_note, note_rises;
  bool positive_tail = false, monotone = false, cross_ok = true, signs_certified = true;
  int negatives = 0;
  for (const auto& c : r.checks) {
    if (c.id == "decay.delta") {
      signs_certified = signs_certified && c.verdict == Verdict::pass;
      if (c.note == "negative") ++negatives;
    }
    if (c.id == "decay.cross_route") cross_ok = cross_ok && c.verdict == Verdict::pass;
    if (c.id == "decay.n0" && c.verdict == Verdict::pass) {
      n0 = c.value.decimal;
      positive_tail = true;
    }
    if (c.id == "decay.monotone_tail") {
      monotone = c.verdict == Verdict::pass;
      monotone_note = c.note;
    }
    if (c.id == "decay.u_n") log << "    u_n " << c.subject << " = " << fmt("%.6e", std::stod(c.value.decimal)) << "\n";
  }
  const GrowthProfile g = decay_exponents(s, 100);
  Outcome o;
  o.pass = signs_certified && cross_ok && positive_tail && monotone;
  o.detail = "s=25, n = 1.." + std::to_string(n_max) + ": all delta_n signs certified: " +
             (signs_certified ? "yes" : "no") + "; basis/direct agree for n <= 20: " +
             (cross_ok ? "yes" : "no") + "; delta_n < 0 at " + std::to_string(negatives) +
             " n; n0 = " + n0 + ", delta_n > 0 for n0 <= n <= " + std::to_string(n_max) + ": " +
             (positive_tail ? "yes" : "no") + "; u_n monotone decreasing over the tail: " +
             (monotone ? "yes" : "no (" + monotone_note + ")") + "; asymptotic limit " +
             fmt("%.6f", kLimitPaper) + " (limit only, computed " + g.decay_exponent.mid_decimal(7) +
             ", no closeness asserted)";
  return o;
}

Outcome hanson_route() {
  const GrowthProfile g = decay_exponents(33, 128);
  const ScanResult scan = scan_decay(7, 41, 128);
  Outcome o;
  o.pass = g.decay_exponent_hanson.sign() == Sign::negative && scan.minimal_s_pnt == 25;
  o.detail = "33 log 3 + log g(x0(33)) = " + g.decay_exponent_hanson.mid_decimal(10) + " +/- " +
             g.decay_exponent_hanson.rad_decimal() + " (" + to_string(g.decay_exponent_hanson.sign()) +
             "); minimal s over 7..41: " + std::to_string(scan.minimal_s_pnt) + " (prime number theorem), " +
             std::to_string(scan.minimal_s_hanson) + " (d_n < 3^n)";
  return o;
}

Outcome lcm_properties() {
  const auto d = lcm_prefix(kLcmMax);
  ExactInteger three = 1;
  std::uint32_t first_bad = 0;
  for (std::uint32_t n = 1; n <= kLcmMax; ++n) {
    three *= 3;
    if (first_bad == 0 && !(d[n - 1] < three)) first_bad = n;
  }
  auto ratio = [&](std::uint32_t n) {
    return log_exact(d[n - 1], 128) / Enclosure::exact(static_cast<long>(n), 128);
  };
  const Enclosure r4 = ratio(kLcmMax), r2 = ratio(100);
  const Enclosure one = Enclosure::exact(1L, 128);
  const Enclosure gap4 = abs(r4 - one), gap2 = abs(r2 - one);
  const bool within = (Enclosure::exact(make_rational(1, 4), 128) - gap4).sign() == Sign::positive;
  const bool closer = (gap2 - gap4).sign() == Sign::positive;
  Outcome o;
  o.pass = first_bad == 0 && within && closer;
  o.detail = "d_n < 3^n for n <= 10000: " + std::string(first_bad ? "no (n=" + std::to_string(first_bad) + ")" : "yes") +
             "; log d_n / n = " + r2.mid_decimal(6) + " at n=100, " + r4.mid_decimal(6) +
             " at n=10000 (within 0.25 of 1: " + (within ? "yes" : "no") + ", closer: " +
             (closer ? "yes" : "no") + ")";
  return o;
}

Outcome soundness() {
  const auto classes = enclosure_soundness(20240611, kSoundnessSamples);
  int violations = 0;
  std::string list;
  for (const auto& c : classes) {
    violations += c.violations;
    list += (list.empty() ? "" : ",") + c.op;
  }
  return {violations == 0, std::to_string(classes.size()) + " operation classes (" + list + ") x " +
                               std::to_string(kSoundnessSamples) + " samples, " +
                               std::to_string(violations) + " containment violations"};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> known;
  int decay_n_max = kDecayNMax;
  for (int a = 1; a < argc; ++a) {
    const std::string arg = argv[a];
    if (arg == "--known-infeasible" && a + 1 < argc) {
      std::stringstream in(argv[++a]);
      for (std::string item; std::getline(in, item, ',');) known.insert(std::stoi(item));
    } else if (arg == "--decay-n-max" && a + 1 < argc) {
      decay_n_max = std::stoi(argv[++a]);
    } else {
      std::cerr << "usage: acceptance [--known-infeasible k,...] [--decay-n-max N]\n";
      return 2;
    }
  }

  std::ostringstream decay_log;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"paper constants", paper_constants},
      {"exact lemma suite", lemma_suite},
      {"zeta(3) elimination", zeta3_elimination},
      {"oracle identities", oracle_identities},
      {"cross-route numerics", cross_route},
      {"decay trend", [&] { return decay_trend(decay_n_max, decay_log); }},
      {"Hanson route", hanson_route},
      {"d_n properties", lcm_properties},
      {"enclosure soundness", soundness},
  };

  int hard_failures = 0, passed = 0;
  for (std::size_t j = 0; j < criteria.size(); ++j) {
    const int id = static_cast<int>(j) + 1;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[j].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.pass) ++passed;
    else if (!known.count(id)) ++hard_failures;
    std::cout << "criterion " << id << " " << (o.pass ? "PASS" : "FAIL") << " " << criteria[j].first
              << ": " << o.detail << " [" << fmt("%.2f", secs) << " s]"
              << (!o.pass && known.count(id) ? " (known infeasible as stated; see README)" : "")
              << "\n";
    if (id == 6) std::cout << decay_log.str();
  }
  std::cout << passed << "/" << criteria.size() << " criteria pass";
  if (!known.empty()) {
    std::cout << "; known infeasible:";
    for (int k : known) std::cout << " " << k;
  }
  std::cout << "\n";
  return hard_failures == 0 ? 0 : 1;
}
