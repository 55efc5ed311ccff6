#include "oddzeta/certificate.hpp"

#include "oddzeta/asymptotics.hpp"
#include "oddzeta/linear_forms.hpp"
#include "oddzeta/numerics.hpp"
#include "oddzeta/ratfun.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace oddzeta {

std::string to_string(Mode m) {
  switch (m) {
    case Mode::verify_exact:
      return "verify-exact";
    case Mode::decay_table:
      return "decay-table";
    case Mode::asymptotics:
      return "asymptotics";
    case Mode::zeta_table:
      return "zeta-table";
    case Mode::selftest:
      return "selftest";
    default:
      return "all";
  }
}

std::string to_string(Format f) {
  switch (f) {
    case Format::json:
      return "json";
    case Format::csv:
      return "csv";
    default:
      return "human";
  }
}

Mode parse_mode(const std::string& name) {
  for (Mode m : {Mode::verify_exact, Mode::decay_table, Mode::asymptotics, Mode::zeta_table,
                 Mode::selftest, Mode::all})
    if (to_string(m) == name) return m;
  throw ConfigError("unknown mode: " + name);
}

Format parse_format(const std::string& name) {
  for (Format f : {Format::json, Format::csv, Format::human})
    if (to_string(f) == name) return f;
  throw ConfigError("unknown format: " + name);
}

namespace {

int parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw ConfigError("bad " + what + ": '" + text + "'");
  }
  if (used != text.size()) throw ConfigError("bad " + what + ": '" + text + "'");
  return v;
}

}  // namespace

FaultSpec parse_fault(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) parts.push_back(item);
  if (parts.size() != 3) throw ConfigError("fault must be n,i,k: '" + text + "'");
  return {parse_int(parts[0], "fault n"), parse_int(parts[1], "fault i"),
          parse_int(parts[2], "fault k")};
}

ScanRange parse_scan(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw ConfigError("scan range must be a..b: '" + text + "'");
  ScanRange r{parse_int(text.substr(0, dots), "scan start"),
              parse_int(text.substr(dots + 2), "scan end")};
  if (r.from % 2 == 0 || r.to % 2 == 0 || r.from < 7 || r.from > r.to)
    throw ConfigError("scan range must be odd..odd with 7 <= a <= b: '" + text + "'");
  return r;
}

void RunConfig::validate() const {
  if (s < 7 || s % 2 == 0) throw ConfigError("s must be odd and >= 7");
  if (n_min < 1 || n_min > n_max) throw ConfigError("need 1 <= n-min <= n-max");
  if (precision < 10) throw ConfigError("precision must be >= 10");
  if (max_cutoff < 16) throw ConfigError("max-cutoff must be >= 16");
  if (samples < 1) throw ConfigError("samples must be >= 1");
  if (scan_s && (scan_s->from % 2 == 0 || scan_s->to % 2 == 0 || scan_s->from < 7 ||
                 scan_s->from > scan_s->to))
    throw ConfigError("scan range must be odd..odd with 7 <= a <= b");
  if (fault) {
    if (fault->n < n_min || fault->n > n_max) throw ConfigError("fault n outside the n-range");
    if (fault->i < 1 || fault->i > s) throw ConfigError("fault i must be in 1..s");
    if (fault->k < 0 || fault->k > fault->n) throw ConfigError("fault k must be in 0..n");
  }
}

nlohmann::ordered_json config_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["mode"] = to_string(c.mode);
  j["s"] = c.s;
  j["n_min"] = c.n_min;
  j["n_max"] = c.n_max;
  j["precision"] = c.precision;
  j["format"] = to_string(c.format);
  j["seed"] = c.seed;
  j["max_cutoff"] = c.max_cutoff;
  j["basis_n_max"] = c.basis_n_max;
  j["samples"] = c.samples;
  j["scan_s"] = c.scan_s ? nlohmann::ordered_json(std::to_string(c.scan_s->from) + ".." +
                                                  std::to_string(c.scan_s->to))
                         : nlohmann::ordered_json(nullptr);
  j["fault"] = c.fault ? nlohmann::ordered_json(std::to_string(c.fault->n) + "," +
                                                std::to_string(c.fault->i) + "," +
                                                std::to_string(c.fault->k))
                       : nlohmann::ordered_json(nullptr);
  return j;
}

namespace {

std::string subject_n(int n) { return "n=" + std::to_string(n); }
std::string subject_s(int s) { return "s=" + std::to_string(s); }

Check make_check(std::string id, std::string subject, Verdict v, Value value,
                 std::string note = {}) {
  Check c;
  c.id = std::move(id);
  c.subject = std::move(subject);
  c.verdict = v;
  c.value = std::move(value);
  c.note = std::move(note);
  return c;
}

ExactRational to_rational(const BigFloat& f) {
  ExactRational q;
  mpfr_get_q(q.get_mpq_t(), f.get());
  return q;
}

ExactInteger int_pow(const ExactInteger& b, unsigned long e) {
  ExactInteger r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

// Per-task generator, independent of scheduling.
std::mt19937_64 task_rng(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
  return std::mt19937_64(seq);
}

// Runs fn(0..count-1) on a worker pool; results come back in index order.
template <typename T>
std::vector<T> parallel_map(int count, const std::function<T(int)>& fn) {
  std::vector<T> out(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<int> next{0};
  const int workers =
      std::max(1, std::min<int>(count, static_cast<int>(std::thread::hardware_concurrency())));
  auto work = [&] {
    for (int idx = next++; idx < count; idx = next++) {
      try {
        out[idx] = fn(idx);
      } catch (...) {
        errors[idx] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

ExactInteger least_prime_above(int n) {
  ExactInteger p = n;
  mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  return p;
}

// Distinct rationals avoiding the poles 0, -1, ..., -n.
std::vector<ExactRational> sample_points(std::mt19937_64& rng, int n, std::size_t count) {
  std::uniform_int_distribution<long> num(-60L * (n + 1), 60L * (n + 1));
  std::uniform_int_distribution<long> den(1, 97);
  std::set<ExactRational> seen;
  std::vector<ExactRational> out;
  while (out.size() < count) {
    ExactRational t = make_rational(num(rng), den(rng));
    if (is_integer(t) && t <= 0 && t >= -n) continue;
    if (seen.insert(t).second) out.push_back(t);
  }
  return out;
}

std::string locate(const std::vector<CoefficientVerdict>& failures) {
  if (failures.empty()) return {};
  std::string s = std::to_string(failures.size()) + " failing; first at i=" +
                  std::to_string(failures.front().i) + ", k=" + std::to_string(failures.front().k);
  return s;
}

// ---------------------------------------------------------------- verify-exact

std::vector<Check> exact_checks(const RunConfig& cfg, int n) {
  const FormSpec spec = FormSpec::make(n, cfg.s);
  const std::string subj = subject_n(n);
  std::vector<Check> out;
  auto rng = task_rng(cfg.seed, 1, n);

  const FactoredRational rn = build_Rn(spec);
  out.push_back(make_check("exact.second_line", subj, verdict_from(build_Rn_second_line(spec) == rn),
                           Value::exact(static_cast<long>(rn.numerator_degree()))));

  {
    bool ok = true;
    for (int j = 1; j <= n && ok; ++j)
      ok = evaluate(rn, ExactRational(j)) == 0 && evaluate(rn, make_rational(2 * j - 1, 2)) == 0;
    out.push_back(make_check("exact.summand_zeros", subj, verdict_from(ok),
                             Value::exact(static_cast<long>(2 * n)),
                             ok ? "" : "R_n does not vanish at every j and j - 1/2, j = 1..n"));
  }
  {
    const auto pts = sample_points(rng, n, 16);
    bool ok = true;
    for (const auto& t : pts) {
      const ExactRational mirror = -t - n;
      if (is_integer(mirror) && mirror <= 0 && mirror >= -n) continue;
      ok = ok && evaluate(rn, mirror) == -evaluate(rn, t);
    }
    out.push_back(make_check("exact.antisymmetry", subj, verdict_from(ok),
                             Value::exact(static_cast<long>(pts.size()))));
  }

  PartialFractionTable table = decompose_Rn(spec);
  std::string fault_note;
  if (cfg.fault && cfg.fault->n == n) {
    const ExactRational eps =
        make_rational(1, int_pow(lcm_upto(n), cfg.s) * least_prime_above(n));
    table = table.with_perturbation(cfg.fault->i, cfg.fault->k, eps);
    fault_note = "fault injected at i=" + std::to_string(cfg.fault->i) +
                 ", k=" + std::to_string(cfg.fault->k);
  }

  {
    const std::size_t count = static_cast<std::size_t>(cfg.s) * (n + 1) + 6 * n + 3;
    const auto pts = sample_points(rng, n, count);
    std::size_t bad = 0;
    for (const auto& t : pts)
      if (table.evaluate(t) != evaluate(rn, t)) ++bad;
    out.push_back(make_check("exact.reconstruction", subj, verdict_from(bad == 0),
                             Value::exact(static_cast<long>(count)),
                             bad ? std::to_string(bad) + " sample points disagree" : ""));
  }

  const Lemma1Report l1 = check_lemma1(table);
  out.push_back(make_check("exact.lemma1", subj, verdict_from(l1.passed), Value::exact(l1.dn),
                           locate(l1.failures())));

  const SymmetryReport sym = check_symmetry(table);
  {
    std::vector<CoefficientVerdict> bad;
    for (const auto& v : sym.mirror)
      if (!v.pass) bad.push_back(v);
    out.push_back(make_check("exact.lemma2_mirror", subj, verdict_from(bad.empty()),
                             Value::exact(static_cast<long>(sym.mirror.size())), locate(bad)));
    std::string note;
    for (int i : sym.nonzero_column_sums)
      note += (note.empty() ? "nonzero sums at i=" : ",") + std::to_string(i);
    out.push_back(make_check("exact.lemma2_even_sums", subj,
                             verdict_from(sym.nonzero_column_sums.empty()),
                             Value::exact(static_cast<long>(sym.nonzero_column_sums.size())), note));
    const ExactRational a1 = column_sum(table, 1);
    out.push_back(make_check("exact.a1_sum", subj, verdict_from(a1 == 0), Value::exact(a1)));
  }

  std::optional<ZetaLinearForm> form;
  std::string broken;
  try {
    form = zeta_coefficients(table);
  } catch (const TableInvariantError& e) {
    broken = e.what();
  }

  if (!form) {
    for (const char* id : {"exact.lemma3", "exact.lemma3_inner_sums", "exact.zeta3_elimination",
                           "exact.combined_integrality"})
      out.push_back(make_check(id, subj, Verdict::fail, Value::text("unavailable"), broken));
  } else {
    const Lemma3Report l3 = check_lemma3(*form);
    std::string coeff_note, inner_note;
    for (const auto& v : l3.coefficients)
      if (!v.pass && coeff_note.empty()) coeff_note = "fails for " + v.what + " i=" + std::to_string(v.i);
    bool inner_ok = true;
    for (const auto& v : l3.inner_sums) {
      if (v.pass) continue;
      inner_ok = false;
      if (inner_note.empty())
        inner_note = "fails for " + v.what + " i=" + std::to_string(v.i) + " k=" + std::to_string(v.k);
    }
    bool coeff_ok = coeff_note.empty();
    Check c3 = make_check("exact.lemma3", subj, verdict_from(coeff_ok),
                          Value::exact(static_cast<long>(l3.coefficients.size())), coeff_note);
    c3.extras.emplace_back("lambda", Value::exact(int_pow(l3.dn, cfg.s)));
    c3.extras.emplace_back("common_denominator", Value::exact(common_denominator(*form)));
    out.push_back(std::move(c3));
    out.push_back(make_check("exact.lemma3_inner_sums", subj, verdict_from(inner_ok),
                             Value::exact(static_cast<long>(l3.inner_sums.size())), inner_note));

    const ExactRational z3 = combined_coefficient(*form, 3);
    out.push_back(make_check("exact.zeta3_elimination", subj, verdict_from(z3 == 0), Value::exact(z3)));

    const CombinedForm combined = combine(*form);
    const CombinedIntegrality ci = check_combined_integrality(combined);
    std::string note =
        "d_n^s c0 and d_n^(s-i) c_i; the common denominator of hypothetically rational zeta "
        "values is not part of this check";
    for (const auto& v : ci.slots)
      if (!v.pass) {
        note = "fails for c_" + std::to_string(v.i);
        break;
      }
    if (!ci.c0_integral) note = "d_n^s c0 is not an integer";
    out.push_back(make_check("exact.combined_integrality", subj, verdict_from(ci.passed),
                             Value::exact(int_pow(lcm_upto(n), cfg.s) * combined.c0), note));
  }
  if (!fault_note.empty())
    for (auto& c : out)
      if (c.verdict == Verdict::fail) c.note = c.note.empty() ? fault_note : c.note + "; " + fault_note;

  if (n <= 10) {
    static const char* names[] = {"factorial", "falling", "shifted",
                                  "half_falling", "half_rising", "half_shifted"};
    for (int kind = 1; kind <= 6; ++kind) {
      const BrickKind bk = brick_kind(kind);
      const bool ok = decompose(brick_rational(bk, n)) == brick_table(bk, n);
      out.push_back(make_check(std::string("oracle.brick.") + names[kind - 1], subj,
                               verdict_from(ok), Value::exact(static_cast<long>(kind))));
    }
    std::uniform_int_distribution<int> pick(1, 6);
    const int k1 = pick(rng), k2 = pick(rng);
    const auto prod = decompose(brick_rational(brick_kind(k1), n) * brick_rational(brick_kind(k2), n));
    const Lemma1Report lp = check_lemma1(prod);
    out.push_back(make_check("oracle.brick_product_lemma1", subj, verdict_from(lp.passed),
                             Value::text(std::to_string(k1) + "x" + std::to_string(k2)),
                             locate(lp.failures())));
  }

  {
    const SummandSequence ints(spec, Grid::integer);
    const SummandSequence halves(spec, Grid::half);
    constexpr long kMax = 30;
    bool cons = true, cross = true, summand = true;
    ExactRational c_prev = ints.term(0);
    for (long k = 0; k <= kMax; ++k) {
      const ExactRational ck = c_prev;
      const ExactRational hk = halves.term(k);
      const ExactRational c_next = ints.term(k + 1);
      cons = cons && c_next / ck == consecutive_ratio_closed(spec, k);
      cross = cross && ck / hk == cross_ratio_closed(spec, k);
      if (k < 4)
        summand = summand && ck == evaluate(rn, ExactRational(n + 1 + k)) &&
                  hk == evaluate(rn, make_rational(2 * (n + k) + 1, 2));
      c_prev = c_next;
    }
    out.push_back(make_check("oracle.ratio_consecutive", subj, verdict_from(cons), Value::exact(kMax)));
    out.push_back(make_check("oracle.ratio_cross", subj, verdict_from(cross), Value::exact(kMax)));
    out.push_back(make_check("oracle.term_summand", subj, verdict_from(summand), Value::exact(4L)));
  }
  return out;
}

void verify_exact(const RunConfig& cfg, Report& report) {
  const int count = cfg.n_max - cfg.n_min + 1;
  const auto per_n = parallel_map<std::vector<Check>>(
      count, [&](int idx) { return exact_checks(cfg, cfg.n_min + idx); });
  for (const auto& block : per_n)
    for (const auto& c : block) report.add(c);
}

// ---------------------------------------------------------------- decay-table

struct DecayRow {
  int n = 0;
  std::optional<DeltaEvaluation> eval;
  std::string error;
  std::optional<Enclosure> u;
};

DecayRow decay_row(const RunConfig& cfg, int n) {
  DecayRow row;
  row.n = n;
  const FormSpec spec = FormSpec::make(n, cfg.s);
  DeltaOptions opt;
  opt.digits = cfg.precision;
  opt.use_basis = n <= cfg.basis_n_max;
  opt.use_direct = true;
  opt.max_cutoff = cfg.max_cutoff;
  try {
    row.eval = delta(spec, opt);
    if (row.eval->direct && row.eval->direct->sign() == Sign::positive)
      row.u = normalized_decay(spec, *row.eval->direct);
  } catch (const PrecisionUnattainable& e) {
    row.error = e.what();
  }
  return row;
}

void decay_table(const RunConfig& cfg, Report& report) {
  const int digits = cfg.precision;
  const int count = cfg.n_max - cfg.n_min + 1;
  const auto rows =
      parallel_map<DecayRow>(count, [&](int idx) { return decay_row(cfg, cfg.n_min + idx); });

  for (const auto& row : rows) {
    const std::string subj = subject_n(row.n);
    if (!row.eval) {
      report.add(make_check("decay.delta", subj, Verdict::indeterminate, Value::text("unavailable"),
                            row.error));
      continue;
    }
    const DeltaEvaluation& ev = *row.eval;
    const Enclosure& d = *ev.direct;
    const Sign sg = d.sign();
    Check c = make_check("decay.delta", subj,
                         sg == Sign::indeterminate ? Verdict::indeterminate : Verdict::pass,
                         Value::enclosure(d, digits), to_string(sg));
    const mpfr_prec_t p = d.precision() + 64;
    c.extras.emplace_back(
        "scaled", Value::enclosure(Enclosure::exact(int_pow(lcm_upto(row.n), cfg.s), p) *
                                       d.with_precision(p),
                                   digits));
    c.extras.emplace_back("route", Value::text(ev.basis ? "basis+direct" : "direct"));
    report.add(std::move(c));

    if (ev.basis) {
      Check x = make_check("decay.cross_route", subj, verdict_from(ev.routes_agree()),
                           Value::enclosure(*ev.basis, digits));
      x.extras.emplace_back("direct", Value::enclosure(d, digits));
      report.add(std::move(x));
    }
    const Enclosure ratio = *ev.r_direct / *ev.rhat_direct;
    report.add(make_check("decay.ratio", subj, Verdict::pass, Value::enclosure(ratio, digits)));
    if (row.u) report.add(make_check("decay.u_n", subj, Verdict::pass, Value::enclosure(*row.u, digits)));
  }

  const std::string subj = subject_s(cfg.s);

  // n0: start of the maximal run of certified-positive delta ending at n_max.
  int n0 = -1;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    if (!it->eval || it->eval->direct->sign() != Sign::positive) break;
    n0 = it->n;
  }
  if (n0 < 0) {
    report.add(make_check("decay.n0", subj, Verdict::indeterminate, Value::text("not found"),
                          "delta is not certified positive at n_max; extend the n-range"));
  } else {
    std::string note = "delta certified positive for n0 <= n <= " + std::to_string(cfg.n_max);
    if (n0 == cfg.n_min && cfg.n_min > 1) note += "; run starts at n_min, the true n0 may be smaller";
    report.add(make_check("decay.n0", subj, Verdict::pass, Value::exact(static_cast<long>(n0)), note));
  }

  {
    std::vector<const DecayRow*> tail;
    for (const auto& r : rows)
      if (n0 > 0 && r.n >= n0 && r.u) tail.push_back(&r);
    if (tail.size() < 2) {
      report.add(make_check("decay.monotone_tail", subj, Verdict::indeterminate,
                            Value::exact(static_cast<long>(tail.size())),
                            "fewer than two u_n values in the positive tail"));
    } else {
      std::vector<int> rises, unresolved;
      for (std::size_t j = 1; j < tail.size(); ++j) {
        const Enclosure diff = *tail[j]->u - *tail[j - 1]->u;
        if (diff.sign() == Sign::positive) rises.push_back(tail[j]->n);
        else if (diff.sign() == Sign::indeterminate) unresolved.push_back(tail[j]->n);
      }
      Verdict v = !rises.empty() ? Verdict::fail
                                 : (unresolved.empty() ? Verdict::pass : Verdict::indeterminate);
      std::string note;
      const auto& list = rises.empty() ? unresolved : rises;
      if (!list.empty()) {
        note = rises.empty() ? "unresolved at n=" : "u_n increases at n=";
        for (std::size_t j = 0; j < list.size() && j < 12; ++j)
          note += (j ? "," : "") + std::to_string(list[j]);
        if (list.size() > 12) note += ",...";
      }
      report.add(make_check("decay.monotone_tail", subj, v,
                            Value::exact(static_cast<long>(tail.size())), note));
    }
  }

  {
    // |r_n/r^_n - 1| across the range.
    std::vector<std::pair<int, Enclosure>> dist;
    for (const auto& r : rows)
      if (r.eval) {
        const Enclosure q = *r.eval->r_direct / *r.eval->rhat_direct;
        dist.emplace_back(r.n, abs(q - Enclosure::exact(1L, q.precision())));
      }
    std::vector<int> rises;
    bool unresolved = false;
    for (std::size_t j = 1; j < dist.size(); ++j) {
      const Sign sg = (dist[j].second - dist[j - 1].second).sign();
      if (sg == Sign::positive) rises.push_back(dist[j].first);
      else if (sg == Sign::indeterminate) unresolved = true;
    }
    std::string note;
    for (std::size_t j = 0; j < rises.size() && j < 12; ++j)
      note += (j ? "," : "distance to 1 grows at n=") + std::to_string(rises[j]);
    const Verdict v = !rises.empty() ? Verdict::fail
                                     : (unresolved ? Verdict::indeterminate : Verdict::pass);
    report.add(make_check("decay.ratio_trend", subj, v,
                          dist.empty() ? Value::text("none")
                                       : Value::enclosure(dist.back().second, digits),
                          note));
  }

  {
    const GrowthProfile g = decay_exponents(cfg.s, bits_for_digits(digits) + 16);
    report.add(make_check("decay.limit", subj, Verdict::pass,
                          Value::enclosure(g.decay_exponent, digits),
                          "asymptotic limit of u_n as n -> infinity; no closeness to the computed "
                          "u_n is asserted"));
  }
}

// ---------------------------------------------------------------- asymptotics

void asymptotics(const RunConfig& cfg, Report& report) {
  const int digits = cfg.precision;
  const long bits = static_cast<long>(bits_for_digits(digits)) + 16;
  const std::string subj = subject_s(cfg.s);
  const GrowthProfile g = decay_exponents(cfg.s, bits);
  const IntPolynomial p = root_polynomial(cfg.s);

  {
    const bool ok = p.sign_at(g.x0.lo) < 0 && p.sign_at(g.x0.hi) > 0;
    Check c = make_check("asym.x0", subj, verdict_from(ok), Value::enclosure(g.x0.enclosure, digits),
                         std::to_string(g.x0.steps) + " bisection steps");
    c.extras.emplace_back("degree", Value::exact(static_cast<long>(p.degree())));
    report.add(std::move(c));
  }
  {
    const ExactRational lo = to_rational(g.x1.lower());
    const ExactRational hi = to_rational(g.x1.upper());
    const bool ok = lo > 0 && log_derivative_sign(cfg.s, lo) < 0 && log_derivative_sign(cfg.s, hi) > 0;
    report.add(make_check("asym.x1", subj, verdict_from(ok), Value::enclosure(g.x1, digits),
                          "sign change of f'/f certified across the enclosure"));
  }
  {
    const Enclosure fx = f_value(g.x0.enclosure, cfg.s);
    report.add(make_check("asym.f_x0", subj, verdict_from(fx.contains(ExactRational(1))),
                          Value::enclosure(fx, digits)));
  }
  {
    const Enclosure sl = saddle_log(g.x0.enclosure, cfg.s);
    Check c = make_check("asym.log_g", subj, verdict_from(sl.overlaps(g.gx0_log)),
                         Value::enclosure(g.gx0_log, digits));
    c.extras.emplace_back("saddle_form", Value::enclosure(sl, digits));
    report.add(std::move(c));
  }
  auto signed_check = [&](const char* id, const Enclosure& e) {
    const Sign sg = e.sign();
    report.add(make_check(id, subj, sg == Sign::indeterminate ? Verdict::indeterminate : Verdict::pass,
                          Value::enclosure(e, digits), to_string(sg)));
  };
  signed_check("asym.decay_exponent", g.decay_exponent);
  signed_check("asym.decay_exponent_hanson", g.decay_exponent_hanson);

  if (cfg.scan_s) {
    const ScanResult scan = scan_decay(cfg.scan_s->from, cfg.scan_s->to, bits);
    for (const auto& e : scan.entries) {
      const bool certain = e.decay_exponent.sign() != Sign::indeterminate &&
                           e.decay_exponent_hanson.sign() != Sign::indeterminate;
      Check c = make_check("asym.scan", subject_s(e.s), certain ? Verdict::pass : Verdict::indeterminate,
                           Value::enclosure(e.decay_exponent, digits));
      c.extras.emplace_back("hanson", Value::enclosure(e.decay_exponent_hanson, digits));
      report.add(std::move(c));
    }
    const std::string range = std::to_string(cfg.scan_s->from) + ".." + std::to_string(cfg.scan_s->to);
    auto minimal = [&](const char* id, int found) {
      report.add(make_check(id, "s=" + range, found > 0 ? Verdict::pass : Verdict::indeterminate,
                            found > 0 ? Value::exact(static_cast<long>(found)) : Value::text("none"),
                            found > 0 ? "" : "no certified negative exponent in range"));
    };
    minimal("asym.minimal_s", scan.minimal_s_pnt);
    minimal("asym.minimal_s_hanson", scan.minimal_s_hanson);
  }
}

// ---------------------------------------------------------------- zeta-table

void zeta_table(const RunConfig& cfg, Report& report) {
  const int digits = cfg.precision;
  const long bits = static_cast<long>(bits_for_digits(digits)) + 8;
  const mpfr_prec_t prec = bits + 64;
  {
    const Enclosure z2 = zeta_value(2, bits);
    const Enclosure pi = pi_constant(prec);
    const Enclosure ref = pi * pi / Enclosure::exact(6L, prec);
    report.add(make_check("zeta.pi_squared", "i=2", verdict_from(z2.overlaps(ref)),
                          Value::enclosure(z2, digits)));
  }
  for (int i = 3; i <= cfg.s; i += 2) {
    const Enclosure z = zeta_value(i, bits);
    // Second opinion with an unrelated cutoff and correction count.
    int corrections = std::max(8, static_cast<int>(bits / 8));
    Enclosure alt = zeta_value_em(i, 37, corrections, prec);
    for (int cutoff = 74; !alt.radius_at_most(make_rational(1, ExactInteger(1) << static_cast<mp_bitcnt_t>(bits))) &&
                          cutoff < (1 << 20);
         cutoff *= 2)
      alt = zeta_value_em(i, cutoff, corrections, prec);
    Check c = make_check("zeta.value", "i=" + std::to_string(i), verdict_from(z.overlaps(alt)),
                         Value::enclosure(z, digits));
    c.extras.emplace_back("second_cutoff", Value::enclosure(alt, digits));
    report.add(std::move(c));
  }
}

// ---------------------------------------------------------------- selftest

void selftest(const RunConfig& cfg, Report& report) {
  static const char* names[] = {"factorial", "falling", "shifted",
                                "half_falling", "half_rising", "half_shifted"};
  for (int kind = 1; kind <= 6; ++kind) {
    std::string bad;
    for (int n = 1; n <= 10; ++n) {
      const BrickKind bk = brick_kind(kind);
      if (decompose(brick_rational(bk, n)) != brick_table(bk, n))
        bad += (bad.empty() ? "mismatch at n=" : ",") + std::to_string(n);
    }
    report.add(make_check(std::string("selftest.brick.") + names[kind - 1], "n=1..10",
                          verdict_from(bad.empty()), Value::exact(10L), bad));
  }

  {
    const auto b = bernoulli_list(30);
    bool ok = b[0] == 1 && b[1] == make_rational(-1, 2) && b[2] == make_rational(1, 6) &&
              b[4] == make_rational(-1, 30) && b[12] == make_rational(-691, 2730) &&
              b[30] == make_rational(ExactInteger("8615841276005"), 14322);
    for (int j = 3; j <= 29; j += 2) ok = ok && b[j] == 0;
    report.add(make_check("selftest.bernoulli", "m=30", verdict_from(ok), Value::exact(b[12])));
  }

  {
    constexpr std::uint32_t kLimit = 2000;
    const auto prefix = lcm_prefix(kLimit);
    bool ok = true;
    for (std::uint32_t m : {1u, 2u, 7u, 60u, 499u, 1000u, kLimit})
      ok = ok && prefix[m - 1] == lcm_upto_sieve(m) && prefix[m - 1] == lcm_upto(m);
    report.add(make_check("selftest.lcm", "n<=2000", verdict_from(ok), Value::exact(prefix[59])));
  }

  for (const auto& cls : enclosure_soundness(cfg.seed, cfg.samples)) {
    Check c = make_check("selftest.containment", "op=" + cls.op, verdict_from(cls.violations == 0),
                         Value::exact(static_cast<long>(cls.violations)),
                         cls.violations ? "true value outside the computed enclosure" : "");
    c.extras.emplace_back("samples", Value::exact(static_cast<long>(cls.samples)));
    report.add(std::move(c));
  }
}

}  // namespace

// ---------------------------------------------------------------- soundness

namespace {

struct Sampler {
  std::mt19937_64 rng;

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

  mpfr_prec_t precision() { return uniform(24, 400); }

  // Random rational, magnitude between 2^{-60} and 2^{60}.
  ExactRational value(bool positive) {
    ExactInteger num = uniform(1, (1L << 40) - 1);
    ExactInteger den = uniform(1, (1L << 40) - 1);
    ExactRational v = make_rational(num, den);
    const long shift = uniform(-20, 20);
    const ExactRational scale(ExactInteger(1) << static_cast<mp_bitcnt_t>(std::labs(shift)));
    if (shift >= 0) v *= scale;
    else v /= scale;
    if (!positive && uniform(0, 1)) v = -v;
    return v;
  }

  // |x| <= 200, for exp.
  ExactRational moderate() {
    return make_rational(uniform(-200L << 30, 200L << 30), uniform(1, 1L << 30));
  }

  // An enclosure containing x: exact, a tight ball, or a wide one (wide ones
  // stay in the positive half-line when required).
  Enclosure around(const ExactRational& x, bool keep_positive) {
    const mpfr_prec_t prec = precision();
    const long mode = uniform(0, 2);
    if (mode == 0) return Enclosure::exact(x, prec);
    const long e = mode == 1 ? uniform(20, 120) : uniform(1, 8);
    ExactRational w = abs(x) / ExactRational(ExactInteger(1) << static_cast<mp_bitcnt_t>(e));
    ExactRational lo = x - w * make_rational(uniform(0, 1000), 1000);
    ExactRational hi = x + w * make_rational(uniform(0, 1000), 1000);
    if (keep_positive && lo <= 0) lo = x / 2;
    return Enclosure::from_bounds(lo, hi, prec);
  }
};

// [f(x)] bracketed directly with MPFR at high precision, f increasing.
template <typename F>
std::pair<ExactRational, ExactRational> bracket(const ExactRational& x, mpfr_prec_t prec, F f) {
  BigFloat xl(prec), xh(prec), yl(prec), yh(prec);
  mpfr_set_q(xl.get(), x.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(xh.get(), x.get_mpq_t(), MPFR_RNDU);
  f(yl.get(), xl.get(), MPFR_RNDD);
  f(yh.get(), xh.get(), MPFR_RNDU);
  return {to_rational(yl), to_rational(yh)};
}

}  // namespace

std::vector<SoundnessClass> enclosure_soundness(std::uint64_t seed, int samples) {
  std::vector<SoundnessClass> out;
  auto run_class = [&](const std::string& op, std::uint64_t tag,
                       const std::function<bool(Sampler&)>& trial) {
    Sampler smp{task_rng(seed, 2, tag)};
    SoundnessClass cls{op, samples, 0};
    for (int j = 0; j < samples; ++j)
      if (!trial(smp)) ++cls.violations;
    out.push_back(cls);
  };

  auto binary = [&](const std::string& op, std::uint64_t tag, auto fn_exact, auto fn_encl,
                    bool nonzero_divisor) {
    run_class(op, tag, [=](Sampler& smp) {
      const ExactRational x = smp.value(false);
      const ExactRational y = smp.value(nonzero_divisor);
      const Enclosure a = smp.around(x, false);
      const Enclosure b = smp.around(y, nonzero_divisor);
      return fn_encl(a, b).contains(fn_exact(x, y));
    });
  };
  binary("add", 1, [](auto& x, auto& y) { return ExactRational(x + y); },
         [](auto& a, auto& b) { return a + b; }, false);
  binary("sub", 2, [](auto& x, auto& y) { return ExactRational(x - y); },
         [](auto& a, auto& b) { return a - b; }, false);
  binary("mul", 3, [](auto& x, auto& y) { return ExactRational(x * y); },
         [](auto& a, auto& b) { return a * b; }, false);
  binary("div", 4, [](auto& x, auto& y) { return ExactRational(x / y); },
         [](auto& a, auto& b) { return a / b; }, true);

  run_class("pow", 5, [](Sampler& smp) {
    const ExactRational x = smp.value(false);
    const unsigned long e = smp.uniform(0, 9);
    return pow(smp.around(x, false), e).contains(pow(x, static_cast<std::int64_t>(e)));
  });
  run_class("abs", 6, [](Sampler& smp) {
    const ExactRational x = smp.value(false);
    return abs(smp.around(x, false)).contains(ExactRational(abs(x)));
  });

  auto transcendental = [&](const std::string& op, std::uint64_t tag, bool positive, auto encl,
                            auto mp) {
    run_class(op, tag, [=](Sampler& smp) {
      const ExactRational x = op == "exp" ? smp.moderate() : smp.value(positive);
      const Enclosure a = smp.around(x, positive);
      const Enclosure y = encl(a);
      const auto [lo, hi] = bracket(x, 4 * y.precision() + 64, mp);
      return y.contains(lo) && y.contains(hi);
    });
  };
  transcendental("log", 7, true, [](const Enclosure& a) { return log(a); },
                 [](mpfr_ptr r, mpfr_srcptr x, mpfr_rnd_t d) { mpfr_log(r, x, d); });
  transcendental("exp", 8, false, [](const Enclosure& a) { return exp(a); },
                 [](mpfr_ptr r, mpfr_srcptr x, mpfr_rnd_t d) { mpfr_exp(r, x, d); });
  transcendental("sqrt", 9, true, [](const Enclosure& a) { return sqrt(a); },
                 [](mpfr_ptr r, mpfr_srcptr x, mpfr_rnd_t d) { mpfr_sqrt(r, x, d); });
  transcendental("root", 10, false, [](const Enclosure& a) { return root(a, 5); },
                 [](mpfr_ptr r, mpfr_srcptr x, mpfr_rnd_t d) { mpfr_rootn_ui(r, x, 5, d); });
  return out;
}

Report run(const RunConfig& config) {
  config.validate();
  Report report;
  report.version = kVersion;
  report.config = config_json(config);
  const Mode m = config.mode;
  if (m == Mode::verify_exact || m == Mode::all) verify_exact(config, report);
  if (m == Mode::decay_table || m == Mode::all) decay_table(config, report);
  if (m == Mode::asymptotics || m == Mode::all) asymptotics(config, report);
  if (m == Mode::zeta_table || m == Mode::all) zeta_table(config, report);
  if (m == Mode::selftest || m == Mode::all) selftest(config, report);
  return report;
}

std::string render(const Report& r, Format f) {
  switch (f) {
    case Format::json:
      return render_json(r);
    case Format::csv:
      return render_csv(r);
    default:
      return render_human(r);
  }
}

}  // namespace oddzeta
