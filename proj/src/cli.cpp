#include "polyseq/cli.hpp"

#include "polyseq/anchors.hpp"
#include "polyseq/enumerate.hpp"
#include "polyseq/eulerian.hpp"
#include "polyseq/polybernoulli.hpp"
#include "polyseq/polyeuler.hpp"
#include "polyseq/stephan.hpp"
#include "polyseq/stirling.hpp"
#include "polyseq/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <ostream>
#include <sstream>

namespace polyseq {

namespace {

using Json = nlohmann::ordered_json;

constexpr unsigned kDecimalDigits = 12;

struct Range {
  int lo = 0;
  int hi = 0;
};

Range parse_range(const std::string& s) {
  auto pos = s.find("..");
  try {
    if (pos == std::string::npos) {
      int v = std::stoi(s);
      return {v, v};
    }
    Range r{std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 2))};
    if (r.lo > r.hi) throw std::invalid_argument("empty range");
    return r;
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid range: '" + s + "' (expected A or A..B)");
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    q += ch;
    if (ch == '"') q += '"';
  }
  return q + "\"";
}

// Column order is stable: suite,check,anchor,inputs,expected,actual,status.
void emit_csv(const Report& records, std::ostream& out) {
  out << "suite,check,anchor,inputs,expected,actual,status\n";
  for (const auto& r : records) {
    out << csv_escape(r.suite) << ',' << csv_escape(r.check) << ',' << csv_escape(r.anchor)
        << ',' << csv_escape(r.inputs) << ',' << csv_escape(r.expected) << ','
        << csv_escape(r.actual) << ',' << (r.pass ? "pass" : "fail") << '\n';
  }
}

void emit_json(const Report& records, const std::string& family, const Json& params,
               std::ostream& out) {
  Json doc;
  doc["family"] = family;
  doc["params"] = params;
  Json arr = Json::array();
  for (const auto& r : records) {
    arr.push_back({{"suite", r.suite},
                   {"check", r.check},
                   {"anchor", r.anchor},
                   {"inputs", r.inputs},
                   {"expected", r.expected},
                   {"actual", r.actual},
                   {"status", r.pass ? "pass" : "fail"}});
  }
  doc["records"] = arr;
  out << doc.dump(2) << '\n';
}

void emit_text(const Report& records, std::ostream& out) {
  for (const auto& r : records) {
    out << (r.pass ? "[PASS] " : "[FAIL] ") << r.suite << '/' << r.check << " | " << r.anchor
        << " (" << r.inputs << ")";
    if (!r.pass) out << "\n       expected " << r.expected << ", got " << r.actual;
    out << '\n';
  }
}

void emit(const Report& records, const std::string& family, const Json& params,
          const std::string& format, std::ostream& out) {
  if (format == "json")
    emit_json(records, family, params, out);
  else if (format == "csv")
    emit_csv(records, out);
  else
    emit_text(records, out);
}

ReportRecord value_record(const std::string& family, const char* anchor,
                          const std::string& inputs, const std::string& value) {
  return {family, "value", anchor, inputs, value, value, true};
}

int run_table(const std::string& family, const Range& nr, const Range& kr,
              const std::string& format, std::ostream& out, std::ostream& err) {
  Report records;
  if (family == "stephan") {
    for (int n = nr.lo; n <= nr.hi; ++n) {
      std::ostringstream v;
      v << rat_str(a_seq(n)) << ',' << b_seq(n);
      records.push_back(value_record(family, anchors::kStephan, "n=" + std::to_string(n),
                                     v.str()));
    }
  } else {
    std::function<std::string(int, int)> cell;
    const char* anchor = anchors::kTable1;
    if (family == "poly-bernoulli") {
      anchor = anchors::kClosedForm;
      cell = [](int n, int k) { return pb_number(n, k).str(); };
    } else if (family == "poly-euler-1") {
      cell = [](int n, int k) { return pe_incexc(EulerKind::first, n, k).str(); };
    } else if (family == "poly-euler-2") {
      cell = [](int n, int k) { return pe_incexc(EulerKind::second, n, k).str(); };
    } else if (family == "eulerian") {
      anchor = anchors::kEulerianDef;
      cell = [](int n, int k) { return eulerian_number(n, k).str(); };
    } else {
      err << "unknown table family: " << family << '\n';
      return 2;
    }
    for (int n = nr.lo; n <= nr.hi; ++n)
      for (int k = kr.lo; k <= kr.hi; ++k)
        records.push_back(value_record(
            family, anchor, "n=" + std::to_string(n) + ",k=" + std::to_string(k), cell(n, k)));
  }

  if (format == "text") {
    if (family == "stephan") {
      out << "n\ta_n\tb_n\n";
      for (const auto& r : records) {
        std::string v = r.actual;
        auto comma = v.find(',');
        out << r.inputs.substr(2) << '\t' << v.substr(0, comma) << '\t' << v.substr(comma + 1)
            << '\n';
      }
    } else {
      out << "n\\k";
      for (int k = kr.lo; k <= kr.hi; ++k) out << '\t' << k;
      out << '\n';
      size_t idx = 0;
      for (int n = nr.lo; n <= nr.hi; ++n) {
        out << n;
        for (int k = kr.lo; k <= kr.hi; ++k) out << '\t' << records[idx++].actual;
        out << '\n';
      }
    }
    return 0;
  }
  Json params{{"n", std::to_string(nr.lo) + ".." + std::to_string(nr.hi)},
              {"k", std::to_string(kr.lo) + ".." + std::to_string(kr.hi)}};
  emit(records, family, params, format, out);
  return 0;
}

int run_poly(const std::string& family, const Range& nr, const Range& kr, const Rat& r,
             const Rat* eval_at, const std::string& format, std::ostream& out,
             std::ostream& err) {
  Report records;
  auto render = [&](const Poly& p) {
    if (!eval_at) return p.str();
    return p.str() + "; at x=" + rat_str(*eval_at) + ": " + rat_str(p.eval(*eval_at));
  };
  for (int n = nr.lo; n <= nr.hi; ++n) {
    if (family == "poly-bernoulli") {
      for (int k = kr.lo; k <= kr.hi; ++k)
        records.push_back(value_record(family, anchors::kClosedForm,
                                       "n=" + std::to_string(n) + ",k=" + std::to_string(k),
                                       render(pb_poly_closed(n, k))));
    } else if (family == "eulerian") {
      records.push_back(value_record(family, anchors::kEulerianRec,
                                     "n=" + std::to_string(n) + ",r=" + rat_str(r),
                                     render(eulerian_rec(n, r))));
    } else if (family == "stirling2") {
      for (int m = kr.lo; m <= kr.hi; ++m)
        records.push_back(value_record(family, anchors::kStirlingRecursion,
                                       "n=" + std::to_string(n) + ",m=" + std::to_string(m),
                                       render(stirling2_weighted(n, m))));
    } else if (family == "stirling1") {
      for (int m = kr.lo; m <= kr.hi; ++m)
        records.push_back(value_record(family, anchors::kStirlingFirstDef,
                                       "n=" + std::to_string(n) + ",m=" + std::to_string(m),
                                       render(stirling1_weighted(n, m))));
    } else if (family == "pq") {
      PQPair pr = pq(n);
      records.push_back(value_record(family, anchors::kLehmerPQ, "k=" + std::to_string(n),
                                     "p=" + render(pr.p) + "; q=" + render(pr.q)));
    } else {
      err << "unknown poly family: " << family << '\n';
      return 2;
    }
  }
  if (format == "text") {
    for (const auto& rec : records) out << rec.inputs << ": " << rec.actual << '\n';
    return 0;
  }
  Json params{{"n", std::to_string(nr.lo) + ".." + std::to_string(nr.hi)}, {"r", rat_str(r)}};
  emit(records, family, params, format, out);
  return 0;
}

int run_verify(const std::string& suite, const VerifyBounds& bounds, const std::string& format,
               std::ostream& out, std::ostream& err) {
  if (!is_suite(suite)) {
    err << "unknown suite: " << suite << " (expected one of";
    for (const auto& s : suite_names()) err << ' ' << s;
    err << ")\n";
    return 2;
  }
  Report report = run_suite(suite, bounds);
  Json params{{"suite", suite},
              {"max_n", bounds.max_n},
              {"max_k", bounds.max_k},
              {"stephan_n", bounds.stephan_n},
              {"series_order", bounds.series_order},
              {"enum_bound", bounds.enum_bound}};
  emit(report, suite, params, format, out);
  const bool ok = all_passed(report);
  if (format == "text")
    out << (ok ? "all checks passed" : "FAILURES present") << " (" << report.size()
        << " checks)\n";
  return ok ? 0 : 1;
}

int run_enumerate(const std::string& family, int n, int k, int r, const std::string& parity,
                  int enum_bound, const std::string& format, std::ostream& out,
                  std::ostream& err) {
  Report records;
  auto add = [&](const std::string& line) {
    records.push_back(value_record(family, anchors::kOracle, "", line));
  };
  try {
    if (family == "callan") {
      std::vector<int> reds(static_cast<size_t>(n));
      std::iota(reds.begin(), reds.end(), 1);
      if (n + k > enum_bound) throw std::domain_error("enumeration bound");
      for_each_callan(reds, k, [&](const CallanSequence& cs) { add(render_callan(cs)); });
    } else if (family == "extended") {
      for_each_extended_callan(n, k, r, [&](const CallanSequence& cs) { add(render_callan(cs)); },
                               enum_bound);
    } else if (family == "abundant") {
      for_each_abundant_callan(n, k, [&](const CallanSequence& cs) { add(render_callan(cs)); },
                               enum_bound);
    } else if (family == "typec") {
      std::vector<int> reds(static_cast<size_t>(n));
      std::iota(reds.begin(), reds.end(), 1);
      if (n + k > enum_bound) throw std::domain_error("enumeration bound");
      for_each_callan(reds, k, [&](const CallanSequence& cs) {
        if (cs.extra_red.size() == 1) add(render_callan(cs));
      });
    } else if (family == "esequence") {
      for_each_esequence(n, k, parity != "even",
                         [&](const ESequence& es) { add(render_esequence(es)); },
                         std::min(enum_bound, kESequenceBound));
    } else if (family == "runperm") {
      for_each_runperm(n, r, [&](const std::vector<int>& w) { add(render_word(w)); },
                       std::min(enum_bound, kRunPermBound));
    } else {
      err << "unknown enumerate family: " << family << '\n';
      return 2;
    }
  } catch (const std::domain_error& e) {
    err << e.what() << '\n';
    return 2;
  }
  if (format == "text") {
    for (const auto& rec : records) out << rec.actual << '\n';
    err << "total: " << records.size() << '\n';
    return 0;
  }
  Json params{{"n", n}, {"k", k}, {"r", r}, {"parity", parity}};
  emit(records, family, params, format, out);
  return 0;
}

int run_zeta(const Range& kr, const std::string& format, std::ostream& out) {
  Report records;
  const Rat tol = rat_eps(10);
  bool all_ok = true;
  for (int k = kr.lo; k <= kr.hi; ++k) {
    PiSqrt3Value v = zeta_cb_neg(k);
    Rat partial = zeta_cb_partial(k, 200);
    Rat residual = rat_abs(v.approx() - partial);
    bool ok = residual < tol;
    all_ok &= ok;
    ReportRecord rec{"zeta",
                     "zeta_CB(-" + std::to_string(k) + ")",
                     anchors::kZetaCB,
                     "k=" + std::to_string(k) + ",terms=200",
                     rat_decimal(partial, kDecimalDigits),
                     v.str() + " ≈ " + rat_decimal(v.approx(), kDecimalDigits) +
                         " (residual " + rat_decimal(residual, 15) + ")",
                     ok};
    records.push_back(rec);
  }
  if (format == "text") {
    for (const auto& rec : records)
      out << rec.check << " = " << rec.actual << '\n';
    return all_ok ? 0 : 1;
  }
  Json params{{"k", std::to_string(kr.lo) + ".." + std::to_string(kr.hi)}};
  emit(records, "zeta", params, format, out);
  return all_ok ? 0 : 1;
}

int run_stephan(int max_n, const std::string& format, std::ostream& out) {
  Report records;
  bool ok = true;
  for (int n = 0; n <= max_n; ++n) {
    Rat a = a_seq(n);
    Int b = b_seq(n);
    bool eq = a == Rat(b);
    ok &= eq;
    records.push_back({"stephan", "a_n = b_n", anchors::kStephan, "n=" + std::to_string(n),
                       b.str(), rat_str(a), eq});
  }
  const int rec_n = std::min(max_n, 25);
  bool recursions = true;
  for (int n = 0; n < rec_n; ++n) recursions &= a_recursion_check(n) && b_recursion_check(n);
  records.push_back({"stephan", "shared recursion", anchors::kARecursion,
                     "n<" + std::to_string(rec_n), "identity holds",
                     recursions ? "identity holds" : "violated", recursions});
  bool ode = ab_ode_check(rec_n);
  records.push_back({"stephan", "A(t) differential equation", anchors::kARecursion,
                     "truncation n<=" + std::to_string(rec_n), "identity holds",
                     ode ? "identity holds" : "violated", ode});
  ok &= recursions && ode;
  if (format == "text") {
    out << "n\ta_n\tb_n\n";
    for (const auto& rec : records)
      if (rec.check == "a_n = b_n")
        out << rec.inputs.substr(2) << '\t' << rec.actual << '\t' << rec.expected << '\n';
    out << (ok ? "Stephan check passed" : "Stephan check FAILED") << " up to n = " << max_n
        << '\n';
    return ok ? 0 : 1;
  }
  Json params{{"max_n", max_n}};
  emit(records, "stephan", params, format, out);
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"polyseq: exact verification toolkit for poly-Bernoulli, poly-Euler,"
               " r-Eulerian and central-binomial identities"};
  app.require_subcommand(1);

  std::string family, n_range = "0..4", k_range = "0..3", r_str = "0", x_str = "0";
  std::string format = "text", suite = "all", parity = "odd";
  int series_order = 14, enum_bound = kEnumBound, max_n = -1, max_k = -1;

  auto add_common = [&](CLI::App* cmd, bool with_family) {
    if (with_family) cmd->add_option("--family", family, "value family");
    cmd->add_option("--n", n_range, "index range A..B (or single A)");
    cmd->add_option("--k", k_range, "second index range A..B");
    cmd->add_option("--r", r_str, "rational parameter p/q (integer where required)");
    cmd->add_option("--x", x_str, "rational parameter p/q");
    cmd->add_option("--format", format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--series-order", series_order, "series truncation order");
    cmd->add_option("--enum-bound", enum_bound, "combined-size cap for generators");
    cmd->add_option("--max-n", max_n, "sweep bound for n");
    cmd->add_option("--max-k", max_k, "sweep bound for k");
  };

  auto* table = app.add_subcommand("table", "print a value table");
  add_common(table, true);
  auto* poly = app.add_subcommand("poly", "print polynomials");
  add_common(poly, true);
  auto* verify = app.add_subcommand("verify", "run identity suites");
  add_common(verify, false);
  verify->add_option("--suite", suite, "stirling|polybernoulli|polyeuler|eulerian|stephan|oracles|all");
  auto* enumerate = app.add_subcommand("enumerate", "stream combinatorial objects");
  add_common(enumerate, true);
  enumerate->add_option("--parity", parity, "odd|even (E-sequences)")
      ->check(CLI::IsMember({"odd", "even"}));
  auto* zeta = app.add_subcommand("zeta", "central binomial series values");
  add_common(zeta, false);
  auto* stephan = app.add_subcommand("stephan", "a_n = b_n sweep");
  add_common(stephan, false);

  std::vector<const char*> argv;
  argv.push_back("polyseq");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Range nr = parse_range(n_range);
    Range kr = parse_range(k_range);
    Rat r = parse_rat(r_str);

    if (table->parsed()) {
      if (family.empty()) family = "poly-bernoulli";
      return run_table(family, nr, kr, format, out, err);
    }
    if (poly->parsed()) {
      if (family.empty()) family = "poly-bernoulli";
      Rat x;
      bool has_x = poly->count("--x") > 0;
      if (has_x) x = parse_rat(x_str);
      return run_poly(family, nr, kr, r, has_x ? &x : nullptr, format, out, err);
    }
    if (verify->parsed()) {
      VerifyBounds bounds;
      bounds.series_order = series_order;
      bounds.enum_bound = enum_bound;
      if (max_n >= 0) {
        bounds.max_n = max_n;
        bounds.stephan_n = max_n;
        bounds.oracle_nk = std::min(max_n, bounds.oracle_nk);
      }
      if (max_k >= 0) bounds.max_k = max_k;
      return run_verify(suite, bounds, format, out, err);
    }
    if (enumerate->parsed()) {
      if (family.empty()) family = "callan";
      if (denominator(r) != 1) {
        err << "--r must be an integer for enumeration families\n";
        return 2;
      }
      return run_enumerate(family, nr.lo, kr.lo, static_cast<int>(numerator(r)), parity,
                           enum_bound, format, out, err);
    }
    if (zeta->parsed()) return run_zeta(kr, format, out);
    if (stephan->parsed()) return run_stephan(max_n >= 0 ? max_n : 30, format, out);
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace polyseq
