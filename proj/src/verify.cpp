#include "polyseq/verify.hpp"

#include "polyseq/anchors.hpp"
#include "polyseq/enumerate.hpp"
#include "polyseq/eulerian.hpp"
#include "polyseq/polybernoulli.hpp"
#include "polyseq/polyeuler.hpp"
#include "polyseq/stephan.hpp"
#include "polyseq/stirling.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace polyseq {

namespace {

class Checker {
 public:
  Checker(Report& out, std::string suite) : out_(out), suite_(std::move(suite)) {}

  void expect(bool ok, const std::string& check, const char* anchor,
              const std::string& inputs, const std::string& expected = "identity holds",
              const std::string& actual = "") {
    out_.push_back({suite_, check, anchor, inputs, expected,
                    actual.empty() ? (ok ? expected : "violated") : actual, ok});
  }

  template <typename T>
  void equal(const T& got, const T& want, const std::string& check, const char* anchor,
             const std::string& inputs) {
    std::ostringstream w, g;
    w << want;
    g << got;
    out_.push_back({suite_, check, anchor, inputs, w.str(), g.str(), got == want});
  }

 private:
  Report& out_;
  std::string suite_;
};

std::string nk(int n, int k) {
  std::ostringstream os;
  os << "n=" << n << ",k=" << k;
  return os.str();
}

std::string bound_str(const char* name, int v) {
  std::ostringstream os;
  os << name << "<=" << v;
  return os.str();
}

void suite_stirling(Report& out, const VerifyBounds& b) {
  Checker c(out, "stirling");
  const int N = std::max(b.max_n, 10);
  const Poly x = Poly::x();

  bool rec2 = true, rec1 = true, shift = true;
  for (int n = 0; n < N && rec2; ++n)
    for (int m = 0; m <= n + 1; ++m)
      rec2 &= stirling2_weighted(n + 1, m) ==
              (x + Poly(Rat(m))) * stirling2_weighted(n, m) + stirling2_weighted(n, m - 1);
  c.expect(rec2, "weighted second-kind recursion", anchors::kStirlingRecursion,
           bound_str("n", N));

  for (int n = 0; n < N && rec1; ++n)
    for (int m = 0; m <= n + 1; ++m)
      rec1 &= stirling1_weighted(n + 1, m) ==
              stirling1_weighted(n, m - 1) + (x + Poly(Rat(n))) * stirling1_weighted(n, m);
  c.expect(rec1, "weighted first-kind recursion", anchors::kPochhammerExpansion,
           bound_str("n", N));

  for (int n = 0; n <= N && shift; ++n)
    for (int m = 0; m <= n; ++m)
      shift &= stirling2_weighted(n, m).shifted_arg(Rat(1)) ==
               Rat(m + 1) * stirling2_weighted(n, m + 1) + stirling2_weighted(n, m);
  c.expect(shift, "shift identity [n m]_{x+1}", anchors::kStirlingRecursion, bound_str("n", N));

  bool poch_exp = true;
  for (int n = 0; n <= N && poch_exp; ++n) {
    for (int i = 0; i <= n + 1; ++i) {
      Rat y(2 * i + 1, 3);
      Poly lhs = pochhammer(x + Poly(y), static_cast<unsigned>(n));
      Poly rhs;
      for (int m = 0; m <= n; ++m)
        rhs += Poly::monomial(static_cast<unsigned>(m), stirling1_weighted(n, m).eval(y));
      poch_exp &= lhs == rhs;
    }
  }
  c.expect(poch_exp, "Pochhammer expansion over stf{n}{m}_y", anchors::kPochhammerExpansion,
           bound_str("n", N) + ", n+2 rational y each");

  bool at01 = true;
  for (int n = 0; n <= N; ++n)
    for (int m = 0; m <= n; ++m) {
      at01 &= stirling2_weighted(n, m).eval(Rat(0)) == Rat(stirling2(n, m));
      at01 &= stirling2_weighted(n, m).eval(Rat(1)) == Rat(stirling2(n + 1, m + 1));
    }
  c.expect(at01, "[n m]_0 and [n m]_1 specializations", anchors::kStirlingRecursion,
           bound_str("n", N));

  bool stf1 = true;
  for (int n = 0; n <= 8; ++n)
    for (int m = 0; m <= n; ++m)
      stf1 &= stirling1_weighted(n, m).eval(Rat(1)) == Rat(stirling1_unsigned(n + 1, m + 1));
  c.expect(stf1, "stf{n}{m}_1 = c(n+1, m+1)", anchors::kStirlingFirstDef, bound_str("n", 8));

  bool egf = true;
  for (int r = 0; r <= 3 && egf; ++r) {
    const int ord = 12;
    TruncSeries ert = ser_exp(ser_scale(Rat(r), TruncSeries::t(ord)));
    TruncSeries em1 = ser_sub(ser_exp(TruncSeries::t(ord)), TruncSeries::constant(Rat(1), ord));
    TruncSeries pw = TruncSeries::constant(Rat(1), ord);
    for (int m = 0; m <= 6; ++m) {
      TruncSeries gen = ser_scale(Rat(Int(1), factorial(static_cast<unsigned>(m))),
                                  ser_mul(ert, pw));
      for (int n = m; n <= 8; ++n)
        egf &= egf_coeff(gen, static_cast<unsigned>(n)) == Rat(rstirling2(n, m, r));
      pw = ser_mul(pw, em1);
    }
  }
  c.expect(egf, "r-Stirling EGF e^{rt}(e^t-1)^m/m!", anchors::kExtendedCallan,
           "n<=8, m<=6, r<=3");

  bool bp = true;
  for (int j = 0; j <= 20 && bp; ++j)
    for (int i = 0; i < 4; ++i) {
      Rat a(3 * i + 2, 7);
      bp &= binom(a, static_cast<unsigned>(j)) * Rat(factorial(static_cast<unsigned>(j))) ==
            pochhammer(a - j + 1, static_cast<unsigned>(j));
    }
  c.expect(bp, "binom(a,j) j! = (a-j+1)_j", anchors::kPochhammerExpansion,
           "j<=20, sampled rational a");

  bool padd = true;
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= 6; ++n)
      padd &= pochhammer(x, static_cast<unsigned>(m + n)) ==
              pochhammer(x, static_cast<unsigned>(m)) *
                  pochhammer(x + Poly(Rat(m)), static_cast<unsigned>(n));
  c.expect(padd, "(p)_{m+n} = (p)_m (p+m)_n", anchors::kPochhammerExpansion, "m,n<=6");
}

void suite_polybernoulli(Report& out, const VerifyBounds& b) {
  Checker c(out, "polybernoulli");
  const int N = std::max(b.max_n, 10), K = std::max(b.max_k, 10);

  bool cross = true;
  for (int n = 0; n <= N; ++n)
    for (int k = 0; k <= K; ++k) {
      Poly closed = pb_poly_closed(n, k);
      cross &= closed == pb_poly_sieve(n, k) && closed == pb_poly_binomial(n, k);
    }
  c.expect(cross, "closed = sieve = binomial expansion", anchors::kClosedForm,
           bound_str("n,k", std::max(N, K)));

  bool shape = true;
  for (int n = 0; n <= N && shape; ++n)
    for (int k = 0; k <= K; ++k) {
      Poly p = pb_poly_closed(n, k);
      shape &= p.degree() == n && p.coeff(static_cast<unsigned>(n)) == 1;
      for (int i = 0; i <= n; ++i) {
        const Rat& ci = p.coeffs()[static_cast<size_t>(i)];
        shape &= denominator(ci) == 1 && ci >= 0;
      }
    }
  c.expect(shape, "degree n, monic, nonnegative integer coefficients", anchors::kAbundantCallan,
           bound_str("n,k", std::max(N, K)));

  bool egf = true;
  for (int n = 0; n <= b.max_n && egf; ++n)
    for (int k = 0; k <= b.max_k; ++k) {
      for (int i = 0; i < 20; ++i) {
        Rat xv(i - 7, 4);  // 20 rational points crossing zero
        if (pb_egf(n, -k, xv, b.series_order) != pb_poly_closed(n, k).eval(xv)) {
          egf = false;
          break;
        }
      }
    }
  c.expect(egf, "EGF coefficients match polynomials", anchors::kPolyBernoulliEgf,
           nk(b.max_n, b.max_k) + ", 20 rational x");

  bool bern = true;
  {
    const int ord = 12;
    // classical kernel t/(e^t - 1), a route independent of the polylog one
    TruncSeries t = TruncSeries::t(ord);
    TruncSeries em1 = ser_sub(ser_exp(t), TruncSeries::constant(Rat(1), ord));
    TruncSeries kernel = ser_div(t, em1);
    for (int n = 0; n <= 8 && bern; ++n)
      for (int i = 0; i < 4; ++i) {
        Rat xv(2 * i + 1, 5);
        TruncSeries gen = ser_mul(kernel, ser_exp(ser_scale(xv, TruncSeries::t(ord - 1))));
        Rat classical = egf_coeff(gen, static_cast<unsigned>(n));
        Rat ours = pb_egf(n, 1, -xv, ord);
        if (n % 2 != 0) ours = -ours;
        bern &= ours == classical;
      }
  }
  c.expect(bern, "(-1)^n B_n^{(1)}(-x) is the classical Bernoulli polynomial",
           anchors::kPolyBernoulliEgf, "n<=8, sampled rational x");

  bool sym = true;
  for (int n = 0; n <= N; ++n)
    for (int k = 0; k <= N; ++k) sym &= pb_number(n, k) == pb_number(k, n);
  c.expect(sym, "B_n^{(-k)}(0) = B_k^{(-n)}(0)", anchors::kSymmetricC, bound_str("n,k", N));

  bool csym = true;
  for (int n = 0; n <= 5 && csym; ++n)
    for (int k = 0; k <= 5; ++k)
      for (int r = 0; r <= 5; ++r)
        for (int s = 0; s <= 5; ++s) {
          Int m1 = c_sym_binomial(n, k, r, s);
          csym &= m1 == c_sym_stirling(n, k, r, s) && m1 == c_sym_stirling(k, n, s, r);
        }
  c.expect(csym, "C-function two routes and (n,r)<->(k,s) symmetry", anchors::kSymmetricC,
           "n,k,r,s<=5");

  bool reduce = true;
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= 6; ++k) reduce &= c_sym_binomial(n, k, 0, 0) == pb_number(n, k);
  c.expect(reduce, "C-function at (0,0) reduces to B_n^{(-k)}(0)", anchors::kSymmetricC,
           "n,k<=6");

  bool hyper = true;
  for (int n = 0; n <= b.max_n && hyper; ++n)
    for (int k = 0; k <= std::min(b.max_k, 5); ++k)
      for (int i = 0; i <= n + 1 && hyper; ++i)
        for (int j = 0; j <= n + 1; ++j) {
          Rat xv = Rat(i) + Rat(1, 2), yv = Rat(j) + Rat(1, 3);
          if (!ber_hypersum_check(n, k, xv, yv)) {
            hyper = false;
            break;
          }
        }
  c.expect(hyper, "Stirling/poly-Bernoulli identity on rational grids", anchors::kBerHypersum,
           nk(b.max_n, std::min(b.max_k, 5)) + ", (n+2)^2 grid");

  bool cor1 = true;
  for (int n = 1; n <= b.max_n && cor1; ++n)
    for (int k = 0; k <= std::min(b.max_k, 5); ++k)
      for (int m = 0; m <= 4; ++m)
        for (int r = 0; r <= 4 - m; ++r) {
          if (m + r < 1) continue;
          Rat lhs = ber_hypersum_lhs(n, k, Rat(m), Rat(r));
          Rat want = Rat(factorial(static_cast<unsigned>(n))) * Rat(hypersum(k, m + r - 1, n + 1));
          if (lhs != want || lhs != ber_hypersum_rhs(n, k, Rat(m), Rat(r))) {
            cor1 = false;
            break;
          }
        }
  c.expect(cor1, "hypersum corollary n! S_k^{(m+r-1)}(n+1)", anchors::kHypersumCorollary,
           nk(b.max_n, std::min(b.max_k, 5)) + ", m+r<=4");

  bool cor2 = true;
  for (int n = 0; n <= b.max_n && cor2; ++n)
    for (int k = 0; k <= std::min(b.max_k, 5); ++k) {
      Rat lhs = 0;
      for (int j = 0; j <= n; ++j)
        lhs += Rat(stirling1_unsigned(n + 1, j + 1)) * Rat(pb_number(j, k));
      cor2 &= lhs == Rat(factorial(static_cast<unsigned>(n))) * Rat(hypersum(k, 0, n + 1));
    }
  c.expect(cor2, "unsigned first-kind corollary n! S_k(n+1)", anchors::kHypersumCorollary,
           nk(b.max_n, std::min(b.max_k, 5)));
}

void suite_polyeuler(Report& out, const VerifyBounds& b) {
  Checker c(out, "polyeuler");

  static const Int kTable1First[5][4] = {{0, 0, 0, 0},
                                         {1, 1, 1, 1},
                                         {4, 12, 28, 60},
                                         {13, 109, 493, 1837},
                                         {40, 888, 7192, 42840}};
  static const Int kTable1Second[5][4] = {{1, 1, 1, 1},
                                          {2, 6, 14, 30},
                                          {5, 37, 165, 613},
                                          {14, 234, 1826, 10770},
                                          {41, 1513, 19689, 175465}};
  bool table = true;
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= 3; ++k) {
      const Int& t1 = kTable1First[n][k];
      const Int& t2 = kTable1Second[n][k];
      table &= pe_incexc(EulerKind::first, n, k) == t1 &&
               pe_closed_first(n, k) == t1 &&
               pe_ohno_sasaki(n, k) == t1 &&
               pe_via_typeC(EulerKind::first, n, k) == t1 &&
               pe_egf(EulerKind::first, n, k) == t1;
      table &= pe_incexc(EulerKind::second, n, k) == t2 &&
               pe_via_typeC(EulerKind::second, n, k) == t2 &&
               pe_egf(EulerKind::second, n, k) == t2;
    }
  c.expect(table, "Table 1 reproduced by every route", anchors::kTable1, "n<=4, k<=3");

  bool agree = true;
  for (int n = 0; n <= b.max_n && agree; ++n)
    for (int k = 0; k <= b.max_k; ++k) {
      Int first = pe_incexc(EulerKind::first, n, k);
      agree &= first == pe_closed_first(n, k) && first == pe_ohno_sasaki(n, k) &&
               first == pe_via_typeC(EulerKind::first, n, k);
      agree &= pe_incexc(EulerKind::second, n, k) == pe_via_typeC(EulerKind::second, n, k);
    }
  c.expect(agree, "all first-kind routes agree; second-kind routes agree",
           anchors::kPolyEulerClosed, nk(b.max_n, b.max_k));

  bool egf = true;
  for (int n = 0; n <= b.max_n && egf; ++n)
    for (int k = 0; k <= std::min(b.max_k, 3); ++k) {
      egf &= pe_egf(EulerKind::first, n, k, b.series_order) == pe_incexc(EulerKind::first, n, k);
      egf &= pe_egf(EulerKind::second, n, k, b.series_order) ==
             pe_incexc(EulerKind::second, n, k);
    }
  c.expect(egf, "EGF route agrees", anchors::kPolyEulerIncExc, nk(b.max_n, std::min(b.max_k, 3)));

  bool diff = true, conv = true;
  for (int n = 0; n <= b.max_n; ++n)
    for (int k = 0; k <= b.max_k; ++k) {
      diff &= pe_difference_check(n, k);
      conv &= pe_convolution_check(n, k);
    }
  c.expect(diff, "difference theorem", anchors::kDifference, nk(b.max_n, b.max_k));
  c.expect(conv, "4^n B_n^{(-k)} convolution", anchors::kPbPeConvolution, nk(b.max_n, b.max_k));

  bool k1 = true;
  for (int n = 0; n <= 10; ++n) k1 &= pe_k1_check(n);
  c.expect(k1, "k = 1 corollary, both kinds", anchors::kPeK1, bound_str("n", 10));

  bool e0 = true;
  for (int n = 0; n <= 12; ++n) {
    e0 &= pe_e0(true, n) == (int_pow(Int(3), static_cast<unsigned>(n)) - 1) / 2;
    e0 &= pe_e0(false, n) == (int_pow(Int(3), static_cast<unsigned>(n)) + 1) / 2;
  }
  c.expect(e0, "(3^n -+ 1)/2 closed forms", anchors::kE0SpecialCase, bound_str("n", 12));

  bool n2 = true;
  for (int k = 0; k <= 6; ++k)
    n2 &= pe_incexc(EulerKind::first, 2, k) ==
          4 * (int_pow(Int(2), static_cast<unsigned>(k) + 1) - 1);
  c.expect(n2, "n = 2 case 4(2^{k+1}-1)", anchors::kN2SpecialCase, bound_str("k", 6));
}

void suite_eulerian(Report& out, const VerifyBounds& b) {
  Checker c(out, "eulerian");
  const std::vector<Rat> rs = {Rat(0), Rat(1),     Rat(2),      Rat(3),
                               Rat(1, 2), Rat(3, 2), Rat(-1, 2)};
  bool cross = true;
  for (const Rat& r : rs)
    for (int n = 0; n <= std::max(b.max_n, 10); ++n)
      cross &= eulerian_explicit(n, r) == eulerian_rec(n, r);
  c.expect(cross, "explicit formula = recursion", anchors::kEulerianExplicit,
           "n<=10, r in {0,1,2,3,1/2,3/2,-1/2}");

  bool egf = true;
  const std::vector<Rat> xs = {Rat(1, 2), Rat(1, 3), Rat(2)};
  for (int r = 0; r <= 3 && egf; ++r)
    for (const Rat& x0 : xs) egf &= eulerian_egf_check(Rat(r), x0, 10, b.series_order);
  for (const Rat& x0 : xs) egf &= eulerian_egf_check(Rat(1, 2), x0, 10, b.series_order);
  c.expect(egf, "EGF matches recursion values", anchors::kEulerianEgf,
           "r<=3 and r=1/2, x0 in {1/2,1/3,2}, n<=10");

  bool rowsum = true;
  for (int r = 0; r <= 3; ++r)
    for (int n = 0; n <= 8; ++n)
      rowsum &= eulerian_rec(n, Rat(r)).eval(Rat(1)) ==
                Rat(factorial(static_cast<unsigned>(n + r)), factorial(static_cast<unsigned>(r)));
  c.expect(rowsum, "row sums (n+r)!/r!", anchors::kEulerianDef, "n<=8, integer r<=3");

  c.equal(eulerian_number(3, 2), Int(4), "A(3,2)", anchors::kEulerianDef, "n=3,k=2");

  bool nonneg = true;
  for (int r = 0; r <= 3; ++r)
    for (int n = 0; n <= 8; ++n)
      for (const Rat& ci : eulerian_rec(n, Rat(r)).coeffs())
        nonneg &= ci >= 0 && denominator(ci) == 1;
  c.expect(nonneg, "nonnegative integer coefficients for integer r", anchors::kEulerianDef,
           "n<=8, r<=3");

  bool oracle = true;
  for (int r = 0; r <= 4; ++r)
    for (int n = 0; n + r <= 8; ++n) oracle &= enum_runperms(n, r) == eulerian_rec(n, Rat(r));
  c.expect(oracle, "run-permutation enumeration matches", anchors::kOracle, "n+r<=8");
}

void suite_stephan(Report& out, const VerifyBounds& b) {
  Checker c(out, "stephan");
  const int N = b.stephan_n;

  c.expect(stephan_check(N), "a_n = b_n", anchors::kStephan, bound_str("n", N));

  bool integral = true;
  for (int n = 0; n <= N; ++n) integral &= denominator(a_seq(n)) == 1;
  c.expect(integral, "a_n integral despite the (2/3)^n factor", anchors::kStephan,
           bound_str("n", N));

  bool rec = true;
  for (int n = 0; n <= 25 && rec; ++n) rec &= a_recursion_check(n) && b_recursion_check(n);
  c.expect(rec, "shared recursion 3s_{n+1} = 2s_n + sum + 3", anchors::kARecursion,
           bound_str("n", 25));
  c.expect(ab_ode_check(25), "(4-e^t)A' - (2+e^t)A = 3e^t", anchors::kARecursion,
           "truncation n<=25");

  bool zeta = true;
  const Rat tol = rat_eps(10);
  for (int k = 0; k <= 8; ++k) {
    PiSqrt3Value v = zeta_cb_neg(k);
    zeta &= rat_abs(v.approx() - zeta_cb_partial(k, 200)) < tol;
  }
  c.expect(zeta, "zeta_CB(-k) vs exact partial sums, residual < 1e-10", anchors::kZetaCB,
           "k<=8, 200 terms");

  bool qe = true, pe = true, qcoeff = true;
  for (int n = 0; n <= 15; ++n) {
    qe &= q_eulerian_check(n);
    pe &= p_explicit_check(n);
    for (const Rat& ci : pq(n).q.coeffs()) qcoeff &= ci >= 0 && denominator(ci) == 1;
  }
  c.expect(qe, "q_n(x) = (2x)^n E_n^{1/2}(1/x)", anchors::kQExplicit, bound_str("n", 15));
  c.expect(pe, "p_n = 2^n E_n^0 + binomial q-convolution", anchors::kPExplicit,
           bound_str("n", 15));
  c.expect(qcoeff, "q_n has nonnegative integer coefficients", anchors::kQExplicit,
           bound_str("n", 15));

  bool lehmer = true;
  for (int k = -1; k <= 5; ++k) lehmer &= lehmer_series_check(k, b.series_order);
  c.expect(lehmer, "central-binomial series identity", anchors::kLehmerSeries,
           "k in -1..5, order " + std::to_string(b.series_order));

  bool trans = true;
  const std::vector<std::pair<Rat, Rat>> pairs = {{Rat(7, 2), Rat(5, 2)},
                                                  {Rat(9, 2), Rat(7, 2)},
                                                  {Rat(11, 3), Rat(7, 3)},
                                                  {Rat(13, 4), Rat(9, 4)},
                                                  {Rat(15, 2), Rat(11, 2)}};
  for (int j = 0; j <= 20; ++j)
    for (const auto& [xv, yv] : pairs) trans &= trans_check(j, xv, yv);
  c.expect(trans, "contiguous F_j relation", anchors::kTrans, "j<=20, 5 pole-free pairs");

  bool key = true;
  for (const Rat& xv : {Rat(-1, 3), Rat(-1, 2), Rat(-1)})
    key &= key_equality_check(xv, 200, tol);
  c.expect(key, "partial sums within tolerance plus proven tail bound", anchors::kKeyEquality,
           "x in {-1/3,-1/2,-1}, J=200, tol 1e-10");

  c.expect(bn_ogf_check(20, 10), "OGF coefficients equal b_n", anchors::kBnOgf, "N=20, J=10");
}

void suite_oracles(Report& out, const VerifyBounds& b) {
  Checker c(out, "oracles");
  const int NK = b.oracle_nk;

  bool callan = true, ext = true, abundant = true, typec = true;
  for (int n = 0; n <= NK; ++n)
    for (int k = 0; k <= NK; ++k) {
      if (n + k > b.enum_bound) continue;  // the cap restricts the sweep
      callan &= enum_callan(n, k, b.enum_bound) == pb_number(n, k);
      abundant &= enum_abundant_callan(n, k, b.enum_bound) == pb_poly_closed(n, k);
      typec &= enum_typeC(n, k, b.enum_bound) == pb_typeC(n, k);
      for (int r = 0; r <= 3; ++r)
        ext &= Rat(enum_extended_callan(n, k, r, b.enum_bound)) ==
               pb_poly_closed(n, k).eval(Rat(r));
    }
  c.expect(callan, "Callan counts = B_n^{(-k)}(0)", anchors::kOracle, nk(NK, NK));
  c.expect(ext, "extended Callan counts = B_n^{(-k)}(r)", anchors::kExtendedCallan,
           nk(NK, NK) + ", r<=3");
  c.expect(abundant, "abundant weight polynomial = B_n^{(-k)}(x)", anchors::kAbundantCallan,
           nk(NK, NK));
  c.expect(typec, "star-only extra block count = C_n^{(-k)}", anchors::kTypeCCallan, nk(NK, NK));

  const int es_bound = std::min(b.enum_bound, kESequenceBound);
  bool es = true, parity = true;
  for (int n = 0; n <= b.oracle_es; ++n)
    for (int k = 0; k <= b.oracle_es; ++k) {
      if (n + k > es_bound) continue;
      es &= enum_esequences(n, k, true) == pe_incexc(EulerKind::first, n, k);
      es &= enum_esequences(n, k, false) == pe_incexc(EulerKind::second, n, k);
    }
  c.expect(es, "E-sequence counts match both kinds", anchors::kPolyEulerIncExc,
           nk(b.oracle_es, b.oracle_es));

  for (int n = 0; n <= b.oracle_es; ++n)
    for (int k = 0; k <= b.oracle_es; ++k) {
      if (n + k > es_bound) continue;
      Int conv = 0;
      for (int m = 0; m <= n; ++m)
        conv += binomial(static_cast<unsigned>(n), static_cast<unsigned>(m)) *
                (enum_esequences(m, k, true) + enum_esequences(m, k, false));
      parity &= conv == int_pow(Int(4), static_cast<unsigned>(n)) * pb_number(n, k);
    }
  c.expect(parity, "odd+even convolution equals 4^n B_n^{(-k)}", anchors::kPbPeConvolution,
           nk(b.oracle_es, b.oracle_es));

  bool sw = true;
  for (int n = 0; n <= 6; ++n)
    for (int m = 0; m <= n; ++m) {
      sw &= enum_s2_weighted(n, m) == stirling2_weighted(n, m);
      sw &= enum_s1_weighted(n, m) == stirling1_weighted(n, m);
    }
  c.expect(sw, "weighted partition/permutation enumerations match", anchors::kStirlingFirstDef,
           bound_str("n", 6));

  bool rp = true;
  for (int r = 0; r <= 4; ++r)
    for (int n = 0; n + r <= 8; ++n) rp &= enum_runperms(n, r) == eulerian_rec(n, Rat(r));
  c.expect(rp, "run permutations match r-Eulerian polynomials", anchors::kEulerianDef,
           "n+r<=8");

  bool cs = true;
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= 3; ++k) {
      if (n + k > b.enum_bound) continue;
      Rat xv(1, 2), yv(1, 3);
      cs &= enum_cs(n, k, xv, yv) == ber_hypersum_lhs(n, k, xv, yv);
      cs &= enum_cs(n, k, Rat(1), Rat(1)) == ber_hypersum_rhs(n, k, Rat(1), Rat(1));
    }
  c.expect(cs, "cycle-substitution objects match both identity sides", anchors::kBerHypersum,
           "n<=4, k<=3");

  bool unique = true;
  {
    std::set<std::string> seen;
    Int cnt = 0;
    for_each_callan({1, 2}, 2, [&](const CallanSequence& s) {
      seen.insert(render_callan(s));
      ++cnt;
    });
    unique &= cnt == Int(seen.size()) && cnt == enum_callan(2, 2);
    seen.clear();
    Int streamed = 0;
    for_each_esequence(2, 1, true, [&](const ESequence& e) {
      seen.insert(render_esequence(e));
      ++streamed;
    });
    unique &= streamed == Int(seen.size()) && streamed == enum_esequences(2, 1, true);
  }
  c.expect(unique, "generators emit each object exactly once", anchors::kOracle,
           "spot sizes (2,2) and (2,1)");
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"stirling", "polybernoulli", "polyeuler", "eulerian", "stephan", "oracles", "all"};
}

bool is_suite(const std::string& name) {
  for (const auto& s : suite_names())
    if (s == name) return true;
  return false;
}

Report run_suite(const std::string& name, const VerifyBounds& bounds) {
  Report report;
  if (!is_suite(name)) throw std::invalid_argument("unknown suite: " + name);
  const bool all = name == "all";
  if (all || name == "stirling") suite_stirling(report, bounds);
  if (all || name == "polybernoulli") suite_polybernoulli(report, bounds);
  if (all || name == "polyeuler") suite_polyeuler(report, bounds);
  if (all || name == "eulerian") suite_eulerian(report, bounds);
  if (all || name == "stephan") suite_stephan(report, bounds);
  if (all || name == "oracles") suite_oracles(report, bounds);
  sort_report(report);
  return report;
}

}  // namespace polyseq
