#include "polyseq/stephan.hpp"

#include "polyseq/eulerian.hpp"
#include "polyseq/polybernoulli.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace polyseq {

const Rat kPiOverSqrt3 =
    Rat(Int("181379936423421785059407825764215573228406624809274057556988"),
        int_pow(Int(10), 59));

PQPair pq(int k) {
  if (k < -1) throw std::domain_error("pq: index below -1");
  static std::mutex mu;
  static std::vector<PQPair> cache{{-1, Poly(), Poly(Rat(1))}};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= k + 1) {
    const PQPair& last = cache.back();
    const int m = last.k;
    const Poly x = Poly::x();
    const Poly two_x_1mx = Rat(2) * (x - x * x);
    Poly p_next = Rat(2) * (Rat(m) * x + Poly(Rat(1))) * last.p +
                  two_x_1mx * last.p.derivative() + last.q;
    Poly q_next = (Rat(2 * (m + 1)) * x + Poly(Rat(1))) * last.q +
                  two_x_1mx * last.q.derivative();
    cache.push_back({m + 1, std::move(p_next), std::move(q_next)});
  }
  return cache[static_cast<size_t>(k) + 1];
}

Rat PiSqrt3Value::approx() const { return u + v * kPiOverSqrt3; }

std::string PiSqrt3Value::str() const {
  std::ostringstream os;
  os << rat_str(u) << " + " << rat_str(v) << "*pi/sqrt(3)";
  return os.str();
}

Rat a_seq(int n) { return rat_pow(Rat(2, 3), n) * pq(n).p.eval(Rat(1, 4)); }

Int b_seq(int n) {
  Int acc = 0;
  for (int k = 0; k <= n; ++k) acc += pb_number(n - k, k);
  return acc;
}

namespace {

template <typename Value, typename Get>
bool recursion_holds(int n, Get get) {
  Value lhs = Value(3) * get(n + 1);
  Value rhs = Value(2) * get(n) + Value(3);
  for (int k = 0; k <= n; ++k)
    rhs += Value(binomial(static_cast<unsigned>(n) + 1, static_cast<unsigned>(k))) * get(k);
  return lhs == rhs;
}

}  // namespace

bool a_recursion_check(int n) {
  return recursion_holds<Rat>(n, [](int m) { return a_seq(m); });
}

bool b_recursion_check(int n) {
  return recursion_holds<Int>(n, [](int m) { return b_seq(m); });
}

bool ab_ode_check(int max_n) {
  const int order = max_n + 1;
  std::vector<Rat> coeff(static_cast<size_t>(order));
  for (int n = 0; n <= max_n; ++n)
    coeff[static_cast<size_t>(n)] = a_seq(n) / Rat(factorial(static_cast<unsigned>(n)));
  TruncSeries A(order, std::move(coeff));
  TruncSeries Ad = ser_derivative(A);          // order max_n
  TruncSeries et = ser_exp(TruncSeries::t(order));
  TruncSeries lhs =
      ser_sub(ser_mul(ser_sub(TruncSeries::constant(Rat(4), order), et), Ad),
              ser_mul(ser_add(TruncSeries::constant(Rat(2), order), et), A));
  return lhs == ser_scale(Rat(3), et);
}

bool ab_recursion_check(int n) {
  for (int m = 0; m <= n; ++m)
    if (!a_recursion_check(m) || !b_recursion_check(m)) return false;
  return ab_ode_check(n);
}

bool stephan_check(int max_n) {
  for (int n = 0; n <= max_n; ++n)
    if (a_seq(n) != Rat(b_seq(n))) return false;
  return true;
}

PiSqrt3Value zeta_cb_neg(int k) {
  PQPair pr = pq(k);
  return {Rat(1, 3) * rat_pow(Rat(2, 3), k) * pr.p.eval(Rat(1, 4)),
          Rat(1, 3) * rat_pow(Rat(2, 3), k + 1) * pr.q.eval(Rat(1, 4))};
}

Rat zeta_cb_partial(int k, int terms) {
  Rat acc = 0;
  for (int n = 1; n <= terms; ++n)
    acc += Rat(int_pow(Int(n), static_cast<unsigned>(k)),
               binomial(2 * static_cast<unsigned>(n), static_cast<unsigned>(n)));
  return acc;
}

bool q_eulerian_check(int n) {
  Poly e = eulerian_rec(n, Rat(1, 2));
  // (2x)^n E_n^{1/2}(1/x): coefficient i of E lands at degree n-i, scaled 2^n
  std::vector<Rat> rev(static_cast<size_t>(n) + 1, Rat(0));
  const Rat scale(int_pow(Int(2), static_cast<unsigned>(n)));
  for (int i = 0; i <= e.degree(); ++i)
    rev[static_cast<size_t>(n - i)] = scale * e.coeff(static_cast<unsigned>(i));
  return Poly(std::move(rev)) == pq(n).q;
}

bool p_explicit_check(int n) {
  Poly rhs = Rat(int_pow(Int(2), static_cast<unsigned>(n))) * eulerian_rec(n, Rat(0));
  for (int k = 1; k <= n; ++k) {
    rhs += Rat(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k))) *
           (pq(n - k).q * pq(k - 2).q);
  }
  return rhs == pq(n).p;
}

bool lehmer_series_check(int k, int order) {
  if (k < -1) throw std::domain_error("lehmer_series_check: k below -1");
  if (order < 4) throw std::invalid_argument("lehmer_series_check: order below 4");
  const int N = order + 2;

  TruncSeries lhs(N);
  {
    std::vector<Rat> c(static_cast<size_t>(N));
    for (int n = 1; 2 * n < N; ++n) {
      Rat factor = k >= 0 ? Rat(int_pow(Int(2 * n), static_cast<unsigned>(k)))
                          : Rat(Int(1), Int(2 * n));
      c[static_cast<size_t>(2 * n)] =
          factor * Rat(int_pow(Int(2), static_cast<unsigned>(2 * n)),
                       binomial(2 * static_cast<unsigned>(n), static_cast<unsigned>(n)));
    }
    lhs = TruncSeries(N, std::move(c));
  }

  TruncSeries one_m_x2(N, {Rat(1), Rat(0), Rat(-1)});
  TruncSeries root = ser_sqrt(one_m_x2);
  TruncSeries inv = ser_inv(ser_pow(one_m_x2, static_cast<unsigned>(k + 2)));
  TruncSeries arcsin = ser_integrate(ser_inv(root));
  TruncSeries x2 = TruncSeries::monomial(2, Rat(1), N);
  TruncSeries x1 = TruncSeries::monomial(1, Rat(1), N);

  PQPair pr = pq(k);
  TruncSeries p_sub = poly_at_series(pr.p, x2);
  TruncSeries q_sub = poly_at_series(pr.q, x2);
  TruncSeries inner =
      ser_add(ser_mul(ser_mul(x1, root), p_sub), ser_mul(arcsin, q_sub));
  TruncSeries rhs = ser_mul(x1, ser_mul(ser_mul(inv, root), inner));

  for (int i = 0; i < order; ++i)
    if (lhs.coeff(i) != rhs.coeff(i)) return false;
  return true;
}

Rat f_term(int j, const Rat& x, const Rat& y) {
  if (j < -1) throw std::domain_error("f_term: index below -1");
  if (j == -1) return Rat(0);
  Rat den = 1;
  for (int i = 0; i < j; ++i) {
    for (const Rat* arg : {&x, &y}) {
      Rat factor = *arg + i;
      if (factor == 0) {
        std::ostringstream os;
        os << "pole of F_j: factor (" << rat_str(*arg) << " + " << i << ") vanishes in ("
           << rat_str(*arg) << ")_" << j;
        throw std::domain_error(os.str());
      }
      den *= factor;
    }
  }
  Rat f(factorial(static_cast<unsigned>(j)));
  return f * f / den;
}

bool trans_check(int j, const Rat& x, const Rat& y) {
  Rat lhs = (x - 1) * (x - 2) * (f_term(j, x - 2, y) - f_term(j - 1, x - 2, y)) +
            (x - 1) * (2 * x - 5) * f_term(j - 1, x - 1, y) -
            (x - 1) * (x - y - 1) * f_term(j, x - 1, y) -
            (x - 2) * (x - 2) * f_term(j - 1, x, y);
  Rat rhs = j == 0 ? (x - 1) * (y - 1) : Rat(0);
  return lhs == rhs;
}

namespace {

// Partial sum of F_j(a,a) for j <= J, plus F_{J+1}(a,a) for the tail bound.
// Walks the running product so a vanishing factor is caught exactly.
void f_partial_sum(const Rat& a, int J, Rat& sum, Rat& next_term) {
  sum = 0;
  Rat fj = 1;  // F_0
  for (int j = 0; j <= J; ++j) {
    sum += fj;
    Rat factor = a + j;
    if (factor == 0) {
      std::ostringstream os;
      os << "pole of F_j: factor (" << rat_str(a) << " + " << j << ") vanishes in ("
         << rat_str(a) << ")_" << j + 1;
      throw std::domain_error(os.str());
    }
    Rat ratio = Rat(j + 1) / factor;
    fj *= ratio * ratio;
  }
  next_term = fj;
}

struct KeyEqualityParts {
  Rat lhs, rhs, bound;
};

KeyEqualityParts key_equality_parts(const Rat& x, int J) {
  if (J < 10) throw std::invalid_argument("key_equality_check: J below 10");
  const Rat a1 = Rat(2) - Rat(1) / x;
  const Rat a2 = Rat(3) - Rat(1) / x;
  Rat s1, t1, s2, t2;
  f_partial_sum(a1, J, s1, t1);
  f_partial_sum(a2, J, s2, t2);

  const Rat pref_l = Rat(2) * (Rat(2) - x) / ((Rat(1) - x) * (Rat(1) - x));
  const Rat pref_r = (Rat(1) - x) / ((Rat(1) - 2 * x) * (Rat(1) - 2 * x));
  KeyEqualityParts parts;
  parts.lhs = pref_l * s1;
  parts.rhs = Rat(3) / (Rat(1) - x) + pref_r * s2;

  // Tail bound, valid for a >= 2 (x < 0 gives a1 > 2, a2 > 3): from
  // F_{j+1}/F_j = ((j+1)/(j+a))^2 <= ((j+1)/(j+2))^2, the tail telescopes to
  //   sum_{j>J} F_j <= F_{J+1} (J+2)^2 sum_{m>J+1} m^{-2} <= F_{J+1} (J+2)^2/(J+1).
  if (a1 < 2)
    throw std::invalid_argument("key_equality_check: tail bound needs x < 0");
  const Rat geom = Rat(Int((J + 2)) * (J + 2), Int(J + 1));
  parts.bound = rat_abs(pref_l) * t1 * geom + rat_abs(pref_r) * t2 * geom;
  return parts;
}

}  // namespace

Rat key_equality_gap(const Rat& x, int J) {
  auto parts = key_equality_parts(x, J);
  return rat_abs(parts.lhs - parts.rhs);
}

Rat key_equality_tail_bound(const Rat& x, int J) { return key_equality_parts(x, J).bound; }

bool key_equality_check(const Rat& x, int J, const Rat& tol) {
  auto parts = key_equality_parts(x, J);
  return rat_abs(parts.lhs - parts.rhs) <= tol + parts.bound;
}

bool bn_ogf_check(int N, int J) {
  if (2 * J < N) throw std::invalid_argument("bn_ogf_check: J below ceil(N/2)");
  const int order = N + 1;
  TruncSeries acc(order);
  for (int j = 0; j <= J && 2 * j <= N; ++j) {
    Poly den(Rat(1));
    for (int i = 1; i <= j + 1; ++i) {
      Poly lin(std::vector<Rat>{Rat(1), Rat(-i)});
      den = den * lin * lin;
    }
    Rat f(factorial(static_cast<unsigned>(j)));
    TruncSeries term = ser_scale(f * f, ser_inv(poly_to_series(den, order)));
    acc = ser_add(acc, ser_mul(TruncSeries::monomial(static_cast<unsigned>(2 * j), Rat(1), order), term));
  }
  for (int n = 0; n <= N; ++n)
    if (acc.coeff(n) != Rat(b_seq(n))) return false;
  return true;
}

}  // namespace polyseq
