#include "polyseq/stirling.hpp"

#include <mutex>
#include <vector>

namespace polyseq {

namespace {

// Triangular memo tables, grown row by row under a lock so concurrent
// lookups stay race-free. Rows are only appended, never mutated.
template <typename T>
class Triangle {
 public:
  template <typename Fill>
  T get(int n, int m, Fill fill) {
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<int>(rows_.size()) <= n) {
      int r = static_cast<int>(rows_.size());
      std::vector<T> row(static_cast<size_t>(r) + 1);
      for (int c = 0; c <= r; ++c) row[c] = fill(r, c, rows_);
      rows_.push_back(std::move(row));
    }
    return rows_[n][m];
  }

 private:
  std::mutex mu_;
  std::vector<std::vector<T>> rows_;
};

}  // namespace

Int stirling2(int n, int m) {
  if (m < 0 || m > n) return 0;
  static Triangle<Int> table;
  return table.get(n, m, [](int r, int c, const std::vector<std::vector<Int>>& rows) -> Int {
    if (r == 0) return 1;  // only (0,0) exists in row 0
    Int up = c <= r - 1 ? rows[r - 1][c] : Int(0);
    Int diag = c >= 1 ? rows[r - 1][c - 1] : Int(0);
    return c * up + diag;
  });
}

Poly stirling2_weighted(int n, int m) {
  if (m < 0 || m > n) return Poly();
  static Triangle<Poly> table;
  return table.get(n, m, [](int r, int c, const std::vector<std::vector<Poly>>& rows) -> Poly {
    if (r == 0) return Poly(Rat(1));
    Poly up = c <= r - 1 ? rows[r - 1][c] : Poly();
    Poly diag = c >= 1 ? rows[r - 1][c - 1] : Poly();
    return (Poly::x() + Poly(Rat(c))) * up + diag;
  });
}

Int rstirling2(int n, int m, int r) {
  Rat v = stirling2_weighted(n, m).eval(Rat(r));
  return numerator(v);  // integer by construction
}

Poly stirling1_weighted(int n, int m) {
  if (m < 0 || m > n) return Poly();
  static Triangle<Poly> table;
  return table.get(n, m, [](int r, int c, const std::vector<std::vector<Poly>>& rows) -> Poly {
    if (c == 0) return pochhammer(Poly::x(), static_cast<unsigned>(r));
    Poly diag = rows[r - 1][c - 1];
    Poly same = c <= r - 1 ? rows[r - 1][c] : Poly();
    return diag + (Poly::x() + Poly(Rat(r - 1))) * same;
  });
}

Int stirling1_unsigned(int n, int m) {
  if (m < 0 || m > n) return 0;
  static Triangle<Int> table;
  return table.get(n, m, [](int r, int c, const std::vector<std::vector<Int>>& rows) -> Int {
    if (r == 0) return 1;
    Int up = c <= r - 1 ? rows[r - 1][c] : Int(0);
    Int diag = c >= 1 ? rows[r - 1][c - 1] : Int(0);
    return (r - 1) * up + diag;
  });
}

}  // namespace polyseq
