#include "polyseq/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace polyseq {

namespace {

void check_bound(int size, int bound) {
  if (size > bound) throw std::domain_error("enumeration bound");
}

// Counts with label-invariant memoization: a Callan count depends only on
// the number of red numerals, so repeated subset enumerations reuse the
// structurally generated count.
Int callan_count_memo(int n, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, Int> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find({n, k});
    if (it != memo.end()) return it->second;
  }
  std::vector<int> reds(static_cast<size_t>(n));
  std::iota(reds.begin(), reds.end(), 1);
  Int cnt = 0;
  for_each_callan(reds, k, [&](const CallanSequence&) { ++cnt; });
  std::lock_guard<std::mutex> lock(mu);
  memo[{n, k}] = cnt;
  return cnt;
}

// Sum over Callan sequences of 4^{#ordinary reds} * 2^{#extra numeral reds}:
// the decoration weight of an E-sequence core (sign and side for ordinary
// reds, sign only for extra-block reds).
Int decorated_callan_weight(int n, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, Int> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find({n, k});
    if (it != memo.end()) return it->second;
  }
  std::vector<int> reds(static_cast<size_t>(n));
  std::iota(reds.begin(), reds.end(), 1);
  Int w = 0;
  for_each_callan(reds, k, [&](const CallanSequence& cs) {
    size_t ord = 0;
    for (const auto& pr : cs.ordinary_pairs) ord += pr.second.size();
    size_t extra = cs.extra_red.size() - 1;
    w += int_pow(Int(2), static_cast<unsigned>(2 * ord + extra));
  });
  std::lock_guard<std::mutex> lock(mu);
  memo[{n, k}] = w;
  return w;
}

std::string block_str(const std::vector<int>& block, char color) {
  std::ostringstream os;
  for (size_t i = 0; i < block.size(); ++i) {
    if (i) os << ',';
    os << color;
    if (block[i] == 0)
      os << '*';
    else
      os << block[i];
  }
  return os.str();
}

}  // namespace

void for_each_partition(const std::vector<int>& elems,
                        const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
  std::vector<std::vector<int>> blocks;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == elems.size()) {
      fn(blocks);
      return;
    }
    for (size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(elems[i]);
      rec(i + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({elems[i]});
    rec(i + 1);
    blocks.pop_back();
  };
  rec(0);
}

void for_each_callan(const std::vector<int>& red_numerals, int k,
                     const std::function<void(const CallanSequence&)>& fn) {
  std::vector<int> reds{0};
  reds.insert(reds.end(), red_numerals.begin(), red_numerals.end());
  std::vector<int> blues(static_cast<size_t>(k) + 1);
  std::iota(blues.begin(), blues.end(), 0);

  for_each_partition(reds, [&](const std::vector<std::vector<int>>& rp) {
    for_each_partition(blues, [&](const std::vector<std::vector<int>>& bp) {
      if (rp.size() != bp.size()) return;
      const size_t m = rp.size() - 1;  // rp[0]/bp[0] hold the stars
      std::vector<size_t> sigma(m), tau(m);
      std::iota(sigma.begin(), sigma.end(), size_t{0});
      do {
        std::iota(tau.begin(), tau.end(), size_t{0});
        do {
          CallanSequence cs;
          cs.extra_blue = bp[0];
          cs.extra_red = rp[0];
          cs.ordinary_pairs.reserve(m);
          for (size_t i = 0; i < m; ++i)
            cs.ordinary_pairs.emplace_back(bp[1 + tau[i]], rp[1 + sigma[i]]);
          fn(cs);
        } while (std::next_permutation(tau.begin(), tau.end()));
      } while (std::next_permutation(sigma.begin(), sigma.end()));
    });
  });
}

Int enum_callan(int n, int k, int bound) {
  check_bound(n + k, bound);
  return callan_count_memo(n, k);
}

Int enum_extended_callan(int n, int k, int r, int bound) {
  check_bound(n + k, bound);
  if (r == 0) return callan_count_memo(n, k);
  // assignment[i] = 0 keeps red i+1 in the Callan core, value s >= 1 puts it
  // into special block s
  std::vector<int> assignment(static_cast<size_t>(n), 0);
  Int total = 0;
  while (true) {
    int core = 0;
    for (int a : assignment)
      if (a == 0) ++core;
    total += callan_count_memo(core, k);
    size_t pos = 0;
    while (pos < assignment.size() && assignment[pos] == r) assignment[pos++] = 0;
    if (pos == assignment.size()) break;
    ++assignment[pos];
  }
  return total;
}

Poly enum_abundant_callan(int n, int k, int bound) {
  check_bound(n + k, bound);
  std::vector<Rat> coeff(static_cast<size_t>(n) + 1, Rat(0));
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int in_rbar = __builtin_popcount(mask);
    coeff[static_cast<size_t>(in_rbar)] += Rat(callan_count_memo(n - in_rbar, k));
  }
  return Poly(std::move(coeff));
}

Int enum_typeC(int n, int k, int bound) {
  check_bound(n + k, bound);
  std::vector<int> reds(static_cast<size_t>(n));
  std::iota(reds.begin(), reds.end(), 1);
  Int cnt = 0;
  for_each_callan(reds, k, [&](const CallanSequence& cs) {
    if (cs.extra_red.size() == 1) ++cnt;
  });
  return cnt;
}

Int enum_esequences(int n, int k, bool odd, int bound) {
  check_bound(n + k, bound);
  Int total = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int rbar = __builtin_popcount(mask);
    if ((rbar % 2 == 1) != odd) continue;
    total += decorated_callan_weight(n - rbar, k);
  }
  return total;
}

void for_each_esequence(int n, int k, bool odd,
                        const std::function<void(const ESequence&)>& fn, int bound) {
  check_bound(n + k, bound);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int rbar_size = __builtin_popcount(mask);
    if ((rbar_size % 2 == 1) != odd) continue;
    std::vector<int> rbar, rest;
    for (int i = 0; i < n; ++i) (mask >> i & 1u ? rbar : rest).push_back(i + 1);
    for_each_callan(rest, k, [&](const CallanSequence& cs) {
      std::vector<int> signed_reds;  // ordinary reds first, then extra numerals
      std::vector<int> ordinary_reds;
      for (const auto& pr : cs.ordinary_pairs)
        for (int e : pr.second) {
          signed_reds.push_back(e);
          ordinary_reds.push_back(e);
        }
      for (int e : cs.extra_red)
        if (e != 0) signed_reds.push_back(e);
      const size_t ns = signed_reds.size(), no = ordinary_reds.size();
      for (unsigned sm = 0; sm < (1u << ns); ++sm) {
        for (unsigned pm = 0; pm < (1u << no); ++pm) {
          ESequence es;
          es.base = cs;
          es.base.abundant_block = rbar;
          for (size_t i = 0; i < ns; ++i)
            es.signs.emplace_back(signed_reds[i], (sm >> i & 1u) ? -1 : 1);
          for (size_t i = 0; i < no; ++i)
            es.sides.emplace_back(ordinary_reds[i], static_cast<int>(pm >> i & 1u));
          fn(es);
        }
      }
    });
  }
}

void for_each_runperm(int n, int r, const std::function<void(const std::vector<int>&)>& fn,
                      int bound) {
  check_bound(n + r, bound);
  std::vector<int> word(static_cast<size_t>(r), 0);
  for (int i = 1; i <= n; ++i) word.push_back(i);
  std::sort(word.begin(), word.end());
  do {
    fn(word);
  } while (std::next_permutation(word.begin(), word.end()));
}

Poly enum_runperms(int n, int r, int bound) {
  std::vector<Rat> coeff(static_cast<size_t>(n + r) + 1, Rat(0));
  for_each_runperm(
      n, r,
      [&](const std::vector<int>& w) {
        int runs = 1;
        for (size_t i = 0; i + 1 < w.size(); ++i)
          if (w[i] > w[i + 1]) ++runs;
        coeff[static_cast<size_t>(runs - 1)] += 1;
      },
      bound);
  return Poly(std::move(coeff));
}

Poly enum_s2_weighted(int n, int m, int bound) {
  check_bound(n, bound);
  if (m < 0 || m > n) return Poly();
  std::vector<int> elems{0};  // 0 plays the dagger
  for (int i = 1; i <= n; ++i) elems.push_back(i);
  std::vector<Rat> coeff(static_cast<size_t>(n) + 1, Rat(0));
  for_each_partition(elems, [&](const std::vector<std::vector<int>>& p) {
    if (static_cast<int>(p.size()) != m + 1) return;
    coeff[p[0].size() - 1] += 1;  // p[0] contains the dagger
  });
  return Poly(std::move(coeff));
}

Poly enum_s1_weighted(int n, int m, int bound) {
  check_bound(n, bound);
  if (m < 0 || m > n) return Poly();
  std::vector<int> perm(static_cast<size_t>(n) + 1);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Rat> coeff(static_cast<size_t>(n) + 1, Rat(0));
  do {
    // cycle decomposition in canonical notation (smallest element leads)
    std::vector<char> seen(perm.size(), 0);
    int cycles = 0;
    int zero_tail_weight = 0;
    for (size_t s = 0; s < perm.size(); ++s) {
      if (seen[s]) continue;
      ++cycles;
      size_t j = static_cast<size_t>(perm[s]);
      seen[s] = 1;
      int minsofar = -1;
      while (j != s) {
        seen[j] = 1;
        if (s == 0) {
          // left-to-right minima of the tail after the leading 0
          if (minsofar < 0 || static_cast<int>(j) < minsofar) {
            minsofar = static_cast<int>(j);
            ++zero_tail_weight;
          }
        }
        j = static_cast<size_t>(perm[j]);
      }
    }
    if (cycles == m + 1) coeff[static_cast<size_t>(zero_tail_weight)] += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Poly(std::move(coeff));
}

Rat enum_cs(int n, int k, const Rat& x, const Rat& y) {
  if (n > 5 || k > 3) throw std::domain_error("enumeration bound");
  std::vector<Rat> abundant_at_x(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) abundant_at_x[j] = enum_abundant_callan(j, k).eval(x);

  std::vector<int> perm(static_cast<size_t>(n) + 1);
  std::iota(perm.begin(), perm.end(), 0);
  Rat acc = 0;
  do {
    std::vector<char> seen(perm.size(), 0);
    int cycles = 0;
    int w = 0;
    for (size_t s = 0; s < perm.size(); ++s) {
      if (seen[s]) continue;
      ++cycles;
      size_t j = static_cast<size_t>(perm[s]);
      seen[s] = 1;
      int minsofar = -1;
      while (j != s) {
        seen[j] = 1;
        if (s == 0 && (minsofar < 0 || static_cast<int>(j) < minsofar)) {
          minsofar = static_cast<int>(j);
          ++w;
        }
        j = static_cast<size_t>(perm[j]);
      }
    }
    acc += rat_pow(y, w) * abundant_at_x[static_cast<size_t>(cycles - 1)];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

bool valid_extended_callan(const CallanSequence& cs, int n, int k, int r) {
  if (static_cast<int>(cs.special_red_blocks.size()) != r) return false;
  if (!cs.abundant_block.empty()) return false;
  std::vector<int> reds, blues;
  auto collect = [](std::vector<int>& into, const std::vector<int>& block) {
    into.insert(into.end(), block.begin(), block.end());
  };
  for (const auto& pr : cs.ordinary_pairs) {
    if (pr.first.empty() || pr.second.empty()) return false;
    for (int e : pr.first)
      if (e == 0) return false;  // stars live in the extra pair only
    for (int e : pr.second)
      if (e == 0) return false;
    collect(blues, pr.first);
    collect(reds, pr.second);
  }
  if (std::find(cs.extra_blue.begin(), cs.extra_blue.end(), 0) == cs.extra_blue.end())
    return false;
  if (std::find(cs.extra_red.begin(), cs.extra_red.end(), 0) == cs.extra_red.end())
    return false;
  collect(blues, cs.extra_blue);
  collect(reds, cs.extra_red);
  for (const auto& sp : cs.special_red_blocks) collect(reds, sp);

  auto is_exact_ground = [](std::vector<int> v, int top) {
    std::sort(v.begin(), v.end());
    if (static_cast<int>(v.size()) != top + 1) return false;
    for (int i = 0; i <= top; ++i)
      if (v[static_cast<size_t>(i)] != i) return false;
    return true;
  };
  return is_exact_ground(std::move(reds), n) && is_exact_ground(std::move(blues), k);
}

void for_each_extended_callan(int n, int k, int r,
                              const std::function<void(const CallanSequence&)>& fn, int bound) {
  check_bound(n + k, bound);
  std::vector<int> assignment(static_cast<size_t>(n), 0);
  while (true) {
    std::vector<int> core;
    std::vector<std::vector<int>> specials(static_cast<size_t>(r));
    for (int i = 0; i < n; ++i) {
      if (assignment[static_cast<size_t>(i)] == 0)
        core.push_back(i + 1);
      else
        specials[static_cast<size_t>(assignment[static_cast<size_t>(i)] - 1)].push_back(i + 1);
    }
    for_each_callan(core, k, [&](const CallanSequence& cs) {
      CallanSequence full = cs;
      full.special_red_blocks = specials;
      fn(full);
    });
    size_t pos = 0;
    while (pos < assignment.size() && assignment[pos] == r) assignment[pos++] = 0;
    if (pos == assignment.size()) break;
    ++assignment[pos];
  }
}

void for_each_abundant_callan(int n, int k,
                              const std::function<void(const CallanSequence&)>& fn, int bound) {
  check_bound(n + k, bound);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> rbar, rest;
    for (int i = 0; i < n; ++i) (mask >> i & 1u ? rbar : rest).push_back(i + 1);
    for_each_callan(rest, k, [&](const CallanSequence& cs) {
      CallanSequence full = cs;
      full.abundant_block = rbar;
      fn(full);
    });
  }
}

std::string render_callan(const CallanSequence& cs) {
  std::ostringstream os;
  for (const auto& pr : cs.ordinary_pairs)
    os << '(' << block_str(pr.first, 'b') << ',' << block_str(pr.second, 'r') << ')';
  os << '(' << block_str(cs.extra_blue, 'b') << ',' << block_str(cs.extra_red, 'r') << ')';
  for (const auto& sp : cs.special_red_blocks) os << '|' << block_str(sp, 'r');
  if (!cs.abundant_block.empty()) os << '|' << block_str(cs.abundant_block, 'r');
  return os.str();
}

std::string render_esequence(const ESequence& es) {
  auto sign_of = [&](int e) {
    for (const auto& [el, s] : es.signs)
      if (el == e) return s;
    return 0;
  };
  auto side_of = [&](int e) {
    for (const auto& [el, s] : es.sides)
      if (el == e) return s;
    return 0;
  };
  std::ostringstream os;
  for (const auto& pr : es.base.ordinary_pairs) {
    os << '(' << block_str(pr.first, 'b') << ',';
    std::string left, right;
    for (int e : pr.second) {
      std::string tok = (sign_of(e) < 0 ? "-r" : "+r") + std::to_string(e);
      auto& part = side_of(e) == 0 ? left : right;
      if (!part.empty()) part += ',';
      part += tok;
    }
    os << left << '|' << right << ')';
  }
  os << '(';
  std::string extra;
  for (int e : es.base.extra_red) {
    if (!extra.empty()) extra += ',';
    if (e == 0)
      extra += "r*";
    else
      extra += (sign_of(e) < 0 ? "-r" : "+r") + std::to_string(e);
  }
  os << block_str(es.base.extra_blue, 'b') << ',' << extra << ')';
  os << '|' << block_str(es.base.abundant_block, 'r');
  return os.str();
}

std::string render_word(const std::vector<int>& word) {
  std::ostringstream os;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) os << ' ';
    os << word[i];
  }
  return os.str();
}

}  // namespace polyseq
