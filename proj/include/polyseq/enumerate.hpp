#pragma once

#include "polyseq/poly.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace polyseq {

// Exhaustive generators for the combinatorial models; these are the
// ground-truth oracles the formula modules are tested against. Stars are
// encoded as element 0, numerals are 1-based.

struct CallanSequence {
  // (blue block, red block), in sequence order; blocks sorted ascending.
  std::vector<std::pair<std::vector<int>, std::vector<int>>> ordinary_pairs;
  std::vector<int> extra_blue;                       // contains 0 (the star)
  std::vector<int> extra_red;                        // contains 0 (the star)
  std::vector<std::vector<int>> special_red_blocks;  // extended variant, may be empty
  std::vector<int> abundant_block;                   // R-bar, abundant variant
};

struct ESequence {
  CallanSequence base;                     // abundant part in base.abundant_block
  std::vector<std::pair<int, int>> signs;  // (red numeral, +1 or -1), non-R-bar reds
  std::vector<std::pair<int, int>> sides;  // (red numeral, 0 left / 1 right), ordinary reds
};

// Default generation bounds (combined sizes); exceeding one raises
// std::domain_error("enumeration bound").
inline constexpr int kEnumBound = 10;       // n + k for Callan-type generators
inline constexpr int kESequenceBound = 7;   // n + k for decorated counting
inline constexpr int kRunPermBound = 9;     // n + r for run permutations

// Visit every set partition of `elems` (blocks ordered by first occurrence,
// i.e. elems[0] always lies in the first block).
void for_each_partition(const std::vector<int>& elems,
                        const std::function<void(const std::vector<std::vector<int>>&)>& fn);

// Visit every Callan sequence on the given red numerals and blues 1..k.
void for_each_callan(const std::vector<int>& red_numerals, int k,
                     const std::function<void(const CallanSequence&)>& fn);

Int enum_callan(int n, int k, int bound = kEnumBound);
Int enum_extended_callan(int n, int k, int r, int bound = kEnumBound);
Poly enum_abundant_callan(int n, int k, int bound = kEnumBound);
Int enum_typeC(int n, int k, int bound = kEnumBound);

// Counts odd/even E-sequences; sign and side decorations are folded in as
// powers of two (each non-R-bar red carries a sign, each ordinary red a
// side), which keeps the count exact without materializing 4^n objects.
Int enum_esequences(int n, int k, bool odd, int bound = kESequenceBound);

// Full decorated stream, for uniqueness tests and the CLI at tiny sizes.
void for_each_esequence(int n, int k, bool odd,
                        const std::function<void(const ESequence&)>& fn,
                        int bound = kESequenceBound);

Poly enum_runperms(int n, int r, int bound = kRunPermBound);
Poly enum_s2_weighted(int n, int m, int bound = 8);
Poly enum_s1_weighted(int n, int m, int bound = 8);

// Weighted count over pairs (permutation of {0..n} with j+1 cycles, abundant
// Callan sequence of size j x k) built by cycle substitution.
Rat enum_cs(int n, int k, const Rat& x, const Rat& y);

// Structural validity of an r-extended Callan sequence of size n x k.
bool valid_extended_callan(const CallanSequence& cs, int n, int k, int r);

std::string render_callan(const CallanSequence& cs);
std::string render_esequence(const ESequence& es);
std::string render_word(const std::vector<int>& word);

void for_each_runperm(int n, int r, const std::function<void(const std::vector<int>&)>& fn,
                      int bound = kRunPermBound);

// Streams with the special blocks resp. the R-bar block populated.
void for_each_extended_callan(int n, int k, int r,
                              const std::function<void(const CallanSequence&)>& fn,
                              int bound = kEnumBound);
void for_each_abundant_callan(int n, int k,
                              const std::function<void(const CallanSequence&)>& fn,
                              int bound = kEnumBound);

}  // namespace polyseq
