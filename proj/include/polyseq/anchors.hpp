#pragma once

namespace polyseq::anchors {

// Identity anchor labels used in verification reports. Centralized so a
// numbering change is a one-file fix.

inline constexpr const char* kPolyBernoulliEgf = "Definition 2.1 (poly-Bernoulli EGF)";
inline constexpr const char* kExtendedCallan = "Theorem 2.3 (extended Callan sequences)";
inline constexpr const char* kClosedForm = "Theorem 2.4 (closed form)";
inline constexpr const char* kSieve = "Theorem 2.5 (inclusion-exclusion form)";
inline constexpr const char* kSymmetricC = "Theorem 2.7 (C-function symmetry)";
inline constexpr const char* kStirlingRecursion = "Stirling recursion lemma";
inline constexpr const char* kAbundantCallan = "Abundant Callan theorem";
inline constexpr const char* kStirlingFirstDef = "Definition 2.12 (first-kind Stirling polynomial)";
inline constexpr const char* kPochhammerExpansion = "Proposition 2.14 (Pochhammer expansion)";
inline constexpr const char* kBerHypersum = "Theorem 2.15 (Stirling/poly-Bernoulli identity)";
inline constexpr const char* kHypersumCorollary = "Hypersum corollary of Theorem 2.15";
inline constexpr const char* kPolyEulerIncExc = "Poly-Euler inclusion-exclusion (Eq. 2)";
inline constexpr const char* kTable1 = "Table 1 (poly-Euler values)";
inline constexpr const char* kE0SpecialCase = "Lemma 3.6 (k = 0 closed forms)";
inline constexpr const char* kPolyEulerClosed = "Theorem 3.8 (first-kind closed form)";
inline constexpr const char* kOhnoSasaki = "Theorem 3.9 (Ohno-Sasaki form)";
inline constexpr const char* kTypeCCallan = "Lemma 3.10 (type-C Callan sequences)";
inline constexpr const char* kPeTypeC = "Theorem 3.11 (type-C convolution)";
inline constexpr const char* kPeK1 = "Corollaries 3.12/3.13 (k = 1 and closed-form cases)";
inline constexpr const char* kN2SpecialCase = "n = 2 special case (4(2^{k+1}-1))";
inline constexpr const char* kDifference = "Difference theorem (second minus first kind)";
inline constexpr const char* kPbPeConvolution = "Theorem 3.15 (4^n B as poly-Euler convolution)";
inline constexpr const char* kEulerianDef = "Definition 4.2 (r-Eulerian polynomials)";
inline constexpr const char* kEulerianExplicit = "Proposition 4.4 (explicit r-Eulerian formula)";
inline constexpr const char* kEulerianRec = "Proposition 4.5 (r-Eulerian recursion)";
inline constexpr const char* kEulerianEgf = "Proposition 4.6 (r-Eulerian EGF)";
inline constexpr const char* kLehmerPQ = "Lehmer p/q recursion";
inline constexpr const char* kLehmerSeries = "Lehmer central-binomial series identity";
inline constexpr const char* kZetaCB = "zeta_CB special values";
inline constexpr const char* kStephan = "Conjecture 4.8 / Theorem 4.9 (Stephan)";
inline constexpr const char* kARecursion = "Proposition 4.11 (a-sequence recursion)";
inline constexpr const char* kBRecursion = "Proposition 4.12 (b-sequence recursion)";
inline constexpr const char* kQExplicit = "Proposition 4.13 (Q-explicit)";
inline constexpr const char* kPExplicit = "Proposition 4.14 (P-explicit)";
inline constexpr const char* kTrans = "Lemma 4.15 (3F2 transformation)";
inline constexpr const char* kKeyEquality = "Key equality (F_j partial sums)";
inline constexpr const char* kBnOgf = "b-sequence ordinary generating function";
inline constexpr const char* kOracle = "Exhaustive enumeration oracle";

}  // namespace polyseq::anchors
