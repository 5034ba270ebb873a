// Exhaustive enumeration pipelines: the signature-filtered candidate search
// for admissible ternary prefixes of higher-rank regular forms, the rank-4
// candidate set built from reduction preimages of distinguished ternary
// cores, and the detection of rank-4 collapse structures.
#pragma once

#include <set>
#include <vector>

#include "triform/classify.hpp"
#include "triform/numth.hpp"

namespace triform {

struct SignatureKey {
  int eta3 = 1;   // +1 or -1
  int eta5 = 1;
  int eta7 = 1;
  Int alpha = 0;  // shift residue, 0..104
};

// First `count` positive n with Legendre((8n + alpha)/p) == eta_p for
// p in {3, 5, 7}.
std::vector<Int> build_signature_set(const SignatureKey& key, int count);

struct PrefixReport {
  std::size_t signatures = 0;
  std::size_t pairs = 0;
  std::size_t triples = 0;
  std::vector<Form> unresolved;  // candidates kept under an unresolved scan
};

// The set of admissible sorted triples (b1, b2, b3): over all signatures,
// b1 bounded by the smallest signature element, b2 by the first signature
// element missed by (b1), b3 by the first locally admissible target missed
// by (b1, b2), retained when b3 <= psi(b1, b2, b3).
std::set<Form> build_prefix_set(Int psi_bound, PrefixReport* report = nullptr);

struct CandidateReport {
  std::size_t y2 = 0;             // ternary reduction preimages
  std::size_t y3 = 0;             // ...with a finite counterexample
  std::size_t z4 = 0;             // merged sorted quadruples
  std::size_t w_removed = 0;      // removed as recognizably old
  std::vector<Form> xi_skipped;   // Y3 members without a square-class divisor
};

struct CandidateSet {
  std::set<Form> z;  // final candidates
  std::set<Form> w;  // recognizably old quadruples met along the way
};

// The rank-4 candidate construction; psi_bound caps every counterexample
// scan (counterexamples beyond it count as "none").
CandidateSet build_candidates(Int psi_bound, CandidateReport* report = nullptr);

// Scans candidates for p-unstable new regular forms whose reduction is old;
// returns canonical collapse records numbered from 5 in ascending order of
// the top form.
std::vector<DropRecord> discover_drops(const std::set<Form>& candidates, Int bound);

// Checks that the sorted three smallest coefficients of every family
// instance with r <= rmax appear in the admissible-prefix table; returns
// violating instances.
std::vector<Form> check_prefix_closure(int rmax);

}  // namespace triform
