// Classification data and structure tests: the 49 regular ternary forms,
// the 20 quaternary coefficient families, the 27 rank-4 collapse records,
// per-root stream summaries, the 77 admissible ternary prefixes, and the
// redundancy ("old/new") and structure-theorem regularity tests built on
// them.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "triform/numth.hpp"

namespace triform {

struct TernaryEntry {
  Form a;
  bool stable;  // stable at every odd prime
};

// The 49 primitive regular ternary forms (sorted coefficient triples).
const std::vector<TernaryEntry>& ternary_regular_table();

// Membership of a sorted triple in the ternary table.
bool in_ternary_table(const Form& a);

struct FamilyTerm {
  Int c;    // a4(r) = c * p^(mul*r + off), r = 1, 2, ...
  Int p;
  int mul;
  int off;
};

struct QuaternaryFamily {
  Form base;                     // sorted (a1, a2, a3)
  std::vector<FamilyTerm> terms; // parametric fourth coefficients
  std::vector<Int> finite;       // explicit fourth coefficients
};

// The 20 families of new regular quaternary forms.
const std::vector<QuaternaryFamily>& quaternary_family_table();

// Membership of a sorted quadruple in some family instance.
bool in_quaternary_table(const Form& a);

// All sorted family instances with r <= rmax (finite lists included once).
std::vector<Form> instantiate_families(int rmax);

struct DropRecord {
  int index;          // position in the canonical listing (5-based)
  Form top;           // rank-4 form, unstable at p
  Int p;
  Form image;         // reduce_at(top, p); old
  Form bottom;        // image with its redundant coefficient deleted
  int height;         // number of deleted coefficients
  bool dual_unstable; // unstable at a second odd prime as well
};

// The 27 rank-4 collapse records.
const std::vector<DropRecord>& drop_table();

struct StreamCounts {
  int mainstreams = 0;
  int tributaries = 0;
  int sporadics = 0;
  bool operator==(const StreamCounts&) const = default;
};

// The 29 stable-or-collapse roots with their expected stream summaries.
const std::vector<std::pair<Form, StreamCounts>>& stream_table();

// The 77 admissible (a1, a2, a3) prefixes of regular forms of rank >= 4,
// with their proof-type tag.
const std::vector<std::pair<Form, std::string>>& ternary_prefix_table();

// FNV-1a checksum of a fixture's canonical CSV rendering.
std::uint64_t fixture_checksum(const std::string& name);

// Canonical CSV rendering of a fixture ("ternary", "families", "drops",
// "streams", "prefixes").
std::string fixture_csv(const std::string& name);

// Verifies the CSV files + manifest in dir against the embedded fixtures;
// returns a list of human-readable problems (empty when consistent).
std::vector<std::string> verify_fixture_dir(const std::string& dir);

enum class Oldness { Old, New };

struct OldnessResult {
  Oldness verdict = Oldness::New;
  int witness_index = -1;  // deleted coefficient index when Old
  Form core;               // remaining form when Old
};

// Whether some coefficient is redundant: its deletion leaves a primitive
// regular form whose local square-class closure absorbs the coefficient at
// every odd prime.  Rank 3 forms are always New.  `bound` is used for the
// counterexample corroboration of rank >= 4 cores.
OldnessResult is_old(const Form& a, Int bound);

struct StructureResult {
  bool regular = false;
  std::vector<int> core_indices;  // indices of the table-listed core
  Form core;
};

// Structure-theorem regularity test: some size-3 (preferred) or size-4
// subset lies in the ternary/quaternary tables and divides out all other
// coefficients via square_class_divisor.  One-sided: `regular == true` is a
// certificate; false only means no witness subset was found.
StructureResult structure_regular(const Form& a);

}  // namespace triform
