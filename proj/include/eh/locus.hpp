#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eh/catalog.hpp"
#include "eh/quadint.hpp"

namespace eh {

// g - 1 = k * a^2 with k squarefree; exceptional genera need k in
// {1, 2, 3, 6, 10, 30}. Throws GenusTooSmall for g <= 5.
struct GenusDecomposition {
  long long k = 1;
  long long a = 1;
};
GenusDecomposition genus_decomposition(long g);

// One classified action at genus k*a^2 + 1.
struct CatalogedAction {
  std::string case_label;
  Family family;
  Variant variant;
  long n = 1;
  bool full = false;

  friend bool operator==(const CatalogedAction&, const CatalogedAction&) = default;
};
bool action_less(const CatalogedAction& x, const CatalogedAction& y);

// Raw rows of the classification statements, parameterised by a.
struct StatementEntry {
  std::string case_label;
  Family family;
  Variant variant;
  int mult = 1;            // n = mult * a
  bool bold = false;       // full action
  bool needs_3div = false; // present only when 3 | a
};
const std::vector<StatementEntry>& statement_entries(int k, bool a_even);

enum class Validation { light, full };

// All symmetric actions at genus g, sorted; Validation::full rebuilds each
// group and checks relators, smoothness, symmetry and the genus.
std::vector<CatalogedAction> symmetric_actions(long g, Validation v = Validation::light);
int symmetric_full_count(long g);

// Minimal proper extension of a non-full action, per the extension table.
struct ExtensionTarget {
  std::string case_label;
  Family family;
  Variant variant;
  long n = 1;
  long index = 1;

  friend bool operator==(const ExtensionTarget&, const ExtensionTarget&) = default;
};
std::optional<ExtensionTarget> extension_of(const CatalogedAction& a, long g);

// Follows extension_of until a full action is reached.
std::vector<ExtensionTarget> extension_chain(const CatalogedAction& a, long g);

// Table-shaped extension data for the verification suites. Variants pair
// positionally; sources not listed resolve through the shared variant bit.
struct ExtensionRow {
  int k = 1;  // genus form g = k a^2 + 1
  std::string src_case;
  Family src_family = Family::A;
  std::vector<Variant> src_variants;
  int src_mult = 1;
  std::string dst_case;
  Family dst_family = Family::A;
  std::vector<Variant> dst_variants;
  int dst_mult = 1;
  long index = 1;
  bool printed = true;  // one row is reconstructed from the inclusion lattice
};
const std::vector<ExtensionRow>& extension_rows();

// Number-theoretic census of one full reduced type at genus g: solutions
// n = m * nm with the twist congruence soluble mod n/m.
struct ReducedTypeCensus {
  TriangularSignature signature{2, 4, 8};
  long long nm = 0;  // 0 when (g-1) has no integral solution for n*m
  std::vector<std::pair<long long, long long>> pairs;  // (n, m)
  long long count = 0;  // multiplicative count, equals pairs.size()
};
std::vector<ReducedTypeCensus> exceptional_census(long g);

}  // namespace eh
