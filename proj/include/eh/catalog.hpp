#pragma once

#include <array>
#include <string>
#include <vector>

#include "eh/group.hpp"
#include "eh/signature.hpp"

namespace eh {

// One reduced symmetry type: a triangular quotient signature realised by a
// fixed assignment of the presentation bits. Labels follow the twist order:
// 4.x for (2,4,4)-type, 6.x for (2,3,6)-type, 3.x for (3,3,3)-type.
struct ActionCase {
  std::string label;
  ActionType type;
  Params params;
};

const std::vector<ActionCase>& action_cases();
const ActionCase* find_case(const std::string& label);

// Slotwise periods from the bits; the bit sums are reduced mod 2 first.
TriangularSignature signature_of(const ActionCase& c);
bool case_is_full(const ActionCase& c);

// The two families presenting each type: {A,B}, {C,D} or {E,F}.
std::array<Family, 2> case_families(ActionType t);

// Variant bits admissible for (case, family, n) per the frozen tables;
// empty when the cell is empty or the family rejects n.
std::vector<Variant> admissible_variants(const ActionCase& c, Family f, long n);

// The same cells derived mechanically: bits whose cocycle data passes
// relators_hold and whose boundary images have the tabulated orders.
std::vector<Variant> computed_variants(const ActionCase& c, Family f, long n);

struct TriangularAction {
  const ActionCase* kase;
  GroupSpec spec;
};

// Throws NotFound when (family, variant, n) is not an admissible cell of the
// case, unless allow_uncataloged; shape errors surface as BadParameter.
TriangularAction make_action(const ActionCase& c, Family f, const Variant& v, long n,
                             bool allow_uncataloged = false);
TriangularAction make_action(const std::string& case_label, Family f, const Variant& v,
                             long n, bool allow_uncataloged = false);

// Boundary images (g1, g2, g3) of the quotient map, g1 g2 g3 = 1.
std::array<Element, 3> theta_images(const TriangularAction& a);

// Orders of the boundary images match the signature slot by slot.
bool is_smooth(const TriangularAction& a);

// The inversion g_i -> g_i^-1 extends to an automorphism.
bool inversion_automorphism_exists(const TriangularAction& a);
// g_i -> g_j^-1, g_j -> g_i^-1 extends to an automorphism (i != j).
bool swap_automorphism_exists(const TriangularAction& a, int i, int j);
// Symmetric: inversion or the (g1, g2) swap works.
bool is_symmetric(const TriangularAction& a);

long genus_of(const TriangularAction& a);

}  // namespace eh
