#pragma once

#include <array>
#include <vector>

#include "eh/catalog.hpp"

namespace eh {

// Extension of the action group by the orientation-reversing involution tau.
// tau_extension gates only on the family (E and F carry no tau);
// build_full_group additionally requires a full case.
GroupSpec tau_extension(const TriangularAction& a);
GroupSpec build_full_group(const TriangularAction& a);

// The three boundary reflections (g1 tau, tau, tau g2) where g1, g2 are the
// first two boundary images. Verifies that tau inverts the images, that the
// reflections are involutions and that the link orders match the signature.
std::array<Element, 3> boundary_reflections(const GroupSpec& full,
                                            const TriangularAction& a);

// Partition of the reflection slots induced by odd link periods; entries are
// class ids, smallest slot first.
std::array<int, 3> reflection_conjugacy(const TriangularSignature& sig);

// Sizes nu_i of the centralizer images, one per reflection slot, computed by
// generating the image subgroup explicitly.
std::array<long long, 3> centralizer_image_sizes(const GroupSpec& full,
                                                 const TriangularAction& a);

// Closed forms for nu_i when all three periods are even; throws NotApplicable
// otherwise.
std::array<long long, 3> centralizer_image_sizes_closed(const GroupSpec& full,
                                                        const TriangularAction& a);

// Whether the middle reflection tau fuses with g1 tau under conjugacy in the
// extension. Only meaningful for the (2,4,...) quadrilateral types; throws
// NotApplicable for the others.
bool merged_classes_odd_n(const GroupSpec& full, const TriangularAction& a);

struct SymmetryClass {
  Element rep;
  long long size = 0;  // conjugacy class size in the tau-extension
  long long ovals = 0;
  bool has_fixed_points = false;
};

struct OvalReport {
  long genus = 0;
  long long group_order = 0;  // order of the tau-extension
  std::vector<SymmetryClass> classes;  // orientation-reversing involutions
  long long total_ovals = 0;
};

// Counts the ovals of every symmetry class of the tau-extension.
// Requires genus > 5, a full case and a tau-carrying family.
OvalReport count_ovals(const TriangularAction& a);

}  // namespace eh
