#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "yolkkit/median.hpp"

namespace yolkkit {

enum class Family { nondegen, oddr2ok, lift, oddr2far };

const char* family_name(Family f);
Family parse_family(const std::string& name);  // invalid_parameter on unknown

/// A generated example instance together with its closed-form expected
/// values (keyed by name) and the parameters that produced it.
struct FamilyInstance {
  Family family = Family::nondegen;
  Electorate electorate;
  std::map<std::string, double> parameters;
  std::map<std::string, double> expected;
};

/// Six points (+-2, +-eps), (+-1, 0): even electorate in general position
/// whose LP yolk radius eps/sqrt(1+eps^2) vanishes as eps -> 0 while the
/// yolk radius stays 1. Expects 11 limiting median lines.
FamilyInstance family_nondegen(double eps);

/// Five points around the unit circle built from two tangent lines: the
/// yolk is B(0, 1) while the LP yolk radius is
/// tan(a/2)(w cos a - 1)/((2w - 1) cos a - 1). Six limiting median lines.
FamilyInstance family_oddr2ok(double alpha, double w, double eps);

/// Same instance with w = -kappa / cos(alpha); the radius ratio tends to
/// (kappa+1)/(2 kappa+1) as alpha -> pi/2.
FamilyInstance family_oddr2ok_kappa(double alpha, double kappa, double eps);

/// Lifts a planar electorate to R^3 by appending a third coordinate: zero,
/// or seeded uniform noise in [-noise, noise]. With zero noise the only
/// limiting median plane is {x3 = 0} and the LP yolk radius collapses to 0.
FamilyInstance family_lift(const Electorate& base, double noise,
                           uint64_t seed);

/// The oddr2ok instance viewed through the center-separation lens: records
/// the cone apex and the similar-triangles prediction for the distance
/// between the LP yolk center and the yolk center.
FamilyInstance family_oddr2far(double alpha, double kappa, double eps);

/// Median hyperplanes through >= 3 ideal points of a 3-d electorate
/// (collinear triples span no unique plane and are skipped). Used by the
/// lift family, whose LP yolk needs the 3-d limiting family.
std::vector<Hyperplane> enumerate_limiting_median_planes3(const Electorate& e);

}  // namespace yolkkit
