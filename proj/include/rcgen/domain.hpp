#pragma once

#include "rcgen/types.hpp"

namespace rcgen {

//! Planar domain on which a holomorphic function is declared: the whole
//! plane, an open disk, or the upper half-plane.
struct DomainDesc {
  enum class Kind { EntirePlane, Disk, UpperHalfPlane };

  Kind kind = Kind::EntirePlane;
  Complex center{0.0, 0.0};  // Disk only
  double radius = 0.0;       // Disk only

  static DomainDesc entire_plane() { return {}; }

  static DomainDesc disk(Complex center, double radius) {
    if (!(radius > 0.0)) throw usage_error("disk radius must be positive");
    return {Kind::Disk, center, radius};
  }

  static DomainDesc upper_half_plane() {
    return {Kind::UpperHalfPlane, Complex{}, 0.0};
  }

  bool contains(Complex z) const {
    switch (kind) {
      case Kind::EntirePlane: return true;
      case Kind::Disk: return std::abs(z - center) < radius;
      case Kind::UpperHalfPlane: return z.imag() > 0.0;
    }
    return false;
  }
};

//! Euclidean distance from z to the boundary; +inf for the entire plane.
inline double boundary_distance(const DomainDesc& d, Complex z) {
  if (!d.contains(z)) throw domain_error("boundary_distance: point outside domain");
  switch (d.kind) {
    case DomainDesc::Kind::EntirePlane:
      return std::numeric_limits<double>::infinity();
    case DomainDesc::Kind::Disk:
      return d.radius - std::abs(z - d.center);
    case DomainDesc::Kind::UpperHalfPlane:
      return z.imag();
  }
  return 0.0;
}

}  // namespace rcgen
