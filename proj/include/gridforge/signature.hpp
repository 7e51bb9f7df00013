#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gridforge/surface.hpp"

namespace gridforge::surface {

enum class OrientabilityClass { Orientable, EvenNonorientable, OddNonorientable, InfinitelyNonorientable };

std::string orientability_class_name(OrientabilityClass c);

struct EndLabel {
  bool planar = true;
  bool orientable = true;
  friend bool operator==(const EndLabel&, const EndLabel&) = default;
};

// Homeomorphism data of a surface. genus counts handles (nullopt = infinite);
// crosscaps is the crosscap count of a finitely nonorientable surface.
// Each planar end appears as one boundary circle of a finite truncation.
struct SurfaceSignature {
  OrientabilityClass orientability = OrientabilityClass::Orientable;
  std::optional<int> genus = 0;
  int crosscaps = 0;
  std::vector<EndLabel> ends;

  static SurfaceSignature orientable(int genus, int planar_ends = 0);
  static SurfaceSignature nonorientable(int crosscaps, int planar_ends = 0);

  // Throws InvalidArgument when the nested end sets or counts are inconsistent.
  void check() const;
  bool finite_type() const;
  int nonplanar_ends() const;
  int nonplanar_orientable_ends() const;
  std::string str() const;
  friend bool operator==(const SurfaceSignature&, const SurfaceSignature&) = default;
};

// Signature of a compact connected surface as read from its report: every
// boundary circle becomes a planar end.
SurfaceSignature signature_of(const SurfaceReport& r);

// True when the classifier output is the finite truncation of sig.
bool matches(const SurfaceSignature& sig, const SurfaceReport& r);

}  // namespace gridforge::surface
