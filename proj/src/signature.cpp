#include "gridforge/signature.hpp"

#include "gridforge/error.hpp"

namespace gridforge::surface {

std::string orientability_class_name(OrientabilityClass c) {
  switch (c) {
    case OrientabilityClass::Orientable:
      return "orientable";
    case OrientabilityClass::EvenNonorientable:
      return "even nonorientable";
    case OrientabilityClass::OddNonorientable:
      return "odd nonorientable";
    case OrientabilityClass::InfinitelyNonorientable:
      return "infinitely nonorientable";
  }
  return "";
}

SurfaceSignature SurfaceSignature::orientable(int genus, int planar_ends) {
  if (genus < 0 || planar_ends < 0) throw InvalidArgument("genus and end count must be non-negative");
  SurfaceSignature s;
  s.genus = genus;
  s.ends.assign(planar_ends, EndLabel{});
  return s;
}

SurfaceSignature SurfaceSignature::nonorientable(int crosscaps, int planar_ends) {
  if (crosscaps < 1) throw InvalidArgument("a nonorientable surface needs at least one crosscap");
  if (planar_ends < 0) throw InvalidArgument("end count must be non-negative");
  SurfaceSignature s;
  s.orientability = crosscaps % 2 == 0 ? OrientabilityClass::EvenNonorientable : OrientabilityClass::OddNonorientable;
  s.genus = 0;
  s.crosscaps = crosscaps;
  s.ends.assign(planar_ends, EndLabel{});
  return s;
}

int SurfaceSignature::nonplanar_ends() const {
  int n = 0;
  for (const auto& e : ends) n += e.planar ? 0 : 1;
  return n;
}

int SurfaceSignature::nonplanar_orientable_ends() const {
  int n = 0;
  for (const auto& e : ends) n += (!e.planar && e.orientable) ? 1 : 0;
  return n;
}

void SurfaceSignature::check() const {
  for (const auto& e : ends) {
    if (e.planar && !e.orientable) throw InvalidArgument("a planar end is always orientable");
  }
  if (genus && *genus < 0) throw InvalidArgument("genus must be non-negative");
  if (crosscaps < 0) throw InvalidArgument("crosscap count must be non-negative");
  bool nonorientable_end = false;
  for (const auto& e : ends) nonorientable_end = nonorientable_end || !e.orientable;
  switch (orientability) {
    case OrientabilityClass::Orientable:
      if (crosscaps != 0 || nonorientable_end) throw InvalidArgument("orientable signature with crosscaps");
      break;
    case OrientabilityClass::EvenNonorientable:
    case OrientabilityClass::OddNonorientable:
      if (crosscaps == 0) throw InvalidArgument("finitely nonorientable signature needs crosscaps");
      if ((crosscaps % 2 == 0) != (orientability == OrientabilityClass::EvenNonorientable)) {
        throw InvalidArgument("crosscap parity does not match the orientability class");
      }
      if (nonorientable_end) throw InvalidArgument("finitely nonorientable surfaces have orientable ends");
      break;
    case OrientabilityClass::InfinitelyNonorientable:
      if (!nonorientable_end) throw InvalidArgument("infinitely nonorientable surfaces need a nonorientable end");
      break;
  }
  const bool infinite_genus = !genus.has_value();
  if (orientability != OrientabilityClass::InfinitelyNonorientable && infinite_genus != (nonplanar_ends() > 0)) {
    throw InvalidArgument("infinite genus and nonplanar ends must occur together");
  }
}

bool SurfaceSignature::finite_type() const {
  return genus.has_value() && nonplanar_ends() == 0 && orientability != OrientabilityClass::InfinitelyNonorientable;
}

std::string SurfaceSignature::str() const {
  std::string out = orientability_class_name(orientability);
  if (orientability == OrientabilityClass::Orientable) {
    out += ", genus " + (genus ? std::to_string(*genus) : std::string("infinite"));
  } else if (orientability != OrientabilityClass::InfinitelyNonorientable) {
    out += ", " + std::to_string(crosscaps) + (crosscaps == 1 ? " crosscap" : " crosscaps");
  }
  const int planar = static_cast<int>(ends.size()) - nonplanar_ends();
  out += ", " + std::to_string(ends.size()) + (ends.size() == 1 ? " end" : " ends");
  if (!ends.empty()) {
    out += " (" + std::to_string(planar) + " planar, " + std::to_string(nonplanar_ends()) + " nonplanar)";
  }
  return out;
}

SurfaceSignature signature_of(const SurfaceReport& r) {
  if (!r.is_manifold || r.components != 1) throw InvalidArgument("signature needs a connected manifold report");
  return r.orientable ? SurfaceSignature::orientable(r.genus_or_crosscaps, r.boundary_circles)
                      : SurfaceSignature::nonorientable(r.genus_or_crosscaps, r.boundary_circles);
}

bool matches(const SurfaceSignature& sig, const SurfaceReport& r) {
  if (!sig.finite_type() || !r.is_manifold || r.components != 1) return false;
  return signature_of(r) == sig;
}

}  // namespace gridforge::surface
