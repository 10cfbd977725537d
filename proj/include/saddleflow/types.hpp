#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace saddleflow {

/// Phase-space point (u1, u2, v1, v2), optionally time-stamped.
struct PhaseState {
  double u1 = 0.0;
  double u2 = 0.0;
  double v1 = 0.0;
  double v2 = 0.0;
  std::optional<double> t;

  double& operator[](int i) {
    switch (i) {
      case 0: return u1;
      case 1: return u2;
      case 2: return v1;
      default: return v2;
    }
  }
  double operator[](int i) const {
    switch (i) {
      case 0: return u1;
      case 1: return u2;
      case 2: return v1;
      default: return v2;
    }
  }

  bool finite() const {
    return std::isfinite(u1) && std::isfinite(u2) && std::isfinite(v1) &&
           std::isfinite(v2);
  }
  double norm_inf() const {
    return std::max(std::max(std::abs(u1), std::abs(u2)),
                    std::max(std::abs(v1), std::abs(v2)));
  }
};

inline PhaseState operator+(PhaseState a, const PhaseState& b) {
  a.u1 += b.u1;
  a.u2 += b.u2;
  a.v1 += b.v1;
  a.v2 += b.v2;
  return a;
}
inline PhaseState operator-(PhaseState a, const PhaseState& b) {
  a.u1 -= b.u1;
  a.u2 -= b.u2;
  a.v1 -= b.v1;
  a.v2 -= b.v2;
  return a;
}
inline PhaseState operator*(double s, PhaseState a) {
  a.u1 *= s;
  a.u2 *= s;
  a.v1 *= s;
  a.v2 *= s;
  return a;
}

/// The Z2 involution S: (u1, v1) -> (-u1, -v1).
inline PhaseState symmetry_image(PhaseState x) {
  x.u1 = -x.u1;
  x.v1 = -x.v1;
  return x;
}

/// Eigenvalue configuration of the saddle: 0 < lambda1 <= lambda2.
enum class CaseTag { Equal, Between, Resonant2, Beyond2 };

std::string to_string(CaseTag tag);
CaseTag case_tag_from_string(const std::string& s);

struct Eigendata {
  double lambda1 = 1.0;
  double lambda2 = 1.0;
  CaseTag case_tag = CaseTag::Equal;

  double gamma() const { return lambda1 / lambda2; }
};

/// Validates the lambda pair against the declared case; throws on mismatch.
Eigendata make_eigendata(CaseTag tag, double lambda1, double lambda2);

/// Deduces the case from a valid pair 0 < lambda1 <= lambda2.
CaseTag classify_case(double lambda1, double lambda2);

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NumericsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace saddleflow
