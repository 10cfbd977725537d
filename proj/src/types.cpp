#include "saddleflow/types.hpp"

#include <cmath>

namespace saddleflow {

namespace {
constexpr double kRatioTol = 1e-12;
}

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Equal: return "equal";
    case CaseTag::Between: return "between";
    case CaseTag::Resonant2: return "resonant2";
    case CaseTag::Beyond2: return "beyond2";
  }
  return "equal";
}

CaseTag case_tag_from_string(const std::string& s) {
  if (s == "equal") return CaseTag::Equal;
  if (s == "between") return CaseTag::Between;
  if (s == "resonant2") return CaseTag::Resonant2;
  if (s == "beyond2") return CaseTag::Beyond2;
  throw ModelError("unknown eigenvalue case '" + s +
                   "' (expected equal|between|resonant2|beyond2)");
}

CaseTag classify_case(double lambda1, double lambda2) {
  if (!(lambda1 > 0.0) || !(lambda2 > 0.0) || lambda1 > lambda2 * (1.0 + kRatioTol))
    throw ModelError("eigenvalues must satisfy 0 < lambda1 <= lambda2");
  const double r = lambda2 / lambda1;
  if (std::abs(r - 1.0) <= kRatioTol) return CaseTag::Equal;
  if (std::abs(r - 2.0) <= kRatioTol) return CaseTag::Resonant2;
  return r < 2.0 ? CaseTag::Between : CaseTag::Beyond2;
}

Eigendata make_eigendata(CaseTag tag, double lambda1, double lambda2) {
  const CaseTag deduced = classify_case(lambda1, lambda2);
  if (deduced != tag)
    throw ModelError("eigenvalue pair (" + std::to_string(lambda1) + ", " +
                     std::to_string(lambda2) + ") belongs to case '" +
                     to_string(deduced) + "', not '" + to_string(tag) + "'");
  return Eigendata{lambda1, lambda2, tag};
}

}  // namespace saddleflow
