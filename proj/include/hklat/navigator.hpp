#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hklat/lattice.hpp"
#include "hklat/reflections.hpp"

namespace hklat {

enum class DeformationType { kK3Hilb, kKummer, kOther };
enum class Verdict { kWspHolds, kConditionalOnRlf, kHypothesisFails, kInvalidInput };

const char* to_string(DeformationType type);
const char* to_string(Verdict verdict);
DeformationType parse_deformation_type(const std::string& text);
Verdict parse_verdict(const std::string& text);

/// CLI exit status for a verdict: 0 holds, 10 conditional, 20 hypothesis
/// fails, 2 invalid input.
int exit_code(Verdict verdict);

/// An irreducible symplectic variety of dimension 2n, seen through its
/// Neron-Severi lattice, an ample class and optionally a finite list of
/// prime exceptional classes.
struct VarietyDescriptor {
  DeformationType deformation_type = DeformationType::kOther;
  int n = 1;
  Lattice ns_lattice;
  VectorQ ample;
  std::vector<VectorQ> walls;
};

/// Empty when the descriptor is valid, otherwise the first failed invariant.
std::optional<std::string> validate(const VarietyDescriptor& desc);

struct CertificateStep {
  std::string tag;     // which fact is applied, e.g. "isotropic-witness"
  std::string anchor;  // the statement it relies on
  nlohmann::json data;

  friend bool operator==(const CertificateStep&, const CertificateStep&) = default;
};

struct Certificate {
  Verdict verdict = Verdict::kInvalidInput;
  std::vector<CertificateStep> steps;
  std::optional<VectorQ> witness;          // primitive isotropic class, (w, ample) > 0
  std::optional<ReflectionWord> word;      // walk of the witness into the closed BK cone
  std::vector<std::string> notes;
};

/// Replays the implication chain "isotropic NS class + RLF => WSP":
///  1. search for an isotropic class in NS_Q (none is impossible for
///     rho >= 5 and raises kInternal);
///  2. no class: hypothesis_fails;
///  3. a class and K3^[n] or Kummer type: RLF holds as an axiom, so
///     wsp_holds;
///  4. a class and any other type: wsp_conditional_on_rlf.
/// When walls are given the witness is also walked into the closed
/// birational Kahler cone and the reflection word recorded.
Certificate check_wsp(const VarietyDescriptor& desc);

struct VerificationReport {
  bool ok = false;
  std::vector<std::string> diagnoses;
};

/// Re-checks every step of the certificate against the descriptor with the
/// underlying operations, and that the verdict follows from the steps.
VerificationReport verify_certificate(const VarietyDescriptor& desc, const Certificate& cert);

}  // namespace hklat
