#include "hklat/navigator.hpp"

#include <algorithm>

#include "hklat/cones.hpp"
#include "hklat/io.hpp"
#include "hklat/isotropy.hpp"

namespace hklat {
namespace {

using nlohmann::json;

namespace tag {
constexpr const char* kInvalid = "invalid-input";
constexpr const char* kDescriptor = "descriptor";
constexpr const char* kWitness = "isotropic-witness";
constexpr const char* kNoWitness = "no-isotropic-class";
constexpr const char* kWalk = "reflection-to-bk-cone";
constexpr const char* kRlfAxiom = "rlf-axiom";
constexpr const char* kRlfImpliesWsp = "rlf-implies-wsp";
}  // namespace tag

namespace anchor {
constexpr const char* kInvalid = "descriptor invariants: n >= 1, signature (1, rho-1), q(ample) > 0, walls valid";
constexpr const char* kDescriptor = "q restricted to NS(X) has signature (1, rho-1); the ample class has q > 0";
constexpr const char* kWitness = "the boundary of the positive cone meets NS(X)_Q";
constexpr const char* kWitnessByRank = "indefinite rational forms of rank >= 5 represent zero (Hasse-Minkowski)";
constexpr const char* kNoWitness = "q has no nonzero rational zero on NS(X)_Q (local obstruction)";
constexpr const char* kWalk = "reflections in prime exceptional classes move the class into the closed birational Kahler cone";
constexpr const char* kRlfAxiom = "RLF holds for K3^[n]-type and generalized Kummer type (Matsushita), taken as an axiom";
constexpr const char* kRlfImpliesWsp = "RLF(X) together with a nonzero isotropic class in NS(X)_Q implies WSP(X)";
}  // namespace anchor

constexpr const char* kRankTwoNote =
    "WSP for all irreducible symplectic varieties reduces to the case of Picard rank 2 "
    "(informational; not computed)";

bool rlf_axiom_applies(DeformationType type) {
  return type == DeformationType::kK3Hilb || type == DeformationType::kKummer;
}

std::vector<Wall> make_walls(const VarietyDescriptor& desc) {
  std::vector<Wall> walls;
  walls.reserve(desc.walls.size());
  for (const auto& d : desc.walls) walls.emplace_back(desc.ns_lattice, d);
  return walls;
}

const CertificateStep* find_step(const Certificate& cert, const std::string& name) {
  const auto it = std::find_if(cert.steps.begin(), cert.steps.end(),
                               [&](const CertificateStep& s) { return s.tag == name; });
  return it == cert.steps.end() ? nullptr : &*it;
}

}  // namespace

const char* to_string(DeformationType type) {
  switch (type) {
    case DeformationType::kK3Hilb: return "K3_hilb_type";
    case DeformationType::kKummer: return "kummer_type";
    case DeformationType::kOther: return "other";
  }
  return "?";
}

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kWspHolds: return "wsp_holds";
    case Verdict::kConditionalOnRlf: return "wsp_conditional_on_rlf";
    case Verdict::kHypothesisFails: return "hypothesis_fails";
    case Verdict::kInvalidInput: return "invalid_input";
  }
  return "?";
}

DeformationType parse_deformation_type(const std::string& text) {
  for (auto t : {DeformationType::kK3Hilb, DeformationType::kKummer, DeformationType::kOther}) {
    if (text == to_string(t)) return t;
  }
  throw Error(ErrorKind::kParse, "unknown deformation_type '" + text + "'");
}

Verdict parse_verdict(const std::string& text) {
  for (auto v : {Verdict::kWspHolds, Verdict::kConditionalOnRlf, Verdict::kHypothesisFails,
                 Verdict::kInvalidInput}) {
    if (text == to_string(v)) return v;
  }
  throw Error(ErrorKind::kParse, "unknown verdict '" + text + "'");
}

int exit_code(Verdict verdict) {
  switch (verdict) {
    case Verdict::kWspHolds: return 0;
    case Verdict::kConditionalOnRlf: return 10;
    case Verdict::kHypothesisFails: return 20;
    case Verdict::kInvalidInput: return 2;
  }
  return 2;
}

std::optional<std::string> validate(const VarietyDescriptor& desc) {
  const Lattice& lat = desc.ns_lattice;
  if (desc.n < 1) return "n >= 1";
  if (desc.deformation_type == DeformationType::kKummer && desc.n < 2) return "generalized Kummer type needs n >= 2";
  if (!lat.is_hyperbolic()) return "ns_lattice signature (1, rho-1)";
  if (static_cast<std::size_t>(desc.ample.size()) != lat.rank()) return "ample length equals rank";
  if (quadratic(lat, desc.ample).sign() <= 0) return "q(ample) > 0";
  for (std::size_t i = 0; i < desc.walls.size(); ++i) {
    const std::string which = "wall " + std::to_string(i);
    if (static_cast<std::size_t>(desc.walls[i].size()) != lat.rank()) return which + ": length equals rank";
    if (is_zero_vector(desc.walls[i]) || quadratic(lat, desc.walls[i]).sign() >= 0) return which + ": q(d) < 0";
    const Wall wall(lat, desc.walls[i]);
    if (bilinear(lat, wall.d(), desc.ample).sign() <= 0) return which + ": (d, ample) > 0";
    if (!is_integral_reflection(lat, wall)) return which + ": reflection is integral";
  }
  return std::nullopt;
}

Certificate check_wsp(const VarietyDescriptor& desc) {
  Certificate cert;
  if (const auto failed = validate(desc)) {
    cert.verdict = Verdict::kInvalidInput;
    cert.steps.push_back({tag::kInvalid, anchor::kInvalid, {{"failed", *failed}}});
    return cert;
  }
  const Lattice& lat = desc.ns_lattice;
  const std::size_t rho = lat.rank();
  cert.steps.push_back({tag::kDescriptor,
                        anchor::kDescriptor,
                        {{"rank", rho},
                         {"signature", {lat.signature().positive, lat.signature().negative}},
                         {"q_ample", format_rational(quadratic(lat, desc.ample))},
                         {"n", desc.n},
                         {"deformation_type", to_string(desc.deformation_type)}}});

  const IsotropySearch search = find_isotropic_vector(lat);
  if (!search.witness) {
    if (rho >= 5) {
      throw Error(ErrorKind::kInternal, "no isotropic class on an indefinite form of rank >= 5");
    }
    const auto diag = diagonalize(lat.gram()).diagonal;
    json failing = json::array();
    for (const auto& place : relevant_places(diag)) {
      if (!is_locally_isotropic(diag, place)) failing.push_back(place.to_string());
    }
    cert.verdict = Verdict::kHypothesisFails;
    cert.steps.push_back({tag::kNoWitness, anchor::kNoWitness, {{"rank", rho}, {"anisotropic_at", failing}}});
    cert.notes.push_back("the isotropy hypothesis is not met; no claim is made about WSP");
    return cert;
  }

  VectorQ witness = search.witness->vector;
  if (bilinear(lat, witness, desc.ample).sign() < 0) witness = -witness;
  cert.witness = witness;
  cert.steps.push_back({tag::kWitness,
                        rho >= 5 ? anchor::kWitnessByRank : anchor::kWitness,
                        {{"witness", io::to_json(witness)},
                         {"q", "0"},
                         {"pairing_with_ample", format_rational(bilinear(lat, witness, desc.ample))},
                         {"bound_used", search.bound_used},
                         {"forced_by_rank", rho >= 5}}});

  if (!desc.walls.empty()) {
    const std::vector<Wall> walls = make_walls(desc);
    const WalkResult walk = walk_to_bk_cone(lat, walls, desc.ample, witness);
    json trace = json::array();
    for (const auto& t : walk.trace) trace.push_back(format_rational(t));
    cert.word = walk.word;
    cert.steps.push_back({tag::kWalk, anchor::kWalk,
                          {{"word", walk.word}, {"beta", io::to_json(walk.beta)}, {"trace", trace}}});
  }

  if (rlf_axiom_applies(desc.deformation_type)) {
    cert.steps.push_back({tag::kRlfAxiom, anchor::kRlfAxiom,
                          {{"deformation_type", to_string(desc.deformation_type)}}});
    cert.steps.push_back({tag::kRlfImpliesWsp, anchor::kRlfImpliesWsp, {{"conditional", false}}});
    cert.verdict = Verdict::kWspHolds;
  } else {
    cert.steps.push_back({tag::kRlfImpliesWsp, anchor::kRlfImpliesWsp, {{"conditional", true}}});
    cert.verdict = Verdict::kConditionalOnRlf;
    cert.notes.push_back(kRankTwoNote);
  }
  return cert;
}

VerificationReport verify_certificate(const VarietyDescriptor& desc, const Certificate& cert) {
  VerificationReport report;
  auto& diag = report.diagnoses;

  const auto invalid = validate(desc);
  if (invalid) {
    if (cert.verdict != Verdict::kInvalidInput) diag.push_back("descriptor is invalid (" + *invalid + ")");
    report.ok = diag.empty();
    return report;
  }
  if (cert.verdict == Verdict::kInvalidInput) diag.push_back("descriptor is valid but verdict is invalid_input");

  const Lattice& lat = desc.ns_lattice;
  std::optional<VectorQ> witness;

  try {
    for (const auto& step : cert.steps) {
      if (step.tag == tag::kDescriptor) {
        const auto& sig = step.data.at("signature");
        if (sig.at(0).get<std::size_t>() != lat.signature().positive ||
            sig.at(1).get<std::size_t>() != lat.signature().negative) {
          diag.push_back("signature mismatch");
        }
      } else if (step.tag == tag::kWitness) {
        const VectorQ w = io::vector_from_json(step.data.at("witness"));
        if (static_cast<std::size_t>(w.size()) != lat.rank()) {
          diag.push_back("witness has wrong length");
          continue;
        }
        if (is_zero_vector(w)) diag.push_back("witness is zero");
        else if (!quadratic(lat, w).is_zero()) diag.push_back("witness not isotropic");
        else if (!is_integral(w) || primitive(w) != w) diag.push_back("witness not primitive integral");
        if (cert.witness && *cert.witness != w) diag.push_back("witness field disagrees with its step");
        witness = w;
      } else if (step.tag == tag::kNoWitness) {
        if (lat.rank() >= 5) diag.push_back("rank >= 5 forms are always isotropic");
        else if (is_isotropic(lat)) diag.push_back("lattice is isotropic");
      } else if (step.tag == tag::kWalk) {
        if (!witness) {
          diag.push_back("walk without a preceding witness");
          continue;
        }
        const std::vector<Wall> walls = make_walls(desc);
        const ReflectionWord word = step.data.at("word").get<ReflectionWord>();
        if (cert.word && *cert.word != word) diag.push_back("word field disagrees with its step");
        const VectorQ beta = replay(lat, walls, word, *witness);
        if (beta != io::vector_from_json(step.data.at("beta"))) diag.push_back("replayed word does not reproduce beta");
        if (!in_closed_bk_cone(lat, walls, desc.ample, beta)) diag.push_back("beta not in closed BK cone");
        const auto& trace = step.data.at("trace");
        for (std::size_t i = 1; i < trace.size(); ++i) {
          if (!(io::rational_from_json(trace[i]) < io::rational_from_json(trace[i - 1]))) {
            diag.push_back("trace not strictly decreasing");
            break;
          }
        }
      } else if (step.tag == tag::kRlfAxiom) {
        if (!rlf_axiom_applies(desc.deformation_type)) diag.push_back("RLF axiom not applicable");
      } else if (step.tag == tag::kRlfImpliesWsp) {
        if (!witness) diag.push_back("RLF => WSP applied without an isotropic witness");
      } else if (step.tag == tag::kInvalid) {
        // Handled by the verdict check below.
      } else {
        diag.push_back("unknown step '" + step.tag + "'");
      }
    }
  } catch (const std::exception& e) {
    diag.push_back(std::string("malformed step data: ") + e.what());
  }

  const bool has_axiom = find_step(cert, tag::kRlfAxiom) != nullptr;
  const bool has_implication = find_step(cert, tag::kRlfImpliesWsp) != nullptr;
  switch (cert.verdict) {
    case Verdict::kWspHolds:
      if (!has_axiom || !rlf_axiom_applies(desc.deformation_type)) {
        if (std::find(diag.begin(), diag.end(), "RLF axiom not applicable") == diag.end()) {
          diag.push_back("RLF axiom not applicable");
        }
      }
      if (!witness) diag.push_back("wsp_holds without an isotropic witness");
      if (!has_implication) diag.push_back("missing RLF => WSP step");
      break;
    case Verdict::kConditionalOnRlf:
      if (!witness) diag.push_back("conditional verdict without an isotropic witness");
      if (!has_implication) diag.push_back("missing RLF => WSP step");
      break;
    case Verdict::kHypothesisFails:
      if (!find_step(cert, tag::kNoWitness)) diag.push_back("hypothesis_fails without an anisotropy step");
      if (witness) diag.push_back("hypothesis_fails alongside an isotropic witness");
      break;
    case Verdict::kInvalidInput:
      break;
  }
  report.ok = diag.empty();
  return report;
}

}  // namespace hklat
