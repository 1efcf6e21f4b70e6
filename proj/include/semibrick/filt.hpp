#pragma once

// Filt-closure of a set of classes, with certificates: a chain
// 0 = X_0 >-> X_1 >-> ... >-> X_l = X of inflations whose successive
// cokernels lie in the generating set.

#include <optional>
#include <string>
#include <vector>

#include "semibrick/universe.hpp"

namespace semibrick {

struct FiltrationStep {
  Mor inflation;  // X_{i-1} -> X_i
  IsoClassId factor;
};

struct FiltrationCertificate {
  IsoClassId object;
  std::vector<FiltrationStep> steps;

  std::size_t length() const noexcept { return steps.size(); }
};

/// A certificate for x ∈ Filt(s), or nullopt. Searches deflations x ->> S
/// with S ∈ s and recurses on the kernel; certificates are validated
/// before they are returned.
std::optional<FiltrationCertificate> filt_contains(const Universe& u, const ExactCtx& ctx, const ClassSet& s,
                                                   IsoClassId x);

struct FiltClosure {
  ClassSet members;
  std::vector<std::optional<FiltrationCertificate>> certificates;  // indexed by class id
};

/// Filt(s) ∩ window, computed level by level in total dimension.
FiltClosure filt_closure_with_certificates(const Universe& u, const ExactCtx& ctx, const ClassSet& s);
ClassSet filt_closure(const Universe& u, const ExactCtx& ctx, const ClassSet& s);

/// nullopt when the certificate is valid; otherwise the first failing reason.
std::optional<std::string> validate_certificate(const Universe& u, const ExactCtx& ctx, const ClassSet& s,
                                                const FiltrationCertificate& cert);

struct ExtClosure {
  ClassSet members;
  std::vector<ClassSet> added;  // classes added by iteration 1, 2, ...
  std::vector<TruncationEvent> events;

  bool ambiguous() const;  // some unresolved truncation event occurred
};

/// Least extension-closed set containing s and 0, by fixpoint iteration over
/// conflations_between.
ExtClosure smallest_ext_closed(const Universe& u, const ExactCtx& ctx, const ClassSet& s);

struct FromBrickViolation {
  IsoClassId brick;
  IsoClassId target;
  Mor phi;
  std::string reason;
};

struct PropertyReport {
  std::uint64_t checked = 0;  // (S, Y, φ) triples
  std::vector<FromBrickViolation> violations;

  bool pass() const noexcept { return violations.empty(); }
};

/// Every φ: S -> Y with S ∈ s and Y ∈ Filt(s) is zero, or an inflation whose
/// cokernel lies in Filt(s). Throws PreconditionFailed unless s is a semibrick.
PropertyReport check_frombrick(const Universe& u, const ExactCtx& ctx, const ClassSet& s);

struct CertificateSlices {
  FiltrationCertificate prefix;    // X_i, length i
  FiltrationCertificate quotient;  // X / X_i, length l - i
};

/// Truncates the chain at i and pushes its tail through X ->> X/X_i. Both
/// results are validated; throws InvalidArgument when i > length.
CertificateSlices certificate_slices(const Universe& u, const ExactCtx& ctx, const ClassSet& s,
                                     const FiltrationCertificate& cert, std::size_t i);

}  // namespace semibrick
