#pragma once

#include <stdexcept>
#include <string>

namespace hdx {

/// Base class for every error raised by this library.
struct HdxError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- complex construction and queries ---
struct MultifaceError : HdxError { using HdxError::HdxError; };
struct SelfLoopError : HdxError { using HdxError::HdxError; };
struct PurityError : HdxError { using HdxError::HdxError; };
struct DimensionError : HdxError { using HdxError::HdxError; };
struct FaceNotFoundError : HdxError { using HdxError::HdxError; };
struct LevelError : HdxError { using HdxError::HdxError; };
struct DomainError : HdxError { using HdxError::HdxError; };

// --- operators and spectra ---
struct OperatorError : HdxError { using HdxError::HdxError; };
struct ParameterError : HdxError { using HdxError::HdxError; };
struct HypothesisError : HdxError { using HdxError::HdxError; };
struct SetError : HdxError { using HdxError::HdxError; };

// --- lifting ---
struct PartialSigningError : HdxError { using HdxError::HdxError; };
struct StructureViolation : HdxError { using HdxError::HdxError; };
struct SpectralViolation : HdxError { using HdxError::HdxError; };

// --- engines ---
struct RegularityError : HdxError { using HdxError::HdxError; };
struct NicenessError : HdxError { using HdxError::HdxError; };
struct AdmissibilityError : HdxError { using HdxError::HdxError; };
struct StateError : HdxError { using HdxError::HdxError; };

}  // namespace hdx
