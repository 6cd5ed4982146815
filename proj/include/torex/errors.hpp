#pragma once

#include <stdexcept>
#include <string>

namespace torex {

/// Base class for every error this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input file / JSON / catalog-spec parsing problems (carries field context).
struct ParseError : Error {
    using Error::Error;
};

/// Operands belong to incompatible dimensions or volumes.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// Exact-mode and float-mode objects were mixed at the driver level.
struct ModeMismatch : Error {
    using Error::Error;
};

/// Basis matrix is not invertible.
struct SingularBasis : Error {
    using Error::Error;
};

/// Short-vector search exceeded the configured candidate cap.
struct EnumerationOverflow : Error {
    using Error::Error;
};

/// Multiplicity-counted eigenvalue index lies past the enumerated levels.
struct IndexBeyondEnumeration : Error {
    using Error::Error;
};

/// A function claimed to be a Laplacian eigenfunction is not one.
struct NotAnEigenfunction : Error {
    using Error::Error;
};

/// An operation requiring real-valued input received a non-real object.
struct NonRealInput : Error {
    using Error::Error;
};

/// Deformation direction is not trace-free against the reference form.
struct TraceNotZero : Error {
    using Error::Error;
};

/// Deformed metric stopped being positive definite at the requested t.
struct NotPositive : Error {
    using Error::Error;
};

/// Problem size exceeds the guard of an exhaustive-search routine.
struct TooLarge : Error {
    using Error::Error;
};

/// Float-mode verdict sits too close to the feasibility boundary to trust.
struct NumericallyAmbiguous : Error {
    using Error::Error;
};

/// Catalog parameter outside its documented range.
struct ParameterOutOfRange : Error {
    using Error::Error;
};

/// Catalog name not recognized.
struct UnknownEntry : Error {
    using Error::Error;
};

/// Lattice file mixes exact rational entries with float entries.
struct MixedMode : ParseError {
    using ParseError::ParseError;
};

/// Differential-form degree outside the supported range.
struct UnsupportedDegree : Error {
    using Error::Error;
};

/// A submitted weight certificate failed one of the verification checks.
struct CertificateRejected : Error {
    using Error::Error;
};

/// Internal re-verification of a freshly produced certificate failed.
struct CertificateInvalid : Error {
    using Error::Error;
};

}  // namespace torex
