// Copyright 2026 tilesampler developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace tilesampler {

/// Base of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid user input: malformed domains, files, codec inputs.
struct InvalidInput : Error {
    using Error::Error;
};
struct InvalidDomain : InvalidInput {
    using InvalidInput::InvalidInput;
};
struct OverlapError : InvalidInput {
    using InvalidInput::InvalidInput;
};
struct CoverageError : InvalidInput {
    using InvalidInput::InvalidInput;
};
struct OutOfDomainError : InvalidInput {
    using InvalidInput::InvalidInput;
};
struct DomainMismatchError : InvalidInput {
    using InvalidInput::InvalidInput;
};
struct OutOfGridError : InvalidInput {
    using InvalidInput::InvalidInput;
};
struct CapacityError : InvalidInput {
    using InvalidInput::InvalidInput;
};
struct IceRuleViolation : InvalidInput {
    using InvalidInput::InvalidInput;
};
struct BoundaryFaceError : InvalidInput {
    using InvalidInput::InvalidInput;
};
struct StateSpaceTooLarge : InvalidInput {
    using InvalidInput::InvalidInput;
};
struct EmptyArchive : InvalidInput {
    using InvalidInput::InvalidInput;
};

/// A state grid whose height cycles do not close. Always a corrupted input.
struct InconsistencyError : Error {
    using Error::Error;
};

/// The domain or boundary admits no configuration.
struct Untileable : Error {
    using Error::Error;
};
/// A domain with an odd number of faces; rejected when the domain is built.
struct OddFaceCount : Untileable {
    using Untileable::Untileable;
};
struct InfeasibleBoundary : Untileable {
    using Untileable::Untileable;
};

/// Six-vertex weights outside the monotone regime (a <= c, b <= c).
struct NonMonotoneWeights : Error {
    using Error::Error;
};

struct ConvergenceCapExceeded : Error {
    using Error::Error;
};

}  // namespace tilesampler
