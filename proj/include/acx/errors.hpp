#pragma once
#include <stdexcept>
#include <string>

namespace acx {

// Error taxonomy. Every throwing site uses one of these so callers (and the
// CLI) can map failures to a stable category:
//   exit 1 = a mathematical property/precondition failed on valid input
//   exit 2 = malformed input / usage error
//   exit 3 = capability limit (irrational spectrum, search cap) -- not a bug,
//            the instance is simply outside what exact rational arithmetic
//            or the configured bounds can decide.
struct Error : std::runtime_error {
    std::string kind;
    int exit_code;
    Error(std::string k, const std::string& what, int code)
        : std::runtime_error(k + ": " + what), kind(std::move(k)), exit_code(code) {}
};

#define ACX_ERROR(NAME, CODE)                                            \
    struct NAME : Error {                                                \
        explicit NAME(const std::string& what) : Error(#NAME, what, CODE) {} \
    }

ACX_ERROR(MalformedInput, 2);        // bad shapes, unparsable numbers, bad JSON
ACX_ERROR(NonRationalSpectrum, 3);   // charpoly has an irreducible factor of degree >= 2
ACX_ERROR(BoundExceeded, 3);         // configured search/size cap hit
ACX_ERROR(NotDivisible, 1);          // exact polynomial division impossible
ACX_ERROR(NotOnVariety, 1);          // quadruple violates [X,Y] + i*j = 0
ACX_ERROR(NonGeneric, 1);            // Y does not have distinct eigenvalues
ACX_ERROR(InternalInconsistency, 1); // a proven-impossible case was reached
ACX_ERROR(NoCommonFlag, 1);          // simultaneous triangularization failed
ACX_ERROR(NotSigmaPrime, 1);         // a decomposition exceeds p(alpha)
ACX_ERROR(NotSymmetric, 1);          // spherical action on a non-symmetric input

#undef ACX_ERROR

} // namespace acx
