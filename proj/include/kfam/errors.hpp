#pragma once

#include <stdexcept>
#include <string>

namespace kfam {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Construction / validation
class PurityError : public Error { public: using Error::Error; };
class RangeError : public Error { public: using Error::Error; };
class FormatError : public Error { public: using Error::Error; };
class CompleteComplementError : public Error { public: using Error::Error; };
class OverlapError : public Error { public: using Error::Error; };
class KMismatchError : public Error { public: using Error::Error; };
class EmptyGraphError : public Error { public: using Error::Error; };

// Guards
class SizeError : public Error { public: using Error::Error; };

// Structure
class NotAFacetError : public Error { public: using Error::Error; };
class NotATreeError : public Error { public: using Error::Error; };

// A matching-number-1 family whose remainder fits neither shape of the
// join decomposition. Raised, never masked: it would falsify the
// decomposition lemma and must surface as a witness.
class StructureError : public Error { public: using Error::Error; };

// Numerics
class ConvergenceError : public Error { public: using Error::Error; };

// A proved statement failed beyond tolerance. This is a bug signal,
// distinct from an open-conjecture finding.
class TheoremViolation : public Error { public: using Error::Error; };

} // namespace kfam
