#include "idem/error.hpp"

namespace idem {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonIdempotent: return "NonIdempotent";
    case ErrorKind::BadTableLength: return "BadTableLength";
    case ErrorKind::EntryOutOfRange: return "EntryOutOfRange";
    case ErrorKind::DuplicateOpName: return "DuplicateOpName";
    case ErrorKind::SignatureMismatch: return "SignatureMismatch";
    case ErrorKind::NotACongruence: return "NotACongruence";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::ElementNotGenerated: return "ElementNotGenerated";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ProjectionNotFull: return "ProjectionNotFull";
    case ErrorKind::NotCompatible: return "NotCompatible";
    case ErrorKind::PostconditionFailed: return "PostconditionFailed";
    case ErrorKind::EmptyResult: return "EmptyResult";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::CaseNotRecognized: return "CaseNotRecognized";
    case ErrorKind::WitnessNotFound: return "WitnessNotFound";
    case ErrorKind::UnsupportedCombination: return "UnsupportedCombination";
    case ErrorKind::NotSmooth: return "NotSmooth";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace idem
