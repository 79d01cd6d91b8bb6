#include "acm5/error.hpp"

namespace acm5 {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ModeMismatch: return "mode-mismatch";
    case ErrorKind::UnsupportedSymbol: return "unsupported-symbol";
    case ErrorKind::MissingDerivation: return "missing-derivation";
    case ErrorKind::ExtensionOverflow: return "extension-overflow";
    case ErrorKind::SymbolicResidue: return "symbolic-residue";
    case ErrorKind::Rank: return "rank";
    case ErrorKind::Ambiguity: return "ambiguity";
    case ErrorKind::NotGeneralizedQuasiSasaki: return "not-generalized-quasi-sasaki";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::IntegrabilityConstraint: return "integrability-constraint";
    case ErrorKind::DegenerateInput: return "degenerate-input";
    case ErrorKind::InternalConsistency: return "internal-consistency";
    case ErrorKind::Verification: return "verification-failure";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Schema: return "schema";
  }
  return "unknown";
}

}  // namespace acm5
