#include "zsindex/error.hpp"

namespace zsindex {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_modulus: return "invalid-modulus";
    case Errc::not_a_unit: return "not-a-unit";
    case Errc::invalid_sequence: return "invalid-sequence";
    case Errc::invalid_family: return "invalid-family";
    case Errc::precondition: return "precondition";
    case Errc::lemma_violation: return "lemma-violation";
    case Errc::hypotheses_not_met: return "hypotheses-not-met";
    case Errc::certificate_validation: return "certificate-validation-failure";
    case Errc::usage: return "usage";
  }
  return "unknown";
}

}  // namespace zsindex
