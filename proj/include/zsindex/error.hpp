#pragma once

#include <stdexcept>
#include <string>

namespace zsindex {

enum class Errc {
  invalid_modulus,
  not_a_unit,
  invalid_sequence,
  invalid_family,
  precondition,
  lemma_violation,
  hypotheses_not_met,
  certificate_validation,
  usage,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace zsindex
