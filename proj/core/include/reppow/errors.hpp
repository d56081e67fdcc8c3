#pragma once

#include <stdexcept>
#include <string>

namespace reppow {

enum class Errc {
  invalid_base,
  malformed_word,
  empty_word,
  out_of_domain,
  invalid_exponent,
  ring_mismatch,
  unresolved_base,
  too_large,
  checkpoint_error,
  bad_family,
  unknown_family,
  malformed_corpus,
};

const char* errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the Errc codes so that
/// callers (and the CLI exit-code mapping) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_base: return "invalid-base";
    case Errc::malformed_word: return "malformed-word";
    case Errc::empty_word: return "empty-word";
    case Errc::out_of_domain: return "out-of-domain";
    case Errc::invalid_exponent: return "invalid-exponent";
    case Errc::ring_mismatch: return "ring-mismatch";
    case Errc::unresolved_base: return "unresolved-base";
    case Errc::too_large: return "too-large";
    case Errc::checkpoint_error: return "checkpoint-error";
    case Errc::bad_family: return "bad-family";
    case Errc::unknown_family: return "unknown-family";
    case Errc::malformed_corpus: return "malformed-corpus";
  }
  return "unknown";
}

}  // namespace reppow
