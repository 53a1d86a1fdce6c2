#pragma once

#include <stdexcept>
#include <string>

namespace eh {

enum class errc {
  bad_signature,
  non_hyperbolic,
  already_fuchsian,
  non_integral,
  non_integral_genus,
  genus_too_small,
  bad_parameter,
  not_prime,
  does_not_split,
  zero_modulus,
  not_applicable,
  spec_mismatch,
  family_unsupported,
  not_full,
  not_found,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
  error(errc c, const std::string& what)
      : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw error(c, what); }

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::bad_signature: return "BadSignature";
    case errc::non_hyperbolic: return "NonHyperbolic";
    case errc::already_fuchsian: return "AlreadyFuchsian";
    case errc::non_integral: return "NonIntegral";
    case errc::non_integral_genus: return "NonIntegralGenus";
    case errc::genus_too_small: return "GenusTooSmall";
    case errc::bad_parameter: return "BadParameter";
    case errc::not_prime: return "NotPrime";
    case errc::does_not_split: return "DoesNotSplit";
    case errc::zero_modulus: return "ZeroModulus";
    case errc::not_applicable: return "NotApplicable";
    case errc::spec_mismatch: return "SpecMismatch";
    case errc::family_unsupported: return "FamilyUnsupported";
    case errc::not_full: return "NotFull";
    case errc::not_found: return "NotFound";
  }
  return "Unknown";
}

}  // namespace eh
