// Error type shared by all pia modules.
#ifndef PIA_ERRORS_HPP
#define PIA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pia {

enum class Errc {
  parse,              // malformed input text
  out_of_range_entry, // table entry outside 0..n-1
  non_associative,    // associativity witness found
  invalid_argument,   // bad sizes, unknown catalog name, ...
  ambient_mismatch,   // partial maps over different carriers
  limit_exceeded,     // closure grew past its cap
  not_closed,         // abstract_cayley input not closed under composition
  not_a_refinement,   // bar-lift target does not coarsen the domain partition
  small_domain,       // generator tuple requested with |I| <= 1
  not_in_domain,      // apply_w argument outside the descriptor domain
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace pia

#endif
