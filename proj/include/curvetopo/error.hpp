#pragma once

#include <stdexcept>
#include <string>

namespace curvetopo {

// Error taxonomy shared by all modules. CLI exit codes map onto these.
enum class errc {
  invalid_input, // violated precondition or malformed data
  undecidable,   // truncation/precision too small to decide; retry larger
  resource,      // iteration or backtracking budget exhausted
  degenerate,    // numerically degenerate configuration; re-randomize
  zero_divisor,  // a declared extension turned out not to be a field
};

class error : public std::runtime_error {
public:
  error(errc k, const std::string& what) : std::runtime_error(what), kind_(k) {}
  errc kind() const { return kind_; }

private:
  errc kind_;
};

[[noreturn]] inline void fail(errc k, const std::string& what) {
  throw error(k, what);
}

inline const char* errc_name(errc k) {
  switch (k) {
    case errc::invalid_input: return "invalid-input";
    case errc::undecidable: return "undecidable";
    case errc::resource: return "resource";
    case errc::degenerate: return "degenerate";
    case errc::zero_divisor: return "zero-divisor";
  }
  return "unknown";
}

} // namespace curvetopo
