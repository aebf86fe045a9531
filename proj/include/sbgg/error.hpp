#pragma once

#include <stdexcept>
#include <string>

namespace sbgg {

enum class input_errc {
  invalid_rank,
  invalid_k,
  singularity_too_deep,
  no_regular_conjugate,
  invalid_orbit_element,
  invalid_input,
};

const char* to_string(input_errc code);

/// Rejected user input. The CLI maps this to exit code 1.
class input_error : public std::runtime_error {
public:
  input_error(input_errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  input_errc code() const noexcept { return code_; }

private:
  input_errc code_;
};

/// A structural check failed on data the library built itself. Exit code 2.
class invariant_violation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace sbgg
