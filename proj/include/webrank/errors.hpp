#ifndef WEBRANK_ERRORS_HPP
#define WEBRANK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace webrank {

// Error codes shared by the library, the CLI exit-code mapping and the
// python bindings.
enum class errc {
    variable_mismatch,
    division_by_non_unit,
    composition_not_local,
    not_invertible_at_origin,
    singular_foliation,
    not_transverse,
    degenerate_cross_ratio,
    not_adapted,
    non_constant_cross_ratio,
    internal_invariant_violation,
    not_curved_at_origin,
    strict_form_required,
    no_unit_direction,
    invalid_parameter,
    field_mismatch,
    parse_error,
};

const char* errc_name(errc code);

// True for degeneracies of the mathematical input (CLI exit code 2),
// false for usage/validation errors (exit code 1).
bool errc_is_degeneracy(errc code);

class WebError : public std::runtime_error {
  public:
    WebError(errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
          code_(code), detail_(detail) {}

    errc code() const { return code_; }
    const std::string& detail() const { return detail_; }

  private:
    errc code_;
    std::string detail_;
};

[[noreturn]] inline void fail(errc code, const std::string& detail) {
    throw WebError(code, detail);
}

}  // namespace webrank

#endif
