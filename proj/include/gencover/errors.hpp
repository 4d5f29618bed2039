#ifndef GENCOVER_ERRORS_HPP
#define GENCOVER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gencover {

enum class errc {
    zero_polynomial,
    degree_too_large,
    inseparable,
    reducible,
    non_integral_genus,
    branch_point,
    group_too_large,
    cyclotomic_obstruction,
    unsupported,
    degenerate,
    wrong_degree,
    singular,
    not_squarefree,
    unsupported_m,
    additive_small_prime,
    precision_exceeded,
    syntax_error,
    unknown_variable,
    internal,
};

const char* errc_name(errc c);

// Typed domain error. Everything the library throws on bad-but-well-formed
// input is one of these; std::logic_error is reserved for internal bugs.
class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace gencover

#endif
