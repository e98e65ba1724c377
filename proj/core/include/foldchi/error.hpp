#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace foldchi {

enum class Errc {
    invalid_graph,
    unknown_vertex,
    wrong_codim,
    codim_too_small,
    non_spherical_singular_value,
    odd_source_dimension,
    invalid_sequence,
    theorem_text_convention_underflow,
    invalid_argument,
    not_a_forest,
    bad_determinant,
    overflow,
    too_many_tori,
    syntax_error,
    schema_error,
    validation_error,
};

std::string_view to_string(Errc code);

// Every library failure is reported through this type; the code is the
// stable, testable part, the message is for humans.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace foldchi
