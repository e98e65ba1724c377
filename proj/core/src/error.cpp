#include "foldchi/error.hpp"

namespace foldchi {

std::string_view to_string(Errc code) {
    switch (code) {
        case Errc::invalid_graph: return "InvalidGraph";
        case Errc::unknown_vertex: return "UnknownVertex";
        case Errc::wrong_codim: return "WrongCodim";
        case Errc::codim_too_small: return "CodimTooSmall";
        case Errc::non_spherical_singular_value: return "NonSphericalSingularValue";
        case Errc::odd_source_dimension: return "OddSourceDimension";
        case Errc::invalid_sequence: return "InvalidSequence";
        case Errc::theorem_text_convention_underflow: return "TheoremTextConventionUnderflow";
        case Errc::invalid_argument: return "InvalidArgument";
        case Errc::not_a_forest: return "NotAForest";
        case Errc::bad_determinant: return "BadDeterminant";
        case Errc::overflow: return "Overflow";
        case Errc::too_many_tori: return "TooManyTori";
        case Errc::syntax_error: return "SyntaxError";
        case Errc::schema_error: return "SchemaError";
        case Errc::validation_error: return "ValidationError";
    }
    return "Unknown";
}

}  // namespace foldchi
