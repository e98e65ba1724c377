#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "foldchi/error.hpp"
#include "foldchi/foldcore.hpp"
#include "foldchi/mfunctions.hpp"
#include "foldchi/plumbing.hpp"
#include "foldchi/roundfold.hpp"

// JSON documents read and written by the foldchi tool.
//
// Target graph (strict, unknown keys rejected):
//   {"n": 4, "k": 2, "root": "v0",
//    "vertices": [{"id": "v0", "chi": 0}, {"id": "v1", "chi": 1, "depth": 1}],
//    "edges": [{"from": "v0", "to": "v1", "lambda": "min", "sigma": "+", "chiS": 0}]}
// "depth" is optional on input and checked against the tree; it is never written.
//
// Critical sequence:  {"n": 3, "events": [{"lambda": "min", "sigma": "+"}, ...]}
// Nesting forest:     {"n": 5, "k": 2, "nodes": [{"id": "a", "parent": null, "lambda": "min", "sigma": "+"}]}
// 2x2 matrix:         [[a, b], [c, d]]  (row-major; column 1 = base direction, column 2 = fiber direction)
// Factor list:        [e_1, ..., e_l]
// Plumbing input:     {"g": 1, "b": 2, "attachings": [[[a, b], [c, d]], ...]}
namespace foldchi {

struct SchemaIssue {
    std::string pointer;  // RFC 6901 JSON pointer into the document
    std::string message;
};

/// Thrown by every parser here. code() is syntax_error, schema_error or
/// validation_error; issues carry pointer locations, and for validation
/// errors `report` holds the structural violations.
class ParseError : public Error {
public:
    ParseError(Errc code, std::vector<SchemaIssue> issues, ValidationReport report = {});

    const std::vector<SchemaIssue>& issues() const { return issues_; }
    const ValidationReport& report() const { return report_; }

private:
    std::vector<SchemaIssue> issues_;
    ValidationReport report_;
};

TargetGraph parse_target_graph_json(std::string_view doc);
/// Canonical form: keys sorted, vertices by id, edges sorted, 2-space indent.
std::string serialize_target_graph(const TargetGraph& g);

CriticalSequence parse_critical_sequence_json(std::string_view doc);

struct ForestInput {
    Codim codim;
    NestingForest forest;
};
ForestInput parse_forest_json(std::string_view doc);

Mat2Z parse_matrix_json(std::string_view doc);
std::vector<std::int64_t> parse_factors_json(std::string_view doc);

struct PlumbingInput {
    std::int64_t genus = 0;
    std::int64_t boundary = 1;
    std::vector<Mat2Z> attachings;
};
PlumbingInput parse_plumbing_json(std::string_view doc);

}  // namespace foldchi
