#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "corings/picard.hpp"

namespace corings::cli {

using json = nlohmann::ordered_json;

constexpr int format_version = 1;

enum ExitCode { exit_pass = 0, exit_fail = 1, exit_undecided = 2, exit_parse = 3 };

/// Malformed input: bad JSON, unknown fields, inexact or out-of-range
/// scalars, shape mismatches. The message carries the JSON location.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A serialized structure. Scalars are strings: "num/den" or "num" over Q in
/// lowest terms, residues "r" with 0 <= r < p over F_p. Matrices are arrays
/// of rows.
struct Document {
    int version = format_version;
    Field field;
    std::string kind;
    json payload;
    std::vector<std::string> names;
};

Document parse_document(const std::string& text, const std::string& source = "<input>");
Document read_document(const std::string& path);
std::string write_document(const Document& d);

Field parse_field(const std::string& s);

json to_json(const Scalar& s);
json to_json(const Vector& v);
json to_json(const Matrix& m);
json algebra_to_json(const Algebra& a);
json coring_to_json(const Coring& c);
json comodule_to_json(const Bicomodule& m);
json entwining_to_json(const EntwiningStructure& e);
json dk_to_json(const DKStructure& d);
json graded_to_json(const GradedData& g);

Document algebra_document(const Algebra& a);
Document coring_document(const Coring& c);
Document comodule_document(const Bicomodule& m);
Document entwining_document(const EntwiningStructure& e);
Document dk_document(const DKStructure& d);
Document graded_document(const GradedData& g);

AlgebraPtr algebra_from_document(const Document& d);
CoringPtr coring_from_document(const Document& d);
Bicomodule comodule_from_document(const Document& d);
EntwiningStructure entwining_from_document(const Document& d);
DKStructure dk_from_document(const Document& d);
GradedData graded_from_document(const Document& d);
/// Endomorphism (φ, ρ) of `c` from a morphism document with "phi" and "rho".
CoringMorphism morphism_from_document(const Document& d, const CoringPtr& c);
/// A named matrix field of a morphism or dual-element payload.
Matrix matrix_field(const Document& d, const std::string& key, std::size_t rows, std::size_t cols);

/// Entry point shared by the executable and the tests. Returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace corings::cli
