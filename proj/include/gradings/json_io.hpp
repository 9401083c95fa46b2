#pragma once

// Canonical JSON interchange: keys sorted, rationals as reduced strings,
// components sorted by element. Malformed input throws ParseError.

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "gradings/liegrad.hpp"

namespace gradings {

using Json = nlohmann::json;

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& message) : std::runtime_error(message) {}
};

Json to_json(const FinAbGroup& g);
Json to_json(const GroupElem& g);
Json to_json(const Character& c);
Json to_json(const CycNum& x);
/// {"rows", "cols", "conductor", "entries"}: entries row-major, each the list
/// of phi(conductor) residue coefficients.
Json to_json(const Mat& m);
Json to_json(const Involution& inv);
Json to_json(const SignFunction& s);
Json to_json(const Grading& g);
/// Grading JSON with the "involution" key and, when present, "signs".
Json to_json(const InvolutionGrading& d);
Json to_json(const VerificationReport& r);
Json to_json(const ObstructionReport& r);

FinAbGroup group_from_json(const Json& j);
GroupElem elem_from_json(const FinAbGroup& g, const Json& j);
Character character_from_json(const FinAbGroup& g, const Json& j);
CycNum cycnum_from_json(const Json& j);
Mat mat_from_json(const Json& j);
Involution involution_from_json(const Json& j);
Grading grading_from_json(const Json& j);
/// Requires kind "involution" and the "involution" key.
InvolutionGrading involution_grading_from_json(const Json& j);

/// Two-space indented dump with arrays of scalars kept on one line and a
/// trailing newline.
std::string dump_canonical(const Json& j);
Json parse_json_text(const std::string& text);

}  // namespace gradings
