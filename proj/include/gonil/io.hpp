#pragma once

#include <json.hpp>
#include <string>
#include <string_view>

#include "gonil/families.hpp"
#include "gonil/geodesic.hpp"
#include "gonil/lorentz.hpp"
#include "gonil/theorems.hpp"

namespace gonil {

using Json = nlohmann::ordered_json;

/// The bracket table of a space file violates the Jacobi identity.
class AlgebraError : public InputError {
   public:
    using InputError::InputError;
};

struct SpaceFile {
    ReductiveSpace space;
    SignatureConvention convention = SignatureConvention::MostlyPlus;
    std::string description;
};

/// Exact rational from a JSON string (or integer). `where` is a JSON pointer
/// used in error messages.
Rational rational_from_json(const Json& j, const std::string& where);
Vector vector_from_json(const Json& j, const std::string& where);
Matrix matrix_from_json(const Json& j, const std::string& where);

/// Parses and validates a space document; build failures are rethrown verbatim.
SpaceFile parse_space(const Json& doc);
SpaceFile parse_space_text(std::string_view text);
/// Reads the file; `bytes` receives its exact content for digesting.
SpaceFile load_space_file(const std::string& path, std::string* bytes = nullptr);
std::string read_file(const std::string& path);

Json space_to_json(const SpaceFile& f);

std::string sha256_hex(std::string_view data);

const char* to_string(SignatureConvention c);
std::optional<SignatureConvention> parse_convention(std::string_view s);

Json to_json(const Rational& r);
Json to_json(std::span<const Rational> v);
Json to_json(const Basis& b);
Json to_json(const Matrix& m);
Json to_json(const Polynomial& p);
Json to_json(const SignatureReport& s);
Json to_json(const SeriesReport& s);
Json to_json(const GeodesicSolution& s);
Json to_json(const GoVerdict& v);
Json to_json(const Classification& c);
Json to_json(const CanonicalForm& c);
Json to_json(const Thm41Report& r);
Json to_json(const Thm42Report& r);
Json to_json(const CandidateSpec& s);
Json to_json(const Rejection& r);

CandidateSpec spec_from_json(const Json& j);

}  // namespace gonil
