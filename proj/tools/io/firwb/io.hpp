#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "firwb/cohomology.hpp"
#include "firwb/error.hpp"
#include "firwb/firmod.hpp"

namespace firwb::io {

/// Keys keep insertion order so output matches the documented layouts.
using Json = nlohmann::ordered_json;

/// Text or an integer literal; p selects the field.
RatFunc ratfunc_from_json(const Json& j, std::uint64_t p);
Json to_json(const RatFunc& f);

Json to_json(const ExactMatrix& m);
Json to_json(const Vec& v);

/// ["I1", "J2"], or {"summands": [...], "base": b} when base is nonzero.
Json to_json(const StdObject& o);
StdObject object_from_json(const Json& j);

Json to_json(const FirMorphism& f);
FirMorphism fir_from_json(const Json& j, std::uint64_t p);

/// "object" may be omitted on input when the caller supplies one.
Json to_json(const TruncElement& e);
TruncElement element_from_json(const Json& j, std::uint64_t p, const StdObject* fallback = nullptr);

Json to_json(const StdMap& f);
StdMap map_from_json(const Json& j, std::uint64_t p);

/// Generators and their matrices.
Json to_json(const SemilinearRep& rep);
SemilinearRep rep_from_json(const Json& j, std::uint64_t p);

Json to_json(const Presentation& p);
Presentation presentation_from_json(const Json& j, std::uint64_t p);

Json to_json(const ClassVector& c);
ClassVector class_from_json(const Json& j);

/// A bare array of functions is accepted on input.
Json to_json(const SubspaceV& v);
SubspaceV subspace_from_json(const Json& j, std::uint64_t p);

Json to_json(const LevelCheck& c);
Json to_json(const RefinedProjective& r);
Json to_json(const Resolution& r);
Json to_json(const CoverStep& c);

Json error_json(const Error& e);

/// Inline JSON when the text starts with '{' or '[', otherwise a file path.
/// Throws ParseError.
Json load(const std::string& arg);

}  // namespace firwb::io
