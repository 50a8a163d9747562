#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "dgq/quiver.hpp"

namespace dgq {

/// Parses the line-oriented quiver format (see docs/quiver-format.md).
/// Throws ParseError with the offending line. The result is not validated.
DgQuiver parse_quiver(std::string_view text);

/// Reads and parses a file; unreadable files raise ParseError at line 0.
DgQuiver load_quiver(const std::filesystem::path& file);

/// Canonical form: header, vertices, arrows, then differentials, each in
/// declaration order.
std::string serialize_quiver(const DgQuiver& q);

enum class DotStyle { Dashed, Dotted };

/// Degree 0 arrows solid, degree -1 dashed (or dotted), lower degrees
/// bold and labelled with their degree. Sorted by vertex then arrow id.
std::string to_dot(const DgQuiver& q, DotStyle style = DotStyle::Dashed);

}  // namespace dgq
