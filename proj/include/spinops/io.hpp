#pragma once

#include "spinops/commutator.hpp"
#include "spinops/conversion.hpp"
#include "spinops/frames.hpp"

#include <array>
#include <string>

namespace spinops {

/// JSON document formats, one per payload kind. Complex numbers are encoded
/// as two-element arrays [re, im]; matrices row-major as 4 rows of 4
/// entries. Serialization round-trips every finite double bit-exactly, and
/// parsing rejects non-finite numbers. All serializers end the document with
/// a newline.

std::string serialize_operator(const Matrix4c& f, const std::string& note = "");
std::string serialize_decomposition(const OperatorDecomposition& dec);
std::string serialize_rhs(const std::array<Matrix4c, 4>& ops);
std::string serialize_frame_change(const FrameChange& change);

/// Parsers throw ParseError on malformed documents, a mismatched "kind"
/// field, non-finite entries, or (for decompositions) a w field that is not
/// antisymmetric to 1e-12.
Matrix4c parse_operator(const std::string& text);
OperatorDecomposition parse_decomposition(const std::string& text);
std::array<Matrix4c, 4> parse_rhs(const std::string& text);
FrameChange parse_frame_change(const std::string& text);

}  // namespace spinops
