#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "fricke/mat2.hpp"

namespace fricke {

/// Shortest-faithful decimal with up to 17 significant digits (%.17g);
/// parses back to the identical double.
std::string format_double(double v);

/// "a + bi" / "a - bi" with format_double components.
std::string format_complex(Complex v);

/// Complex literals: "a", "a+bi", "a-bi", "bi", "i", "-i". Whitespace-free
/// core, surrounding whitespace tolerated.
Complex parse_complex(std::string_view text);

/// JSON wire format: a complex number is [re, im]; a Mat2 is [[a,b],[c,d]];
/// pairs and triples are arrays of Mat2. Emission is hand-rendered with
/// format_double so the bytes are deterministic and round-trip bit-exactly.
std::string to_json(Complex v);
std::string to_json(const Mat2& m);
std::string to_json(const RepPair& p);
std::string to_json(const RepTriple& t);
std::string to_json(const CharTriple& c);

Mat2 mat2_from_json(std::string_view text);
RepPair pair_from_json(std::string_view text);
RepTriple triple_from_json(std::string_view text);

/// Parses "[[p_xi, p_eta], [q_xi, q_eta]]" (two pairs) for conjugacy queries.
std::pair<RepPair, RepPair> pair_of_pairs_from_json(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace fricke
