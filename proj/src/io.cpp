#include "fricke/io.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fricke/errors.hpp"

namespace fricke {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v + 0.0);  // +0.0 drops -0
  return buf;
}

std::string format_complex(Complex v) {
  const double re = v.real() + 0.0;
  const double im = v.imag() + 0.0;
  if (im < 0.0) {
    return format_double(re) + " - " + format_double(-im) + "i";
  }
  return format_double(re) + " + " + format_double(im) + "i";
}

namespace {

double parse_real_token(std::string_view token, std::size_t at) {
  if (token.empty()) {
    throw ParseError("empty number", at);
  }
  const std::string owned(token);
  char* end = nullptr;
  const double v = std::strtod(owned.c_str(), &end);
  if (end != owned.c_str() + owned.size()) {
    throw ParseError("malformed number '" + owned + "'", at);
  }
  return v;
}

// coefficient of an imaginary term: "", "+", "-" mean +/-1
double parse_imag_token(std::string_view token, std::size_t at) {
  if (token.empty() || token == "+") {
    return 1.0;
  }
  if (token == "-") {
    return -1.0;
  }
  return parse_real_token(token, at);
}

}  // namespace

Complex parse_complex(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      s += c;
    }
  }
  if (s.empty()) {
    throw ParseError("empty complex literal", 0);
  }
  const bool has_i = s.back() == 'i' || s.back() == 'I';
  if (!has_i) {
    return {parse_real_token(s, 0), 0.0};
  }
  const std::string body = s.substr(0, s.size() - 1);
  // split "a+b" / "a-b" at the last top-level sign (not part of an exponent)
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    const char c = body[k];
    if ((c == '+' || c == '-') &&
        !(body[k - 1] == 'e' || body[k - 1] == 'E')) {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) {
    return {0.0, parse_imag_token(body, 0)};
  }
  return {parse_real_token(body.substr(0, split), 0),
          parse_imag_token(body.substr(split), split)};
}

std::string to_json(Complex v) {
  return "[" + format_double(v.real() + 0.0) + ", " +
         format_double(v.imag() + 0.0) + "]";
}

std::string to_json(const Mat2& m) {
  return "[[" + to_json(m.a) + ", " + to_json(m.b) + "], [" + to_json(m.c) +
         ", " + to_json(m.d) + "]]";
}

std::string to_json(const RepPair& p) {
  return "[" + to_json(p.xi) + ", " + to_json(p.eta) + "]";
}

std::string to_json(const RepTriple& t) {
  return "[" + to_json(t.a1) + ", " + to_json(t.a2) + ", " + to_json(t.a3) +
         "]";
}

std::string to_json(const CharTriple& c) {
  return "[" + to_json(c.x) + ", " + to_json(c.y) + ", " + to_json(c.z) + "]";
}

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
}

Complex complex_from(const json& node) {
  if (node.is_number()) {
    return {node.get<double>(), 0.0};
  }
  if (node.is_array() && node.size() == 2 && node[0].is_number() &&
      node[1].is_number()) {
    return {node[0].get<double>(), node[1].get<double>()};
  }
  throw ParseError("expected a complex value [re, im]", 0);
}

Mat2 mat2_from(const json& node) {
  if (!node.is_array() || node.size() != 2 || !node[0].is_array() ||
      node[0].size() != 2 || !node[1].is_array() || node[1].size() != 2) {
    throw ParseError("expected a matrix [[a, b], [c, d]]", 0);
  }
  Mat2 m{complex_from(node[0][0]), complex_from(node[0][1]),
         complex_from(node[1][0]), complex_from(node[1][1])};
  require_finite(m, "matrix JSON");
  return m;
}

}  // namespace

Mat2 mat2_from_json(std::string_view text) {
  return mat2_from(parse_json(text));
}

RepPair pair_from_json(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_array() || doc.size() != 2) {
    throw ParseError("expected a pair [xi, eta] of matrices", 0);
  }
  return {mat2_from(doc[0]), mat2_from(doc[1])};
}

RepTriple triple_from_json(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_array() || doc.size() != 3) {
    throw ParseError("expected a triple [A1, A2, A3] of matrices", 0);
  }
  return {mat2_from(doc[0]), mat2_from(doc[1]), mat2_from(doc[2])};
}

std::pair<RepPair, RepPair> pair_of_pairs_from_json(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_array() || doc.size() != 2 || !doc[0].is_array() ||
      doc[0].size() != 2 || !doc[1].is_array() || doc[1].size() != 2) {
    throw ParseError("expected [[p_xi, p_eta], [q_xi, q_eta]]", 0);
  }
  return {{mat2_from(doc[0][0]), mat2_from(doc[0][1])},
          {mat2_from(doc[1][0]), mat2_from(doc[1][1])}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open file: " + path);
  }
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace fricke
