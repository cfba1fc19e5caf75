#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "heisurf/errors.hpp"
#include "heisurf/poly/parse.hpp"

namespace heisurf {

struct PolyFile {
  RingPtr<Rational> ring;
  std::vector<MultiPoly<Rational>> polys;
};

/// Text format: first non-comment line "vars: x1 x2 ...", then one polynomial
/// per line. '#' starts a comment running to the end of the line.
inline PolyFile parse_poly_file(std::string_view text, const std::string& origin = "<input>") {
  PolyFile out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!out.ring) {
      auto start = line.find_first_not_of(" \t");
      if (line.compare(start, 5, "vars:") != 0)
        throw FileError(origin + ":" + std::to_string(lineno) + ": expected 'vars:' declaration");
      std::istringstream names(line.substr(start + 5));
      std::vector<std::string> vars;
      for (std::string v; names >> v;) vars.push_back(v);
      if (vars.empty()) throw FileError(origin + ":" + std::to_string(lineno) + ": no variables declared");
      try {
        out.ring = make_ring<Rational>(vars);
      } catch (const Error& e) {
        throw FileError(origin + ":" + std::to_string(lineno) + ": " + e.what());
      }
      continue;
    }
    try {
      out.polys.push_back(parse_poly(line, out.ring));
    } catch (const SyntaxError& e) {
      throw SyntaxError(origin + ":" + std::to_string(lineno) + ": " + e.detail(), e.offset());
    }
  }
  if (!out.ring) throw FileError(origin + ": missing 'vars:' declaration");
  return out;
}

inline PolyFile read_poly_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw FileError("cannot open " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_poly_file(buf.str(), path);
}

}  // namespace heisurf
