#pragma once

#include <istream>
#include <string>
#include <vector>

#include "glue/models/curves.hpp"

namespace glue {

// JSON lines, ascending coefficient arrays:
//   {"label": "...", "f": [...], "h": [...], "conductor": N}
//   {"label": "...", "ainvs": [a1,a2,a3,a4,a6], "conductor": N, "disc_min": D}
// Integers may be JSON numbers or decimal strings. Blank lines are skipped.
// Every bad line is collected into one parse_error.
std::vector<GenusTwoCurve> read_genus2(std::istream& in);
std::vector<EllipticCurve> read_elliptic(std::istream& in);

std::vector<GenusTwoCurve> ingest_genus2(const std::string& path);
std::vector<EllipticCurve> ingest_elliptic(const std::string& path);

}  // namespace glue
