#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nichols/closed_forms.hpp"
#include "nichols/sym_action.hpp"
#include "nichols/symmetrizer.hpp"

namespace nichols {

enum class OutputFormat { text, json, csv };

// Accepts "text", "json", "csv"; throws std::invalid_argument otherwise.
OutputFormat parse_format(const std::string& s);

// RFC-4180 field quoting: quoted when the field holds a comma, quote, CR or
// LF; embedded quotes doubled.
std::string csv_field(const std::string& s);

// All renderings end with a newline and are deterministic for equal inputs.
std::string render_ek_table(const EkTable& t, OutputFormat f);
std::string render_orbit_partition(std::size_t n,
                                   const std::vector<OrbitInfo>& parts,
                                   OutputFormat f);
std::string render_profile(const GradedProfile& p, OutputFormat f);
std::string render_reports(const std::vector<ClosedFormReport>& reports,
                           OutputFormat f);

// F~ output: the symbolic polynomial or its value at a parameter point.
std::string render_ftilde(const std::string& x, const std::string& y,
                          const MultiPoly& p, OutputFormat f);
std::string render_ftilde_value(const std::string& x, const std::string& y,
                                const std::string& point,
                                const CyclotomicNumber& value, OutputFormat f);

// Round trip for the result cache: a profile as a standalone JSON document.
std::string profile_to_json(const GradedProfile& p);
GradedProfile profile_from_json(const std::string& text);  // throws on malformed input

}  // namespace nichols
