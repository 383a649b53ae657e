#pragma once

#include <string>

#include "poslab/positroid.hpp"
#include "poslab/rational.hpp"
#include "poslab/smooth.hpp"

namespace poslab {

// JSON forms used on the command line.  Malformed JSON or missing/mistyped
// fields raise parse_error; structurally sound data that breaks a documented
// precondition raises invariant_error from the underlying constructors.

std::string necklace_to_json(const GrassmannNecklace& N);
GrassmannNecklace necklace_from_json(const std::string& text);

std::string interval_to_json(const BruhatInterval& iv);
BruhatInterval interval_from_json(const std::string& text);

std::string bases_to_json(const Positroid& M);
// Shape checks only; whether the family is a positroid is the caller's call.
Positroid bases_from_json(const std::string& text);

// A bare array of rows; entries are integers or "p/q" strings.
RationalMatrix matrix_from_json(const std::string& text);

// criterion: which verdict the caller asked about ("all" or one of the four
// criterion names); certified: jacobian_ranks are present and were checked
// against the tangent codimensions.
std::string report_to_json(const SmoothnessReport& report,
                           const std::string& criterion, bool certified);

// Undirected basis-exchange graph in DOT, one line per node and per edge.
std::string johnson_dot(const JohnsonGraphView& G);

// Circular diagram of the arcs i -> w(i); loops become small circles with
// class "loop cw" / "loop ccw", everything else class "arc".
std::string chord_svg(const DecoratedPermutation& w);

}  // namespace poslab
