#pragma once

#include <stdexcept>

namespace poslab {

// Input text that cannot be read as the requested form.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structurally readable data that violates a documented precondition
// (non-bijective one-line values, malformed necklace, u not below v, ...),
// or an internal cross-check that came out inconsistent.
struct invariant_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Request exceeds the enumeration guards (see guard_limit below).
struct guard_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Guards protect the exhaustive enumerators from accidental blowups.  The
// environment variable POSITROID_GUARD_N, when set, replaces every default
// bound; that is explicitly unsafe and meant for long offline runs.
int guard_limit(int default_limit);

}  // namespace poslab
