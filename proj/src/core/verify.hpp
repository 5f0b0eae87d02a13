#pragma once

#include "jsonio.hpp"

namespace esch {

// Built-in reference checks against the published tables for these spaces.
// Items marked expected_mismatch record statements whose literal reading
// disagrees with the computed isotropy data; the report never hides the
// computed values. Statuses: match | mismatch | not-comparable.
ordered_json verify_report();

}  // namespace esch
