#pragma once

#include <stdexcept>
#include <string>

namespace virc1 {

// Malformed value (wrong coefficient length, bad serialized payload).
struct structural_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Characters whose offsets differ by a non-integer live in different t-sectors.
struct sector_mismatch_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Data contradicts an exact identity it was required to satisfy.
struct inconsistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation invoked outside the hypotheses under which its formula is asserted.
struct out_of_hypothesis_error : std::domain_error {
    using std::domain_error::domain_error;
};

} // namespace virc1
