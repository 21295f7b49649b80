#pragma once

#include <stdexcept>
#include <string>

namespace blab {

/// Raised when a numeric certificate cannot be established: a branch guard
/// tripped (an arg summand left (-pi/2, pi/2)) or a user-supplied constant
/// failed its verification sweep. Carries a human-readable witness.
class certificate_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace blab
