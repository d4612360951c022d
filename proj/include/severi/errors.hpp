#ifndef SEVERI_ERRORS_HPP
#define SEVERI_ERRORS_HPP

#include <stdexcept>

namespace severi {

/// A proven identity failed to hold on concrete data: a bug signal, never
/// silenced (CLI exit code 4).
struct internal_consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// The chain-rewriting search ran out of moves before reaching its target
/// configuration (CLI exit code 3). Carries the diagnostic state as text.
struct concentration_stuck_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace severi

#endif
