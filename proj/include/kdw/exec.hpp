#pragma once

namespace kdw {

/// Selects the serial reference loop or the OpenMP kernel for the exhaustive
/// enumerations. Both produce identical, order-independent results.
enum class Exec { Serial, Parallel };

}  // namespace kdw
