#pragma once

namespace vt20 {

// Execution policy for the embarrassingly parallel kernels. The parallel
// path fills pre-sized tables and reduces serially, so its results are
// bitwise identical to the serial reference.
enum class Exec { serial, parallel };

}  // namespace vt20
