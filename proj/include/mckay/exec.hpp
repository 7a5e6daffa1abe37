#pragma once

namespace mckay {

// Selects between the OpenMP kernel and its serial reference.  Both must
// produce identical results; the serial path exists for testing and for
// benchmarking the parallel one against it.
enum class Exec { serial, parallel };

}  // namespace mckay
