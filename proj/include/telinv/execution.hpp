#pragma once

namespace telinv {

// Serial runs the same partitioned algorithm as Parallel on one thread, so
// the two produce bitwise identical results.
enum class Execution { Serial, Parallel };

}  // namespace telinv
