#pragma once

namespace collatz {

// Execution policy for the bulk scans. Parallel runs use OpenMP but merge
// per-thread results with commutative reductions, so both modes produce
// identical reports.
enum class Exec { serial, parallel };

} // namespace collatz
