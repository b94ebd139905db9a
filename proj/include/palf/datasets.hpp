#pragma once

// Bundled fibrations: the Akbulut cork W1 and the pair C1(m,1,3,0), C2(m,1,3,0).
//
// Only the shape of these factorizations is fixed (fiber, cycle count, the
// shared delta prefix); the vanishing cycles themselves were drawn, not
// written down. The curves generated here
// are reconstructions chosen to satisfy every checkable requirement:
//   W1:     Sigma_{0,5}, 4 cycles, chi = 1, H_1 = H_2 = 0, H_1(dX) = 0.
//   C1, C2: Sigma_{0,-m+5}, -m+5 cycles (six beta/gamma cycles then
//           delta_7 .. delta_{-m+5}, identical in both), chi = 2, equal
//           invariant reports.

#include <optional>
#include <string>

#include "palf/document.hpp"

namespace palf {

enum class Dataset { W1, C1, C2 };

// Throws palf::Error for an unknown name.
Dataset dataset_from_string(const std::string& name);
std::string to_string(Dataset d);

// m is required (m <= -5) for C1 and C2 and ignored for W1.
// Throws palf::Error when m is missing or out of range.
PalfDocument gen_dataset(Dataset which, std::optional<int> m = std::nullopt);

// Name of the factorization a generated document carries ("W1", "C1", "C2").
std::string dataset_palf_name(Dataset which);

}  // namespace palf
