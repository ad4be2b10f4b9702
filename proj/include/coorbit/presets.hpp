#pragma once

#include "coorbit/transforms.hpp"

namespace coorbit {

/// Periodized sampled Gaussian exp(-pi (t - N/2)^2 / N), the default window.
Signal gaussian_window(int n);

/// Full-lattice Weyl-Heisenberg frame with the Gaussian window, normalized
/// to Parseval.
FrameSpec wh_gaussian_frame(int n);

/// Full-lattice Weyl-Heisenberg frame with a delta window, normalized.
FrameSpec wh_delta_frame(int n);

/// Dyadic Haar filter-bank frame (an orthonormal basis; already Parseval).
/// levels = 0 selects the default depth log2(n) - 1.
FrameSpec haar_frame(int n, int levels = 0);

}  // namespace coorbit
