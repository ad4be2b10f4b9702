#include "coorbit/presets.hpp"

#include <cmath>
#include <numbers>

#include "coorbit/linalg.hpp"

namespace coorbit {

Signal gaussian_window(int n) {
    Signal g(static_cast<std::size_t>(n));
    const double center = static_cast<double>(n) / 2.0;
    for (int t = 0; t < n; ++t) {
        double sum = 0.0;
        for (int r = -4; r <= 4; ++r) {
            const double x = static_cast<double>(t) - center + static_cast<double>(r * n);
            sum += std::exp(-std::numbers::pi * x * x / static_cast<double>(n));
        }
        g[static_cast<std::size_t>(t)] = cplx(sum, 0.0);
    }
    return g;
}

FrameSpec wh_gaussian_frame(int n) {
    return normalize_frame(FrameSpec::weyl_heisenberg(gaussian_window(n), Lattice::tf_full(n)));
}

FrameSpec wh_delta_frame(int n) {
    return normalize_frame(FrameSpec::weyl_heisenberg(Signal::delta(static_cast<std::size_t>(n)),
                                                      Lattice::tf_full(n)));
}

FrameSpec haar_frame(int n, int levels) {
    if (levels <= 0)
        levels = std::max(1, linalg::log2_exact(static_cast<std::size_t>(n)) - 1);
    return FrameSpec::affine(FilterPair::haar(), n, levels);
}

}  // namespace coorbit
