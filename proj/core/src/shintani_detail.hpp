#ifndef QTHETA_SHINTANI_DETAIL_HPP
#define QTHETA_SHINTANI_DETAIL_HPP

#include <functional>

#include "qtheta/shintani.hpp"

namespace qtheta::shintani::detail {

/// Nested Hankel double integral of wt(log(-t)) wu(log u) k(t,u) / (t u) with
/// k the selected cone kernel pair; log u = log(-u) + i pi on the u-contour.
/// subtract_c0 removes the u -> 0 coefficient from each selected kernel.
Complex double_contour(const ShintaniParams& ps, int part, bool subtract_c0,
                       const std::function<Complex(Complex)>& wt,
                       const std::function<Complex(Complex)>& wu, double decay,
                       int log_power, const ContourOptions& opts);

/// Exponential decay bound of the selected kernel pair on the outbound t-ray.
double cone_decay(const ShintaniParams& ps, int part, double ru);

/// Radius of the nearest u-pole of the selected kernel pair.
double pole_bound(const ShintaniParams& ps, int part);

} // namespace qtheta::shintani::detail

#endif
