#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fppsim/config.hpp"
#include "fppsim/lattice.hpp"

namespace fppsim {

// Outcome of a passage-time query.  `value` is the minimal sum of site
// times over paths joining the endpoint sets, endpoints included.
// Unreachable is a distinct state, never conflated with value 0.
struct PassageResult {
    bool reachable = false;
    std::int32_t value = 0;
    std::vector<Site> geodesic;      // populated only when requested
    bool geodesic_recorded = false;
};

// Path achieving the value; requires a reachable result computed with
// want_geodesic set.
const std::vector<Site>& geodesic_of(const PassageResult& result);

// T(A,B) restricted to paths inside `confinement`.
PassageResult passage_time(const Configuration& cfg, const std::vector<Site>& from,
                           const std::vector<Site>& to, const Region& confinement,
                           bool want_geodesic = false);

// T(0,(n,0)); requires the configuration window to cover ball(0,3n).
PassageResult point_to_point(const Configuration& cfg, int n, bool want_geodesic = false);

// T(0,{x>=n}); same window requirement as point_to_point.
PassageResult point_to_line(const Configuration& cfg, int n, bool want_geodesic = false);

// T(0,dB(n)) confined to ball(0,n).
PassageResult point_to_ball_boundary(const Configuration& cfg, int n,
                                     bool want_geodesic = false);

// T(dB(m),dB(n)) confined to annulus(m-1,n).
PassageResult annulus_time(const Configuration& cfg, int m, int n,
                           bool want_geodesic = false);

// Maximal number of disjoint closed crossing paths in sector(m,n), obtained
// as the minimal closed-site count over paths joining the sector's inner and
// outer arcs.
int sector_crossing_count(const Configuration& cfg, int m, int n);

// One origin field over ball(0, max(scales)) evaluated at every scale:
// values[i] = T(0,dB(scales[i])).  Equals per-scale point_to_ball_boundary
// on the same draw (paths to dB(n) never profit from leaving ball(0,n)).
std::vector<std::int32_t> ball_boundary_times(const Configuration& cfg,
                                              const std::vector<int>& scales);

// One origin field over the configuration window giving both T(0,(n,0))
// and T(0,{x>=n}).
struct PointLineTimes {
    std::int32_t point = 0;
    std::int32_t line = 0;
};
PointLineTimes point_line_times(const Configuration& cfg, int n);

}  // namespace fppsim
