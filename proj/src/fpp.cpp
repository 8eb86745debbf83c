#include "fppsim/fpp.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace fppsim {

namespace {

inline std::uint64_t pack(Site s) {
    return (std::uint64_t(std::uint32_t(s.u)) << 32) | std::uint64_t(std::uint32_t(s.v));
}

inline Site unpack(std::uint64_t w) {
    return {std::int32_t(std::uint32_t(w >> 32)), std::int32_t(std::uint32_t(w))};
}

constexpr std::uint8_t kDirSource = 6;

// Two-tier frontier expansion for 0/1 site weights.  Sites settle in
// nondecreasing distance order; within one distance class the order is the
// fixed stack order, so ties resolve deterministically.  Parents are set on
// strict improvement only (earlier discovery wins).  Returns false when a
// distance would exceed the DistT range.
template <class DistT, class Colors, class Settle>
bool bfs01(const Region& conf, const RegionIndex& idx, const Colors& colors,
           const std::vector<Site>& sources, bool want_parent,
           std::vector<DistT>& dist, std::vector<std::uint8_t>& pdir, Settle&& on_settle) {
    constexpr DistT kUnreach = std::numeric_limits<DistT>::max();
    dist.assign(std::size_t(idx.size()), kUnreach);
    if (want_parent) pdir.assign(std::size_t(idx.size()), 0xff);

    std::vector<std::uint64_t> cur, nxt;
    for (const Site& s : sources) {
        const std::int64_t i = idx.index_of(s);
        if (i < 0 || !conf.contains(s)) throw std::invalid_argument("source outside confinement");
        const int t = colors(s);
        if (DistT(t) < dist[std::size_t(i)]) {
            dist[std::size_t(i)] = DistT(t);
            if (want_parent) pdir[std::size_t(i)] = kDirSource;
            (t == 0 ? cur : nxt).push_back(pack(s));
        }
    }

    std::int64_t d = 0;
    while (!cur.empty() || !nxt.empty()) {
        if (cur.empty()) {
            cur.swap(nxt);
            ++d;
            continue;
        }
        const Site s = unpack(cur.back());
        cur.pop_back();
        const std::int64_t si = idx.index_of(s);
        if (std::int64_t(dist[std::size_t(si)]) != d) continue;  // stale entry
        if (!on_settle(s, std::int32_t(d))) return true;

        for (int dir = 0; dir < 6; ++dir) {
            const Site nb = neighbor(s, dir);
            if (!conf.contains(nb)) continue;
            const int t = colors(nb);
            const std::int64_t nd = d + t;
            const std::int64_t ni = idx.index_of(nb);
            if (nd < std::int64_t(dist[std::size_t(ni)])) {
                if (nd >= std::int64_t(kUnreach)) return false;  // needs a wider type
                dist[std::size_t(ni)] = DistT(nd);
                if (want_parent) pdir[std::size_t(ni)] = std::uint8_t(dir);
                (t == 0 ? cur : nxt).push_back(pack(nb));
            }
        }
    }
    return true;
}

std::vector<Site> walk_back(const RegionIndex& idx, const std::vector<std::uint8_t>& pdir,
                            Site end) {
    std::vector<Site> path;
    Site s = end;
    for (std::int64_t guard = idx.size() + 1; guard > 0; --guard) {
        path.push_back(s);
        const std::uint8_t d = pdir[std::size_t(idx.index_of(s))];
        if (d == kDirSource) {
            std::reverse(path.begin(), path.end());
            return path;
        }
        const Site& off = kNeighborOffsets[d];
        s = {s.u - off.u, s.v - off.v};
    }
    throw std::logic_error("geodesic walk did not terminate");
}

struct StopHit {
    Site site{0, 0};
    std::int32_t value = 0;
    bool hit = false;
};

// Runs the search with automatic distance-type widening and stops at the
// first settled site satisfying `target`.
template <class Colors, class Target>
PassageResult run_to_target(const Region& conf, const Colors& colors,
                            const std::vector<Site>& sources, Target&& target,
                            bool want_geodesic) {
    RegionIndex idx(conf);
    StopHit hit;
    auto settle = [&](Site s, std::int32_t d) {
        if (target(s)) {
            hit = {s, d, true};
            return false;
        }
        return true;
    };

    std::vector<std::uint8_t> pdir;
    {
        std::vector<std::uint8_t> dist;
        if (bfs01<std::uint8_t>(conf, idx, colors, sources, want_geodesic, dist, pdir, settle))
            goto done;
    }
    {
        std::vector<std::uint16_t> dist;
        hit = {};
        if (bfs01<std::uint16_t>(conf, idx, colors, sources, want_geodesic, dist, pdir, settle))
            goto done;
    }
    {
        std::vector<std::uint32_t> dist;
        hit = {};
        if (!bfs01<std::uint32_t>(conf, idx, colors, sources, want_geodesic, dist, pdir, settle))
            throw std::logic_error("distance overflow at 32 bits");
    }
done:
    PassageResult res;
    res.reachable = hit.hit;
    res.value = hit.value;
    if (hit.hit && want_geodesic) {
        res.geodesic = walk_back(idx, pdir, hit.site);
        res.geodesic_recorded = true;
    }
    return res;
}

template <class Target>
PassageResult dispatch_to_target(const Configuration& cfg, const Region& conf,
                                 const std::vector<Site>& sources, Target&& target,
                                 bool want_geodesic) {
    if (cfg.materialized()) {
        MaterializedColors colors{&cfg.region(), &cfg.index(), cfg.bytes().data()};
        return run_to_target(conf, colors, sources, target, want_geodesic);
    }
    ProceduralColors colors{&cfg.region(), cfg.key()};
    return run_to_target(conf, colors, sources, target, want_geodesic);
}

}  // namespace

const std::vector<Site>& geodesic_of(const PassageResult& result) {
    if (!result.reachable) throw std::invalid_argument("geodesic_of: unreachable result");
    if (!result.geodesic_recorded)
        throw std::invalid_argument("geodesic_of: result computed without geodesic");
    return result.geodesic;
}

PassageResult passage_time(const Configuration& cfg, const std::vector<Site>& from,
                           const std::vector<Site>& to, const Region& confinement,
                           bool want_geodesic) {
    if (from.empty() || to.empty())
        throw std::invalid_argument("passage_time: empty endpoint set");
    for (const Site& s : to)
        if (!confinement.contains(s))
            throw std::invalid_argument("passage_time: target outside confinement");
    std::unordered_set<Site, SiteHash> targets(to.begin(), to.end());
    return dispatch_to_target(
        cfg, confinement, from, [&](Site s) { return targets.count(s) != 0; }, want_geodesic);
}

PassageResult point_to_point(const Configuration& cfg, int n, bool want_geodesic) {
    if (n < 1) throw std::invalid_argument("point_to_point: n >= 1 required");
    if (!cfg.region().covers_ball({0, 0}, 3.0 * n))
        throw std::invalid_argument("point_to_point: window must cover ball(0,3n)");
    const Site goal{n, 0};
    return dispatch_to_target(
        cfg, cfg.region(), {Site{0, 0}}, [&](Site s) { return s == goal; }, want_geodesic);
}

PassageResult point_to_line(const Configuration& cfg, int n, bool want_geodesic) {
    if (n < 1) throw std::invalid_argument("point_to_line: n >= 1 required");
    if (!cfg.region().covers_ball({0, 0}, 3.0 * n))
        throw std::invalid_argument("point_to_line: window must cover ball(0,3n)");
    const std::int64_t two_n = 2 * std::int64_t(n);
    return dispatch_to_target(
        cfg, cfg.region(), {Site{0, 0}},
        [&](Site s) { return 2 * std::int64_t(s.u) + s.v >= two_n; }, want_geodesic);
}

PassageResult point_to_ball_boundary(const Configuration& cfg, int n, bool want_geodesic) {
    if (n < 1) throw std::invalid_argument("point_to_ball_boundary: n >= 1 required");
    if (!cfg.region().covers_ball({0, 0}, double(n)))
        throw std::invalid_argument("point_to_ball_boundary: window must cover ball(0,n)");
    const Region conf = Region::ball({0, 0}, double(n));
    const std::int64_t four_n2 = 4 * std::int64_t(n) * n;
    auto on_boundary = [&](Site s) {
        for (int d = 0; d < 6; ++d)
            if (norm4sq(neighbor(s, d)) > four_n2) return true;
        return false;
    };
    return dispatch_to_target(cfg, conf, {Site{0, 0}}, on_boundary, want_geodesic);
}

PassageResult annulus_time(const Configuration& cfg, int m, int n, bool want_geodesic) {
    if (!(1 <= m && m < n)) throw std::invalid_argument("annulus_time: need 1 <= m < n");
    if (!cfg.region().covers_annulus(double(m - 1), double(n)))
        throw std::invalid_argument("annulus_time: window must cover annulus(m-1,n)");
    const Region conf = Region::annulus(double(m - 1), double(n));
    const std::vector<Site> inner = boundary_sites(Region::ball({0, 0}, double(m)));
    const std::int64_t four_n2 = 4 * std::int64_t(n) * n;
    auto on_outer = [&](Site s) {
        for (int d = 0; d < 6; ++d)
            if (norm4sq(neighbor(s, d)) > four_n2) return true;
        return false;
    };
    return dispatch_to_target(cfg, conf, inner, on_outer, want_geodesic);
}

int sector_crossing_count(const Configuration& cfg, int m, int n) {
    if (!(1 <= m && m < n)) throw std::invalid_argument("sector_crossing_count: need 1 <= m < n");
    const Region conf = Region::sector(double(m), double(n));
    const std::int64_t four_m2 = 4 * std::int64_t(m) * m;
    const std::int64_t four_n2 = 4 * std::int64_t(n) * n;
    std::vector<Site> inner;
    conf.for_each_site([&](Site s) {
        for (int d = 0; d < 6; ++d)
            if (norm4sq(neighbor(s, d)) <= four_m2) {
                inner.push_back(s);
                return;
            }
    });
    if (inner.empty())
        throw std::runtime_error("sector_crossing_count: inner arc empty at this scale");
    auto on_outer = [&](Site s) {
        for (int d = 0; d < 6; ++d)
            if (norm4sq(neighbor(s, d)) > four_n2) return true;
        return false;
    };
    PassageResult res = dispatch_to_target(cfg, conf, inner, on_outer, false);
    if (!res.reachable)
        throw std::runtime_error("sector_crossing_count: arcs disconnected at this scale");
    return res.value;
}

std::vector<std::int32_t> ball_boundary_times(const Configuration& cfg,
                                              const std::vector<int>& scales) {
    if (scales.empty()) throw std::invalid_argument("ball_boundary_times: no scales");
    const int nmax = *std::max_element(scales.begin(), scales.end());
    if (!cfg.region().covers_ball({0, 0}, double(nmax)))
        throw std::invalid_argument("ball_boundary_times: window must cover ball(0,max n)");
    const Region conf = Region::ball({0, 0}, double(nmax));
    RegionIndex idx(conf);
    auto run = [&](auto& dist, auto colors) {
        std::vector<std::uint8_t> pdir;
        return bfs01(conf, idx, colors, {Site{0, 0}}, false, dist, pdir,
                     [](Site, std::int32_t) { return true; });
    };
    auto full_field = [&](auto& dist) {
        if (cfg.materialized())
            return run(dist, MaterializedColors{&cfg.region(), &cfg.index(), cfg.bytes().data()});
        return run(dist, ProceduralColors{&cfg.region(), cfg.key()});
    };

    std::vector<std::int32_t> out(scales.size());
    auto extract = [&](const auto& dist, auto unreach) {
        for (std::size_t k = 0; k < scales.size(); ++k) {
            std::int64_t best = -1;
            for (const Site& s : boundary_sites(Region::ball({0, 0}, double(scales[k])))) {
                const std::int64_t i = idx.index_of(s);
                const std::int64_t d = std::int64_t(dist[std::size_t(i)]);
                if (d == std::int64_t(unreach)) throw std::logic_error("boundary unreachable");
                if (best < 0 || d < best) best = d;
            }
            out[k] = std::int32_t(best);
        }
    };

    {
        std::vector<std::uint8_t> dist;
        if (full_field(dist)) {
            extract(dist, std::numeric_limits<std::uint8_t>::max());
            return out;
        }
    }
    {
        std::vector<std::uint16_t> dist;
        if (full_field(dist)) {
            extract(dist, std::numeric_limits<std::uint16_t>::max());
            return out;
        }
    }
    std::vector<std::uint32_t> dist;
    if (!full_field(dist)) throw std::logic_error("distance overflow at 32 bits");
    extract(dist, std::numeric_limits<std::uint32_t>::max());
    return out;
}

PointLineTimes point_line_times(const Configuration& cfg, int n) {
    if (n < 1) throw std::invalid_argument("point_line_times: n >= 1 required");
    if (!cfg.region().covers_ball({0, 0}, 3.0 * n))
        throw std::invalid_argument("point_line_times: window must cover ball(0,3n)");
    const Site goal{n, 0};
    const std::int64_t two_n = 2 * std::int64_t(n);
    PointLineTimes out;
    bool line_hit = false, point_hit = false;
    auto settle = [&](Site s, std::int32_t d) {
        if (!line_hit && 2 * std::int64_t(s.u) + s.v >= two_n) {
            out.line = d;
            line_hit = true;
        }
        if (s == goal) {
            out.point = d;
            point_hit = true;
            return false;
        }
        return true;
    };
    const Region& conf = cfg.region();
    RegionIndex idx(conf);
    auto run_colors = [&](auto& dist, auto colors) {
        std::vector<std::uint8_t> pdir;
        return bfs01(conf, idx, colors, {Site{0, 0}}, false, dist, pdir, settle);
    };
    auto run = [&](auto& dist) {
        if (cfg.materialized())
            return run_colors(dist, MaterializedColors{&cfg.region(), &cfg.index(), cfg.bytes().data()});
        return run_colors(dist, ProceduralColors{&cfg.region(), cfg.key()});
    };
    {
        std::vector<std::uint8_t> dist;
        if (run(dist) && point_hit) return out;
    }
    line_hit = point_hit = false;
    {
        std::vector<std::uint16_t> dist;
        if (run(dist) && point_hit) return out;
    }
    line_hit = point_hit = false;
    std::vector<std::uint32_t> dist;
    run(dist);
    if (!point_hit) throw std::logic_error("point target unreachable");
    return out;
}

}  // namespace fppsim
