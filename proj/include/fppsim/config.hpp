#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <unordered_map>
#include <vector>

#include "fppsim/lattice.hpp"
#include "fppsim/rng.hpp"

namespace fppsim {

// Bernoulli(1/2) site times over a finite region.  Time 0 = open site,
// time 1 = closed site; every site outside the region reads as closed.
//
// Sampled configurations derive each site's bit from (master_seed,
// sample_index, u, v) with a counter-based hash.  Small regions are
// materialized one byte per site; large ones stay procedural and evaluate
// bits on demand, which keeps the time_at contract and digest identical.
class Configuration {
public:
    enum class Storage { automatic, materialized, procedural };

    static Configuration sample(const Region& region, std::uint64_t master_seed,
                                std::int64_t sample_index,
                                Storage storage = Storage::automatic);

    static Configuration from_literal(const Region& region,
                                      const std::unordered_map<Site, int, SiteHash>& times);

    const Region& region() const { return region_; }
    const RegionIndex& index() const { return index_; }
    std::uint64_t master_seed() const { return master_seed_; }
    std::int64_t sample_index() const { return sample_index_; }
    bool synthetic() const { return synthetic_; }
    bool materialized() const { return !bytes_.empty(); }

    // 0 or 1; closed padding outside the region.
    int time_at(Site s) const {
        if (!bytes_.empty()) {
            const std::int64_t i = index_.index_of(s);
            return i < 0 ? 1 : bytes_[std::size_t(i)];
        }
        if (!region_.contains(s)) return 1;
        return site_bit(key_, s);
    }

    bool is_open(Site s) const { return time_at(s) == 0; }

    // Raw byte view over the region index; empty for procedural storage.
    const std::vector<std::uint8_t>& bytes() const { return bytes_; }
    std::uint64_t key() const { return key_; }

    // 64-bit digest over the region parameters, seed provenance and the
    // site times in region row-major order.
    std::uint64_t digest() const;

    void write_dump(std::ostream& os) const;
    static Configuration read_dump(std::istream& is);

private:
    Region region_ = Region::ball({0, 0}, 0);
    RegionIndex index_;
    std::uint64_t master_seed_ = 0;
    std::int64_t sample_index_ = 0;
    std::uint64_t key_ = 0;
    bool synthetic_ = false;
    std::vector<std::uint8_t> bytes_;

    void materialize();
};

// Colors adapters for hot kernels; both read time 1 for any site outside
// the region.
struct ProceduralColors {
    const Region* region;
    std::uint64_t key;
    int operator()(Site s) const {
        if (!region->contains(s)) return 1;
        return site_bit(key, s);
    }
};

struct MaterializedColors {
    const Region* region;
    const RegionIndex* index;
    const std::uint8_t* bytes;
    int operator()(Site s) const {
        const std::int64_t i = index->index_of(s);
        return i < 0 ? 1 : bytes[std::size_t(i)];
    }
};

}  // namespace fppsim
