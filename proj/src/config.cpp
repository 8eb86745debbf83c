#include "fppsim/config.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

namespace fppsim {

namespace {

constexpr std::int64_t kMaterializeLimit = std::int64_t(1) << 27;  // cells ~ 134 MB
constexpr char kDumpMagic[4] = {'F', 'P', 'P', 'C'};

template <class T>
void put(std::ostream& os, const T& v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <class T>
T get(std::istream& is) {
    T v{};
    is.read(reinterpret_cast<char*>(&v), sizeof v);
    return v;
}

}  // namespace

Configuration Configuration::sample(const Region& region, std::uint64_t master_seed,
                                    std::int64_t sample_index, Storage storage) {
    Configuration cfg;
    cfg.region_ = region;
    cfg.index_ = RegionIndex(region);
    if (cfg.index_.size() == 0) throw std::invalid_argument("sample: empty region");
    cfg.master_seed_ = master_seed;
    cfg.sample_index_ = sample_index;
    cfg.key_ = stream_key(master_seed, sample_index);
    cfg.synthetic_ = false;
    const bool want_bytes = storage == Storage::materialized ||
                            (storage == Storage::automatic && cfg.index_.size() <= kMaterializeLimit);
    if (want_bytes) cfg.materialize();
    return cfg;
}

void Configuration::materialize() {
    bytes_.assign(std::size_t(index_.size()), 1);
    for (std::int32_t v = index_.row_min(); v <= index_.row_max(); ++v) {
        std::int32_t ulo, uhi;
        region_.row_span(v, ulo, uhi);
        for (std::int32_t u = ulo; u <= uhi; ++u) {
            Site s{u, v};
            if (!region_.contains(s)) continue;
            bytes_[std::size_t(index_.index_of(s))] = std::uint8_t(site_bit(key_, s));
        }
    }
}

Configuration Configuration::from_literal(
    const Region& region, const std::unordered_map<Site, int, SiteHash>& times) {
    Configuration cfg;
    cfg.region_ = region;
    cfg.index_ = RegionIndex(region);
    cfg.synthetic_ = true;
    cfg.bytes_.assign(std::size_t(cfg.index_.size()), 1);
    std::size_t used = 0;
    bool complete = true;
    region.for_each_site([&](Site s) {
        auto it = times.find(s);
        if (it == times.end()) { complete = false; return; }
        if (it->second != 0 && it->second != 1)
            throw std::invalid_argument("from_literal: time must be 0 or 1");
        cfg.bytes_[std::size_t(cfg.index_.index_of(s))] = std::uint8_t(it->second);
        ++used;
    });
    if (!complete || used != times.size())
        throw std::invalid_argument("from_literal: assignment must cover the region exactly");
    return cfg;
}

std::uint64_t Configuration::digest() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    auto absorb = [&](std::uint64_t x) { h = mix64(h ^ x); };
    absorb(std::uint64_t(region_.kind()));
    absorb((std::uint64_t(std::uint32_t(region_.center().u)) << 32) |
           std::uint32_t(region_.center().v));
    absorb(std::uint64_t(region_.inner_radius() * 4096.0));
    absorb(std::uint64_t(region_.outer_radius() * 4096.0));
    absorb(master_seed_);
    absorb(std::uint64_t(sample_index_));
    absorb(synthetic_ ? 1 : 0);
    std::uint64_t word = 0;
    int fill = 0;
    region_.for_each_site([&](Site s) {
        word = (word << 1) | std::uint64_t(time_at(s));
        if (++fill == 64) {
            absorb(word);
            word = 0;
            fill = 0;
        }
    });
    if (fill) absorb(word ^ std::uint64_t(fill));
    return h;
}

void Configuration::write_dump(std::ostream& os) const {
    os.write(kDumpMagic, 4);
    put<std::uint8_t>(os, std::uint8_t(region_.kind()));
    put<std::int32_t>(os, region_.center().u);
    put<std::int32_t>(os, region_.center().v);
    put<double>(os, region_.inner_radius());
    put<double>(os, region_.outer_radius());
    put<std::uint64_t>(os, master_seed_);
    put<std::int64_t>(os, sample_index_);
    put<std::uint8_t>(os, synthetic_ ? 1 : 0);
    std::int64_t n = 0;
    region_.for_each_site([&](Site) { ++n; });
    put<std::int64_t>(os, n);
    std::uint8_t byte = 0;
    int fill = 0;
    region_.for_each_site([&](Site s) {
        byte |= std::uint8_t(time_at(s)) << fill;
        if (++fill == 8) {
            put(os, byte);
            byte = 0;
            fill = 0;
        }
    });
    if (fill) put(os, byte);
}

Configuration Configuration::read_dump(std::istream& is) {
    char magic[4];
    is.read(magic, 4);
    if (!is || std::string(magic, 4) != std::string(kDumpMagic, 4))
        throw std::invalid_argument("read_dump: bad magic");
    const auto kind = Region::Kind(get<std::uint8_t>(is));
    Site center{get<std::int32_t>(is), get<std::int32_t>(is)};
    const double inner = get<double>(is);
    const double outer = get<double>(is);
    Region region = Region::ball(center, outer);
    if (kind == Region::Kind::annulus) region = Region::annulus(inner, outer);
    if (kind == Region::Kind::sector) region = Region::sector(inner, outer);

    Configuration cfg;
    cfg.region_ = region;
    cfg.index_ = RegionIndex(region);
    cfg.master_seed_ = get<std::uint64_t>(is);
    cfg.sample_index_ = get<std::int64_t>(is);
    cfg.key_ = stream_key(cfg.master_seed_, cfg.sample_index_);
    cfg.synthetic_ = get<std::uint8_t>(is) != 0;
    const std::int64_t n = get<std::int64_t>(is);
    std::vector<std::uint8_t> packed(std::size_t((n + 7) / 8));
    is.read(reinterpret_cast<char*>(packed.data()), std::streamsize(packed.size()));
    if (!is) throw std::invalid_argument("read_dump: truncated payload");
    cfg.bytes_.assign(std::size_t(cfg.index_.size()), 1);
    std::int64_t pos = 0;
    region.for_each_site([&](Site s) {
        const int bit = (packed[std::size_t(pos / 8)] >> (pos % 8)) & 1;
        cfg.bytes_[std::size_t(cfg.index_.index_of(s))] = std::uint8_t(bit);
        ++pos;
    });
    if (pos != n) throw std::invalid_argument("read_dump: site count mismatch");
    return cfg;
}

}  // namespace fppsim
