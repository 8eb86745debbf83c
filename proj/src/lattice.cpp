#include "fppsim/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <sstream>

namespace fppsim {

namespace {

constexpr double kTanPi10 = 0.3249196962329063;  // tan(pi/10)

// Largest |v| with 3v^2 <= four_r2.
std::int32_t row_reach(double four_r2) {
    if (four_r2 < 0) return -1;
    auto fits = [&](std::int64_t v) { return 3.0 * double(v) * double(v) <= four_r2; };
    std::int64_t v = std::int64_t(std::sqrt(std::max(0.0, four_r2) / 3.0)) + 2;
    while (v > 0 && !fits(v)) --v;
    return std::int32_t(v);
}

// u-interval of ball(center, r) in row v; returns false when empty.
bool ball_row_span(Site c, double four_r2, std::int32_t v,
                   std::int32_t& ulo, std::int32_t& uhi) {
    const std::int64_t dv = std::int64_t(v) - c.v;
    const double rem = four_r2 - 3.0 * double(dv) * double(dv);
    if (rem < 0) return false;
    const double s = std::sqrt(rem);
    // (2du+dv)^2 <= rem
    std::int64_t lo = std::int64_t(std::ceil((-s - double(dv)) / 2.0)) - 1;
    std::int64_t hi = std::int64_t(std::floor((s - double(dv)) / 2.0)) + 1;
    auto inside = [&](std::int64_t du) {
        const double a = 2.0 * double(du) + double(dv);
        return a * a + 3.0 * double(dv) * double(dv) <= four_r2;
    };
    while (lo <= hi && !inside(lo)) ++lo;
    while (hi >= lo && !inside(hi)) --hi;
    if (lo > hi) return false;
    ulo = std::int32_t(c.u + lo);
    uhi = std::int32_t(c.u + hi);
    return true;
}

}  // namespace

Region Region::ball(Site center, double radius) {
    if (radius < 0) throw std::invalid_argument("ball: negative radius");
    Region r;
    r.kind_ = Kind::ball;
    r.center_ = center;
    r.four_r2_out_ = 4.0 * radius * radius;
    r.finish_rows();
    return r;
}

Region Region::annulus(double inner, double outer) {
    if (!(inner >= 0) || !(inner < outer))
        throw std::invalid_argument("annulus: need 0 <= m < n");
    Region r;
    r.kind_ = Kind::annulus;
    r.center_ = {0, 0};
    r.four_r2_in_ = 4.0 * inner * inner;
    r.four_r2_out_ = 4.0 * outer * outer;
    r.finish_rows();
    return r;
}

Region Region::sector(double inner, double outer) {
    if (!(inner >= 1) || !(inner < outer))
        throw std::invalid_argument("sector: need 1 <= m < n");
    Region r;
    r.kind_ = Kind::sector;
    r.center_ = {0, 0};
    r.four_r2_in_ = 4.0 * inner * inner;
    r.four_r2_out_ = 4.0 * outer * outer;
    r.finish_rows();
    return r;
}

Region Region::rect(double x0, double x1, double y0, double y1) {
    if (!(x0 <= x1) || !(y0 <= y1)) throw std::invalid_argument("rect: bad bounds");
    Region r;
    r.kind_ = Kind::rect;
    r.x0_ = x0; r.x1_ = x1; r.y0_ = y0; r.y1_ = y1;
    constexpr double h = 0.8660254037844386;
    r.vmin_ = std::int32_t(std::ceil(y0 / h - 1e-12));
    r.vmax_ = std::int32_t(std::floor(y1 / h + 1e-12));
    return r;
}

void Region::finish_rows() {
    const std::int32_t reach = row_reach(four_r2_out_);
    vmin_ = center_.v - reach;
    vmax_ = center_.v + reach;
}

bool Region::contains(Site s) const {
    switch (kind_) {
        case Kind::ball:
            return double(dist4sq(s, center_)) <= four_r2_out_;
        case Kind::annulus: {
            const double q = double(norm4sq(s));
            return q <= four_r2_out_ && q > four_r2_in_;
        }
        case Kind::sector: {
            const double q = double(norm4sq(s));
            if (!(q <= four_r2_out_ && q > four_r2_in_)) return false;
            const double x = pos_x(s), y = pos_y(s);
            return x > 0 && std::abs(y) < x * kTanPi10;
        }
        case Kind::rect: {
            const double x = pos_x(s), y = pos_y(s);
            return x >= x0_ && x <= x1_ && y >= y0_ && y <= y1_;
        }
    }
    return false;
}

bool Region::empty() const {
    if (vmax_ < vmin_) return true;
    bool found = false;
    for_each_site([&](Site) { found = true; });
    return !found;
}

void Region::row_span(std::int32_t v, std::int32_t& ulo, std::int32_t& uhi) const {
    ulo = 0; uhi = -1;
    if (v < vmin_ || v > vmax_) return;
    if (kind_ == Kind::rect) {
        const double y = 0.8660254037844386 * v;
        if (y < y0_ || y > y1_) return;
        ulo = std::int32_t(std::ceil(x0_ - 0.5 * v - 1e-12));
        uhi = std::int32_t(std::floor(x1_ - 0.5 * v + 1e-12));
        return;
    }
    if (!ball_row_span(center_, four_r2_out_, v, ulo, uhi)) { ulo = 0; uhi = -1; }
}

void Region::for_each_site(const std::function<void(Site)>& fn) const {
    for (std::int32_t v = vmin_; v <= vmax_; ++v) {
        std::int32_t ulo, uhi;
        row_span(v, ulo, uhi);
        for (std::int32_t u = ulo; u <= uhi; ++u) {
            Site s{u, v};
            if (contains(s)) fn(s);
        }
    }
}

std::vector<Site> Region::sites() const {
    std::vector<Site> out;
    for_each_site([&](Site s) { out.push_back(s); });
    return out;
}

std::int64_t Region::count_sites() const {
    std::int64_t n = 0;
    for_each_site([&](Site) { ++n; });
    return n;
}

bool Region::covers_ball(Site c, double r) const {
    if (kind_ == Kind::ball) {
        // |center offset| + r <= R
        const double off = std::sqrt(double(dist4sq(c, center_))) / 2.0;
        return off + r <= std::sqrt(four_r2_out_ / 4.0) + 1e-9;
    }
    return false;
}

bool Region::covers_annulus(double m, double n) const {
    if (kind_ == Kind::ball)
        return center_ == Site{0, 0} && 4.0 * n * n <= four_r2_out_ + 1e-9;
    if (kind_ == Kind::annulus)
        return 4.0 * m * m >= four_r2_in_ - 1e-9 && 4.0 * n * n <= four_r2_out_ + 1e-9;
    return false;
}

std::string Region::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::ball:
            os << "ball((" << center_.u << "," << center_.v << "),"
               << std::sqrt(four_r2_out_ / 4.0) << ")";
            break;
        case Kind::annulus:
            os << "annulus(" << std::sqrt(four_r2_in_ / 4.0) << ","
               << std::sqrt(four_r2_out_ / 4.0) << ")";
            break;
        case Kind::sector:
            os << "sector(" << std::sqrt(four_r2_in_ / 4.0) << ","
               << std::sqrt(four_r2_out_ / 4.0) << ")";
            break;
        case Kind::rect:
            os << "rect(" << x0_ << "," << x1_ << "," << y0_ << "," << y1_ << ")";
            break;
    }
    return os.str();
}

std::vector<Site> boundary_sites(const Region& reg) {
    if (reg.kind() != Region::Kind::ball)
        throw std::invalid_argument("boundary_sites: region must be a ball");
    std::vector<Site> out;
    reg.for_each_site([&](Site s) {
        for (int d = 0; d < 6; ++d) {
            if (!reg.contains(neighbor(s, d))) {
                out.push_back(s);
                return;
            }
        }
    });
    return out;
}

RegionIndex::RegionIndex(const Region& reg) {
    vmin_ = reg.row_min();
    vmax_ = reg.row_max();
    if (vmax_ < vmin_) { total_ = 0; return; }
    const std::size_t rows = std::size_t(vmax_ - vmin_ + 1);
    ulo_.resize(rows);
    uhi_.resize(rows);
    offset_.resize(rows + 1, 0);
    for (std::size_t r = 0; r < rows; ++r) {
        reg.row_span(vmin_ + std::int32_t(r), ulo_[r], uhi_[r]);
        const std::int64_t w = (uhi_[r] >= ulo_[r]) ? (uhi_[r] - ulo_[r] + 1) : 0;
        offset_[r + 1] = offset_[r] + w;
    }
    total_ = offset_[rows];
}

Site RegionIndex::site_of(std::int64_t idx) const {
    auto it = std::upper_bound(offset_.begin(), offset_.end(), idx);
    const std::size_t r = std::size_t(it - offset_.begin()) - 1;
    return {std::int32_t(ulo_[r] + (idx - offset_[r])), vmin_ + std::int32_t(r)};
}

}  // namespace fppsim
