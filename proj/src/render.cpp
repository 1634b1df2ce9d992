// --------------------------------------------------------------------
// SVG emission and distance-field rasterization. With antialiasing off a
// pixel is dark iff its center lies within stroke_width/2 of a
// primitive; antialiasing evaluates a 4x4 subsample grid per pixel.
// --------------------------------------------------------------------
#include "geoclidean/render.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <sstream>

namespace geoclidean {
namespace {

// Locale-independent shortest round-trip formatting.
std::string fmt(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

// Canvas [0,1]^2 to pixel coordinates, y flipped so canvas-up is image-up.
Vec2 to_pixels(Vec2 p, int pixels) {
    return {p.x * pixels, (1.0 - p.y) * pixels};
}

Primitive to_pixel_space(const Primitive& prim, int pixels) {
    if (const auto* s = std::get_if<Segment>(&prim))
        return Segment{to_pixels(s->a, pixels), to_pixels(s->b, pixels)};
    const auto& c = std::get<CircleShape>(prim);
    return CircleShape{to_pixels(c.center, pixels), c.radius * pixels};
}

struct PixelBox {
    int x0, y0, x1, y1;  // half-open
};

PixelBox bounding_box(const Primitive& prim, double pad, int pixels) {
    double lo_x, lo_y, hi_x, hi_y;
    if (const auto* s = std::get_if<Segment>(&prim)) {
        lo_x = std::min(s->a.x, s->b.x);
        hi_x = std::max(s->a.x, s->b.x);
        lo_y = std::min(s->a.y, s->b.y);
        hi_y = std::max(s->a.y, s->b.y);
    } else {
        const auto& c = std::get<CircleShape>(prim);
        lo_x = c.center.x - c.radius;
        hi_x = c.center.x + c.radius;
        lo_y = c.center.y - c.radius;
        hi_y = c.center.y + c.radius;
    }
    PixelBox box;
    box.x0 = std::clamp(static_cast<int>(std::floor(lo_x - pad)), 0, pixels);
    box.y0 = std::clamp(static_cast<int>(std::floor(lo_y - pad)), 0, pixels);
    box.x1 = std::clamp(static_cast<int>(std::ceil(hi_x + pad)) + 1, 0, pixels);
    box.y1 = std::clamp(static_cast<int>(std::ceil(hi_y + pad)) + 1, 0, pixels);
    return box;
}

}  // namespace

std::string render_vector(const Scene& scene, const RenderConfig& config) {
    const int px = config.pixels;
    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px << "\" height=\"" << px
        << "\" viewBox=\"0 0 " << px << ' ' << px << "\">\n"
        << "<rect width=\"" << px << "\" height=\"" << px << "\" fill=\"white\"/>\n";
    const std::string style = "\" stroke=\"black\" stroke-width=\"" + fmt(config.stroke_width) +
                              "\" fill=\"none\"";
    for (const auto& prim : scene.primitives) {
        if (const auto* s = std::get_if<Segment>(&prim)) {
            const Vec2 a = to_pixels(s->a, px);
            const Vec2 b = to_pixels(s->b, px);
            svg << "<line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\"" << fmt(b.x)
                << "\" y2=\"" << fmt(b.y) << style << " stroke-linecap=\"round\"/>\n";
        } else {
            const auto& c = std::get<CircleShape>(prim);
            const Vec2 ctr = to_pixels(c.center, px);
            svg << "<circle cx=\"" << fmt(ctr.x) << "\" cy=\"" << fmt(ctr.y) << "\" r=\""
                << fmt(c.radius * px) << style << "/>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

RasterImage rasterize(const Scene& scene, const RenderConfig& config) {
    const int px = config.pixels;
    const double half = config.stroke_width / 2.0;
    const int samples = config.antialias ? 16 : 1;

    RasterImage img;
    img.width = img.height = px;
    img.values.assign(static_cast<std::size_t>(px) * px, 1.0);

    // Per-pixel bitmask of covered subsamples, unioned over primitives.
    std::vector<std::uint16_t> mask(static_cast<std::size_t>(px) * px, 0);
    const std::uint16_t full = config.antialias ? 0xffff : 0x1;
    // Farthest a subsample can sit from the pixel center.
    const double reach = config.antialias ? std::hypot(0.375, 0.375) : 0.0;

    for (const auto& prim : scene.primitives) {
        const Primitive p = to_pixel_space(prim, px);
        const PixelBox box = bounding_box(p, half + 1.0, px);
        for (int row = box.y0; row < box.y1; ++row) {
            for (int col = box.x0; col < box.x1; ++col) {
                auto& m = mask[static_cast<std::size_t>(row) * px + col];
                if (m == full) continue;
                const Vec2 center{col + 0.5, row + 0.5};
                const double d = distance_to(p, center);
                if (d > half + reach) continue;
                if (!config.antialias) {
                    if (d <= half) m = full;
                    continue;
                }
                if (d <= half - reach) {
                    m = full;
                    continue;
                }
                std::uint16_t bits = m;
                for (int sy = 0; sy < 4; ++sy) {
                    for (int sx = 0; sx < 4; ++sx) {
                        const std::uint16_t bit = static_cast<std::uint16_t>(1u << (sy * 4 + sx));
                        if (bits & bit) continue;
                        const Vec2 sub{col + (sx + 0.5) / 4.0, row + (sy + 0.5) / 4.0};
                        if (distance_to(p, sub) <= half) bits = static_cast<std::uint16_t>(bits | bit);
                    }
                }
                m = bits;
            }
        }
    }

    for (std::size_t i = 0; i < mask.size(); ++i) {
        const int covered = std::popcount(static_cast<unsigned>(mask[i]));
        img.values[i] = 1.0 - static_cast<double>(covered) / samples;
    }
    return img;
}

}  // namespace geoclidean
