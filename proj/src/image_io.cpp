// --------------------------------------------------------------------
// Minimal PNG codec for the one pixel format this project emits:
// 8-bit grayscale, non-interlaced. Deflate and CRC come from zlib.
// --------------------------------------------------------------------
#include "geoclidean/image_io.hpp"

#include <zlib.h>

#include <array>
#include <cmath>
#include <cstring>
#include <fstream>
#include <vector>

namespace geoclidean {
namespace {

void put_u32(std::vector<unsigned char>& out, std::uint32_t v) {
    out.push_back(static_cast<unsigned char>(v >> 24));
    out.push_back(static_cast<unsigned char>(v >> 16));
    out.push_back(static_cast<unsigned char>(v >> 8));
    out.push_back(static_cast<unsigned char>(v));
}

std::uint32_t get_u32(const unsigned char* p) {
    return (static_cast<std::uint32_t>(p[0]) << 24) | (static_cast<std::uint32_t>(p[1]) << 16) |
           (static_cast<std::uint32_t>(p[2]) << 8) | p[3];
}

void append_chunk(std::vector<unsigned char>& out, const char type[4],
                  const std::vector<unsigned char>& data) {
    put_u32(out, static_cast<std::uint32_t>(data.size()));
    const std::size_t crc_start = out.size();
    out.insert(out.end(), type, type + 4);
    out.insert(out.end(), data.begin(), data.end());
    const uLong crc = crc32(0L, out.data() + crc_start, static_cast<uInt>(out.size() - crc_start));
    put_u32(out, static_cast<std::uint32_t>(crc));
}

std::vector<unsigned char> zlib_deflate(const std::vector<unsigned char>& raw) {
    uLongf bound = compressBound(static_cast<uLong>(raw.size()));
    std::vector<unsigned char> out(bound);
    if (compress2(out.data(), &bound, raw.data(), static_cast<uLong>(raw.size()), 6) != Z_OK)
        throw ImageIoError("deflate failed");
    out.resize(bound);
    return out;
}

std::vector<unsigned char> zlib_inflate(const unsigned char* data, std::size_t size,
                                        std::size_t expected) {
    std::vector<unsigned char> out(expected);
    uLongf len = static_cast<uLongf>(expected);
    if (uncompress(out.data(), &len, data, static_cast<uLong>(size)) != Z_OK || len != expected)
        throw ImageIoError("inflate failed or size mismatch");
    return out;
}

unsigned char quantize(double v) {
    const double c = v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
    return static_cast<unsigned char>(std::lround(c * 255.0));
}

int paeth(int a, int b, int c) {
    const int p = a + b - c;
    const int pa = std::abs(p - a), pb = std::abs(p - b), pc = std::abs(p - c);
    if (pa <= pb && pa <= pc) return a;
    return pb <= pc ? b : c;
}

}  // namespace

void write_png(const std::filesystem::path& path, const RasterImage& img) {
    const int w = img.width, h = img.height;
    std::vector<unsigned char> raw(static_cast<std::size_t>(h) * (w + 1));
    for (int row = 0; row < h; ++row) {
        unsigned char* line = raw.data() + static_cast<std::size_t>(row) * (w + 1);
        line[0] = 0;  // filter: none
        for (int col = 0; col < w; ++col) line[1 + col] = quantize(img.at(row, col));
    }

    std::vector<unsigned char> png;
    static const unsigned char sig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
    png.insert(png.end(), sig, sig + 8);

    std::vector<unsigned char> ihdr;
    put_u32(ihdr, static_cast<std::uint32_t>(w));
    put_u32(ihdr, static_cast<std::uint32_t>(h));
    ihdr.push_back(8);  // bit depth
    ihdr.push_back(0);  // grayscale
    ihdr.push_back(0);  // deflate
    ihdr.push_back(0);  // adaptive filtering
    ihdr.push_back(0);  // no interlace
    append_chunk(png, "IHDR", ihdr);
    append_chunk(png, "IDAT", zlib_deflate(raw));
    append_chunk(png, "IEND", {});

    std::ofstream out(path, std::ios::binary);
    if (!out) throw ImageIoError("cannot write " + path.string());
    out.write(reinterpret_cast<const char*>(png.data()), static_cast<std::streamsize>(png.size()));
}

RasterImage read_png(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ImageIoError("cannot open " + path.string());
    std::vector<unsigned char> buf((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
    static const unsigned char sig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
    if (buf.size() < 8 || std::memcmp(buf.data(), sig, 8) != 0)
        throw ImageIoError(path.string() + " is not a PNG file");

    int w = 0, h = 0;
    std::vector<unsigned char> idat;
    std::size_t pos = 8;
    while (pos + 8 <= buf.size()) {
        const std::uint32_t len = get_u32(buf.data() + pos);
        const std::string type(reinterpret_cast<const char*>(buf.data() + pos + 4), 4);
        const unsigned char* data = buf.data() + pos + 8;
        if (pos + 12 + len > buf.size()) throw ImageIoError("truncated PNG chunk");
        if (type == "IHDR") {
            w = static_cast<int>(get_u32(data));
            h = static_cast<int>(get_u32(data + 4));
            if (data[8] != 8 || data[9] != 0 || data[12] != 0)
                throw ImageIoError("unsupported PNG (need 8-bit grayscale, non-interlaced)");
        } else if (type == "IDAT") {
            idat.insert(idat.end(), data, data + len);
        } else if (type == "IEND") {
            break;
        }
        pos += 12 + len;
    }
    if (w <= 0 || h <= 0) throw ImageIoError("missing IHDR");

    const std::size_t stride = static_cast<std::size_t>(w) + 1;
    std::vector<unsigned char> raw = zlib_inflate(idat.data(), idat.size(), stride * h);

    RasterImage img;
    img.width = w;
    img.height = h;
    img.values.resize(static_cast<std::size_t>(w) * h);
    std::vector<unsigned char> prev(static_cast<std::size_t>(w), 0);
    for (int row = 0; row < h; ++row) {
        const unsigned char filter = raw[row * stride];
        unsigned char* line = raw.data() + row * stride + 1;
        for (int col = 0; col < w; ++col) {
            const int a = col > 0 ? line[col - 1] : 0;
            const int b = prev[static_cast<std::size_t>(col)];
            const int c = col > 0 ? prev[static_cast<std::size_t>(col - 1)] : 0;
            int v = line[col];
            switch (filter) {
                case 0: break;
                case 1: v += a; break;
                case 2: v += b; break;
                case 3: v += (a + b) / 2; break;
                case 4: v += paeth(a, b, c); break;
                default: throw ImageIoError("unsupported PNG filter");
            }
            line[col] = static_cast<unsigned char>(v & 0xff);
            img.at(row, col) = line[col] / 255.0;
        }
        std::memcpy(prev.data(), line, static_cast<std::size_t>(w));
    }
    return img;
}

void write_pgm(const std::filesystem::path& path, const RasterImage& img) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ImageIoError("cannot write " + path.string());
    out << "P5\n" << img.width << ' ' << img.height << "\n255\n";
    for (int row = 0; row < img.height; ++row)
        for (int col = 0; col < img.width; ++col) out.put(static_cast<char>(quantize(img.at(row, col))));
}

}  // namespace geoclidean
