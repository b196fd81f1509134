#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>

#include "gradest/error_map.hpp"
#include "gradest/errors.hpp"

namespace gradest {

/// Serializes a grid as binary PGM: "P5\n<width> <height>\n65535\n" followed
/// by big-endian 16-bit samples, row-major with row 0 (the ymax edge) first.
/// Sample value is round(epsilon * 65535); degenerate pixels are written as
/// 0 (black).
inline void write_pgm(const ErrorGrid& grid, std::ostream& out) {
    out << "P5\n" << grid.width() << ' ' << grid.height() << "\n65535\n";
    for (const auto& s : grid.samples()) {
        std::uint16_t v = s.degenerate
                              ? 0
                              : static_cast<std::uint16_t>(std::lround(s.epsilon * 65535.0));
        char bytes[2] = {static_cast<char>(v >> 8), static_cast<char>(v & 0xff)};
        out.write(bytes, 2);
    }
    if (!out) throw IoError("failed writing PGM data");
}

inline void write_pgm(const ErrorGrid& grid, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    write_pgm(grid, out);
    out.close();
    if (!out) throw IoError("failed writing " + path.string());
}

} // namespace gradest
