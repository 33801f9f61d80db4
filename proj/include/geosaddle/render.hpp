// Figure data emission: uniform grid sampling, surface meshes in a plain
// "v x y z" / "f i j k" text format, and marching-squares level curves with
// CSV and SVG writers.
#pragma once

#include <geosaddle/field.hpp>
#include <geosaddle/vec2.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace geosaddle {

/// Row-major in x: values[ix * ny + iy], y varying fastest.
struct Grid {
    Region region;
    int nx = 0;
    int ny = 0;
    std::vector<double> values; // NaN marks a missing sample

    double x_at(int ix) const
    {
        return nx == 1 ? region.xmin
                       : region.xmin + region.width() * ix / (nx - 1);
    }
    double y_at(int iy) const
    {
        return ny == 1 ? region.ymin
                       : region.ymin + region.height() * iy / (ny - 1);
    }
    double value(int ix, int iy) const { return values[ix * ny + iy]; }
    bool present(int ix, int iy) const { return std::isfinite(value(ix, iy)); }
};

inline Grid sample_grid(const Field& f, const Region& region, int nx, int ny)
{
    Grid g;
    g.region = region;
    g.nx = nx;
    g.ny = ny;
    g.values.resize(static_cast<std::size_t>(nx) * ny);
    for (int ix = 0; ix < nx; ++ix) {
        for (int iy = 0; iy < ny; ++iy) {
            double v;
            try {
                v = f.value({g.x_at(ix), g.y_at(iy)});
            } catch (const DomainError&) {
                v = std::numeric_limits<double>::quiet_NaN();
            }
            g.values[ix * ny + iy] = v;
        }
    }
    return g;
}

inline Grid sample_grid(const Expr& f, const Region& region, int nx, int ny)
{
    return sample_grid(ExprField(f), region, nx, ny);
}

inline std::string grid_csv(const Grid& g)
{
    std::ostringstream out;
    out.precision(17);
    out << "x,y,f\n";
    for (int ix = 0; ix < g.nx; ++ix)
        for (int iy = 0; iy < g.ny; ++iy) {
            out << g.x_at(ix) << ',' << g.y_at(iy) << ',';
            if (g.present(ix, iy))
                out << g.value(ix, iy);
            else
                out << "nan";
            out << '\n';
        }
    return out.str();
}

/// Vertex list then triangle faces (1-indexed). Missing samples are skipped
/// and faces touching them omitted; a fully-present grid has nx*ny vertices
/// and 2(nx-1)(ny-1) triangles.
inline std::string surface_mesh(const Grid& g)
{
    std::ostringstream out;
    out.precision(17);
    std::vector<int> vertex_id(g.values.size(), 0);
    int next = 1;
    for (int ix = 0; ix < g.nx; ++ix)
        for (int iy = 0; iy < g.ny; ++iy)
            if (g.present(ix, iy)) {
                vertex_id[ix * g.ny + iy] = next++;
                out << "v " << g.x_at(ix) << ' ' << g.y_at(iy) << ' '
                    << g.value(ix, iy) << '\n';
            }
    auto id = [&](int ix, int iy) { return vertex_id[ix * g.ny + iy]; };
    for (int ix = 0; ix + 1 < g.nx; ++ix)
        for (int iy = 0; iy + 1 < g.ny; ++iy) {
            int a = id(ix, iy), b = id(ix + 1, iy), c = id(ix + 1, iy + 1),
                d = id(ix, iy + 1);
            if (a && b && c)
                out << "f " << a << ' ' << b << ' ' << c << '\n';
            if (a && c && d)
                out << "f " << a << ' ' << c << ' ' << d << '\n';
        }
    return out.str();
}

struct Polyline {
    double level = 0.0;
    std::vector<Vec2> points;
};

namespace detail {

struct EdgeKey {
    // Grid edge identified by its lower-left sample and orientation.
    int ix, iy;
    bool horizontal;
    friend bool operator<(const EdgeKey& a, const EdgeKey& b)
    {
        return std::tie(a.ix, a.iy, a.horizontal)
               < std::tie(b.ix, b.iy, b.horizontal);
    }
};

} // namespace detail

/// Marching squares with linear interpolation on cell edges; the ambiguous
/// two-crossing cells are resolved by the cell-center sample. Segments are
/// chained into polylines by shared edge endpoints.
inline std::vector<Polyline> level_curves(const Grid& g,
                                          const std::vector<double>& levels)
{
    std::vector<Polyline> out;
    for (double level : levels) {
        // above := value > level; on-level samples count as below so that a
        // zero set through grid nodes still produces crossings.
        auto above = [&](int ix, int iy) { return g.value(ix, iy) > level; };
        auto interp = [&](double va, double vb) {
            double t = (level - va) / (vb - va);
            return std::clamp(t, 0.0, 1.0);
        };

        using detail::EdgeKey;
        std::vector<std::pair<EdgeKey, EdgeKey>> segments;
        auto emit = [&](EdgeKey a, EdgeKey b) { segments.push_back({a, b}); };

        for (int ix = 0; ix + 1 < g.nx; ++ix) {
            for (int iy = 0; iy + 1 < g.ny; ++iy) {
                if (!g.present(ix, iy) || !g.present(ix + 1, iy)
                    || !g.present(ix, iy + 1) || !g.present(ix + 1, iy + 1))
                    continue;
                bool a = above(ix, iy), b = above(ix + 1, iy),
                     c = above(ix + 1, iy + 1), d = above(ix, iy + 1);
                int mask = (a ? 1 : 0) | (b ? 2 : 0) | (c ? 4 : 0)
                           | (d ? 8 : 0);
                if (mask == 0 || mask == 15)
                    continue;
                EdgeKey bottom{ix, iy, true}, top{ix, iy + 1, true},
                    left{ix, iy, false}, right{ix + 1, iy, false};
                switch (mask) {
                case 1: case 14: emit(left, bottom); break;
                case 2: case 13: emit(bottom, right); break;
                case 4: case 11: emit(right, top); break;
                case 8: case 7: emit(top, left); break;
                case 3: case 12: emit(left, right); break;
                case 6: case 9: emit(bottom, top); break;
                case 5: case 10: {
                    // Saddle cell: decide pairing by the center sample.
                    double center = 0.25
                                    * (g.value(ix, iy) + g.value(ix + 1, iy)
                                       + g.value(ix, iy + 1)
                                       + g.value(ix + 1, iy + 1));
                    bool center_above = center > level;
                    if ((mask == 5) == center_above) {
                        emit(left, top);
                        emit(bottom, right);
                    } else {
                        emit(left, bottom);
                        emit(right, top);
                    }
                    break;
                }
                default: break;
                }
            }
        }

        auto edge_point = [&](EdgeKey e) -> Vec2 {
            if (e.horizontal) {
                double va = g.value(e.ix, e.iy), vb = g.value(e.ix + 1, e.iy);
                double t = interp(va, vb);
                return {g.x_at(e.ix) + t * (g.x_at(e.ix + 1) - g.x_at(e.ix)),
                        g.y_at(e.iy)};
            }
            double va = g.value(e.ix, e.iy), vb = g.value(e.ix, e.iy + 1);
            double t = interp(va, vb);
            return {g.x_at(e.ix),
                    g.y_at(e.iy) + t * (g.y_at(e.iy + 1) - g.y_at(e.iy))};
        };

        // Chain segments into polylines through shared edges.
        std::multimap<EdgeKey, std::size_t> by_edge;
        for (std::size_t s = 0; s < segments.size(); ++s) {
            by_edge.insert({segments[s].first, s});
            by_edge.insert({segments[s].second, s});
        }
        std::vector<bool> used(segments.size(), false);
        auto same = [](const EdgeKey& a, const EdgeKey& b) {
            return !(a < b) && !(b < a);
        };
        auto take_neighbor = [&](EdgeKey e) -> std::optional<std::size_t> {
            auto [lo, hi] = by_edge.equal_range(e);
            for (auto it = lo; it != hi; ++it)
                if (!used[it->second])
                    return it->second;
            return std::nullopt;
        };

        for (std::size_t s = 0; s < segments.size(); ++s) {
            if (used[s])
                continue;
            used[s] = true;
            std::vector<EdgeKey> chain{segments[s].first, segments[s].second};
            for (int dir = 0; dir < 2; ++dir) {
                for (;;) {
                    EdgeKey tail = dir == 0 ? chain.back() : chain.front();
                    auto next = take_neighbor(tail);
                    if (!next)
                        break;
                    used[*next] = true;
                    EdgeKey other = same(segments[*next].first, tail)
                                        ? segments[*next].second
                                        : segments[*next].first;
                    if (dir == 0)
                        chain.push_back(other);
                    else
                        chain.insert(chain.begin(), other);
                }
            }
            Polyline line;
            line.level = level;
            for (EdgeKey e : chain)
                line.points.push_back(edge_point(e));
            out.push_back(std::move(line));
        }
    }
    return out;
}

inline std::string polylines_csv(const std::vector<Polyline>& lines)
{
    std::ostringstream out;
    out.precision(17);
    out << "polyline,level,x,y\n";
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (const Vec2& p : lines[i].points)
            out << i << ',' << lines[i].level << ',' << p.x << ',' << p.y
                << '\n';
    return out.str();
}

/// One path element per polyline, region mapped to a fixed-width viewBox.
inline std::string polylines_svg(const std::vector<Polyline>& lines,
                                 const Region& region, int width_px = 640)
{
    const double sx = width_px / region.width();
    const int height_px =
        static_cast<int>(std::lround(region.height() * sx));
    std::ostringstream out;
    out.precision(8);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 "
        << width_px << ' ' << height_px << "\">\n";
    for (const Polyline& line : lines) {
        if (line.points.size() < 2)
            continue;
        out << "  <path fill=\"none\" stroke=\"black\" d=\"";
        for (std::size_t i = 0; i < line.points.size(); ++i) {
            Vec2 p = line.points[i];
            out << (i == 0 ? 'M' : 'L') << (p.x - region.xmin) * sx << ' '
                << (region.ymax - p.y) * sx;
        }
        out << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace geosaddle
