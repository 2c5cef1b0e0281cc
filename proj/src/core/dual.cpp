#include "dual.hpp"

#include <algorithm>
#include <map>

namespace rhombiflip {

namespace {

Point2 half(const Point2& p) { return {p.x / 2, p.y / 2}; }

}  // namespace

DualDiagram dual_of(const DirectionSet& d, const PlanarTiling& t) {
    if (d.n != t.n()) throw Error("dual_of: dimension mismatch");
    DualDiagram dd;
    dd.n = d.n;
    for (const Rhombus& r : t.rhombi()) {
        Point2 center = project(d, r.base) + half(d.dir(r.i) + d.dir(r.j));
        dd.crossings.push_back({r.i, r.j, center});
    }

    Mask full = (Mask(1) << d.n) - 1;
    for (int i = 1; i <= d.n; ++i) {
        // midline segment per rhombus on direction i, endpoints on the two
        // i-edges' midpoints
        std::map<Point2, std::vector<Point2>> adj;
        size_t segs = 0;
        for (const Rhombus& r : t.rhombi()) {
            int other = (r.i == i) ? r.j : (r.j == i ? r.i : 0);
            if (other == 0) continue;
            Point2 a = project(d, r.base) + half(d.dir(i));
            Point2 b = a + d.dir(other);
            adj[a].push_back(b);
            adj[b].push_back(a);
            ++segs;
        }
        Mask prefix_before = 0;
        for (int s = 1; s < i; ++s) prefix_before |= bit_of(s);
        Point2 start = project(d, prefix_before) + half(d.dir(i));
        Point2 end = project(d, full ^ prefix_before ^ bit_of(i)) + half(d.dir(i));

        DualDiagram::Arc arc;
        arc.label = i;
        arc.points.push_back(start);
        Point2 prev = start, cur = start;
        for (size_t step = 0; step < segs; ++step) {
            auto it = adj.find(cur);
            if (it == adj.end()) throw Error("dual_of: arc does not chain");
            Point2 next;
            bool found = false;
            for (const Point2& cand : it->second)
                if (!(cand == prev) || step == 0) {
                    next = cand;
                    found = true;
                    break;
                }
            if (!found) throw Error("dual_of: arc does not chain");
            prev = cur;
            cur = next;
            arc.points.push_back(cur);
        }
        if (!(cur == end)) throw Error("dual_of: arc does not reach the opposite side");
        dd.arcs.push_back(std::move(arc));
    }
    return dd;
}

Gen triple_point_of_flip(const CubeFlip& f) { return Gen{f.axes[0], f.axes[1], f.axes[2]}; }

namespace {

// round-half-up to 6 decimal places, printed without trailing zeros
std::string dec6(const Rat& r) {
    BigInt num = numerator(r) * 2000000 + denominator(r);
    BigInt den = denominator(r) * 2;
    BigInt q = num / den;
    if (num % den != 0 && num < 0) q -= 1;
    std::string sign;
    if (q < 0) { sign = "-"; q = -q; }
    BigInt ip = q / 1000000, fp = q % 1000000;
    if (fp == 0) return sign + ip.str();
    std::string frac = fp.str();
    frac.insert(0, 6 - frac.size(), '0');
    while (frac.back() == '0') frac.pop_back();
    return sign + ip.str() + "." + frac;
}

const char* kTileFill[] = {"#cfe8f3", "#f3d9cf", "#d8f3cf", "#f3eccf", "#e3cff3",
                           "#cff3e8", "#f3cfe0", "#dee2e6", "#f0f3cf", "#cfd4f3",
                           "#e8f3cf", "#f3cfcf", "#cfeef3", "#ead9c5", "#d9c5ea"};
const char* kArcStroke[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                            "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f",
                            "#aec7e8", "#98df8a", "#ff9896", "#c5b0d5", "#c49c94"};

}  // namespace

std::string render_svg(const DirectionSet& d, const PlanarTiling& t, const SvgStyle& style) {
    if (d.n != t.n()) throw Error("render_svg: dimension mismatch");
    auto boundary = zonogon_boundary(d);
    Rat minx = boundary[0].x, maxx = minx, miny = boundary[0].y, maxy = miny;
    for (const Point2& p : boundary) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }
    Rat margin(1, 2);
    Rat scale(style.scale);
    auto tx = [&](const Point2& p) { return (p.x - minx + margin) * scale; };
    auto ty = [&](const Point2& p) { return (maxy - p.y + margin) * scale; };
    auto pt = [&](const Point2& p) { return dec6(tx(p)) + "," + dec6(ty(p)); };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " +
           dec6((maxx - minx + margin * 2) * scale) + " " +
           dec6((maxy - miny + margin * 2) * scale) + "\">\n";

    if (style.tiles) {
        svg += "<g stroke=\"#445\" stroke-width=\"1.5\" stroke-linejoin=\"round\">\n";
        size_t idx = 0;
        for (const Rhombus& r : t.rhombi()) {
            auto cs = rhombus_corners(d, r);
            svg += "<polygon fill=\"" + std::string(kTileFill[idx++ % 15]) + "\" points=\"";
            for (size_t c = 0; c < 4; ++c) svg += (c ? " " : "") + pt(cs[c]);
            svg += "\"/>\n";
        }
        svg += "</g>\n";
    }

    DualDiagram dd;
    if (style.dual) {
        dd = dual_of(d, t);
        svg += "<g fill=\"none\" stroke-width=\"2.5\" stroke-linecap=\"round\">\n";
        for (const auto& arc : dd.arcs) {
            svg += "<polyline stroke=\"" + std::string(kArcStroke[(arc.label - 1) % 15]) + "\" points=\"";
            for (size_t c = 0; c < arc.points.size(); ++c) svg += (c ? " " : "") + pt(arc.points[c]);
            svg += "\"/>\n";
        }
        svg += "</g>\n<g fill=\"#222\">\n";
        for (const auto& cr : dd.crossings)
            svg += "<circle cx=\"" + dec6(tx(cr.at)) + "\" cy=\"" + dec6(ty(cr.at)) +
                   "\" r=\"" + dec6(scale / 16) + "\"/>\n";
        svg += "</g>\n";
    }

    if (style.labels) {
        svg += "<g font-family=\"sans-serif\" font-size=\"" + dec6(scale / 4) +
               "\" text-anchor=\"middle\" fill=\"#203\">\n";
        for (const Rhombus& r : t.rhombi()) {
            Point2 center = project(d, r.base) + half(d.dir(r.i) + d.dir(r.j));
            svg += "<text x=\"" + dec6(tx(center)) + "\" y=\"" + dec6(ty(center)) + "\">" +
                   std::to_string(r.i) + "," + std::to_string(r.j) + "</text>\n";
        }
        if (style.dual)
            for (const auto& arc : dd.arcs)
                svg += "<text x=\"" + dec6(tx(arc.points[0])) + "\" y=\"" + dec6(ty(arc.points[0]) - scale / 4) +
                       "\">" + std::to_string(arc.label) + "</text>\n";
        svg += "</g>\n";
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace rhombiflip
