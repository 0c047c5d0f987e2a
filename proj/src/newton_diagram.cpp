#include "approxjac/newton_diagram.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace approxjac {

Inclination Inclination::of(ExtInt length, ExtInt height) {
    if (length.is_infinite() && height.is_infinite())
        throw std::invalid_argument("inclination of {inf\\inf} is undefined");
    if (length.is_infinite()) return infinite();
    if (height.is_infinite()) return Inclination(Rational(0));
    return Inclination(Rational(length.value(), height.value()));
}

const Rational& Inclination::value() const {
    if (infinite_) throw std::logic_error("Inclination::value of +inf");
    return value_;
}

std::strong_ordering operator<=>(const Inclination& a, const Inclination& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Inclination::to_string() const { return infinite_ ? "inf" : approxjac::to_string(value_); }

ElementarySegment::ElementarySegment(ExtInt l, ExtInt m) : length(l), height(m) {
    if (l.is_infinite() && m.is_infinite()) throw std::invalid_argument("segment {inf\\inf}");
    if ((l.is_finite() && l.value() <= 0) || (m.is_finite() && m.value() <= 0))
        throw std::invalid_argument("segment lengths must be positive");
}

std::string ElementarySegment::to_string() const {
    return "{" + length.to_string() + "\\" + height.to_string() + "}";
}

NewtonDiagram::NewtonDiagram(std::vector<ElementarySegment> segments, LatticePoint shift) : shift_(shift) {
    if (shift.x < 0 || shift.y < 0) throw std::invalid_argument("diagram shift must be nonnegative");
    std::stable_sort(segments.begin(), segments.end(),
                     [](const auto& a, const auto& b) { return a.inclination() < b.inclination(); });
    for (auto& s : segments) {
        if (!segments_.empty() && segments_.back().inclination() == s.inclination()) {
            auto& last = segments_.back();
            last = ElementarySegment(last.length + s.length, last.height + s.height);
        } else {
            segments_.push_back(s);
        }
    }
}

NewtonDiagram NewtonDiagram::normalized() const {
    std::vector<ElementarySegment> segs = segments_;
    if (shift_.x > 0) segs.emplace_back(ExtInt(shift_.x), ExtInt::infinity());
    if (shift_.y > 0) segs.emplace_back(ExtInt::infinity(), ExtInt(shift_.y));
    return NewtonDiagram(std::move(segs));
}

std::vector<LatticePoint> NewtonDiagram::vertices() const {
    std::int64_t left = shift_.x;
    std::int64_t bottom = shift_.y;
    std::vector<const ElementarySegment*> finite;
    for (const auto& s : segments_) {
        if (s.height.is_infinite())
            left += s.length.value();
        else if (s.length.is_infinite())
            bottom += s.height.value();
        else
            finite.push_back(&s);
    }
    LatticePoint p{left, bottom + finite_height()};
    std::vector<LatticePoint> out{p};
    for (const auto* s : finite) {
        p.x += s->length.value();
        p.y -= s->height.value();
        out.push_back(p);
    }
    return out;
}

std::vector<Inclination> NewtonDiagram::inclinations() const {
    std::vector<Inclination> out;
    out.reserve(segments_.size());
    for (const auto& s : segments_) out.push_back(s.inclination());
    return out;
}

std::int64_t NewtonDiagram::finite_length() const {
    std::int64_t t = 0;
    for (const auto& s : segments_)
        if (s.length.is_finite() && s.height.is_finite()) t += s.length.value();
    return t;
}

std::int64_t NewtonDiagram::finite_height() const {
    std::int64_t t = 0;
    for (const auto& s : segments_)
        if (s.length.is_finite() && s.height.is_finite()) t += s.height.value();
    return t;
}

bool operator==(const NewtonDiagram& a, const NewtonDiagram& b) {
    return a.normalized().segments_ == b.normalized().segments_;
}

std::string NewtonDiagram::to_string() const {
    std::string out;
    if (shift_ != LatticePoint{}) out = "(" + std::to_string(shift_.x) + "," + std::to_string(shift_.y) + ")";
    if (segments_.empty()) return out.empty() ? "{}" : out;
    if (!out.empty()) out += "+";
    for (std::size_t i = 0; i < segments_.size(); ++i) {
        if (i > 0) out += "+";
        out += segments_[i].to_string();
    }
    return out;
}

NewtonDiagram diagram_from_support(const std::vector<LatticePoint>& points) {
    if (points.empty()) throw std::invalid_argument("diagram_from_support: empty support");
    std::vector<LatticePoint> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    const std::int64_t ymin = std::min_element(pts.begin(), pts.end(), [](auto& a, auto& b) { return a.y < b.y; })->y;

    auto cross = [](const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
        return static_cast<__int128>(a.x - o.x) * (b.y - o.y) - static_cast<__int128>(a.y - o.y) * (b.x - o.x);
    };
    std::vector<LatticePoint> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
        hull.push_back(p);
        if (p.y == ymin) break;  // points are x-sorted: first hit of ymin ends the staircase
    }

    std::vector<ElementarySegment> segs;
    if (hull.front().x > 0) segs.emplace_back(ExtInt(hull.front().x), ExtInt::infinity());
    if (ymin > 0) segs.emplace_back(ExtInt::infinity(), ExtInt(ymin));
    for (std::size_t i = 1; i < hull.size(); ++i)
        segs.emplace_back(ExtInt(hull[i].x - hull[i - 1].x), ExtInt(hull[i - 1].y - hull[i].y));
    return NewtonDiagram(std::move(segs));
}

NewtonDiagram minkowski_sum(const NewtonDiagram& a, const NewtonDiagram& b) {
    std::vector<ElementarySegment> segs = a.segments();
    segs.insert(segs.end(), b.segments().begin(), b.segments().end());
    return NewtonDiagram(std::move(segs), {a.shift().x + b.shift().x, a.shift().y + b.shift().y});
}

std::vector<ElementarySegment> canonical_decomposition(const NewtonDiagram& d) { return d.normalized().segments(); }

NewtonDiagram diagram_difference(const NewtonDiagram& a, const NewtonDiagram& b) {
    auto fail = [](const std::string& why) { return ValidationError("difference not representable: " + why); };
    std::vector<ElementarySegment> rest = a.normalized().segments();
    const NewtonDiagram bn = b.normalized();
    for (const auto& s : bn.segments()) {
        auto it = std::find_if(rest.begin(), rest.end(),
                               [&](const auto& r) { return r.inclination() == s.inclination(); });
        if (it == rest.end()) throw fail("no segment of inclination " + s.inclination().to_string());
        auto sub = [&](ExtInt big, ExtInt small) -> ExtInt {
            if (big.is_infinite()) return big;
            if (small > big) throw fail(it->to_string() + " is smaller than " + s.to_string());
            return ExtInt(big.value() - small.value());
        };
        const ExtInt l = sub(it->length, s.length);
        const ExtInt m = sub(it->height, s.height);
        if ((l.is_finite() && l.value() == 0) || (m.is_finite() && m.value() == 0))
            rest.erase(it);
        else
            *it = ElementarySegment(l, m);
    }
    return NewtonDiagram(std::move(rest));
}

namespace {

std::string render_ascii(const NewtonDiagram& d) {
    const auto verts = d.vertices();
    std::ostringstream os;
    os << d.to_string() << "\n";
    os << "vertices:";
    for (const auto& v : verts) os << " (" << v.x << "," << v.y << ")";
    os << "\n";

    const std::int64_t max_x = verts.back().x + 2;
    const std::int64_t max_y = verts.front().y + 2;
    const std::int64_t sx = std::max<std::int64_t>(1, (max_x + 59) / 60);
    const std::int64_t sy = std::max<std::int64_t>(1, (max_y + 19) / 20);
    const std::int64_t cols = max_x / sx + 1;
    const std::int64_t rows = max_y / sy + 1;
    std::vector<std::string> grid(static_cast<std::size_t>(rows), std::string(static_cast<std::size_t>(cols), ' '));
    auto put = [&](std::int64_t x, std::int64_t y, char c) {
        const std::int64_t cx = x / sx;
        const std::int64_t cy = y / sy;
        if (cx < 0 || cy < 0 || cx >= cols || cy >= rows) return;
        char& cell = grid[static_cast<std::size_t>(cy)][static_cast<std::size_t>(cx)];
        if (cell == 'o') return;
        cell = c;
    };
    for (std::int64_t x = 0; x < cols; ++x) put(x * sx, 0, '.');
    for (std::int64_t y = 0; y < rows; ++y) put(0, y * sy, '.');
    for (std::int64_t y = verts.front().y; y <= max_y; ++y) put(verts.front().x, y, '|');
    for (std::int64_t x = verts.back().x; x <= max_x; ++x) put(x, verts.back().y, '-');
    for (std::size_t i = 1; i < verts.size(); ++i) {
        const auto& p = verts[i - 1];
        const auto& q = verts[i];
        const std::int64_t steps = std::max(q.x - p.x, p.y - q.y);
        for (std::int64_t t = 0; t <= steps; ++t) {
            const std::int64_t x = p.x + (q.x - p.x) * t / steps;
            const std::int64_t y = p.y - (p.y - q.y) * t / steps;
            put(x, y, '*');
        }
    }
    for (const auto& v : verts) put(v.x, v.y, 'o');

    for (auto it = grid.rbegin(); it != grid.rend(); ++it) {
        std::string line = *it;
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << "\n";
    }
    if (sx > 1 || sy > 1) os << "scale: 1 column = " << sx << ", 1 row = " << sy << "\n";
    return os.str();
}

std::string render_svg(const NewtonDiagram& d) {
    const auto verts = d.vertices();
    const double max_x = static_cast<double>(verts.back().x) + 2.0;
    const double max_y = static_cast<double>(verts.front().y) + 2.0;
    const double margin = 40.0;
    const double unit = std::max(4.0, std::min(40.0, 480.0 / std::max(max_x, max_y)));
    const double width = max_x * unit + 2 * margin;
    const double height = max_y * unit + 2 * margin;
    auto px = [&](double x) { return margin + x * unit; };
    auto py = [&](double y) { return height - margin - y * unit; };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    os << "  <title>" << d.to_string() << "</title>\n";
    os << "  <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(max_x) << "\" y2=\"" << py(0)
       << "\" stroke=\"#999\"/>\n";
    os << "  <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(0) << "\" y2=\"" << py(max_y)
       << "\" stroke=\"#999\"/>\n";

    os << "  <polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\" points=\"";
    os << px(static_cast<double>(verts.front().x)) << "," << py(max_y);
    for (const auto& v : verts) os << " " << px(static_cast<double>(v.x)) << "," << py(static_cast<double>(v.y));
    os << " " << px(max_x) << "," << py(static_cast<double>(verts.back().y)) << "\"/>\n";

    for (const auto& v : verts) {
        os << "  <circle cx=\"" << px(static_cast<double>(v.x)) << "\" cy=\"" << py(static_cast<double>(v.y))
           << "\" r=\"3\" fill=\"#1f4e9c\"/>\n";
        os << "  <text x=\"" << px(static_cast<double>(v.x)) + 5 << "\" y=\"" << py(static_cast<double>(v.y)) - 5
           << "\" font-size=\"11\" font-family=\"monospace\">(" << v.x << "," << v.y << ")</text>\n";
    }
    std::size_t vi = 0;
    for (const auto& s : d.segments()) {
        if (s.length.is_infinite() || s.height.is_infinite()) continue;
        const auto& p = verts[vi];
        const auto& q = verts[vi + 1];
        ++vi;
        const double mx = (static_cast<double>(p.x) + static_cast<double>(q.x)) / 2.0;
        const double my = (static_cast<double>(p.y) + static_cast<double>(q.y)) / 2.0;
        os << "  <text x=\"" << px(mx) + 6 << "\" y=\"" << py(my) + 14
           << "\" font-size=\"11\" font-family=\"monospace\" fill=\"#a33\">" << s.to_string()
           << " incl " << s.inclination().to_string() << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace

std::string render(const NewtonDiagram& d, RenderFormat format) {
    return format == RenderFormat::Svg ? render_svg(d) : render_ascii(d);
}

}  // namespace approxjac
