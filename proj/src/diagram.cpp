#include "bno/diagram.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace bno {

namespace {

constexpr int kSpacing = 40;  // px between vertices
constexpr int kMargin = 30;
constexpr int kRadius = 5;
constexpr int kArcUnit = 14; // arc height per unit of distance

int vertex_x(int pos) { return kMargin + (pos - 1) * kSpacing; }

} // namespace

std::string emit_svg(const Word& w, const Contraction& c) {
    validate_contraction(w, c);
    const int n = static_cast<int>(w.size());
    int max_dist = 0;
    for (const Edge& e : c.edges) max_dist = std::max(max_dist, e.distance());
    const int baseline = kMargin + max_dist * kArcUnit;
    const int width = 2 * kMargin + std::max(0, n - 1) * kSpacing;
    const int height = baseline + kMargin;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    for (const Edge& e : c.edges) {
        int x1 = vertex_x(e.left), x2 = vertex_x(e.right);
        int peak = baseline - e.distance() * kArcUnit;
        svg << "  <path d=\"M " << x1 << " " << baseline << " Q " << (x1 + x2) / 2 << " " << peak
            << " " << x2 << " " << baseline
            << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }
    for (int pos = 1; pos <= n; ++pos) {
        bool black = w.at(pos) == Letter::Creator;
        svg << "  <circle cx=\"" << vertex_x(pos) << "\" cy=\"" << baseline << "\" r=\"" << kRadius
            << "\" stroke=\"black\" stroke-width=\"1.5\" fill=\"" << (black ? "black" : "white")
            << "\"/>\n";
        // labels follow the right-to-left numbering of the linear representation
        svg << "  <text x=\"" << vertex_x(pos) << "\" y=\"" << baseline + 18
            << "\" text-anchor=\"middle\" font-size=\"12\" font-family=\"sans-serif\">"
            << (n - pos + 1) << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string emit_ascii(const Word& w, const Contraction& c) {
    validate_contraction(w, c);
    const int n = static_cast<int>(w.size());
    int max_dist = 0;
    for (const Edge& e : c.edges) max_dist = std::max(max_dist, e.distance());

    const int cell = 2; // columns per vertex
    const int cols = std::max(1, (n - 1) * cell + 1);
    // one text row per distinct arc height, plus vertex and label rows
    std::vector<std::string> arc_rows(static_cast<std::size_t>(max_dist), std::string(cols, ' '));
    for (const Edge& e : c.edges) {
        int h = e.distance(); // row index from the vertex line, 1-based
        int c1 = (e.left - 1) * cell, c2 = (e.right - 1) * cell;
        std::string& top = arc_rows[static_cast<std::size_t>(max_dist - h)];
        top[c1] = '.';
        top[c2] = '.';
        for (int x = c1 + 1; x < c2; ++x) top[x] = '-';
        // vertical legs down to the vertex line
        for (int r = max_dist - h + 1; r < max_dist; ++r) {
            arc_rows[static_cast<std::size_t>(r)][c1] = '|';
            arc_rows[static_cast<std::size_t>(r)][c2] = '|';
        }
    }
    std::string vertices(cols, ' ');
    for (int pos = 1; pos <= n; ++pos)
        vertices[(pos - 1) * cell] = (w.at(pos) == Letter::Creator) ? '*' : 'o';
    std::string labels(cols, ' ');
    for (int pos = 1; pos <= n; ++pos) {
        std::string lab = std::to_string(n - pos + 1);
        int at = (pos - 1) * cell;
        for (std::size_t i = 0; i < lab.size() && at + static_cast<int>(i) < cols; ++i)
            labels[static_cast<std::size_t>(at) + i] = lab[i];
    }

    std::ostringstream out;
    for (auto& row : arc_rows) out << row << "\n";
    out << vertices << "\n" << labels << "\n";
    return out.str();
}

} // namespace bno
