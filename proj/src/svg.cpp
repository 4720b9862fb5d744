#include "conerig/svg.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace conerig {

namespace {

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    return buf;
}

struct Mapper {
    double scale = 1.0, ox = 0.0, oy = 0.0;

    double x(double px) const { return ox + scale * px; }
    double y(double py) const { return oy - scale * py; }  // flip: svg y grows downwards
};

void line(std::ostringstream& out, const Mapper& m, double x1, double y1, double x2, double y2,
          const char* style) {
    out << "  <line x1=\"" << num(m.x(x1)) << "\" y1=\"" << num(m.y(y1)) << "\" x2=\""
        << num(m.x(x2)) << "\" y2=\"" << num(m.y(y2)) << "\" " << style << "/>\n";
}

}  // namespace

std::string render_svg(const FrameworkDocument& doc) {
    if (doc.signature.dim() != 2)
        throw std::invalid_argument("render_svg: only 2-dimensional frameworks are drawn");
    const int n = doc.n_vertices();

    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    for (int i = 0; i < n; ++i) {
        min_x = std::min(min_x, doc.points(i, 0));
        max_x = std::max(max_x, doc.points(i, 0));
        min_y = std::min(min_y, doc.points(i, 1));
        max_y = std::max(max_y, doc.points(i, 1));
    }
    const double span = std::max({max_x - min_x, max_y - min_y, 1.0});
    const double view = 400.0, pad = 40.0;
    Mapper m;
    m.scale = (view - 2 * pad) / span;
    m.ox = pad - m.scale * min_x + (view - 2 * pad - m.scale * (max_x - min_x)) / 2.0;
    m.oy = view - pad + m.scale * min_y - (view - 2 * pad - m.scale * (max_y - min_y)) / 2.0;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"400\" "
           "height=\"400\" viewBox=\"0 0 400 400\">\n";

    // dotted mirror lines through the origin, one per reflection element
    for (const MatrixXd& M : doc.sym_elements) {
        if (std::abs(M.determinant() + 1.0) > 1e-9) continue;
        Eigen::SelfAdjointEigenSolver<MatrixXd> es(M);
        VectorXd dir = VectorXd::Zero(2);
        for (int k = 0; k < 2; ++k)
            if (std::abs(es.eigenvalues()[k] - 1.0) < 1e-9) dir = es.eigenvectors().col(k);
        const double len = span * 1.5;
        line(out, m, -len * dir[0], -len * dir[1], len * dir[0], len * dir[1],
             "stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"2,4\"");
    }

    for (size_t e = 0; e < doc.edges.size(); ++e) {
        auto [u, v] = doc.edges[e];
        const double x1 = doc.points(u, 0), y1 = doc.points(u, 1);
        const double x2 = doc.points(v, 0), y2 = doc.points(v, 1);
        const MemberKind kind = doc.kinds.empty() ? MemberKind::bar : doc.kinds[e];
        if (kind == MemberKind::cable) {
            line(out, m, x1, y1, x2, y2,
                 "stroke=\"#000000\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\"");
        } else if (kind == MemberKind::strut) {
            // offset each of the two parallel lines by 1.5 px perpendicular
            double dx = y2 - y1, dy = x1 - x2;
            const double norm = std::hypot(dx, dy);
            dx = norm > 0 ? dx / norm * (1.5 / m.scale) : 0.0;
            dy = norm > 0 ? dy / norm * (1.5 / m.scale) : 0.0;
            line(out, m, x1 + dx, y1 + dy, x2 + dx, y2 + dy,
                 "stroke=\"#000000\" stroke-width=\"1.5\"");
            line(out, m, x1 - dx, y1 - dy, x2 - dx, y2 - dy,
                 "stroke=\"#000000\" stroke-width=\"1.5\"");
        } else {
            line(out, m, x1, y1, x2, y2, "stroke=\"#000000\" stroke-width=\"2\"");
        }
    }

    for (int i = 0; i < n; ++i)
        out << "  <circle cx=\"" << num(m.x(doc.points(i, 0))) << "\" cy=\""
            << num(m.y(doc.points(i, 1))) << "\" r=\"4\" fill=\"#ffffff\" stroke=\"#000000\" "
               "stroke-width=\"1.5\"/>\n";

    out << "</svg>\n";
    return out.str();
}

void write_svg(const FrameworkDocument& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write SVG file: " + path);
    out << render_svg(doc);
}

}  // namespace conerig
