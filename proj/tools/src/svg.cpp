#include <rotor/io.hpp>
#include <rotor/svg.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace rotor::svg {

namespace {

constexpr double kSize = 400;
constexpr double kMargin = 30;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

}  // namespace

std::string render(const PLLift& f, const std::string& title) {
    // Nodes over one period plus the first node of the next.
    std::vector<Node> nodes = f.nodes();
    Node wrap = nodes.front();
    wrap.x += 1;
    wrap.left += f.rise();
    wrap.point += f.rise();
    wrap.right += f.rise();

    double lo = f.eval_left(Rational(0)).get_d();
    double hi = f.eval(Rational(1)).get_d();
    for (const Node& n : nodes) {
        lo = std::min({lo, n.left.get_d(), n.point.get_d(), n.right.get_d()});
        hi = std::max({hi, n.left.get_d(), n.point.get_d(), n.right.get_d()});
    }
    if (hi - lo < 1e-9) hi = lo + 1;
    auto px = [](const Rational& x) { return kMargin + x.get_d() * kSize; };
    auto py = [&](const Rational& y) { return kMargin + (hi - y.get_d()) / (hi - lo) * kSize; };

    std::ostringstream out;
    const double full = kSize + 2 * kMargin;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(full) << "\" height=\"" << fmt(full)
        << "\" viewBox=\"0 0 " << fmt(full) << ' ' << fmt(full) << "\">\n";
    if (!title.empty()) out << "<title>" << title << "</title>\n";
    out << "<rect x=\"" << fmt(kMargin) << "\" y=\"" << fmt(kMargin) << "\" width=\"" << fmt(kSize)
        << "\" height=\"" << fmt(kSize) << "\" fill=\"none\" stroke=\"#999\"/>\n";

    // Segment from the left limit at x=0 up to the first node.
    const Node& first = nodes.front();
    if (first.x > 0) {
        Rational y0 = f.eval_right(Rational(0));
        out << "<line x1=\"" << fmt(px(Rational(0))) << "\" y1=\"" << fmt(py(y0)) << "\" x2=\"" << fmt(px(first.x))
            << "\" y2=\"" << fmt(py(first.left)) << "\" stroke=\"black\"/>\n";
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const Node& a = nodes[i];
        const Node& b = i + 1 < nodes.size() ? nodes[i + 1] : wrap;
        Rational x_end = b.x;
        Rational y_end = b.left;
        if (x_end > 1) {
            // Clip the wrap-around piece at x = 1.
            x_end = Rational(1);
            y_end = f.eval_left(Rational(1));
        }
        out << "<line x1=\"" << fmt(px(a.x)) << "\" y1=\"" << fmt(py(a.right)) << "\" x2=\"" << fmt(px(x_end))
            << "\" y2=\"" << fmt(py(y_end)) << "\" stroke=\"black\"/>\n";
        if (a.left != a.point || a.right != a.point) {
            for (const Rational* v : {&a.left, &a.right}) {
                if (*v == a.point) continue;
                out << "<circle cx=\"" << fmt(px(a.x)) << "\" cy=\"" << fmt(py(*v))
                    << "\" r=\"3\" fill=\"white\" stroke=\"black\"/>\n";
            }
            out << "<circle cx=\"" << fmt(px(a.x)) << "\" cy=\"" << fmt(py(a.point)) << "\" r=\"3\" fill=\"black\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

void emit(const PLLift& f, const std::string& path, const std::string& title) {
    io::write_text_atomic(path, render(f, title));
}

}  // namespace rotor::svg
