#include "palf/render.hpp"

#include <sstream>

namespace palf {

namespace {

constexpr int kHoleSpacing = 80;
constexpr int kHoleRadius = 14;
constexpr int kMargin = 40;
constexpr int kCycleGap = 7;
constexpr int kLineHeight = 16;

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const PalfDocument& doc, const std::string& palf_name) {
  const FactorizationDecl& f = doc.factorization(palf_name);
  const int holes = doc.surface().holes();
  const int n = static_cast<int>(f.cycles.size());

  const int inner = kHoleRadius + kCycleGap * (n + 1);
  const int disk_rx = (holes - 1) * kHoleSpacing / 2 + inner + kMargin;
  const int disk_ry = inner + kMargin;
  const int cx = disk_rx + kMargin;
  const int cy = disk_ry + kMargin;
  const int width = 2 * cx;
  const int legend_top = 2 * cy;
  const int height = legend_top + kLineHeight * (n + 1) + kMargin / 2;
  auto hole_x = [&](int i) { return cx + (2 * i - holes - 1) * kHoleSpacing / 2; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "<title>" << escape(palf_name) << "</title>\n";
  os << "<g fill=\"none\" stroke=\"black\" stroke-width=\"2\">\n";
  os << "<ellipse class=\"boundary\" data-boundary=\"0\" cx=\"" << cx << "\" cy=\"" << cy
     << "\" rx=\"" << disk_rx << "\" ry=\"" << disk_ry << "\"/>\n";
  for (int i = 1; i <= holes; ++i)
    os << "<circle class=\"boundary\" data-boundary=\"" << i << "\" cx=\"" << hole_x(i) << "\" cy=\""
       << cy << "\" r=\"" << kHoleRadius << "\"/>\n";
  os << "</g>\n";

  os << "<g font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">\n";
  for (int i = 1; i <= holes; ++i)
    os << "<text x=\"" << hole_x(i) << "\" y=\"" << cy + 4 << "\">" << i << "</text>\n";
  os << "</g>\n";

  os << "<g fill=\"none\" stroke-width=\"1.5\" font-family=\"monospace\" font-size=\"12\">\n";
  for (int k = 0; k < n; ++k) {
    const std::string& name = f.cycles[static_cast<std::size_t>(k)];
    const Curve& c = doc.curve(name);
    const int pad = kHoleRadius + kCycleGap * (k + 1);
    const int x0 = hole_x(c.lo()) - pad;
    const int x1 = hole_x(c.hi()) + pad;
    const int hue = (k * 137) % 360;
    os << "<rect class=\"cycle\" data-name=\"" << escape(name) << "\" x=\"" << x0 << "\" y=\""
       << cy - pad << "\" width=\"" << x1 - x0 << "\" height=\"" << 2 * pad << "\" rx=\"" << pad
       << "\" stroke=\"hsl(" << hue << ",70%,40%)\"";
    if (!c.is_convex()) os << " stroke-dasharray=\"6 3\"";
    os << "/>\n";
    os << "<text class=\"label\" x=\"" << x1 + 2 << "\" y=\"" << cy - pad << "\" fill=\"hsl(" << hue
       << ",70%,40%)\">" << escape(name) << "</text>\n";
  }
  os << "</g>\n";

  os << "<g font-family=\"monospace\" font-size=\"12\">\n";
  os << "<text x=\"" << kMargin / 2 << "\" y=\"" << legend_top << "\">" << escape(product_string(f))
     << "</text>\n";
  for (int k = 0; k < n; ++k) {
    const std::string& name = f.cycles[static_cast<std::size_t>(k)];
    const Curve& c = doc.curve(name);
    os << "<text class=\"badge\" x=\"" << kMargin / 2 << "\" y=\"" << legend_top + kLineHeight * (k + 1)
       << "\">" << escape(name) << ": " << escape(describe(c)) << "</text>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace palf
