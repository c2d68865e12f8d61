#include "unfold/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "unfold/rational.hpp"

namespace unfold {

namespace {

constexpr int kCanvas = 800;
constexpr int kMargin = 60;
constexpr int kPlot = kCanvas - 2 * kMargin;

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string escape_text(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_plmap_svg(const PLMap& f, const std::string& label) {
  const Rat xlo = domain_lo(f);
  const Rat xhi = domain_hi(f);
  Rat ylo = *std::min_element(f.ys.begin(), f.ys.end());
  Rat yhi = *std::max_element(f.ys.begin(), f.ys.end());
  if (ylo == yhi) {
    // constant graph: open a unit window around the value
    ylo -= rat(1, 2);
    yhi += rat(1, 2);
  }

  const auto to_px = [&](const Rat& x) {
    return to_double(rat(kMargin) + rat(kPlot) * (x - xlo) / (xhi - xlo));
  };
  const auto to_py = [&](const Rat& y) {
    return to_double(rat(kCanvas - kMargin) -
                     rat(kPlot) * (y - ylo) / (yhi - ylo));
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas
     << "\" height=\"" << kCanvas << "\" viewBox=\"0 0 " << kCanvas << " "
     << kCanvas << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << kCanvas << "\" height=\""
     << kCanvas << "\" fill=\"#ffffff\"/>\n";
  os << "<text x=\"" << kCanvas / 2
     << "\" y=\"36\" text-anchor=\"middle\" font-family=\"monospace\" "
        "font-size=\"18\">"
     << escape_text(label) << "</text>\n";
  os << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\""
     << kPlot << "\" height=\"" << kPlot
     << "\" fill=\"none\" stroke=\"#333333\"/>\n";

  // dashed verticals at interior breakpoints
  for (std::size_t i = 1; i + 1 < f.xs.size(); ++i) {
    const std::string x = px(to_px(f.xs[i]));
    os << "<line x1=\"" << x << "\" y1=\"" << kMargin << "\" x2=\"" << x
       << "\" y2=\"" << kCanvas - kMargin
       << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 4\"/>\n";
  }

  // the diagonal, clipped to the visible square
  const Rat dlo = std::max(xlo, ylo);
  const Rat dhi = std::min(xhi, yhi);
  if (dlo < dhi) {
    os << "<line x1=\"" << px(to_px(dlo)) << "\" y1=\"" << px(to_py(dlo))
       << "\" x2=\"" << px(to_px(dhi)) << "\" y2=\"" << px(to_py(dhi))
       << "\" stroke=\"#999999\" stroke-dasharray=\"2 6\"/>\n";
  }

  os << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\" "
        "points=\"";
  for (std::size_t i = 0; i < f.xs.size(); ++i) {
    if (i) os << ' ';
    os << px(to_px(f.xs[i])) << ',' << px(to_py(f.ys[i]));
  }
  os << "\"/>\n";

  for (std::size_t i = 0; i < f.xs.size(); ++i) {
    os << "<circle cx=\"" << px(to_px(f.xs[i])) << "\" cy=\""
       << px(to_py(f.ys[i])) << "\" r=\"4\" fill=\"#c23b22\"/>\n";
  }

  // exact range labels at the corners
  os << "<text x=\"" << kMargin << "\" y=\"" << kCanvas - kMargin + 24
     << "\" font-family=\"monospace\" font-size=\"14\">"
     << escape_text(to_string(xlo)) << "</text>\n";
  os << "<text x=\"" << kCanvas - kMargin << "\" y=\""
     << kCanvas - kMargin + 24
     << "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"14\">"
     << escape_text(to_string(xhi)) << "</text>\n";
  os << "<text x=\"" << kMargin - 8 << "\" y=\"" << kCanvas - kMargin
     << "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"14\">"
     << escape_text(to_string(ylo)) << "</text>\n";
  os << "<text x=\"" << kMargin - 8 << "\" y=\"" << kMargin + 6
     << "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"14\">"
     << escape_text(to_string(yhi)) << "</text>\n";

  os << "</svg>\n";
  return os.str();
}

}  // namespace unfold
