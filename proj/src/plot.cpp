#include "flocksim/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "flocksim/formations.hpp"

namespace flocksim {

namespace {

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                          "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Frame {
  double x0, x1, y0, y1;  // data bounds
  double px0, px1, py0, py1;  // pixel viewport

  double x(double v) const { return px0 + (v - x0) / (x1 - x0) * (px1 - px0); }
  // SVG y grows downward.
  double y(double v) const { return py1 - (v - y0) / (y1 - y0) * (py1 - py0); }
};

void expand(double& lo, double& hi, double frac) {
  if (hi - lo < 1e-9) {
    lo -= 1.0;
    hi += 1.0;
  }
  const double pad = (hi - lo) * frac;
  lo -= pad;
  hi += pad;
}

}  // namespace

std::string trajectory_svg(const Transcript& t) {
  const int width = 720, height = 720;
  double x0 = t.initial_positions.front().x(), x1 = x0;
  double y0 = t.initial_positions.front().y(), y1 = y0;
  auto grow = [&](const Vec2& p) {
    x0 = std::min(x0, p.x());
    x1 = std::max(x1, p.x());
    y0 = std::min(y0, p.y());
    y1 = std::max(y1, p.y());
  };
  for (const auto& snapshot : t.series.positions)
    for (const auto& p : snapshot) grow(p);
  const Vec2 anchor = t.series.per_round.back().centroid;
  std::vector<Vec2> targets;
  try {
    targets = target_positions(t.config.formation, anchor);
    for (const auto& p : targets) grow(p);
  } catch (const std::invalid_argument&) {
    // formation has no drawable target for this count; skip the overlay
  }
  expand(x0, x1, 0.08);
  expand(y0, y1, 0.08);
  // keep the aspect ratio square so shapes are not distorted
  const double span = std::max(x1 - x0, y1 - y0);
  const double cx = 0.5 * (x0 + x1), cy = 0.5 * (y0 + y1);
  Frame f{cx - span / 2, cx + span / 2, cy - span / 2, cy + span / 2,
          60, width - 20, 20, height - 60};

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
    << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  s << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  s << "<rect x=\"" << num(f.px0) << "\" y=\"" << num(f.py0) << "\" width=\""
    << num(f.px1 - f.px0) << "\" height=\"" << num(f.py1 - f.py0)
    << "\" fill=\"none\" stroke=\"#444\"/>\n";
  s << "<text x=\"" << num(f.px0) << "\" y=\"" << num(f.py1 + 18)
    << "\" font-size=\"12\" fill=\"#444\">x: " << num(f.x0) << " to " << num(f.x1)
    << ", y: " << num(f.y0) << " to " << num(f.y1) << "</text>\n";
  s << "<text x=\"" << num(f.px0) << "\" y=\"" << num(f.py1 + 34)
    << "\" font-size=\"12\" fill=\"#444\">" << t.config.name << " trial "
    << t.trial_index << ", outcome: " << to_string(t.outcome.label) << "</text>\n";

  for (const auto& p : targets)
    s << "<circle cx=\"" << num(f.x(p.x())) << "\" cy=\"" << num(f.y(p.y()))
      << "\" r=\"7\" fill=\"none\" stroke=\"#999\" stroke-dasharray=\"3,2\"/>\n";

  const size_t agents = t.initial_positions.size();
  for (size_t a = 0; a < agents; ++a) {
    const char* color = kPalette[a % (sizeof kPalette / sizeof *kPalette)];
    s << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (size_t k = 0; k < t.series.positions.size(); ++k) {
      const Vec2& p = t.series.positions[k][a];
      if (k) s << " ";
      s << num(f.x(p.x())) << "," << num(f.y(p.y()));
    }
    s << "\"/>\n";
    for (size_t k = 0; k < t.series.positions.size(); ++k) {
      const Vec2& p = t.series.positions[k][a];
      s << "<circle cx=\"" << num(f.x(p.x())) << "\" cy=\"" << num(f.y(p.y())) << "\" r=\""
        << (k + 1 == t.series.positions.size() ? "4" : "1.6") << "\" fill=\"" << color
        << "\"/>\n";
    }
    const Vec2& start = t.series.positions.front()[a];
    s << "<rect x=\"" << num(f.x(start.x()) - 4) << "\" y=\"" << num(f.y(start.y()) - 4)
      << "\" width=\"8\" height=\"8\" fill=\"none\" stroke=\"" << color << "\"/>\n";
    s << "<text x=\"" << num(f.x(start.x()) + 6) << "\" y=\"" << num(f.y(start.y()) - 6)
      << "\" font-size=\"11\" fill=\"" << color << "\">agent " << a << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

std::string mae_svg(const Transcript& t) {
  const int width = 720, height = 400;
  const Frame f{0,
                static_cast<double>(t.series.size() - 1),
                0,
                0,  // y1 filled below
                60, width - 20, 20, height - 50};
  double top = kMaeSuccessMargin * 1.5;
  for (const auto& m : t.series.per_round) top = std::max(top, m.mae);
  Frame g = f;
  g.y1 = top * 1.08;
  if (g.x1 <= g.x0) g.x1 = g.x0 + 1;

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
    << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  s << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  s << "<rect x=\"" << num(g.px0) << "\" y=\"" << num(g.py0) << "\" width=\""
    << num(g.px1 - g.px0) << "\" height=\"" << num(g.py1 - g.py0)
    << "\" fill=\"none\" stroke=\"#444\"/>\n";

  // success margin
  s << "<line x1=\"" << num(g.x(g.x0)) << "\" y1=\"" << num(g.y(kMaeSuccessMargin))
    << "\" x2=\"" << num(g.x(g.x1)) << "\" y2=\"" << num(g.y(kMaeSuccessMargin))
    << "\" stroke=\"#d62728\" stroke-dasharray=\"6,3\"/>\n";
  s << "<text x=\"" << num(g.px1 - 150) << "\" y=\"" << num(g.y(kMaeSuccessMargin) - 5)
    << "\" font-size=\"11\" fill=\"#d62728\">desired MAE (" << num(kMaeSuccessMargin)
    << " margin)</text>\n";

  s << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" points=\"";
  for (size_t k = 0; k < t.series.size(); ++k) {
    if (k) s << " ";
    s << num(g.x(static_cast<double>(k))) << "," << num(g.y(t.series.per_round[k].mae));
  }
  s << "\"/>\n";

  s << "<text x=\"" << num(g.px0) << "\" y=\"" << num(g.py1 + 28)
    << "\" font-size=\"12\" fill=\"#444\">round 0 to " << (t.series.size() - 1)
    << "; MAE 0 to " << num(g.y1) << "; final " << num(t.final_mae()) << "</text>\n";
  s << "</svg>\n";
  return s.str();
}

std::pair<std::string, std::string> write_plots(const Transcript& t, const std::string& out) {
  std::string stem = out;
  if (stem.size() > 4 && stem.substr(stem.size() - 4) == ".svg")
    stem.resize(stem.size() - 4);
  const auto parent = std::filesystem::path(stem).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  const std::string traj_path = stem + "_traj.svg";
  const std::string mae_path = stem + "_mae.svg";
  {
    std::ofstream f(traj_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write plot: " + traj_path);
    f << trajectory_svg(t);
  }
  {
    std::ofstream f(mae_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write plot: " + mae_path);
    f << mae_svg(t);
  }
  return {traj_path, mae_path};
}

}  // namespace flocksim
