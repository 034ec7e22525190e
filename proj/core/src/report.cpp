#include "biblio/report.hpp"

#include <algorithm>
#include <cmath>

#include "biblio/csv.hpp"
#include "biblio/errors.hpp"

namespace biblio {

namespace {

double median_of(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

struct PlotArea {
  double left, right, top, bottom;
  double w() const { return right - left; }
  double h() const { return bottom - top; }
};

PlotArea area_for(const ChartStyle& s) {
  return {s.margin, s.width - s.margin, s.margin, s.height - s.margin};
}

void draw_axes(SvgBuilder& svg, const PlotArea& a, const ChartStyle& s) {
  svg.line(a.left, a.top, a.left, a.bottom, s.axis_color);
  svg.line(a.left, a.bottom, a.right, a.bottom, s.axis_color);
}

void draw_title(SvgBuilder& svg, const ChartStyle& s, std::string_view title) {
  svg.text(s.width / 2.0, s.margin / 2.0, title, s.font_size + 4.0);
}

}  // namespace

std::string emit_yearly_bars(const FrequencyTable& yearly, const ChartStyle& style,
                             std::string_view title) {
  if (yearly.entries.empty()) throw DomainError("empty table");
  std::vector<std::pair<int, std::size_t>> bars;
  bars.reserve(yearly.entries.size());
  for (const FrequencyEntry& e : yearly.entries)
    bars.emplace_back(std::stoi(e.key), e.count);
  std::sort(bars.begin(), bars.end());

  std::size_t max_count = 0;
  for (const auto& [year, count] : bars) max_count = std::max(max_count, count);

  SvgBuilder svg(style.width, style.height);
  const PlotArea a = area_for(style);
  draw_title(svg, style, title);
  draw_axes(svg, a, style);
  svg.text(a.left - 6.0, a.bottom + 4.0, "0", style.font_size, "end");
  svg.text(a.left - 6.0, a.top + 4.0, std::to_string(max_count), style.font_size, "end");

  const double slot = a.w() / static_cast<double>(bars.size());
  for (std::size_t i = 0; i < bars.size(); ++i) {
    const double h = max_count ? static_cast<double>(bars[i].second) /
                                     static_cast<double>(max_count) * a.h()
                               : 0.0;
    svg.rect(a.left + slot * static_cast<double>(i) + slot * 0.15, a.bottom - h, slot * 0.7, h,
             style.fill);
    svg.text(a.left + slot * (static_cast<double>(i) + 0.5), a.bottom + style.font_size + 6.0,
             std::to_string(bars[i].first), style.font_size - 2.0);
  }
  return svg.finish();
}

std::string emit_pri_scatter(const std::vector<PriScore>& scores, const Rational& global_mean,
                             const ChartStyle& style, std::string_view title) {
  if (scores.empty()) throw DomainError("empty score list");
  std::vector<const PriScore*> ordered;
  ordered.reserve(scores.size());
  for (const PriScore& s : scores) ordered.push_back(&s);
  std::sort(ordered.begin(), ordered.end(), [](const PriScore* x, const PriScore* y) {
    if (x->year != y->year) return x->year < y->year;
    return x->paper_id < y->paper_id;
  });

  SvgBuilder svg(style.width, style.height);
  const PlotArea a = area_for(style);
  draw_title(svg, style, title);
  draw_axes(svg, a, style);
  for (int tick = 0; tick <= 100; tick += 25)
    svg.text(a.left - 6.0, a.bottom - tick / 100.0 * a.h() + 4.0, std::to_string(tick),
             style.font_size, "end");
  svg.text((a.left + a.right) / 2.0, a.bottom + style.font_size + 10.0,
           "papers in chronological order", style.font_size);
  svg.text(a.left, a.top - 8.0, "PRI", style.font_size, "start");

  const double n = static_cast<double>(ordered.size());
  // Median paper index (vertical) and expected global mean (horizontal).
  const double median_x = a.left + (n + 1.0) / 2.0 / (n + 1.0) * a.w();
  svg.line(median_x, a.top, median_x, a.bottom, style.line_color, 1.0, style.dash);
  const double mean_y = a.bottom - global_mean.to_double() / 100.0 * a.h();
  svg.line(a.left, mean_y, a.right, mean_y, style.line_color, 1.0, style.dash);

  for (std::size_t i = 0; i < ordered.size(); ++i) {
    const double x = a.left + (static_cast<double>(i) + 1.0) / (n + 1.0) * a.w();
    const double y = a.bottom - ordered[i]->pri.to_double() / 100.0 * a.h();
    svg.circle(x, y, style.point_radius, style.fill);
  }
  return svg.finish();
}

StrategicDiagram strategic_diagram(const ClusterSet& clusters) {
  if (clusters.clusters.empty()) throw DomainError("empty cluster set");
  StrategicDiagram d;
  std::vector<double> cents, denss;
  for (const Cluster& c : clusters.clusters) {
    d.points.push_back({c.number, c.centrality, c.density, Quadrant::lower_left});
    cents.push_back(c.centrality);
    denss.push_back(c.density);
  }
  d.median_centrality = median_of(cents);
  d.median_density = median_of(denss);
  for (DiagramPoint& p : d.points) {
    const bool right = p.centrality >= d.median_centrality;
    const bool upper = p.density >= d.median_density;
    p.quadrant = right ? (upper ? Quadrant::upper_right : Quadrant::lower_right)
                       : (upper ? Quadrant::upper_left : Quadrant::lower_left);
  }
  return d;
}

std::string emit_strategic_diagram(const StrategicDiagram& diagram, const ChartStyle& style,
                                   std::string_view title) {
  if (diagram.points.empty()) throw DomainError("empty diagram");
  double max_c = 0.0, max_d = 0.0;
  for (const DiagramPoint& p : diagram.points) {
    max_c = std::max(max_c, p.centrality);
    max_d = std::max(max_d, p.density);
  }
  const double c_hi = max_c > 0.0 ? max_c * 1.1 : 1.0;
  const double d_hi = max_d > 0.0 ? max_d * 1.1 : 1.0;

  SvgBuilder svg(style.width, style.height);
  const PlotArea a = area_for(style);
  draw_title(svg, style, title);
  draw_axes(svg, a, style);
  svg.text((a.left + a.right) / 2.0, a.bottom + style.font_size + 10.0, "centrality",
           style.font_size);
  svg.text(a.left, a.top - 8.0, "density", style.font_size, "start");

  const double med_x = a.left + diagram.median_centrality / c_hi * a.w();
  const double med_y = a.bottom - diagram.median_density / d_hi * a.h();
  svg.line(med_x, a.top, med_x, a.bottom, style.line_color, 1.0, style.dash);
  svg.line(a.left, med_y, a.right, med_y, style.line_color, 1.0, style.dash);

  for (const DiagramPoint& p : diagram.points) {
    const double x = a.left + p.centrality / c_hi * a.w();
    const double y = a.bottom - p.density / d_hi * a.h();
    svg.text(x, y + style.font_size * 0.35, std::to_string(p.cluster_number), style.font_size);
  }
  return svg.finish();
}

std::array<std::string, 4> emit_quadrant_tables(const StrategicDiagram& diagram,
                                                const ClusterSet& clusters) {
  std::array<CsvBuilder, 4> builders;
  for (CsvBuilder& b : builders) b.row({"cluster_number", "label", "terms"});

  for (const DiagramPoint& p : diagram.points) {
    const Cluster* cluster = nullptr;
    for (const Cluster& c : clusters.clusters)
      if (c.number == p.cluster_number) {
        cluster = &c;
        break;
      }
    if (!cluster) throw DomainError("diagram and cluster set are inconsistent");
    std::string terms = cluster->label;
    for (const std::string& t : cluster->terms) {
      if (t == cluster->label) continue;
      terms += ';';
      terms += t;
    }
    builders[static_cast<std::size_t>(p.quadrant)].row(
        {std::to_string(cluster->number), cluster->label, terms});
  }

  std::array<std::string, 4> out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = builders[i].str();
  return out;
}

}  // namespace biblio
