#ifndef BIBLIO_REPORT_HPP
#define BIBLIO_REPORT_HPP

#include <array>
#include <string>
#include <vector>

#include "biblio/coword.hpp"
#include "biblio/pri.hpp"
#include "biblio/stats.hpp"
#include "biblio/svg.hpp"

namespace biblio {

// Bar chart of publications per year, one <rect> per year in ascending year
// order, linear axes.
std::string emit_yearly_bars(const FrequencyTable& yearly, const ChartStyle& style,
                             std::string_view title);

// Scatter of PRI values in chronological order (year, then paper id), one
// <circle> per score. Dashed horizontal line at the expected global mean,
// dashed vertical line at the median paper index.
std::string emit_pri_scatter(const std::vector<PriScore>& scores, const Rational& global_mean,
                             const ChartStyle& style, std::string_view title);

enum class Quadrant { lower_left, upper_left, lower_right, upper_right };

struct DiagramPoint {
  int cluster_number = 0;
  double centrality = 0.0;
  double density = 0.0;
  Quadrant quadrant = Quadrant::lower_left;
};

// Cluster positions with median split. Medians are the conventional ones
// (mean of the two central order statistics for even counts). A point at or
// above a median falls on the right/upper side, so the quadrants partition
// the cluster set.
struct StrategicDiagram {
  std::vector<DiagramPoint> points;  // ordered by cluster number
  double median_centrality = 0.0;
  double median_density = 0.0;
};

StrategicDiagram strategic_diagram(const ClusterSet& clusters);

// Cluster numbers drawn as text centered at (centrality, density), dashed
// median lines. Centrality grows left to right, density bottom-up.
std::string emit_strategic_diagram(const StrategicDiagram& diagram, const ChartStyle& style,
                                   std::string_view title);

// Four CSV tables (lower-left, upper-left, lower-right, upper-right). Each
// row lists a cluster with its label and the full term list, label first.
std::array<std::string, 4> emit_quadrant_tables(const StrategicDiagram& diagram,
                                                const ClusterSet& clusters);

constexpr std::array<const char*, 4> kQuadrantNames = {"lower_left", "upper_left",
                                                       "lower_right", "upper_right"};

}  // namespace biblio

#endif  // BIBLIO_REPORT_HPP
