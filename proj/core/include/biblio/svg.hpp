#ifndef BIBLIO_SVG_HPP
#define BIBLIO_SVG_HPP

#include <string>
#include <string_view>

namespace biblio {

// Rendering parameters shared by all charts. Defaults are frozen; the CLI
// config file may override margin and dash pattern.
struct ChartStyle {
  double width = 800.0;
  double height = 600.0;
  double margin = 60.0;
  std::string dash = "6,4";  // stroke-dasharray for median/mean lines
  double font_size = 12.0;
  double point_radius = 3.0;
  std::string fill = "#4c78a8";
  std::string line_color = "#555555";
  std::string axis_color = "#000000";
};

// Minimal SVG 1.1 document builder. Coordinates are written with two
// decimals; output carries no timestamps, so re-emission is byte-identical.
class SvgBuilder {
 public:
  SvgBuilder(double width, double height);

  void rect(double x, double y, double w, double h, const std::string& fill);
  void line(double x1, double y1, double x2, double y2, const std::string& stroke,
            double stroke_width = 1.0, const std::string& dash = "");
  void circle(double cx, double cy, double r, const std::string& fill);
  void text(double x, double y, std::string_view content, double size,
            const std::string& anchor = "middle", const std::string& fill = "#000000");

  std::string finish() const;

  static std::string escape(std::string_view s);
  static std::string num(double v);

 private:
  double width_;
  double height_;
  std::string body_;
};

}  // namespace biblio

#endif  // BIBLIO_SVG_HPP
