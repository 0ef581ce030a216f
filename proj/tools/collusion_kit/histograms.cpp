#include <cstdio>
#include <fstream>

#include "collusion/error.hpp"
#include "commands.hpp"

namespace cli {
namespace {

using collusion::FeatureRow;

struct Group {
  std::string name;
  std::vector<const FeatureRow*> rows;
};

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

void write_svg(const std::filesystem::path& path, const std::string& title,
               const std::vector<std::string>& buckets, const std::vector<Group>& groups,
               const std::vector<std::vector<double>>& means) {
  static const char* colors[] = {"#c0392b", "#2471a3", "#7f8c8d"};
  const double width = 80.0 + 60.0 * double(buckets.size()), height = 320;
  const double left = 50, bottom = 260, plot_h = 220;
  const double slot = (width - left - 20) / double(buckets.size());
  const double bar = slot * 0.8 / double(groups.size());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw collusion::InputError("cannot write " + path.string());
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
                "font-family=\"sans-serif\" font-size=\"10\">\n",
                width, height);
  out << buf;
  out << "<text x=\"" << left << "\" y=\"16\" font-size=\"13\">" << escape_xml(title)
      << " (% of users)</text>\n";
  for (int tick = 0; tick <= 100; tick += 25) {
    const double y = bottom - plot_h * tick / 100.0;
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"#ddd\"/>"
                  "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"end\">%d</text>\n",
                  left, y, width - 20, y, left - 4, y + 3, tick);
    out << buf;
  }
  for (std::size_t b = 0; b < buckets.size(); ++b) {
    const double x0 = left + slot * double(b) + slot * 0.1;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      const double h = plot_h * means[g][b] / 100.0;
      std::snprintf(buf, sizeof buf,
                    "<rect x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\" fill=\"%s\"/>\n",
                    x0 + bar * double(g), bottom - h, bar, h, colors[g % 3]);
      out << buf;
    }
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"middle\">", x0 + slot * 0.4,
                  bottom + 14);
    out << buf << escape_xml(buckets[b]) << "</text>\n";
  }
  for (std::size_t g = 0; g < groups.size(); ++g) {
    std::snprintf(buf, sizeof buf,
                  "<rect x=\"%.1f\" y=\"292\" width=\"10\" height=\"10\" fill=\"%s\"/>"
                  "<text x=\"%.1f\" y=\"301\">",
                  left + 110.0 * double(g), colors[g % 3], left + 110.0 * double(g) + 14);
    out << buf << escape_xml(groups[g].name) << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace

void write_histograms(const std::filesystem::path& dir, const collusion::FeatureSchema& schema,
                      const std::vector<FeatureRow>& rows) {
  std::filesystem::create_directories(dir);
  std::vector<Group> groups;
  Group organized{"organized", {}}, organic{"organic", {}}, all{"all", {}};
  for (const auto& r : rows) {
    all.rows.push_back(&r);
    if (r.labels.organization == collusion::Organization::Organized) organized.rows.push_back(&r);
    if (r.labels.organization == collusion::Organization::Organic) organic.rows.push_back(&r);
  }
  if (!organized.rows.empty()) groups.push_back(organized);
  if (!organic.rows.empty()) groups.push_back(organic);
  groups.push_back(all);

  for (const auto& scheme : schema.user_schemes()) {
    std::vector<std::string> labels;
    std::vector<std::vector<double>> means(groups.size());
    for (const auto& bucket : scheme.buckets) {
      labels.push_back(bucket.label);
      const std::size_t col =
          schema.index_of(collusion::bucket_column(scheme.feature, bucket.label));
      for (std::size_t g = 0; g < groups.size(); ++g) {
        double sum = 0;
        for (const auto* r : groups[g].rows) sum += r->values[col];
        means[g].push_back(sum / double(groups[g].rows.size()));
      }
    }
    std::ofstream csv(dir / (scheme.feature + ".csv"), std::ios::binary);
    if (!csv) throw collusion::InputError("cannot write histogram CSV in " + dir.string());
    csv << "bucket";
    for (const auto& g : groups) csv << ',' << g.name << "_mean_pct";
    csv << '\n';
    for (std::size_t b = 0; b < labels.size(); ++b) {
      csv << '"' << labels[b] << '"';
      for (std::size_t g = 0; g < groups.size(); ++g) {
        csv << ',' << collusion::format_number(means[g][b]);
      }
      csv << '\n';
    }
    write_svg(dir / (scheme.feature + ".svg"), scheme.feature, labels, groups, means);
  }
}

}  // namespace cli
