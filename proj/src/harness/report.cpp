#include "memlab/harness/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "memlab/core/errors.hpp"

namespace memlab {

namespace fs = std::filesystem;
using nlohmann::json;

const char* const kToolVersion = "memlab 0.1.0";

void Table::add(std::vector<std::string> row) {
  if (row.size() != columns.size()) throw DomainError("table " + name + ": row width does not match the header");
  rows.push_back(std::move(row));
}

std::string Table::to_csv() const {
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) out += (i ? "," : "") + columns[i];
  out += '\n';
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + r[i];
    out += '\n';
  }
  return out;
}

std::string fmt(Scalar x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt(std::size_t x) { return std::to_string(x); }

namespace {

std::string xml_escape(const std::string& s) {
  std::string o;
  for (char c : s) {
    switch (c) {
      case '<': o += "&lt;"; break;
      case '>': o += "&gt;"; break;
      case '&': o += "&amp;"; break;
      case '"': o += "&quot;"; break;
      default: o += c;
    }
  }
  return o;
}

std::string num(Scalar x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string tick_label(Scalar v, bool log) {
  char buf[32];
  if (log) std::snprintf(buf, sizeof buf, "1e%d", static_cast<int>(std::lround(v)));
  else std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

}  // namespace

std::string render_svg(const Chart& c, const std::string& comment) {
  const Scalar W = 640, H = 420, L = 70, R = 150, T = 40, B = 50;
  auto tx = [&](Scalar v) { return c.logx ? std::log10(v) : v; };
  auto ty = [&](Scalar v) { return c.logy ? std::log10(v) : v; };
  auto usable = [&](Scalar x, Scalar y) {
    return std::isfinite(x) && std::isfinite(y) && (!c.logx || x > 0) && (!c.logy || y > 0);
  };

  Scalar x0 = std::numeric_limits<Scalar>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto& s : c.series)
    for (std::size_t i = 0; i < s.x.size(); ++i)
      if (usable(s.x[i], s.y[i])) {
        x0 = std::min(x0, tx(s.x[i]));
        x1 = std::max(x1, tx(s.x[i]));
        y0 = std::min(y0, ty(s.y[i]));
        y1 = std::max(y1, ty(s.y[i]));
      }
  if (!std::isfinite(x0)) x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (x1 - x0 < 1e-12) x0 -= 0.5, x1 += 0.5;
  if (y1 - y0 < 1e-12) y0 -= 0.5, y1 += 0.5;
  if (c.logx) x0 = std::floor(x0), x1 = std::ceil(x1);
  if (c.logy) y0 = std::floor(y0), y1 = std::ceil(y1);
  auto px = [&](Scalar v) { return L + (tx(v) - x0) / (x1 - x0) * (W - L - R); };
  auto py = [&](Scalar v) { return H - B - (ty(v) - y0) / (y1 - y0) * (H - T - B); };

  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  if (!comment.empty()) o << "<!-- " << comment << " -->\n";
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W
    << ' ' << H << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<text x=\"" << num(W / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" << xml_escape(c.title)
    << "</text>\n";
  o << "<rect x=\"" << L << "\" y=\"" << T << "\" width=\"" << W - L - R << "\" height=\"" << H - T - B
    << "\" fill=\"none\" stroke=\"black\"/>\n";

  // Ticks: integer decades on log axes, five divisions otherwise.
  auto ticks = [](Scalar lo, Scalar hi, bool log) {
    std::vector<Scalar> t;
    if (log) {
      const int step = std::max(1, static_cast<int>(std::ceil((hi - lo) / 8)));
      for (int e = static_cast<int>(lo); e <= static_cast<int>(hi); e += step) t.push_back(e);
    } else {
      for (int i = 0; i <= 5; ++i) t.push_back(lo + (hi - lo) * i / 5);
    }
    return t;
  };
  for (Scalar t : ticks(x0, x1, c.logx)) {
    const Scalar x = L + (t - x0) / (x1 - x0) * (W - L - R);
    o << "<line x1=\"" << num(x) << "\" y1=\"" << H - B << "\" x2=\"" << num(x) << "\" y2=\"" << H - B + 5
      << "\" stroke=\"black\"/>";
    o << "<text x=\"" << num(x) << "\" y=\"" << H - B + 18 << "\" text-anchor=\"middle\">" << tick_label(t, c.logx)
      << "</text>\n";
  }
  for (Scalar t : ticks(y0, y1, c.logy)) {
    const Scalar y = H - B - (t - y0) / (y1 - y0) * (H - T - B);
    o << "<line x1=\"" << L - 5 << "\" y1=\"" << num(y) << "\" x2=\"" << L << "\" y2=\"" << num(y)
      << "\" stroke=\"black\"/>";
    o << "<text x=\"" << L - 8 << "\" y=\"" << num(y + 4) << "\" text-anchor=\"end\">" << tick_label(t, c.logy)
      << "</text>\n";
  }
  o << "<text x=\"" << num(L + (W - L - R) / 2) << "\" y=\"" << H - 12 << "\" text-anchor=\"middle\">"
    << xml_escape(c.xlabel) << "</text>\n";
  o << "<text x=\"16\" y=\"" << num(T + (H - T - B) / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
    << num(T + (H - T - B) / 2) << ")\">" << xml_escape(c.ylabel) << "</text>\n";

  for (std::size_t k = 0; k < c.series.size(); ++k) {
    const auto& s = c.series[k];
    const char* colour = kPalette[k % (sizeof kPalette / sizeof *kPalette)];
    o << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!usable(s.x[i], s.y[i])) continue;
      o << (first ? "" : " ") << num(px(s.x[i])) << ',' << num(py(s.y[i]));
      first = false;
    }
    o << "\"/>\n";
    const Scalar ly = T + 14 + 16 * static_cast<Scalar>(k);
    o << "<line x1=\"" << W - R + 10 << "\" y1=\"" << num(ly) << "\" x2=\"" << W - R + 30 << "\" y2=\"" << num(ly)
      << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>";
    o << "<text x=\"" << W - R + 35 << "\" y=\"" << num(ly + 4) << "\">" << xml_escape(s.label) << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

namespace {

void write_file(const fs::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw IoError("cannot write " + p.string());
  out << content;
  if (!out) throw IoError("write failed for " + p.string());
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw IoError("cannot read " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::vector<std::string> emit_report(const Report& report, const std::string& out_dir) {
  if (report.tables.empty() && report.charts.empty()) throw DomainError("emit_report: nothing to write");
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec || !fs::is_directory(out_dir)) throw IoError("cannot create output directory " + out_dir);

  const std::string hash = config_hash(report.config);
  std::vector<std::string> written;
  for (const Table& t : report.tables) {
    const fs::path csv = fs::path(out_dir) / (t.name + ".csv");
    write_file(csv, "# config_hash=" + hash + "\n" + t.to_csv());
    written.push_back(csv.string());

    json meta{{"config_hash", hash},
              {"config", to_json(report.config)},
              {"tool_version", kToolVersion},
              {"experiment", to_string(report.config.experiment)},
              {"table", t.name},
              {"columns", t.columns},
              {"rows", t.rows.size()},
              {"seed", report.config.seed},
              {"summary", report.summary}};
    const fs::path mp = fs::path(out_dir) / (t.name + ".meta.json");
    write_file(mp, meta.dump(2) + "\n");
    written.push_back(mp.string());
  }
  for (const Chart& c : report.charts) {
    const fs::path svg = fs::path(out_dir) / (c.name + ".svg");
    write_file(svg, render_svg(c, "config_hash=" + hash));
    written.push_back(svg.string());
  }
  return written;
}

VerifyResult verify_report(const std::string& out_dir) {
  VerifyResult r;
  if (!fs::is_directory(out_dir)) {
    r.problems.push_back("not a directory: " + out_dir);
    return r;
  }
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(out_dir))
    if (e.is_regular_file()) files.push_back(e.path());
  std::sort(files.begin(), files.end());

  std::string expected;
  for (const auto& p : files) {
    const std::string name = p.filename().string();
    if (name.size() < 10 || name.substr(name.size() - 10) != ".meta.json") continue;
    ++r.files_checked;
    try {
      const json meta = json::parse(read_file(p));
      const std::string stored = meta.at("config_hash").get<std::string>();
      const std::string recomputed = config_hash(experiment_config_from_json(meta.at("config")));
      if (stored != recomputed) r.problems.push_back(name + ": stored hash " + stored + " != recomputed " + recomputed);
      if (expected.empty()) expected = stored;
      else if (stored != expected) r.problems.push_back(name + ": hash differs from other files in the directory");
    } catch (const std::exception& e) {
      r.problems.push_back(name + ": " + e.what());
    }
  }
  if (expected.empty()) {
    r.problems.push_back("no metadata files in " + out_dir);
    return r;
  }
  for (const auto& p : files) {
    const std::string ext = p.extension().string();
    if (ext != ".csv" && ext != ".svg") continue;
    ++r.files_checked;
    const std::string text = read_file(p);
    const std::string tag = "config_hash=" + expected;
    const std::string head = text.substr(0, std::min<std::size_t>(text.size(), 256));
    if (head.find(tag) == std::string::npos) r.problems.push_back(p.filename().string() + ": missing " + tag);
  }
  return r;
}

}  // namespace memlab
