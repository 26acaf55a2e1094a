#include "grape/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace grape {

namespace {

bool parse_double(const std::string& field, double& out) {
  const char* begin = field.data();
  const char* end = begin + field.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc{} && ptr == end;
}

std::vector<std::string> split(const std::string& line, char delim) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == delim) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace

std::vector<EdgeListRecord> parse_edge_list(const std::string& path, const LoadOptions& opts) {
  std::string text = read_file(path);
  std::vector<EdgeListRecord> records;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  bool first_data_row = true;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string line = text.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
    pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    auto where = [&] { return path + ":" + std::to_string(lineno); };
    std::vector<std::string> fields = split(line, opts.delimiter);
    if (fields.size() != 3 && fields.size() != 4)
      throw ParseError(where() + ": expected 3 or 4 fields, got " +
                       std::to_string(fields.size()));

    EdgeListRecord rec;
    rec.source = fields[0];
    rec.target = fields[1];
    rec.line = lineno;
    bool weight_ok = parse_double(fields[2], rec.weight);
    double w2 = 0.0;
    bool w2_ok = fields.size() == 4 ? parse_double(fields[3], w2) : true;
    if (fields.size() == 4 && w2_ok) rec.weight2 = w2;

    if (!weight_ok || !w2_ok) {
      if (first_data_row) continue;  // header row
      throw ParseError(where() + ": malformed weight field");
    }
    if (rec.source.empty() || rec.target.empty())
      throw ParseError(where() + ": empty vertex label");
    first_data_row = false;
    records.push_back(std::move(rec));
  }
  return records;
}

WeightTransform transform_from_name(const std::string& name) {
  if (name == "identity") return WeightTransform::identity;
  if (name == "inverse") return WeightTransform::inverse;
  if (name == "negshift") return WeightTransform::negate_shift;
  if (name == "product") return WeightTransform::product;
  throw std::invalid_argument("unknown transform: " + name);
}

std::string transform_name(WeightTransform t) {
  switch (t) {
    case WeightTransform::identity: return "identity";
    case WeightTransform::inverse: return "inverse";
    case WeightTransform::negate_shift: return "negshift";
    case WeightTransform::product: return "product";
  }
  return "identity";
}

void apply_transform(std::vector<EdgeListRecord>& records, WeightTransform t) {
  switch (t) {
    case WeightTransform::identity:
      return;
    case WeightTransform::inverse:
      for (EdgeListRecord& r : records) {
        if (r.weight == 0.0)
          throw GraphError("inverse transform requires nonzero weights (line " +
                           std::to_string(r.line) + ")");
        r.weight = 1.0 / r.weight;
      }
      return;
    case WeightTransform::negate_shift: {
      if (records.empty()) return;
      double top = records.front().weight;
      for (const EdgeListRecord& r : records) top = std::max(top, r.weight);
      for (EdgeListRecord& r : records) r.weight = top - r.weight;
      return;
    }
    case WeightTransform::product:
      for (EdgeListRecord& r : records) {
        if (!r.weight2)
          throw GraphError("product transform requires a second weight column (line " +
                           std::to_string(r.line) + ")");
        r.weight = r.weight * *r.weight2;
      }
      return;
  }
}

WeightedGraph transform_weights(const WeightedGraph& g, WeightTransform t) {
  if (t == WeightTransform::product)
    throw GraphError("product transform applies to edge-list records, not built graphs");
  WeightedGraph out(g.directed(), g.name());
  for (VertexId v = 0; v < g.vertex_count(); ++v) out.add_vertex(g.label(v));
  double top = 0.0;
  if (t == WeightTransform::negate_shift)
    for (const Edge& e : g.edges()) top = std::max(top, e.weight);
  for (const Edge& e : g.edges()) {
    double w = e.weight;
    if (t == WeightTransform::inverse) {
      if (w == 0.0) throw GraphError("inverse transform requires nonzero weights");
      w = 1.0 / w;
    } else if (t == WeightTransform::negate_shift) {
      w = top - w;
    }
    out.add_edge(e.a, e.b, w);
  }
  return out;
}

WeightedGraph build_graph(const std::vector<EdgeListRecord>& records, const LoadOptions& opts,
                          std::string name) {
  WeightedGraph g(opts.directed, std::move(name));
  for (const EdgeListRecord& r : records) {
    VertexId a = g.ensure_vertex(r.source);
    VertexId b = g.ensure_vertex(r.target);
    try {
      g.add_edge(a, b, r.weight);
    } catch (const GraphError& e) {
      throw GraphError(std::string(e.what()) + " (line " + std::to_string(r.line) + ")");
    }
  }
  return g;
}

WeightedGraph load_edge_list(const std::string& path, const LoadOptions& opts,
                             std::string name) {
  if (name.empty()) {
    std::size_t slash = path.find_last_of("/\\");
    name = slash == std::string::npos ? path : path.substr(slash + 1);
    std::size_t dot = name.find_last_of('.');
    if (dot != std::string::npos && dot > 0) name = name.substr(0, dot);
  }
  return build_graph(parse_edge_list(path, opts), opts, std::move(name));
}

// ---- JSON ----------------------------------------------------------------

namespace {
constexpr int kSchemaVersion = 1;
constexpr const char* kKind = "grape-diagram";
}  // namespace

std::string diagram_to_json(const PersistenceDiagram& d) {
  nlohmann::ordered_json doc;
  doc["schema"] = kSchemaVersion;
  doc["kind"] = kKind;
  doc["feature"] = d.feature;
  doc["mode"] = d.mode;
  doc["graph"] = d.graph_name;
  doc["cornerpoints"] = nlohmann::ordered_json::array();
  for (const Cornerpoint& cp : d.points) {
    nlohmann::ordered_json p;
    p["birth"] = cp.birth;
    if (std::isinf(cp.death))
      p["death"] = "inf";
    else
      p["death"] = cp.death;
    p["multiplicity"] = cp.multiplicity();
    p["witnesses"] = cp.witnesses;
    doc["cornerpoints"].push_back(std::move(p));
  }
  return doc.dump(2) + "\n";
}

PersistenceDiagram diagram_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("not a valid diagram document: ") + e.what());
  }
  try {
    if (!doc.is_object() || doc.value("kind", "") != kKind)
      throw SchemaError("not a diagram document (missing kind)");
    if (doc.value("schema", -1) != kSchemaVersion)
      throw SchemaError("unsupported diagram schema version");
    PersistenceDiagram d;
    d.feature = doc.value("feature", "");
    d.mode = doc.value("mode", "");
    d.graph_name = doc.value("graph", "");
    for (const auto& p : doc.at("cornerpoints")) {
      Cornerpoint cp;
      cp.birth = p.at("birth").get<double>();
      const auto& death = p.at("death");
      if (death.is_string()) {
        if (death.get<std::string>() != "inf")
          throw SchemaError("death must be a number or \"inf\"");
        cp.death = kInfinity;
      } else {
        cp.death = death.get<double>();
      }
      cp.witnesses = p.at("witnesses").get<std::vector<std::vector<std::string>>>();
      if (p.at("multiplicity").get<std::size_t>() != cp.multiplicity())
        throw SchemaError("multiplicity disagrees with witness count");
      d.points.push_back(std::move(cp));
    }
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("malformed diagram document: ") + e.what());
  }
}

void export_diagram(const PersistenceDiagram& d, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << diagram_to_json(d);
}

PersistenceDiagram import_diagram(const std::string& path) {
  return diagram_from_json(read_file(path));
}

// ---- SVG -------------------------------------------------------------------

std::string render_svg(const PersistenceDiagram& d, const SvgOptions& opts) {
  const double S = opts.size;
  const double margin = 56.0;
  const double band = margin - 22.0;  // y of the essential band
  const double plot = S - 2 * margin;

  double lo = 0.0, hi = 1.0;
  bool seen = false;
  for (const Cornerpoint& cp : d.points) {
    double vals[2] = {cp.birth, cp.death};
    for (double v : vals) {
      if (std::isinf(v)) continue;
      if (!seen) {
        lo = hi = v;
        seen = true;
      } else {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    }
  }
  if (!seen) {
    lo = 0.0;
    hi = 1.0;
  }
  if (hi == lo) hi = lo + 1.0;

  auto sx = [&](double w) { return margin + (w - lo) / (hi - lo) * plot; };
  auto sy = [&](double w) { return S - margin - (w - lo) / (hi - lo) * plot; };
  auto num = [](double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return std::string(buf);
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + num(S) + " " + num(S) +
         "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg += "<rect width=\"" + num(S) + "\" height=\"" + num(S) + "\" fill=\"white\"/>\n";
  svg += "<text x=\"" + num(margin) + "\" y=\"18\" font-size=\"14\">" + d.feature + " / " +
         d.mode + (d.graph_name.empty() ? "" : " / " + d.graph_name) + "</text>\n";
  // axes
  svg += "<line x1=\"" + num(margin) + "\" y1=\"" + num(S - margin) + "\" x2=\"" +
         num(S - margin) + "\" y2=\"" + num(S - margin) + "\" stroke=\"#444\"/>\n";
  svg += "<line x1=\"" + num(margin) + "\" y1=\"" + num(S - margin) + "\" x2=\"" + num(margin) +
         "\" y2=\"" + num(margin) + "\" stroke=\"#444\"/>\n";
  svg += "<text x=\"" + num(margin) + "\" y=\"" + num(S - margin + 16) + "\">" + fmt(lo) +
         "</text>\n";
  svg += "<text x=\"" + num(S - margin) + "\" y=\"" + num(S - margin + 16) +
         "\" text-anchor=\"end\">" + fmt(hi) + "</text>\n";
  // diagonal and essential band
  svg += "<line x1=\"" + num(sx(lo)) + "\" y1=\"" + num(sy(lo)) + "\" x2=\"" + num(sx(hi)) +
         "\" y2=\"" + num(sy(hi)) + "\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
  svg += "<line x1=\"" + num(margin) + "\" y1=\"" + num(band) + "\" x2=\"" + num(S - margin) +
         "\" y2=\"" + num(band) + "\" stroke=\"#bbb\" stroke-dasharray=\"2 3\"/>\n";
  svg += "<text x=\"" + num(S - margin + 4) + "\" y=\"" + num(band + 4) + "\">inf</text>\n";

  for (const Cornerpoint& cp : d.points) {
    double r = std::min(4.0 + 1.5 * (static_cast<double>(cp.multiplicity()) - 1.0), 12.0);
    if (std::isinf(cp.death)) {
      double x = sx(cp.birth);
      svg += "<polygon points=\"" + num(x) + "," + num(band - r) + " " + num(x - r) + "," +
             num(band + r) + " " + num(x + r) + "," + num(band + r) +
             "\" fill=\"#b3452c\" fill-opacity=\"0.8\"/>\n";
      if (cp.multiplicity() > 1)
        svg += "<text x=\"" + num(x + r + 2) + "\" y=\"" + num(band - 2) + "\">x" +
               std::to_string(cp.multiplicity()) + "</text>\n";
    } else {
      double x = sx(cp.birth), y = sy(cp.death);
      svg += "<circle cx=\"" + num(x) + "\" cy=\"" + num(y) + "\" r=\"" + num(r) +
             "\" fill=\"#1f6f8b\" fill-opacity=\"0.7\"/>\n";
      if (cp.multiplicity() > 1)
        svg += "<text x=\"" + num(x + r + 2) + "\" y=\"" + num(y - 2) + "\">x" +
               std::to_string(cp.multiplicity()) + "</text>\n";
    }
  }
  svg += "</svg>\n";
  return svg;
}

void export_svg(const PersistenceDiagram& d, const std::string& path, const SvgOptions& opts) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << render_svg(d, opts);
}

}  // namespace grape
