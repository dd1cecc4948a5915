#include "hemifill/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hemifill/errors.hpp"

namespace hemifill {

using nlohmann::json;

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!in.good() && !in.eof()) throw InputError("cannot read " + path);
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open " + path + " for writing");
  out << content;
  if (!out.good()) throw InputError("cannot write " + path);
}

namespace {

json parse_json(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw InputError(std::string("malformed JSON in ") + what);
  }
  return j;
}

double number_field(const json& j, const char* what) {
  if (!j.is_number()) {
    throw InputError(std::string(what) + " must be a number");
  }
  return j.get<double>();
}

PlanarNorm norm_from_json(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "l1") return PlanarNorm::l1();
    if (s == "l2") return PlanarNorm::l2();
    if (s == "linf") return PlanarNorm::linf();
    throw InputError("unknown norm name: " + s);
  }
  if (j.is_object() && j.contains("ellipse")) {
    const json& e = j.at("ellipse");
    if (!e.is_array() || e.size() != 3) {
      throw InputError("ellipse norm needs [a, b, angle]");
    }
    return PlanarNorm::ellipse(number_field(e[0], "ellipse axis"),
                               number_field(e[1], "ellipse axis"),
                               number_field(e[2], "ellipse angle"));
  }
  if (j.is_object() && j.contains("polygon")) {
    const json& p = j.at("polygon");
    if (!p.is_array() || p.empty()) {
      throw InputError("polygon norm needs a vertex list");
    }
    std::vector<Vec2> pts;
    pts.reserve(p.size());
    for (const json& v : p) {
      if (!v.is_array() || v.size() != 2) {
        throw InputError("polygon vertices are [x, y] pairs");
      }
      pts.push_back({number_field(v[0], "vertex"), number_field(v[1], "vertex")});
    }
    PlanarNorm out = PlanarNorm::polygon(pts);
    if (out.degenerate()) throw InputError("polygon norm is flat");
    return out;
  }
  throw InputError("norm must be l1, l2, linf, {ellipse}, or {polygon}");
}

json norm_to_json(const PlanarNorm& norm) {
  switch (norm.kind()) {
    case NormKind::L1:
      return "l1";
    case NormKind::L2:
      return "l2";
    case NormKind::LInf:
      return "linf";
    case NormKind::Ellipse:
      return json{{"ellipse",
                   {norm.axis_a(), norm.axis_b(), norm.axis_angle()}}};
    case NormKind::Polygon: {
      json verts = json::array();
      for (Vec2 v : norm.vertices()) verts.push_back({v.x, v.y});
      return json{{"polygon", verts}};
    }
  }
  throw InputError("unknown norm kind");
}

NormedTarget target_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("norm")) {
    throw InputError("curve target needs dim and norm");
  }
  if (!j.at("dim").is_number_unsigned()) {
    throw InputError("target dim must be a nonnegative integer");
  }
  const std::size_t dim = j.at("dim").get<std::size_t>();
  if (dim == 0) throw InputError("target dim must be positive");
  const json& n = j.at("norm");
  if (n.is_string()) {
    const std::string s = n.get<std::string>();
    if (s == "l1") return NormedTarget::l1(dim);
    if (s == "l2") return NormedTarget::l2(dim);
    if (s == "linf") return NormedTarget::linf(dim);
    throw InputError("unknown norm name: " + s);
  }
  if (dim != 2) {
    throw InputError("shaped norms need dim == 2");
  }
  return NormedTarget::make_planar(norm_from_json(n));
}

json target_to_json(const NormedTarget& t) {
  json j;
  j["dim"] = t.dim;
  switch (t.kind) {
    case TargetNormKind::L1:
      j["norm"] = "l1";
      break;
    case TargetNormKind::L2:
      j["norm"] = "l2";
      break;
    case TargetNormKind::LInf:
      j["norm"] = "linf";
      break;
    case TargetNormKind::Planar:
      j["norm"] = norm_to_json(t.planar);
      break;
  }
  return j;
}

}  // namespace

CircularMeasure parse_measure_json(const std::string& text) {
  const json j = parse_json(text, "measure");
  if (!j.is_object() || !j.contains("grid_size")) {
    throw InputError("measure needs a grid_size field");
  }
  if (!j.at("grid_size").is_number_unsigned()) {
    throw InputError("grid_size must be a nonnegative integer");
  }
  const std::size_t n = j.at("grid_size").get<std::size_t>();
  if (n == 0) throw InputError("grid_size must be positive");
  std::vector<double> density(n, 0.0);
  if (j.contains("density")) {
    const json& d = j.at("density");
    if (!d.is_array() || d.size() != n) {
      throw InputError("density must list one value per cell");
    }
    for (std::size_t i = 0; i < n; ++i) {
      density[i] = number_field(d[i], "density value");
    }
  }
  std::vector<Atom> atoms;
  if (j.contains("atoms")) {
    const json& a = j.at("atoms");
    if (!a.is_array()) throw InputError("atoms must be a list");
    for (const json& e : a) {
      if (!e.is_object() || !e.contains("pos") || !e.contains("mass")) {
        throw InputError("atoms need pos and mass");
      }
      atoms.push_back({number_field(e.at("pos"), "atom pos"),
                       number_field(e.at("mass"), "atom mass")});
    }
  }
  return CircularMeasure(n, std::move(density), std::move(atoms));
}

std::string format_measure_json(const CircularMeasure& mu) {
  json j;
  j["grid_size"] = mu.grid_size();
  j["density"] = mu.density();
  json atoms = json::array();
  for (const Atom& a : mu.atoms()) {
    atoms.push_back({{"pos", a.pos}, {"mass", a.mass}});
  }
  j["atoms"] = std::move(atoms);
  return j.dump(2) + "\n";
}

PlanarNorm parse_norm_spec(const std::string& spec) {
  if (spec == "l1") return PlanarNorm::l1();
  if (spec == "l2") return PlanarNorm::l2();
  if (spec == "linf") return PlanarNorm::linf();
  if (!spec.empty() && spec[0] == '@') {
    return norm_from_json(parse_json(read_text_file(spec.substr(1)), "norm"));
  }
  return norm_from_json(parse_json(spec, "norm"));
}

std::string format_norm_json(const PlanarNorm& norm) {
  return norm_to_json(norm).dump(2) + "\n";
}

LipschitzCurve parse_curve_json(const std::string& text) {
  const json j = parse_json(text, "curve");
  if (!j.is_object() || !j.contains("target") || !j.contains("form")) {
    throw InputError("curve needs target and form");
  }
  const NormedTarget target = target_from_json(j.at("target"));
  const json& form = j.at("form");
  if (form.is_object() && form.contains("fourier")) {
    const json& rows = form.at("fourier");
    if (!rows.is_array() || rows.size() != target.dim) {
      throw InputError("fourier form needs one row per coordinate");
    }
    std::vector<std::vector<FourierCoeff>> coeffs(rows.size());
    for (std::size_t d = 0; d < rows.size(); ++d) {
      const json& row = rows[d];
      if (!row.is_array() || row.empty()) {
        throw InputError("fourier rows need at least the constant term");
      }
      for (const json& c : row) {
        if (!c.is_array() || c.size() != 2) {
          throw InputError("fourier terms are [a, b] pairs");
        }
        coeffs[d].push_back({number_field(c[0], "fourier a"),
                             number_field(c[1], "fourier b")});
      }
    }
    return LipschitzCurve::fourier(target, std::move(coeffs));
  }
  if (form.is_object() && form.contains("samples")) {
    const json& rows = form.at("samples");
    if (!rows.is_array() || rows.size() < 2) {
      throw InputError("sample form needs 2+ points");
    }
    std::vector<std::vector<double>> values(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const json& row = rows[i];
      if (!row.is_array() || row.size() != target.dim) {
        throw InputError("sample points must match the target dimension");
      }
      for (const json& x : row) {
        values[i].push_back(number_field(x, "sample value"));
      }
    }
    return LipschitzCurve::samples(target, std::move(values));
  }
  throw InputError("curve form must hold fourier or samples");
}

std::string format_curve_json(const LipschitzCurve& curve) {
  json j;
  j["target"] = target_to_json(curve.target());
  if (curve.form() == CurveForm::Fourier) {
    json rows = json::array();
    for (const auto& row : curve.coeffs()) {
      json r = json::array();
      for (const auto& c : row) r.push_back({c.a, c.b});
      rows.push_back(std::move(r));
    }
    j["form"] = json{{"fourier", std::move(rows)}};
  } else {
    j["form"] = json{{"samples", curve.sample_values()}};
  }
  return j.dump(2) + "\n";
}

}  // namespace hemifill
