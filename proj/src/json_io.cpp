#include "meyerlab/json_io.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>

namespace meyerlab {

using nlohmann::json;

namespace {

json coords(const Point& p, int dim) {
  json a = json::array();
  for (int k = 0; k < dim; ++k) a.push_back(p[k]);
  return a;
}

Point point_from(const json& j) {
  Point p{0.0, 0.0};
  if (j.is_number()) {
    p[0] = j.get<double>();
    return p;
  }
  for (std::size_t k = 0; k < j.size() && k < 2; ++k) p[k] = j[k].get<double>();
  return p;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

json to_json(const Box& box) {
  return json{{"lo", coords(box.lo, box.dim)}, {"hi", coords(box.hi, box.dim)}};
}

Box box_from_json(const json& j) {
  Box b;
  b.lo = point_from(j.at("lo"));
  b.hi = point_from(j.at("hi"));
  b.dim = static_cast<int>(j.at("lo").is_number() ? 1 : j.at("lo").size());
  b.validate();
  return b;
}

json to_json(const PointSet& ps) {
  json pts = json::array();
  for (const auto& p : ps.points) pts.push_back(coords(p, ps.dim));
  return json{{"dim", ps.dim}, {"region", to_json(ps.region)}, {"points", pts}};
}

PointSet pointset_from_json(const json& j) {
  int dim = j.at("dim").get<int>();
  Box region = box_from_json(j.at("region"));
  region.dim = dim;
  std::vector<Point> pts;
  for (const auto& p : j.at("points")) pts.push_back(point_from(p));
  return build_pointset(dim, std::move(pts), region);
}

json to_json(const WeightedComb& comb) {
  json atoms = json::array();
  for (const auto& a : comb.atoms)
    atoms.push_back(json{{"x", coords(a.x, comb.dim)}, {"re", a.w.real()}, {"im", a.w.imag()}});
  return json{{"dim", comb.dim}, {"region", to_json(comb.region)}, {"atoms", atoms}};
}

WeightedComb comb_from_json(const json& j) {
  int dim = j.at("dim").get<int>();
  Box region = box_from_json(j.at("region"));
  region.dim = dim;
  std::vector<Atom> atoms;
  for (const auto& a : j.at("atoms"))
    atoms.push_back({point_from(a.at("x")),
                     Complex{a.at("re").get<double>(), a.value("im", 0.0)}});
  return make_comb(dim, std::move(atoms), region);
}

json to_json(const CutProjectScheme& scheme) {
  json basis = json::array();
  for (Eigen::Index r = 0; r < scheme.lattice.basis.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < scheme.lattice.basis.cols(); ++c)
      row.push_back(scheme.lattice.basis(r, c));
    basis.push_back(row);
  }
  Box w = scheme.window;
  return json{{"basis", basis}, {"d", scheme.d}, {"m", scheme.m}, {"window", to_json(w)}};
}

CutProjectScheme scheme_from_json(const json& j) {
  CutProjectScheme s;
  s.d = j.at("d").get<int>();
  s.m = j.at("m").get<int>();
  const auto& b = j.at("basis");
  auto n = static_cast<Eigen::Index>(b.size());
  Eigen::MatrixXd basis(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) basis(r, c) = b[r][c].get<double>();
  s.lattice = make_lattice(basis);
  s.window = box_from_json(j.at("window"));
  s.window.dim = s.m;
  return s;
}

json to_json(const CharacterSet& cs) {
  json members = json::array();
  for (const auto& m : cs.members)
    members.push_back(json{{"chi", coords(m.chi, cs.dim)}, {"deviation", m.max_deviation}});
  return json{{"dim", cs.dim},
              {"eps", cs.eps},
              {"truncation_radius", cs.truncation_radius},
              {"members", members}};
}

CharacterSet character_set_from_json(const json& j) {
  CharacterSet cs;
  cs.dim = j.value("dim", 1);
  cs.eps = j.at("eps").get<double>();
  cs.truncation_radius = j.at("truncation_radius").get<double>();
  for (const auto& m : j.at("members"))
    cs.members.push_back({point_from(m.at("chi")), m.at("deviation").get<double>()});
  return cs;
}

json to_json(const SpectrumEstimate& spec) {
  json entries = json::array();
  for (const auto& e : spec.entries)
    entries.push_back(json{{"chi", coords(e.chi, spec.dim)},
                           {"intensity", e.intensity},
                           {"stderr_proxy", e.stderr_proxy}});
  return json{{"dim", spec.dim},
              {"estimator", estimator_name(spec.estimator)},
              {"patch_volume", spec.patch_volume},
              {"i_zero", spec.i_zero},
              {"entries", entries}};
}

SpectrumEstimate spectrum_from_json(const json& j) {
  SpectrumEstimate spec;
  spec.dim = j.value("dim", 1);
  spec.estimator = estimator_from_name(j.at("estimator").get<std::string>());
  spec.patch_volume = j.at("patch_volume").get<double>();
  spec.i_zero = j.at("i_zero").get<double>();
  for (const auto& e : j.at("entries")) {
    SpectrumEntry entry;
    entry.chi = point_from(e.at("chi"));
    entry.intensity = e.at("intensity").get<double>();
    entry.stderr_proxy = e.value("stderr_proxy", 0.0);
    spec.entries.push_back(entry);
  }
  return spec;
}

json to_json(const PeakSet& peaks) {
  json arr = json::array();
  for (const auto& p : peaks.peaks)
    arr.push_back(json{{"chi", coords(p.chi, peaks.dim)}, {"intensity", p.intensity}});
  json out{{"a", peaks.a}, {"estimator", estimator_name(peaks.estimator)}, {"peaks", arr}};
  if (peaks.b >= 0) out["b"] = peaks.b;
  return out;
}

json to_json(const DensityEstimate& est) {
  return json{{"lower", est.lower},
              {"upper", est.upper},
              {"window_size", est.window_size},
              {"n_windows", est.n_windows}};
}

json to_json(const MeyerCertificate& cert) {
  json f = json::array();
  for (const auto& p : cert.cover_F) f.push_back(coords(p, cert.dim));
  json unc = json::array();
  for (const auto& p : cert.uncovered) unc.push_back(coords(p, cert.dim));
  return json{{"is_delone", cert.is_delone},
              {"min_sep", cert.min_sep},
              {"covering_radius", cert.covering_radius},
              {"delta_min_sep", cert.delta_min_sep},
              {"diff_radius", cert.diff_radius},
              {"cover_F", f},
              {"uncovered", unc},
              {"verdict", cert.verdict}};
}

std::string spectrum_to_csv(const SpectrumEstimate& spec) {
  std::string out;
  out += spec.dim == 2 ? "chi_x,chi_y,intensity,stderr_proxy\n" : "chi,intensity,stderr_proxy\n";
  for (const auto& e : spec.entries) {
    out += fmt17(e.chi[0]);
    if (spec.dim == 2) out += "," + fmt17(e.chi[1]);
    out += "," + fmt17(e.intensity) + "," + fmt17(e.stderr_proxy) + "\n";
  }
  return out;
}

}  // namespace meyerlab
