#include "qbif/report_json.hpp"

#include <array>
#include <charconv>
#include <chrono>
#include <ctime>

namespace qbif {

namespace {

std::string double_to_string(double x) {
  std::array<char, 64> buf;
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

double double_from_json(const json& j) {
  if (j.is_string()) return std::stod(j.get<std::string>());
  return j.get<double>();
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

json complex_to_json(const Complex& z) {
  return json{{"re", to_decimal_string(z.re())}, {"im", to_decimal_string(z.im())}};
}

Complex complex_from_json(const json& j) {
  return Complex(real_from_decimal(j.at("re").get<std::string>()),
                 real_from_decimal(j.at("im").get<std::string>()));
}

json cplx_to_json(cplx z) {
  return json{{"re", double_to_string(z.real())}, {"im", double_to_string(z.imag())}};
}

cplx cplx_from_json(const json& j) {
  return {std::stod(j.at("re").get<std::string>()), std::stod(j.at("im").get<std::string>())};
}

json to_json(const TEstimate& est) {
  return json{{"point_estimate", est.point_estimate},
              {"escapes", est.escapes},
              {"n_samples", est.n_samples},
              {"wilson_lo", est.wilson_lo},
              {"wilson_hi", est.wilson_hi},
              {"confidence", 0.99},
              {"horizon", est.horizon},
              {"seed", {{"master_seed", est.seed.master_seed}, {"stream_index", est.seed.stream_index}}},
              {"note", "survived-at-horizon counts as non-escape (finite-horizon truncation)"}};
}

TEstimate t_estimate_from_json(const json& j) {
  TEstimate est;
  est.point_estimate = j.at("point_estimate").get<double>();
  est.escapes = j.at("escapes").get<long>();
  est.n_samples = j.at("n_samples").get<long>();
  est.wilson_lo = j.at("wilson_lo").get<double>();
  est.wilson_hi = j.at("wilson_hi").get<double>();
  est.horizon = j.at("horizon").get<int>();
  est.seed.master_seed = j.at("seed").at("master_seed").get<std::uint64_t>();
  est.seed.stream_index = j.at("seed").at("stream_index").get<std::uint64_t>();
  return est;
}

json to_json(const TailFit& fit) {
  json hist = json::array();
  for (const auto& [k, count] : fit.histogram) hist.push_back(json{{"k", k}, {"count", count}});
  return json{{"histogram", std::move(hist)},
              {"escaped", fit.escaped},
              {"n_samples", fit.n_samples},
              {"gamma_hat", fit.gamma_hat},
              {"gamma_valid", fit.gamma_valid},
              {"r_squared", fit.r_squared},
              {"window_lo", fit.window_lo},
              {"window_hi", fit.window_hi},
              {"horizon", fit.horizon},
              {"seed", {{"master_seed", fit.seed.master_seed}, {"stream_index", fit.seed.stream_index}}}};
}

TailFit tail_fit_from_json(const json& j) {
  TailFit fit;
  for (const auto& row : j.at("histogram"))
    fit.histogram.emplace_back(row.at("k").get<int>(), row.at("count").get<long>());
  fit.escaped = j.at("escaped").get<long>();
  fit.n_samples = j.at("n_samples").get<long>();
  fit.gamma_hat = j.at("gamma_hat").get<double>();
  fit.gamma_valid = j.at("gamma_valid").get<bool>();
  fit.r_squared = j.at("r_squared").get<double>();
  fit.window_lo = j.at("window_lo").get<int>();
  fit.window_hi = j.at("window_hi").get<int>();
  fit.horizon = j.at("horizon").get<int>();
  fit.seed.master_seed = j.at("seed").at("master_seed").get<std::uint64_t>();
  fit.seed.stream_index = j.at("seed").at("stream_index").get<std::uint64_t>();
  return fit;
}

json to_json(const Classification& cls) {
  if (cls.disconnected) {
    return json{{"verdict", "disconnectedness-certificate"},
                {"shift", cls.shift},
                {"escape_step", cls.escape_step},
                {"horizon", cls.horizon}};
  }
  return json{{"verdict", "connected-up-to-horizon"}, {"horizon", cls.horizon}};
}

Classification classification_from_json(const json& j) {
  Classification cls;
  cls.disconnected = j.at("verdict").get<std::string>() == "disconnectedness-certificate";
  if (cls.disconnected) {
    cls.shift = j.at("shift").get<int>();
    cls.escape_step = j.at("escape_step").get<int>();
  }
  cls.horizon = j.at("horizon").get<int>();
  return cls;
}

json to_json(const CycleData& cycle) {
  json pts = json::array();
  for (const Complex& a : cycle.points) pts.push_back(complex_to_json(a));
  return json{{"parameter", complex_to_json(cycle.parameter)},
              {"period", cycle.period},
              {"points", std::move(pts)},
              {"multiplier", complex_to_json(cycle.multiplier)}};
}

CycleData cycle_from_json(const json& j) {
  CycleData cycle;
  cycle.parameter = complex_from_json(j.at("parameter"));
  cycle.period = j.at("period").get<int>();
  for (const auto& pt : j.at("points")) cycle.points.push_back(complex_from_json(pt));
  cycle.multiplier = complex_from_json(j.at("multiplier"));
  return cycle;
}

json to_json(const InvariantDiskCertificate& cert) {
  json radii = json::array();
  for (const Real& d : cert.radii) radii.push_back(to_decimal_string(d));
  json slack = json::array();
  for (const Real& s : cert.slack) slack.push_back(to_decimal_string(s));
  return json{{"type", "invariant-disk"},
              {"cycle", to_json(cert.cycle)},
              {"radii", std::move(radii)},
              {"noise_radius", to_decimal_string(cert.noise_radius)},
              {"center_offset", to_decimal_string(cert.center_offset)},
              {"slack", std::move(slack)}};
}

InvariantDiskCertificate disk_certificate_from_json(const json& j) {
  InvariantDiskCertificate cert;
  cert.cycle = cycle_from_json(j.at("cycle"));
  for (const auto& d : j.at("radii")) cert.radii.push_back(real_from_decimal(d.get<std::string>()));
  cert.noise_radius = real_from_decimal(j.at("noise_radius").get<std::string>());
  cert.center_offset = real_from_decimal(j.at("center_offset").get<std::string>());
  for (const auto& s : j.at("slack")) cert.slack.push_back(real_from_decimal(s.get<std::string>()));
  return cert;
}

json to_json(const ParabolicRootCertificate& cert) {
  return json{{"type", "parabolic-root"},
              {"center", complex_to_json(cert.center)},
              {"N", cert.N},
              {"k", cert.k},
              {"tuple", cert.tuple},
              {"rho0", complex_to_json(cert.rho0)},
              {"bound", to_decimal_string(cert.bound)},
              {"residual", to_decimal_string(cert.residual)},
              {"residual_scale", to_decimal_string(cert.residual_scale)},
              {"fixed_point_gap", to_decimal_string(cert.fixed_point_gap)},
              {"multiplier_error", to_decimal_string(cert.multiplier_error)},
              {"precision_bits", cert.precision_bits}};
}

ParabolicRootCertificate parabolic_certificate_from_json(const json& j) {
  ParabolicRootCertificate cert;
  cert.center = complex_from_json(j.at("center"));
  cert.N = j.at("N").get<int>();
  cert.k = j.at("k").get<int>();
  cert.tuple = j.at("tuple").get<std::vector<int>>();
  cert.rho0 = complex_from_json(j.at("rho0"));
  cert.bound = real_from_decimal(j.at("bound").get<std::string>());
  cert.residual = real_from_decimal(j.at("residual").get<std::string>());
  cert.residual_scale = real_from_decimal(j.at("residual_scale").get<std::string>());
  cert.fixed_point_gap = real_from_decimal(j.at("fixed_point_gap").get<std::string>());
  cert.multiplier_error = real_from_decimal(j.at("multiplier_error").get<std::string>());
  cert.precision_bits = j.at("precision_bits").get<unsigned>();
  return cert;
}

json to_json(const BifurcationReport& report) {
  auto entries = [](const std::vector<BoundEntry>& list) {
    json arr = json::array();
    for (const BoundEntry& e : list)
      arr.push_back(json{{"value", e.value}, {"provenance", e.provenance}, {"detail", e.detail}});
    return arr;
  };
  json certs = json::array();
  for (const auto& c : report.disk_certificates) certs.push_back(to_json(c));
  for (const auto& c : report.parabolic_certificates) certs.push_back(to_json(c));
  return json{{"center", complex_to_json(report.center)},
              {"lower_bounds", entries(report.lower_bounds)},
              {"upper_bounds", entries(report.upper_bounds)},
              {"best_lower", report.best_lower},
              {"best_upper", report.best_upper},
              {"certificates", std::move(certs)}};
}

BifurcationReport report_from_json(const json& j) {
  BifurcationReport report;
  report.center = complex_from_json(j.at("center"));
  auto read_entries = [](const json& arr, std::vector<BoundEntry>& out) {
    for (const auto& e : arr)
      out.push_back(BoundEntry{e.at("value").get<double>(), e.at("provenance").get<std::string>(),
                               e.at("detail").get<std::string>()});
  };
  read_entries(j.at("lower_bounds"), report.lower_bounds);
  read_entries(j.at("upper_bounds"), report.upper_bounds);
  report.best_lower = double_from_json(j.at("best_lower"));
  report.best_upper = double_from_json(j.at("best_upper"));
  for (const auto& c : j.at("certificates")) {
    if (c.at("type").get<std::string>() == "invariant-disk")
      report.disk_certificates.push_back(disk_certificate_from_json(c));
    else
      report.parabolic_certificates.push_back(parabolic_certificate_from_json(c));
  }
  return report;
}

json to_json(const ScanResult& scan) {
  json table = json::array();
  for (const ScanRow& row : scan.table) {
    json r{{"tuple", row.tuple}, {"ok", row.ok}, {"representative", row.representative}};
    if (row.ok)
      r["bound"] = row.bound;
    else
      r["note"] = row.note;
    table.push_back(std::move(r));
  }
  return json{{"min_bound", scan.min_bound},
              {"raw_min_count", scan.raw_min_count},
              {"best", to_json(scan.best)},
              {"table", std::move(table)}};
}

void write_histogram_csv(const TailFit& fit, std::ostream& os) {
  os << "k,count\n";
  for (const auto& [k, count] : fit.histogram) os << k << "," << count << "\n";
}

json wrap_report(const std::string& command, json config, json result, json certificates) {
  return json{{"command", command},
              {"config", std::move(config)},
              {"result", std::move(result)},
              {"certificates", std::move(certificates)},
              {"timestamp", utc_timestamp()}};
}

std::string serialize_without_timestamp(const json& report) {
  json copy = report;
  copy.erase("timestamp");
  return copy.dump(2);
}

}  // namespace qbif
