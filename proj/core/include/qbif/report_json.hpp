#ifndef QBIF_REPORT_JSON_HPP
#define QBIF_REPORT_JSON_HPP

#include <nlohmann/json.hpp>
#include <ostream>
#include <string>

#include "qbif/bif_bounds.hpp"
#include "qbif/escape_stats.hpp"

namespace qbif {

using json = nlohmann::ordered_json;

/// Complex numbers are encoded as {"re": ..., "im": ...} decimal strings so
/// extended-precision values survive the round trip.
json complex_to_json(const Complex& z);
Complex complex_from_json(const json& j);
json cplx_to_json(cplx z);
cplx cplx_from_json(const json& j);

json to_json(const TEstimate& est);
TEstimate t_estimate_from_json(const json& j);

json to_json(const TailFit& fit);
TailFit tail_fit_from_json(const json& j);

json to_json(const Classification& cls);
Classification classification_from_json(const json& j);

json to_json(const CycleData& cycle);
CycleData cycle_from_json(const json& j);

json to_json(const InvariantDiskCertificate& cert);
InvariantDiskCertificate disk_certificate_from_json(const json& j);

json to_json(const ParabolicRootCertificate& cert);
ParabolicRootCertificate parabolic_certificate_from_json(const json& j);

json to_json(const BifurcationReport& report);
BifurcationReport report_from_json(const json& j);

json to_json(const ScanResult& scan);

/// Escape-time histogram as "k,count" CSV with LF line endings.
void write_histogram_csv(const TailFit& fit, std::ostream& os);

/// Top-level report wrapper: {"command", "config", "result", "certificates",
/// "timestamp"}.
json wrap_report(const std::string& command, json config, json result, json certificates);

/// The same document with the volatile timestamp removed, for byte-identity
/// comparisons.
std::string serialize_without_timestamp(const json& report);

}  // namespace qbif

#endif  // QBIF_REPORT_JSON_HPP
