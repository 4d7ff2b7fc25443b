#ifndef TW_IO_HPP
#define TW_IO_HPP

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "tw/constructions.hpp"
#include "tw/decomposition.hpp"
#include "tw/graph.hpp"
#include "tw/proof_engines.hpp"
#include "tw/verify.hpp"

namespace tw {

/// PACE-2017 style .gr: header `p tw <n> <m>`, one `<a> <b>` line per
/// edge, 1-based ids, `c ...` comments. parse/write round-trip
/// bit-exactly on canonical output (sorted edges).
Graph parse_gr(const std::string& text);
std::string write_gr(const Graph& g);

/// PACE-2017 style .td: `s td <#bags> <max bag size> <n>`, `b <id>
/// <v...>` lines, then tree edges. 1-based throughout.
TreeDecomposition parse_td(const std::string& text, int* graph_n = nullptr);
std::string write_td(const TreeDecomposition& d, int graph_n);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json marked_graph_to_json(const MarkedGraph& mg);
MarkedGraph marked_graph_from_json(const nlohmann::json& j);

nlohmann::json decomposition_to_json(const TreeDecomposition& d);
TreeDecomposition decomposition_from_json(const nlohmann::json& j);

nlohmann::json parallel_structure_to_json(const ParallelStructure& s);
ParallelStructure parallel_structure_from_json(const nlohmann::json& j);

nlohmann::json tower_plan_to_json(const TowerPlan& p);
nlohmann::json matching_certificate_to_json(const MatchingCertificate& c);
MatchingCertificate matching_certificate_from_json(const nlohmann::json& j);
nlohmann::json report_to_json(const VerificationReport& r);

inline constexpr int kCertificateSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

/// Certificate envelope: schema version, inline graph, k, payload kind
/// and body, plus provenance (command line and seed). Serializes with
/// sorted keys and integer-only payloads, so byte-identical round-trips
/// are the parse/dump identity.
nlohmann::json make_certificate(const std::string& kind, const Graph& g, int k,
                                nlohmann::json payload,
                                const std::string& command,
                                std::uint64_t seed);

/// Re-validates a loaded certificate's payload with the matching
/// checker; throws domain_error on schema or verdict mismatch.
void check_certificate(const nlohmann::json& cert);

}  // namespace tw

#endif
