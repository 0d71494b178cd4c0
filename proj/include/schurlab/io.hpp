#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "schurlab/fusion.hpp"
#include "schurlab/group.hpp"
#include "schurlab/schurity.hpp"
#include "schurlab/sring.hpp"

namespace schurlab::io {

using Json = nlohmann::ordered_json;

std::string version();

// Schemas are described in docs/schemas.md. Every *_from_json rebuilds and
// re-validates the object, so a file that parses is also a checked object.

Json to_json(const Group& g);
GroupPtr group_from_json(const Json& j);

Json to_json(const SRing& a);
/// `g` must match the recorded group spec and order.
SRing sring_from_json(const Json& j, GroupPtr g);

Json to_json(const SchurityCertificate& c);
SchurityCertificate certificate_from_json(const Json& j);

Json to_json(const EnumerationReport& r);
EnumerationReport report_from_json(const Json& j, GroupPtr g);

Json to_json(const SchurVerdict& v);
SchurVerdict verdict_from_json(const Json& j, GroupPtr g);

/// One row per S-ring: index,rank,sizes,central,primitive,schurian.
std::string report_csv(const EnumerationReport& r);

/// Wraps a payload with tool, version, kind, config and wall time.
Json envelope(const std::string& kind, Json payload, Json config, double wall_seconds);
/// The payload of an envelope; throws Error when `kind` differs.
const Json& payload(const Json& doc, const std::string& kind);

void write_text(const std::filesystem::path& path, const std::string& text);
Json read_json(const std::filesystem::path& path);

}  // namespace schurlab::io
