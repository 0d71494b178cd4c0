#include "schurlab/io.hpp"

#include <fstream>
#include <sstream>

namespace schurlab::io {

std::string version() { return SCHURLAB_VERSION; }

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error("malformed document: " + what);
}

Partition blocks_from(const Json& j) {
  require(j.is_array(), "blocks must be an array");
  Partition p;
  for (const auto& b : j) p.push_back(b.get<ElementSet>());
  return p;
}

SchurityCertificate::Verdict parse_verdict(const std::string& s) {
  for (auto v : {SchurityCertificate::Verdict::Schurian, SchurityCertificate::Verdict::Nonschurian,
                 SchurityCertificate::Verdict::Undecided})
    if (to_string(v) == s) return v;
  throw Error("malformed document: unknown verdict '" + s + "'");
}

SchurVerdict::Status parse_status(const std::string& s) {
  for (auto v : {SchurVerdict::Status::True, SchurVerdict::Status::False, SchurVerdict::Status::Undecided})
    if (to_string(v) == s) return v;
  throw Error("malformed document: unknown status '" + s + "'");
}

// Missing keys and wrong types surface as Error, like every other input fault.
template <class F>
auto guarded(F f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed document: ") + e.what());
  }
}

}  // namespace

Json to_json(const Group& g) {
  return Json{{"order", g.order()}, {"spec", g.spec()}, {"labels", g.labels()}, {"table", g.table()}};
}

GroupPtr group_from_json(const Json& j) {
  return guarded([&] {
    const int n = j.at("order").get<int>();
    require(n >= 1 && n <= kMaxOrder, "group order out of range");
    auto table = j.at("table").get<std::vector<Element>>();
    require(table.size() == static_cast<std::size_t>(n) * n, "table size");
    return std::make_shared<const Group>(n, std::move(table), j.at("labels").get<std::vector<std::string>>(),
                                         j.at("spec").get<std::string>());
  });
}

Json to_json(const SRing& a) {
  return Json{{"group", a.group().spec()},
              {"order", a.group().order()},
              {"rank", a.rank()},
              {"sizes", a.sizes()},
              {"blocks", a.blocks()}};
}

SRing sring_from_json(const Json& j, GroupPtr g) {
  return guarded([&] {
    require(j.at("group").get<std::string>() == g->spec(), "S-ring belongs to " + j.at("group").get<std::string>());
    if (j.contains("order")) require(j.at("order").get<int>() == g->order(), "order mismatch");
    SRing a = make_sring(std::move(g), blocks_from(j.at("blocks")));
    if (j.contains("rank")) require(j.at("rank").get<int>() == a.rank(), "rank mismatch");
    return a;
  });
}

Json to_json(const SchurityCertificate& c) {
  Json gens = Json::array();
  for (const Perm& p : c.aut_generators) gens.push_back(p.images());
  Json witness = nullptr;
  if (c.witness_block >= 0) witness = Json{{"block", c.witness_block}, {"orbit", c.witness_orbit}};
  return Json{{"verdict", to_string(c.verdict)},
              {"aut_order", to_string(c.aut_order)},
              {"generators", std::move(gens)},
              {"stabilizer_orbits", c.stabilizer_orbits},
              {"witness", std::move(witness)},
              {"nodes", c.nodes},
              {"note", c.note}};
}

SchurityCertificate certificate_from_json(const Json& j) {
  return guarded([&] {
    SchurityCertificate c;
    c.verdict = parse_verdict(j.at("verdict").get<std::string>());
    c.aut_order = BigInt(j.at("aut_order").get<std::string>());
    for (const auto& g : j.at("generators")) c.aut_generators.emplace_back(g.get<std::vector<int>>());
    c.stabilizer_orbits = j.at("stabilizer_orbits").get<std::vector<ElementSet>>();
    if (!j.at("witness").is_null()) {
      c.witness_block = j.at("witness").at("block").get<int>();
      c.witness_orbit = j.at("witness").at("orbit").get<ElementSet>();
    }
    c.nodes = j.value("nodes", std::uint64_t{0});
    c.note = j.value("note", std::string());
    return c;
  });
}

Json to_json(const EnumerationReport& r) {
  Json rings = Json::array();
  for (std::size_t i = 0; i < r.rings.size(); ++i) {
    Json x = to_json(r.rings[i]);
    const RingAnnotation& n = r.notes[i];
    x["central"] = n.central;
    x["primitive"] = n.primitive;
    x["schurian"] = n.schurian ? Json(*n.schurian) : Json(nullptr);
    x["tags"] = n.tags;
    rings.push_back(std::move(x));
  }
  return Json{{"group", r.group_spec},
              {"mode", to_string(r.mode)},
              {"count", r.rings.size()},
              {"stats", {{"nodes", r.stats.nodes}, {"prunes", r.stats.prunes}, {"seconds", r.stats.seconds}}},
              {"rings", std::move(rings)}};
}

EnumerationReport report_from_json(const Json& j, GroupPtr g) {
  return guarded([&] {
    EnumerationReport r;
    r.group_spec = j.at("group").get<std::string>();
    require(r.group_spec == g->spec(), "report belongs to " + r.group_spec);
    const auto mode = j.at("mode").get<std::string>();
    require(mode == "central" || mode == "all", "mode");
    r.mode = mode == "central" ? EnumerationMode::Central : EnumerationMode::All;
    for (const auto& x : j.at("rings")) {
      r.rings.push_back(sring_from_json(x, g));
      RingAnnotation n = annotate(r.rings.back());
      require(x.at("central").get<bool>() == n.central, "central flag");
      require(x.at("primitive").get<bool>() == n.primitive, "primitive flag");
      if (!x.at("schurian").is_null()) n.schurian = x.at("schurian").get<bool>();
      n.tags = x.value("tags", std::vector<std::string>{});
      r.notes.push_back(std::move(n));
    }
    require(j.at("count").get<std::size_t>() == r.rings.size(), "count");
    if (j.contains("stats")) {
      r.stats.nodes = j["stats"].value("nodes", std::uint64_t{0});
      r.stats.prunes = j["stats"].value("prunes", std::uint64_t{0});
      r.stats.seconds = j["stats"].value("seconds", 0.0);
    }
    return r;
  });
}

Json to_json(const SchurVerdict& v) {
  Json certs = Json::array();
  for (const auto& c : v.certificates) certs.push_back(to_json(c));
  return Json{{"group", v.report.group_spec},
              {"status", to_string(v.status)},
              {"nonschurian", v.nonschurian},
              {"note", v.note},
              {"report", to_json(v.report)},
              {"certificates", std::move(certs)}};
}

SchurVerdict verdict_from_json(const Json& j, GroupPtr g) {
  return guarded([&] {
    SchurVerdict v;
    v.status = parse_status(j.at("status").get<std::string>());
    v.nonschurian = j.at("nonschurian").get<std::vector<int>>();
    v.note = j.value("note", std::string());
    v.report = report_from_json(j.at("report"), std::move(g));
    for (const auto& c : j.at("certificates")) v.certificates.push_back(certificate_from_json(c));
    require(v.certificates.empty() || v.certificates.size() == v.report.rings.size(), "certificate count");
    return v;
  });
}

std::string report_csv(const EnumerationReport& r) {
  std::ostringstream out;
  out << "index,rank,sizes,central,primitive,schurian\n";
  for (std::size_t i = 0; i < r.rings.size(); ++i) {
    const RingAnnotation& n = r.notes[i];
    out << i << ',' << n.rank << ',';
    for (std::size_t k = 0; k < n.sizes.size(); ++k) out << (k ? " " : "") << n.sizes[k];
    out << ',' << n.central << ',' << n.primitive << ',' << (n.schurian ? (*n.schurian ? "1" : "0") : "") << '\n';
  }
  return out.str();
}

Json envelope(const std::string& kind, Json payload, Json config, double wall_seconds) {
  return Json{{"tool", "schurlab"},
              {"version", version()},
              {"kind", kind},
              {"config", std::move(config)},
              {"wall_seconds", wall_seconds},
              {"payload", std::move(payload)}};
}

const Json& payload(const Json& doc, const std::string& kind) {
  if (!doc.contains("kind") || !doc.contains("payload")) return doc;  // bare payload
  require(doc.at("kind").get<std::string>() == kind, "expected a " + kind + " document");
  return doc.at("payload");
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("write failed: " + path.string());
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error("malformed JSON in " + path.string() + ": " + e.what());
  }
}

}  // namespace schurlab::io
