#include <sstream>

#include "doctest.h"
#include "schurlab/io.hpp"

using namespace schurlab;
using io::Json;

namespace {

// Text round trip, so the tests see what a reader of the file would see.
Json reparse(const Json& j) { return Json::parse(j.dump()); }

}  // namespace

TEST_CASE("groups round-trip") {
  for (const char* spec : {"cyclic:1", "dihedral:12", "A5", "semidirect(cyclic:3,cyclic:4,pow:2)"}) {
    CAPTURE(spec);
    auto g = build_group(spec);
    auto h = io::group_from_json(reparse(io::to_json(*g)));
    CHECK(h->order() == g->order());
    CHECK(h->spec() == g->spec());
    CHECK(h->table() == g->table());
    CHECK(h->labels() == g->labels());
  }
  Json bad = io::to_json(*build_group("cyclic:4"));
  bad["table"][5] = 0;  // breaks the Latin square
  CHECK_THROWS_AS(io::group_from_json(bad), Error);
  bad.erase("table");
  CHECK_THROWS_AS(io::group_from_json(bad), Error);
}

TEST_CASE("S-rings round-trip and are re-validated") {
  auto g = build_group("quaternion:8");
  for (const auto& a : enumerate_central(g).rings) CHECK(io::sring_from_json(reparse(io::to_json(a)), g).same_partition(a));

  Json j = io::to_json(center_sring(g));
  CHECK_THROWS_AS(io::sring_from_json(j, build_group("dihedral:8")), Error);
  Json merged = j;
  merged["blocks"] = Json::array({Json::array({0}), Json::array({1, 2, 3, 4, 5, 6, 7})});
  merged.erase("rank");
  CHECK(io::sring_from_json(merged, g).rank() == 2);
  merged["blocks"] = Json::array({Json::array({0, 1}), Json::array({2, 3, 4, 5, 6, 7})});
  CHECK_THROWS_AS(io::sring_from_json(merged, g), Error);
  Json wrong_rank = j;
  wrong_rank["rank"] = 3;
  CHECK_THROWS_AS(io::sring_from_json(wrong_rank, g), Error);
}

TEST_CASE("certificates round-trip and still verify") {
  auto g = build_group("direct(cyclic:4,cyclic:4)");
  int nonschurian = 0;
  for (const auto& a : enumerate_all(g).rings) {
    if (a.rank() > 4) continue;
    const auto c = is_schurian(a);
    const auto d = io::certificate_from_json(reparse(io::to_json(c)));
    CHECK(d.verdict == c.verdict);
    CHECK(d.aut_order == c.aut_order);
    CHECK(d.witness_block == c.witness_block);
    CHECK(d.witness_orbit == c.witness_orbit);
    CHECK(verify_certificate(a, d));
    if (d.verdict == SchurityCertificate::Verdict::Nonschurian) {
      ++nonschurian;
      Json flipped = io::to_json(c);
      flipped["verdict"] = "schurian";
      CHECK_FALSE(verify_certificate(a, io::certificate_from_json(flipped)));
    }
  }
  CHECK(nonschurian > 0);
  Json bad = io::to_json(is_schurian(trivial(g)));
  bad["verdict"] = "maybe";
  CHECK_THROWS_AS(io::certificate_from_json(bad), Error);
}

TEST_CASE("reports and verdicts round-trip") {
  auto g = build_group("dihedral:12");
  const auto v = is_generalized_schur(g);
  const auto w = io::verdict_from_json(reparse(io::to_json(v)), g);
  CHECK(w.status == v.status);
  CHECK(w.nonschurian == v.nonschurian);
  REQUIRE(w.report.rings.size() == v.report.rings.size());
  for (std::size_t i = 0; i < v.report.rings.size(); ++i) {
    CHECK(w.report.rings[i].same_partition(v.report.rings[i]));
    CHECK(w.report.notes[i].schurian == v.report.notes[i].schurian);
    CHECK(verify_certificate(w.report.rings[i], w.certificates[i]));
  }

  Json tampered = io::to_json(v.report);
  tampered["rings"][0]["primitive"] = !tampered["rings"][0]["primitive"].get<bool>();
  CHECK_THROWS_AS(io::report_from_json(tampered, g), Error);
  Json short_count = io::to_json(v.report);
  short_count["count"] = 1;
  CHECK_THROWS_AS(io::report_from_json(short_count, g), Error);
}

TEST_CASE("csv has one row per S-ring") {
  const auto r = enumerate_all(build_group("cyclic:6"));
  const std::string csv = io::report_csv(r);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "index,rank,sizes,central,primitive,schurian");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == static_cast<int>(r.rings.size()));
}

TEST_CASE("envelopes and files") {
  auto g = build_group("A4");
  const Json doc = io::envelope("sring", io::to_json(center_sring(g)), Json{{"jobs", 1}}, 0.5);
  CHECK(doc["tool"] == "schurlab");
  CHECK(doc["version"] == io::version());
  CHECK(io::sring_from_json(io::payload(doc, "sring"), g).same_partition(center_sring(g)));
  CHECK_THROWS_AS(io::payload(doc, "enumeration"), Error);
  // A bare payload is accepted as is.
  CHECK(io::payload(io::to_json(center_sring(g)), "sring")["rank"] == 4);

  const auto dir = std::filesystem::temp_directory_path() / "schurlab-test-io" / "nested";
  std::filesystem::remove_all(dir.parent_path());
  io::write_text(dir / "a.json", doc.dump());
  CHECK(io::read_json(dir / "a.json") == doc);
  io::write_text(dir / "b.json", "{ not json");
  CHECK_THROWS_AS(io::read_json(dir / "b.json"), Error);
  CHECK_THROWS_AS(io::read_json(dir / "missing.json"), Error);
  std::filesystem::remove_all(dir.parent_path());
}
