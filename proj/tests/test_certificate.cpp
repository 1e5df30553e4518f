#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "ecto/certificate_json.hpp"
#include "ecto/obstruction.hpp"

using ecto::CertificateDocument;
using ecto::DecompositionTable;

namespace {

const DecompositionTable& table() {
    static const DecompositionTable t = DecompositionTable::load_file(ECTO_TABLE_FILE);
    return t;
}

CertificateDocument document_for(std::uint32_t n) {
    return ecto::make_document(ecto::check_torsion(table(), n));
}

}  // namespace

TEST_CASE("serialization round-trips exactly") {
    for (std::uint32_t n : {25u, 49u, 20u, 65u, 7u}) {
        const CertificateDocument doc = document_for(n);
        const std::string text = ecto::serialize_certificate(doc);
        const CertificateDocument parsed = ecto::parse_certificate(text);
        INFO("N = " << n);
        CHECK(parsed == doc);
        CHECK(ecto::serialize_certificate(parsed) == text);  // re-serialization is byte-identical
    }
}

TEST_CASE("document metadata") {
    const CertificateDocument doc = document_for(25);
    CHECK(doc.schema_version == 1);
    CHECK(doc.tool_version == "ecto 0.1.0");
    const auto j = ecto::to_json(doc);
    CHECK(j.at("input").at("N") == 25);
    CHECK(j.at("input").at("degree") == 3);
    CHECK(j.at("input").at("prime") == 3);
    CHECK(j.at("verdict") == "RuledOut");
    REQUIRE(j.at("steps").size() == 14);
    CHECK(j.at("steps")[0].at("index") == 1);
    CHECK(j.at("steps")[13].at("index") == 14);
}

TEST_CASE("canonical key order") {
    const std::string text = ecto::serialize_certificate(document_for(25));
    const auto pos_schema = text.find("\"schema_version\"");
    const auto pos_input = text.find("\"input\"");
    const auto pos_steps = text.find("\"steps\"");
    const auto pos_verdict = text.find("\"verdict\"");
    const auto pos_tool = text.find("\"tool_version\"");
    REQUIRE(pos_schema != std::string::npos);
    CHECK(pos_schema < pos_input);
    CHECK(pos_input < pos_steps);
    CHECK(pos_steps < pos_verdict);
    CHECK(pos_verdict < pos_tool);
    CHECK(text.find("time") == std::string::npos);  // no timestamps anywhere
}

TEST_CASE("parser rejects foreign documents") {
    CHECK_THROWS_AS(ecto::parse_certificate("{}"), std::exception);
    CHECK_THROWS_AS(ecto::parse_certificate("not json"), std::exception);
    CHECK_THROWS_AS(ecto::parse_certificate(R"({"schema_version": 99})"), std::runtime_error);

    // tampered step kind
    std::string text = ecto::serialize_certificate(document_for(25));
    const auto pos = text.find("ComputedCheck");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 13, "MadeUpKind111");
    CHECK_THROWS_AS(ecto::parse_certificate(text), std::runtime_error);
}

TEST_CASE("the evidence cited by the theorem reproduction survives serialization") {
    const std::string c25 = ecto::serialize_certificate(document_for(25));
    CHECK(c25.find("m=25 t=3 inadmissible") != std::string::npos);
    CHECK(c25.find("S_1={}") != std::string::npos);
    CHECK(c25.find("S_2={}") != std::string::npos);
    CHECK(c25.find("S_3={}") != std::string::npos);

    const std::string c22 = ecto::serialize_certificate(document_for(22));
    CHECK(c22.find("m=22 t=6 inadmissible") != std::string::npos);

    const std::string c49 = ecto::serialize_certificate(document_for(49));
    CHECK(c49.find("candidates={}") != std::string::npos);
    CHECK(c49.find("m=") == std::string::npos);  // Hasse interval alone, no trace rejections
}
