#ifndef ECTO_CERTIFICATE_JSON_HPP
#define ECTO_CERTIFICATE_JSON_HPP

// Canonical JSON serialization of obstruction certificates.  Key order and
// step order are fixed and there are no timestamps, so serializing the same
// certificate twice produces identical bytes; parse(serialize(c)) == c.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ecto/obstruction.hpp"
#include "ecto/version.hpp"

namespace ecto {

inline constexpr int kCertificateSchemaVersion = 1;

/// A certificate plus the metadata that pins its provenance on disk.
struct CertificateDocument {
    int schema_version = kCertificateSchemaVersion;
    ObstructionCertificate certificate;
    std::string tool_version = std::string(tool_version_string());

    friend bool operator==(const CertificateDocument&, const CertificateDocument&) = default;
};

inline CertificateDocument make_document(ObstructionCertificate cert) {
    CertificateDocument doc;
    doc.certificate = std::move(cert);
    return doc;
}

inline nlohmann::ordered_json to_json(const CertificateDocument& doc) {
    nlohmann::ordered_json j;
    j["schema_version"] = doc.schema_version;
    j["input"] = {{"N", doc.certificate.level},
                  {"degree", doc.certificate.degree},
                  {"prime", doc.certificate.prime}};
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < doc.certificate.steps.size(); ++i) {
        const CertificateStep& s = doc.certificate.steps[i];
        nlohmann::ordered_json js;
        js["index"] = i + 1;
        js["kind"] = to_label(s.kind);
        js["statement"] = s.statement;
        js["status"] = to_label(s.status);
        js["evidence"] = s.evidence;
        js["citation"] = s.citation;
        steps.push_back(std::move(js));
    }
    j["steps"] = std::move(steps);
    j["verdict"] = to_label(doc.certificate.verdict);
    j["tool_version"] = doc.tool_version;
    return j;
}

inline std::string serialize_certificate(const CertificateDocument& doc) {
    return to_json(doc).dump(2) + "\n";
}

namespace detail {

inline StepKind step_kind_from(const std::string& s) {
    if (s == "ComputedCheck") return StepKind::ComputedCheck;
    if (s == "TablePremise") return StepKind::TablePremise;
    if (s == "TheoremPremise") return StepKind::TheoremPremise;
    throw std::runtime_error("unknown certificate step kind: " + s);
}

inline StepStatus step_status_from(const std::string& s) {
    if (s == "Pass") return StepStatus::Pass;
    if (s == "Fail") return StepStatus::Fail;
    throw std::runtime_error("unknown certificate step status: " + s);
}

inline Verdict verdict_from(const std::string& s) {
    if (s == "RuledOut") return Verdict::RuledOut;
    if (s == "Inconclusive") return Verdict::Inconclusive;
    throw std::runtime_error("unknown certificate verdict: " + s);
}

}  // namespace detail

inline CertificateDocument document_from_json(const nlohmann::ordered_json& j) {
    CertificateDocument doc;
    doc.schema_version = j.at("schema_version").get<int>();
    if (doc.schema_version != kCertificateSchemaVersion) {
        throw std::runtime_error("unsupported certificate schema version " +
                                 std::to_string(doc.schema_version));
    }
    const auto& input = j.at("input");
    doc.certificate.level = input.at("N").get<std::uint32_t>();
    doc.certificate.degree = input.at("degree").get<std::uint32_t>();
    doc.certificate.prime = input.at("prime").get<std::uint64_t>();
    std::size_t expected_index = 1;
    for (const auto& js : j.at("steps")) {
        if (js.at("index").get<std::size_t>() != expected_index++) {
            throw std::runtime_error("certificate steps are not contiguously indexed");
        }
        CertificateStep s;
        s.kind = detail::step_kind_from(js.at("kind").get<std::string>());
        s.statement = js.at("statement").get<std::string>();
        s.status = detail::step_status_from(js.at("status").get<std::string>());
        s.evidence = js.at("evidence").get<std::string>();
        s.citation = js.at("citation").get<std::string>();
        doc.certificate.steps.push_back(std::move(s));
    }
    doc.certificate.verdict = detail::verdict_from(j.at("verdict").get<std::string>());
    doc.tool_version = j.at("tool_version").get<std::string>();
    return doc;
}

inline CertificateDocument parse_certificate(const std::string& text) {
    return document_from_json(nlohmann::ordered_json::parse(text));
}

}  // namespace ecto

#endif  // ECTO_CERTIFICATE_JSON_HPP
