#pragma once

/**
 * @file document.hpp
 * @brief JSON certificate documents.
 *
 * Every rational is a string in canonical "p" or "p/q" form, never a JSON
 * number. Field order is fixed so that identical inputs render to identical
 * bytes.
 *
 *     {
 *       "schema_version": "1",
 *       "kind": "rolle-witness",
 *       "payload": { "f": [...], "nodes": [...], "exponents": [...], "power": "1", "scale": "4" },
 *       "verification": { "valid": true, "checks": [ {"name", "status", "detail"}, ... ] }
 *     }
 *
 * A "belyi" payload carries points, exponents, constant, degree and
 * critical_report (location, value, ramification_index). The f field of a
 * witness lists coefficients in ascending order of power.
 */

#include <splitrolle/belyimap.hpp>
#include <splitrolle/cli/polyexpr.hpp>
#include <splitrolle/realroots.hpp>
#include <splitrolle/rollewitness.hpp>
#include <splitrolle/verification.hpp>

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace srolle::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

class DocumentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CertificateDocument {
    std::string schema_version = kSchemaVersion;
    std::variant<RolleWitness, BelyiCertificate> payload;
    std::optional<VerificationReport> verification;

    std::string kind() const {
        return std::holds_alternative<RolleWitness>(payload) ? "rolle-witness" : "belyi";
    }

    friend bool operator==(const CertificateDocument&, const CertificateDocument&) = default;
};

namespace detail {

template <class T>
Json string_array(const std::vector<T>& v) {
    Json a = Json::array();
    for (const auto& x : v) {
        if constexpr (std::is_same_v<T, Rat>) a.push_back(x.str());
        else a.push_back(x.get_str());
    }
    return a;
}

inline const Json& field(const Json& obj, const char* name) {
    if (!obj.is_object() || !obj.contains(name)) throw DocumentError(std::string("missing field '") + name + "'");
    return obj.at(name);
}

inline std::string string_field(const Json& obj, const char* name) {
    const Json& v = field(obj, name);
    if (!v.is_string()) throw DocumentError(std::string("field '") + name + "' must be a string");
    return v.get<std::string>();
}

inline Rat to_rat(const Json& v, const char* what) {
    if (!v.is_string()) throw DocumentError(std::string(what) + " must be a rational string");
    try {
        return Rat::parse(v.get<std::string>());
    } catch (const std::exception&) {
        throw DocumentError(std::string(what) + ": malformed rational '" + v.get<std::string>() + "'");
    }
}

inline Integer to_integer(const Json& v, const char* what) {
    if (!v.is_string()) throw DocumentError(std::string(what) + " must be an integer string");
    try {
        return parse_integer(v.get<std::string>());
    } catch (const std::exception&) {
        throw DocumentError(std::string(what) + ": malformed integer '" + v.get<std::string>() + "'");
    }
}

inline std::vector<Rat> rat_array(const Json& obj, const char* name) {
    const Json& a = field(obj, name);
    if (!a.is_array()) throw DocumentError(std::string("field '") + name + "' must be an array");
    std::vector<Rat> out;
    for (const auto& v : a) out.push_back(to_rat(v, name));
    return out;
}

inline std::vector<Integer> integer_array(const Json& obj, const char* name) {
    const Json& a = field(obj, name);
    if (!a.is_array()) throw DocumentError(std::string("field '") + name + "' must be an array");
    std::vector<Integer> out;
    for (const auto& v : a) out.push_back(to_integer(v, name));
    return out;
}

inline Json projective_json(const ProjectivePoint& p) {
    return is_infinity(p) ? Json("infinity") : Json(std::get<Rat>(p).str());
}

inline CriticalValue critical_value_from(const std::string& s) {
    if (s == "0") return CriticalValue::zero;
    if (s == "1") return CriticalValue::one;
    if (s == "infinity") return CriticalValue::infinity;
    throw DocumentError("critical value must be one of 0, 1, infinity; got '" + s + "'");
}

} // namespace detail

inline Json report_json(const VerificationReport& rep) {
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        Json item;
        item["name"] = c.name;
        item["status"] = std::string(to_string(c.status));
        item["detail"] = c.detail;
        checks.push_back(std::move(item));
    }
    Json out;
    out["valid"] = rep.valid();
    out["checks"] = std::move(checks);
    return out;
}

inline VerificationReport report_from_json(const Json& j) {
    VerificationReport rep;
    const Json& checks = detail::field(j, "checks");
    if (!checks.is_array()) throw DocumentError("verification checks must be an array");
    for (const auto& c : checks) {
        const std::string status = detail::string_field(c, "status");
        CheckResult r{detail::string_field(c, "name"), CheckStatus::fail, detail::string_field(c, "detail")};
        if (status == "pass") r.status = CheckStatus::pass;
        else if (status == "skipped") r.status = CheckStatus::skipped;
        else if (status != "fail") throw DocumentError("unknown check status '" + status + "'");
        rep.checks.push_back(std::move(r));
    }
    return rep;
}

inline Json witness_payload(const RolleWitness& w) {
    Json p;
    p["f"] = detail::string_array(w.f.coefficients());
    p["nodes"] = detail::string_array(w.nodes);
    p["exponents"] = detail::string_array(w.exponents);
    p["power"] = w.power.get_str();
    p["scale"] = w.scale.str();
    return p;
}

inline Json belyi_payload(const BelyiCertificate& c) {
    Json p;
    p["points"] = detail::string_array(c.points);
    p["exponents"] = detail::string_array(c.exponents);
    p["constant"] = c.constant.str();
    p["degree"] = c.degree.get_str();
    Json report = Json::array();
    for (const auto& cp : c.critical_report) {
        Json item;
        item["location"] = detail::projective_json(cp.location);
        item["value"] = std::string(to_string(cp.value));
        item["ramification_index"] = cp.ramification_index.get_str();
        report.push_back(std::move(item));
    }
    p["critical_report"] = std::move(report);
    return p;
}

inline Json to_json(const CertificateDocument& doc) {
    Json j;
    j["schema_version"] = doc.schema_version;
    j["kind"] = doc.kind();
    if (const auto* w = std::get_if<RolleWitness>(&doc.payload))
        j["payload"] = witness_payload(*w);
    else
        j["payload"] = belyi_payload(std::get<BelyiCertificate>(doc.payload));
    if (doc.verification) j["verification"] = report_json(*doc.verification);
    return j;
}

inline RolleWitness witness_from_json(const Json& p) {
    RolleWitness w;
    w.f = Poly(detail::rat_array(p, "f"));
    w.nodes = detail::rat_array(p, "nodes");
    w.exponents = detail::integer_array(p, "exponents");
    w.power = detail::to_integer(detail::field(p, "power"), "power");
    w.scale = detail::to_rat(detail::field(p, "scale"), "scale");
    return w;
}

inline BelyiCertificate belyi_from_json(const Json& p) {
    BelyiCertificate c;
    c.points = detail::rat_array(p, "points");
    c.exponents = detail::integer_array(p, "exponents");
    c.constant = detail::to_rat(detail::field(p, "constant"), "constant");
    c.degree = detail::to_integer(detail::field(p, "degree"), "degree");
    const Json& report = detail::field(p, "critical_report");
    if (!report.is_array()) throw DocumentError("critical_report must be an array");
    for (const auto& item : report) {
        const std::string loc = detail::string_field(item, "location");
        ProjectivePoint where = Infinity{};
        if (loc != "infinity") where = detail::to_rat(item.at("location"), "location");
        c.critical_report.push_back({where, detail::critical_value_from(detail::string_field(item, "value")),
                                     detail::to_integer(detail::field(item, "ramification_index"),
                                                        "ramification_index")});
    }
    return c;
}

inline CertificateDocument document_from_json(const Json& j) {
    if (!j.is_object()) throw DocumentError("certificate document must be a JSON object");
    CertificateDocument doc;
    doc.schema_version = detail::string_field(j, "schema_version");
    if (doc.schema_version != kSchemaVersion)
        throw DocumentError("unsupported schema_version '" + doc.schema_version + "'");
    const std::string kind = detail::string_field(j, "kind");
    const Json& payload = detail::field(j, "payload");
    if (kind == "rolle-witness") doc.payload = witness_from_json(payload);
    else if (kind == "belyi") doc.payload = belyi_from_json(payload);
    else throw DocumentError("unknown certificate kind '" + kind + "'");
    if (j.contains("verification")) doc.verification = report_from_json(j.at("verification"));
    return doc;
}

/// Two-space indented JSON with a trailing newline.
inline std::string render(const Json& j) { return j.dump(2) + "\n"; }

inline CertificateDocument parse_document(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DocumentError(std::string("invalid JSON: ") + e.what());
    }
    return document_from_json(j);
}

inline Json analysis_json(const Poly& f, const RootClassification& cls) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "analysis";
    j["f"] = format_poly(f);
    j["degree"] = cls.degree;
    Json rational = Json::array();
    for (const auto& r : cls.rational_roots) {
        Json item;
        item["root"] = r.root.str();
        item["multiplicity"] = r.multiplicity;
        rational.push_back(std::move(item));
    }
    j["rational_roots"] = std::move(rational);
    Json irrational = Json::array();
    for (const auto& r : cls.irrational_real) {
        Json item;
        item["lo"] = r.interval.lo.str();
        item["hi"] = r.interval.hi.str();
        item["multiplicity"] = r.multiplicity;
        irrational.push_back(std::move(item));
    }
    j["irrational_real"] = std::move(irrational);
    j["nonreal_pair_count"] = cls.nonreal_pair_count;
    j["totally_real"] = cls.totally_real;
    j["irrational_simple"] = cls.irrational_simple;
    return j;
}

} // namespace srolle::cli
