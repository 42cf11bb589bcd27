#include "psiforge/records.hpp"

#include <fstream>
#include <iostream>
#include <utility>

#include <json.hpp>

#include "psiforge/errors.hpp"

namespace psiforge {

namespace {

using Json = nlohmann::ordered_json;

Json record_json(const VerdictRecord& rec) {
    Json j;
    j["spec"] = rec.spec;
    j["order"] = rec.order;
    if (rec.psi)
        j["psi"] = *rec.psi;
    else
        j["psi"] = nullptr;
    j["verdict"] = rec.verdict;
    j["method"] = rec.method;
    if (rec.witness) {
        Json w;
        w["order"] = rec.witness->order;
        w["psi"] = rec.witness->psi;
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    j["elapsed_ms"] = rec.elapsed_ms;
    return j;
}

// Strict reconstruction: any missing key or wrong type rejects the record.
std::optional<VerdictRecord> record_from_json(const Json& j) {
    if (!j.is_object()) return std::nullopt;
    for (const char* key : {"spec", "order", "psi", "verdict", "method", "witness",
                            "elapsed_ms"})
        if (!j.contains(key)) return std::nullopt;
    if (!j["spec"].is_string() || !j["order"].is_number_unsigned() ||
        !j["verdict"].is_string() || !j["method"].is_string() ||
        !j["elapsed_ms"].is_number_unsigned())
        return std::nullopt;
    VerdictRecord rec;
    rec.spec = j["spec"].get<std::string>();
    rec.order = j["order"].get<std::uint64_t>();
    if (j["psi"].is_number_unsigned())
        rec.psi = j["psi"].get<std::uint64_t>();
    else if (!j["psi"].is_null())
        return std::nullopt;
    rec.verdict = j["verdict"].get<std::string>();
    rec.method = j["method"].get<std::string>();
    if (j["witness"].is_object()) {
        const Json& w = j["witness"];
        if (!w.contains("order") || !w.contains("psi") ||
            !w["order"].is_number_unsigned() || !w["psi"].is_number_unsigned())
            return std::nullopt;
        WitnessRecord wr;
        wr.order = w["order"].get<std::uint64_t>();
        wr.psi = w["psi"].get<std::uint64_t>();
        rec.witness = std::move(wr);
    } else if (!j["witness"].is_null()) {
        return std::nullopt;
    }
    rec.elapsed_ms = j["elapsed_ms"].get<std::uint64_t>();
    return rec;
}

std::string csv_escape(const std::string& s) {
    bool needs_quotes = s.find_first_of(",\"\n") != std::string::npos;
    if (!needs_quotes) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string record_to_json(const VerdictRecord& rec) {
    return record_json(rec).dump();
}

std::string csv_header() { return "spec,order,expected,verdict,method,elapsed_ms"; }

std::string record_to_csv(const VerdictRecord& rec, const std::string& expected) {
    return csv_escape(rec.spec) + "," + std::to_string(rec.order) + "," +
           csv_escape(expected) + "," + csv_escape(rec.verdict) + "," +
           csv_escape(rec.method) + "," + std::to_string(rec.elapsed_ms);
}

VerdictCache::VerdictCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return;  // no file yet: empty usable cache
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        Json j = Json::parse(line, nullptr, /*allow_exceptions=*/false);
        bool ok = !j.is_discarded() && j.is_object() && j.contains("method_flag") &&
                  j["method_flag"].is_string() && j.contains("budget") &&
                  j["budget"].is_number_unsigned() && j.contains("record");
        std::optional<VerdictRecord> rec;
        if (ok) rec = record_from_json(j["record"]);
        if (!ok || !rec) {
            std::cerr << "warning: cache file " << path_ << " line " << lineno
                      << " is malformed; ignoring the cache\n";
            entries_.clear();
            usable_ = false;
            return;
        }
        Entry e;
        e.method_flag = j["method_flag"].get<std::string>();
        e.budget = j["budget"].get<std::uint64_t>();
        e.rec = std::move(*rec);
        entries_.push_back(std::move(e));
    }
}

std::optional<VerdictRecord> VerdictCache::lookup(const std::string& spec,
                                                  const std::string& method_flag,
                                                  std::uint64_t budget) const {
    if (!usable_) return std::nullopt;
    // Later lines supersede earlier ones.
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
        if (it->rec.spec == spec && it->method_flag == method_flag &&
            it->budget >= budget)
            return it->rec;
    }
    return std::nullopt;
}

void VerdictCache::store(const std::string& method_flag, std::uint64_t budget,
                         const VerdictRecord& rec) {
    Json j;
    j["method_flag"] = method_flag;
    j["budget"] = budget;
    j["record"] = record_json(rec);
    std::ofstream out(path_, std::ios::app);
    if (!out) fail(Errc::argument_error, "cannot open cache file " + path_);
    out << j.dump() << "\n";
    if (usable_) {
        Entry e;
        e.method_flag = method_flag;
        e.budget = budget;
        e.rec = rec;
        entries_.push_back(std::move(e));
    }
}

} // namespace psiforge
