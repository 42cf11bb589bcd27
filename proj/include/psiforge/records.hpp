#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace psiforge {

struct WitnessRecord {
    std::uint64_t order = 0;
    std::uint64_t psi = 0;
    std::string hint;  // generator description, human output only
};

// One verdict about one group, ready for serialization.
struct VerdictRecord {
    std::string spec;  // canonical spelling
    std::uint64_t order = 0;
    std::optional<std::uint64_t> psi;
    std::string verdict;  // "true" | "false" | "unknown"
    std::string method;
    std::optional<WitnessRecord> witness;
    std::uint64_t elapsed_ms = 0;
};

// {"spec":...,"order":...,"psi":int-or-null,"verdict":...,"method":...,
//  "witness":{"order":...,"psi":...} or null,"elapsed_ms":...}
// Key order is fixed; the hint never appears in JSON.
std::string record_to_json(const VerdictRecord& rec);

// spec,order,expected,verdict,method,elapsed_ms
std::string csv_header();
std::string record_to_csv(const VerdictRecord& rec, const std::string& expected);

// Append-only JSON-lines verdict cache, keyed by canonical spec.  A stored
// entry satisfies a lookup when its method flag matches exactly and its
// budget is at least the requested one.  Any malformed line makes the whole
// file unusable for reads (a warning is printed once); stores still append,
// so a corrupt cache is never silently repaired.
class VerdictCache {
  public:
    explicit VerdictCache(std::string path);

    std::optional<VerdictRecord> lookup(const std::string& spec,
                                        const std::string& method_flag,
                                        std::uint64_t budget) const;

    void store(const std::string& method_flag, std::uint64_t budget,
               const VerdictRecord& rec);

    bool usable() const { return usable_; }

  private:
    struct Entry {
        std::string method_flag;
        std::uint64_t budget = 0;
        VerdictRecord rec;
    };

    std::string path_;
    std::vector<Entry> entries_;
    bool usable_ = true;
};

} // namespace psiforge
