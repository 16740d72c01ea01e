#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "snchar/evaluator.hpp"

namespace snchar {

inline constexpr std::string_view cache_magic = "snchar-cache";
inline constexpr int cache_version = 1;

struct CacheLoadResult {
    bool version_ok = false;
    std::size_t loaded = 0;
    std::size_t skipped = 0;
};

/// Merge records from a cache stream into the evaluator's memo. The whole
/// file is ignored unless the version line matches; malformed records are
/// skipped with a note on `diag`. Line format after the header:
///   <partition> <cycle type> <decimal value>
inline CacheLoadResult load_memo_cache(std::istream& in, Evaluator& ev, std::ostream& diag) {
    CacheLoadResult res;
    std::string header;
    if (!std::getline(in, header)) {
        diag << "cache: empty file, ignoring\n";
        return res;
    }
    std::istringstream hs(header);
    std::string magic;
    int version = -1;
    hs >> magic >> version;
    if (magic != cache_magic || version != cache_version) {
        diag << "cache: unrecognized header \"" << header << "\", ignoring file\n";
        return res;
    }
    res.version_ok = true;

    std::string line;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string lam_text, mu_text, value_text, extra;
        if (!(ls >> lam_text >> mu_text >> value_text) || (ls >> extra)) {
            ++res.skipped;
            diag << "cache: skipping malformed line " << lineno << "\n";
            continue;
        }
        try {
            Partition lam = Partition::parse(lam_text);
            CycleType mu = CycleType::parse(mu_text);
            ev.preload(lam, mu, CharValue(value_text));
            ++res.loaded;
        } catch (const std::exception&) {
            ++res.skipped;
            diag << "cache: skipping malformed line " << lineno << "\n";
        }
    }
    return res;
}

inline void save_memo_cache(std::ostream& out, const Evaluator& ev) {
    out << cache_magic << ' ' << cache_version << '\n';
    for (const auto& e : ev.memo_entries())
        out << e.lambda.to_string() << ' ' << e.mu.to_string() << ' ' << e.value.str()
            << '\n';
}

}  // namespace snchar
