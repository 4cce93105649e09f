#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grasswt/json_io.hpp"

namespace grasswt {

struct CacheEntry {
    std::string file; // basename inside the cache directory
    std::string key;  // canonical key the entry was stored under
    uint64_t bytes = 0;
};

// Content-addressed result store: each entry is a JSON file named by the
// 64-bit FNV-1a hash of its canonical key, holding {key, payload}. The key
// is rechecked on load, so hash collisions read as misses.
class ResultCache {
  public:
    explicit ResultCache(std::string dir) : dir_(std::move(dir)) {}
    const std::string& dir() const { return dir_; }

    std::optional<ordered_json> load(const std::string& key) const;
    // writes to a temporary file first; the rename makes interrupted runs
    // leave no partial entries behind
    void store(const std::string& key, const ordered_json& payload) const;

    std::vector<CacheEntry> list() const; // sorted by file name
    uint64_t purge() const;               // removes entries, returns the count

  private:
    std::string path_for(const std::string& key) const;
    std::string dir_;
};

// canonical key of one search cell: kind, code parameters, the requested
// dimension, the side, and every enumeration setting that shapes the result
std::string search_cache_key(const std::string& kind, int l, int m, int q, int r,
                             SearchSide side, const SearchLimits& lim);

// cache-aware search fronts; a null cache degrades to the plain calls
WeightWitness cached_higher_weight(const ResultCache* cache, const GrassmannCode& C, int r,
                                   const SearchLimits& lim, SearchSide side = SearchSide::Auto);
MarkedWitness cached_delta_r(const ResultCache* cache, const GrassmannCode& C, int r,
                             const SearchLimits& lim);

} // namespace grasswt
