#include "grasswt/cache.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace fs = std::filesystem;

namespace grasswt {

namespace {

std::string fnv1a64_hex(const std::string& s) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

const char* side_name(SearchSide s) {
    switch (s) {
        case SearchSide::Auto: return "auto";
        case SearchSide::Primal: return "primal";
        case SearchSide::Section: return "section";
    }
    return "?";
}

FMatrix matrix_from_json(const Field& F, const ordered_json& j, int cols) {
    FMatrix M(F, int(j.size()), cols);
    for (int i = 0; i < M.rows; ++i) {
        if (int(j[i].size()) != cols) fail(Errc::BadFormat, "cached row of wrong length");
        for (int t = 0; t < cols; ++t)
            M.set(i, t, F.from_coeffs(j[i][t].get<std::vector<int>>()));
    }
    return M;
}

} // namespace

std::string ResultCache::path_for(const std::string& key) const {
    return (fs::path(dir_) / (fnv1a64_hex(key) + ".json")).string();
}

std::optional<ordered_json> ResultCache::load(const std::string& key) const {
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    ordered_json entry = ordered_json::parse(in, nullptr, false);
    if (entry.is_discarded() || !entry.is_object() || entry.value("key", "") != key)
        return std::nullopt;
    return entry["payload"];
}

void ResultCache::store(const std::string& key, const ordered_json& payload) const {
    fs::create_directories(dir_);
    ordered_json entry{{"key", key}, {"payload", payload}};
    std::string final_path = path_for(key);
    std::string tmp_path = final_path + ".tmp";
    {
        std::ofstream out(tmp_path);
        if (!out) fail(Errc::BadFormat, "cannot write cache entry '" + tmp_path + "'");
        out << entry.dump(2) << '\n';
    }
    fs::rename(tmp_path, final_path);
}

std::vector<CacheEntry> ResultCache::list() const {
    std::vector<CacheEntry> out;
    std::error_code ec;
    for (const auto& de : fs::directory_iterator(dir_, ec)) {
        if (!de.is_regular_file() || de.path().extension() != ".json") continue;
        std::ifstream in(de.path());
        ordered_json entry = ordered_json::parse(in, nullptr, false);
        if (entry.is_discarded() || !entry.is_object() || !entry.contains("key")) continue;
        out.push_back(CacheEntry{de.path().filename().string(), entry["key"].get<std::string>(),
                                 uint64_t(de.file_size())});
    }
    std::sort(out.begin(), out.end(),
              [](const CacheEntry& a, const CacheEntry& b) { return a.file < b.file; });
    return out;
}

uint64_t ResultCache::purge() const {
    uint64_t n = 0;
    for (const CacheEntry& e : list()) n += fs::remove(fs::path(dir_) / e.file);
    return n;
}

std::string search_cache_key(const std::string& kind, int l, int m, int q, int r,
                             SearchSide side, const SearchLimits& lim) {
    std::ostringstream os;
    os << kind << " l=" << l << " m=" << m << " q=" << q << " r=" << r
       << " side=" << side_name(side) << " sb=" << lim.subspace_budget
       << " cb=" << lim.codeword_budget << " v1";
    return os.str();
}

WeightWitness cached_higher_weight(const ResultCache* cache, const GrassmannCode& C, int r,
                                   const SearchLimits& lim, SearchSide side) {
    std::string key;
    if (cache) {
        key = search_cache_key("higher-weight", C.l(), C.m(), C.q(), r, side, lim);
        if (std::optional<ordered_json> p = cache->load(key)) {
            WeightWitness w;
            w.r = r;
            w.norm = (*p)["norm"].get<int>();
            w.visited = (*p)["visited"].get<uint64_t>();
            w.messages = matrix_from_json(C.field(), (*p)["messages"], C.k());
            return w;
        }
    }
    WeightWitness w = higher_weight(C.code, r, lim, side);
    if (cache)
        cache->store(key, ordered_json{{"norm", w.norm},
                                       {"visited", w.visited},
                                       {"messages", matrix_json(w.messages)}});
    return w;
}

MarkedWitness cached_delta_r(const ResultCache* cache, const GrassmannCode& C, int r,
                             const SearchLimits& lim) {
    std::string key;
    if (cache) {
        key = search_cache_key("delta-r", C.l(), C.m(), C.q(), r, SearchSide::Primal, lim);
        if (std::optional<ordered_json> p = cache->load(key)) {
            MarkedWitness w;
            w.count = (*p)["count"].get<uint64_t>();
            w.visited = (*p)["visited"].get<uint64_t>();
            w.messages = matrix_from_json(C.field(), (*p)["messages"], C.k());
            return w;
        }
    }
    MarkedWitness w = delta_r(C, r, lim);
    if (cache)
        cache->store(key, ordered_json{{"count", w.count},
                                       {"visited", w.visited},
                                       {"messages", matrix_json(w.messages)}});
    return w;
}

} // namespace grasswt
