#include "skewpp/cache.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <utility>

#include "skewpp/serialize.hpp"
#include "skewpp/version.hpp"

namespace skewpp {

namespace {

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t hash = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex << std::nouppercase;
    out.width(16);
    out.fill('0');
    out << hash;
    return out.str();
}

} // namespace

TableCache::TableCache(std::string directory) : directory_(std::move(directory)) {}

std::string TableCache::path_for(int n, int k, Side side) const {
    const std::filesystem::path file = std::filesystem::path(directory_) /
        ("table_n" + std::to_string(n) + "_k" + std::to_string(k) + "_" +
         std::string(to_string(side)) + ".json");
    return file.string();
}

std::optional<CountTable> TableCache::lookup(int n, int k, Side side) const {
    std::ifstream in(path_for(n, k, side));
    if (!in) return std::nullopt;
    const nlohmann::ordered_json doc = nlohmann::ordered_json::parse(in, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) return std::nullopt;
    if (!doc.contains("version") || !doc.at("version").is_string() ||
        doc.at("version").get_ref<const std::string&>() != kEngineVersion)
        return std::nullopt;
    if (!doc.contains("checksum") || !doc.at("checksum").is_string() ||
        !doc.contains("payload"))
        return std::nullopt;
    if (doc.at("checksum").get_ref<const std::string&>() != fnv1a_hex(doc.at("payload").dump()))
        return std::nullopt;
    try {
        CountTable table = table_from_json(doc.at("payload"));
        if (table.n != n || table.k != k || table.side != side) return std::nullopt;
        return table;
    } catch (...) {
        return std::nullopt;
    }
}

void TableCache::store(const CountTable& table, std::ostream& err) const {
    std::error_code ec;
    std::filesystem::create_directories(directory_, ec); // best effort
    nlohmann::ordered_json doc;
    doc["version"] = std::string(kEngineVersion);
    nlohmann::ordered_json payload = to_json(table);
    doc["checksum"] = fnv1a_hex(payload.dump());
    doc["payload"] = std::move(payload);
    const std::string path = path_for(table.n, table.k, table.side);
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        err << "warning: cache directory '" << directory_
            << "' is not writable; continuing uncached\n";
        return;
    }
    out << doc.dump(2) << "\n";
    out.flush();
    if (!out)
        err << "warning: failed to write cache file '" << path << "'\n";
}

} // namespace skewpp
