#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "skewpp/counting.hpp"

namespace skewpp {

// One file per (n, k, side) under the configured directory, wrapping the
// serialized table with the engine version and a checksum.  Anything that
// fails to load, validate or match the running version is treated as a miss
// and recomputed.
class TableCache {
public:
    explicit TableCache(std::string directory);

    const std::string& directory() const noexcept { return directory_; }

    std::optional<CountTable> lookup(int n, int k, Side side) const;

    // Best effort: an unwritable directory warns on `err` and the result is
    // simply not cached.
    void store(const CountTable& table, std::ostream& err) const;

private:
    std::string path_for(int n, int k, Side side) const;

    std::string directory_;
};

} // namespace skewpp
