#pragma once

#include <filesystem>
#include <optional>

#include "piltz/coeff_table.hpp"

namespace piltz {

/// Binary table file: magic "PILTZTAB", u32 version, u64 FNV-1a hash of the
/// field label, u32 kind, u32 m, u64 X, then X little-endian int64 values.
void save_table(const std::filesystem::path& path, const CoefficientTable& table);

/// Throws CacheMismatch when the header disagrees with the expected
/// (label, kind, m, X), Io when the file is unreadable or truncated.
CoefficientTable load_table(const std::filesystem::path& path, const std::string& label, TableKind kind, int m,
                            std::int64_t X);

std::uint64_t label_hash(const std::string& label);

/// Directory named by PILTZ_CACHE_DIR, if set and non-empty.
std::optional<std::filesystem::path> cache_dir();

std::filesystem::path cache_path(const std::filesystem::path& dir, const std::string& label, TableKind kind, int m,
                                 std::int64_t X);

/// Loads the table from the cache directory when present, otherwise builds
/// it and stores it there. Without a cache directory this just builds.
template <class Build>
CoefficientTable cached_table(const std::string& label, TableKind kind, int m, std::int64_t X, Build&& build) {
    const auto dir = cache_dir();
    if (!dir) return build();
    const auto path = cache_path(*dir, label, kind, m, X);
    if (std::filesystem::exists(path)) return load_table(path, label, kind, m, X);
    CoefficientTable table = build();
    std::filesystem::create_directories(*dir);
    save_table(path, table);
    return table;
}

}  // namespace piltz
