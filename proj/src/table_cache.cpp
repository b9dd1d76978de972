#include <bit>
#include <cstdlib>
#include <cstring>
#include <fstream>

#include "piltz/error.hpp"
#include "piltz/table_cache.hpp"

namespace piltz {

namespace {

constexpr char kMagic[8] = {'P', 'I', 'L', 'T', 'Z', 'T', 'A', 'B'};
constexpr std::uint32_t kVersion = 1;

template <class T>
void put(std::ostream& out, T value) {
    unsigned char bytes[sizeof(T)];
    for (std::size_t i = 0; i < sizeof(T); ++i) bytes[i] = static_cast<unsigned char>(static_cast<std::uint64_t>(value) >> (8 * i));
    out.write(reinterpret_cast<const char*>(bytes), sizeof(T));
}

template <class T>
T get(std::istream& in, const std::filesystem::path& path) {
    unsigned char bytes[sizeof(T)];
    in.read(reinterpret_cast<char*>(bytes), sizeof(T));
    require(static_cast<bool>(in), ErrorCode::Io, "truncated table file " + path.string());
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
    return static_cast<T>(v);
}

}  // namespace

std::uint64_t label_hash(const std::string& label) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : label) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

void save_table(const std::filesystem::path& path, const CoefficientTable& table) {
    std::ofstream out(path, std::ios::binary);
    require(static_cast<bool>(out), ErrorCode::Io, "cannot write " + path.string());
    out.write(kMagic, sizeof kMagic);
    put<std::uint32_t>(out, kVersion);
    put<std::uint64_t>(out, label_hash(table.label()));
    put<std::uint32_t>(out, static_cast<std::uint32_t>(table.kind()));
    put<std::uint32_t>(out, static_cast<std::uint32_t>(table.m()));
    put<std::uint64_t>(out, static_cast<std::uint64_t>(table.length()));
    if constexpr (std::endian::native == std::endian::little) {
        const auto v = table.values();
        out.write(reinterpret_cast<const char*>(v.data()), static_cast<std::streamsize>(v.size_bytes()));
    } else {
        for (auto v : table.values()) put<std::uint64_t>(out, static_cast<std::uint64_t>(v));
    }
    require(static_cast<bool>(out), ErrorCode::Io, "write failed for " + path.string());
}

CoefficientTable load_table(const std::filesystem::path& path, const std::string& label, TableKind kind, int m,
                            std::int64_t X) {
    std::ifstream in(path, std::ios::binary);
    require(static_cast<bool>(in), ErrorCode::Io, "cannot open " + path.string());
    char magic[8];
    in.read(magic, sizeof magic);
    require(in && std::memcmp(magic, kMagic, sizeof magic) == 0, ErrorCode::CacheMismatch, path.string() + " is not a table file");
    require(get<std::uint32_t>(in, path) == kVersion, ErrorCode::CacheMismatch, "unsupported table version");
    require(get<std::uint64_t>(in, path) == label_hash(label), ErrorCode::CacheMismatch, "field label differs");
    require(get<std::uint32_t>(in, path) == static_cast<std::uint32_t>(kind), ErrorCode::CacheMismatch, "table kind differs");
    require(get<std::uint32_t>(in, path) == static_cast<std::uint32_t>(m), ErrorCode::CacheMismatch, "m differs");
    require(get<std::uint64_t>(in, path) == static_cast<std::uint64_t>(X), ErrorCode::CacheMismatch, "length differs");
    std::vector<std::int64_t> values(static_cast<std::size_t>(X) + 1, 0);
    if constexpr (std::endian::native == std::endian::little) {
        in.read(reinterpret_cast<char*>(values.data() + 1), static_cast<std::streamsize>(X * 8));
        require(static_cast<bool>(in), ErrorCode::Io, "truncated table file " + path.string());
    } else {
        for (std::int64_t l = 1; l <= X; ++l) values[static_cast<std::size_t>(l)] = static_cast<std::int64_t>(get<std::uint64_t>(in, path));
    }
    return CoefficientTable(label, kind, m, std::move(values));
}

std::optional<std::filesystem::path> cache_dir() {
    const char* dir = std::getenv("PILTZ_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return std::nullopt;
    return std::filesystem::path(dir);
}

std::filesystem::path cache_path(const std::filesystem::path& dir, const std::string& label, TableKind kind, int m,
                                 std::int64_t X) {
    char name[96];
    std::snprintf(name, sizeof name, "%016llx_%s_m%d_%lld.tab", static_cast<unsigned long long>(label_hash(label)),
                  to_string(kind).c_str(), m, static_cast<long long>(X));
    return dir / name;
}

}  // namespace piltz
