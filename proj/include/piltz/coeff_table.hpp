#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace piltz {

enum class TableKind : std::uint32_t { piltz = 1, mobius_norm = 2, f_kernel = 3, generic = 4 };

std::string to_string(TableKind kind);

/// Finite prefix a(1..X) of a Dirichlet-series coefficient sequence.
/// Storage keeps an unused slot at index 0 so that value(l) is values_[l].
class CoefficientTable {
public:
    CoefficientTable() = default;
    /// values[0] is ignored (forced to 0); the table length is values.size() - 1.
    CoefficientTable(std::string label, TableKind kind, int m, std::vector<std::int64_t> values);

    const std::string& label() const { return label_; }
    TableKind kind() const { return kind_; }
    int m() const { return m_; }
    std::int64_t length() const { return static_cast<std::int64_t>(values_.size()) - 1; }

    std::int64_t operator[](std::int64_t l) const { return values_[static_cast<std::size_t>(l)]; }
    /// a(1), ..., a(X)
    std::span<const std::int64_t> values() const { return std::span(values_).subspan(1); }
    /// Slot 0 included; useful for index-aligned kernels.
    std::span<const std::int64_t> raw() const { return values_; }

    CoefficientTable relabel(TableKind kind, int m) const;

    friend bool operator==(const CoefficientTable&, const CoefficientTable&) = default;

private:
    std::string label_;
    TableKind kind_ = TableKind::generic;
    int m_ = 1;
    std::vector<std::int64_t> values_{0};
};

}  // namespace piltz
