#include "piltz/coeff_table.hpp"

namespace piltz {

std::string to_string(TableKind kind) {
    switch (kind) {
        case TableKind::piltz: return "piltz";
        case TableKind::mobius_norm: return "mobius_norm";
        case TableKind::f_kernel: return "f_kernel";
        case TableKind::generic: return "generic";
    }
    return "unknown";
}

CoefficientTable::CoefficientTable(std::string label, TableKind kind, int m, std::vector<std::int64_t> values)
    : label_(std::move(label)), kind_(kind), m_(m), values_(std::move(values)) {
    if (values_.empty()) values_.push_back(0);
    values_[0] = 0;
}

CoefficientTable CoefficientTable::relabel(TableKind kind, int m) const {
    CoefficientTable copy = *this;
    copy.kind_ = kind;
    copy.m_ = m;
    return copy;
}

}  // namespace piltz
