#pragma once

// Frozen formula table for n <= 6, d <= 8, see golden_bounds.inc.

#include <waring/bounds.hpp>

#include <cstddef>

namespace golden {

struct Row {
    std::size_t n, d, generic;
    const char* classes;
    std::size_t cat_guaranteed, cat_borderline;
    std::size_t k1_guaranteed, k1_borderline;
    std::size_t kg_guaranteed, kg_borderline;
};

inline const Row kRows[] = {
#include "golden_bounds.inc"
};

inline char code(waring::UniquenessClass u) {
    using waring::UniquenessClass;
    switch (u) {
        case UniquenessClass::unique: return 'u';
        case UniquenessClass::defective_infinitely_many: return 'D';
        case UniquenessClass::weakly_defective_two: return 'W';
        case UniquenessClass::finitely_many_generic: return 'F';
        case UniquenessClass::infinitely_many_generic: return 'I';
        case UniquenessClass::rank_exceeds_generic: return 'X';
    }
    return '?';
}

inline waring::Applicability expected(std::size_t r, std::size_t guaranteed, std::size_t borderline) {
    if (r <= guaranteed) return waring::Applicability::guaranteed;
    if (r <= borderline) return waring::Applicability::borderline_retry;
    return waring::Applicability::not_guaranteed;
}

}  // namespace golden
