#include "golden.hpp"
#include "terracini.hpp"

#include <waring/bounds.hpp>

#include <gtest/gtest.h>

#include <string>

using namespace waring;

using golden::code;
using golden::expected;

const auto& kGolden = golden::kRows;

TEST(GoldenTable, CoversEveryShape) {
    EXPECT_EQ(std::size(kGolden), 42u);
    for (const auto& row : kGolden) {
        EXPECT_GE(row.n, 1u);
        EXPECT_LE(row.n, 6u);
        EXPECT_GE(row.d, 2u);
        EXPECT_LE(row.d, 8u);
        EXPECT_EQ(std::string(row.classes).size(), row.generic + 1);
    }
}

TEST(GoldenTable, GenericRank) {
    for (const auto& row : kGolden) EXPECT_EQ(generic_rank(row.n, row.d), row.generic) << row.n << " " << row.d;
}

TEST(GoldenTable, UniquenessClass) {
    for (const auto& row : kGolden) {
        std::string got;
        for (std::size_t r = 1; r <= row.generic + 1; ++r) got += code(uniqueness_class(row.n, row.d, r));
        EXPECT_EQ(got, row.classes) << row.n << " " << row.d;
    }
}

TEST(GoldenTable, Applicability) {
    for (const auto& row : kGolden) {
        for (std::size_t r = 1; r <= 2 * row.generic + 2; ++r) {
            EXPECT_EQ(applicability(row.n, row.d, r, Method::catalecticant),
                      expected(r, row.cat_guaranteed, row.cat_borderline))
                << row.n << " " << row.d << " " << r;
            EXPECT_EQ(applicability(row.n, row.d, r, Method::koszul_a1),
                      expected(r, row.k1_guaranteed, row.k1_borderline))
                << row.n << " " << row.d << " " << r;
            EXPECT_EQ(applicability(row.n, row.d, r, Method::koszul_general),
                      expected(r, row.kg_guaranteed, row.kg_borderline))
                << row.n << " " << row.d << " " << r;
        }
    }
}

// Generic ranks and defective ranks agree with tangent-space dimensions.
TEST(Terracini, GenericRankAndDefectivity) {
    for (std::size_t n = 1; n <= 6; ++n)
        for (std::size_t d = 2; d <= 8; ++d) {
            const std::size_t width = monomial_count(n, d);
            if (width > 1000) continue;
            auto dims = terracini::secant_dimensions(n, d, 17 * n + d);
            EXPECT_EQ(dims.size() - 1, generic_rank(n, d)) << n << " " << d;
            for (std::size_t k = 1; k < dims.size(); ++k)
                EXPECT_EQ(dims[k] < std::min(k * (n + 1), width), is_defective(n, d, k)) << n << " " << d << " " << k;
        }
}

TEST(StatedValues, GenericRanks) {
    EXPECT_EQ(generic_rank(2, 5), 7u);
    EXPECT_EQ(generic_rank(3, 3), 5u);
    EXPECT_EQ(generic_rank(4, 3), 8u);
    EXPECT_EQ(generic_rank(2, 4), 6u);
    EXPECT_EQ(generic_rank(3, 4), 10u);
    EXPECT_EQ(generic_rank(4, 4), 15u);
    for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(generic_rank(n, 2), n + 1);
}

TEST(StatedValues, Uniqueness) {
    EXPECT_EQ(uniqueness_class(2, 5, 7), UniquenessClass::unique);
    EXPECT_EQ(uniqueness_class(3, 3, 5), UniquenessClass::unique);
    for (std::size_t d = 3; d <= 9; d += 2) EXPECT_EQ(uniqueness_class(1, d, (d + 1) / 2), UniquenessClass::unique);
    EXPECT_EQ(uniqueness_class(2, 6, 9), UniquenessClass::weakly_defective_two);
    EXPECT_EQ(uniqueness_class(3, 4, 8), UniquenessClass::weakly_defective_two);
    EXPECT_EQ(uniqueness_class(4, 3, 7), UniquenessClass::defective_infinitely_many);
    EXPECT_EQ(uniqueness_class(2, 4, 5), UniquenessClass::defective_infinitely_many);
    EXPECT_EQ(uniqueness_class(3, 2, 2), UniquenessClass::defective_infinitely_many);
    EXPECT_EQ(uniqueness_class(2, 5, 8), UniquenessClass::rank_exceeds_generic);
    // 28 sextic monomials in 3 variables, not divisible by 3
    EXPECT_EQ(uniqueness_class(2, 6, 10), UniquenessClass::infinitely_many_generic);
}

TEST(StatedValues, MethodRanges) {
    // ranges tested with the catalecticant
    EXPECT_EQ(applicability(2, 4, 3, Method::catalecticant), Applicability::guaranteed);
    EXPECT_EQ(applicability(2, 4, 4, Method::catalecticant), Applicability::borderline_retry);
    EXPECT_EQ(applicability(2, 6, 7, Method::catalecticant), Applicability::guaranteed);
    EXPECT_EQ(applicability(2, 6, 8, Method::catalecticant), Applicability::borderline_retry);
    EXPECT_EQ(applicability(3, 6, 16, Method::catalecticant), Applicability::guaranteed);
    EXPECT_EQ(applicability(4, 4, 10, Method::catalecticant), Applicability::guaranteed);
    // Koszul
    EXPECT_EQ(applicability(2, 5, 7, Method::koszul_a1), Applicability::guaranteed);
    EXPECT_EQ(applicability(2, 5, 8, Method::koszul_a1), Applicability::not_guaranteed);
    EXPECT_EQ(applicability(3, 3, 5, Method::koszul_general), Applicability::guaranteed);
    EXPECT_EQ(applicability(3, 5, 11, Method::koszul_general), Applicability::guaranteed);
    EXPECT_EQ(applicability(4, 3, 6, Method::koszul_general), Applicability::not_guaranteed);
    EXPECT_EQ(koszul_general_threshold(3, 5), 11u);
    EXPECT_EQ(applicability(3, 6, 17, Method::catalecticant), Applicability::borderline_retry);
    EXPECT_EQ(applicability(3, 3, 6, Method::koszul_general), Applicability::not_guaranteed);
    EXPECT_EQ(koszul_general_threshold(3, 3), 5u);
    EXPECT_EQ(koszul_general_threshold(4, 3), 5u);
}

TEST(EigenvectorCount, StatedAndClosedForms) {
    EXPECT_EQ(eigenvector_count(2, 2, 1).value, 7u);
    EXPECT_EQ(eigenvector_count(3, 1, 2).value, 5u);
    EXPECT_EQ(eigenvector_count(2, 1, 1).value, 3u);
    EXPECT_EQ(eigenvector_count(2, 3, 1).value, 13u);
    EXPECT_EQ(eigenvector_count(3, 2, 2).value, 20u);
    EXPECT_FALSE(eigenvector_count(3, 2, 3).finite());
    EXPECT_EQ(eigenvector_count(1, 4, 1).value, 5u);
}

// The a = 1 count is the number of fixed directions: sum of m^i. The a = n-1
// count divides exactly. Both are checked over a grid of 60 (n, m).
TEST(EigenvectorCount, Integrality) {
    int checked = 0;
    for (std::size_t n = 1; n <= 6; ++n)
        for (std::size_t m = 1; m <= 10; ++m) {
            std::size_t geometric = 0, p = 1;
            for (std::size_t i = 0; i <= n; ++i, p *= m) geometric += p;
            EXPECT_EQ(eigenvector_count(n, m, 1).value, geometric);
            if (n >= 2) {
                std::size_t top = 1;
                for (std::size_t i = 0; i <= n; ++i) top *= m + 1;
                const std::size_t num = n % 2 == 0 ? top + 1 : top - 1;
                EXPECT_EQ(num % (m + 2), 0u) << n << " " << m;
                EXPECT_EQ(eigenvector_count(n, m, n - 1).value * (m + 2), num) << n << " " << m;
            }
            ++checked;
        }
    EXPECT_GE(checked, 50);
}

TEST(BoundsProperty, ApplicabilityIsMonotone) {
    int checked = 0;
    for (const auto& row : kGolden) {
        for (Method meth : {Method::catalecticant, Method::koszul_a1, Method::koszul_general}) {
            int last = 0;
            for (std::size_t r = 1; r <= 2 * row.generic; ++r) {
                const int level = int(applicability(row.n, row.d, r, meth));
                EXPECT_GE(level, last);
                last = level;
            }
        }
        ++checked;
    }
    EXPECT_GE(checked, 42);
}

TEST(BoundsProperty, GuaranteedRanksStayBelowGeneric) {
    for (const auto& row : kGolden)
        for (Method meth : {Method::catalecticant, Method::koszul_a1, Method::koszul_general})
            for (std::size_t r = 1; r <= 2 * row.generic; ++r)
                if (applicability(row.n, row.d, r, meth) == Applicability::guaranteed) EXPECT_LE(r, row.generic);
}

TEST(BoundsProperty, ExpectedKernelDimension) {
    // quintic: 18 - 2 * 7 = 4; pentahedral: 24 - 3 * 5 = 9
    EXPECT_EQ(expected_kernel_dim(2, 5, 2, 1, 7), 4u);
    EXPECT_EQ(expected_kernel_dim(3, 3, 1, 2, 5), 9u);
    EXPECT_FALSE(expected_kernel_dim(4, 3, 1, 2, 5).has_value());
}
