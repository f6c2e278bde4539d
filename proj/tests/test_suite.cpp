#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "optbench/rng.hpp"
#include "optbench/suite/instance.hpp"

using namespace optbench;
using suite::make_instance;

namespace {

const std::vector<int> kGridFunctions = {1, 2, 3, 5, 6, 8, 10, 11, 12, 14, 17, 20};
const std::vector<int> kGridDims = {2, 5};
const std::vector<int> kGridInstances = {0, 1, 2};

} // namespace

TEST(Suite, ImplementedCatalogSpansAllGroups) {
    ASSERT_GE(suite::kImplementedFunctions.size(), 12u);
    std::set<suite::FunctionGroup> groups;
    for (const auto& info : suite::kImplementedFunctions) {
        groups.insert(info.group);
    }
    EXPECT_EQ(groups.size(), 5u);
}

TEST(Suite, UnknownFunctionRejected) {
    EXPECT_THROW(make_instance(99, 0, 2), UnknownFunction);
    EXPECT_THROW(make_instance(4, 0, 2), UnknownFunction);
    EXPECT_THROW(make_instance(0, 0, 2), UnknownFunction);
}

TEST(Suite, InvalidDimensionRejected) {
    EXPECT_THROW(make_instance(1, 0, 0), InvalidDimension);
    EXPECT_THROW(make_instance(1, 0, -3), InvalidDimension);
}

TEST(Suite, DimensionMismatchRejected) {
    const auto inst = make_instance(1, 0, 2);
    const std::vector<double> wrong = {1.0, 2.0, 3.0};
    EXPECT_THROW(inst.evaluate(wrong), DimensionMismatch);
}

TEST(Suite, SameKeyGivesSameInstance) {
    const auto a = make_instance(1, 0, 2);
    const auto b = make_instance(1, 0, 2);
    EXPECT_EQ(a.f_opt(), b.f_opt());
    EXPECT_EQ(a.x_opt(), b.x_opt());
    EXPECT_EQ(a.metadata().dump(), b.metadata().dump());
}

TEST(Suite, DistinctKeysGiveDistinctOptima) {
    const auto a = make_instance(1, 0, 2);
    const auto b = make_instance(1, 1, 2);
    EXPECT_NE(a.x_opt(), b.x_opt());
}

TEST(Suite, SphereShiftByThreeFour) {
    const auto inst = make_instance(1, 0, 2);
    std::vector<double> x = inst.x_opt();
    x[0] += 3.0;
    x[1] += 4.0;
    EXPECT_NEAR(inst.evaluate(x), inst.f_opt() + 25.0, 1e-9);
}

TEST(Suite, OptimumEvaluatesToFoptAcrossGrid) {
    for (int f : kGridFunctions) {
        for (int d : kGridDims) {
            for (int i : kGridInstances) {
                const auto inst = make_instance(f, i, d);
                const double v = inst.evaluate(inst.x_opt());
                const double tol = 1e-12 * std::max(1.0, std::fabs(inst.f_opt()));
                EXPECT_NEAR(v, inst.f_opt(), tol)
                    << "f" << f << " i" << i << " d" << d;
            }
        }
    }
}

TEST(Suite, XoptInsideDomain) {
    for (int f : kGridFunctions) {
        for (int d : kGridDims) {
            const auto inst = make_instance(f, 0, d);
            for (double c : inst.x_opt()) {
                if (f == 5) {
                    // linear slope pins its optimum to a domain corner
                    EXPECT_EQ(std::fabs(c), 5.0);
                } else {
                    EXPECT_GE(c, -4.0);
                    EXPECT_LE(c, 4.0);
                }
            }
        }
    }
}

TEST(Suite, RandomSamplingNeverBeatsOptimum) {
    Xoshiro256pp rng(777);
    for (int f : kGridFunctions) {
        for (int d : kGridDims) {
            const auto inst = make_instance(f, 1, d);
            std::vector<double> x(static_cast<std::size_t>(d));
            for (int s = 0; s < 10000; ++s) {
                for (auto& c : x) c = rng.uniform(-5.0, 5.0);
                EXPECT_GE(inst.evaluate(x), inst.f_opt() - 1e-9)
                    << "f" << f << " d" << d;
            }
        }
    }
}

TEST(Suite, PrecisionOfClampsToZero) {
    const auto inst = make_instance(3, 0, 2);
    EXPECT_EQ(inst.precision_of(inst.f_opt()).value, 0.0);
    EXPECT_DOUBLE_EQ(inst.precision_of(inst.f_opt() + 12.5).value, 12.5);
    EXPECT_EQ(inst.precision_of(inst.f_opt() - 1e-15).value, 0.0);
}

TEST(Suite, SolvedThreshold) {
    EXPECT_TRUE(suite::Precision{1e-8}.solved());
    EXPECT_TRUE(suite::Precision{0.0}.solved());
    EXPECT_FALSE(suite::Precision{1.0001e-8}.solved());
}

TEST(Suite, FoptWithinRangeAndTwoDecimals) {
    for (int f : kGridFunctions) {
        const auto inst = make_instance(f, 2, 5);
        EXPECT_GE(inst.f_opt(), -100.0);
        EXPECT_LE(inst.f_opt(), 100.0);
        const double scaled = inst.f_opt() * 100.0;
        EXPECT_NEAR(scaled, std::round(scaled), 1e-9);
    }
}

TEST(Suite, RotatedFunctionsDifferFromUnrotatedShift) {
    // rotated ellipsoid (F10) must not behave like the separable one (F2)
    const auto rot = make_instance(10, 0, 5);
    const auto sep = make_instance(2, 0, 5);
    EXPECT_TRUE(suite::function_info(10).rotated);
    EXPECT_FALSE(suite::function_info(2).rotated);
    std::vector<double> x = rot.x_opt();
    x[0] += 1.0;
    x[1] -= 0.5;
    const double away_rot = rot.evaluate(x) - rot.f_opt();
    std::vector<double> y = sep.x_opt();
    y[0] += 1.0;
    y[1] -= 0.5;
    const double away_sep = sep.evaluate(y) - sep.f_opt();
    EXPECT_NE(away_rot, away_sep);
}

TEST(Suite, MetadataCarriesAuditFields) {
    const auto inst = make_instance(17, 1, 2);
    const auto meta = inst.metadata();
    EXPECT_EQ(meta.at("function_id").get<int>(), 17);
    EXPECT_EQ(meta.at("instance_id").get<int>(), 1);
    EXPECT_EQ(meta.at("dimension").get<int>(), 2);
    EXPECT_TRUE(meta.contains("f_opt"));
    EXPECT_EQ(meta.at("x_opt").size(), 2u);
}
