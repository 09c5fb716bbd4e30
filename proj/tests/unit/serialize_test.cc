#include "steergp/serialize.h"

#include <cstring>
#include <limits>

#include "gtest/gtest.h"
#include "test_util.h"

namespace steergp {
namespace {

bool BitEqual(std::span<const Complex> a, std::span<const Complex> b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size_bytes()) == 0;
}

TEST(Serialize, ModeFieldRoundTripIsBitExact) {
  for (std::uint32_t seed = 0; seed < 10; ++seed) {
    ModeField f = testing::RandomField(testing::RandomGrid(1 + seed % 4, seed),
                                       static_cast<int>(seed) - 5, 1 + seed % 3,
                                       {-static_cast<int>(seed % 3), static_cast<int>(seed % 5)},
                                       seed);
    // Awkward doubles survive too.
    f.data()[0] = Complex(std::numeric_limits<double>::denorm_min(), -0.0);
    f.data().back() = Complex(1.0 / 3.0, std::numeric_limits<double>::max());
    const ModeField back = mode_field_from_json(mode_field_to_json(f));
    EXPECT_EQ(back.rep_index(), f.rep_index());
    EXPECT_EQ(back.window(), f.window());
    EXPECT_EQ(back.grid(), f.grid());
    EXPECT_TRUE(BitEqual(back.data(), f.data())) << "seed " << seed;
    EXPECT_EQ(mode_field_to_json(back), mode_field_to_json(f));
  }
}

TEST(Serialize, KernelRoundTripKeepsProvenance) {
  KernelMatrix k(RadialGrid({0.5, 1.25}), {-1, 0});
  std::mt19937 rng(3);
  std::normal_distribution<double> normal;
  for (Complex& v : k.entries()) {
    const double re = normal(rng);
    v = Complex(re, normal(rng));
  }
  for (double& s : k.std_errs()) s = std::abs(normal(rng));
  k.set_provenance({2000, 18446744073709551615ULL, "0123456789abcdef"});
  const KernelMatrix back = kernel_from_json(kernel_to_json(k));
  EXPECT_EQ(back, k);
  EXPECT_TRUE(BitEqual(back.entries(), k.entries()));
}

TEST(Serialize, RejectsWrongRecordOrShape) {
  EXPECT_ANY_THROW(mode_field_from_json(R"({"type":"kernel_matrix"})"));
  const ModeField f(0, RadialGrid({1.0}), 1, {0, 1});
  std::string text = mode_field_to_json(f);
  text.replace(text.find("\"mode_hi\":1"), 11, "\"mode_hi\":2");
  EXPECT_ANY_THROW(mode_field_from_json(text));
}

}  // namespace
}  // namespace steergp
