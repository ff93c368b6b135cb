#include "ttc/errors.hpp"
#include "ttc/generators.hpp"
#include "ttc/io.hpp"
#include "ttc/rng.hpp"

#include <gtest/gtest.h>

#include <cstring>
#include <filesystem>

using namespace ttc;

namespace {

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("ttc_io_" + name);
}

std::size_t expect_format_error(const std::vector<std::uint8_t>& bytes, bool mask,
                                const std::string& needle) {
    try {
        if (mask)
            io::decode_mask(bytes);
        else
            io::decode_tensor(bytes);
    } catch (const FormatError& e) {
        EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
        return e.offset();
    }
    ADD_FAILURE() << "expected FormatError containing '" << needle << "'";
    return 0;
}

void put_u64(std::vector<std::uint8_t>& b, std::size_t at, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) b[at + i] = static_cast<std::uint8_t>(v >> (8 * i));
}

}  // namespace

TEST(TensorFile, ExactByteLayout) {
    Tensor3 t(1, 2, 1);
    t(0, 0, 0) = 1.5;
    t(0, 1, 0) = -2.0;
    t.set_real_hint(true);
    const auto b = io::encode_tensor(t);
    ASSERT_EQ(b.size(), 4u + 1 + 24 + 16);
    EXPECT_EQ(std::string(b.begin(), b.begin() + 4), "TNS1");
    EXPECT_EQ(b[4], io::kFlagRealHint);
    EXPECT_EQ(b[5], 1);
    EXPECT_EQ(b[13], 2);
    EXPECT_EQ(b[21], 1);
    double v;
    std::memcpy(&v, b.data() + 29, 8);
    EXPECT_EQ(v, 1.5);
    std::memcpy(&v, b.data() + 37, 8);
    EXPECT_EQ(v, -2.0);
}

TEST(TensorFile, ComplexRoundTripIsBitExact) {
    Rng rng(1);
    const Tensor3 t = random_tensor({3, 4, 5}, rng);
    const auto path = temp_path("complex.tns");
    io::write_tensor(path, t);
    EXPECT_EQ(std::filesystem::file_size(path), 29u + 60 * 16);
    const Tensor3 back = io::read_tensor(path);
    EXPECT_TRUE(back == t);
    EXPECT_FALSE(back.real_hint());
    std::filesystem::remove(path);

    const Tensor3 r = random_tensor({2, 2, 2}, rng, true);
    const Tensor3 rb = io::decode_tensor(io::encode_tensor(r));
    EXPECT_TRUE(rb == r);
    EXPECT_TRUE(rb.real_hint());
    EXPECT_EQ(io::encode_tensor(r)[4] & io::kFlagComplex, 0);
}

TEST(TensorFile, NegativeZeroImaginaryKeepsComplexFlag) {
    Tensor3 t(1, 1, 1);
    t(0, 0, 0) = Complex(1.0, -0.0);
    const Tensor3 back = io::decode_tensor(io::encode_tensor(t));
    EXPECT_TRUE(back == t);
}

TEST(TensorFile, CorruptionDiagnostics) {
    Rng rng(2);
    const auto good = io::encode_tensor(random_tensor({2, 3, 2}, rng));

    auto bad = good;
    bad[0] = 'X';
    EXPECT_EQ(expect_format_error(bad, false, "magic"), 0u);

    bad = good;
    bad[4] |= 0x80;
    EXPECT_EQ(expect_format_error(bad, false, "flag"), 4u);

    bad = good;
    bad.pop_back();
    expect_format_error(bad, false, "expected " + std::to_string(12 * 16));
    expect_format_error(bad, false, std::to_string(12 * 16 - 1) + " bytes");

    bad = good;
    bad.push_back(0);
    expect_format_error(bad, false, "payload");

    bad = good;
    put_u64(bad, 5, 0);
    EXPECT_EQ(expect_format_error(bad, false, "zero dimension"), 5u);

    bad = good;
    put_u64(bad, 5, std::uint64_t(1) << 62);
    put_u64(bad, 13, std::uint64_t(1) << 62);
    expect_format_error(bad, false, "overflow");

    expect_format_error({'T', 'N', 'S', '1', 0, 1}, false, "truncated");

    bad = good;
    const double nan = std::nan("");
    std::memcpy(bad.data() + 29, &nan, 8);
    expect_format_error(bad, false, "finite");
}

TEST(MaskFile, RoundTripAndLayout) {
    const SamplingMask m = bernoulli_mask({4, 3, 5}, 0.4, 7);
    const auto b = io::encode_mask(m);
    EXPECT_EQ(std::string(b.begin(), b.begin() + 4), "MSK1");
    EXPECT_EQ(b.size(), 36u + 24 * m.count());
    const auto path = temp_path("mask.msk");
    io::write_mask(path, m);
    EXPECT_TRUE(io::read_mask(path) == m);
    std::filesystem::remove(path);
}

TEST(MaskFile, RejectsDuplicatesDisorderAndRange) {
    const SamplingMask m({2, 2, 2}, {{0, 0, 1}, {1, 1, 0}});
    const auto good = io::encode_mask(m);

    auto dup = good;
    std::copy(good.begin() + 36, good.begin() + 60, dup.begin() + 60);
    EXPECT_EQ(expect_format_error(dup, true, "strictly increasing"), 60u);

    auto swapped = good;
    std::copy(good.begin() + 60, good.end(), swapped.begin() + 36);
    std::copy(good.begin() + 36, good.begin() + 60, swapped.begin() + 60);
    EXPECT_EQ(expect_format_error(swapped, true, "strictly increasing"), 60u);

    auto range = good;
    put_u64(range, 60 + 16, 2);
    EXPECT_EQ(expect_format_error(range, true, "out of range"), 60u);

    auto count = good;
    put_u64(count, 28, 9);
    EXPECT_EQ(expect_format_error(count, true, "count"), 28u);

    auto truncated = good;
    truncated.resize(good.size() - 3);
    expect_format_error(truncated, true, "expected 48");

    auto magic = good;
    magic[3] = '2';
    expect_format_error(magic, true, "magic");
}

TEST(MatrixFile, RoundTripAndShapeCheck) {
    Matrix m(3, 2);
    m << Complex(1, 2), 3, 4, Complex(0, -1), 5, 6;
    const auto path = temp_path("matrix.tns");
    io::write_matrix(path, m);
    const Tensor3 as_tensor = io::read_tensor(path);
    EXPECT_EQ(as_tensor.dims(), (Dims{3, 2, 1}));
    EXPECT_EQ((io::read_matrix(path) - m).norm(), 0.0);
    io::write_tensor(path, Tensor3(3, 2, 2));
    EXPECT_THROW(io::read_matrix(path), FormatError);
    std::filesystem::remove(path);
    EXPECT_THROW(io::read_tensor(temp_path("does_not_exist.tns")), std::runtime_error);
}
